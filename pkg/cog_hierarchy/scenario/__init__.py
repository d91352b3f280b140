from cog_hierarchy.scenario.experiments import AGENTS, FLAT, HIERARCHICAL, EpisodeRecord, \
    FlatRunner, HierarchicalRunner, converged, episodes_to_optimum, heatmap, learned_plan, \
    make_runner, train, train_until_converged
from cog_hierarchy.scenario.flat import FlatAgent, run_flat_episode
from cog_hierarchy.scenario.glue import sense_0_1, sense_1_2, task_1_0, task_2_1, util_1_2
from cog_hierarchy.scenario.parsers import ParseError, load_scenario, parse_scenario, \
    render_scenario
from cog_hierarchy.scenario.scenario import LEARNER, PLANNER, WORLD, Scenario, ScenarioParams, \
    build_hierarchy, canonical_scenario, reset_episode, run_episode, scenario_hierarchy, \
    set_mode
