"""
Copyright 2026-present, Cognitive Hierarchy Contributors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""
from collections import OrderedDict, namedtuple
from functools import partial

from cog_hierarchy.core.active import initial_active_hierarchy
from cog_hierarchy.core.hierarchy import FunctionTuple, Hierarchy, InvalidHierarchy
from cog_hierarchy.core.process import process_update
from cog_hierarchy.gridworld.motion import MotionModel, draw_uniform
from cog_hierarchy.gridworld.world import InvalidStart, WorldState, world_as_node
from cog_hierarchy.gridworld.world_map import CANONICAL_START, canonical_map
from cog_hierarchy.learner.model import GridBelief
from cog_hierarchy.learner.node import LearnerNode
from cog_hierarchy.learner.qstate import LEARNING, LearnerParams
from cog_hierarchy.planner.node import PlannerPolicy, PlannerState, planner_as_node
from cog_hierarchy.planner.symbolic import RoomGraph, SymbolicBelief
from cog_hierarchy.scenario.glue import sense_0_1, sense_1_2, task_1_0, task_2_1, util_1_2
from cog_hierarchy.shared import LOGGER
from cog_hierarchy.shared.stats import time_me

WORLD = 0
LEARNER = 1
PLANNER = 2

PARAM_DEFAULTS = OrderedDict([
    ('p_intended', 0.8),
    ('epsilon', 0.1),
    ('gamma', 1.0),
    ('horizon', 10),
    ('tolerance', 1e-6),
    ('sweep_cap', 1000),
    ('td_mode', 'value_iteration'),
    ('alpha', 0.5),
    ('seed', 0),
    ('max_steps', 500),
])

ScenarioParams = namedtuple('ScenarioParams', list(PARAM_DEFAULTS))
ScenarioParams.__new__.__defaults__ = tuple(PARAM_DEFAULTS.values())


class Scenario(namedtuple('Scenario', 'world_map start params')):
    """A navigation scenario: map, robot start (room, x, y) and parameters"""
    __slots__ = ()

    def __new__(cls, world_map, start, params=None):
        return super(Scenario, cls).__new__(cls, world_map, tuple(start),
                                            params or ScenarioParams())

    def with_params(self, **overrides):
        return self._replace(params=self.params._replace(**overrides))

    @property
    def motion(self):
        return MotionModel(self.params.p_intended)

    def learner_params(self):
        params = self.params
        return LearnerParams(gamma=params.gamma,
                             epsilon=params.epsilon,
                             tolerance=params.tolerance,
                             sweep_cap=params.sweep_cap,
                             td_mode=params.td_mode,
                             alpha=params.alpha)

    def start_belief(self):
        room, x, y = self.start
        return SymbolicBelief(room, self.world_map.feature_at(room, (x, y)))


def canonical_scenario(**overrides):
    return Scenario(canonical_map(), CANONICAL_START, ScenarioParams(**overrides))


def learner_seed(seed):
    """Exploration seed of the learner, derived from the scenario seed"""
    return draw_uniform(seed)[1]


def hierarchy_edges(world_map):
    return [
        FunctionTuple(WORLD, LEARNER, sensing=sense_0_1, task_param=task_1_0),
        FunctionTuple(LEARNER, PLANNER,
                      sensing=partial(sense_1_2, world_map),
                      utility=partial(util_1_2, world_map),
                      task_param=task_2_1),
    ]


def check_start(world_map, start):
    """Raise InvalidStart unless start is a free cell off every doorway

    A scenario file marks the start with R in place of the cell's own
    character, so a doorway start has no text form.
    """
    try:
        free = world_map.is_free(start)
    except (TypeError, ValueError):
        free = False
    if not free:
        raise InvalidStart(start)
    door = world_map.door_at(start[0], tuple(start[1:]))
    if door is not None:
        raise InvalidStart(start, 'is on door {}'.format(door))


def scenario_hierarchy(scenario, seed=None):
    """The three-level Hierarchy of a scenario, not yet validated

    Raises:
        InvalidStart: the start is not a free cell, or is a door cell
    """
    seed = scenario.params.seed if seed is None else seed
    world_map = scenario.world_map
    check_start(world_map, scenario.start)
    nodes = {
        WORLD: world_as_node(world_map, scenario.motion, scenario.start, seed),
        LEARNER: LearnerNode(world_map, scenario.start, scenario.learner_params(),
                             learner_seed(seed)),
        PLANNER: planner_as_node(RoomGraph.from_map(world_map), scenario.params.horizon,
                                 scenario.start_belief()),
    }
    return Hierarchy(nodes, WORLD, hierarchy_edges(world_map))


def build_hierarchy(scenario, seed=None):
    """Initial active hierarchy of the three-level navigation agent

    Raises:
        InvalidHierarchy: the wiring fails validation
        InvalidStart: the start is not a free cell, or is a door cell
    """
    hierarchy = scenario_hierarchy(scenario, seed)
    if not hierarchy.report.is_valid:
        raise InvalidHierarchy(hierarchy.report)
    return initial_active_hierarchy(hierarchy)


def world_state(ah):
    return ah.node(WORLD).current_belief


def at_goal(ah):
    world = world_state(ah)
    goal_room, (x, y) = world.world_map.goal
    return world.robot == (goal_room, x, y)


def set_mode(ah, mode):
    """Switch the learner between learning and evaluation"""
    qstate = ah.node(LEARNER).planning_state
    return ah.replace_node(LEARNER, planning_state=qstate._replace(mode=mode))


def reset_episode(ah, start=None):
    """Put the robot back on its start and clear episode-local state

    Learned models, cost tables of the learner and random streams carry over.
    """
    hierarchy = ah.hierarchy
    learner = hierarchy.nodes[LEARNER]
    planner = hierarchy.nodes[PLANNER]
    world = world_state(ah)
    start = tuple(start or learner.start)

    state = WorldState(world.world_map, start, world.rng_seed)
    ah = ah.replace_node(WORLD, current_belief=state, predicted_belief=state,
                         corrected_belief=state, planning_state=state)

    grid = GridBelief(*start)
    qstate = ah.node(LEARNER).planning_state._replace(room=None, cell=None)
    ah = ah.replace_node(LEARNER, current_belief=grid, predicted_belief=grid,
                         corrected_belief=grid, policy=learner.initial_policy(),
                         planning_state=qstate)

    symbolic = SymbolicBelief(start[0], world.world_map.feature_at(start[0], start[1:]))
    return ah.replace_node(PLANNER, current_belief=symbolic, predicted_belief=symbolic,
                           corrected_belief=symbolic, policy=PlannerPolicy(None),
                           planning_state=PlannerState())


@time_me
def run_episode(ah, max_steps, mode=LEARNING, observer=None):
    """Cycle the hierarchy until the robot stands on the goal or max_steps world steps

    Args:
        ah (ActiveHierarchy): Hierarchy positioned at the episode start
        max_steps (int): World step cap
        mode (str): learning or evaluation
        observer (callable): Called with every WorldState after a step

    Returns:
        [tuple] (world steps taken, final ActiveHierarchy)
    """
    ah = set_mode(ah, mode)
    start_t = world_state(ah).t
    # Cycles without a world step (before the first costs arrive) are bounded
    cycle_cap = 2 * max_steps + 10
    for _ in range(cycle_cap):
        steps = world_state(ah).t - start_t
        if at_goal(ah) or steps >= max_steps:
            return steps, ah
        before = world_state(ah).t
        ah = process_update(ah)
        if observer is not None and world_state(ah).t != before:
            observer(world_state(ah))

    LOGGER.warning('Episode stopped after %d cycles without reaching the goal', cycle_cap)
    return world_state(ah).t - start_t, ah
