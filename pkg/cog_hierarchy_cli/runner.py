'''
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
'''
import csv
import os
import sys

from cog_hierarchy.core.hierarchy import InvalidHierarchy
from cog_hierarchy.gridworld.motion import InvalidMotion, MotionModel
from cog_hierarchy.gridworld.oracle import best_route, route_expected_steps
from cog_hierarchy.learner.model import write_tally
from cog_hierarchy.learner.qstate import write_q_table
from cog_hierarchy.planner.search import NoPlan, enumerate_plans, plan_room_sequence, \
    render_plan, sequence_cost
from cog_hierarchy.scenario.experiments import AGENTS, episodes_to_optimum, heatmap, \
    learned_plan, make_runner, train, train_until_converged
from cog_hierarchy.scenario.parsers import ParseError, load_scenario
from cog_hierarchy.scenario.scenario import LEARNER, PLANNER, scenario_hierarchy
from cog_hierarchy.shared import LOGGER
from cog_hierarchy_cli.config import ConfigError, load_config
from cog_hierarchy_cli.logger import LOGGER_CLI

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_ERROR = 2

LEARN_HEADER = ['agent', 'run', 'episode', 'steps', 'world_steps', 'eval_steps']
HEATMAP_HEADER = ['room', 'x', 'y', 'count']
SWEEP_HEADER = ['p_intended', 'route', 'expected_steps']
Q_TABLE_FILE = 'q_table.csv'
TALLY_FILE = 'tally.csv'


def cli_runner(options):
    """Main cognitive hierarchy CLI handler

    Args:
        options (argparse.Namespace): command line arguments passed from the
            argparser. Every command carries (command, scenario, seed, out,
            debug); learn adds (agent, runs, episodes), plan adds (horizon,
            check, dump_dir), heatmap adds trials and sweep adds p.

    Returns:
        [int] Exit status: 0 ok, 1 validation or plan failure, 2 IO, parse or
            config error
    """
    if options.debug:
        LOGGER_CLI.setLevel('DEBUG')
        LOGGER.setLevel('DEBUG')

    handlers = {
        'validate': validate_handler,
        'learn': learn_handler,
        'plan': plan_handler,
        'heatmap': heatmap_handler,
        'sweep': sweep_handler,
    }

    try:
        config = load_config(options.conf_dir)
        return handlers[options.command](options, config)

    except ConfigError as err:
        LOGGER_CLI.error('[Config Error]: %s', err)
        return EXIT_ERROR

    except ParseError as err:
        LOGGER_CLI.error('[Parse Error]: %s %s', err.location(), err.message)
        return EXIT_ERROR

    except (IOError, OSError) as err:
        LOGGER_CLI.error('[IO Error]: %s', err)
        return EXIT_ERROR

    except InvalidMotion as err:
        LOGGER_CLI.error('[Motion Error]: %s', err)
        return EXIT_ERROR

    except InvalidHierarchy as err:
        for line in err.report.lines():
            LOGGER_CLI.error('[Validation Error]: %s', line)
        return EXIT_FAILURE

    except NoPlan as err:
        LOGGER_CLI.error('[Plan Error]: %s', err)
        return EXIT_FAILURE


def _setting(options, config, name):
    value = getattr(options, name, None)
    return config[name] if value is None else value


def _scenario(options, config):
    path = _setting(options, config, 'scenario')
    LOGGER_CLI.debug('Loading scenario %s', path)
    scenario = load_scenario(path)
    horizon = getattr(options, 'horizon', None)
    if horizon is not None:
        scenario = scenario.with_params(horizon=horizon)
    return scenario


def _writer(out):
    return csv.writer(out, lineterminator='\n')


def write_rows(path, header, rows):
    """Header first, LF terminated; stdout when no path is given"""
    if path is None:
        writer = _writer(sys.stdout)
        writer.writerow(header)
        writer.writerows(rows)
        return
    with open(path, 'w', newline='') as out:
        writer = _writer(out)
        writer.writerow(header)
        writer.writerows(rows)
    LOGGER_CLI.info('Wrote %s', path)


def _trained(scenario, options, config, seed):
    """Runner trained for --episodes, or until converged when none are given"""
    runner = make_runner(scenario, seed=seed)
    if options.episodes is not None:
        train(runner, options.episodes)
    else:
        train_until_converged(runner, config['max_episodes'], config['convergence_window'])
    return runner


def dump_learner(runner, directory):
    """Write the trained learner's Q-tables and transition tallies as CSV"""
    node = runner.ah.node(LEARNER)
    os.makedirs(directory, exist_ok=True)
    write_q_table(os.path.join(directory, Q_TABLE_FILE), node.planning_state)
    write_tally(os.path.join(directory, TALLY_FILE), node.transition_model)
    LOGGER_CLI.info('Wrote %s and %s to %s', Q_TABLE_FILE, TALLY_FILE, directory)


def validate_handler(options, config):
    """Check a scenario parses and its hierarchy wiring is valid"""
    scenario = _scenario(options, config)
    hierarchy = scenario_hierarchy(scenario, _setting(options, config, 'seed'))
    report = hierarchy.report
    if not report.is_valid:
        for line in report.lines():
            LOGGER_CLI.error('[Validation Error]: %s', line)
        return EXIT_FAILURE

    LOGGER_CLI.info('Scenario is valid: %d nodes, %d edges, %d rooms',
                    len(hierarchy.nodes), len(hierarchy.edges),
                    len(scenario.world_map.rooms))
    return EXIT_OK


def learn_handler(options, config):
    """Learning curves of the hierarchical and/or flat agent, one row per episode"""
    scenario = _scenario(options, config)
    seed = _setting(options, config, 'seed')
    runs = _setting(options, config, 'runs')
    episodes = _setting(options, config, 'episodes')
    agents = AGENTS if options.agent == 'both' else (options.agent,)
    _, optimum = best_route(scenario.world_map, scenario.motion, scenario.start)

    rows = []
    for agent in agents:
        curves = []
        for run in range(runs):
            LOGGER_CLI.info('Training %s agent, run %d of %d', agent, run + 1, runs)
            runner = make_runner(scenario, agent, seed + run)
            records = train(runner, episodes)
            curves.append([record.eval_steps for record in records])
            for record in records:
                rows.append([agent, run, record.episode, record.steps, record.world_steps,
                             record.eval_steps])
        reached = episodes_to_optimum(curves, optimum)
        if reached is None:
            LOGGER_CLI.info('%s agent: mean evaluation steps never came within 10%% of the '
                            'optimum %.4f', agent, optimum)
        else:
            LOGGER_CLI.info('%s agent: mean evaluation steps within 10%% of the optimum '
                            '%.4f from episode %d', agent, optimum, reached)

    rows.sort(key=lambda row: (row[0], row[1], row[2]))
    write_rows(options.out, LEARN_HEADER, rows)
    return EXIT_OK


def plan_handler(options, config):
    """Train, then print the planner's plan from the start"""
    scenario = _scenario(options, config)
    runner = _trained(scenario, options, config, _setting(options, config, 'seed'))
    plan, belief, costs = learned_plan(runner)
    if plan is None:
        LOGGER_CLI.error('[Plan Error]: the planner produced no plan from %s', belief)
        return EXIT_FAILURE

    if options.dump_dir:
        dump_learner(runner, options.dump_dir)

    rooms = plan_room_sequence(plan, belief, runner.ah.hierarchy.nodes[PLANNER].graph)
    text = render_plan(plan) + 'rooms:{}\n'.format('-'.join(rooms))
    if options.out:
        with open(options.out, 'w', newline='') as out:
            out.write(text)
    else:
        sys.stdout.write(text)

    if options.check:
        planner = runner.ah.hierarchy.nodes[PLANNER]
        best = min(sequence_cost(belief, actions, planner.graph, costs)
                   for actions in enumerate_plans(belief, planner.graph, planner.horizon))
        if best != plan.total_cost:
            LOGGER_CLI.error('[Plan Error]: plan cost %s differs from the enumerated '
                             'optimum %s', plan.total_cost, best)
            return EXIT_FAILURE
        LOGGER_CLI.info('Plan cost matches the enumerated optimum (%s)', best)
    return EXIT_OK


def heatmap_handler(options, config):
    """Visit counts per location over greedy evaluation trials"""
    scenario = _scenario(options, config)
    runner = _trained(scenario, options, config, _setting(options, config, 'seed'))
    trials = _setting(options, config, 'trials')
    counts, lengths = heatmap(runner, trials)
    LOGGER_CLI.info('%d trials, %d steps in total', trials, sum(lengths))

    rows = [[room, x, y, counts.get((room, x, y), 0)]
            for room, x, y in scenario.world_map.locations()]
    write_rows(options.out, HEATMAP_HEADER, rows)
    return EXIT_OK


def sweep_handler(options, config):
    """Learned route and its exact expected steps for each slip setting"""
    scenario = _scenario(options, config)
    seed = _setting(options, config, 'seed')
    values = options.p if options.p is not None else config['sweep_p']

    rows = []
    for p_intended in values:
        variant = scenario.with_params(p_intended=float(p_intended))
        runner = _trained(variant, options, config, seed)
        plan, belief, _ = learned_plan(runner)
        if plan is None:
            LOGGER_CLI.error('[Plan Error]: no plan at p_intended=%s', p_intended)
            return EXIT_FAILURE
        graph = runner.ah.hierarchy.nodes[PLANNER].graph
        rooms = plan_room_sequence(plan, belief, graph)
        expected = route_expected_steps(variant.world_map, MotionModel(float(p_intended)),
                                        rooms, variant.start)
        LOGGER_CLI.info('p_intended=%s: route %s, %.4f expected steps', p_intended,
                        '-'.join(rooms), expected)
        rows.append([p_intended, '-'.join(rooms), '{:.4f}'.format(expected)])

    write_rows(options.out, SWEEP_HEADER, rows)
    return EXIT_OK
