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

---------------------------------------------------------------------------

This script runs the navigation experiments of the cognitive hierarchy:
learning curves of the hierarchical and flat agents, the planner's route
after training, visitation counts and slip sweeps.

Defaults for every flag live in conf/experiments.json.
'''
import sys

from argparse import ArgumentParser, RawTextHelpFormatter
from argparse import SUPPRESS as argparse_suppress

from cog_hierarchy_cli.helpers import probability
from cog_hierarchy_cli.runner import cli_runner
from cog_hierarchy_cli.logger import LOGGER_CLI
from cog_hierarchy_cli import __version__ as version


def _add_common_arguments(parser):
    """Flags shared by every command"""
    parser.add_argument(
        '--scenario',
        help=argparse_suppress
    )
    parser.add_argument(
        '--seed',
        type=int,
        help=argparse_suppress
    )
    parser.add_argument(
        '--episodes',
        type=int,
        help=argparse_suppress
    )
    parser.add_argument(
        '--runs',
        type=int,
        help=argparse_suppress
    )
    parser.add_argument(
        '--out',
        help=argparse_suppress
    )
    parser.add_argument(
        '--conf-dir',
        dest='conf_dir',
        default='conf/',
        help=argparse_suppress
    )
    parser.add_argument(
        '--debug',
        action='store_true',
        help=argparse_suppress
    )


COMMON_OPTIONS = """
Common Options:

    --scenario <path>       Scenario file (.chs), defaults to the experiments config
    --seed <int>            Base seed; run k of a command uses seed + k
    --episodes <n>          Training episodes (plan/heatmap/sweep train until
                            converged when omitted)
    --runs <n>              Independent seeded runs
    --out <path>            Output file, stdout when omitted
    --conf-dir <path>       Directory holding experiments.json
    --debug                 Enable Debug logger output
"""


def build_parser():
    description = ("""
CogHierarchyCLI v{}
Run the cognitive hierarchy navigation experiments

Available Commands:

    cog_hierarchy_cli.py validate       Check a scenario file and its hierarchy wiring
    cog_hierarchy_cli.py learn          Learning curves of the hierarchical and flat agents
    cog_hierarchy_cli.py plan           Train, then print the planner's route from the start
    cog_hierarchy_cli.py heatmap        Visit counts over greedy evaluation trials
    cog_hierarchy_cli.py sweep          Learned route and exact expected steps per slip value

For additional details on the available commands, try:

    cog_hierarchy_cli.py [command] --help

""".format(version))
    usage = '%(prog)s [command] [options]'

    parser = ArgumentParser(
        description=description,
        prog='cog_hierarchy_cli.py',
        usage=usage,
        formatter_class=RawTextHelpFormatter
    )
    subparsers = parser.add_subparsers()

    #
    # Validate Parser
    #
    validate_description = ("""
CogHierarchyCLI v{}
Parse a scenario file and validate the hierarchy built from it
{}
Examples:

    cog_hierarchy_cli.py validate --scenario conf/scenarios/canonical.chs

""".format(version, COMMON_OPTIONS))
    validate_parser = subparsers.add_parser(
        'validate',
        description=validate_description,
        usage='cog_hierarchy_cli.py validate [options]',
        formatter_class=RawTextHelpFormatter,
        help='Check a scenario file and its hierarchy wiring'
    )
    validate_parser.set_defaults(command='validate')
    _add_common_arguments(validate_parser)

    #
    # Learn Parser
    #
    learn_description = ("""
CogHierarchyCLI v{}
Train agents and write one CSV row per episode:
agent,run,episode,steps,world_steps,eval_steps

Available Options:

    --agent                 hierarchical, flat or both (default)
{}
Examples:

    cog_hierarchy_cli.py learn --runs 10 --episodes 200 --out learn.csv
    cog_hierarchy_cli.py learn --agent flat --seed 7

""".format(version, COMMON_OPTIONS))
    learn_parser = subparsers.add_parser(
        'learn',
        description=learn_description,
        usage='cog_hierarchy_cli.py learn [options]',
        formatter_class=RawTextHelpFormatter,
        help='Learning curves of the hierarchical and flat agents'
    )
    learn_parser.set_defaults(command='learn')
    learn_parser.add_argument(
        '--agent',
        choices=['hierarchical', 'flat', 'both'],
        default='both',
        help=argparse_suppress
    )
    _add_common_arguments(learn_parser)

    #
    # Plan Parser
    #
    plan_description = ("""
CogHierarchyCLI v{}
Train the hierarchical agent, then print the planner's plan from the start
as `t:<action>:<cost>` lines, a `cost:<int>` total and the room sequence

Available Options:

    --horizon <n>           Planning horizon, overrides the scenario
    --check                 Compare the plan cost with brute-force enumeration
    --dump-dir <path>       Write the learner's q_table.csv and tally.csv there
{}
Examples:

    cog_hierarchy_cli.py plan --scenario conf/scenarios/slippery.chs
    cog_hierarchy_cli.py plan --episodes 300 --check
    cog_hierarchy_cli.py plan --episodes 50 --dump-dir learner/

""".format(version, COMMON_OPTIONS))
    plan_parser = subparsers.add_parser(
        'plan',
        description=plan_description,
        usage='cog_hierarchy_cli.py plan [options]',
        formatter_class=RawTextHelpFormatter,
        help='Train, then print the planner\'s route from the start'
    )
    plan_parser.set_defaults(command='plan')
    plan_parser.add_argument(
        '--horizon',
        type=int,
        help=argparse_suppress
    )
    plan_parser.add_argument(
        '--check',
        action='store_true',
        help=argparse_suppress
    )
    plan_parser.add_argument(
        '--dump-dir',
        dest='dump_dir',
        help=argparse_suppress
    )
    _add_common_arguments(plan_parser)

    #
    # Heatmap Parser
    #
    heatmap_description = ("""
CogHierarchyCLI v{}
Count visits per location over greedy evaluation trials of a trained agent
and write room,x,y,count rows

Available Options:

    --trials <n>            Evaluation trials
{}
Examples:

    cog_hierarchy_cli.py heatmap --trials 1000 --out heatmap.csv

""".format(version, COMMON_OPTIONS))
    heatmap_parser = subparsers.add_parser(
        'heatmap',
        description=heatmap_description,
        usage='cog_hierarchy_cli.py heatmap [options]',
        formatter_class=RawTextHelpFormatter,
        help='Visit counts over greedy evaluation trials'
    )
    heatmap_parser.set_defaults(command='heatmap')
    heatmap_parser.add_argument(
        '--trials',
        type=int,
        help=argparse_suppress
    )
    _add_common_arguments(heatmap_parser)

    #
    # Sweep Parser
    #
    sweep_description = ("""
CogHierarchyCLI v{}
Train at each slip setting and write p_intended,route,expected_steps rows,
the expected steps coming from the exact oracle confined to the route

Available Options:

    --p <p> [<p> ...]       p_intended values, duplicates give duplicate rows
{}
Examples:

    cog_hierarchy_cli.py sweep --p 1.0 0.8 0.6 0.4

""".format(version, COMMON_OPTIONS))
    sweep_parser = subparsers.add_parser(
        'sweep',
        description=sweep_description,
        usage='cog_hierarchy_cli.py sweep [options]',
        formatter_class=RawTextHelpFormatter,
        help='Learned route and exact expected steps per slip value'
    )
    sweep_parser.set_defaults(command='sweep')
    sweep_parser.add_argument(
        '--p',
        type=probability,
        nargs='+',
        help=argparse_suppress
    )
    _add_common_arguments(sweep_parser)

    return parser


def main():
    parser = build_parser()
    options = parser.parse_args()
    if not getattr(options, 'command', None):
        parser.print_help()
        return 2
    status = cli_runner(options)
    LOGGER_CLI.info('Completed' if status == 0 else 'Failed')
    return status


if __name__ == "__main__":
    sys.exit(main())
