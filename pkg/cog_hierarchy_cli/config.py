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
import json
import os

from collections import OrderedDict

from cog_hierarchy.shared.errors import CogHierarchyError

CONFIG_TYPES = OrderedDict([
    ('scenario', str),
    ('seed', int),
    ('runs', int),
    ('episodes', int),
    ('max_episodes', int),
    ('trials', int),
    ('sweep_p', list),
    ('convergence_window', int),
])


class ConfigError(CogHierarchyError):
    """Exception class for config file errors"""


def load_config(conf_dir='conf/'):
    """Load the experiment settings.

    `experiments.json` in the `conf` directory holds the defaults the CLI
    commands fall back on when a flag is not given: the scenario file, the
    base seed, run and episode counts, heatmap trials, the slip values of a
    sweep and the convergence window.
    """
    path = os.path.join(conf_dir, 'experiments.json')
    with open(path) as data:
        try:
            config = json.load(data, object_pairs_hook=OrderedDict)
        except ValueError:
            raise ConfigError('Invalid JSON format for experiments.json')

    # Validate the config. This will raise an exception on any errors
    _validate_config(config)

    return config


def _validate_config(config):
    """Validate the experiment settings contain every key with a usable value.

    Checks:
        - every known key is present with the declared type
        - counts are positive and the seed is not negative
        - sweep_p lists probabilities within [0, 1]
    """
    if not isinstance(config, dict):
        raise ConfigError('experiments.json must hold a JSON object')

    for key, expected in CONFIG_TYPES.items():
        if key not in config:
            raise ConfigError('The \'{}\' setting is missing'.format(key))
        value = config[key]
        if not isinstance(value, expected) or isinstance(value, bool):
            raise ConfigError('The \'{}\' setting must be of type {}'.format(
                key, expected.__name__))

    unknown = set(config) - set(CONFIG_TYPES)
    if unknown:
        raise ConfigError('Unknown settings in experiments.json: {}'.format(
            ', '.join(sorted(unknown))))

    for key in ('runs', 'episodes', 'max_episodes', 'trials', 'convergence_window'):
        if config[key] < 1:
            raise ConfigError('The \'{}\' setting must be at least 1'.format(key))

    if config['seed'] < 0:
        raise ConfigError('The \'seed\' setting must not be negative')

    for value in config['sweep_p']:
        if isinstance(value, bool) or not isinstance(value, (int, float)) \
                or not 0.0 <= value <= 1.0:
            raise ConfigError('sweep_p values must be probabilities, got {!r}'.format(value))
