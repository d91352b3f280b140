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
from argparse import ArgumentTypeError


def probability(value):
    """argparse type for a p_intended value within [0, 1]

    Raises:
        ArgumentTypeError: value is not a number or lies outside [0, 1]
    """
    try:
        number = float(value)
    except ValueError:
        raise ArgumentTypeError('{!r} is not a number'.format(value))
    if not 0.0 <= number <= 1.0:
        raise ArgumentTypeError('{} is not within [0, 1]'.format(value))
    return number
