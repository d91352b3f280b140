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
from collections import namedtuple

import numpy as np

from cog_hierarchy.gridworld.world_map import left_of, right_of
from cog_hierarchy.shared.errors import CogHierarchyError

SEED_BOUND = 2 ** 63 - 1


class InvalidMotion(CogHierarchyError):
    """Raised for a probability outside [0, 1]"""


class MotionModel(namedtuple('MotionModel', 'p_intended')):
    """Slippery motion: the commanded direction with p_intended, otherwise an
    equal share to each side of the command. Never the reverse direction."""
    __slots__ = ()

    def __new__(cls, p_intended=0.8):
        if not 0.0 <= p_intended <= 1.0:
            raise InvalidMotion('p_intended must be within [0, 1], got {}'.format(p_intended))
        return super(MotionModel, cls).__new__(cls, float(p_intended))

    @property
    def p_lateral(self):
        return (1.0 - self.p_intended) / 2.0

    def outcomes(self, vector):
        """[(direction vector, probability)] for a command, zero entries dropped"""
        result = [(vector, self.p_intended),
                  (left_of(vector), self.p_lateral),
                  (right_of(vector), self.p_lateral)]
        return [(direction, prob) for direction, prob in result if prob > 0.0]

    def pick(self, vector, draw):
        """Actual direction for a uniform draw in [0, 1)"""
        if draw < self.p_intended:
            return vector
        if draw < self.p_intended + self.p_lateral:
            return left_of(vector)
        return right_of(vector)


def draw_uniform(seed):
    """Pure uniform draw: returns (value in [0, 1), next seed)"""
    rng = np.random.default_rng(seed)
    return float(rng.random()), int(rng.integers(0, SEED_BOUND))


def draw_choice(seed, count):
    """Pure uniform integer draw in [0, count): returns (value, next seed)"""
    rng = np.random.default_rng(seed)
    return int(rng.integers(0, count)), int(rng.integers(0, SEED_BOUND))
