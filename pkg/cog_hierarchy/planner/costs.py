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
from cog_hierarchy.gridworld.world_map import UNKNOWN
from cog_hierarchy.planner.symbolic import target_of

INFINITY = float('inf')


class CostTables(object):
    """ctf: feature -> cost from the robot's cell; cbf: (feature, feature) -> cost

    Missing entries cost +inf. Hashable so a set of utilities can carry it.
    """

    def __init__(self, ctf=None, cbf=None):
        self.ctf = dict(ctf or {})
        self.cbf = dict(cbf or {})
        self._key = (tuple(sorted(self.ctf.items())), tuple(sorted(self.cbf.items())))

    def __eq__(self, other):
        return isinstance(other, CostTables) and self._key == other._key

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return 'CostTables(ctf={}, cbf={})'.format(self.ctf, self.cbf)

    def to_feature(self, feature):
        return self.ctf.get(feature, INFINITY)

    def between(self, first, second):
        if first == second:
            return self.cbf.get((first, second), 0)
        return self.cbf.get((first, second), INFINITY)


def action_cost(belief, action, costs):
    """Cost of an action: ctf of its target from an unknown spot, cbf from a feature"""
    target = target_of(action)
    if belief.feature == UNKNOWN:
        return costs.to_feature(target)
    return costs.between(belief.feature, target)
