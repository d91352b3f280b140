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
import math

from cog_hierarchy.core.node import EMPTY
from cog_hierarchy.gridworld.world_map import DIRECTIONS
from cog_hierarchy.planner.costs import CostTables
from cog_hierarchy.planner.symbolic import SymbolicBelief, target_of


def round_cost(value):
    """Nearest integer, halves rounded up"""
    return int(math.floor(value + 0.5))


def sense_0_1(world_state):
    """The robot's exact (room, x, y)"""
    return frozenset([tuple(world_state.robot)])


def sense_1_2(world_map, belief):
    """at(room, feature) for the feature under the believed cell"""
    if belief is None:
        return EMPTY
    return frozenset([SymbolicBelief(belief.room,
                                     world_map.feature_at(belief.room, (belief.x, belief.y)))])


def cost_tables(world_map, qstate):
    """ctf from the learner's last planning cell and cbf between co-located features

    Door costs count the crossing step through the door, so on deterministic
    dynamics ctf(d) is the in-room grid distance to d plus one. Goal costs are
    the plain grid distance.
    """
    ctf = {}
    for feature in world_map.features_in(qstate.room):
        value = qstate.cost(feature, qstate.projection.cells[qstate.cell])
        if math.isfinite(value):
            ctf[feature] = round_cost(value)

    cbf = {}
    for room in world_map.rooms:
        for first in world_map.features_in(room):
            for second in world_map.features_in(room):
                if first == second:
                    cbf[(first, second)] = 0
                    continue
                value = qstate.cost(second, world_map.feature_cell(first))
                if math.isfinite(value):
                    cbf[(first, second)] = round_cost(value)
    return CostTables(ctf, cbf)


def util_1_2(world_map, qstate):
    """Cost tables for the planner; nothing before the learner has planned once"""
    if qstate is None or qstate.cell is None:
        return EMPTY
    return frozenset([cost_tables(world_map, qstate)])


def task_2_1(actions):
    """trv(d) hands down task d, mv_goal hands down goal"""
    return frozenset(target_of(action) for action in actions)


def task_1_0(actions):
    """Direction names become motor vectors"""
    return frozenset(DIRECTIONS[action] for action in actions)
