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
from itertools import product

from cog_hierarchy.gridworld import canonical_map
from cog_hierarchy.planner import CostTables, RoomGraph, SymbolicBelief


def canonical_graph():
    return RoomGraph.from_map(canonical_map())


def uniform_costs(graph, value=1):
    """Every ctf and cbf entry set to value"""
    features = graph.features()
    return CostTables(ctf={feature: value for feature in features},
                      cbf={(first, second): value
                           for first, second in product(features, features) if first != second})


def room_beliefs(graph):
    """Every belief whose feature belongs to its room, unkn included"""
    beliefs = []
    for room in graph.rooms():
        features = [door for door, _, _ in graph.exits(room)] + ['unkn']
        if room == graph.goal_in:
            features.append('goal')
        beliefs.extend(SymbolicBelief(room, feature) for feature in features)
    return beliefs
