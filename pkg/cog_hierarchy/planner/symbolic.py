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

from cog_hierarchy.gridworld.world_map import GOAL, UNKNOWN
from cog_hierarchy.shared.errors import CogHierarchyError

MV_GOAL = 'mv_goal'


def trv(door):
    return 'trv({})'.format(door)


def target_of(action):
    """Feature an action heads for: the door of trv(d), or goal"""
    if action == MV_GOAL:
        return GOAL
    return action[len('trv('):-1]


class SymbolicBelief(namedtuple('SymbolicBelief', 'room feature')):
    """at(room, feature), feature being a door id, goal or unkn"""
    __slots__ = ()

    def __str__(self):
        return 'at({},{})'.format(self.room, self.feature)


class Inapplicable(CogHierarchyError):
    """Raised when an action's preconditions do not hold in a belief"""

    def __init__(self, belief, action):
        self.belief = belief
        self.action = action
        super(Inapplicable, self).__init__('{} is not applicable in {}'.format(action, belief))


class RoomGraph(object):
    """Fixed room-level transition relation: conn facts plus goal_in

    Args:
        conn (iterable): (room, door, room, door) facts, made symmetric
        goal_in (str): Room holding the goal
    """

    def __init__(self, conn, goal_in):
        facts = set()
        for room, door, other_room, other_door in conn:
            facts.add((room, door, other_room, other_door))
            facts.add((other_room, other_door, room, door))
        self.conn = frozenset(facts)
        self.goal_in = goal_in
        self._exits = {}
        for room, door, other_room, other_door in sorted(self.conn):
            self._exits.setdefault(room, []).append((door, other_room, other_door))

    def __eq__(self, other):
        return (isinstance(other, RoomGraph) and
                (self.conn, self.goal_in) == (other.conn, other.goal_in))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.conn, self.goal_in))

    def __repr__(self):
        return 'RoomGraph({} conn facts, goal_in={})'.format(len(self.conn), self.goal_in)

    @classmethod
    def from_map(cls, world_map):
        return cls([(first[0], first[1], second[0], second[1])
                    for first, second in world_map.pairs], world_map.goal[0])

    def exits(self, room):
        """[(door, room, door)] leaving a room, sorted"""
        return self._exits.get(room, [])

    def rooms(self):
        return sorted({fact[0] for fact in self.conn} | {self.goal_in})

    def features(self):
        """Every feature a belief can hold"""
        return sorted({fact[1] for fact in self.conn}) + [GOAL, UNKNOWN]


def applicable_actions(belief, graph):
    """Applicable actions in sorted order"""
    actions = [trv(door) for door, _, _ in graph.exits(belief.room)]
    if graph.goal_in == belief.room and belief.feature != GOAL:
        actions.append(MV_GOAL)
    return sorted(actions)


def symbolic_transition(belief, action, graph):
    """Successor belief of an applicable action

    Raises:
        Inapplicable: mv_goal outside the goal room or at the goal, or trv(d)
            without a conn fact for d in the current room
    """
    if action == MV_GOAL:
        if graph.goal_in != belief.room or belief.feature == GOAL:
            raise Inapplicable(belief, action)
        return SymbolicBelief(belief.room, GOAL)

    door = target_of(action)
    for exit_door, other_room, other_door in graph.exits(belief.room):
        if exit_door == door:
            return SymbolicBelief(other_room, other_door)
    raise Inapplicable(belief, action)
