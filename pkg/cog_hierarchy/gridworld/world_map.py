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
from collections import OrderedDict

from cog_hierarchy.shared.errors import CogHierarchyError

# Commands are unit vectors in screen coordinates: x grows east, y grows south
DIRECTIONS = OrderedDict([
    ('N', (0, -1)),
    ('S', (0, 1)),
    ('E', (1, 0)),
    ('W', (-1, 0)),
])
DIRECTION_NAMES = {vector: name for name, vector in DIRECTIONS.items()}

GOAL = 'goal'
UNKNOWN = 'unkn'

CANONICAL_TOPOLOGY = frozenset([
    frozenset(['r4', 'r1']),
    frozenset(['r1', 'r2']),
    frozenset(['r2', 'r3']),
    frozenset(['r4', 'r5']),
    frozenset(['r5', 'r3']),
])


class MapError(CogHierarchyError):
    """Raised when a WorldMap is built from inconsistent geometry"""


def left_of(vector):
    """Direction to the left of a heading"""
    dx, dy = vector
    return (dy, -dx)


def right_of(vector):
    dx, dy = vector
    return (-dy, dx)


class WorldMap(object):
    """Room geometry of the navigation world

    Every room shares one projected grid of width x height cells with the
    same wall cells. Door cells sit on the edge of the free region at a
    position shared by every room owning that door; crossing a door moves the
    robot to the paired door cell of the adjacent room.

    Args:
        rooms (tuple): Room ids in layout order
        walls (iterable): Projected (x, y) wall cells
        door_cells (dict): door id -> projected (x, y) cell
        room_doors (dict): room id -> iterable of door ids present in the room
        pairs (iterable): ((room, door), (room, door)) links
        goal (tuple): (room, (x, y))
        width (int): Grid width
        height (int): Grid height
    """

    def __init__(self, rooms, walls, door_cells, room_doors, pairs, goal,
                 width=10, height=11):
        self.rooms = tuple(rooms)
        self.walls = frozenset(walls)
        self.door_cells = dict(door_cells)
        self.room_doors = {room: frozenset(room_doors.get(room, ())) for room in self.rooms}
        self.pairs = tuple(sorted(tuple(sorted(pair)) for pair in pairs))
        self.goal = (goal[0], tuple(goal[1]))
        self.width = width
        self.height = height

        self._links = {}
        for first, second in self.pairs:
            self._links[first] = second
            self._links[second] = first

        self.cells = tuple((x, y) for y in range(height) for x in range(width)
                           if (x, y) not in self.walls)
        self.cell_index = {cell: index for index, cell in enumerate(self.cells)}
        self.outward = {}
        for door, cell in self.door_cells.items():
            sides = [name for name, vector in DIRECTIONS.items()
                     if not self.is_open((cell[0] + vector[0], cell[1] + vector[1]))]
            if len(sides) != 1:
                raise MapError('door {} at {} must have exactly one outward side, '
                               'found {}'.format(door, cell, sides))
            self.outward[door] = sides[0]

    def _key(self):
        return (self.rooms, self.walls, tuple(sorted(self.door_cells.items())),
                tuple(sorted((room, tuple(sorted(doors)))
                             for room, doors in self.room_doors.items())),
                self.pairs, self.goal, self.width, self.height)

    def __eq__(self, other):
        return isinstance(other, WorldMap) and self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return 'WorldMap(rooms={}, pairs={}, goal={})'.format(self.rooms, self.pairs, self.goal)

    def in_bounds(self, cell):
        return 0 <= cell[0] < self.width and 0 <= cell[1] < self.height

    def is_open(self, cell):
        return self.in_bounds(cell) and cell not in self.walls

    def is_free(self, location):
        """True for a location (room, x, y) the robot may occupy"""
        room, x, y = location
        return room in self.room_doors and self.is_open((x, y))

    def door_at(self, room, cell):
        """Door id of the room's door on a cell, or None"""
        for door in self.room_doors[room]:
            if self.door_cells[door] == cell:
                return door
        return None

    def door_for_cell(self, cell):
        """Door id whose projected position is cell, or None"""
        for door, door_cell in self.door_cells.items():
            if door_cell == tuple(cell):
                return door
        return None

    def feature_at(self, room, cell):
        """Feature under a cell: a door id, 'goal', or 'unkn'"""
        if self.goal == (room, tuple(cell)):
            return GOAL
        door = self.door_at(room, tuple(cell))
        return door if door is not None else UNKNOWN

    def features_in(self, room):
        """Features of a room in sorted order, goal last"""
        features = sorted(self.room_doors[room])
        if self.goal[0] == room:
            features.append(GOAL)
        return tuple(features)

    def feature_cell(self, feature):
        if feature == GOAL:
            return self.goal[1]
        return self.door_cells[feature]

    def link(self, room, door):
        """The (room, door) endpoint paired with a door, or None"""
        return self._links.get((room, door))

    def paired_cell(self, door):
        """Projected cell a crossing through door emerges on, or None if unpaired"""
        for room in self.rooms:
            if door in self.room_doors[room]:
                endpoint = self._links.get((room, door))
                if endpoint:
                    return self.door_cells[endpoint[1]]
        return None

    def topology(self):
        """Room adjacency as a set of two-element frozensets"""
        return frozenset(frozenset([first[0], second[0]]) for first, second in self.pairs)

    def move(self, location, vector):
        """Deterministic outcome of moving one cell in a direction

        Returns:
            [tuple] (location, crossed): crossed is True when the move went
                through a door into the paired room
        """
        room, x, y = location
        door = self.door_at(room, (x, y))
        if door is not None and DIRECTIONS[self.outward[door]] == vector:
            endpoint = self._links.get((room, door))
            if endpoint is not None:
                cell = self.door_cells[endpoint[1]]
                return (endpoint[0], cell[0], cell[1]), True
        target = (x + vector[0], y + vector[1])
        if not self.is_open(target):
            return location, False
        return (room, target[0], target[1]), False

    def locations(self, rooms=None):
        """Every free (room, x, y) location, rooms in layout order"""
        rooms = self.rooms if rooms is None else rooms
        return [(room, x, y) for room in rooms for x, y in self.cells]


CANONICAL_DOORS = {
    'd1': (2, 0),
    'd2': (8, 2),
    'd3': (0, 6),
    'd4': (8, 6),
    'd5': (0, 4),
    'd6': (4, 9),
}
CANONICAL_ROOM_DOORS = {
    'r1': ('d4', 'd6'),
    'r2': ('d3', 'd6'),
    'r3': ('d1', 'd5'),
    'r4': ('d1', 'd4'),
    'r5': ('d2', 'd3'),
}
CANONICAL_PAIRS = (
    (('r1', 'd4'), ('r2', 'd3')),
    (('r1', 'd6'), ('r4', 'd1')),
    (('r5', 'd2'), ('r3', 'd5')),
    (('r2', 'd6'), ('r3', 'd1')),
    (('r4', 'd4'), ('r5', 'd3')),
)
CANONICAL_GOAL = ('r3', (2, 3))
CANONICAL_START = ('r4', 2, 3)


def canonical_walls(width=10, height=11):
    """Right-hand column and bottom row of every room are walls"""
    return frozenset([(width - 1, y) for y in range(height)] +
                     [(x, height - 1) for x in range(width - 1)])


def canonical_map():
    """The five-room navigation map: 90 free cells per room

    r4-r1-r2-r3 is the shorter route but crosses one more doorway than
    r4-r5-r3, so heavy slip makes the longer route cheaper.
    """
    return WorldMap(rooms=('r1', 'r2', 'r3', 'r4', 'r5'),
                    walls=canonical_walls(),
                    door_cells=CANONICAL_DOORS,
                    room_doors=CANONICAL_ROOM_DOORS,
                    pairs=CANONICAL_PAIRS,
                    goal=CANONICAL_GOAL)
