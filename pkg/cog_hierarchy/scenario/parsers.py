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
from abc import ABCMeta, abstractmethod
from collections import OrderedDict, namedtuple
import re

from cog_hierarchy.gridworld.world_map import CANONICAL_TOPOLOGY, MapError, WorldMap
from cog_hierarchy.scenario.scenario import PARAM_DEFAULTS, Scenario, ScenarioParams, \
    check_start
from cog_hierarchy.shared import LOGGER
from cog_hierarchy.shared.errors import CogHierarchyError

SECTIONS = {}

ROOM_PATTERN = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')
ENDPOINT_PATTERN = re.compile(r'^([A-Za-z_][A-Za-z0-9_]*)\.(d[1-9])$')
FREE_CELLS_PER_ROOM = 90

SourceLine = namedtuple('SourceLine', 'number text')


class ParseError(CogHierarchyError):
    """A scenario file problem at a 1-based line and column"""
    kind = 'parse_error'

    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        self.message = message
        self.path = None
        super(ParseError, self).__init__('{}:{} {}'.format(line, column, message))

    def location(self):
        prefix = '{}:'.format(self.path) if self.path else ''
        return '{}{}:{}'.format(prefix, self.line, self.column)


class UnknownChar(ParseError):
    kind = 'unknown_char'


class BadPairing(ParseError):
    kind = 'bad_pairing'


class TopologyMismatch(ParseError):
    kind = 'topology_mismatch'


class MissingGoal(ParseError):
    kind = 'missing_goal'


class MissingRobot(ParseError):
    kind = 'missing_robot'


class BadParamValue(ParseError):
    kind = 'bad_param_value'


class UnknownParam(ParseError):
    kind = 'unknown_param'


class BadLayout(ParseError):
    kind = 'bad_layout'


class BadEncoding(ParseError):
    kind = 'bad_encoding'


def section(cls):
    """Class decorator to register section parsers"""
    SECTIONS[cls.__sectionid__] = cls
    return cls


def get_section(sectionid):
    """Helper method to fetch section parser classes

    Args:
        sectionid: the name between the brackets of a section header

    Returns:
        - A SectionBase class
    """
    return SECTIONS[sectionid]


class ScenarioDoc(object):
    """Everything read from a scenario file, with source positions

    cells maps (room, x, y) to the (line, column) it was read from; params
    and pairs keep the position of each value.
    """

    def __init__(self):
        self.headers = OrderedDict()
        self.rooms = ()
        self.rooms_line = None
        self.rows = []
        self.cells = OrderedDict()
        self.pairs = []
        self.params = OrderedDict()

    def position(self, room, x, y):
        return self.cells[(room, x, y)]


class SectionBase(metaclass=ABCMeta):
    """A `[name]` block of a scenario file"""
    __sectionid__ = ''

    @abstractmethod
    def parse(self, doc, lines, header):
        """Read the section's content lines into the ScenarioDoc

        Args:
            doc (ScenarioDoc): Document being built
            lines (list): SourceLine values between this header and the next
            header (SourceLine): The section header line
        """


def _split_row(line):
    """(column, segment) pairs of a grid row split on `|`"""
    segments = []
    start = 0
    for piece in line.text.split('|'):
        segments.append((start + 1, piece))
        start += len(piece) + 1
    return segments


@section
class MapSection(SectionBase):
    __sectionid__ = 'map'

    def parse(self, doc, lines, header):
        if not lines or not lines[0].text.startswith('rooms:'):
            where = lines[0] if lines else header
            raise BadLayout(where.number, 1, 'the map section must start with a rooms: line')

        self._rooms(doc, lines[0])
        for line in lines[1:]:
            if line.text.startswith('pair:'):
                self._pair(doc, line)
            else:
                self._row(doc, line)

        if not doc.rows:
            raise BadLayout(header.number, 1, 'the map section has no grid rows')

    @staticmethod
    def _rooms(doc, line):
        rooms = []
        column = len('rooms:') + 1
        for token in re.finditer(r'\S+', line.text[len('rooms:'):]):
            name = token.group()
            position = column + token.start()
            if not ROOM_PATTERN.match(name):
                raise BadLayout(line.number, position, 'invalid room name {!r}'.format(name))
            if name in rooms:
                raise BadLayout(line.number, position, 'room {} declared twice'.format(name))
            rooms.append(name)
        if not rooms:
            raise BadLayout(line.number, 1, 'no rooms declared')
        doc.rooms = tuple(rooms)
        doc.rooms_line = line

    @staticmethod
    def _pair(doc, line):
        endpoints = []
        column = len('pair:') + 1
        for token in re.finditer(r'\S+', line.text[len('pair:'):]):
            match = ENDPOINT_PATTERN.match(token.group())
            position = column + token.start()
            if not match:
                raise BadPairing(line.number, position,
                                 'expected room.door, got {!r}'.format(token.group()))
            endpoints.append(((match.group(1), match.group(2)), position))
        if len(endpoints) != 2:
            raise BadPairing(line.number, 1, 'a pair line names exactly two room.door endpoints')
        doc.pairs.append((endpoints, line))

    @staticmethod
    def _row(doc, line):
        segments = _split_row(line)
        if len(segments) != len(doc.rooms):
            raise BadLayout(line.number, 1, 'expected {} room segments, found {}'.format(
                len(doc.rooms), len(segments)))
        width = len(doc.rows[0][0][1]) if doc.rows else len(segments[0][1])
        for column, text in segments:
            if len(text) != width:
                raise BadLayout(line.number, column, 'room segment is {} cells wide, '
                                'expected {}'.format(len(text), width))
        y = len(doc.rows)
        for room, (column, text) in zip(doc.rooms, segments):
            for x, char in enumerate(text):
                if char not in '#.GR123456789':
                    raise UnknownChar(line.number, column + x,
                                      'unknown map character {!r}'.format(char))
                doc.cells[(room, x, y)] = (line.number, column + x)
        doc.rows.append(segments)


def _param_value(name, text):
    """Typed value of a parameter, ValueError when out of range"""
    if name == 'td_mode':
        if text not in ('value_iteration', 'one_step'):
            raise ValueError('td_mode must be value_iteration or one_step')
        return text
    if name in ('horizon', 'sweep_cap', 'max_steps', 'seed'):
        value = int(text)
        if value < (0 if name == 'seed' else 1):
            raise ValueError('{} is out of range'.format(name))
        return value
    value = float(text)
    if name in ('p_intended', 'epsilon') and not 0.0 <= value <= 1.0:
        raise ValueError('{} must be within [0, 1]'.format(name))
    if name in ('gamma', 'alpha') and not 0.0 < value <= 1.0:
        raise ValueError('{} must be within (0, 1]'.format(name))
    if name == 'tolerance' and not value > 0.0:
        raise ValueError('tolerance must be positive')
    return value


@section
class ParamsSection(SectionBase):
    __sectionid__ = 'params'

    def parse(self, doc, lines, header):
        for line in lines:
            if '=' not in line.text:
                raise BadLayout(line.number, 1, 'expected key = value')
            key_text, value_text = line.text.split('=', 1)
            name = key_text.strip()
            key_column = len(key_text) - len(key_text.lstrip()) + 1
            value = value_text.strip()
            value_column = len(key_text) + 2 + len(value_text) - len(value_text.lstrip())

            if name not in PARAM_DEFAULTS:
                raise UnknownParam(line.number, key_column, 'unknown parameter {!r}'.format(name))
            if name in doc.params:
                raise BadParamValue(line.number, key_column,
                                    'parameter {} given twice'.format(name))
            try:
                doc.params[name] = (_param_value(name, value), line.number, value_column)
            except ValueError as err:
                raise BadParamValue(line.number, value_column,
                                    'bad value {!r} for {}: {}'.format(value, name, err))


def split_sections(text):
    """Group content lines under their section headers

    Returns:
        [OrderedDict] section name -> (header SourceLine, [SourceLine])
    """
    sections = OrderedDict()
    current = None
    for number, raw in enumerate(text.split('\n'), 1):
        line = raw[:-1] if raw.endswith('\r') else raw
        stripped = line.strip()
        if not stripped or stripped.startswith(';'):
            continue
        if stripped.startswith('['):
            if not stripped.endswith(']'):
                raise BadLayout(number, len(line) + 1, 'unterminated section header')
            name = stripped[1:-1].strip()
            if name in sections:
                raise BadLayout(number, 1, 'section [{}] appears twice'.format(name))
            current = name
            sections[name] = (SourceLine(number, line), [])
            continue
        if current is None:
            raise BadLayout(number, 1, 'content before the first section header')
        sections[current][1].append(SourceLine(number, line.rstrip()))
    return sections


def read_doc(text):
    """Parse section by section into a ScenarioDoc

    Raises:
        ParseError: the text is not a well formed scenario file
    """
    doc = ScenarioDoc()
    for name, (header, lines) in split_sections(text).items():
        try:
            section_cls = get_section(name)
        except KeyError:
            raise BadLayout(header.number, 1, 'unknown section [{}]'.format(name))
        doc.headers[name] = header
        section_cls().parse(doc, lines, header)

    if 'map' not in doc.headers:
        raise BadLayout(1, 1, 'no [map] section')
    return doc


class _Geometry(object):
    """Walls, doors, goal and start collected from the grid of a ScenarioDoc"""

    def __init__(self, doc):
        self.doc = doc
        self.height = len(doc.rows)
        self.width = len(doc.rows[0][0][1])
        self.walls = None
        self.door_cells = OrderedDict()
        self.room_doors = OrderedDict((room, []) for room in doc.rooms)
        self.goal = None
        self.start = None
        self._collect()

    def _char(self, room, x, y):
        segments = self.doc.rows[y]
        return segments[self.doc.rooms.index(room)][1][x]

    def _collect(self):
        header = self.doc.headers['map']
        for room in self.doc.rooms:
            walls = set()
            for y in range(self.height):
                for x in range(self.width):
                    char = self._char(room, x, y)
                    line, column = self.doc.position(room, x, y)
                    if char == '#':
                        walls.add((x, y))
                    elif char.isdigit():
                        self._door(room, 'd' + char, (x, y), line, column)
                    elif char == 'G':
                        if self.goal is not None:
                            raise BadLayout(line, column, 'more than one goal cell')
                        self.goal = (room, (x, y))
                    elif char == 'R':
                        if self.start is not None:
                            raise BadLayout(line, column, 'more than one robot start')
                        self.start = (room, x, y)
            self._walls(room, walls)
            free = self.width * self.height - len(walls)
            if free != FREE_CELLS_PER_ROOM:
                raise BadLayout(header.number, 1, 'room {} has {} free cells, expected {}'.format(
                    room, free, FREE_CELLS_PER_ROOM))

        if self.goal is None:
            raise MissingGoal(header.number, 1, 'the map has no goal cell (G)')
        if self.start is None:
            raise MissingRobot(header.number, 1, 'the map has no robot start (R)')

    def _walls(self, room, walls):
        if self.walls is None:
            self.walls = frozenset(walls)
            return
        for cell in sorted(self.walls.symmetric_difference(walls), key=lambda c: (c[1], c[0])):
            line, column = self.doc.position(room, cell[0], cell[1])
            raise BadLayout(line, column, 'room {} walls differ from room {}'.format(
                room, self.doc.rooms[0]))

    def _door(self, room, door, cell, line, column):
        known = self.door_cells.get(door)
        if known is not None and known != cell:
            raise BadLayout(line, column, 'door {} sits at {} in another room'.format(door, known))
        for other, other_cell in self.door_cells.items():
            if other != door and other_cell == cell:
                raise BadLayout(line, column, 'doors {} and {} share a position'.format(
                    other, door))
        if door in self.room_doors[room]:
            raise BadLayout(line, column, 'door {} appears twice in room {}'.format(door, room))
        self.door_cells[door] = cell
        self.room_doors[room].append(door)


def _pairs(doc, geometry):
    used = {}
    pairs = []
    for endpoints, line in doc.pairs:
        for (room, door), column in endpoints:
            if room not in geometry.room_doors:
                raise BadPairing(line.number, column, 'room {} is not declared'.format(room))
            if door not in geometry.room_doors[room]:
                raise BadPairing(line.number, column, 'room {} has no door {}'.format(room, door))
            if (room, door) in used:
                raise BadPairing(line.number, column, '{}.{} is already paired on line {}'.format(
                    room, door, used[(room, door)]))
            used[(room, door)] = line.number
        if endpoints[0][0][0] == endpoints[1][0][0]:
            raise BadPairing(line.number, endpoints[1][1], 'a door pair must join two rooms')
        pairs.append((endpoints[0][0], endpoints[1][0]))

    for room, doors in geometry.room_doors.items():
        for door in doors:
            if (room, door) not in used:
                cell = geometry.door_cells[door]
                line, column = doc.position(room, cell[0], cell[1])
                raise BadPairing(line, column, 'door {}.{} has no pair line'.format(room, door))
    return pairs


def _topology(doc, pairs):
    topology = frozenset(frozenset([first[0], second[0]]) for first, second in pairs)
    if topology != CANONICAL_TOPOLOGY:
        where = doc.pairs[0][1].number if doc.pairs else doc.headers['map'].number
        raise TopologyMismatch(where, 1, 'room connections {} differ from the navigation '
                               'topology {}'.format(
                                   sorted(sorted(edge) for edge in topology),
                                   sorted(sorted(edge) for edge in CANONICAL_TOPOLOGY)))


def doc_scenario(doc):
    """Validate a ScenarioDoc and build its Scenario"""
    geometry = _Geometry(doc)
    pairs = _pairs(doc, geometry)
    _topology(doc, pairs)
    try:
        world_map = WorldMap(rooms=doc.rooms,
                             walls=geometry.walls,
                             door_cells=geometry.door_cells,
                             room_doors=geometry.room_doors,
                             pairs=pairs,
                             goal=geometry.goal,
                             width=geometry.width,
                             height=geometry.height)
    except MapError as err:
        raise BadLayout(doc.headers['map'].number, 1, str(err))

    params = ScenarioParams(**{name: value for name, (value, _, _) in doc.params.items()})
    return Scenario(world_map, geometry.start, params)


def parse_scenario(text):
    """Parse the text of a .chs scenario file

    Raises:
        ParseError: a subclass naming the problem and its line:column
    """
    scenario = doc_scenario(read_doc(text))
    LOGGER.debug('Parsed scenario with rooms %s', ', '.join(scenario.world_map.rooms))
    return scenario


def load_scenario(path):
    """Read and parse a scenario file

    Raises:
        IOError: the file cannot be read
        ParseError: with `path` set to the file; BadEncoding for bytes that
            are not UTF-8
    """
    with open(path, 'rb') as scenario_file:
        raw = scenario_file.read()
    try:
        return parse_scenario(_decode(raw))
    except ParseError as err:
        err.path = path
        raise


def _decode(raw):
    try:
        return raw.decode('utf-8')
    except UnicodeDecodeError as err:
        head = raw[:err.start]
        line_start = head.rfind(b'\n') + 1
        column = len(head[line_start:].decode('utf-8', errors='replace')) + 1
        raise BadEncoding(head.count(b'\n') + 1, column,
                          'byte 0x{:02x} is not valid UTF-8'.format(raw[err.start]))


def _map_char(world_map, start, room, cell):
    if cell in world_map.walls:
        return '#'
    if world_map.goal == (room, cell):
        return 'G'
    if tuple(start) == (room,) + cell:
        return 'R'
    door = world_map.door_at(room, cell)
    if door is not None:
        return door[1:]
    return '.'


def render_scenario(scenario, title='scenario'):
    """Canonical text of a scenario: parameters sorted, defaults commented out

    Raises:
        InvalidStart: the start is not a free cell, or is a door cell
    """
    world_map = scenario.world_map
    check_start(world_map, scenario.start)
    lines = ['; {}'.format(title), '[map]', 'rooms: {}'.format(' '.join(world_map.rooms))]
    for y in range(world_map.height):
        lines.append('|'.join(
            ''.join(_map_char(world_map, scenario.start, room, (x, y))
                    for x in range(world_map.width))
            for room in world_map.rooms))
    for first, second in world_map.pairs:
        lines.append('pair: {}.{} {}.{}'.format(first[0], first[1], second[0], second[1]))

    lines.append('[params]')
    values = scenario.params._asdict()
    for name in sorted(values):
        prefix = '; ' if values[name] == PARAM_DEFAULTS[name] else ''
        lines.append('{}{} = {}'.format(prefix, name, values[name]))
    return '\n'.join(lines) + '\n'
