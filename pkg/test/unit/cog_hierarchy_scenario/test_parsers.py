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
from hypothesis import given, settings, strategies as st
import pytest

from cog_hierarchy.gridworld import InvalidStart, canonical_map
from cog_hierarchy.gridworld.world_map import CANONICAL_DOORS, WorldMap
from cog_hierarchy.scenario import ParseError, Scenario, ScenarioParams, canonical_scenario, \
    load_scenario, parse_scenario, render_scenario
from cog_hierarchy.scenario.parsers import BadLayout, BadPairing, BadParamValue, MissingGoal, \
    MissingRobot, TopologyMismatch, UnknownChar, UnknownParam, get_section

CANONICAL_TITLE = 'canonical five-room navigation scenario'
CANONICAL_LINES = render_scenario(canonical_scenario()).splitlines()


def _text(lines):
    return '\n'.join(lines) + '\n'


def _char(line, column, char):
    def mutate(lines):
        row = lines[line - 1]
        lines[line - 1] = row[:column - 1] + char + row[column:]
    return mutate


def _line(line, text):
    def mutate(lines):
        lines[line - 1] = text
    return mutate


def _drop(line):
    def mutate(lines):
        del lines[line - 1]
    return mutate


def _append(*texts):
    def mutate(lines):
        lines.extend(texts)
    return mutate


def _insert(text):
    def mutate(lines):
        lines.insert(0, text)
    return mutate


def _swap_topology(lines):
    lines[14] = 'pair: r1.d4 r5.d3'
    lines[18] = 'pair: r4.d4 r2.d3'


# Rows are lines 4-14; room segments start at columns 1, 12, 23, 34 and 45
MALFORMED = [
    (_char(5, 1, 'X'), UnknownChar, 5, 1),
    (_char(6, 25, '?'), UnknownChar, 6, 25),
    (_char(7, 25, '.'), MissingGoal, 2, 1),
    (_char(7, 36, '.'), MissingRobot, 2, 1),
    (_char(4, 1, 'G'), BadLayout, 7, 25),
    (_char(5, 12, '#'), BadLayout, 5, 12),
    (_drop(15), BadPairing, 10, 9),
    (_line(15, 'pair: r1.d5 r2.d3'), BadPairing, 15, 7),
    (_line(15, 'pair: r1-d4 r2.d3'), BadPairing, 15, 7),
    (_line(16, 'pair: r1.d4 r4.d1'), BadPairing, 16, 7),
    (_line(15, 'pair: r1.d4 r1.d6'), BadPairing, 15, 13),
    (_swap_topology, TopologyMismatch, 15, 1),
    (_append('foo = 1'), UnknownParam, 31, 1),
    (_line(26, 'p_intended = 1.5'), BadParamValue, 26, 14),
    (_line(24, 'horizon = ten'), BadParamValue, 24, 11),
    (_line(29, 'td_mode = sarsa'), BadParamValue, 29, 11),
    (_append('seed = 1', 'seed = 2'), BadParamValue, 32, 1),
    (_line(8, '........#|.........#|5........#|.........#|.........#'), BadLayout, 8, 1),
    (_line(9, '.........#|.........#|.........#|.........#'), BadLayout, 9, 1),
    (_append('[extras]'), BadLayout, 31, 1),
    (_insert('hello'), BadLayout, 1, 1),
    (_line(2, '[map'), BadLayout, 2, 5),
    (_drop(3), BadLayout, 3, 1),
    (_line(3, 'rooms: r1 r2 3r r4 r5'), BadLayout, 3, 14),
    (_char(4, 36, '.'), BadPairing, 16, 13),
    (_char(4, 37, '1'), BadLayout, 4, 37),
]


def test_canonical_lines():
    """Scenario Parser - Line Layout The Corpus Relies On"""
    assert CANONICAL_LINES[1] == '[map]'
    assert CANONICAL_LINES[14] == 'pair: r1.d4 r2.d3'
    assert CANONICAL_LINES[25] == '; p_intended = 0.8'
    assert len(CANONICAL_LINES) == 30


@pytest.mark.parametrize('mutate, error, line, column', MALFORMED)
def test_malformed(mutate, error, line, column):
    """Scenario Parser - Malformed Files Report line:column"""
    lines = list(CANONICAL_LINES)
    mutate(lines)
    with pytest.raises(error) as raised:
        parse_scenario(_text(lines))
    assert (raised.value.line, raised.value.column) == (line, column)


def test_no_map_section():
    """Scenario Parser - Missing Map Section"""
    with pytest.raises(BadLayout) as raised:
        parse_scenario('[params]\nseed = 1\n')
    assert raised.value.location() == '1:1'


def test_parse_canonical():
    """Scenario Parser - Canonical Text"""
    assert parse_scenario(_text(CANONICAL_LINES)) == canonical_scenario()


def test_crlf_and_comments():
    """Scenario Parser - Windows Line Endings And Comments"""
    text = '\r\n'.join(['; leading comment', ''] + CANONICAL_LINES) + '\r\n'
    assert parse_scenario(text) == canonical_scenario()


def test_canonical_file():
    """Scenario Parser - Shipped Canonical File"""
    with open('conf/scenarios/canonical.chs') as scenario_file:
        text = scenario_file.read()
    assert text == render_scenario(canonical_scenario(), title=CANONICAL_TITLE)
    assert load_scenario('conf/scenarios/canonical.chs') == canonical_scenario()


def test_slippery_file():
    """Scenario Parser - Shipped Heavy Slip File"""
    scenario = load_scenario('conf/scenarios/slippery.chs')
    assert scenario == canonical_scenario(p_intended=0.4)


def test_load_sets_path(tmp_path):
    """Scenario Parser - Errors Carry The File Path"""
    lines = list(CANONICAL_LINES)
    _char(5, 1, 'X')(lines)
    path = tmp_path / 'broken.chs'
    path.write_text(_text(lines))
    with pytest.raises(ParseError) as raised:
        load_scenario(str(path))
    assert raised.value.location() == '{}:5:1'.format(path)
    assert raised.value.kind == 'unknown_char'


def test_load_bad_encoding(tmp_path):
    """Scenario Parser - Bytes That Are Not UTF-8"""
    encoded = [line.encode('utf-8') for line in CANONICAL_LINES]
    encoded[4] = encoded[4][:2] + b'\xff' + encoded[4][3:]
    path = tmp_path / 'latin.chs'
    path.write_bytes(b'\n'.join(encoded) + b'\n')
    with pytest.raises(ParseError) as raised:
        load_scenario(str(path))
    assert raised.value.location() == '{}:5:3'.format(path)
    assert raised.value.kind == 'bad_encoding'
    assert raised.value.message == 'byte 0xff is not valid UTF-8'


def test_get_section():
    """Scenario Parser - Registered Sections"""
    assert get_section('map').__sectionid__ == 'map'
    assert get_section('params').__sectionid__ == 'params'
    with pytest.raises(KeyError):
        get_section('extras')


MAP = canonical_map()
PLAIN_LOCATIONS = [location for location in MAP.locations()
                   if MAP.door_at(location[0], location[1:]) is None]


def _map_with_goal(goal):
    return WorldMap(rooms=MAP.rooms, walls=MAP.walls, door_cells=MAP.door_cells,
                    room_doors=MAP.room_doors, pairs=MAP.pairs,
                    goal=(goal[0], goal[1:]))


@st.composite
def scenarios(draw):
    """Canonical topology with the goal and start on any two plain cells"""
    goal, start = draw(st.lists(st.sampled_from(PLAIN_LOCATIONS), min_size=2, max_size=2,
                                unique=True))
    params = ScenarioParams(p_intended=draw(st.floats(min_value=0.0, max_value=1.0)),
                            epsilon=draw(st.floats(min_value=0.0, max_value=1.0)),
                            horizon=draw(st.integers(min_value=1, max_value=30)),
                            seed=draw(st.integers(min_value=0, max_value=2 ** 31)),
                            td_mode=draw(st.sampled_from(['value_iteration', 'one_step'])))
    return Scenario(_map_with_goal(goal), start, params)


@settings(max_examples=50, deadline=None)
@given(scenario=scenarios())
def test_render_parse_identity(scenario):
    """Scenario Parser - Rendered Scenarios Parse Back"""
    assert parse_scenario(render_scenario(scenario)) == scenario


@pytest.mark.parametrize('door', sorted(CANONICAL_DOORS))
def test_render_door_start(door):
    """Scenario Parser - A Doorway Start Has No Text Form"""
    room = next(room for room in MAP.rooms if door in MAP.room_doors[room])
    start = (room,) + CANONICAL_DOORS[door]
    with pytest.raises(InvalidStart) as raised:
        render_scenario(Scenario(MAP, start))
    assert str(raised.value) == 'start {!r} is on door {}'.format(start, door)
