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
import pytest

from cog_hierarchy.gridworld.world_map import CANONICAL_TOPOLOGY, DIRECTIONS, GOAL, UNKNOWN, \
    MapError, WorldMap, canonical_map, canonical_walls, left_of, right_of


class TestCanonicalMap(object):
    """Test class for the five-room map"""

    def setup_method(self):
        """Setup before each method"""
        self.world_map = canonical_map()

    def test_state_counts(self):
        """World Map - 5 Rooms x 90 Cells"""
        assert len(self.world_map.rooms) == 5
        assert len(self.world_map.cells) == 90
        assert len(self.world_map.locations()) == 450

    def test_outward_sides(self):
        """World Map - Door Outward Sides"""
        assert self.world_map.outward == {'d1': 'N', 'd2': 'E', 'd3': 'W',
                                          'd4': 'E', 'd5': 'W', 'd6': 'S'}

    def test_topology(self):
        """World Map - Room Topology"""
        assert self.world_map.topology() == CANONICAL_TOPOLOGY

    def test_features(self):
        """World Map - Feature Lookup"""
        assert self.world_map.feature_at('r3', (2, 3)) == GOAL
        assert self.world_map.feature_at('r4', (2, 0)) == 'd1'
        assert self.world_map.feature_at('r4', (5, 5)) == UNKNOWN
        # r1 has no d1, so the same projected cell is plain floor there
        assert self.world_map.feature_at('r1', (2, 0)) == UNKNOWN
        assert self.world_map.features_in('r3') == ('d1', 'd5', GOAL)
        assert self.world_map.features_in('r4') == ('d1', 'd4')

    def test_links(self):
        """World Map - Door Links"""
        assert self.world_map.link('r4', 'd1') == ('r1', 'd6')
        assert self.world_map.link('r1', 'd6') == ('r4', 'd1')
        assert self.world_map.link('r1', 'd1') is None

    def test_move_through_door(self):
        """World Map - Outward Move Crosses"""
        assert self.world_map.move(('r4', 2, 0), DIRECTIONS['N']) == (('r1', 4, 9), True)
        assert self.world_map.move(('r5', 8, 2), DIRECTIONS['E']) == (('r3', 0, 4), True)

    def test_move_blocked(self):
        """World Map - Walls And Borders Keep The Robot"""
        assert self.world_map.move(('r4', 8, 3), DIRECTIONS['E']) == (('r4', 8, 3), False)
        assert self.world_map.move(('r1', 2, 0), DIRECTIONS['N']) == (('r1', 2, 0), False)
        assert self.world_map.move(('r4', 0, 0), DIRECTIONS['W']) == (('r4', 0, 0), False)

    def test_move_inside(self):
        """World Map - Plain Move"""
        assert self.world_map.move(('r4', 2, 3), DIRECTIONS['E']) == (('r4', 3, 3), False)

    def test_equality(self):
        """World Map - Value Equality"""
        assert canonical_map() == self.world_map
        assert hash(canonical_map()) == hash(self.world_map)


def test_lateral_directions():
    """World Map - Left And Right Of A Direction"""
    assert left_of(DIRECTIONS['N']) == DIRECTIONS['W']
    assert right_of(DIRECTIONS['N']) == DIRECTIONS['E']
    assert left_of(DIRECTIONS['E']) == DIRECTIONS['N']
    assert right_of(DIRECTIONS['S']) == DIRECTIONS['W']


def test_corner_door_rejected():
    """World Map - Door With Two Outward Sides"""
    with pytest.raises(MapError):
        WorldMap(rooms=('r1', 'r2'), walls=canonical_walls(),
                 door_cells={'d1': (0, 0)}, room_doors={'r1': ['d1']},
                 pairs=[], goal=('r1', (3, 3)))
