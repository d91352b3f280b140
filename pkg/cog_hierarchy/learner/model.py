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
import csv
from collections import OrderedDict, namedtuple

import numpy as np

from cog_hierarchy.gridworld.world_map import DIRECTIONS, GOAL

ACTIONS = tuple(DIRECTIONS)
STAY = 4
CROSS = 5
SLOTS = 6
PRIOR_WEIGHT = 1.0
TALLY_HEADER = ['x', 'y', 'action', 'nx', 'ny', 'count']

GridBelief = namedtuple('GridBelief', 'room x y')
Crossing = namedtuple('Crossing', 'door cell')


class Projection(object):
    """Room-relative view of a WorldMap shared by every room

    Successors of a cell live in six slots: the four neighbours in
    N, S, E, W order (the cell itself when blocked), the cell itself, and
    the crossing through the cell's door (paired door cell).

    The prior is read off the map: the intended move lands on the open
    neighbour (or crosses, outward from a door) with probability one. Only
    the slip statistics are left for the tallies to learn.
    """

    def __init__(self, world_map):
        self.world_map = world_map
        self.cells = world_map.cells
        self.index = world_map.cell_index
        self.tasks = tuple(sorted(world_map.door_cells)) + (GOAL,)
        self.task_index = {task: pos for pos, task in enumerate(self.tasks)}

        size = len(self.cells)
        self.successors = np.zeros((size, SLOTS), dtype=int)
        self.door_of = {}
        self.paired_door = {}
        for door, cell in world_map.door_cells.items():
            self.door_of[self.index[cell]] = door
            paired = world_map.paired_cell(door)
            if paired is not None:
                self.paired_door[door] = world_map.door_for_cell(paired)

        self.prior = np.zeros((size, len(ACTIONS), SLOTS))
        for pos, cell in enumerate(self.cells):
            for slot, vector in enumerate(DIRECTIONS.values()):
                target = (cell[0] + vector[0], cell[1] + vector[1])
                if world_map.is_open(target):
                    self.successors[pos, slot] = self.index[target]
                else:
                    self.successors[pos, slot] = pos
            self.successors[pos, STAY] = pos
            door = self.door_of.get(pos)
            crossing = door is not None and door in self.paired_door
            self.successors[pos, CROSS] = (self.index[world_map.door_cells[self.paired_door[door]]]
                                           if crossing else pos)
            for action, name in enumerate(ACTIONS):
                if crossing and world_map.outward[door] == name:
                    self.prior[pos, action, CROSS] = 1.0
                else:
                    self.prior[pos, action, self.slot_of(pos, self.successors[pos, action])] = 1.0

    @property
    def size(self):
        return len(self.cells)

    def slot_of(self, pos, successor):
        """First in-room slot holding a successor cell index, or None"""
        for slot in range(CROSS):
            if self.successors[pos, slot] == successor:
                return slot
        return None

    def task_cell(self, task):
        return self.index[self.world_map.feature_cell(task)]

    def owns_position(self, room, pos):
        """False on a door position whose door the room does not have"""
        door = self.door_of.get(pos)
        return door is None or door in self.world_map.room_doors[room]


class TallyModel(object):
    """Counts of (projected cell, action, successor slot) experiences"""

    def __init__(self, projection, counts=None, last=None):
        self.projection = projection
        if counts is None:
            counts = np.zeros((projection.size, len(ACTIONS), SLOTS), dtype=np.int64)
        self.counts = counts
        self.last = last

    def __eq__(self, other):
        return (isinstance(other, TallyModel) and self.projection is other.projection
                and np.array_equal(self.counts, other.counts))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'TallyModel(total={})'.format(int(self.counts.sum()))

    def count(self, cell, action, successor):
        """Tally of a (cell, action, successor) triple; successor may be a Crossing"""
        pos = self.projection.index[tuple(cell)]
        slot = _successor_slot(self.projection, pos, successor)
        if slot is None:
            return 0
        return int(self.counts[pos, ACTIONS.index(action), slot])

    def probabilities(self):
        """Counts smoothed by the prior; the prior itself wherever a (cell, action) is untried"""
        return blend_prior(self.counts, self.projection.prior)

    def rows(self):
        """Tally dump rows x,y,action,nx,ny,count for every non-zero count"""
        projection = self.projection
        for pos, action, slot in zip(*np.nonzero(self.counts)):
            cell = projection.cells[pos]
            successor = projection.cells[projection.successors[pos, slot]]
            yield [cell[0], cell[1], ACTIONS[action], successor[0], successor[1],
                   int(self.counts[pos, action, slot])]


def blend_prior(counts, prior, weight=PRIOR_WEIGHT):
    """Tallies with `weight` pseudo-counts spread over the prior's successors

    Every outcome the prior allows keeps a positive probability.
    """
    totals = counts.sum(axis=-1, keepdims=True)
    return (counts + weight * prior) / (totals + weight)


def _successor_slot(projection, pos, successor):
    if isinstance(successor, Crossing):
        return CROSS if pos in projection.door_of else None
    successor = tuple(successor)
    if successor not in projection.index:
        return None
    return projection.slot_of(pos, projection.index[successor])


def obs_update_1(belief, observations):
    """Replace the belief with a singleton observation; empty keeps the belief"""
    if not observations:
        return belief
    return GridBelief(*next(iter(observations)))


def experience_slot(projection, before, after):
    """Successor slot of a (before, after) pair of beliefs, or None when the
    pair is not a one-step experience the tally can record"""
    pos = projection.index[(before.x, before.y)]
    after_pos = projection.index.get((after.x, after.y))
    if after_pos is None:
        return None
    if before.room == after.room:
        return projection.slot_of(pos, after_pos)
    door = projection.world_map.door_at(before.room, (before.x, before.y))
    if door is None:
        return None
    endpoint = projection.world_map.link(before.room, door)
    if endpoint is None or endpoint[0] != after.room:
        return None
    return CROSS if projection.successors[pos, CROSS] == after_pos else None


def tally_learn(model, before, actions, after):
    """Count one experience; empty action sets leave the model unchanged

    Experiences that start on a door position the room does not own are
    skipped: the outward move there is a wall, not a crossing.
    """
    if not actions or before is None or after is None:
        return model
    projection = model.projection
    pos = projection.index.get((before.x, before.y))
    if pos is None or not projection.owns_position(before.room, pos):
        return model
    slot = experience_slot(projection, before, after)
    if slot is None:
        return model

    action = ACTIONS.index(next(iter(actions)))
    counts = model.counts.copy()
    counts[pos, action, slot] += 1
    return TallyModel(projection, counts, last=(pos, action, slot))


def empirical_probs(model, cell, action):
    """Successor distribution of a projected cell and action

    Returns:
        [OrderedDict] successor -> probability; in-room successors are (x, y)
            cells, a door crossing is a Crossing(door, paired cell)
    """
    projection = model.projection
    pos = projection.index[tuple(cell)]
    probs = model.probabilities()[pos, ACTIONS.index(action)]
    result = OrderedDict()
    for slot in np.nonzero(probs)[0]:
        successor = projection.cells[projection.successors[pos, slot]]
        if slot == CROSS:
            successor = Crossing(projection.door_of[pos], successor)
        result[successor] = result.get(successor, 0.0) + float(probs[slot])
    return result


def predict_next(model, belief, context, actions):
    """Most likely successor belief; ties go to the smallest cell in row-major order"""
    if not actions:
        return belief
    projection = model.projection
    pos = projection.index[(belief.x, belief.y)]
    probs = model.probabilities()[pos, ACTIONS.index(next(iter(actions)))]

    best, best_prob = None, -1.0
    for slot in range(SLOTS):
        successor = projection.successors[pos, slot]
        key = (successor, slot == CROSS)
        if probs[slot] > best_prob or (probs[slot] == best_prob and key < best):
            best, best_prob = key, probs[slot]

    successor, crossed = best
    x, y = projection.cells[successor]
    if crossed:
        endpoint = projection.world_map.link(belief.room, projection.door_of[pos])
        if endpoint is not None:
            return GridBelief(endpoint[0], x, y)
    return GridBelief(belief.room, x, y)


def write_tally(path, model):
    with open(path, 'w', newline='') as out:
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(TALLY_HEADER)
        writer.writerows(model.rows())
