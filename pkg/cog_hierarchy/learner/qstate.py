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
from collections import namedtuple

import numpy as np

from cog_hierarchy.gridworld.motion import draw_choice, draw_uniform
from cog_hierarchy.gridworld.world_map import GOAL
from cog_hierarchy.learner.model import ACTIONS, CROSS
from cog_hierarchy.shared import LOGGER
from cog_hierarchy.shared.errors import CogHierarchyError

LEARNING = 'learning'
EVALUATION = 'evaluation'
VALUE_ITERATION = 'value_iteration'
ONE_STEP = 'one_step'
Q_HEADER = ['task', 'x', 'y', 'action', 'q']
TIE_TOLERANCE = 1e-9


class UnknownTask(CogHierarchyError):
    """Raised when a task parameter names no feature of the map"""

    def __init__(self, task):
        self.task = task
        super(UnknownTask, self).__init__('unknown task {!r}'.format(task))


LearnerParams = namedtuple('LearnerParams', ['gamma',
                                             'epsilon',
                                             'tolerance',
                                             'sweep_cap',
                                             'td_mode',
                                             'alpha'])
LearnerParams.__new__.__defaults__ = (1.0, 0.1, 1e-6, 1000, VALUE_ITERATION, 0.5)


class QState(object):
    """Planning state of the learner: one cost-to-go table per task

    q has shape (tasks, cells, actions) and holds expected primitive steps,
    so the greedy action is the argmin. cell is the projected cell index the
    learner last planned from, room its room.
    """

    def __init__(self, projection, q=None, params=None, seed=0, mode=LEARNING,
                 room=None, cell=None, sweeps=0):
        self.projection = projection
        if q is None:
            q = np.zeros((len(projection.tasks), projection.size, len(ACTIONS)))
        self.q = q
        self.params = params or LearnerParams()
        self.seed = seed
        self.mode = mode
        self.room = room
        self.cell = cell
        self.sweeps = sweeps

    def _replace(self, **fields):
        values = dict(q=self.q, params=self.params, seed=self.seed, mode=self.mode,
                      room=self.room, cell=self.cell, sweeps=self.sweeps)
        values.update(fields)
        return QState(self.projection, **values)

    def __eq__(self, other):
        return (isinstance(other, QState) and np.array_equal(self.q, other.q)
                and (self.params, self.seed, self.mode, self.room, self.cell) ==
                (other.params, other.seed, other.mode, other.room, other.cell))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'QState(mode={}, room={}, cell={}, sweeps={})'.format(
            self.mode, self.room, self.cell, self.sweeps)

    def table(self, task):
        if task not in self.projection.task_index:
            raise UnknownTask(task)
        return self.q[self.projection.task_index[task]]

    def cost(self, task, cell):
        """min_a q(task, cell, a) for a projected (x, y) cell"""
        return float(self.table(task)[self.projection.index[tuple(cell)]].min())

    def rows(self):
        """Q dump rows task,x,y,action,q"""
        for task in self.projection.tasks:
            table = self.table(task)
            for pos, cell in enumerate(self.projection.cells):
                for action, name in enumerate(ACTIONS):
                    yield [task, cell[0], cell[1], name, repr(float(table[pos, action]))]


class GreedyPolicy(object):
    """Greedy choice over one task's table; explore forces one action"""

    def __init__(self, task, q_table, projection, explore=None):
        self.task = task
        self.q_table = q_table
        self.projection = projection
        self.explore = explore

    def __eq__(self, other):
        if not isinstance(other, GreedyPolicy):
            return False
        if (self.task, self.explore) != (other.task, other.explore):
            return False
        if self.q_table is None or other.q_table is None:
            return self.q_table is other.q_table
        return np.array_equal(self.q_table, other.q_table)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'GreedyPolicy(task={}, explore={})'.format(self.task, self.explore)


def greedy_index(row):
    """First action index within TIE_TOLERANCE of the minimum (order N, S, E, W)"""
    return int(np.flatnonzero(row <= row.min() + TIE_TOLERANCE)[0])


def greedy_action(policy, belief):
    """Singleton set of the argmin action for the policy's task; empty without a task"""
    if policy.task is None or belief is None:
        return frozenset()
    if policy.explore is not None:
        return frozenset([ACTIONS[policy.explore]])
    row = policy.q_table[policy.projection.index[(belief.x, belief.y)]]
    return frozenset([ACTIONS[greedy_index(row)]])


def crossing_values(projection, values):
    """Cost-to-go of the crossing slot for every task and cell

    Crossing a task's own door ends the task. Crossing any other door leaves
    the room, so it costs the way back through the paired door plus the
    cost-to-go from where the robot left.
    """
    result = np.zeros_like(values)
    for pos, door in projection.door_of.items():
        paired = projection.paired_door.get(door)
        if paired is None:
            continue
        back = values[projection.task_index[paired], projection.task_cell(paired)]
        result[:, pos] = values[:, pos] + back
        result[projection.task_index[door], pos] = 0.0
    return result


def backup(projection, probs, q, gamma):
    """One synchronous Bellman backup of every task table"""
    values = q.min(axis=2)
    slot_values = values[:, projection.successors]
    slot_values[:, :, CROSS] = crossing_values(projection, values)
    updated = 1.0 + gamma * np.einsum('cak,tck->tca', probs, slot_values)
    updated[projection.task_index[GOAL], projection.task_cell(GOAL), :] = 0.0
    return updated


def value_iteration(projection, probs, q, params):
    """Sweep until the largest change is below tolerance or the sweep cap

    Returns:
        [tuple] (q, sweeps)
    """
    for sweep in range(1, params.sweep_cap + 1):
        updated = backup(projection, probs, q, params.gamma)
        delta = np.max(np.abs(updated - q))
        q = updated
        if delta < params.tolerance:
            return q, sweep
    LOGGER.warning('Value iteration did not converge within %d sweeps (residual %g)',
                   params.sweep_cap, delta)
    return q, params.sweep_cap


def one_step_update(projection, model, q, params):
    """Model-free backup of the most recent experience for every task"""
    if model.last is None:
        return q
    pos, action, slot = model.last
    values = q.min(axis=2)
    if slot == CROSS:
        successor_values = crossing_values(projection, values)[:, pos]
    else:
        successor_values = values[:, projection.successors[pos, slot]]
    q = q.copy()
    target = 1.0 + params.gamma * successor_values
    q[:, pos, action] += params.alpha * (target - q[:, pos, action])
    q[projection.task_index[GOAL], projection.task_cell(GOAL), :] = 0.0
    return q


def _select_task(projection, tasks):
    for task in tasks:
        if task not in projection.task_index:
            raise UnknownTask(task)
    if not tasks:
        return None
    if len(tasks) > 1:
        LOGGER.debug('Several tasks requested %s, following the first', sorted(tasks))
    return sorted(tasks)[0]


def td_plan(policy, model, tasks, qstate, belief):
    """Refresh the task tables from the learned model and pick a greedy policy

    Args:
        policy (GreedyPolicy): The current policy (unused beyond its type)
        model (TallyModel): Learned transition counts
        tasks (frozenset): Task parameters handed down, singleton expected
        qstate (QState): Current tables, warm start for value iteration
        belief (GridBelief): The learner's corrected belief

    Returns:
        [tuple] (GreedyPolicy, QState)

    Raises:
        UnknownTask: A task parameter is not a door id or 'goal'
    """
    projection = qstate.projection
    params = qstate.params
    task = _select_task(projection, tasks)

    if params.td_mode == ONE_STEP:
        q, sweeps = one_step_update(projection, model, qstate.q, params), 0
    else:
        q, sweeps = value_iteration(projection, model.probabilities(), qstate.q, params)

    seed, explore = qstate.seed, None
    if task is not None and qstate.mode == LEARNING and params.epsilon > 0.0:
        draw, seed = draw_uniform(seed)
        if draw < params.epsilon:
            explore, seed = draw_choice(seed, len(ACTIONS))

    room, cell = None, None
    if belief is not None:
        room, cell = belief.room, projection.index[(belief.x, belief.y)]

    qstate = qstate._replace(q=q, seed=seed, room=room, cell=cell, sweeps=sweeps)
    table = q[projection.task_index[task]] if task is not None else None
    return GreedyPolicy(task, table, projection, explore), qstate


def write_q_table(path, qstate):
    with open(path, 'w', newline='') as out:
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(Q_HEADER)
        writer.writerows(qstate.rows())
