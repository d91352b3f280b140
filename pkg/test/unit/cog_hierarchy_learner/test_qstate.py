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
from hypothesis import given, strategies as st
import numpy as np
import pytest

from cog_hierarchy.gridworld import GOAL, canonical_map
from cog_hierarchy.gridworld.oracle import cell_distances
from cog_hierarchy.learner import EVALUATION, GreedyPolicy, GridBelief, LearnerNode, \
    LearnerParams, Projection, QState, TallyModel, UnknownTask, greedy_action, tally_learn, \
    td_plan
from cog_hierarchy.learner.qstate import ONE_STEP, greedy_index, value_iteration


@pytest.fixture(scope='module')
def projection():
    return Projection(canonical_map())


@pytest.fixture(scope='module')
def prior_q(projection):
    q = np.zeros((len(projection.tasks), projection.size, 4))
    return value_iteration(projection, projection.prior, q, LearnerParams())[0]


def _cost(projection, q, task, cell):
    return q[projection.task_index[task], projection.index[cell]].min()


def test_prior_goal_costs(projection, prior_q):
    """Learner - Goal Costs On The Prior Are Grid Distances"""
    for cell, distance in cell_distances(projection.world_map, (2, 3)).items():
        assert _cost(projection, prior_q, GOAL, cell) == pytest.approx(distance)


def test_prior_door_costs(projection, prior_q):
    """Learner - Door Costs Include The Crossing Step"""
    for door in ('d1', 'd4', 'd6'):
        target = projection.world_map.door_cells[door]
        for cell, distance in cell_distances(projection.world_map, target).items():
            assert _cost(projection, prior_q, door, cell) == pytest.approx(distance + 1)


def test_greedy_rollout(projection, prior_q):
    """Learner - Greedy Rollout Follows A Shortest Path"""
    table = prior_q[projection.task_index[GOAL]]
    pos, steps = projection.index[(8, 9)], 0
    while pos != projection.task_cell(GOAL):
        pos = projection.successors[pos, greedy_index(table[pos])]
        steps += 1
        assert steps <= 90
    assert steps == 12


def test_value_iteration_sweep_cap(projection):
    """Learner - Value Iteration Stops At The Sweep Cap"""
    q = np.zeros((len(projection.tasks), projection.size, 4))
    _, sweeps = value_iteration(projection, projection.prior, q,
                                LearnerParams(sweep_cap=3))
    assert sweeps == 3


def test_value_iteration_after_slip(projection):
    """Learner - Door Costs Stay Finite After A Slip Off The Door"""
    model = tally_learn(TallyModel(projection), GridBelief('r4', 2, 0), frozenset(['N']),
                        GridBelief('r4', 3, 0))
    q = np.zeros((len(projection.tasks), projection.size, 4))
    q, sweeps = value_iteration(projection, model.probabilities(), q, LearnerParams())
    assert sweeps < LearnerParams().sweep_cap
    assert np.all(np.isfinite(q))
    # crossing half the time, the slip costs one step back
    assert _cost(projection, q, 'd1', (2, 0)) == pytest.approx(3.0, abs=1e-4)
    assert _cost(projection, q, 'd1', (3, 0)) == pytest.approx(4.0, abs=1e-4)


def test_greedy_tie_break():
    """Learner - Ties Go To The First Action"""
    assert greedy_index(np.array([2.0, 1.0, 1.0, 3.0])) == 1
    assert greedy_index(np.array([1.0, 1.0 + 1e-12, 5.0, 0.5 + 0.5])) == 0


class TestTdPlan(object):
    """Test class for the learner's planning step"""

    def setup_method(self):
        """Setup before each method"""
        self.projection = Projection(canonical_map())
        self.model = TallyModel(self.projection)
        self.belief = GridBelief('r4', 2, 3)
        self.policy = GreedyPolicy(None, None, self.projection)

    def test_unknown_task(self):
        """Learner - Unknown Task Parameter"""
        with pytest.raises(UnknownTask):
            td_plan(self.policy, self.model, frozenset(['d9']), QState(self.projection),
                    self.belief)

    def test_no_task(self):
        """Learner - No Task Emits No Action"""
        policy, qstate = td_plan(self.policy, self.model, frozenset(),
                                 QState(self.projection), self.belief)
        assert policy.task is None
        assert greedy_action(policy, self.belief) == frozenset()
        assert qstate.room == 'r4'
        assert qstate.cell == self.projection.index[(2, 3)]

    def test_greedy_toward_door(self):
        """Learner - Greedy Action Toward The Task Door"""
        qstate = QState(self.projection, params=LearnerParams(epsilon=0.0))
        policy, _ = td_plan(self.policy, self.model, frozenset(['d1']), qstate, self.belief)
        assert greedy_action(policy, self.belief) == frozenset(['N'])

    def test_exploration(self):
        """Learner - Exploration Only While Learning"""
        params = LearnerParams(epsilon=1.0)
        policy, qstate = td_plan(self.policy, self.model, frozenset(['d1']),
                                 QState(self.projection, params=params, seed=5), self.belief)
        assert policy.explore is not None
        assert qstate.seed != 5

        policy, qstate = td_plan(self.policy, self.model, frozenset(['d1']),
                                 QState(self.projection, params=params, seed=5,
                                        mode=EVALUATION), self.belief)
        assert policy.explore is None
        assert qstate.seed == 5

    def test_one_step_update(self):
        """Learner - One Step Temporal Difference Backup"""
        model = tally_learn(self.model, GridBelief('r4', 4, 4), frozenset(['E']),
                            GridBelief('r4', 5, 4))
        params = LearnerParams(td_mode=ONE_STEP, alpha=0.5, epsilon=0.0)
        _, qstate = td_plan(self.policy, model, frozenset(['goal']),
                            QState(self.projection, params=params), self.belief)
        pos = self.projection.index[(4, 4)]
        np.testing.assert_allclose(qstate.q[:, pos, 2], 0.5)
        assert qstate.q.sum() == pytest.approx(0.5 * len(self.projection.tasks))


def test_learner_node_initials():
    """Learner Node - Initial Values"""
    node = LearnerNode(canonical_map(), ('r4', 2, 3), seed=3)
    assert node.initial_belief() == GridBelief('r4', 2, 3)
    assert node.initial_policy().task is None
    assert node.initial_transition_model().counts.sum() == 0
    assert node.initial_planning_state().seed == 3
    assert node.describe_belief(node.initial_belief()) == 'r4:2,3'


@given(row=st.lists(st.integers(min_value=0, max_value=1000), min_size=4, max_size=4),
       scale=st.floats(min_value=0.5, max_value=100.0))
def test_greedy_scale_invariant(row, scale):
    """Learner - Scaling A Row Keeps Its Greedy Action"""
    row = np.array(row, dtype=float)
    assert greedy_index(row * scale) == greedy_index(row)
