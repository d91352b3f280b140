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
from hypothesis import HealthCheck, assume, given, settings, strategies as st
import pytest

from cog_hierarchy.planner import MV_GOAL, CostTables, NoPlan, PlannerNode, PlannerPolicy, \
    PlannerState, SymbolicBelief, planner_as_node
from cog_hierarchy.planner.node import follow, observation_replace, replan

from unit.cog_hierarchy_planner.helpers import canonical_graph, room_beliefs, uniform_costs

START = SymbolicBelief('r4', 'unkn')


class TestPlannerNode(object):
    """Test class for the room level planner node"""

    def setup_method(self):
        """Setup before each method"""
        self.graph = canonical_graph()
        self.node = planner_as_node(self.graph, 10, START)
        self.costs = uniform_costs(self.graph)
        self.state = self.node.utility_absorb(self.node.initial_planning_state(),
                                              frozenset([self.costs]))

    def _plan(self, state, belief):
        return self.node.plan(self.node.initial_policy(), self.graph, frozenset(), state,
                              belief)

    def test_initials(self):
        """Planner Node - Initial Values"""
        assert self.node.initial_belief() == START
        assert self.node.initial_policy() == PlannerPolicy(None)
        assert self.node.initial_transition_model() is self.graph
        assert self.node.initial_planning_state() == PlannerState()

    def test_bad_horizon(self):
        """Planner Node - Horizon Below One"""
        with pytest.raises(ValueError):
            PlannerNode(self.graph, 0)

    def test_absorb(self):
        """Planner Node - Utilities Install The Cost Tables"""
        assert self.state.costs == self.costs
        unchanged = self.node.utility_absorb(self.state, frozenset())
        assert unchanged is self.state

    def test_no_costs(self):
        """Planner Node - No Plan Before Any Costs Arrive"""
        policy, state = self._plan(PlannerState(), START)
        assert policy == PlannerPolicy(None)
        assert self.node.policy_apply(policy, START) == frozenset()
        assert state == PlannerState()

    def test_first_plan(self):
        """Planner Node - Plan And Emit The First Action"""
        policy, state = self._plan(self.state, START)
        assert policy == PlannerPolicy('trv(d4)')
        assert self.node.policy_apply(policy, START) == frozenset(['trv(d4)'])
        assert state.cursor == 0
        assert state.planned_with == self.costs
        assert state.expected == (START, SymbolicBelief('r5', 'd3'), SymbolicBelief('r3', 'd5'),
                                  SymbolicBelief('r3', 'goal'))
        assert self.node.describe_planning_state(state) == 'trv(d4)#0'

    def test_follow_plan(self):
        """Planner Node - Advance Along The Plan"""
        _, state = self._plan(self.state, START)
        unchanged_policy, unchanged = self._plan(state, START)
        assert unchanged is state
        assert unchanged_policy == PlannerPolicy('trv(d4)')

        policy, advanced = self._plan(state, SymbolicBelief('r5', 'd3'))
        assert advanced.plan is state.plan
        assert advanced.cursor == 1
        assert policy == PlannerPolicy('trv(d2)')

        policy, advanced = self._plan(advanced, SymbolicBelief('r3', 'd5'))
        assert advanced.cursor == 2
        assert policy == PlannerPolicy(MV_GOAL)

    def test_replan_after_slip(self):
        """Planner Node - Unexpected Belief Triggers A Replan"""
        _, state = self._plan(self.state, START)
        slipped = SymbolicBelief('r4', 'd4')
        policy, replanned = self._plan(state, slipped)
        assert replanned.cursor == 0
        assert replanned.expected[0] == slipped
        assert replanned.plan.total_cost == 2
        assert policy == PlannerPolicy('trv(d4)')

    def test_replan_on_new_costs(self):
        """Planner Node - Changed Costs Trigger A Replan"""
        _, state = self._plan(self.state, START)
        dearer = uniform_costs(self.graph, value=2)
        state = self.node.utility_absorb(state, frozenset([dearer]))
        _, replanned = self._plan(state, START)
        assert replanned.planned_with == dearer
        assert replanned.plan.total_cost == 6

    def test_at_goal(self):
        """Planner Node - Nothing To Do At The Goal"""
        goal = SymbolicBelief('r3', 'goal')
        policy, _ = self._plan(self.state, goal)
        assert policy == PlannerPolicy(None)
        assert self.node.policy_apply(PlannerPolicy(MV_GOAL), goal) == frozenset()

    def test_transition_apply(self):
        """Planner Node - Predicted Beliefs"""
        apply = self.node.transition_apply
        assert apply(self.graph, START, None, frozenset(['trv(d1)'])) == \
            SymbolicBelief('r1', 'd6')
        assert apply(self.graph, START, None, frozenset([MV_GOAL])) == START
        assert apply(self.graph, START, None, frozenset()) == START

    def test_observation_replace(self):
        """Planner Node - Observation Replaces The Belief"""
        assert observation_replace(START, frozenset()) == START
        assert observation_replace(START, frozenset([SymbolicBelief('r1', 'd6')])) == \
            SymbolicBelief('r1', 'd6')
        assert self.node.describe_belief(START) == 'at(r4,unkn)'


GRAPH = canonical_graph()
COSTS = st.integers(min_value=0, max_value=20)
FEATURE_PAIRS = [(first, second) for first in GRAPH.features() for second in GRAPH.features()
                 if first != second]


@st.composite
def cost_tables(draw):
    """Integer cost tables with arbitrary entries missing"""
    return CostTables(ctf=draw(st.dictionaries(st.sampled_from(GRAPH.features()), COSTS)),
                      cbf=draw(st.dictionaries(st.sampled_from(FEATURE_PAIRS), COSTS)))


@settings(max_examples=50, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(costs=cost_tables(), belief=st.sampled_from(room_beliefs(GRAPH)))
def test_follow_unchanged_belief(costs, belief):
    """Planner Node - Same Belief And Costs Keep The Plan"""
    try:
        state = follow(GRAPH, 6, PlannerState(costs), belief)
    except NoPlan:
        assume(False)
    assert follow(GRAPH, 6, state, belief) is state
    assert replan(GRAPH, 6, state, belief) == state
