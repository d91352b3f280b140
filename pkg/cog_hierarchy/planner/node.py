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

from cog_hierarchy.core.node import EMPTY, NodeInterface
from cog_hierarchy.gridworld.world_map import GOAL
from cog_hierarchy.planner.search import plan_min_cost
from cog_hierarchy.planner.symbolic import Inapplicable, symbolic_transition
from cog_hierarchy.shared import LOGGER

DEFAULT_HORIZON = 10

PlannerPolicy = namedtuple('PlannerPolicy', 'action')


class PlannerState(namedtuple('PlannerState', 'costs plan cursor expected planned_with')):
    """Cost tables, the current plan and where execution is within it

    `expected` holds the beliefs the plan passes through and `planned_with`
    the cost tables the plan was computed from.
    """
    __slots__ = ()

    def __new__(cls, costs=None, plan=None, cursor=0, expected=(), planned_with=None):
        return super(PlannerState, cls).__new__(cls, costs, plan, cursor, expected, planned_with)

    def current_action(self):
        if self.plan is None or self.cursor >= len(self.plan):
            return None
        return self.plan.steps[self.cursor].action


def observation_replace(belief, observations):
    """The observation becomes the belief; no observation keeps the prior one"""
    if not observations:
        return belief
    return sorted(observations)[0]


def replan(graph, horizon, planning_state, belief):
    """Fresh plan from belief with the installed costs"""
    plan = plan_min_cost(belief, graph, planning_state.costs, horizon)
    return planning_state._replace(plan=plan, cursor=0, expected=tuple(plan.beliefs(belief, graph)),
                                   planned_with=planning_state.costs)


def follow(graph, horizon, planning_state, belief):
    """Keep, advance or recompute the plan for the corrected belief"""
    state = planning_state
    if state.plan is not None and state.planned_with == state.costs:
        if state.expected[state.cursor] == belief:
            return state
        if state.cursor + 1 < len(state.expected) and state.expected[state.cursor + 1] == belief:
            return state._replace(cursor=state.cursor + 1)
        LOGGER.debug('Belief %s diverges from plan, replanning', belief)
    return replan(graph, horizon, state, belief)


class PlannerNode(NodeInterface):
    """Room-level node planning minimum cost routes over a fixed room graph

    Args:
        graph (RoomGraph): Fixed transition relation
        horizon (int): Maximum number of plan actions
        start (SymbolicBelief): Initial belief
    """

    def __init__(self, graph, horizon=DEFAULT_HORIZON, start=None):
        if horizon < 1:
            raise ValueError('planning horizon must be at least 1, got {}'.format(horizon))
        self.graph = graph
        self.horizon = horizon
        self.start = start

    def observation_update(self, belief, observations):
        return observation_replace(belief, observations)

    def transition_apply(self, model, belief, context, actions):
        if len(actions) != 1:
            return belief
        try:
            return symbolic_transition(belief, next(iter(actions)), model)
        except Inapplicable:
            return belief

    def transition_learn(self, model, belief, context, actions, corrected):
        return model

    def utility_absorb(self, planning_state, utilities):
        if not utilities:
            return planning_state
        # A single lower neighbour contributes a single table pair
        return planning_state._replace(costs=sorted(utilities, key=repr)[0])

    def plan(self, policy, model, task_params, planning_state, belief):
        if belief is None or belief.feature == GOAL or planning_state.costs is None:
            return PlannerPolicy(None), planning_state
        state = follow(model, self.horizon, planning_state, belief)
        return PlannerPolicy(state.current_action()), state

    def policy_apply(self, policy, belief):
        if policy.action is None or belief is None or belief.feature == GOAL:
            return EMPTY
        return frozenset([policy.action])

    def initial_belief(self):
        return self.start

    def initial_policy(self):
        return PlannerPolicy(None)

    def initial_transition_model(self):
        return self.graph

    def initial_planning_state(self):
        return PlannerState()

    def describe_belief(self, belief):
        return str(belief)

    def describe_planning_state(self, planning_state):
        action = planning_state.current_action()
        return '{}#{}'.format(action or '-', planning_state.cursor)


def planner_as_node(graph, horizon=DEFAULT_HORIZON, start=None):
    return PlannerNode(graph, horizon, start)
