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
import heapq

from cog_hierarchy.gridworld.world_map import GOAL
from cog_hierarchy.planner.costs import INFINITY, action_cost
from cog_hierarchy.planner.symbolic import applicable_actions, symbolic_transition
from cog_hierarchy.shared import LOGGER
from cog_hierarchy.shared.errors import CogHierarchyError
from cog_hierarchy.shared.stats import time_me

PlanStep = namedtuple('PlanStep', 'action time cost')


class NoPlan(CogHierarchyError):
    """The goal cannot be reached within the horizon at finite cost"""

    def __init__(self, belief, horizon):
        self.belief = belief
        self.horizon = horizon
        super(NoPlan, self).__init__('no plan reaches the goal from {} within {} steps'.format(
            belief, horizon))


class Plan(namedtuple('Plan', 'steps total_cost horizon')):
    """Sequence of PlanSteps with consecutive times from 0"""
    __slots__ = ()

    @property
    def actions(self):
        return tuple(step.action for step in self.steps)

    def __len__(self):
        return len(self.steps)

    def beliefs(self, start, graph):
        """Beliefs the plan passes through, start included"""
        result = [start]
        for step in self.steps:
            result.append(symbolic_transition(result[-1], step.action, graph))
        return result


def _build(actions, step_costs, horizon):
    steps = tuple(PlanStep(action, time, cost)
                  for time, (action, cost) in enumerate(zip(actions, step_costs)))
    return Plan(steps, sum(step_costs), horizon)


@time_me
def plan_min_cost(belief, graph, costs, horizon):
    """Minimum cost plan reaching at(room, goal) in at most `horizon` actions

    Uniform-cost search keyed on (cost, length, actions). Every extension of a
    plan has a strictly larger key, so the first goal popped wins the tie-break
    too. A (room, feature, length) state is expanded once.

    Raises:
        NoPlan: no finite cost plan within the horizon
        ValueError: horizon below 1
    """
    if horizon < 1:
        raise ValueError('planning horizon must be at least 1, got {}'.format(horizon))

    if belief.feature == GOAL:
        return Plan((), 0, horizon)

    frontier = [(0, 0, (), (), belief)]
    expanded = set()
    while frontier:
        cost, length, actions, step_costs, current = heapq.heappop(frontier)
        if current.feature == GOAL:
            LOGGER.debug('Plan from %s: %s (cost %s)', belief, ', '.join(actions), cost)
            return _build(actions, step_costs, horizon)

        if (current, length) in expanded or length == horizon:
            continue
        expanded.add((current, length))

        for action in applicable_actions(current, graph):
            step = action_cost(current, action, costs)
            if step == INFINITY:
                continue
            heapq.heappush(frontier, (cost + step, length + 1, actions + (action,),
                                      step_costs + (step,),
                                      symbolic_transition(current, action, graph)))

    raise NoPlan(belief, horizon)


def enumerate_plans(belief, graph, horizon):
    """Every applicable action sequence of length <= horizon ending at the goal

    The walk stops at the first arrival on the goal, so no sequence continues
    past it.
    """
    if belief.feature == GOAL:
        return [()]

    found = []
    stack = [(belief, ())]
    while stack:
        current, actions = stack.pop()
        if len(actions) == horizon:
            continue
        for action in applicable_actions(current, graph):
            following = symbolic_transition(current, action, graph)
            if following.feature == GOAL:
                found.append(actions + (action,))
            else:
                stack.append((following, actions + (action,)))
    return found


def sequence_cost(belief, actions, graph, costs):
    """Total cost of executing actions from belief"""
    total = 0
    current = belief
    for action in actions:
        total += action_cost(current, action, costs)
        current = symbolic_transition(current, action, graph)
    return total


def render_plan(plan):
    """Plan dump: one `t:<action>:<cost>` line per step and a `cost:<int>` total"""
    lines = ['{}:{}:{}'.format(step.time, step.action, step.cost) for step in plan.steps]
    lines.append('cost:{}'.format(plan.total_cost))
    return '\n'.join(lines) + '\n'


def plan_room_sequence(plan, start, graph):
    """Rooms visited by executing a plan from start, consecutive repeats dropped"""
    rooms = []
    for belief in plan.beliefs(start, graph):
        if not rooms or rooms[-1] != belief.room:
            rooms.append(belief.room)
    return tuple(rooms)
