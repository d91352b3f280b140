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
from cog_hierarchy.core import FunctionTuple, Hierarchy, NodeInterface

MODULUS = 1000003


def _total(values):
    return sum(values) % MODULUS


class ArithmeticNode(NodeInterface):
    """Deterministic node whose contracts mix their integer arguments"""

    def __init__(self, node_id):
        self.node_id = node_id

    def observation_update(self, belief, observations):
        return (belief * 31 + _total(observations)) % MODULUS

    def transition_apply(self, model, belief, context, actions):
        return (belief + model * 3 + _total(context) * 5 + _total(actions) * 7) % MODULUS

    def transition_learn(self, model, belief, context, actions, corrected):
        return (model + belief * 11 + corrected * 13 + _total(context)) % MODULUS

    def utility_absorb(self, planning_state, utilities):
        return (planning_state * 17 + _total(utilities)) % MODULUS

    def plan(self, policy, model, task_params, planning_state, belief):
        policy = (policy * 19 + model + belief + _total(task_params)) % MODULUS
        return policy, (planning_state + policy) % MODULUS

    def policy_apply(self, policy, belief):
        return frozenset([(policy + belief) % 97])

    def initial_belief(self):
        return self.node_id + 1

    def initial_policy(self):
        return self.node_id + 2

    def initial_transition_model(self):
        return self.node_id + 3

    def initial_planning_state(self):
        return self.node_id + 4


class ArithmeticWorld(ArithmeticNode):
    """World node whose belief is whatever its plan contract produced"""

    def realize(self, planning_state, belief):
        return planning_state


def arithmetic_edge(lower, upper):
    return FunctionTuple(lower, upper,
                         sensing=lambda belief: frozenset([belief % 101]),
                         context=lambda belief: frozenset([belief % 7]),
                         utility=lambda state: frozenset([state % 13]),
                         task_param=lambda actions: frozenset((a * 3) % 11 for a in actions))


def arithmetic_hierarchy(node_ids, links, world=0):
    """Hierarchy of arithmetic nodes over (lower, upper) links"""
    nodes = {node_id: (ArithmeticWorld if node_id == world else ArithmeticNode)(node_id)
             for node_id in node_ids}
    return Hierarchy(nodes, world, [arithmetic_edge(lower, upper) for lower, upper in links])


def chain(length):
    """0 -> 1 -> ... -> length - 1"""
    return arithmetic_hierarchy(range(length), [(i, i + 1) for i in range(length - 1)])


def random_dag(rng, size):
    """A valid random hierarchy: node 0 is the world and the only source

    Node ids are shuffled against the topological rank so ascending ids are
    not already an order.
    """
    ids = list(range(1, size))
    rng.shuffle(ids)
    ranked = [0] + ids
    links = set()
    for rank in range(1, size):
        links.add((ranked[rng.randrange(rank)], ranked[rank]))
        for lower_rank in range(rank):
            if rng.random() < 0.3:
                links.add((ranked[lower_rank], ranked[rank]))
    return arithmetic_hierarchy(range(size), sorted(links))


def random_order(rng, hierarchy, upward=True):
    """A random linear extension of the sensing (or task-parameter) order"""
    pending = {node_id: 0 for node_id in hierarchy.nodes}
    for edge in hierarchy.edges:
        pending[edge.upper if upward else edge.lower] += 1
    ready = sorted(node_id for node_id, count in pending.items() if count == 0)
    order = []
    while ready:
        node_id = ready.pop(rng.randrange(len(ready)))
        order.append(node_id)
        following = (hierarchy.edges_above(node_id) if upward
                     else hierarchy.edges_below(node_id))
        for edge in following:
            target = edge.upper if upward else edge.lower
            pending[target] -= 1
            if pending[target] == 0:
                ready.append(target)
    return order
