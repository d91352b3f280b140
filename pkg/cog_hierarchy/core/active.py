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

ActiveNode = namedtuple('ActiveNode', ['node_id',
                                       'transition_model',
                                       'policy',
                                       'current_belief',
                                       'predicted_belief',
                                       'corrected_belief',
                                       'planning_state'])


class ActiveHierarchy(namedtuple('ActiveHierarchy', 'hierarchy active_nodes')):
    """A hierarchy paired with exactly one ActiveNode per node

    active_nodes is a tuple of ActiveNode sorted by node id; values are never
    mutated, passes build new ActiveHierarchy values with `replace_node`.
    """
    __slots__ = ()

    def node(self, node_id):
        return self.active_nodes[self.hierarchy_index(node_id)]

    def hierarchy_index(self, node_id):
        return self.hierarchy.index[node_id]

    def replace_node(self, node_id, **fields):
        index = self.hierarchy_index(node_id)
        nodes = list(self.active_nodes)
        nodes[index] = nodes[index]._replace(**fields)
        return self._replace(active_nodes=tuple(nodes))

    def __contains__(self, node_id):
        return node_id in self.hierarchy.nodes


def initial_active_node(node_id, node):
    belief = node.initial_belief()
    return ActiveNode(node_id=node_id,
                      transition_model=node.initial_transition_model(),
                      policy=node.initial_policy(),
                      current_belief=belief,
                      predicted_belief=belief,
                      corrected_belief=belief,
                      planning_state=node.initial_planning_state())


def initial_active_hierarchy(hierarchy):
    """Every node starts from its initial model, policy, belief and planning state"""
    return ActiveHierarchy(
        hierarchy=hierarchy,
        active_nodes=tuple(initial_active_node(node_id, hierarchy.nodes[node_id])
                           for node_id in sorted(hierarchy.nodes)))
