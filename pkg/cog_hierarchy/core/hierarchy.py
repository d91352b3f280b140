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

import networkx as nx

from cog_hierarchy.core.node import EMPTY
from cog_hierarchy.shared.errors import CogHierarchyError


def nothing(_value):
    """Edge map that returns the empty set"""
    return EMPTY


class FunctionTuple(namedtuple('FunctionTuple',
                               'lower upper sensing context utility task_param')):
    """The four maps on one hierarchy edge

    sensing and utility point up the edge (lower -> upper); context and
    task_param point down it (upper -> lower).
    """
    __slots__ = ()

    def __new__(cls, lower, upper, sensing=nothing, context=nothing,
                utility=nothing, task_param=nothing):
        return super(FunctionTuple, cls).__new__(
            cls, lower, upper, sensing, context, utility, task_param)


Violation = namedtuple('Violation', 'kind ids message')


class ValidationReport(object):
    """Violations found while checking a hierarchy; empty when valid"""

    def __init__(self, violations=()):
        self.violations = tuple(violations)

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def __eq__(self, other):
        return isinstance(other, ValidationReport) and self.violations == other.violations

    def __repr__(self):
        return 'ValidationReport({!r})'.format(self.violations)

    @property
    def is_valid(self):
        return not self.violations

    def kinds(self):
        return {violation.kind for violation in self.violations}

    def lines(self):
        return ['[{}] {}: {}'.format(v.kind, ','.join(str(i) for i in v.ids), v.message)
                for v in self.violations]


class InvalidHierarchy(CogHierarchyError):
    """Raised when a pass or ordering is requested on an invalid hierarchy"""

    def __init__(self, report):
        self.report = report
        super(InvalidHierarchy, self).__init__('; '.join(report.lines()))


class Hierarchy(object):
    """A cognitive hierarchy: nodes, the world node N0, and the edge maps

    Args:
        nodes (dict): node id -> NodeInterface
        world_node_id (int): id of the external world node
        edges (iterable): FunctionTuple values
    """

    def __init__(self, nodes, world_node_id, edges=()):
        self.nodes = dict(nodes)
        self.world_node_id = world_node_id
        self.edges = tuple(edges)
        self._report = None
        self._orders = {}
        self.index = {node_id: pos for pos, node_id in enumerate(sorted(self.nodes))}
        self._above = {node_id: [] for node_id in self.nodes}
        self._below = {node_id: [] for node_id in self.nodes}
        for edge in self.edges:
            if edge.lower in self._above:
                self._above[edge.lower].append(edge)
            if edge.upper in self._below:
                self._below[edge.upper].append(edge)

    def __repr__(self):
        return 'Hierarchy(nodes={}, world={}, edges={})'.format(
            sorted(self.nodes), self.world_node_id,
            [(edge.lower, edge.upper) for edge in self.edges])

    def edges_above(self, node_id):
        """Edges to upper neighbours of a node"""
        return self._above.get(node_id, ())

    def edges_below(self, node_id):
        """Edges to lower neighbours of a node"""
        return self._below.get(node_id, ())

    def upward_graph(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from((edge.lower, edge.upper) for edge in self.edges)
        return graph

    def downward_graph(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from((edge.upper, edge.lower) for edge in self.edges)
        return graph

    @property
    def report(self):
        if self._report is None:
            self._report = validate(self)
        return self._report

    def order(self, upward):
        if upward not in self._orders:
            if not self.report.is_valid:
                raise InvalidHierarchy(self.report)
            graph = self.upward_graph() if upward else self.downward_graph()
            self._orders[upward] = tuple(nx.lexicographical_topological_sort(graph))
        return self._orders[upward]


def _edge_violations(hierarchy):
    seen = set()
    for edge in hierarchy.edges:
        ids = (edge.lower, edge.upper)
        missing = [node_id for node_id in ids if node_id not in hierarchy.nodes]
        if missing:
            yield Violation('unknown_node', tuple(missing),
                            'edge {}->{} references unknown nodes'.format(*ids))
        if edge.lower == edge.upper:
            yield Violation('cycle', ids, 'self loop on node {}'.format(edge.lower))
        if ids in seen:
            yield Violation('duplicate_edge', ids, 'edge {}->{} declared twice'.format(*ids))
        seen.add(ids)
        for name in ('sensing', 'context', 'utility', 'task_param'):
            if not callable(getattr(edge, name)):
                yield Violation('converse', ids,
                                'edge {}->{} has no callable {} map'.format(
                                    edge.lower, edge.upper, name))


def validate(hierarchy):
    """Check the structural properties a hierarchy must satisfy

    Sensing edges must form a DAG whose unique source is the world node, and
    every edge must carry the downward maps so the task-parameter graph is the
    exact converse with the world node as its unique sink. Never raises and
    never mutates the hierarchy.

    Args:
        hierarchy (Hierarchy): The hierarchy to check

    Returns:
        [ValidationReport] Empty when the hierarchy is valid
    """
    violations = list(_edge_violations(hierarchy))
    world = hierarchy.world_node_id

    if world not in hierarchy.nodes:
        violations.append(Violation('missing_world', (world,),
                                    'world node {} is not a node'.format(world)))

    graph = nx.DiGraph()
    graph.add_nodes_from(hierarchy.nodes)
    graph.add_edges_from((edge.lower, edge.upper) for edge in hierarchy.edges
                         if edge.lower in hierarchy.nodes and edge.upper in hierarchy.nodes
                         and edge.lower != edge.upper)

    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        ids = tuple(sorted({node for edge in cycle for node in edge[:2]}))
        violations.append(Violation('cycle', ids,
                                    'sensing edges form a cycle through {}'.format(list(ids))))

    sources = sorted(node for node, degree in graph.in_degree() if degree == 0)
    if world in hierarchy.nodes and world not in sources:
        violations.append(Violation('world_not_source', (world,),
                                    'world node {} has incoming sensing edges'.format(world)))
    extra = tuple(node for node in sources if node != world)
    if extra:
        violations.append(Violation('extra_source', extra,
                                    'nodes {} have no incoming sensing edge'.format(list(extra))))

    # The downward graph is the converse of the upward one, so its sinks are
    # the upward sources; report when the world node is not the only one.
    if extra or (world in hierarchy.nodes and world not in sources):
        violations.append(Violation('world_not_sink', (world,) + extra,
                                    'world node {} is not the unique sink of the '
                                    'task-parameter graph'.format(world)))

    return ValidationReport(violations)


def topo_up(hierarchy):
    """Node ids ordered so every sensing edge goes forward; ties by ascending id

    Raises:
        InvalidHierarchy: The hierarchy fails validation
    """
    return list(hierarchy.order(True))


def topo_down(hierarchy):
    """Node ids ordered along the task-parameter graph; ties by ascending id"""
    return list(hierarchy.order(False))


def respects_order(hierarchy, sequence, upward=True):
    """True when sequence is a permutation of the nodes that respects the partial order"""
    if sorted(sequence) != sorted(hierarchy.nodes):
        return False
    position = {node_id: index for index, node_id in enumerate(sequence)}
    for edge in hierarchy.edges:
        first, second = (edge.lower, edge.upper) if upward else (edge.upper, edge.lower)
        if position[first] > position[second]:
            return False
    return True
