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
from functools import reduce

from cog_hierarchy.core.hierarchy import InvalidHierarchy, Violation, ValidationReport, \
    respects_order, topo_down, topo_up
from cog_hierarchy.shared import LOGGER, LOGGER_DEBUG_ENABLED
from cog_hierarchy.shared.errors import CogHierarchyError


class UnknownNode(CogHierarchyError):
    """Raised when a pass names a node that is not in the active hierarchy"""

    def __init__(self, node_id):
        self.node_id = node_id
        super(UnknownNode, self).__init__('unknown node {!r}'.format(node_id))


def _union(sets):
    result = frozenset()
    for values in sets:
        result = result.union(values)
    return result


def _check(ah, node_id):
    if node_id not in ah:
        raise UnknownNode(node_id)
    return ah.hierarchy.nodes[node_id], ah.node(node_id)


def _actions(ah, node_id):
    active = ah.node(node_id)
    return ah.hierarchy.nodes[node_id].policy_apply(active.policy, active.current_belief)


def _context(ah, node_id):
    return _union(edge.context(ah.node(edge.upper).predicted_belief)
                  for edge in ah.hierarchy.edges_above(node_id))


def prediction_update(ah, node_id):
    """Predict node i's next belief from its current belief, context and policy

    Both the predicted and the corrected slots receive the prediction. The
    world node is left untouched.
    """
    node, active = _check(ah, node_id)
    if node_id == ah.hierarchy.world_node_id:
        return ah

    belief = node.transition_apply(active.transition_model,
                                   active.current_belief,
                                   _context(ah, node_id),
                                   _actions(ah, node_id))
    return ah.replace_node(node_id, predicted_belief=belief, corrected_belief=belief)


def correction_update(ah, node_id):
    """Fold observations sensed from lower neighbours into the corrected belief"""
    node, active = _check(ah, node_id)
    below = ah.hierarchy.edges_below(node_id)
    if node_id == ah.hierarchy.world_node_id or not below:
        return ah

    observations = _union(edge.sensing(ah.node(edge.lower).corrected_belief)
                          for edge in below)
    belief = node.observation_update(active.corrected_belief, observations)
    return ah.replace_node(node_id, corrected_belief=belief)


def transition_learn_update(ah, node_id):
    """Learn from the experience (current belief, actions, corrected belief)"""
    node, active = _check(ah, node_id)
    if node_id == ah.hierarchy.world_node_id:
        return ah

    model = node.transition_learn(active.transition_model,
                                  active.current_belief,
                                  _context(ah, node_id),
                                  _actions(ah, node_id),
                                  active.corrected_belief)
    return ah.replace_node(node_id, transition_model=model)


def utility_update(ah, node_id):
    """Absorb utilities emitted by lower neighbours from their planning states"""
    node, active = _check(ah, node_id)
    if node_id == ah.hierarchy.world_node_id:
        return ah

    utilities = _union(edge.utility(ah.node(edge.lower).planning_state)
                       for edge in ah.hierarchy.edges_below(node_id))
    return ah.replace_node(node_id,
                           planning_state=node.utility_absorb(active.planning_state, utilities))


def action_update(ah, node_id):
    """Replan node i from the task parameters its upper neighbours hand down

    Runs for every node, the world node included: its plan contract is where
    motor commands are actuated.
    """
    node, active = _check(ah, node_id)
    task_params = _union(edge.task_param(_actions(ah, edge.upper))
                         for edge in ah.hierarchy.edges_above(node_id))

    policy, planning_state = node.plan(active.policy,
                                       active.transition_model,
                                       task_params,
                                       active.planning_state,
                                       active.corrected_belief)
    belief = node.realize(planning_state, active.corrected_belief)
    return ah.replace_node(node_id,
                           policy=policy,
                           planning_state=planning_state,
                           current_belief=belief,
                           corrected_belief=belief)


def update_pass(pass_fn, ah, node_sequence):
    """Left fold of a pass function over a node sequence"""
    return reduce(pass_fn, node_sequence, ah)


def _ordering(hierarchy, sequence, upward):
    if sequence is None:
        return topo_up(hierarchy) if upward else topo_down(hierarchy)
    if not respects_order(hierarchy, sequence, upward):
        raise InvalidHierarchy(ValidationReport([Violation(
            'bad_order', tuple(sequence),
            '{} does not respect the {} partial order'.format(
                list(sequence), 'upward' if upward else 'downward'))]))
    return sequence


def process_update(ah, up_order=None, down_order=None):
    """One full cycle of the process model

    Prediction runs down the hierarchy, then correction, transition learning
    and utility updates run up it, and finally the action update runs down.

    Args:
        ah (ActiveHierarchy): The active hierarchy to update
        up_order (list): Optional explicit upward order, defaults to topo_up
        down_order (list): Optional explicit downward order, defaults to topo_down

    Returns:
        [ActiveHierarchy] The updated active hierarchy

    Raises:
        InvalidHierarchy: The hierarchy fails validation or an order is not
            consistent with the graph
    """
    hierarchy = ah.hierarchy
    if not hierarchy.report.is_valid:
        raise InvalidHierarchy(hierarchy.report)

    up_order = _ordering(hierarchy, up_order, True)
    down_order = _ordering(hierarchy, down_order, False)

    ah = update_pass(prediction_update, ah, down_order)
    ah = update_pass(correction_update, ah, up_order)
    ah = update_pass(transition_learn_update, ah, up_order)
    ah = update_pass(utility_update, ah, up_order)
    ah = update_pass(action_update, ah, down_order)

    if LOGGER_DEBUG_ENABLED:
        LOGGER.debug('process update complete:\n%s', dump_active(ah))

    return ah


def dump_active(ah):
    """Line-oriented text dump of every active node, ascending id"""
    lines = []
    for active in ah.active_nodes:
        node = ah.hierarchy.nodes[active.node_id]
        lines.append('node {} CS={} PUS={} CUS={} PS={}'.format(
            active.node_id,
            node.describe_belief(active.current_belief),
            node.describe_belief(active.predicted_belief),
            node.describe_belief(active.corrected_belief),
            node.describe_planning_state(active.planning_state)))
    return '\n'.join(lines)
