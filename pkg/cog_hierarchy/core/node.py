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
from abc import ABCMeta, abstractmethod

EMPTY = frozenset()


class NodeInterface(metaclass=ABCMeta):
    """Behaviour contract every cognitive node supplies.

    Beliefs, policies, transition models and planning states are opaque
    values owned by the node. Every contract must be a pure function of its
    arguments: any randomness is carried as explicit seed state inside the
    belief or the planning state.
    """

    @abstractmethod
    def observation_update(self, belief, observations):
        """Fold a set of observations into a belief

        Args:
            belief: The node's corrected belief
            observations [frozenset]: Observations gathered from lower nodes

        Returns:
            The new belief
        """

    @abstractmethod
    def transition_apply(self, model, belief, context, actions):
        """Predict the belief that follows from applying actions under context"""

    @abstractmethod
    def transition_learn(self, model, belief, context, actions, corrected):
        """Return the transition model updated with one (belief, actions, corrected) experience"""

    @abstractmethod
    def utility_absorb(self, planning_state, utilities):
        """Install a set of utilities from lower nodes into the planning state"""

    @abstractmethod
    def plan(self, policy, model, task_params, planning_state, belief):
        """Select a new policy

        Returns:
            [tuple] (policy, planning_state)
        """

    @abstractmethod
    def policy_apply(self, policy, belief):
        """Return the frozenset of actions the policy selects for a belief"""

    @abstractmethod
    def initial_belief(self):
        """s0"""

    @abstractmethod
    def initial_policy(self):
        """pi0"""

    @abstractmethod
    def initial_transition_model(self):
        """lambda0"""

    @abstractmethod
    def initial_planning_state(self):
        """rho0"""

    def realize(self, planning_state, belief):
        """Belief the node holds once its action update has run

        Ordinary nodes keep their corrected belief. The world node overrides
        this to surface the state it actuated into.
        """
        return belief

    def describe_belief(self, belief):
        return repr(belief)

    def describe_planning_state(self, planning_state):
        return repr(planning_state)


class IdentityNode(NodeInterface):
    """Node whose every contract is an identity

    Used directly for degenerate hierarchies and as a base for nodes that
    only need to override a few contracts.
    """

    def __init__(self, belief=None, policy=None, model=None, planning_state=None):
        self._belief = belief
        self._policy = policy
        self._model = model
        self._planning_state = planning_state

    def observation_update(self, belief, observations):
        return belief

    def transition_apply(self, model, belief, context, actions):
        return belief

    def transition_learn(self, model, belief, context, actions, corrected):
        return model

    def utility_absorb(self, planning_state, utilities):
        return planning_state

    def plan(self, policy, model, task_params, planning_state, belief):
        return policy, planning_state

    def policy_apply(self, policy, belief):
        return EMPTY

    def initial_belief(self):
        return self._belief

    def initial_policy(self):
        return self._policy

    def initial_transition_model(self):
        return self._model

    def initial_planning_state(self):
        return self._planning_state
