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
from cog_hierarchy.core.node import NodeInterface
from cog_hierarchy.learner.model import GridBelief, Projection, TallyModel, obs_update_1, \
    predict_next, tally_learn
from cog_hierarchy.learner.qstate import GreedyPolicy, LearnerParams, QState, greedy_action, \
    td_plan


class LearnerNode(NodeInterface):
    """Grid-level node: tally transition model, per-task cost tables, greedy policy

    Args:
        world_map (WorldMap): Map whose projected room grid the node learns over
        start (tuple): Initial (room, x, y) belief
        params (LearnerParams): Hyperparameters
        seed (int): Exploration seed
    """

    def __init__(self, world_map, start, params=None, seed=0):
        self.projection = Projection(world_map)
        self.start = GridBelief(*start)
        self.params = params or LearnerParams()
        self.seed = seed

    def observation_update(self, belief, observations):
        return obs_update_1(belief, observations)

    def transition_apply(self, model, belief, context, actions):
        return predict_next(model, belief, context, actions)

    def transition_learn(self, model, belief, context, actions, corrected):
        return tally_learn(model, belief, actions, corrected)

    def utility_absorb(self, planning_state, utilities):
        return planning_state

    def plan(self, policy, model, task_params, planning_state, belief):
        return td_plan(policy, model, task_params, planning_state, belief)

    def policy_apply(self, policy, belief):
        return greedy_action(policy, belief)

    def initial_belief(self):
        return self.start

    def initial_policy(self):
        return GreedyPolicy(None, None, self.projection)

    def initial_transition_model(self):
        return TallyModel(self.projection)

    def initial_planning_state(self):
        return QState(self.projection, params=self.params, seed=self.seed)

    def describe_belief(self, belief):
        return '{}:{},{}'.format(*belief)

    def describe_planning_state(self, planning_state):
        return '{}@{}'.format(planning_state.mode, planning_state.cell)
