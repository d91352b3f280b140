from cog_hierarchy.learner.model import ACTIONS, Crossing, GridBelief, Projection, TallyModel, \
    empirical_probs, obs_update_1, predict_next, tally_learn
from cog_hierarchy.learner.node import LearnerNode
from cog_hierarchy.learner.qstate import EVALUATION, LEARNING, GreedyPolicy, LearnerParams, \
    QState, UnknownTask, greedy_action, td_plan
