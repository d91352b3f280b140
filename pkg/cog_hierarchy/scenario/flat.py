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
import copy

import numpy as np

from cog_hierarchy.gridworld.motion import draw_choice, draw_uniform
from cog_hierarchy.gridworld.world import step_world
from cog_hierarchy.gridworld.world_map import DIRECTIONS
from cog_hierarchy.learner.model import blend_prior
from cog_hierarchy.learner.qstate import LEARNING, TIE_TOLERANCE, LearnerParams
from cog_hierarchy.shared import LOGGER
from cog_hierarchy.shared.stats import time_me

MOVES = tuple(DIRECTIONS)
STAY = len(MOVES)
FLAT_SLOTS = STAY + 1


class FlatAgent(object):
    """Undecomposed learner: one goal table over every (room, x, y) location

    Successor slots are the four moves (crossings included) and staying put.

    Args:
        world_map (WorldMap): The full map
        params (LearnerParams): Same hyperparameters as the grid-level learner
        seed (int): Exploration seed
    """

    def __init__(self, world_map, params=None, seed=0, counts=None, q=None):
        self.world_map = world_map
        self.params = params or LearnerParams()
        self.seed = seed
        self.locations = tuple(world_map.locations())
        self.index = {location: pos for pos, location in enumerate(self.locations)}
        size = len(self.locations)

        self.successors = np.zeros((size, FLAT_SLOTS), dtype=int)
        self.prior = np.zeros((size, len(MOVES), FLAT_SLOTS))
        for pos, location in enumerate(self.locations):
            for slot, vector in enumerate(DIRECTIONS.values()):
                successor, _ = world_map.move(location, vector)
                self.successors[pos, slot] = self.index[successor]
            self.successors[pos, STAY] = pos
            for action in range(len(MOVES)):
                self.prior[pos, action, self.slot_of(pos, self.successors[pos, action])] = 1.0

        goal_room, (x, y) = world_map.goal
        self.goal = self.index[(goal_room, x, y)]
        self.counts = (np.zeros((size, len(MOVES), FLAT_SLOTS), dtype=np.int64)
                       if counts is None else counts)
        self.q = np.zeros((size, len(MOVES))) if q is None else q

    @property
    def size(self):
        return len(self.locations)

    def slot_of(self, pos, successor):
        for slot in range(FLAT_SLOTS):
            if self.successors[pos, slot] == successor:
                return slot
        return None

    def replace(self, **fields):
        """Copy with new params, seed, counts or q; the map tables are shared"""
        agent = copy.copy(self)
        for name, value in fields.items():
            if name not in ('params', 'seed', 'counts', 'q'):
                raise AttributeError(name)
            setattr(agent, name, value)
        return agent

    def probabilities(self):
        return blend_prior(self.counts, self.prior)


def flat_learn(agent, before, action, after):
    """Tally one (location, action, location) experience"""
    pos = agent.index[tuple(before)]
    slot = agent.slot_of(pos, agent.index.get(tuple(after)))
    if slot is None:
        return agent
    counts = agent.counts.copy()
    counts[pos, MOVES.index(action), slot] += 1
    return agent.replace(counts=counts)


def flat_value_iteration(agent):
    """Warm-started value iteration of the goal table on the learned model"""
    params = agent.params
    probs = agent.probabilities()
    q = agent.q
    for _ in range(params.sweep_cap):
        values = q.min(axis=1)
        updated = 1.0 + params.gamma * np.einsum('sak,sk->sa', probs, values[agent.successors])
        updated[agent.goal, :] = 0.0
        delta = np.max(np.abs(updated - q))
        q = updated
        if delta < params.tolerance:
            return agent.replace(q=q)
    LOGGER.warning('Flat value iteration did not converge within %d sweeps (residual %g)',
                   params.sweep_cap, delta)
    return agent.replace(q=q)


def flat_action(agent, location, mode=LEARNING):
    """Greedy (or epsilon-exploring) move name and the agent with its next seed"""
    seed = agent.seed
    if mode == LEARNING and agent.params.epsilon > 0.0:
        draw, seed = draw_uniform(seed)
        if draw < agent.params.epsilon:
            choice, seed = draw_choice(seed, len(MOVES))
            return MOVES[choice], agent.replace(seed=seed)
    row = agent.q[agent.index[tuple(location)]]
    best = int(np.flatnonzero(row <= row.min() + TIE_TOLERANCE)[0])
    return MOVES[best], agent.replace(seed=seed)


@time_me
def run_flat_episode(agent, world, motion, max_steps, mode=LEARNING, observer=None):
    """Drive the world with the flat agent until the goal or max_steps

    Returns:
        [tuple] (steps, agent, final WorldState)
    """
    goal_room, (x, y) = world.world_map.goal
    goal = (goal_room, x, y)
    steps = 0
    while world.robot != goal and steps < max_steps:
        agent = flat_value_iteration(agent)
        action, agent = flat_action(agent, world.robot, mode)
        stepped = step_world(world, motion, DIRECTIONS[action])
        agent = flat_learn(agent, world.robot, action, stepped.robot)
        world = stepped
        steps += 1
        if observer is not None:
            observer(world)
    return steps, agent, world
