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
from collections import Counter, namedtuple

import numpy as np

from cog_hierarchy.core.process import process_update
from cog_hierarchy.gridworld.world import WorldState
from cog_hierarchy.learner.qstate import EVALUATION, LEARNING
from cog_hierarchy.scenario.flat import FlatAgent, run_flat_episode
from cog_hierarchy.scenario.scenario import PLANNER, build_hierarchy, learner_seed, \
    reset_episode, run_episode, set_mode
from cog_hierarchy.shared import LOGGER

HIERARCHICAL = 'hierarchical'
FLAT = 'flat'
AGENTS = (HIERARCHICAL, FLAT)

EpisodeRecord = namedtuple('EpisodeRecord', 'episode steps world_steps eval_steps')


class HierarchicalRunner(object):
    """Runs successive episodes of the three-level agent, keeping what it learned"""

    agent = HIERARCHICAL

    def __init__(self, scenario, seed=None):
        self.scenario = scenario
        self.ah = build_hierarchy(scenario, seed)

    def episode(self, mode=LEARNING, observer=None):
        self.ah = reset_episode(self.ah, self.scenario.start)
        steps, self.ah = run_episode(self.ah, self.scenario.params.max_steps, mode, observer)
        return steps


class FlatRunner(object):
    """Runs successive episodes of the flat 450-state baseline"""

    agent = FLAT

    def __init__(self, scenario, seed=None):
        seed = scenario.params.seed if seed is None else seed
        self.scenario = scenario
        self.flat = FlatAgent(scenario.world_map, scenario.learner_params(), learner_seed(seed))
        self.world = WorldState(scenario.world_map, scenario.start, seed)

    def episode(self, mode=LEARNING, observer=None):
        world = WorldState(self.scenario.world_map, self.scenario.start, self.world.rng_seed)
        steps, self.flat, self.world = run_flat_episode(self.flat, world, self.scenario.motion,
                                                        self.scenario.params.max_steps, mode,
                                                        observer)
        return steps


def make_runner(scenario, agent=HIERARCHICAL, seed=None):
    if agent == HIERARCHICAL:
        return HierarchicalRunner(scenario, seed)
    if agent == FLAT:
        return FlatRunner(scenario, seed)
    raise ValueError('unknown agent {!r}, expected one of {}'.format(agent, AGENTS))


def train(runner, episodes, evaluate=True):
    """Alternate learning episodes with greedy evaluation episodes

    Returns:
        [list] EpisodeRecord per learning episode; world_steps accumulates the
            learning steps only
    """
    records = []
    world_steps = 0
    for episode in range(episodes):
        steps = runner.episode(LEARNING)
        world_steps += steps
        eval_steps = runner.episode(EVALUATION) if evaluate else None
        records.append(EpisodeRecord(episode, steps, world_steps, eval_steps))
        LOGGER.debug('%s episode %d: %d steps, evaluation %s', runner.agent, episode, steps,
                     eval_steps)
    return records


def converged(eval_steps, window=50, tolerance=1):
    """True when the last `window` evaluation step counts all sit within
    `tolerance` of the latest one"""
    if len(eval_steps) < window:
        return False
    recent = np.asarray(eval_steps[-window:], dtype=float)
    return bool(np.all(np.abs(recent - recent[-1]) <= tolerance))


def episodes_to_optimum(curves, optimum, tolerance=0.1):
    """First episode whose evaluation steps, averaged over runs, lie within
    `tolerance` (a fraction) of the optimum; None when no episode does

    Args:
        curves (list): Evaluation step counts per episode, one list per run
        optimum (float): Expected steps of the best route
    """
    mean = np.mean(np.asarray(curves, dtype=float), axis=0)
    hits = np.flatnonzero(np.abs(mean - optimum) <= tolerance * optimum)
    return int(hits[0]) if hits.size else None


def train_until_converged(runner, max_episodes, window=50, tolerance=1):
    """Train until converged or max_episodes; returns the EpisodeRecords"""
    records = []
    world_steps = 0
    for episode in range(max_episodes):
        record = train(runner, 1)[0]
        world_steps += record.steps
        records.append(record._replace(episode=episode, world_steps=world_steps))
        if converged([item.eval_steps for item in records], window, tolerance):
            LOGGER.info('%s agent converged after %d episodes', runner.agent, episode + 1)
            break
    else:
        LOGGER.warning('%s agent did not converge within %d episodes', runner.agent,
                       max_episodes)
    return records


def heatmap(runner, trials):
    """Visit counts per (room, x, y) over greedy evaluation trials

    Every world step counts the location it lands on, so the total equals the
    summed trajectory lengths.
    """
    counts = Counter()

    def visit(world):
        counts[tuple(world.robot)] += 1

    lengths = [runner.episode(EVALUATION, visit) for _ in range(trials)]
    return counts, lengths


def learned_plan(runner, cycles=3):
    """The planner's plan from the start of a fresh evaluation episode

    Cycles the hierarchy until the planner holds a plan; the first cycle only
    gives the learner a position to report costs from.

    Returns:
        [tuple] (Plan or None, planner belief it was made from, CostTables it
            was made with)
    """
    ah = set_mode(reset_episode(runner.ah, runner.scenario.start), EVALUATION)
    for _ in range(cycles):
        ah = process_update(ah)
        state = ah.node(PLANNER).planning_state
        if state.plan is not None:
            return state.plan, state.expected[0], state.planned_with
    state = ah.node(PLANNER)
    return None, state.corrected_belief, state.planning_state.costs
