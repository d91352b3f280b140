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
import csv
from collections import namedtuple

from cog_hierarchy.core.node import IdentityNode
from cog_hierarchy.gridworld.motion import draw_uniform
from cog_hierarchy.gridworld.world_map import DIRECTION_NAMES
from cog_hierarchy.shared.errors import CogHierarchyError

TRAJECTORY_HEADER = ['t', 'room', 'x', 'y', 'command', 'actual_dir']


class InvalidCommand(CogHierarchyError):
    """Raised for a motor command that is not a single unit vector"""

    def __init__(self, command):
        self.command = command
        super(InvalidCommand, self).__init__('invalid motor command {!r}'.format(command))


class InvalidStart(CogHierarchyError):
    """Raised when a start is not a free cell or sits on a doorway"""

    def __init__(self, location, reason='is not a free cell'):
        self.location = location
        super(InvalidStart, self).__init__('start {!r} {}'.format(location, reason))


class WorldState(namedtuple('WorldState', ['world_map',
                                           'robot',
                                           'rng_seed',
                                           't',
                                           'command',
                                           'actual'])):
    """The simulated world: map, robot location (room, x, y) and the seed of
    its next random draw. command/actual record the last step for logging."""
    __slots__ = ()

    def __new__(cls, world_map, robot, rng_seed=0, t=0, command=None, actual=None):
        return super(WorldState, cls).__new__(cls, world_map, tuple(robot), int(rng_seed),
                                              t, command, actual)

    def __repr__(self):
        return 'WorldState(robot={}, t={}, seed={})'.format(self.robot, self.t, self.rng_seed)


def step_world(state, motion, command):
    """Advance the robot one stochastic step

    Args:
        state (WorldState): The current world
        motion (MotionModel): Slip model
        command (tuple): One of the four unit vectors, or None for no movement

    Returns:
        [WorldState] The world after the step; unchanged (seed included) when
            command is None

    Raises:
        InvalidCommand: command is not a unit vector
    """
    if command is None:
        return state
    if command not in DIRECTION_NAMES:
        raise InvalidCommand(command)

    draw, next_seed = draw_uniform(state.rng_seed)
    actual = motion.pick(command, draw)
    robot, _ = state.world_map.move(state.robot, actual)
    return state._replace(robot=robot,
                          rng_seed=next_seed,
                          t=state.t + 1,
                          command=DIRECTION_NAMES[command],
                          actual=DIRECTION_NAMES[actual])


def sense_world(state):
    """Exact robot location (room, x, y)"""
    return state.robot


class WorldNode(IdentityNode):
    """The external world as the lowest node of the hierarchy

    Its belief and planning state are both the WorldState. The action update
    hands it the motor vectors sent down by the learner; plan steps the world
    and realize surfaces the stepped world as the node's belief.
    """

    def __init__(self, state, motion):
        super(WorldNode, self).__init__(belief=state, planning_state=state)
        self.motion = motion

    def plan(self, policy, model, task_params, planning_state, belief):
        commands = sorted(task_params)
        if not commands:
            return policy, belief
        if len(commands) > 1:
            raise InvalidCommand(tuple(commands))
        return policy, step_world(belief, self.motion, commands[0])

    def realize(self, planning_state, belief):
        return planning_state

    def describe_belief(self, belief):
        return '{}:{},{}'.format(*belief.robot)

    def describe_planning_state(self, planning_state):
        return 't={}'.format(planning_state.t)


def world_as_node(world_map, motion, start, seed=0):
    """Wrap a world as the hierarchy's N0

    Raises:
        InvalidStart: start is not a free cell of the map
    """
    try:
        free = world_map.is_free(start)
    except (TypeError, ValueError):
        free = False
    if not free:
        raise InvalidStart(start)
    return WorldNode(WorldState(world_map, start, seed), motion)


def trajectory_row(state):
    room, x, y = state.robot
    return [state.t, room, x, y, state.command or '', state.actual or '']


def write_trajectory(path, states):
    """Write the CSV trajectory log of a sequence of world states"""
    with open(path, 'w', newline='') as out:
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(TRAJECTORY_HEADER)
        for state in states:
            writer.writerow(trajectory_row(state))
