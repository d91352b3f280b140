from cog_hierarchy.gridworld.motion import MotionModel
from cog_hierarchy.gridworld.world import InvalidCommand, InvalidStart, WorldNode, \
    WorldState, sense_world, step_world, world_as_node
from cog_hierarchy.gridworld.world_map import CANONICAL_START, DIRECTIONS, GOAL, UNKNOWN, \
    WorldMap, canonical_map
