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
from collections import deque

import networkx as nx
import numpy as np

from cog_hierarchy.gridworld.world_map import DIRECTIONS
from cog_hierarchy.shared import LOGGER
from cog_hierarchy.shared.stats import time_me


def transition_tensor(world_map, motion, rooms=None):
    """Exact transition probabilities of the true dynamics

    Moves that would cross into a room outside `rooms` leave the robot where
    it is, which restricts the robot to a route.

    Returns:
        [tuple] (locations, P) where P[s, a, s'] follows DIRECTIONS order
    """
    locations = world_map.locations(rooms)
    index = {location: pos for pos, location in enumerate(locations)}
    tensor = np.zeros((len(locations), len(DIRECTIONS), len(locations)))
    for pos, location in enumerate(locations):
        for action, vector in enumerate(DIRECTIONS.values()):
            for direction, prob in motion.outcomes(vector):
                successor, _ = world_map.move(location, direction)
                tensor[pos, action, index.get(successor, pos)] += prob
    return locations, tensor


def _evaluate(tensor, policy, terminal):
    size = tensor.shape[0]
    system = np.eye(size) - tensor[np.arange(size), policy]
    rhs = np.ones(size)
    system[terminal] = 0.0
    system[terminal, terminal] = 1.0
    rhs[terminal] = 0.0
    return np.linalg.solve(system, rhs)


@time_me
def expected_steps(tensor, terminal, tolerance=1e-6, max_sweeps=20000):
    """Minimum expected steps to reach any terminal state

    Value iteration until the greedy policy reaches the terminal states, then
    policy iteration with exact linear solves.

    Args:
        tensor (numpy.ndarray): P[s, a, s']
        terminal (numpy.ndarray): Boolean mask of absorbing states

    Returns:
        [numpy.ndarray] Expected steps per state
    """
    values = np.zeros(tensor.shape[0])
    for _ in range(max_sweeps):
        updated = (1.0 + tensor @ values).min(axis=1)
        updated[terminal] = 0.0
        delta = np.max(np.abs(updated - values))
        values = updated
        if delta < tolerance:
            break

    policy = (1.0 + tensor @ values).argmin(axis=1)
    for _ in range(100):
        try:
            values = _evaluate(tensor, policy, terminal)
        except np.linalg.LinAlgError:
            LOGGER.warning('Greedy policy is improper, keeping value iteration estimate')
            break
        q_values = 1.0 + tensor @ values
        best = q_values.min(axis=1)
        improved = np.where(q_values[np.arange(len(policy)), policy] > best + 1e-9,
                            q_values.argmin(axis=1), policy)
        if np.array_equal(improved, policy):
            break
        policy = improved
    return values


def route_expected_steps(world_map, motion, rooms, start):
    """Optimal expected steps from start to the goal when confined to rooms"""
    locations, tensor = transition_tensor(world_map, motion, rooms)
    goal_room, (gx, gy) = world_map.goal
    terminal = np.array([location == (goal_room, gx, gy) for location in locations])
    values = expected_steps(tensor, terminal)
    return float(values[locations.index(tuple(start))])


def room_graph(world_map):
    graph = nx.Graph()
    graph.add_nodes_from(world_map.rooms)
    graph.add_edges_from(tuple(pair) for pair in world_map.topology())
    return graph


def loop_free_routes(world_map, start_room):
    """Every simple room path from start_room to the goal room"""
    goal_room = world_map.goal[0]
    if start_room == goal_room:
        return [(goal_room,)]
    return sorted(tuple(path) for path in
                  nx.all_simple_paths(room_graph(world_map), start_room, goal_room))


def route_costs(world_map, motion, start):
    """[(expected steps, route)] for every loop-free route, cheapest first"""
    costs = [(route_expected_steps(world_map, motion, route, start), route)
             for route in loop_free_routes(world_map, start[0])]
    return sorted(costs, key=lambda item: (item[0], len(item[1]), item[1]))


def best_route(world_map, motion, start):
    """The room sequence whose confined optimum is cheapest, and its cost"""
    cost, route = route_costs(world_map, motion, start)[0]
    return route, cost


def bfs_steps(world_map, start, goal=None):
    """Deterministic shortest step count between two locations, None if unreachable"""
    if goal is None:
        goal = (world_map.goal[0],) + tuple(world_map.goal[1])
    start, goal = tuple(start), tuple(goal)
    distance = {start: 0}
    frontier = deque([start])
    while frontier:
        location = frontier.popleft()
        if location == goal:
            return distance[location]
        for vector in DIRECTIONS.values():
            successor, _ = world_map.move(location, vector)
            if successor not in distance:
                distance[successor] = distance[location] + 1
                frontier.append(successor)
    return None


def cell_distances(world_map, target):
    """Shortest in-room step counts from every projected cell to a target cell"""
    distance = {tuple(target): 0}
    frontier = deque([tuple(target)])
    while frontier:
        cell = frontier.popleft()
        for vector in DIRECTIONS.values():
            neighbour = (cell[0] + vector[0], cell[1] + vector[1])
            if world_map.is_open(neighbour) and neighbour not in distance:
                distance[neighbour] = distance[cell] + 1
                frontier.append(neighbour)
    return distance
