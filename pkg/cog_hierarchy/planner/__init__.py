from cog_hierarchy.planner.costs import CostTables, action_cost
from cog_hierarchy.planner.node import PlannerNode, PlannerPolicy, PlannerState, planner_as_node
from cog_hierarchy.planner.search import NoPlan, Plan, enumerate_plans, plan_min_cost, \
    plan_room_sequence, render_plan, sequence_cost
from cog_hierarchy.planner.symbolic import MV_GOAL, Inapplicable, RoomGraph, SymbolicBelief, \
    applicable_actions, symbolic_transition, target_of, trv
