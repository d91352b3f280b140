from cog_hierarchy.core.active import ActiveHierarchy, ActiveNode, initial_active_hierarchy
from cog_hierarchy.core.hierarchy import FunctionTuple, Hierarchy, InvalidHierarchy, \
    ValidationReport, Violation, nothing, topo_down, topo_up, validate
from cog_hierarchy.core.node import EMPTY, IdentityNode, NodeInterface
from cog_hierarchy.core.process import UnknownNode, action_update, correction_update, \
    dump_active, prediction_update, process_update, transition_learn_update, \
    update_pass, utility_update
