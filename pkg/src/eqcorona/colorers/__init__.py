"""Constructive equitable colorings of corona multiproducts."""
from .certificate import EQUALITY, THEOREM_TAGS, UPPER_BOUND, Certificate, TailPlan
from .dispatch import Colorings, NoRoute, dispatch
from .fill import InfeasibleCounts, cycle_fill, cycle_feasible, path_feasible, path_fill
from .levels import BalanceError, tail_plan
from .shapes import (Complete, EvenCycle, General, HShape, Multipartite, OddCycle, Path,
                     ShapeError, shape_from_graph, shape_from_kind)
from .theorems import (color_complete_corona, color_even_cycle_corona_3,
                       color_even_cycle_corona_4, color_k1_cycle_corona,
                       color_k1_path_corona, color_multipartite_corona,
                       color_odd_cycle_corona, color_path_corona_3, color_path_corona_4,
                       complete_pattern_bound, extend_even_cycle_3,
                       three_color_size_recurrence)
