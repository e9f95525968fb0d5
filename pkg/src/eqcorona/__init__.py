"""Corona multiproducts and their equitable colorings."""
from .corona import CoronaSpec, CoronaTooLarge, corona, corona_order, corona_power, index_of, label_of
from .graph import (Coloring, ColoringError, Graph, GraphError, analyze_coloring, build_graph,
                    complete_graph, complete_multipartite, cycle_graph, path_graph)
from ._kernel import BACKEND

__version__ = "0.1.0"
