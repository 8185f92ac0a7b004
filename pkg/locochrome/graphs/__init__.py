from .core import Coloring, Graph, MultiColoring, PartialOrientation, VertexSet, as_digraph
from .families import arcless_digraph, complete_graph, cycle_graph, directed_cycle, empty_graph, kneser_graph, \
    path_graph, petersen_graph, random_digraph, random_graph
from .independent import enumerate_independent_sets, is_independent, max_clique, max_independent_set, \
    max_weight_independent_set
from .universal import SetFamily, counterexample_certificates, counterexample_graph, kruskal_katona_check, \
    kruskal_katona_l, kruskal_katona_sweep, natural_coloring, natural_multicoloring, shadow, universal_directed, \
    universal_multi, universal_undirected
