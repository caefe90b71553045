from ldseq.services.twosat.solver import implication_graph, solve_2sat, strongly_connected_components

__all__ = ["implication_graph", "solve_2sat", "strongly_connected_components"]
