#pragma once

#include <span>
#include <vector>

#include "netcurv/graph.hpp"

namespace netcurv {

struct EdgeFormanValues {
  EdgeId edge = 0;
  double fr = 0.0;
  double afr = 0.0;
};

struct VertexFormanValues {
  VertexId vertex = 0;
  double f_in = 0.0;
  double f_out = 0.0;
  double f_total = 0.0;  // f_in - f_out
  double afr_in = 0.0;
  double afr_out = 0.0;
};

/// Forman-Ricci curvature of a directed edge: the edge's endpoint weights
/// against the incoming edges at its source and the outgoing edges at its
/// target (self-loops ignored). With unit weights this is
/// 2 - indeg(source) - outdeg(target). Self-loop edges have no curvature.
double fr_edge_directed(const DirectedGraph& g, EdgeId e);

/// Direction-blind variant: every incident edge at either endpoint counts.
double fr_edge_undirected(const DirectedGraph& g, EdgeId e);

/// Augmented Forman-Ricci curvature of a directed edge. Triangular faces
/// from the index contribute positively, and a neighboring edge is dropped
/// from the negative sums when it shares at least one face with e (once,
/// regardless of how many faces they share).
double afr_edge_directed(const DirectedGraph& g, EdgeId e, const FaceIndex& faces);

/// Direction-blind augmented curvature over vertex triangles: a triangle
/// is any vertex triple pairwise connected ignoring direction.
double afr_edge_undirected(const DirectedGraph& g, EdgeId e);

/// FR and AFR for every edge; self-loop entries are NaN.
std::vector<EdgeFormanValues> forman_all_edges(const DirectedGraph& g, const FaceIndex& faces);

/// Per-vertex sums of edge curvature over incoming and outgoing non-loop
/// edges, for both curvature families. Empty sums are zero.
std::vector<VertexFormanValues> vertex_forman(const DirectedGraph& g, std::span<const double> fr,
                                              std::span<const double> afr);

/// Subgraph of the edges whose value is <= threshold, plus their
/// endpoints. Edges without a value (NaN) are never kept.
DirectedGraph threshold_subnetwork(const DirectedGraph& g, std::span<const double> values,
                                   double threshold);

}  // namespace netcurv
