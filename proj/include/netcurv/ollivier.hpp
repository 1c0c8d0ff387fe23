#pragma once

#include <span>
#include <vector>

#include "netcurv/graph.hpp"

namespace netcurv {

/// How the endpoint measures of an edge x->y are built.
///
/// kSelfInclusive spreads the unit mass uniformly over the vertex
/// together with its loop-free in-neighbors (for x) or out-neighbors
/// (for y). This is the convention the reference correlation tables for
/// directed random graphs encode, and the default.
///
/// kNeighborsOnly puts all mass on the neighbors alone, falling back to a
/// Dirac mass at the vertex when it has none. Useful for sensitivity
/// comparisons; the two conventions coincide exactly on edges whose
/// endpoint has no neighbors on the relevant side.
enum class MeasureConvention {
  kSelfInclusive,
  kNeighborsOnly,
};

/// Endpoint measures of a directed edge. fallback flags record endpoints
/// whose support degenerated to the vertex itself (no in-/out-neighbors),
/// so such edges stay identifiable downstream.
struct DirectedMeasurePair {
  std::vector<VertexId> source_support;
  std::vector<double> source_mass;
  std::vector<VertexId> target_support;
  std::vector<double> target_mass;
  bool source_fallback = false;
  bool target_fallback = false;
};

struct EdgeOllivier {
  double kappa = 0.0;
  bool fallback = false;
};

struct VertexOllivierValues {
  VertexId vertex = 0;
  double o_in = 0.0;
  double o_out = 0.0;
  double o_total = 0.0;  // o_in - o_out
};

DirectedMeasurePair build_measures(const DirectedGraph& g, EdgeId e,
                                   MeasureConvention convention = MeasureConvention::kSelfInclusive);

/// Ollivier-Ricci curvature of a directed edge on an unweighted graph:
/// 1 - W1 between the endpoint measures under directed hop distances on
/// the full graph. Always lands in [-2, 1] because every support vertex
/// pair is joined by a path of at most three hops through the edge.
double or_edge_directed(const DirectedGraph& g, EdgeId e,
                        MeasureConvention convention = MeasureConvention::kSelfInclusive);

/// Curvature for every edge; self-loop entries carry NaN. Distances are
/// computed with per-source breadth-first searches truncated at three
/// hops, shared across the edges leaving each vertex.
std::vector<EdgeOllivier> or_all_edges(const DirectedGraph& g, int threads = 1,
                                       MeasureConvention convention = MeasureConvention::kSelfInclusive);

/// Per-vertex sums of kappa over incoming and outgoing non-loop edges.
std::vector<VertexOllivierValues> vertex_ollivier(const DirectedGraph& g,
                                                  std::span<const double> kappa);

}  // namespace netcurv
