#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "netcurv/graph.hpp"
#include "netcurv/ollivier.hpp"

namespace netcurv {

struct EdgeMeasureRequest {
  bool fr = false;
  bool afr = false;
  bool kappa = false;
  bool ebc = false;
  MeasureConvention or_convention = MeasureConvention::kSelfInclusive;
};

/// Per-edge measure columns in edge order. Self-loop edges carry NaN in
/// the curvature columns; unrequested columns stay empty.
struct EdgeMeasureTable {
  std::vector<double> fr;
  std::vector<double> afr;
  std::vector<double> kappa;
  std::vector<char> or_fallback;
  std::vector<double> ebc;
  int self_loop_count = 0;
};

/// Per-vertex measure columns in vertex order.
struct VertexMeasureTable {
  std::vector<double> in_degree;
  std::vector<double> out_degree;
  std::vector<double> ifr, ofr, tfr;
  std::vector<double> iafr, oafr;
  std::vector<double> ior, oor, tor;
  std::vector<double> betweenness;
  std::vector<double> pagerank;
};

EdgeMeasureTable compute_edge_measures(const DirectedGraph& g, const EdgeMeasureRequest& request,
                                       int threads = 1);

VertexMeasureTable compute_vertex_measures(
    const DirectedGraph& g, int threads = 1,
    MeasureConvention or_convention = MeasureConvention::kSelfInclusive);

bool is_edge_column(std::string_view name);
bool is_vertex_column(std::string_view name);

/// Column by name ("fr", "afr", "or", "ebc"); nullopt for unknown or
/// unrequested columns.
std::optional<std::vector<double>> edge_column(const EdgeMeasureTable& table,
                                               std::string_view name);

/// Column by name ("in_degree", "out_degree", "ifr", "ofr", "tfr", "iafr",
/// "oafr", "ior", "oor", "tor", "betweenness", "pagerank").
std::optional<std::vector<double>> vertex_column(const VertexMeasureTable& table,
                                                 std::string_view name);

}  // namespace netcurv
