#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netcurv/graph.hpp"

namespace netcurv {

enum class StrategyKind {
  kRandom,
  kEdgeOrAsc,
  kEdgeFrAsc,
  kEdgeAfrAsc,
  kEdgeEbcDesc,
  kVertexIorAsc,
  kVertexOorAsc,
  kVertexIfrAsc,
  kVertexOfrAsc,
  kVertexIafrAsc,
  kVertexOafrAsc,
  kVertexInDegDesc,
  kVertexOutDegDesc,
  kVertexBcDesc,
};

enum class RemovalFamily { kEdge, kVertex };

struct RemovalStrategy {
  StrategyKind kind = StrategyKind::kRandom;
  std::uint64_t seed = 0;  // used by the random kind only
};

struct RemovalCurve {
  RemovalStrategy strategy;
  // (fraction removed, communication efficiency), starting at fraction 0
  std::vector<std::pair<double, double>> points;
};

struct StrategyComparison {
  std::vector<RemovalCurve> curves;
  std::vector<double> auc;  // trapezoidal area under each curve
};

const std::string& strategy_kind_name(StrategyKind kind);
StrategyKind parse_strategy_kind(const std::string& name);

/// True when the kind may drive an experiment of the given family
/// (random serves both).
bool kind_in_family(StrategyKind kind, RemovalFamily family);

/// Removes edges in batches of ceil(step_fraction * |E|) up to
/// max_fraction, recording communication efficiency after each batch. The
/// ranking is computed once on the intact graph unless recompute_each_step
/// is set; ties break by ascending index.
RemovalCurve run_edge_removal(const DirectedGraph& g, RemovalStrategy strategy,
                              double step_fraction, double max_fraction,
                              bool recompute_each_step = false, int threads = 1);

/// Vertex variant: removing a vertex deletes its incident edges but keeps
/// the vertex in the efficiency denominator, so curves stay comparable.
RemovalCurve run_vertex_removal(const DirectedGraph& g, RemovalStrategy strategy,
                                double step_fraction, double max_fraction,
                                bool recompute_each_step = false, int threads = 1);

StrategyComparison compare_strategies(const DirectedGraph& g,
                                      std::span<const RemovalStrategy> strategies,
                                      RemovalFamily family, double step_fraction,
                                      double max_fraction, bool recompute_each_step = false,
                                      int threads = 1);

}  // namespace netcurv
