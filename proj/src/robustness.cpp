#include "netcurv/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "netcurv/analysis.hpp"
#include "netcurv/metrics.hpp"
#include "netcurv/rng.hpp"

namespace netcurv {

namespace {

const std::map<std::string, StrategyKind>& kind_names() {
  static const std::map<std::string, StrategyKind> names = {
      {"random", StrategyKind::kRandom},
      {"edge_or_asc", StrategyKind::kEdgeOrAsc},
      {"edge_fr_asc", StrategyKind::kEdgeFrAsc},
      {"edge_afr_asc", StrategyKind::kEdgeAfrAsc},
      {"edge_ebc_desc", StrategyKind::kEdgeEbcDesc},
      {"vertex_ior_asc", StrategyKind::kVertexIorAsc},
      {"vertex_oor_asc", StrategyKind::kVertexOorAsc},
      {"vertex_ifr_asc", StrategyKind::kVertexIfrAsc},
      {"vertex_ofr_asc", StrategyKind::kVertexOfrAsc},
      {"vertex_iafr_asc", StrategyKind::kVertexIafrAsc},
      {"vertex_oafr_asc", StrategyKind::kVertexOafrAsc},
      {"vertex_indeg_desc", StrategyKind::kVertexInDegDesc},
      {"vertex_outdeg_desc", StrategyKind::kVertexOutDegDesc},
      {"vertex_bc_desc", StrategyKind::kVertexBcDesc},
  };
  return names;
}

// Ranking keys, ascending; descending strategies negate their metric.
// Items without a value (self-loop edges) sort last.
std::vector<double> edge_keys(const DirectedGraph& g, StrategyKind kind, int threads) {
  EdgeMeasureRequest request;
  switch (kind) {
    case StrategyKind::kEdgeFrAsc:
      request.fr = true;
      break;
    case StrategyKind::kEdgeAfrAsc:
      request.afr = true;
      break;
    case StrategyKind::kEdgeOrAsc:
      request.kappa = true;
      break;
    case StrategyKind::kEdgeEbcDesc:
      request.ebc = true;
      break;
    default:
      throw std::invalid_argument("not an edge strategy");
  }
  EdgeMeasureTable table = compute_edge_measures(g, request, threads);
  std::vector<double> keys;
  switch (kind) {
    case StrategyKind::kEdgeFrAsc:
      keys = table.fr;
      break;
    case StrategyKind::kEdgeAfrAsc:
      keys = table.afr;
      break;
    case StrategyKind::kEdgeOrAsc:
      keys = table.kappa;
      break;
    default:
      keys = table.ebc;
      for (double& k : keys) k = -k;
      break;
  }
  for (double& k : keys) {
    if (std::isnan(k)) k = std::numeric_limits<double>::infinity();
  }
  return keys;
}

std::vector<double> vertex_keys(const DirectedGraph& g, StrategyKind kind, int threads) {
  switch (kind) {
    case StrategyKind::kVertexInDegDesc:
    case StrategyKind::kVertexOutDegDesc: {
      std::vector<double> keys(static_cast<std::size_t>(g.vertex_count()));
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int deg = kind == StrategyKind::kVertexInDegDesc ? g.in_degree(v) : g.out_degree(v);
        keys[static_cast<std::size_t>(v)] = -static_cast<double>(deg);
      }
      return keys;
    }
    case StrategyKind::kVertexBcDesc: {
      std::vector<double> keys = vertex_betweenness(g, threads);
      for (double& k : keys) k = -k;
      return keys;
    }
    default:
      break;
  }
  VertexMeasureTable table = compute_vertex_measures(g, threads);
  switch (kind) {
    case StrategyKind::kVertexIorAsc:
      return table.ior;
    case StrategyKind::kVertexOorAsc:
      return table.oor;
    case StrategyKind::kVertexIfrAsc:
      return table.ifr;
    case StrategyKind::kVertexOfrAsc:
      return table.ofr;
    case StrategyKind::kVertexIafrAsc:
      return table.iafr;
    case StrategyKind::kVertexOafrAsc:
      return table.oafr;
    default:
      throw std::invalid_argument("not a vertex strategy");
  }
}

std::vector<int> order_by_keys(const std::vector<double>& keys) {
  std::vector<int> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
  });
  return order;
}

std::vector<int> random_order(std::size_t count, std::uint64_t seed) {
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(seed);
  rng.shuffle(std::span<int>(order));
  return order;
}

long batch_size(double step_fraction, long total) {
  return static_cast<long>(std::ceil(step_fraction * static_cast<double>(total) - 1e-9));
}

long removal_target(double max_fraction, long total) {
  return static_cast<long>(std::floor(max_fraction * static_cast<double>(total) + 1e-9));
}

void check_fractions(double step_fraction, double max_fraction) {
  if (!(step_fraction > 0.0) || !(step_fraction <= max_fraction) || !(max_fraction <= 1.0)) {
    throw std::invalid_argument("removal fractions must satisfy 0 < step <= max <= 1");
  }
}

RemovalCurve run_removal(const DirectedGraph& g, RemovalStrategy strategy, RemovalFamily family,
                         double step_fraction, double max_fraction, bool recompute_each_step,
                         int threads) {
  check_fractions(step_fraction, max_fraction);
  if (!kind_in_family(strategy.kind, family)) {
    throw std::invalid_argument("strategy '" + strategy_kind_name(strategy.kind) +
                                "' does not apply to this removal family");
  }
  const bool edge_mode = family == RemovalFamily::kEdge;
  const long total = edge_mode ? g.edge_count() : g.vertex_count();

  RemovalCurve curve;
  curve.strategy = strategy;
  curve.points.emplace_back(0.0, communication_efficiency(g, threads));
  if (total == 0) return curve;

  std::vector<char> edge_alive(static_cast<std::size_t>(g.edge_count()), 1);
  std::vector<char> vertex_alive(static_cast<std::size_t>(g.vertex_count()), 1);
  auto kill_vertex = [&](int v) {
    vertex_alive[static_cast<std::size_t>(v)] = 0;
    for (EdgeId e : g.in_edges(static_cast<VertexId>(v))) edge_alive[static_cast<std::size_t>(e)] = 0;
    for (EdgeId e : g.out_edges(static_cast<VertexId>(v))) edge_alive[static_cast<std::size_t>(e)] = 0;
  };

  std::vector<int> order;
  std::size_t cursor = 0;
  const bool is_random = strategy.kind == StrategyKind::kRandom;
  if (is_random) {
    order = random_order(static_cast<std::size_t>(total), strategy.seed);
  } else if (!recompute_each_step) {
    order = order_by_keys(edge_mode ? edge_keys(g, strategy.kind, threads)
                                    : vertex_keys(g, strategy.kind, threads));
  }

  const long batch = batch_size(step_fraction, total);
  const long target = removal_target(max_fraction, total);
  long removed = 0;
  while (removed < target) {
    long take = std::min(batch, target - removed);
    if (!is_random && recompute_each_step) {
      // Re-rank the survivors on the current subgraph. Subgraph edges map
      // back to originals in order because edge order is preserved.
      DirectedGraph current = g.subgraph_with_edges(edge_alive);
      if (edge_mode) {
        std::vector<double> sub_keys = edge_keys(current, strategy.kind, threads);
        std::vector<int> alive_ids;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          if (edge_alive[static_cast<std::size_t>(e)]) alive_ids.push_back(e);
        }
        std::vector<int> sub_order = order_by_keys(sub_keys);
        order.clear();
        for (int idx : sub_order) order.push_back(alive_ids[static_cast<std::size_t>(idx)]);
      } else {
        std::vector<double> keys = vertex_keys(current, strategy.kind, threads);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          if (!vertex_alive[static_cast<std::size_t>(v)]) {
            keys[static_cast<std::size_t>(v)] = std::numeric_limits<double>::infinity();
          }
        }
        order = order_by_keys(keys);
      }
      cursor = 0;
    }
    for (long k = 0; k < take; ++k) {
      int item = order[cursor++];
      if (edge_mode) {
        edge_alive[static_cast<std::size_t>(item)] = 0;
      } else {
        kill_vertex(item);
      }
    }
    removed += take;
    DirectedGraph remaining = g.subgraph_with_edges(edge_alive);
    curve.points.emplace_back(static_cast<double>(removed) / static_cast<double>(total),
                              communication_efficiency(remaining, threads));
  }
  return curve;
}

}  // namespace

const std::string& strategy_kind_name(StrategyKind kind) {
  for (const auto& [name, k] : kind_names()) {
    if (k == kind) return name;
  }
  throw std::invalid_argument("unknown strategy kind");
}

StrategyKind parse_strategy_kind(const std::string& name) {
  auto it = kind_names().find(name);
  if (it == kind_names().end()) throw std::invalid_argument("unknown strategy: " + name);
  return it->second;
}

bool kind_in_family(StrategyKind kind, RemovalFamily family) {
  if (kind == StrategyKind::kRandom) return true;
  bool is_edge_kind = kind == StrategyKind::kEdgeOrAsc || kind == StrategyKind::kEdgeFrAsc ||
                      kind == StrategyKind::kEdgeAfrAsc || kind == StrategyKind::kEdgeEbcDesc;
  return is_edge_kind == (family == RemovalFamily::kEdge);
}

RemovalCurve run_edge_removal(const DirectedGraph& g, RemovalStrategy strategy,
                              double step_fraction, double max_fraction,
                              bool recompute_each_step, int threads) {
  return run_removal(g, strategy, RemovalFamily::kEdge, step_fraction, max_fraction,
                     recompute_each_step, threads);
}

RemovalCurve run_vertex_removal(const DirectedGraph& g, RemovalStrategy strategy,
                                double step_fraction, double max_fraction,
                                bool recompute_each_step, int threads) {
  return run_removal(g, strategy, RemovalFamily::kVertex, step_fraction, max_fraction,
                     recompute_each_step, threads);
}

StrategyComparison compare_strategies(const DirectedGraph& g,
                                      std::span<const RemovalStrategy> strategies,
                                      RemovalFamily family, double step_fraction,
                                      double max_fraction, bool recompute_each_step, int threads) {
  for (const RemovalStrategy& s : strategies) {
    if (!kind_in_family(s.kind, family)) {
      throw std::invalid_argument("compare_strategies: mixed strategy families");
    }
  }
  StrategyComparison result;
  for (const RemovalStrategy& s : strategies) {
    RemovalCurve curve = run_removal(g, s, family, step_fraction, max_fraction,
                                     recompute_each_step, threads);
    double auc = 0.0;
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
      auto [f0, e0] = curve.points[i - 1];
      auto [f1, e1] = curve.points[i];
      auc += (f1 - f0) * 0.5 * (e0 + e1);
    }
    result.auc.push_back(auc);
    result.curves.push_back(std::move(curve));
  }
  return result;
}

}  // namespace netcurv
