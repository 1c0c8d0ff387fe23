#include "netcurv/ollivier.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "netcurv/parallel.hpp"
#include "netcurv/transport.hpp"

namespace netcurv {

namespace {

constexpr int kMaxHops = 3;  // support-to-support distances never exceed this

void require_unweighted(const DirectedGraph& g) {
  if (!g.is_unweighted()) {
    throw std::domain_error("OR in scope for unweighted networks only");
  }
}

const Edge& non_loop_edge(const DirectedGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  if (ed.self_loop) throw std::domain_error("curvature undefined for self-loops");
  return ed;
}

// Support = neighbors (in edge order), optionally followed by the vertex
// itself; mass is uniform. An endpoint without neighbors degenerates to
// the bare vertex under either convention.
void fill_side(std::vector<VertexId>&& neighbors, VertexId self, MeasureConvention convention,
               std::vector<VertexId>& support, std::vector<double>& mass, bool& fallback) {
  support = std::move(neighbors);
  fallback = support.empty();
  if (fallback || convention == MeasureConvention::kSelfInclusive) {
    support.push_back(self);
  }
  mass.assign(support.size(), 1.0 / static_cast<double>(support.size()));
}

// Depth-limited BFS with reusable buffers.
struct TruncatedBfs {
  std::vector<std::int8_t> dist;
  std::vector<VertexId> frontier;
  std::vector<VertexId> next;

  void run(const DirectedGraph& g, VertexId source, int max_depth) {
    dist.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    frontier.clear();
    dist[static_cast<std::size_t>(source)] = 0;
    frontier.push_back(source);
    for (int depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
      next.clear();
      for (VertexId v : frontier) {
        for (EdgeId e : g.out_edges(v)) {
          VertexId w = g.edge(e).target;
          if (dist[static_cast<std::size_t>(w)] >= 0) continue;
          dist[static_cast<std::size_t>(w)] = static_cast<std::int8_t>(depth + 1);
          next.push_back(w);
        }
      }
      frontier.swap(next);
    }
  }
};

double solve_for_edge(const DirectedMeasurePair& measures,
                      const std::vector<TruncatedBfs>& source_bfs) {
  const std::size_t rows = measures.source_support.size();
  const std::size_t cols = measures.target_support.size();
  TransportProblem problem;
  problem.supply = measures.source_mass;
  problem.demand = measures.target_mass;
  problem.cost.resize(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& dist = source_bfs[i].dist;
    for (std::size_t j = 0; j < cols; ++j) {
      std::int8_t d = dist[static_cast<std::size_t>(measures.target_support[j])];
      if (d < 0) {
        throw std::logic_error("support distance exceeded the three-hop bound");
      }
      problem.cost[i * cols + j] = static_cast<double>(d);
    }
  }
  return 1.0 - solve_transport(problem).cost;
}

}  // namespace

DirectedMeasurePair build_measures(const DirectedGraph& g, EdgeId e, MeasureConvention convention) {
  const Edge& ed = non_loop_edge(g, e);
  DirectedMeasurePair measures;
  fill_side(g.in_neighbors_no_loops(ed.source), ed.source, convention, measures.source_support,
            measures.source_mass, measures.source_fallback);
  fill_side(g.out_neighbors_no_loops(ed.target), ed.target, convention, measures.target_support,
            measures.target_mass, measures.target_fallback);
  return measures;
}

double or_edge_directed(const DirectedGraph& g, EdgeId e, MeasureConvention convention) {
  require_unweighted(g);
  DirectedMeasurePair measures = build_measures(g, e, convention);
  std::vector<TruncatedBfs> source_bfs(measures.source_support.size());
  for (std::size_t i = 0; i < measures.source_support.size(); ++i) {
    source_bfs[i].run(g, measures.source_support[i], kMaxHops);
  }
  return solve_for_edge(measures, source_bfs);
}

std::vector<EdgeOllivier> or_all_edges(const DirectedGraph& g, int threads,
                                       MeasureConvention convention) {
  require_unweighted(g);
  std::vector<EdgeOllivier> result(static_cast<std::size_t>(g.edge_count()),
                                   EdgeOllivier{std::numeric_limits<double>::quiet_NaN(), false});
  // Edges are grouped by source vertex so the source-side BFS runs are
  // shared across all edges leaving it.
  parallel_chunks(g.vertex_count(), threads, [&](std::int64_t, std::int64_t begin, std::int64_t end) {
    std::vector<TruncatedBfs> bfs_pool;
    for (std::int64_t xi = begin; xi < end; ++xi) {
      VertexId x = static_cast<VertexId>(xi);
      bool has_non_loop = false;
      for (EdgeId e : g.out_edges(x)) {
        if (!g.edge(e).self_loop) {
          has_non_loop = true;
          break;
        }
      }
      if (!has_non_loop) continue;

      std::vector<VertexId> sources;
      std::vector<double> source_mass;
      bool source_fallback = false;
      fill_side(g.in_neighbors_no_loops(x), x, convention, sources, source_mass, source_fallback);
      if (bfs_pool.size() < sources.size()) bfs_pool.resize(sources.size());
      for (std::size_t i = 0; i < sources.size(); ++i) {
        bfs_pool[i].run(g, sources[i], kMaxHops);
      }

      for (EdgeId e : g.out_edges(x)) {
        const Edge& ed = g.edge(e);
        if (ed.self_loop) continue;
        DirectedMeasurePair measures;
        measures.source_support = sources;
        measures.source_mass = source_mass;
        measures.source_fallback = source_fallback;
        fill_side(g.out_neighbors_no_loops(ed.target), ed.target, convention,
                  measures.target_support, measures.target_mass, measures.target_fallback);
        result[static_cast<std::size_t>(e)] =
            EdgeOllivier{solve_for_edge(measures, bfs_pool),
                         measures.source_fallback || measures.target_fallback};
      }
    }
  });
  return result;
}

std::vector<VertexOllivierValues> vertex_ollivier(const DirectedGraph& g,
                                                  std::span<const double> kappa) {
  if (static_cast<EdgeId>(kappa.size()) != g.edge_count()) {
    throw std::invalid_argument("vertex_ollivier: value vector size mismatch");
  }
  std::vector<VertexOllivierValues> result(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    result[static_cast<std::size_t>(v)].vertex = v;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.self_loop) continue;
    if (std::isnan(kappa[static_cast<std::size_t>(e)])) {
      throw std::invalid_argument("vertex_ollivier: curvature missing for a non-loop edge");
    }
    result[static_cast<std::size_t>(ed.target)].o_in += kappa[static_cast<std::size_t>(e)];
    result[static_cast<std::size_t>(ed.source)].o_out += kappa[static_cast<std::size_t>(e)];
  }
  for (auto& row : result) row.o_total = row.o_in - row.o_out;
  return result;
}

}  // namespace netcurv
