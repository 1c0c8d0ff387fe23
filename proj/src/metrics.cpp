#include "netcurv/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "netcurv/parallel.hpp"

namespace netcurv {

namespace {

// Flat out-adjacency snapshot for the per-source BFS passes.
struct Csr {
  std::vector<std::int32_t> offset;
  std::vector<VertexId> target;
  std::vector<EdgeId> edge_id;

  explicit Csr(const DirectedGraph& g) {
    const VertexId n = g.vertex_count();
    offset.assign(static_cast<std::size_t>(n) + 1, 0);
    for (VertexId v = 0; v < n; ++v) {
      offset[static_cast<std::size_t>(v) + 1] =
          offset[static_cast<std::size_t>(v)] + static_cast<std::int32_t>(g.out_edges(v).size());
    }
    target.resize(static_cast<std::size_t>(g.edge_count()));
    edge_id.resize(static_cast<std::size_t>(g.edge_count()));
    std::vector<std::int32_t> cursor(offset.begin(), offset.end() - 1);
    for (VertexId v = 0; v < n; ++v) {
      for (EdgeId e : g.out_edges(v)) {
        std::int32_t slot = cursor[static_cast<std::size_t>(v)]++;
        target[static_cast<std::size_t>(slot)] = g.edge(e).target;
        edge_id[static_cast<std::size_t>(slot)] = e;
      }
    }
  }
};

// Single-source state for Brandes' algorithm, reused across sources.
struct BrandesScratch {
  std::vector<int> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<VertexId> order;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> preds;

  explicit BrandesScratch(VertexId n)
      : dist(static_cast<std::size_t>(n), -1),
        sigma(static_cast<std::size_t>(n), 0.0),
        delta(static_cast<std::size_t>(n), 0.0),
        preds(static_cast<std::size_t>(n)) {}

  void accumulate(const Csr& csr, VertexId source, std::vector<double>& vertex_acc,
                  std::vector<double>& edge_acc) {
    order.clear();
    dist[static_cast<std::size_t>(source)] = 0;
    sigma[static_cast<std::size_t>(source)] = 1.0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
      VertexId v = order[head];
      int dv = dist[static_cast<std::size_t>(v)];
      for (std::int32_t k = csr.offset[static_cast<std::size_t>(v)];
           k < csr.offset[static_cast<std::size_t>(v) + 1]; ++k) {
        VertexId w = csr.target[static_cast<std::size_t>(k)];
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dv + 1;
          order.push_back(w);
        }
        if (dist[static_cast<std::size_t>(w)] == dv + 1) {
          sigma[static_cast<std::size_t>(w)] += sigma[static_cast<std::size_t>(v)];
          preds[static_cast<std::size_t>(w)].emplace_back(v, csr.edge_id[static_cast<std::size_t>(k)]);
        }
      }
    }
    for (std::size_t k = order.size(); k-- > 0;) {
      VertexId w = order[k];
      double coeff = (1.0 + delta[static_cast<std::size_t>(w)]) / sigma[static_cast<std::size_t>(w)];
      for (auto [v, e] : preds[static_cast<std::size_t>(w)]) {
        double share = sigma[static_cast<std::size_t>(v)] * coeff;
        edge_acc[static_cast<std::size_t>(e)] += share;
        delta[static_cast<std::size_t>(v)] += share;
      }
      if (w != source) vertex_acc[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
    }
    for (VertexId v : order) {
      dist[static_cast<std::size_t>(v)] = -1;
      sigma[static_cast<std::size_t>(v)] = 0.0;
      delta[static_cast<std::size_t>(v)] = 0.0;
      preds[static_cast<std::size_t>(v)].clear();
    }
  }
};

}  // namespace

BetweennessResult betweenness(const DirectedGraph& g, int threads) {
  const VertexId n = g.vertex_count();
  const Csr csr(g);
  const std::int64_t num_chunks = n == 0 ? 0 : (n + kParallelChunk - 1) / kParallelChunk;
  // Per-chunk partials folded in chunk order: the reduction is identical
  // for every thread count.
  std::vector<std::vector<double>> vertex_parts(static_cast<std::size_t>(num_chunks));
  std::vector<std::vector<double>> edge_parts(static_cast<std::size_t>(num_chunks));
  parallel_chunks(n, threads, [&](std::int64_t ci, std::int64_t begin, std::int64_t end) {
    auto& vpart = vertex_parts[static_cast<std::size_t>(ci)];
    auto& epart = edge_parts[static_cast<std::size_t>(ci)];
    vpart.assign(static_cast<std::size_t>(n), 0.0);
    epart.assign(static_cast<std::size_t>(g.edge_count()), 0.0);
    BrandesScratch scratch(n);
    for (std::int64_t s = begin; s < end; ++s) {
      scratch.accumulate(csr, static_cast<VertexId>(s), vpart, epart);
    }
  });
  BetweennessResult result;
  result.vertex.assign(static_cast<std::size_t>(n), 0.0);
  result.edge.assign(static_cast<std::size_t>(g.edge_count()), 0.0);
  for (std::int64_t ci = 0; ci < num_chunks; ++ci) {
    const auto& vpart = vertex_parts[static_cast<std::size_t>(ci)];
    const auto& epart = edge_parts[static_cast<std::size_t>(ci)];
    for (std::size_t i = 0; i < vpart.size(); ++i) result.vertex[i] += vpart[i];
    for (std::size_t i = 0; i < epart.size(); ++i) result.edge[i] += epart[i];
  }
  return result;
}

std::vector<double> edge_betweenness(const DirectedGraph& g, int threads) {
  return betweenness(g, threads).edge;
}

std::vector<double> vertex_betweenness(const DirectedGraph& g, int threads) {
  return betweenness(g, threads).vertex;
}

std::vector<double> pagerank(const DirectedGraph& g, double damping, double tol, int max_iter) {
  if (!(damping > 0.0) || !(damping < 1.0)) {
    throw std::invalid_argument("pagerank: damping must be in (0, 1)");
  }
  const VertexId n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("pagerank: empty graph");
  std::vector<double> rank(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n));
  std::vector<double> next(static_cast<std::size_t>(n), 0.0);
  const double teleport = (1.0 - damping) / static_cast<double>(n);
  for (int iter = 0; iter < max_iter; ++iter) {
    double dangling = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      if (g.out_degree(v) == 0) dangling += rank[static_cast<std::size_t>(v)];
    }
    double base = teleport + damping * dangling / static_cast<double>(n);
    std::fill(next.begin(), next.end(), base);
    for (VertexId v = 0; v < n; ++v) {
      double share = damping * rank[static_cast<std::size_t>(v)] /
                     static_cast<double>(g.out_degree(v) == 0 ? 1 : g.out_degree(v));
      for (EdgeId e : g.out_edges(v)) {
        next[static_cast<std::size_t>(g.edge(e).target)] += share;
      }
    }
    double diff = 0.0;
    for (std::size_t i = 0; i < rank.size(); ++i) diff += std::abs(next[i] - rank[i]);
    rank.swap(next);
    if (diff < tol) return rank;
  }
  throw std::runtime_error("pagerank: no convergence within max_iter");
}

double communication_efficiency(const DirectedGraph& g, int threads) {
  const VertexId n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("communication_efficiency: need at least two vertices");
  const Csr csr(g);
  const std::int64_t num_chunks = (n + kParallelChunk - 1) / kParallelChunk;
  std::vector<double> chunk_sums(static_cast<std::size_t>(num_chunks), 0.0);
  parallel_chunks(n, threads, [&](std::int64_t ci, std::int64_t begin, std::int64_t end) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<VertexId> order;
    order.reserve(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (std::int64_t s = begin; s < end; ++s) {
      order.clear();
      order.push_back(static_cast<VertexId>(s));
      dist[static_cast<std::size_t>(s)] = 0;
      for (std::size_t head = 0; head < order.size(); ++head) {
        VertexId v = order[head];
        int dv = dist[static_cast<std::size_t>(v)];
        if (v != static_cast<VertexId>(s)) sum += 1.0 / static_cast<double>(dv);
        for (std::int32_t k = csr.offset[static_cast<std::size_t>(v)];
             k < csr.offset[static_cast<std::size_t>(v) + 1]; ++k) {
          VertexId w = csr.target[static_cast<std::size_t>(k)];
          if (dist[static_cast<std::size_t>(w)] < 0) {
            dist[static_cast<std::size_t>(w)] = dv + 1;
            order.push_back(w);
          }
        }
      }
      for (VertexId v : order) dist[static_cast<std::size_t>(v)] = -1;
    }
    chunk_sums[static_cast<std::size_t>(ci)] = sum;
  });
  double total = 0.0;
  for (double s : chunk_sums) total += s;
  return total / (static_cast<double>(n) * static_cast<double>(n - 1));
}

CorrelationResult spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("spearman: need at least two samples");
  const std::size_t n = x.size();

  auto average_ranks = [n](std::span<const double> values) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && values[idx[j + 1]] == values[idx[i]]) ++j;
      double rank = 0.5 * static_cast<double>(i + j) + 1.0;  // average of 1-based positions
      for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = rank;
      i = j + 1;
    }
    return ranks;
  };

  std::vector<double> rx = average_ranks(x);
  std::vector<double> ry = average_ranks(y);
  double mean_x = std::accumulate(rx.begin(), rx.end(), 0.0) / static_cast<double>(n);
  double mean_y = std::accumulate(ry.begin(), ry.end(), 0.0) / static_cast<double>(n);
  double cov = 0.0, var_x = 0.0, var_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = rx[i] - mean_x;
    double dy = ry[i] - mean_y;
    cov += dx * dy;
    var_x += dx * dx;
    var_y += dy * dy;
  }
  if (var_x == 0.0 || var_y == 0.0) {
    throw std::domain_error("spearman: correlation undefined for constant input");
  }
  return CorrelationResult{cov / std::sqrt(var_x * var_y), static_cast<int>(n)};
}

std::vector<HistogramBin> histogram(std::span<const double> values, int bins) {
  if (values.empty()) throw std::invalid_argument("histogram: empty input");
  if (bins < 1) throw std::invalid_argument("histogram: bins must be positive");
  auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *min_it;
  const double hi = *max_it;
  if (lo == hi) {
    return {HistogramBin{lo, static_cast<std::int64_t>(values.size())}};
  }
  const double width = (hi - lo) / static_cast<double>(bins);
  std::vector<HistogramBin> result(static_cast<std::size_t>(bins));
  for (int b = 0; b < bins; ++b) {
    result[static_cast<std::size_t>(b)].lower = lo + width * static_cast<double>(b);
  }
  for (double v : values) {
    int b = static_cast<int>((v - lo) / width);
    if (b >= bins) b = bins - 1;  // max lands in the closed last bin
    ++result[static_cast<std::size_t>(b)].count;
  }
  return result;
}

}  // namespace netcurv
