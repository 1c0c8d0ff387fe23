#include "netcurv/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "netcurv/rng.hpp"

namespace netcurv {

namespace {

// Index into a cumulative-mass table; u is uniform in [0, 1).
int sample_index(const std::vector<double>& cumulative, double u) {
  double x = u * cumulative.back();
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
  if (it == cumulative.end()) --it;
  return static_cast<int>(it - cumulative.begin());
}

}  // namespace

DirectedGraph generate_er(const ErParams& params) {
  if (params.n < 0) throw std::invalid_argument("er: n must be non-negative");
  if (!(params.p >= 0.0) || !(params.p <= 1.0)) {
    throw std::invalid_argument("er: p must lie in [0, 1]");
  }
  SplitMix64 rng(params.seed);
  std::vector<std::tuple<VertexId, VertexId, double>> edges;
  for (int u = 0; u < params.n; ++u) {
    for (int v = 0; v < params.n; ++v) {
      if (u == v) continue;
      if (rng.next_double() < params.p) edges.emplace_back(u, v, 1.0);
    }
  }
  return DirectedGraph(params.n, edges);
}

DirectedGraph generate_sf_fitness(const SfParams& params) {
  const int n = params.n;
  if (n < 0) throw std::invalid_argument("sf: n must be non-negative");
  if (params.m < 0 || params.m > static_cast<long long>(n) * (n - 1)) {
    throw std::invalid_argument("sf: m must lie in [0, n*(n-1)]");
  }
  if (!(params.lambda_in > 1.0) || !(params.lambda_out > 1.0)) {
    throw std::invalid_argument("sf: degree exponents must exceed 1");
  }
  SplitMix64 master(params.seed);
  SplitMix64 perm_rng = master.split();
  SplitMix64 draw_rng = master.split();

  const double alpha_out = 1.0 / (params.lambda_out - 1.0);
  const double alpha_in = 1.0 / (params.lambda_in - 1.0);

  std::vector<int> rank(static_cast<std::size_t>(n));
  std::iota(rank.begin(), rank.end(), 0);
  perm_rng.shuffle(std::span<int>(rank));

  std::vector<double> out_cum(static_cast<std::size_t>(n));
  std::vector<double> in_cum(static_cast<std::size_t>(n));
  double out_total = 0.0, in_total = 0.0;
  for (int i = 0; i < n; ++i) {
    out_total += std::pow(static_cast<double>(i + 1), -alpha_out);
    out_cum[static_cast<std::size_t>(i)] = out_total;
    in_total += std::pow(static_cast<double>(rank[static_cast<std::size_t>(i)] + 1), -alpha_in);
    in_cum[static_cast<std::size_t>(i)] = in_total;
  }

  std::unordered_set<std::uint64_t> present;
  present.reserve(static_cast<std::size_t>(params.m) * 2);
  std::vector<std::tuple<VertexId, VertexId, double>> edges;
  edges.reserve(static_cast<std::size_t>(params.m));
  const long long rejection_limit = 100 * std::max<long long>(params.m, 1);
  long long consecutive_rejections = 0;
  while (static_cast<long long>(edges.size()) < params.m) {
    int u = sample_index(out_cum, draw_rng.next_double());
    int v = sample_index(in_cum, draw_rng.next_double());
    std::uint64_t key = static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) +
                        static_cast<std::uint64_t>(v);
    if (u == v || present.contains(key)) {
      if (++consecutive_rejections > rejection_limit) {
        throw std::runtime_error("sf: sampler stalled before reaching the requested edge count");
      }
      continue;
    }
    consecutive_rejections = 0;
    present.insert(key);
    edges.emplace_back(u, v, 1.0);
  }
  return DirectedGraph(n, edges);
}

}  // namespace netcurv
