#pragma once

#include <cstdint>

#include "netcurv/graph.hpp"

namespace netcurv {

struct ErParams {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

struct SfParams {
  int n = 0;
  long long m = 0;
  double lambda_in = 2.1;
  double lambda_out = 2.1;
  std::uint64_t seed = 0;
};

/// Directed G(n, p): each ordered pair (u, v), u != v, is included
/// independently with probability p. Deterministic for a fixed seed.
DirectedGraph generate_er(const ErParams& params);

/// Static-fitness scale-free model. Vertex i has out-fitness
/// (i + 1)^(-1/(lambda_out - 1)); in-fitness uses an independently
/// permuted rank with the lambda_in exponent. Endpoint pairs are drawn
/// proportionally to fitness, rejecting self-loops and duplicates, until
/// exactly m distinct edges exist. Aborts after 100*m consecutive
/// rejections.
DirectedGraph generate_sf_fitness(const SfParams& params);

}  // namespace netcurv
