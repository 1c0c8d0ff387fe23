#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "netcurv/graph.hpp"

namespace netcurv {

struct CorrelationResult {
  double rho = 0.0;
  int n = 0;
};

struct HistogramBin {
  double lower = 0.0;
  std::int64_t count = 0;
};

struct BetweennessResult {
  std::vector<double> vertex;
  std::vector<double> edge;
};

/// Brandes shortest-path betweenness over ordered vertex pairs, directed,
/// unnormalized. Vertex scores exclude path endpoints; edge scores count
/// the fractional share of shortest paths crossing each edge.
BetweennessResult betweenness(const DirectedGraph& g, int threads = 1);

std::vector<double> edge_betweenness(const DirectedGraph& g, int threads = 1);
std::vector<double> vertex_betweenness(const DirectedGraph& g, int threads = 1);

/// Damped random-surfer fixed point with uniform redistribution of
/// dangling mass; converges when successive iterates differ by less than
/// tol in the 1-norm.
std::vector<double> pagerank(const DirectedGraph& g, double damping = 0.85, double tol = 1e-10,
                             int max_iter = 1000);

/// Mean inverse directed hop distance over ordered vertex pairs, with
/// 1/unreachable = 0; ranges over [0, 1]. Requires at least two vertices.
double communication_efficiency(const DirectedGraph& g, int threads = 1);

/// Spearman rank correlation with average ranks for ties. Throws
/// domain_error when either input is constant.
CorrelationResult spearman(std::span<const double> x, std::span<const double> y);

/// Equal-width bins spanning [min, max], right-open except the last bin.
/// A zero-width range collapses to a single bin.
std::vector<HistogramBin> histogram(std::span<const double> values, int bins);

}  // namespace netcurv
