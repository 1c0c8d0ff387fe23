#pragma once

#include <cstddef>
#include <vector>

namespace netcurv {

/// Balanced discrete transportation problem between two probability
/// measures. cost is row-major |supply| x |demand| with the ground
/// distance d(i, j) at entry i*demand.size() + j.
struct TransportProblem {
  std::vector<double> supply;
  std::vector<double> demand;
  std::vector<double> cost;

  double cost_at(std::size_t i, std::size_t j) const { return cost[i * demand.size() + j]; }
};

/// Optimal plan with its certifying dual potentials: u[i] + v[j] <= c[i][j]
/// for every cell and sum(u*supply) + sum(v*demand) equals the primal cost.
struct TransportSolution {
  std::vector<double> plan;  // row-major, same shape as cost
  double cost = 0.0;
  std::vector<double> dual_u;
  std::vector<double> dual_v;

  double plan_at(std::size_t i, std::size_t j, std::size_t cols) const {
    return plan[i * cols + j];
  }
};

/// Exact transportation simplex. Deterministic: northwest-corner start,
/// smallest-index entering rule, lexicographic leaving tie-break. Masses
/// within 1e-12 of 1 are renormalized; larger imbalance, NaN or infinite
/// costs are rejected.
TransportSolution solve_transport(const TransportProblem& problem);

/// Certificate tolerance used by solve_transport's internal check.
inline constexpr double kTransportTolerance = 1e-9;

}  // namespace netcurv
