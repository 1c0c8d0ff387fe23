#include "netcurv/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace netcurv {

namespace {

constexpr double kMassTolerance = 1e-12;
constexpr double kReducedCostEps = 1e-11;

struct BasisCell {
  int row;
  int col;
  double flow;
};

// Spanning-tree basis over r row nodes and c column nodes. Node ids:
// rows 0..r-1, columns r..r+c-1.
struct Basis {
  int rows;
  int cols;
  std::vector<BasisCell> cells;            // always rows + cols - 1 entries
  std::vector<std::vector<int>> adjacency;  // node -> indices into cells

  explicit Basis(int r, int c) : rows(r), cols(c), adjacency(static_cast<std::size_t>(r + c)) {}

  int col_node(int j) const { return rows + j; }

  void attach(int cell_index) {
    const BasisCell& cell = cells[static_cast<std::size_t>(cell_index)];
    adjacency[static_cast<std::size_t>(cell.row)].push_back(cell_index);
    adjacency[static_cast<std::size_t>(col_node(cell.col))].push_back(cell_index);
  }

  void detach(int cell_index) {
    const BasisCell& cell = cells[static_cast<std::size_t>(cell_index)];
    auto drop = [&](int node) {
      auto& list = adjacency[static_cast<std::size_t>(node)];
      list.erase(std::find(list.begin(), list.end(), cell_index));
    };
    drop(cell.row);
    drop(col_node(cell.col));
  }
};

void validate(const TransportProblem& p, std::vector<double>& supply, std::vector<double>& demand) {
  if (p.supply.empty() || p.demand.empty()) {
    throw std::invalid_argument("transport: empty support");
  }
  if (p.cost.size() != p.supply.size() * p.demand.size()) {
    throw std::invalid_argument("transport: cost matrix shape mismatch");
  }
  for (double c : p.cost) {
    if (!std::isfinite(c) || c < 0.0) {
      throw std::invalid_argument("transport: costs must be finite and non-negative");
    }
  }
  double s_sum = 0.0, d_sum = 0.0;
  for (double s : p.supply) {
    if (!(s > 0.0)) throw std::invalid_argument("transport: supplies must be positive");
    s_sum += s;
  }
  for (double d : p.demand) {
    if (!(d > 0.0)) throw std::invalid_argument("transport: demands must be positive");
    d_sum += d;
  }
  if (std::abs(s_sum - 1.0) > kMassTolerance || std::abs(d_sum - 1.0) > kMassTolerance) {
    throw std::invalid_argument("transport: measures must each sum to 1");
  }
  supply = p.supply;
  demand = p.demand;
  for (double& s : supply) s /= s_sum;
  for (double& d : demand) d /= d_sum;
}

Basis northwest_corner(const std::vector<double>& supply, const std::vector<double>& demand) {
  const int r = static_cast<int>(supply.size());
  const int c = static_cast<int>(demand.size());
  Basis basis(r, c);
  std::vector<double> s = supply;
  std::vector<double> d = demand;
  int i = 0, j = 0;
  for (;;) {
    double amount = std::min(s[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(j)]);
    basis.cells.push_back(BasisCell{i, j, amount});
    if (s[static_cast<std::size_t>(i)] <= d[static_cast<std::size_t>(j)]) {
      d[static_cast<std::size_t>(j)] -= s[static_cast<std::size_t>(i)];
      s[static_cast<std::size_t>(i)] = 0.0;
    } else {
      s[static_cast<std::size_t>(i)] -= d[static_cast<std::size_t>(j)];
      d[static_cast<std::size_t>(j)] = 0.0;
    }
    if (i == r - 1 && j == c - 1) break;
    if (s[static_cast<std::size_t>(i)] == 0.0 && i < r - 1) {
      ++i;
    } else {
      ++j;
    }
  }
  for (int k = 0; k < static_cast<int>(basis.cells.size()); ++k) basis.attach(k);
  return basis;
}

void compute_duals(const TransportProblem& p, const Basis& basis, std::vector<double>& u,
                   std::vector<double>& v) {
  const int r = basis.rows;
  const int c = basis.cols;
  u.assign(static_cast<std::size_t>(r), 0.0);
  v.assign(static_cast<std::size_t>(c), 0.0);
  std::vector<char> seen(static_cast<std::size_t>(r + c), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int node = stack.back();
    stack.pop_back();
    for (int ci : basis.adjacency[static_cast<std::size_t>(node)]) {
      const BasisCell& cell = basis.cells[static_cast<std::size_t>(ci)];
      int other = (node == cell.row) ? basis.col_node(cell.col) : cell.row;
      if (seen[static_cast<std::size_t>(other)]) continue;
      seen[static_cast<std::size_t>(other)] = 1;
      double cost = p.cost_at(static_cast<std::size_t>(cell.row), static_cast<std::size_t>(cell.col));
      if (other == cell.row) {
        u[static_cast<std::size_t>(cell.row)] = cost - v[static_cast<std::size_t>(cell.col)];
      } else {
        v[static_cast<std::size_t>(cell.col)] = cost - u[static_cast<std::size_t>(cell.row)];
      }
      stack.push_back(other);
    }
  }
}

// Tree path from the entering cell's row node to its column node; the
// returned cell indices alternate -, +, -, ... around the pivot cycle.
std::vector<int> tree_path(const Basis& basis, int row, int col) {
  const int n = basis.rows + basis.cols;
  std::vector<int> parent_cell(static_cast<std::size_t>(n), -1);
  std::vector<int> parent_node(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{row};
  seen[static_cast<std::size_t>(row)] = 1;
  const int goal = basis.col_node(col);
  while (!stack.empty()) {
    int node = stack.back();
    stack.pop_back();
    if (node == goal) break;
    for (int ci : basis.adjacency[static_cast<std::size_t>(node)]) {
      const BasisCell& cell = basis.cells[static_cast<std::size_t>(ci)];
      int other = (node == cell.row) ? basis.col_node(cell.col) : cell.row;
      if (seen[static_cast<std::size_t>(other)]) continue;
      seen[static_cast<std::size_t>(other)] = 1;
      parent_cell[static_cast<std::size_t>(other)] = ci;
      parent_node[static_cast<std::size_t>(other)] = node;
      stack.push_back(other);
    }
  }
  std::vector<int> path;
  for (int node = goal; node != row; node = parent_node[static_cast<std::size_t>(node)]) {
    path.push_back(parent_cell[static_cast<std::size_t>(node)]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

TransportSolution solve_transport(const TransportProblem& problem) {
  std::vector<double> supply, demand;
  validate(problem, supply, demand);
  const int r = static_cast<int>(supply.size());
  const int c = static_cast<int>(demand.size());

  Basis basis = northwest_corner(supply, demand);
  std::vector<double> u, v;

  const long max_pivots = 1000 + 200L * r * c;
  long pivots = 0;
  for (;;) {
    compute_duals(problem, basis, u, v);
    int enter_row = -1, enter_col = -1;
    for (int i = 0; i < r && enter_row < 0; ++i) {
      for (int j = 0; j < c; ++j) {
        double reduced = problem.cost_at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) -
                         u[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)];
        if (reduced < -kReducedCostEps) {
          enter_row = i;
          enter_col = j;
          break;
        }
      }
    }
    if (enter_row < 0) break;
    if (++pivots > max_pivots) {
      throw std::runtime_error("transport: pivot limit exceeded");
    }

    std::vector<int> path = tree_path(basis, enter_row, enter_col);
    // Odd positions on the path gain flow, even positions lose it.
    double theta = std::numeric_limits<double>::infinity();
    int leaving = -1;
    for (std::size_t k = 0; k < path.size(); k += 2) {
      const BasisCell& cell = basis.cells[static_cast<std::size_t>(path[k])];
      bool better = cell.flow < theta - 1e-15;
      bool tie = std::abs(cell.flow - theta) <= 1e-15;
      if (better) {
        theta = cell.flow;
        leaving = path[k];
      } else if (tie && leaving >= 0) {
        const BasisCell& best = basis.cells[static_cast<std::size_t>(leaving)];
        if (cell.row < best.row || (cell.row == best.row && cell.col < best.col)) {
          leaving = path[k];
        }
      }
    }
    for (std::size_t k = 0; k < path.size(); ++k) {
      BasisCell& cell = basis.cells[static_cast<std::size_t>(path[k])];
      cell.flow += (k % 2 == 0) ? -theta : theta;
      if (cell.flow < 0.0) cell.flow = 0.0;  // clamp rounding residue
    }
    basis.detach(leaving);
    basis.cells[static_cast<std::size_t>(leaving)] = BasisCell{enter_row, enter_col, theta};
    basis.attach(leaving);
  }

  TransportSolution solution;
  solution.plan.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0.0);
  for (const BasisCell& cell : basis.cells) {
    solution.plan[static_cast<std::size_t>(cell.row) * static_cast<std::size_t>(c) +
                  static_cast<std::size_t>(cell.col)] = cell.flow;
  }
  double total = 0.0;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      total += solution.plan[static_cast<std::size_t>(i * c + j)] *
               problem.cost_at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  solution.cost = total;
  compute_duals(problem, basis, u, v);
  solution.dual_u = u;
  solution.dual_v = v;

  // The returned duals certify optimality; a violation here means the
  // pivot loop terminated on an infeasible basis, which must surface.
  double dual_objective = 0.0;
  for (int i = 0; i < r; ++i) dual_objective += u[static_cast<std::size_t>(i)] * supply[static_cast<std::size_t>(i)];
  for (int j = 0; j < c; ++j) dual_objective += v[static_cast<std::size_t>(j)] * demand[static_cast<std::size_t>(j)];
  if (std::abs(dual_objective - solution.cost) > kTransportTolerance) {
    throw std::runtime_error("transport: strong duality check failed");
  }
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      double slack = problem.cost_at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) -
                     u[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)];
      if (slack < -kTransportTolerance) {
        throw std::runtime_error("transport: dual feasibility check failed");
      }
    }
  }
  return solution;
}

}  // namespace netcurv
