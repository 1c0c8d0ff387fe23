#include "netcurv/transport.hpp"

#include <cmath>
#include <limits>

#include <stdexcept>

#include "doctest.h"
#include "netcurv/rng.hpp"
#include "support/oracles.hpp"

using namespace netcurv;
using netcurv::testing::Rational;

namespace {

void check_certificate(const TransportProblem& p, const TransportSolution& s) {
  const std::size_t r = p.supply.size();
  const std::size_t c = p.demand.size();
  for (std::size_t i = 0; i < r; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < c; ++j) row += s.plan_at(i, j, c);
    CHECK(std::abs(row - p.supply[i]) <= 1e-9);
  }
  for (std::size_t j = 0; j < c; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < r; ++i) col += s.plan_at(i, j, c);
    CHECK(std::abs(col - p.demand[j]) <= 1e-9);
  }
  double dual_value = 0.0;
  for (std::size_t i = 0; i < r; ++i) dual_value += s.dual_u[i] * p.supply[i];
  for (std::size_t j = 0; j < c; ++j) dual_value += s.dual_v[j] * p.demand[j];
  CHECK(std::abs(dual_value - s.cost) <= 1e-9);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      CHECK(s.dual_u[i] + s.dual_v[j] <= p.cost_at(i, j) + 1e-9);
    }
  }
}

TransportProblem random_problem(SplitMix64& rng, int max_support) {
  const int r = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_support)));
  const int c = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_support)));
  // masses as k/denominator so the enumeration oracle sees exact rationals
  auto masses = [&](int count) {
    std::vector<long long> parts(static_cast<std::size_t>(count));
    long long total = 0;
    for (auto& part : parts) {
      part = 1 + static_cast<long long>(rng.next_below(8));
      total += part;
    }
    std::vector<double> out;
    for (long long part : parts) out.push_back(static_cast<double>(part) / static_cast<double>(total));
    return std::pair(parts, out);
  };
  auto [sp, supply] = masses(r);
  auto [dp, demand] = masses(c);
  TransportProblem problem;
  problem.supply = supply;
  problem.demand = demand;
  for (int i = 0; i < r * c; ++i) {
    problem.cost.push_back(static_cast<double>(rng.next_below(7)));
  }
  return problem;
}

// Rebuilds the exact rational masses that random_problem floated.
void rational_view(const TransportProblem& p, std::vector<Rational>& supply,
                   std::vector<Rational>& demand, std::vector<Rational>& cost) {
  auto to_rational = [](const std::vector<double>& values) {
    // values are k/total with small integer k
    std::vector<Rational> out;
    long long denom = 1;
    for (long long d = 1; d <= 256; ++d) {
      bool ok = true;
      for (double v : values) {
        double scaled = v * static_cast<double>(d);
        if (std::abs(scaled - std::round(scaled)) > 1e-9) {
          ok = false;
          break;
        }
      }
      if (ok) {
        denom = d;
        break;
      }
    }
    for (double v : values) {
      out.emplace_back(static_cast<long long>(std::llround(v * static_cast<double>(denom))), denom);
    }
    return out;
  };
  supply = to_rational(p.supply);
  demand = to_rational(p.demand);
  for (double c : p.cost) cost.emplace_back(static_cast<long long>(std::llround(c)));
}

}  // namespace

TEST_CASE("degenerate single-cell problem") {
  TransportProblem p{{1.0}, {1.0}, {4.5}};
  TransportSolution s = solve_transport(p);
  CHECK(s.cost == doctest::Approx(4.5));
  CHECK(s.plan[0] == doctest::Approx(1.0));
  check_certificate(p, s);
}

TEST_CASE("zero-cost matching is found") {
  TransportProblem p{{0.5, 0.5}, {0.5, 0.5}, {0.0, 1.0, 1.0, 0.0}};
  TransportSolution s = solve_transport(p);
  CHECK(s.cost == doctest::Approx(0.0));
  CHECK(s.plan_at(0, 0, 2) == doctest::Approx(0.5));
  CHECK(s.plan_at(1, 1, 2) == doctest::Approx(0.5));
  CHECK(s.plan_at(0, 1, 2) == doctest::Approx(0.0));
  check_certificate(p, s);
}

TEST_CASE("asymmetric two-by-two optimum") {
  TransportProblem p{{2.0 / 3.0, 1.0 / 3.0}, {1.0 / 3.0, 2.0 / 3.0}, {0.0, 1.0, 1.0, 0.0}};
  TransportSolution s = solve_transport(p);
  // cross-checked against the exhaustive vertex enumeration below
  CHECK(s.cost == doctest::Approx(1.0 / 3.0));
  check_certificate(p, s);

  std::vector<Rational> supply{{2, 3}, {1, 3}};
  std::vector<Rational> demand{{1, 3}, {2, 3}};
  std::vector<Rational> cost{{0}, {1}, {1}, {0}};
  Rational exact = netcurv::testing::transport_min_cost_enumerated(supply, demand, cost);
  CHECK(exact == Rational(1, 3));
}

TEST_CASE("invalid problems are rejected") {
  CHECK_THROWS_AS(solve_transport(TransportProblem{{0.6}, {1.0}, {1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(solve_transport(TransportProblem{{1.0}, {1.0}, {-1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(
      solve_transport(TransportProblem{{1.0}, {1.0}, {std::numeric_limits<double>::infinity()}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      solve_transport(TransportProblem{{1.0}, {1.0}, {std::numeric_limits<double>::quiet_NaN()}}),
      std::invalid_argument);
  CHECK_THROWS_AS(solve_transport(TransportProblem{{}, {}, {}}), std::invalid_argument);
}

TEST_CASE("solver matches the polytope enumeration on small rational problems") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    TransportProblem p = random_problem(rng, 3);
    TransportSolution s = solve_transport(p);
    check_certificate(p, s);
    std::vector<Rational> supply, demand, cost;
    rational_view(p, supply, demand, cost);
    Rational exact = netcurv::testing::transport_min_cost_enumerated(supply, demand, cost);
    CHECK(std::abs(s.cost - exact.to_double()) <= 1e-9);
  }
}

TEST_CASE("certificates hold on larger random problems") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    TransportProblem p = random_problem(rng, 9);
    TransportSolution s = solve_transport(p);
    CHECK(s.cost >= -1e-12);
    check_certificate(p, s);
  }
}

TEST_CASE("identity alignment with zero diagonal costs nothing") {
  TransportProblem p{{0.25, 0.25, 0.5}, {0.25, 0.25, 0.5},
                     {0.0, 2.0, 3.0, 2.0, 0.0, 1.0, 5.0, 1.0, 0.0}};
  CHECK(solve_transport(p).cost == doctest::Approx(0.0));
}

TEST_CASE("optimal cost is invariant under supply permutation") {
  SplitMix64 rng(91);
  for (int trial = 0; trial < 40; ++trial) {
    TransportProblem p = random_problem(rng, 5);
    const std::size_t r = p.supply.size();
    const std::size_t c = p.demand.size();
    double base = solve_transport(p).cost;

    std::vector<std::size_t> perm(r);
    for (std::size_t i = 0; i < r; ++i) perm[i] = i;
    rng.shuffle(std::span<std::size_t>(perm));
    TransportProblem shuffled;
    shuffled.demand = p.demand;
    shuffled.supply.resize(r);
    shuffled.cost.resize(r * c);
    for (std::size_t i = 0; i < r; ++i) {
      shuffled.supply[i] = p.supply[perm[i]];
      for (std::size_t j = 0; j < c; ++j) {
        shuffled.cost[i * c + j] = p.cost_at(perm[i], j);
      }
    }
    CHECK(solve_transport(shuffled).cost == doctest::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("deterministic output for identical input") {
  SplitMix64 rng(5);
  TransportProblem p = random_problem(rng, 6);
  TransportSolution a = solve_transport(p);
  TransportSolution b = solve_transport(p);
  CHECK(a.plan == b.plan);
  CHECK(a.cost == b.cost);
  CHECK(a.dual_u == b.dual_u);
  CHECK(a.dual_v == b.dual_v);
}
