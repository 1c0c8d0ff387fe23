#include "netcurv/forman.hpp"

#include <cmath>
#include <set>

#include <stdexcept>

#include "doctest.h"
#include "netcurv/generators.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace netcurv;
using netcurv::testing::from_pairs;

namespace {

// Unit-weight identity terms rebuilt from the ordered-triple face scan.
struct IdentityTerms {
  int face_count = 0;       // m(e)
  int excluded_count = 0;   // p(e)
};

IdentityTerms brute_identity_terms(const DirectedGraph& g, EdgeId e) {
  auto faces = netcurv::testing::brute_ffl_faces(g);
  std::set<EdgeId> sharing;
  IdentityTerms terms;
  for (const TriangleFace& f : faces) {
    const EdgeId members[3] = {f.direct_edge, f.first_leg, f.second_leg};
    bool contains = false;
    for (EdgeId m : members) contains |= (m == e);
    if (!contains) continue;
    ++terms.face_count;
    for (EdgeId m : members) {
      if (m != e) sharing.insert(m);
    }
  }
  const Edge& ed = g.edge(e);
  std::set<EdgeId> neighborhood;
  for (EdgeId other : g.in_edges(ed.source, true)) {
    if (other != e) neighborhood.insert(other);
  }
  for (EdgeId other : g.out_edges(ed.target, true)) {
    if (other != e) neighborhood.insert(other);
  }
  for (EdgeId other : neighborhood) {
    if (sharing.contains(other)) ++terms.excluded_count;
  }
  return terms;
}

}  // namespace

TEST_CASE("directed fr on elementary graphs") {
  DirectedGraph single = from_pairs({{"a", "b"}});
  CHECK(fr_edge_directed(single, 0) == doctest::Approx(2.0));

  DirectedGraph fan = netcurv::testing::fan_in_fan_out();
  CHECK(fr_edge_directed(fan, 0) == doctest::Approx(-4.0));

  DirectedGraph cycle = netcurv::testing::three_cycle();
  CHECK(fr_edge_directed(cycle, 0) == doctest::Approx(0.0));
}

TEST_CASE("directed fr rejects self-loops") {
  DirectedGraph loop = from_pairs({{"a", "a"}});
  CHECK_THROWS_AS(fr_edge_directed(loop, 0), std::domain_error);
  FaceIndex faces(loop);
  CHECK_THROWS_AS(afr_edge_directed(loop, 0, faces), std::domain_error);
  CHECK_THROWS_AS(fr_edge_undirected(loop, 0), std::domain_error);
  CHECK_THROWS_AS(afr_edge_undirected(loop, 0), std::domain_error);
}

TEST_CASE("directed fr closed form on unit weights") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    DirectedGraph g = generate_er(ErParams{22, 0.05 + 0.02 * static_cast<double>(seed), seed});
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      double expected = 2.0 - g.in_degree_no_loops(ed.source) - g.out_degree_no_loops(ed.target);
      CHECK(fr_edge_directed(g, e) == expected);
    }
  }
}

TEST_CASE("fr scales linearly with a common weight factor") {
  DirectedGraph base = netcurv::testing::fan_in_fan_out_with_triangle();
  const double factor = 3.75;
  std::vector<std::tuple<VertexId, VertexId, double>> edges;
  for (const Edge& e : base.edges()) edges.emplace_back(e.source, e.target, factor);
  std::vector<double> vertex_weights(static_cast<std::size_t>(base.vertex_count()), factor);
  DirectedGraph scaled(base.vertex_count(), edges, vertex_weights);

  FaceIndex base_faces(base);
  FaceIndex scaled_faces(scaled);
  for (int f = 0; f < static_cast<int>(scaled_faces.faces().size()); ++f) {
    scaled_faces.set_face_weight(f, factor);
  }
  for (EdgeId e = 0; e < base.edge_count(); ++e) {
    CHECK(fr_edge_directed(scaled, e) ==
          doctest::Approx(factor * fr_edge_directed(base, e)).epsilon(1e-12));
    CHECK(afr_edge_directed(scaled, e, scaled_faces) ==
          doctest::Approx(factor * afr_edge_directed(base, e, base_faces)).epsilon(1e-12));
  }
}

TEST_CASE("undirected fr on elementary graphs") {
  DirectedGraph single = from_pairs({{"a", "b"}});
  CHECK(fr_edge_undirected(single, 0) == doctest::Approx(2.0));

  DirectedGraph path = from_pairs({{"a", "b"}, {"b", "c"}});
  CHECK(fr_edge_undirected(path, 0) == doctest::Approx(1.0));

  DirectedGraph star = from_pairs({{"c", "l1"}, {"c", "l2"}, {"c", "l3"}});
  CHECK(fr_edge_undirected(star, 0) == doctest::Approx(0.0));
}

TEST_CASE("directed afr on triangles") {
  DirectedGraph ffl = netcurv::testing::ffl_triangle();
  FaceIndex faces(ffl);
  CHECK(afr_edge_directed(ffl, 0, faces) == doctest::Approx(3.0));  // direct edge
  CHECK(afr_edge_directed(ffl, 1, faces) == doctest::Approx(3.0));  // first leg

  DirectedGraph fan = netcurv::testing::fan_in_fan_out_with_triangle();
  FaceIndex fan_faces(fan);
  CHECK(fr_edge_directed(fan, 0) == doctest::Approx(-4.0));
  CHECK(afr_edge_directed(fan, 0, fan_faces) == doctest::Approx(-3.0));
}

TEST_CASE("direct-only face membership drops leg contributions") {
  DirectedGraph ffl = netcurv::testing::ffl_triangle();
  FaceIndex direct_only(ffl, FaceIndex::Membership::kDirectOnly);
  CHECK(afr_edge_directed(ffl, 0, direct_only) == doctest::Approx(3.0));
  CHECK(afr_edge_directed(ffl, 1, direct_only) == doctest::Approx(1.0));
}

TEST_CASE("directed afr identity against brute-force faces") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    DirectedGraph g = generate_er(ErParams{16, 0.05 + 0.015 * static_cast<double>(seed), seed + 100});
    FaceIndex faces(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto terms = brute_identity_terms(g, e);
      double expected = fr_edge_directed(g, e) + terms.face_count + terms.excluded_count;
      CHECK(afr_edge_directed(g, e, faces) == expected);
    }
  }
}

TEST_CASE("undirected afr on elementary graphs") {
  DirectedGraph triangle = from_pairs({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  for (EdgeId e = 0; e < 3; ++e) {
    CHECK(afr_edge_undirected(triangle, e) == doctest::Approx(3.0));
  }
  DirectedGraph square = from_pairs({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  for (EdgeId e = 0; e < 4; ++e) {
    CHECK(afr_edge_undirected(square, e) == doctest::Approx(0.0));
  }
  DirectedGraph single = from_pairs({{"a", "b"}});
  CHECK(afr_edge_undirected(single, 0) == doctest::Approx(2.0));
}

TEST_CASE("undirected afr equals fr plus three triangles per edge") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    // one orientation per vertex pair, i.e. a plain undirected graph
    DirectedGraph seeded = generate_er(ErParams{18, 0.1 + 0.01 * static_cast<double>(seed), seed});
    std::vector<std::tuple<VertexId, VertexId, double>> edges;
    for (const Edge& e : seeded.edges()) {
      VertexId lo = std::min(e.source, e.target);
      VertexId hi = std::max(e.source, e.target);
      if (lo != hi) edges.emplace_back(lo, hi, 1.0);
    }
    DirectedGraph g(seeded.vertex_count(), edges);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      int triangles = netcurv::testing::brute_triangle_count(g, e);
      CHECK(afr_edge_undirected(g, e) == fr_edge_undirected(g, e) + 3.0 * triangles);
    }
  }
}

TEST_CASE("vertex curvature aggregation") {
  DirectedGraph single = from_pairs({{"a", "b"}});
  FaceIndex faces(single);
  auto edge_values = forman_all_edges(single, faces);
  std::vector<double> fr{edge_values[0].fr}, afr{edge_values[0].afr};
  auto rows = vertex_forman(single, fr, afr);
  CHECK(rows[0].f_out == 2.0);
  CHECK(rows[0].f_in == 0.0);
  CHECK(rows[0].f_total == -2.0);
  CHECK(rows[1].f_in == 2.0);
  CHECK(rows[1].f_total == 2.0);

  DirectedGraph cycle = netcurv::testing::three_cycle();
  FaceIndex cycle_faces(cycle);
  auto cycle_values = forman_all_edges(cycle, cycle_faces);
  std::vector<double> cfr, cafr;
  for (const auto& v : cycle_values) {
    cfr.push_back(v.fr);
    cafr.push_back(v.afr);
  }
  for (const auto& row : vertex_forman(cycle, cfr, cafr)) {
    CHECK(row.f_in == 0.0);
    CHECK(row.f_out == 0.0);
    CHECK(row.f_total == 0.0);
  }
}

TEST_CASE("isolated vertices aggregate to zero") {
  DirectedGraph g = build_graph({{"a", "b", std::nullopt}}, {{"a", 1.0}, {"b", 1.0}, {"c", 1.0}});
  FaceIndex faces(g);
  auto values = forman_all_edges(g, faces);
  std::vector<double> fr, afr;
  for (const auto& v : values) {
    fr.push_back(v.fr);
    afr.push_back(v.afr);
  }
  auto rows = vertex_forman(g, fr, afr);
  CHECK(rows[2].f_in == 0.0);
  CHECK(rows[2].f_out == 0.0);
  CHECK(rows[2].f_total == 0.0);
  CHECK(rows[2].afr_in == 0.0);
  CHECK(rows[2].afr_out == 0.0);
}

TEST_CASE("total flow sums to zero across the graph") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    DirectedGraph g = generate_er(ErParams{24, 0.15, seed + 500});
    FaceIndex faces(g);
    auto values = forman_all_edges(g, faces);
    std::vector<double> fr, afr;
    for (const auto& v : values) {
      fr.push_back(v.fr);
      afr.push_back(v.afr);
    }
    double total = 0.0;
    for (const auto& row : vertex_forman(g, fr, afr)) total += row.f_total;
    CHECK(total == 0.0);  // integer-valued under unit weights
  }
}

TEST_CASE("threshold subnetwork") {
  DirectedGraph fan = netcurv::testing::fan_in_fan_out();
  FaceIndex faces(fan);
  auto values = forman_all_edges(fan, faces);
  std::vector<double> fr;
  for (const auto& v : values) fr.push_back(v.fr);

  DirectedGraph everything = threshold_subnetwork(fan, fr, 1e18);
  CHECK(everything.edge_count() == fan.edge_count());

  DirectedGraph empty = threshold_subnetwork(fan, fr, -100.0);
  CHECK(empty.edge_count() == 0);
  CHECK(empty.vertex_count() == 0);

  DirectedGraph tight = threshold_subnetwork(fan, fr, -4.0);
  REQUIRE(tight.edge_count() == 1);
  CHECK(tight.label(tight.edge(0).source) == "v1");
  CHECK(tight.label(tight.edge(0).target) == "v2");
  CHECK(tight.vertex_count() == 2);
}
