#include "netcurv/forman.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace netcurv {

namespace {

const Edge& non_loop_edge(const DirectedGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  if (ed.self_loop) {
    throw std::domain_error("curvature undefined for self-loops");
  }
  return ed;
}

}  // namespace

double fr_edge_directed(const DirectedGraph& g, EdgeId e) {
  const Edge& ed = non_loop_edge(g, e);
  const double we = ed.weight;
  const double wv1 = g.vertex_weight(ed.source);
  const double wv2 = g.vertex_weight(ed.target);

  double in_sum = 0.0;
  for (EdgeId other : g.in_edges(ed.source)) {
    const Edge& oe = g.edge(other);
    if (other == e || oe.self_loop) continue;
    in_sum += wv1 / std::sqrt(we * oe.weight);
  }
  double out_sum = 0.0;
  for (EdgeId other : g.out_edges(ed.target)) {
    const Edge& oe = g.edge(other);
    if (other == e || oe.self_loop) continue;
    out_sum += wv2 / std::sqrt(we * oe.weight);
  }
  return we * (wv1 / we - in_sum) + we * (wv2 / we - out_sum);
}

double fr_edge_undirected(const DirectedGraph& g, EdgeId e) {
  const Edge& ed = non_loop_edge(g, e);
  const double we = ed.weight;
  auto endpoint_sum = [&](VertexId v) {
    double sum = 0.0;
    auto add = [&](EdgeId other) {
      const Edge& oe = g.edge(other);
      if (other == e || oe.self_loop) return;
      sum += g.vertex_weight(v) / std::sqrt(we * oe.weight);
    };
    for (EdgeId other : g.in_edges(v)) add(other);
    for (EdgeId other : g.out_edges(v)) add(other);
    return sum;
  };
  return we * (g.vertex_weight(ed.source) / we - endpoint_sum(ed.source)) +
         we * (g.vertex_weight(ed.target) / we - endpoint_sum(ed.target));
}

double afr_edge_directed(const DirectedGraph& g, EdgeId e, const FaceIndex& faces) {
  const Edge& ed = non_loop_edge(g, e);
  const double we = ed.weight;
  const double wv1 = g.vertex_weight(ed.source);
  const double wv2 = g.vertex_weight(ed.target);

  double face_term = 0.0;
  for (int fid : faces.faces_of_edge(e)) {
    face_term += we / faces.faces()[static_cast<std::size_t>(fid)].weight;
  }
  double in_sum = 0.0;
  for (EdgeId other : g.in_edges(ed.source)) {
    const Edge& oe = g.edge(other);
    if (other == e || oe.self_loop || faces.edges_share_face(e, other)) continue;
    in_sum += wv1 / std::sqrt(we * oe.weight);
  }
  double out_sum = 0.0;
  for (EdgeId other : g.out_edges(ed.target)) {
    const Edge& oe = g.edge(other);
    if (other == e || oe.self_loop || faces.edges_share_face(e, other)) continue;
    out_sum += wv2 / std::sqrt(we * oe.weight);
  }
  return we * (face_term + wv1 / we + wv2 / we - in_sum - out_sum);
}

double afr_edge_undirected(const DirectedGraph& g, EdgeId e) {
  const Edge& ed = non_loop_edge(g, e);
  const double we = ed.weight;
  const VertexId v1 = ed.source;
  const VertexId v2 = ed.target;

  auto adjacent = [&](VertexId a, VertexId b) {
    return g.find_edge(a, b) >= 0 || g.find_edge(b, a) >= 0;
  };

  // triangles over vertex triples: third vertices adjacent to both
  // endpoints ignoring direction
  double face_term = 0.0;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  auto consider = [&](VertexId w) {
    if (w == v1 || w == v2 || seen[static_cast<std::size_t>(w)]) return;
    seen[static_cast<std::size_t>(w)] = 1;
    if (adjacent(v1, w) && adjacent(v2, w)) face_term += we;  // unit face weight
  };
  for (EdgeId other : g.in_edges(v1)) consider(g.edge(other).source);
  for (EdgeId other : g.out_edges(v1)) consider(g.edge(other).target);

  auto endpoint_sum = [&](VertexId v, VertexId opposite) {
    double sum = 0.0;
    auto add = [&](EdgeId other, VertexId neighbor) {
      const Edge& oe = g.edge(other);
      if (other == e || oe.self_loop) return;
      if (adjacent(neighbor, opposite)) return;  // co-bounds a triangle with e
      sum += g.vertex_weight(v) / std::sqrt(we * oe.weight);
    };
    for (EdgeId other : g.in_edges(v)) add(other, g.edge(other).source);
    for (EdgeId other : g.out_edges(v)) add(other, g.edge(other).target);
    return sum;
  };
  return we * (face_term + g.vertex_weight(v1) / we + g.vertex_weight(v2) / we -
               endpoint_sum(v1, v2) - endpoint_sum(v2, v1));
}

std::vector<EdgeFormanValues> forman_all_edges(const DirectedGraph& g, const FaceIndex& faces) {
  std::vector<EdgeFormanValues> result;
  result.reserve(static_cast<std::size_t>(g.edge_count()));
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).self_loop) {
      result.push_back(EdgeFormanValues{e, nan, nan});
    } else {
      result.push_back(EdgeFormanValues{e, fr_edge_directed(g, e), afr_edge_directed(g, e, faces)});
    }
  }
  return result;
}

std::vector<VertexFormanValues> vertex_forman(const DirectedGraph& g, std::span<const double> fr,
                                              std::span<const double> afr) {
  if (static_cast<EdgeId>(fr.size()) != g.edge_count() ||
      static_cast<EdgeId>(afr.size()) != g.edge_count()) {
    throw std::invalid_argument("vertex_forman: value vector size mismatch");
  }
  std::vector<VertexFormanValues> result(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    result[static_cast<std::size_t>(v)].vertex = v;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.self_loop) continue;
    if (std::isnan(fr[static_cast<std::size_t>(e)]) || std::isnan(afr[static_cast<std::size_t>(e)])) {
      throw std::invalid_argument("vertex_forman: curvature missing for a non-loop edge");
    }
    auto& target_row = result[static_cast<std::size_t>(ed.target)];
    auto& source_row = result[static_cast<std::size_t>(ed.source)];
    target_row.f_in += fr[static_cast<std::size_t>(e)];
    source_row.f_out += fr[static_cast<std::size_t>(e)];
    target_row.afr_in += afr[static_cast<std::size_t>(e)];
    source_row.afr_out += afr[static_cast<std::size_t>(e)];
  }
  for (auto& row : result) row.f_total = row.f_in - row.f_out;
  return result;
}

DirectedGraph threshold_subnetwork(const DirectedGraph& g, std::span<const double> values,
                                   double threshold) {
  if (static_cast<EdgeId>(values.size()) != g.edge_count()) {
    throw std::invalid_argument("threshold_subnetwork: value vector size mismatch");
  }
  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (values[static_cast<std::size_t>(e)] <= threshold) kept.push_back(e);
  }
  return g.edge_induced_subgraph(kept);
}

}  // namespace netcurv
