#include "netcurv/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace netcurv {

namespace {

std::string default_label(VertexId v) { return std::to_string(v); }

}  // namespace

DirectedGraph::DirectedGraph(VertexId vertex_count,
                             const std::vector<std::tuple<VertexId, VertexId, double>>& edge_list,
                             std::vector<double> vertex_weights,
                             std::vector<std::string> labels) {
  if (vertex_count < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (vertex_weights.empty()) {
    vertex_weights.assign(static_cast<std::size_t>(vertex_count), 1.0);
  } else if (static_cast<VertexId>(vertex_weights.size()) != vertex_count) {
    throw std::invalid_argument("vertex weight vector size mismatch");
  }
  for (double w : vertex_weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("vertex weights must be strictly positive");
    }
  }
  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(vertex_count));
    for (VertexId v = 0; v < vertex_count; ++v) labels.push_back(default_label(v));
  } else if (static_cast<VertexId>(labels.size()) != vertex_count) {
    throw std::invalid_argument("label vector size mismatch");
  }
  vertex_weights_ = std::move(vertex_weights);
  labels_ = std::move(labels);
  in_adj_.assign(vertex_weights_.size(), {});
  out_adj_.assign(vertex_weights_.size(), {});
  out_sorted_.assign(vertex_weights_.size(), {});
  in_deg_nl_.assign(vertex_weights_.size(), 0);
  out_deg_nl_.assign(vertex_weights_.size(), 0);

  edges_.reserve(edge_list.size());
  for (const auto& [u, v, w] : edge_list) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw std::out_of_range("edge endpoint out of range");
    }
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("edge weights must be strictly positive");
    }
    auto& slot = out_sorted_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(slot.begin(), slot.end(), std::make_pair(v, EdgeId{0}),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it != slot.end() && it->first == v) {
      ++duplicates_collapsed_;  // keep-first policy
      continue;
    }
    EdgeId id = static_cast<EdgeId>(edges_.size());
    bool loop = (u == v);
    edges_.push_back(Edge{u, v, w, loop});
    slot.insert(it, {v, id});
    out_adj_[static_cast<std::size_t>(u)].push_back(id);
    in_adj_[static_cast<std::size_t>(v)].push_back(id);
    if (loop) {
      ++self_loop_count_;
    } else {
      ++out_deg_nl_[static_cast<std::size_t>(u)];
      ++in_deg_nl_[static_cast<std::size_t>(v)];
    }
    if (w != 1.0) unweighted_ = false;
  }
}

void DirectedGraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex index out of range");
}

const Edge& DirectedGraph::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) throw std::out_of_range("edge index out of range");
  return edges_[static_cast<std::size_t>(e)];
}

double DirectedGraph::vertex_weight(VertexId v) const {
  check_vertex(v);
  return vertex_weights_[static_cast<std::size_t>(v)];
}

const std::string& DirectedGraph::label(VertexId v) const {
  check_vertex(v);
  return labels_[static_cast<std::size_t>(v)];
}

const std::vector<EdgeId>& DirectedGraph::in_edges(VertexId v) const {
  check_vertex(v);
  return in_adj_[static_cast<std::size_t>(v)];
}

const std::vector<EdgeId>& DirectedGraph::out_edges(VertexId v) const {
  check_vertex(v);
  return out_adj_[static_cast<std::size_t>(v)];
}

std::vector<EdgeId> DirectedGraph::in_edges(VertexId v, bool exclude_self_loops) const {
  std::vector<EdgeId> result = in_edges(v);
  if (exclude_self_loops) {
    std::erase_if(result, [this](EdgeId e) { return edges_[static_cast<std::size_t>(e)].self_loop; });
  }
  return result;
}

std::vector<EdgeId> DirectedGraph::out_edges(VertexId v, bool exclude_self_loops) const {
  std::vector<EdgeId> result = out_edges(v);
  if (exclude_self_loops) {
    std::erase_if(result, [this](EdgeId e) { return edges_[static_cast<std::size_t>(e)].self_loop; });
  }
  return result;
}

int DirectedGraph::in_degree_no_loops(VertexId v) const {
  check_vertex(v);
  return in_deg_nl_[static_cast<std::size_t>(v)];
}

int DirectedGraph::out_degree_no_loops(VertexId v) const {
  check_vertex(v);
  return out_deg_nl_[static_cast<std::size_t>(v)];
}

std::vector<VertexId> DirectedGraph::in_neighbors_no_loops(VertexId v) const {
  std::vector<VertexId> result;
  for (EdgeId e : in_edges(v)) {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    if (!ed.self_loop) result.push_back(ed.source);
  }
  return result;
}

std::vector<VertexId> DirectedGraph::out_neighbors_no_loops(VertexId v) const {
  std::vector<VertexId> result;
  for (EdgeId e : out_edges(v)) {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    if (!ed.self_loop) result.push_back(ed.target);
  }
  return result;
}

EdgeId DirectedGraph::find_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& slot = out_sorted_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(slot.begin(), slot.end(), std::make_pair(v, EdgeId{0}),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  if (it != slot.end() && it->first == v) return it->second;
  return -1;
}

DirectedGraph DirectedGraph::subgraph_with_edges(const std::vector<char>& keep) const {
  if (static_cast<EdgeId>(keep.size()) != edge_count()) {
    throw std::invalid_argument("keep mask size mismatch");
  }
  std::vector<std::tuple<VertexId, VertexId, double>> kept;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    if (keep[static_cast<std::size_t>(e)]) {
      const Edge& ed = edges_[static_cast<std::size_t>(e)];
      kept.emplace_back(ed.source, ed.target, ed.weight);
    }
  }
  return DirectedGraph(vertex_count(), kept, vertex_weights_, labels_);
}

DirectedGraph DirectedGraph::edge_induced_subgraph(const std::vector<EdgeId>& edge_ids) const {
  std::unordered_map<VertexId, VertexId> remap;
  std::vector<double> weights;
  std::vector<std::string> labels;
  auto resolve = [&](VertexId v) {
    auto [it, inserted] = remap.try_emplace(v, static_cast<VertexId>(remap.size()));
    if (inserted) {
      weights.push_back(vertex_weights_[static_cast<std::size_t>(v)]);
      labels.push_back(labels_[static_cast<std::size_t>(v)]);
    }
    return it->second;
  };
  std::vector<std::tuple<VertexId, VertexId, double>> kept;
  kept.reserve(edge_ids.size());
  for (EdgeId e : edge_ids) {
    const Edge& ed = edge(e);
    VertexId u = resolve(ed.source);
    VertexId v = resolve(ed.target);
    kept.emplace_back(u, v, ed.weight);
  }
  return DirectedGraph(static_cast<VertexId>(remap.size()), kept, std::move(weights), std::move(labels));
}

DirectedGraph build_graph(const std::vector<EdgeListEntry>& entries,
                          const std::vector<std::pair<std::string, double>>& vertex_weights) {
  std::unordered_map<std::string, VertexId> index;
  std::vector<std::string> labels;
  std::vector<double> weights;
  auto resolve = [&](const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty vertex token");
    auto [it, inserted] = index.try_emplace(token, static_cast<VertexId>(index.size()));
    if (inserted) {
      labels.push_back(token);
      weights.push_back(1.0);
    }
    return it->second;
  };
  for (const auto& [token, w] : vertex_weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("vertex weight must be strictly positive: " + token);
    }
    weights[static_cast<std::size_t>(resolve(token))] = w;
  }
  std::vector<std::tuple<VertexId, VertexId, double>> edge_list;
  edge_list.reserve(entries.size());
  for (const auto& entry : entries) {
    double w = entry.weight.value_or(1.0);
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("edge weight must be strictly positive: " + entry.source + " " +
                                  entry.target);
    }
    VertexId u = resolve(entry.source);
    VertexId v = resolve(entry.target);
    edge_list.emplace_back(u, v, w);
  }
  return DirectedGraph(static_cast<VertexId>(index.size()), edge_list, std::move(weights),
                       std::move(labels));
}

std::vector<int> shortest_path_lengths(const DirectedGraph& g, VertexId source) {
  if (source < 0 || source >= g.vertex_count()) {
    throw std::out_of_range("source vertex out of range");
  }
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
  std::deque<VertexId> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    int d = dist[static_cast<std::size_t>(v)];
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.edge(e).target;
      if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
        dist[static_cast<std::size_t>(w)] = d + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<VertexId>> weakly_connected_components(const DirectedGraph& g) {
  const VertexId n = g.vertex_count();
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  int count = 0;
  std::deque<VertexId> queue;
  for (VertexId start = 0; start < n; ++start) {
    if (component[static_cast<std::size_t>(start)] != -1) continue;
    component[static_cast<std::size_t>(start)] = count;
    queue.push_back(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      auto visit = [&](VertexId w) {
        if (component[static_cast<std::size_t>(w)] == -1) {
          component[static_cast<std::size_t>(w)] = count;
          queue.push_back(w);
        }
      };
      for (EdgeId e : g.out_edges(v)) visit(g.edge(e).target);
      for (EdgeId e : g.in_edges(v)) visit(g.edge(e).source);
    }
    ++count;
  }
  std::vector<std::vector<VertexId>> result(static_cast<std::size_t>(count));
  for (VertexId v = 0; v < n; ++v) {
    result[static_cast<std::size_t>(component[static_cast<std::size_t>(v)])].push_back(v);
  }
  return result;
}

std::vector<TriangleFace> enumerate_ffl_faces(const DirectedGraph& g) {
  std::vector<TriangleFace> faces;
  for (EdgeId direct = 0; direct < g.edge_count(); ++direct) {
    const Edge& d = g.edge(direct);
    if (d.self_loop) continue;
    // apexes in ascending vertex order so output order is deterministic
    std::vector<std::pair<VertexId, EdgeId>> legs;
    for (EdgeId first : g.out_edges(d.source)) {
      const Edge& f = g.edge(first);
      if (f.self_loop || f.target == d.target) continue;
      legs.emplace_back(f.target, first);
    }
    std::sort(legs.begin(), legs.end());
    for (auto [apex, first] : legs) {
      EdgeId second = g.find_edge(apex, d.target);
      if (second < 0 || g.edge(second).self_loop) continue;
      faces.push_back(TriangleFace{apex, direct, first, second, 1.0});
    }
  }
  return faces;
}

FaceIndex::FaceIndex(const DirectedGraph& g, Membership mode) : mode_(mode) {
  faces_ = enumerate_ffl_faces(g);
  faces_by_edge_.assign(static_cast<std::size_t>(g.edge_count()), {});
  co_members_.assign(static_cast<std::size_t>(g.edge_count()), {});
  for (int fid = 0; fid < static_cast<int>(faces_.size()); ++fid) {
    const TriangleFace& f = faces_[static_cast<std::size_t>(fid)];
    const EdgeId members[3] = {f.direct_edge, f.first_leg, f.second_leg};
    for (EdgeId e : members) {
      if (mode_ == Membership::kDirectOnly && e != f.direct_edge) continue;
      faces_by_edge_[static_cast<std::size_t>(e)].push_back(fid);
      for (EdgeId other : members) {
        if (other != e) co_members_[static_cast<std::size_t>(e)].push_back(other);
      }
    }
  }
  for (auto& co : co_members_) {
    std::sort(co.begin(), co.end());
    co.erase(std::unique(co.begin(), co.end()), co.end());
  }
}

const std::vector<int>& FaceIndex::faces_of_edge(EdgeId e) const {
  if (e < 0 || e >= static_cast<EdgeId>(faces_by_edge_.size())) {
    throw std::out_of_range("edge index out of range");
  }
  return faces_by_edge_[static_cast<std::size_t>(e)];
}

bool FaceIndex::edges_share_face(EdgeId e, EdgeId other) const {
  const auto& co = co_members_.at(static_cast<std::size_t>(e));
  return std::binary_search(co.begin(), co.end(), other);
}

void FaceIndex::set_face_weight(int face_id, double weight) {
  if (!(weight > 0.0)) throw std::invalid_argument("face weights must be strictly positive");
  faces_.at(static_cast<std::size_t>(face_id)).weight = weight;
}

std::vector<TriangleFace> faces_containing_edge(const DirectedGraph& g, EdgeId e) {
  if (e < 0 || e >= g.edge_count()) throw std::out_of_range("edge index out of range");
  std::vector<TriangleFace> result;
  for (const TriangleFace& f : enumerate_ffl_faces(g)) {
    if (f.direct_edge == e || f.first_leg == e || f.second_leg == e) result.push_back(f);
  }
  return result;
}

}  // namespace netcurv
