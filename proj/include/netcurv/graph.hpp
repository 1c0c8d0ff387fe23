#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace netcurv {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Hop distance marker for vertices a BFS cannot reach.
inline constexpr int kUnreachable = -1;

struct Edge {
  VertexId source = 0;
  VertexId target = 0;
  double weight = 1.0;
  bool self_loop = false;
};

/// Directed triangle closing over a direct edge: first_leg goes from the
/// direct edge's source to the apex, second_leg from the apex to the
/// direct edge's target.
struct TriangleFace {
  VertexId apex = 0;
  EdgeId direct_edge = 0;
  EdgeId first_leg = 0;
  EdgeId second_leg = 0;
  double weight = 1.0;
};

/// One line of an in-memory edge list before vertices are resolved.
struct EdgeListEntry {
  std::string source;
  std::string target;
  std::optional<double> weight;
};

/// Immutable directed graph with positive vertex and edge weights and dual
/// (in/out) adjacency. Construction collapses duplicate (source, target)
/// pairs keeping the first weight, and flags self-loops instead of
/// rejecting them. All queries are pure reads and safe to run from any
/// number of threads.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Index-based construction. Labels default to decimal vertex indices;
  /// vertex weights default to 1.
  DirectedGraph(VertexId vertex_count,
                const std::vector<std::tuple<VertexId, VertexId, double>>& edge_list,
                std::vector<double> vertex_weights = {},
                std::vector<std::string> labels = {});

  VertexId vertex_count() const { return static_cast<VertexId>(vertex_weights_.size()); }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  const Edge& edge(EdgeId e) const;
  const std::vector<Edge>& edges() const { return edges_; }

  double vertex_weight(VertexId v) const;
  const std::string& label(VertexId v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Edge indices incident on v, in edge order. The references stay valid
  /// for the lifetime of the graph.
  const std::vector<EdgeId>& in_edges(VertexId v) const;
  const std::vector<EdgeId>& out_edges(VertexId v) const;

  /// Copies with self-loops optionally removed.
  std::vector<EdgeId> in_edges(VertexId v, bool exclude_self_loops) const;
  std::vector<EdgeId> out_edges(VertexId v, bool exclude_self_loops) const;

  int in_degree(VertexId v) const { return static_cast<int>(in_edges(v).size()); }
  int out_degree(VertexId v) const { return static_cast<int>(out_edges(v).size()); }
  int in_degree_no_loops(VertexId v) const;
  int out_degree_no_loops(VertexId v) const;

  /// Source vertices of non-loop edges into v, in edge order.
  std::vector<VertexId> in_neighbors_no_loops(VertexId v) const;
  std::vector<VertexId> out_neighbors_no_loops(VertexId v) const;

  /// Edge id of (u, v) or -1.
  EdgeId find_edge(VertexId u, VertexId v) const;

  bool is_unweighted() const { return unweighted_; }
  int self_loop_count() const { return self_loop_count_; }

  /// Number of (source, target) duplicates dropped at construction.
  int duplicates_collapsed() const { return duplicates_collapsed_; }

  /// Same vertex set, edges restricted to those with keep[e] != 0.
  DirectedGraph subgraph_with_edges(const std::vector<char>& keep) const;

  /// Subgraph of the given edges plus their endpoints; vertices are
  /// re-indexed densely in first-appearance order, keeping labels and
  /// weights.
  DirectedGraph edge_induced_subgraph(const std::vector<EdgeId>& edge_ids) const;

 private:
  void check_vertex(VertexId v) const;

  std::vector<Edge> edges_;
  std::vector<double> vertex_weights_;
  std::vector<std::string> labels_;
  std::vector<std::vector<EdgeId>> in_adj_;
  std::vector<std::vector<EdgeId>> out_adj_;
  // out-edges sorted by target, for O(log deg) edge lookup
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> out_sorted_;
  std::vector<int> in_deg_nl_;
  std::vector<int> out_deg_nl_;
  int self_loop_count_ = 0;
  int duplicates_collapsed_ = 0;
  bool unweighted_ = true;
};

/// Resolves string tokens to dense vertex indices in first-appearance
/// order (vertex-weight entries first, then edge endpoints) and builds the
/// graph. Missing weights default to 1; non-positive weights are rejected.
DirectedGraph build_graph(const std::vector<EdgeListEntry>& entries,
                          const std::vector<std::pair<std::string, double>>& vertex_weights = {});

/// Directed hop distances from source; kUnreachable where no path exists.
/// Edge weights are ignored.
std::vector<int> shortest_path_lengths(const DirectedGraph& g, VertexId source);

/// Partition of the vertex set under direction-blind connectivity. Each
/// component lists its vertices in ascending order; components are ordered
/// by smallest member.
std::vector<std::vector<VertexId>> weakly_connected_components(const DirectedGraph& g);

/// Every triangle (x, z, y) with edges x->z, z->y and x->y present and
/// none of them a self-loop, ordered by (direct edge index, apex).
std::vector<TriangleFace> enumerate_ffl_faces(const DirectedGraph& g);

/// Precomputed face membership over the triangles of enumerate_ffl_faces.
class FaceIndex {
 public:
  enum class Membership {
    kAnyEdge,     // an edge belongs to a face in any of the three positions
    kDirectOnly,  // only the direct edge belongs to the face
  };

  explicit FaceIndex(const DirectedGraph& g, Membership mode = Membership::kAnyEdge);

  const std::vector<TriangleFace>& faces() const { return faces_; }
  Membership mode() const { return mode_; }

  /// Face ids containing e under the index's membership mode.
  const std::vector<int>& faces_of_edge(EdgeId e) const;

  /// True when `other` is one of the three edges of some face containing e.
  bool edges_share_face(EdgeId e, EdgeId other) const;

  /// Overrides the default unit face weight.
  void set_face_weight(int face_id, double weight);

 private:
  Membership mode_;
  std::vector<TriangleFace> faces_;
  std::vector<std::vector<int>> faces_by_edge_;
  std::vector<std::vector<EdgeId>> co_members_;  // sorted, per edge
};

/// All faces containing e (direct edge, first leg or second leg).
std::vector<TriangleFace> faces_containing_edge(const DirectedGraph& g, EdgeId e);

}  // namespace netcurv
