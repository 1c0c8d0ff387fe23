#pragma once

#include <string>
#include <vector>

#include "netcurv/graph.hpp"

namespace netcurv::testing {

inline DirectedGraph from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<EdgeListEntry> entries;
  for (const auto& [s, t] : pairs) entries.push_back(EdgeListEntry{s, t, std::nullopt});
  return build_graph(entries);
}

// Hub-to-hub edge with three edges feeding the source and three leaving
// the target; the reference shape for fan-in/fan-out curvature checks.
// Edge order: v1->v2, v3->v1, v4->v1, v9->v1, v2->v7, v2->v8, v2->v9.
inline DirectedGraph fan_in_fan_out() {
  return from_pairs({{"v1", "v2"},
                     {"v3", "v1"},
                     {"v4", "v1"},
                     {"v9", "v1"},
                     {"v2", "v7"},
                     {"v2", "v8"},
                     {"v2", "v9"}});
}

// Same shape plus a two-hop bypass v1->v6->v2 closing a triangle over the
// hub edge.
inline DirectedGraph fan_in_fan_out_with_triangle() {
  return from_pairs({{"v1", "v2"},
                     {"v3", "v1"},
                     {"v4", "v1"},
                     {"v9", "v1"},
                     {"v2", "v7"},
                     {"v2", "v8"},
                     {"v2", "v9"},
                     {"v1", "v6"},
                     {"v6", "v2"}});
}

// x->y with the bypass x->z->y. Edge order: x->y, x->z, z->y.
inline DirectedGraph ffl_triangle() {
  return from_pairs({{"x", "y"}, {"x", "z"}, {"z", "y"}});
}

inline DirectedGraph three_cycle() {
  return from_pairs({{"a", "b"}, {"b", "c"}, {"c", "a"}});
}

inline DirectedGraph path3() {
  return from_pairs({{"1", "2"}, {"2", "3"}});
}

}  // namespace netcurv::testing
