#include "netcurv/analysis.hpp"

#include <array>
#include <string_view>

#include "netcurv/forman.hpp"
#include "netcurv/metrics.hpp"
#include "netcurv/ollivier.hpp"

namespace netcurv {

namespace {

constexpr std::array<std::string_view, 4> kEdgeColumns = {"fr", "afr", "or", "ebc"};
constexpr std::array<std::string_view, 12> kVertexColumns = {
    "in_degree", "out_degree", "ifr", "ofr", "tfr", "iafr",
    "oafr",      "ior",        "oor", "tor", "betweenness", "pagerank"};

}  // namespace

EdgeMeasureTable compute_edge_measures(const DirectedGraph& g, const EdgeMeasureRequest& request,
                                       int threads) {
  EdgeMeasureTable table;
  table.self_loop_count = g.self_loop_count();
  if (request.fr || request.afr) {
    FaceIndex faces(g);
    auto values = forman_all_edges(g, faces);
    if (request.fr) {
      table.fr.reserve(values.size());
      for (const auto& v : values) table.fr.push_back(v.fr);
    }
    if (request.afr) {
      table.afr.reserve(values.size());
      for (const auto& v : values) table.afr.push_back(v.afr);
    }
  }
  if (request.kappa) {
    auto values = or_all_edges(g, threads, request.or_convention);
    table.kappa.reserve(values.size());
    table.or_fallback.reserve(values.size());
    for (const auto& v : values) {
      table.kappa.push_back(v.kappa);
      table.or_fallback.push_back(v.fallback ? 1 : 0);
    }
  }
  if (request.ebc) {
    table.ebc = edge_betweenness(g, threads);
  }
  return table;
}

VertexMeasureTable compute_vertex_measures(const DirectedGraph& g, int threads,
                                           MeasureConvention or_convention) {
  VertexMeasureTable table;
  const VertexId n = g.vertex_count();
  table.in_degree.reserve(static_cast<std::size_t>(n));
  table.out_degree.reserve(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    table.in_degree.push_back(static_cast<double>(g.in_degree(v)));
    table.out_degree.push_back(static_cast<double>(g.out_degree(v)));
  }

  FaceIndex faces(g);
  auto edge_values = forman_all_edges(g, faces);
  std::vector<double> fr, afr;
  fr.reserve(edge_values.size());
  afr.reserve(edge_values.size());
  for (const auto& v : edge_values) {
    fr.push_back(v.fr);
    afr.push_back(v.afr);
  }
  auto forman_rows = vertex_forman(g, fr, afr);
  table.ifr.reserve(forman_rows.size());
  for (const auto& row : forman_rows) {
    table.ifr.push_back(row.f_in);
    table.ofr.push_back(row.f_out);
    table.tfr.push_back(row.f_total);
    table.iafr.push_back(row.afr_in);
    table.oafr.push_back(row.afr_out);
  }

  auto kappa_values = or_all_edges(g, threads, or_convention);
  std::vector<double> kappa;
  kappa.reserve(kappa_values.size());
  for (const auto& v : kappa_values) kappa.push_back(v.kappa);
  auto ollivier_rows = vertex_ollivier(g, kappa);
  table.ior.reserve(ollivier_rows.size());
  for (const auto& row : ollivier_rows) {
    table.ior.push_back(row.o_in);
    table.oor.push_back(row.o_out);
    table.tor.push_back(row.o_total);
  }

  table.betweenness = vertex_betweenness(g, threads);
  table.pagerank = pagerank(g);
  return table;
}

bool is_edge_column(std::string_view name) {
  for (auto column : kEdgeColumns) {
    if (column == name) return true;
  }
  return false;
}

bool is_vertex_column(std::string_view name) {
  for (auto column : kVertexColumns) {
    if (column == name) return true;
  }
  return false;
}

std::optional<std::vector<double>> edge_column(const EdgeMeasureTable& table,
                                               std::string_view name) {
  if (name == "fr" && !table.fr.empty()) return table.fr;
  if (name == "afr" && !table.afr.empty()) return table.afr;
  if (name == "or" && !table.kappa.empty()) return table.kappa;
  if (name == "ebc" && !table.ebc.empty()) return table.ebc;
  return std::nullopt;
}

std::optional<std::vector<double>> vertex_column(const VertexMeasureTable& table,
                                                 std::string_view name) {
  if (name == "in_degree") return table.in_degree;
  if (name == "out_degree") return table.out_degree;
  if (name == "ifr") return table.ifr;
  if (name == "ofr") return table.ofr;
  if (name == "tfr") return table.tfr;
  if (name == "iafr") return table.iafr;
  if (name == "oafr") return table.oafr;
  if (name == "ior") return table.ior;
  if (name == "oor") return table.oor;
  if (name == "tor") return table.tor;
  if (name == "betweenness") return table.betweenness;
  if (name == "pagerank") return table.pagerank;
  return std::nullopt;
}

}  // namespace netcurv
