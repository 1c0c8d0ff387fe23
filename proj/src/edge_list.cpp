#include "netcurv/edge_list.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace netcurv {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string tok;
  while (stream >> tok) tokens.push_back(tok);
  return tokens;
}

bool skip_line(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;  // blank
}

double parse_positive(const std::string& token, const std::string& what,
                      const std::string& source_name, long line_no) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != token.size() || !(value > 0.0)) {
    throw std::runtime_error(source_name + ":" + std::to_string(line_no) + ": " + what +
                             " must be a positive number, got '" + token + "'");
  }
  return value;
}

std::string format_weight(double w) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

}  // namespace

std::vector<EdgeListEntry> parse_edge_list(std::istream& in, const std::string& source_name) {
  std::vector<EdgeListEntry> entries;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto tokens = split_tokens(line);
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                               ": expected 'source target [weight]', got " +
                               std::to_string(tokens.size()) + " tokens");
    }
    EdgeListEntry entry{tokens[0], tokens[1], std::nullopt};
    if (tokens.size() == 3) {
      entry.weight = parse_positive(tokens[2], "edge weight", source_name, line_no);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<std::pair<std::string, double>> parse_vertex_weights(std::istream& in,
                                                                 const std::string& source_name) {
  std::vector<std::pair<std::string, double>> entries;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto tokens = split_tokens(line);
    if (tokens.size() != 2) {
      throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                               ": expected 'vertex weight', got " + std::to_string(tokens.size()) +
                               " tokens");
    }
    entries.emplace_back(tokens[0], parse_positive(tokens[1], "vertex weight", source_name, line_no));
  }
  return entries;
}

std::vector<EdgeListEntry> read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  return parse_edge_list(in, path);
}

std::vector<std::pair<std::string, double>> read_vertex_weight_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open vertex weights: " + path);
  return parse_vertex_weights(in, path);
}

DirectedGraph load_graph(const std::string& edge_list_path, const std::string& vertex_weight_path) {
  auto entries = read_edge_list_file(edge_list_path);
  std::vector<std::pair<std::string, double>> weights;
  if (!vertex_weight_path.empty()) weights = read_vertex_weight_file(vertex_weight_path);
  return build_graph(entries, weights);
}

void write_edge_list(std::ostream& out, const DirectedGraph& g) {
  for (const Edge& e : g.edges()) {
    out << g.label(e.source) << ' ' << g.label(e.target);
    if (e.weight != 1.0) out << ' ' << format_weight(e.weight);
    out << '\n';
  }
}

void write_vertex_weights(std::ostream& out, const DirectedGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << g.label(v) << ' ' << format_weight(g.vertex_weight(v)) << '\n';
  }
}

}  // namespace netcurv
