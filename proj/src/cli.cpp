#include "netcurv/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "netcurv/analysis.hpp"
#include "netcurv/edge_list.hpp"
#include "netcurv/forman.hpp"
#include "netcurv/generators.hpp"
#include "netcurv/metrics.hpp"
#include "netcurv/ollivier.hpp"
#include "netcurv/rng.hpp"
#include "netcurv/robustness.hpp"
#include "netcurv/version.hpp"

namespace netcurv {

namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------
// formatting and file plumbing

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string format_fixed(double v, int decimals) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input: " + path);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char chunk[4096];
  while (in.read(chunk, sizeof(chunk)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(chunk[i]);
      hash *= 0x100000001b3ULL;
    }
    if (!in) break;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write: " + tmp);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("cannot move output into place: " + path);
  }
}

std::string iso_timestamp() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

std::vector<std::string> split_csv_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

// ---------------------------------------------------------------------
// run context shared by all subcommands

struct GlobalOptions {
  std::string input;
  std::string vertex_weights;
  std::string output;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string format = "csv";
  std::string or_convention = "self-inclusive";

  MeasureConvention convention() const {
    return or_convention == "neighbors-only" ? MeasureConvention::kNeighborsOnly
                                             : MeasureConvention::kSelfInclusive;
  }
};

struct RunContext {
  const GlobalOptions* options = nullptr;
  std::string command;
  std::string argv_line;
  ordered_json generator = nullptr;
  ordered_json inputs = ordered_json::object();
  ordered_json warnings = ordered_json::object();

  ordered_json manifest() const {
    ordered_json m;
    m["command"] = command;
    m["argv"] = argv_line;
    m["version"] = kVersion;
    m["rng_algorithm"] = kRngAlgorithm;
    m["seed"] = options->seed;
    m["generator"] = generator;
    m["inputs"] = inputs;
    m["digest_algorithm"] = "fnv1a64";
    m["warnings"] = warnings;
    m["timestamp"] = iso_timestamp();
    return m;
  }
};

// Tabular output: ordered column names plus rows of preformatted CSV cells
// and JSON values carrying the same column names.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<ordered_json> json_rows;

  void add_row(std::vector<std::string> csv, ordered_json json) {
    csv_rows.push_back(std::move(csv));
    json_rows.push_back(std::move(json));
  }
};

void write_table(const RunContext& ctx, const Table& table) {
  const GlobalOptions& opt = *ctx.options;
  if (opt.output.empty()) throw std::runtime_error("missing --output path");
  if (opt.format == "csv") {
    std::ostringstream out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out << ',';
      out << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.csv_rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << ',';
        out << row[c];
      }
      out << '\n';
    }
    atomic_write(opt.output, out.str());
    atomic_write(opt.output + ".manifest.json", ctx.manifest().dump(2) + "\n");
  } else {
    ordered_json doc;
    doc["manifest"] = ctx.manifest();
    doc["rows"] = table.json_rows;
    atomic_write(opt.output, doc.dump(2) + "\n");
  }
}

void write_text_output(const RunContext& ctx, const std::string& path, const std::string& content) {
  atomic_write(path, content);
  atomic_write(path + ".manifest.json", ctx.manifest().dump(2) + "\n");
}

DirectedGraph load_input(RunContext& ctx) {
  const GlobalOptions& opt = *ctx.options;
  if (opt.input.empty()) throw std::runtime_error("missing --input path");
  ctx.inputs[opt.input] = fnv1a64_file(opt.input);
  if (!opt.vertex_weights.empty()) {
    ctx.inputs[opt.vertex_weights] = fnv1a64_file(opt.vertex_weights);
  }
  DirectedGraph g = load_graph(opt.input, opt.vertex_weights);
  ctx.warnings["duplicate_edges_collapsed"] = g.duplicates_collapsed();
  ctx.warnings["self_loop_edges"] = g.self_loop_count();
  return g;
}

std::string csv_cell(double v) { return std::isnan(v) ? std::string() : format_real(v); }

ordered_json json_cell(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

// ---------------------------------------------------------------------
// generator plumbing shared by `generate` and seeded `correlate`

struct GeneratorSpec {
  std::string model;  // "er" or "sf"
  int n = 0;
  double p = 0.0;
  long long m = 0;
  double lambda_in = 2.1;
  double lambda_out = 2.1;
};

DirectedGraph run_generator(const GeneratorSpec& spec, std::uint64_t seed) {
  if (spec.model == "er") {
    return generate_er(ErParams{spec.n, spec.p, seed});
  }
  if (spec.model == "sf") {
    return generate_sf_fitness(SfParams{spec.n, spec.m, spec.lambda_in, spec.lambda_out, seed});
  }
  throw std::runtime_error("unknown model: " + spec.model);
}

ordered_json generator_json(const GeneratorSpec& spec) {
  ordered_json g;
  g["model"] = spec.model;
  g["n"] = spec.n;
  if (spec.model == "er") {
    g["p"] = spec.p;
  } else {
    g["m"] = spec.m;
    g["lambda_in"] = spec.lambda_in;
    g["lambda_out"] = spec.lambda_out;
  }
  return g;
}

// ---------------------------------------------------------------------
// subcommands

void cmd_generate(RunContext& ctx, const GeneratorSpec& spec) {
  const GlobalOptions& opt = *ctx.options;
  if (opt.output.empty()) throw std::runtime_error("missing --output path");
  ctx.generator = generator_json(spec);
  DirectedGraph g = run_generator(spec, opt.seed);

  std::ostringstream edges;
  write_edge_list(edges, g);
  std::ostringstream vertices;
  write_vertex_weights(vertices, g);
  // The vertex file pins the vertex order and keeps isolated vertices, so
  // parsing the pair reproduces the generated graph exactly.
  atomic_write(opt.output + ".vertices", vertices.str());
  write_text_output(ctx, opt.output, edges.str());
}

void cmd_curvature(RunContext& ctx, const std::string& measures_list) {
  DirectedGraph g = load_input(ctx);
  EdgeMeasureRequest request;
  request.or_convention = ctx.options->convention();
  for (const std::string& m : split_csv_list(measures_list)) {
    if (m == "fr") {
      request.fr = true;
    } else if (m == "afr") {
      request.afr = true;
    } else if (m == "or") {
      request.kappa = true;
    } else {
      throw std::runtime_error("unknown measure: " + m);
    }
  }
  EdgeMeasureTable table = compute_edge_measures(g, request, ctx.options->threads);

  Table out;
  out.columns = {"source", "target", "fr", "afr", "or", "or_fallback"};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    double fr = request.fr ? table.fr[static_cast<std::size_t>(e)] : NAN;
    double afr = request.afr ? table.afr[static_cast<std::size_t>(e)] : NAN;
    double kappa = request.kappa ? table.kappa[static_cast<std::size_t>(e)] : NAN;
    std::string fallback;
    ordered_json fallback_json = nullptr;
    if (request.kappa && !ed.self_loop) {
      bool fb = table.or_fallback[static_cast<std::size_t>(e)] != 0;
      fallback = fb ? "true" : "false";
      fallback_json = fb;
    }
    ordered_json row;
    row["source"] = g.label(ed.source);
    row["target"] = g.label(ed.target);
    row["fr"] = json_cell(fr);
    row["afr"] = json_cell(afr);
    row["or"] = json_cell(kappa);
    row["or_fallback"] = fallback_json;
    out.add_row({g.label(ed.source), g.label(ed.target), csv_cell(fr), csv_cell(afr),
                 csv_cell(kappa), fallback},
                std::move(row));
  }
  write_table(ctx, out);
}

void cmd_vertex_curvature(RunContext& ctx) {
  DirectedGraph g = load_input(ctx);
  VertexMeasureTable table = compute_vertex_measures(g, ctx.options->threads,
                                                     ctx.options->convention());

  Table out;
  out.columns = {"vertex", "in_degree", "out_degree", "ifr", "ofr",         "tfr",     "iafr",
                 "oafr",   "ior",       "oor",        "tor", "betweenness", "pagerank"};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t i = static_cast<std::size_t>(v);
    std::vector<double> cells = {table.in_degree[i], table.out_degree[i], table.ifr[i],
                                 table.ofr[i],       table.tfr[i],        table.iafr[i],
                                 table.oafr[i],      table.ior[i],        table.oor[i],
                                 table.tor[i],       table.betweenness[i], table.pagerank[i]};
    std::vector<std::string> csv{g.label(v)};
    ordered_json row;
    row["vertex"] = g.label(v);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      csv.push_back(csv_cell(cells[c]));
      row[out.columns[c + 1]] = json_cell(cells[c]);
    }
    out.add_row(std::move(csv), std::move(row));
  }
  write_table(ctx, out);
}

struct ColumnPair {
  std::string x;
  std::string y;
};

std::vector<ColumnPair> parse_pairs(const std::string& pairs_list) {
  std::vector<ColumnPair> pairs;
  for (const std::string& token : split_csv_list(pairs_list)) {
    auto colon = token.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == token.size()) {
      throw std::runtime_error("pair must look like 'x:y', got '" + token + "'");
    }
    pairs.push_back(ColumnPair{token.substr(0, colon), token.substr(colon + 1)});
  }
  if (pairs.empty()) throw std::runtime_error("no column pairs given");
  return pairs;
}

// Columns for one graph, restricted to what the requested pairs need.
struct PairColumns {
  EdgeMeasureTable edge_table;
  bool has_vertex = false;
  VertexMeasureTable vertex_table;
};

PairColumns compute_pair_columns(const DirectedGraph& g, const std::vector<ColumnPair>& pairs,
                                 int threads, MeasureConvention convention) {
  EdgeMeasureRequest request;
  request.or_convention = convention;
  bool need_vertex = false;
  for (const ColumnPair& pair : pairs) {
    for (const std::string& name : {pair.x, pair.y}) {
      if (is_edge_column(name)) {
        if (name == "fr") request.fr = true;
        if (name == "afr") request.afr = true;
        if (name == "or") request.kappa = true;
        if (name == "ebc") request.ebc = true;
      } else if (is_vertex_column(name)) {
        need_vertex = true;
      } else {
        throw std::runtime_error("unknown column: " + name);
      }
    }
    bool x_edge = is_edge_column(pair.x);
    bool y_edge = is_edge_column(pair.y);
    if (x_edge != y_edge) {
      throw std::runtime_error("cannot correlate edge column with vertex column: " + pair.x +
                               ":" + pair.y);
    }
  }
  PairColumns columns;
  columns.edge_table = compute_edge_measures(g, request, threads);
  if (need_vertex) {
    columns.has_vertex = true;
    columns.vertex_table = compute_vertex_measures(g, threads, convention);
  }
  return columns;
}

// Spearman for one pair on one graph; NaN rows (self-loops) are dropped.
// Returns false when the correlation is undefined (constant column).
bool pair_rho(const PairColumns& columns, const ColumnPair& pair, double& rho_out) {
  std::vector<double> x, y;
  if (is_edge_column(pair.x)) {
    auto cx = edge_column(columns.edge_table, pair.x);
    auto cy = edge_column(columns.edge_table, pair.y);
    if (!cx || !cy) throw std::runtime_error("edge column unavailable");
    for (std::size_t i = 0; i < cx->size(); ++i) {
      if (std::isnan((*cx)[i]) || std::isnan((*cy)[i])) continue;
      x.push_back((*cx)[i]);
      y.push_back((*cy)[i]);
    }
  } else {
    auto cx = vertex_column(columns.vertex_table, pair.x);
    auto cy = vertex_column(columns.vertex_table, pair.y);
    if (!cx || !cy) throw std::runtime_error("vertex column unavailable");
    x = *cx;
    y = *cy;
  }
  try {
    rho_out = spearman(x, y).rho;
    return true;
  } catch (const std::domain_error&) {
    return false;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

void cmd_correlate(RunContext& ctx, const std::string& pairs_list, const GeneratorSpec& spec,
                   bool have_generator, int replicate_seeds) {
  std::vector<ColumnPair> pairs = parse_pairs(pairs_list);
  Table out;
  if (!have_generator) {
    DirectedGraph g = load_input(ctx);
    PairColumns columns = compute_pair_columns(g, pairs, ctx.options->threads,
                                               ctx.options->convention());
    out.columns = {"x", "y", "rho", "n"};
    for (const ColumnPair& pair : pairs) {
      double rho = 0.0;
      bool defined = pair_rho(columns, pair, rho);
      long n = is_edge_column(pair.x) ? g.edge_count() - g.self_loop_count() : g.vertex_count();
      ordered_json row;
      row["x"] = pair.x;
      row["y"] = pair.y;
      row["rho"] = defined ? ordered_json(rho) : ordered_json(nullptr);
      row["n"] = n;
      out.add_row({pair.x, pair.y, defined ? format_real(rho) : "undefined", std::to_string(n)},
                  std::move(row));
    }
  } else {
    if (replicate_seeds < 1) throw std::runtime_error("--seeds must be positive");
    ctx.generator = generator_json(spec);
    ctx.generator["seeds"] = replicate_seeds;
    std::vector<std::vector<double>> rhos(pairs.size());
    for (int rep = 0; rep < replicate_seeds; ++rep) {
      DirectedGraph g = run_generator(spec, ctx.options->seed + static_cast<std::uint64_t>(rep));
      PairColumns columns = compute_pair_columns(g, pairs, ctx.options->threads,
                                               ctx.options->convention());
      for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        double rho = 0.0;
        if (pair_rho(columns, pairs[pi], rho)) rhos[pi].push_back(rho);
      }
    }
    out.columns = {"x", "y", "mean_rho", "std_error", "seeds"};
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      const auto& samples = rhos[pi];
      ordered_json row;
      row["x"] = pairs[pi].x;
      row["y"] = pairs[pi].y;
      if (samples.empty()) {
        row["mean_rho"] = nullptr;
        row["std_error"] = nullptr;
        row["seeds"] = 0;
        out.add_row({pairs[pi].x, pairs[pi].y, "undefined", "", "0"}, std::move(row));
        continue;
      }
      double mean = 0.0;
      for (double r : samples) mean += r;
      mean /= static_cast<double>(samples.size());
      double variance = 0.0;
      for (double r : samples) variance += (r - mean) * (r - mean);
      double std_error = samples.size() > 1
                             ? std::sqrt(variance / static_cast<double>(samples.size() - 1)) /
                                   std::sqrt(static_cast<double>(samples.size()))
                             : 0.0;
      row["mean_rho"] = mean;
      row["std_error"] = std_error;
      row["seeds"] = samples.size();
      out.add_row({pairs[pi].x, pairs[pi].y, format_fixed(mean, 2), format_fixed(std_error, 4),
                   std::to_string(samples.size())},
                  std::move(row));
    }
  }
  write_table(ctx, out);
}

void cmd_robustness(RunContext& ctx, const std::string& family_name,
                    const std::string& strategies_list, double step, double max_fraction,
                    bool recompute) {
  DirectedGraph g = load_input(ctx);
  RemovalFamily family;
  if (family_name == "edge") {
    family = RemovalFamily::kEdge;
  } else if (family_name == "vertex") {
    family = RemovalFamily::kVertex;
  } else {
    throw std::runtime_error("family must be 'edge' or 'vertex'");
  }
  std::vector<RemovalStrategy> strategies;
  for (const std::string& name : split_csv_list(strategies_list)) {
    strategies.push_back(RemovalStrategy{parse_strategy_kind(name), ctx.options->seed});
  }
  if (strategies.empty()) throw std::runtime_error("no strategies given");
  StrategyComparison comparison = compare_strategies(g, strategies, family, step, max_fraction,
                                                     recompute, ctx.options->threads);
  Table out;
  out.columns = {"strategy", "fraction", "efficiency"};
  for (const RemovalCurve& curve : comparison.curves) {
    const std::string& name = strategy_kind_name(curve.strategy.kind);
    for (auto [fraction, efficiency] : curve.points) {
      ordered_json row;
      row["strategy"] = name;
      row["fraction"] = fraction;
      row["efficiency"] = efficiency;
      out.add_row({name, format_real(fraction), format_real(efficiency)}, std::move(row));
    }
  }
  write_table(ctx, out);
}

void cmd_hist(RunContext& ctx, const std::string& column, int bins) {
  DirectedGraph g = load_input(ctx);
  std::vector<double> values;
  if (is_edge_column(column)) {
    EdgeMeasureRequest request;
    request.or_convention = ctx.options->convention();
    request.fr = column == "fr";
    request.afr = column == "afr";
    request.kappa = column == "or";
    request.ebc = column == "ebc";
    EdgeMeasureTable table = compute_edge_measures(g, request, ctx.options->threads);
    auto col = edge_column(table, column);
    for (double v : *col) {
      if (!std::isnan(v)) values.push_back(v);
    }
  } else if (is_vertex_column(column)) {
    VertexMeasureTable table = compute_vertex_measures(g, ctx.options->threads,
                                                     ctx.options->convention());
    values = *vertex_column(table, column);
  } else {
    throw std::runtime_error("unknown column: " + column);
  }
  if (values.empty()) throw std::runtime_error("column has no defined values: " + column);
  auto histogram_bins = histogram(values, bins);
  Table out;
  out.columns = {"bin_lower", "count"};
  for (const HistogramBin& bin : histogram_bins) {
    ordered_json row;
    row["bin_lower"] = bin.lower;
    row["count"] = bin.count;
    out.add_row({format_real(bin.lower), std::to_string(bin.count)}, std::move(row));
  }
  write_table(ctx, out);
}

void cmd_subnetwork(RunContext& ctx, const std::string& measure, double threshold) {
  DirectedGraph g = load_input(ctx);
  EdgeMeasureRequest request;
  request.or_convention = ctx.options->convention();
  if (measure == "fr") {
    request.fr = true;
  } else if (measure == "afr") {
    request.afr = true;
  } else if (measure == "or") {
    request.kappa = true;
  } else {
    throw std::runtime_error("measure must be fr, afr or or");
  }
  EdgeMeasureTable table = compute_edge_measures(g, request, ctx.options->threads);
  auto values = edge_column(table, measure);
  DirectedGraph sub = threshold_subnetwork(g, *values, threshold);
  std::ostringstream edges;
  write_edge_list(edges, sub);
  if (ctx.options->output.empty()) throw std::runtime_error("missing --output path");
  write_text_output(ctx, ctx.options->output, edges.str());
}

std::string join_argv(int argc, const char* const* argv) {
  std::string line;
  for (int i = 0; i < argc; ++i) {
    if (i) line += ' ';
    line += argv[i];
  }
  return line;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Curvature, centrality and robustness analysis for directed networks"};
  app.require_subcommand(1);

  GlobalOptions options;
  app.add_option("--input", options.input, "edge-list input file")->expected(1);
  app.add_option("--vertex-weights", options.vertex_weights,
                 "optional vertex-weight file; also pins vertex order");
  app.add_option("--output", options.output, "output file path");
  app.add_option("--seed", options.seed, "RNG seed");
  app.add_option("--threads", options.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", options.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--or-convention", options.or_convention,
                 "endpoint measure support: vertex plus neighbors, or neighbors alone")
      ->check(CLI::IsMember({"self-inclusive", "neighbors-only"}));
  app.fallthrough();

  GeneratorSpec spec;
  int replicate_seeds = 20;

  auto add_generator_options = [&](CLI::App* cmd, bool required) {
    auto* model = cmd->add_option("--model", spec.model, "er or sf")
                      ->check(CLI::IsMember({"er", "sf"}));
    if (required) model->required();
    cmd->add_option("--n", spec.n, "vertex count");
    cmd->add_option("--p", spec.p, "edge probability (er)");
    cmd->add_option("--m", spec.m, "edge count (sf)");
    cmd->add_option("--lambda-in", spec.lambda_in, "in-degree exponent (sf)");
    cmd->add_option("--lambda-out", spec.lambda_out, "out-degree exponent (sf)");
    return model;
  };

  auto* generate = app.add_subcommand("generate", "write a model graph as an edge list");
  add_generator_options(generate, true);

  std::string measures = "fr,afr,or";
  auto* curvature = app.add_subcommand("curvature", "per-edge curvature table");
  curvature->add_option("--measures", measures, "subset of fr,afr,or");

  auto* vertex_curvature =
      app.add_subcommand("vertex-curvature", "per-vertex curvature and centrality table");

  std::string pairs;
  auto* correlate = app.add_subcommand("correlate", "Spearman correlation of measure columns");
  correlate->add_option("--pairs", pairs, "comma list of x:y column pairs")->required();
  auto* corr_model = add_generator_options(correlate, false);
  correlate->add_option("--seeds", replicate_seeds, "replicate count for generated graphs (default 20)");

  std::string family = "edge";
  std::string strategies;
  double step = 0.02;
  double max_fraction = 0.5;
  bool recompute = false;
  auto* robustness = app.add_subcommand("robustness", "removal curves of communication efficiency");
  robustness->add_option("--family", family, "edge or vertex");
  robustness->add_option("--strategies", strategies, "comma list of removal strategies")->required();
  robustness->add_option("--step", step, "fraction removed per batch");
  robustness->add_option("--max", max_fraction, "total fraction to remove");
  robustness->add_flag("--recompute", recompute, "re-rank on the surviving graph each batch");

  std::string column;
  int bins = 10;
  auto* hist = app.add_subcommand("hist", "histogram of a measure column");
  hist->add_option("--column", column, "measure column name")->required();
  hist->add_option("--bins", bins, "bin count")->check(CLI::PositiveNumber);

  std::string sub_measure;
  double threshold = 0.0;
  auto* subnetwork = app.add_subcommand("subnetwork", "edges at or below a curvature threshold");
  subnetwork->add_option("--measure", sub_measure, "fr, afr or or")->required();
  subnetwork->add_option("--threshold", threshold, "keep edges with value <= threshold")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  RunContext ctx;
  ctx.options = &options;
  ctx.argv_line = join_argv(argc, argv);
  try {
    if (generate->parsed()) {
      ctx.command = "generate";
      cmd_generate(ctx, spec);
    } else if (curvature->parsed()) {
      ctx.command = "curvature";
      cmd_curvature(ctx, measures);
    } else if (vertex_curvature->parsed()) {
      ctx.command = "vertex-curvature";
      cmd_vertex_curvature(ctx);
    } else if (correlate->parsed()) {
      ctx.command = "correlate";
      cmd_correlate(ctx, pairs, spec, corr_model->count() > 0, replicate_seeds);
    } else if (robustness->parsed()) {
      ctx.command = "robustness";
      cmd_robustness(ctx, family, strategies, step, max_fraction, recompute);
    } else if (hist->parsed()) {
      ctx.command = "hist";
      cmd_hist(ctx, column, bins);
    } else if (subnetwork->parsed()) {
      ctx.command = "subnetwork";
      cmd_subnetwork(ctx, sub_measure, threshold);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("netcurv");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& a : full) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace netcurv
