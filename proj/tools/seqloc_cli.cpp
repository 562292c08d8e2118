// Command-line front end for the sequential-locality toolkit.
//
// Subcommands: stat, test {er|orgm|seq}, fit, sweep-r, power,
// order {spectral|rcm}, sample {er|orgm}, fetch.
// Exit codes: 0 success, 2 validation/infeasible input, 3 I/O or network.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqloc/distribution.hpp"
#include "seqloc/er_null.hpp"
#include "seqloc/exact.hpp"
#include "seqloc/fit.hpp"
#include "seqloc/graph.hpp"
#include "seqloc/metric.hpp"
#include "seqloc/normal.hpp"
#include "seqloc/ordering.hpp"
#include "seqloc/orgm.hpp"
#include "seqloc/power.hpp"
#include "seqloc/random_seq.hpp"
#include "seqloc/report.hpp"
#include "seqloc/stats.hpp"

#include <httplib.h>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace seqloc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string sequence_path;
  double alpha = 0.05;
  std::uint64_t seed = 1;
  std::string variant = "simple";
  std::string format;  // json | csv | text; per-command default if empty
  std::string output;  // empty = stdout
};

bool simple_variant(const RunConfig& c) {
  if (c.variant == "simple") return true;
  if (c.variant == "multigraph") return false;
  throw ValidationError("unknown variant (expected simple or multigraph): " +
                        c.variant);
}

void add_common_options(CLI::App* cmd, RunConfig& c, bool needs_input) {
  auto* in = cmd->add_option("--input", c.input, "edge-list file");
  if (needs_input) in->required();
  cmd->add_option("--sequence", c.sequence_path,
                  "sequence file (default: identity order)");
  cmd->add_option("--alpha", c.alpha, "significance level")
      ->check(CLI::Range(1e-12, 1.0 - 1e-12));
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--variant", c.variant, "simple | multigraph")
      ->check(CLI::IsMember({"simple", "multigraph"}));
  cmd->add_option("--format", c.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--output", c.output, "output file (default: stdout)");
}

Graph load_graph(const RunConfig& c) {
  if (!fs::exists(c.input))
    throw IoError("cannot open input file: " + c.input);
  std::ifstream in(c.input);
  if (!in) throw IoError("cannot open input file: " + c.input);
  return read_edge_list(in);
}

VertexSequence load_sequence(const RunConfig& c, const Graph& g) {
  if (c.sequence_path.empty()) return VertexSequence::identity(g.num_vertices());
  if (!fs::exists(c.sequence_path))
    throw IoError("cannot open sequence file: " + c.sequence_path);
  std::ifstream in(c.sequence_path);
  if (!in) throw IoError("cannot open sequence file: " + c.sequence_path);
  return read_sequence(in, g.num_vertices());
}

// All file output is atomic: write to a temp file, then rename into place.
void write_file_atomic(const std::string& path, const std::string& body) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write output file: " + path);
    out << body;
    if (!out.flush()) throw IoError("short write to output file: " + path);
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("cannot move output into place: " + path + ": " +
                  ec.message());
  }
}

void emit(const RunConfig& c, const std::string& body) {
  if (c.output.empty()) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << '\n';
  } else {
    write_file_atomic(c.output, body);
  }
}

std::string format_or(const RunConfig& c, const char* fallback) {
  return c.format.empty() ? fallback : c.format;
}

json stat_payload(const Graph& g, const VertexSequence& s) {
  json out;
  out["n"] = g.num_vertices();
  out["m"] = g.num_edges();
  out["h1"] = h1(g, s);
  out["h1_raw"] = raw_sum(g, s, AffinityMetric::sequential());
  out["hg"] = hg(g, s);
  if (g.num_vertices() >= 3) {
    out["z1"] = z1(g, s);
    out["zg"] = zg(g, s);
  } else {
    out["z1"] = nullptr;
    out["zg"] = nullptr;
  }
  json hi = json::array();
  for (const auto& v : micro_locality(g, s))
    hi.push_back(v ? json(*v) : json(nullptr));
  out["h_i"] = hi;
  return out;
}

std::string stat_text(const json& p) {
  std::ostringstream os;
  os << "vertices:        " << p["n"] << "\n"
     << "edges:           " << p["m"] << "\n"
     << "H1:              " << p["h1"] << "\n"
     << "z1:              " << p["z1"] << "\n"
     << "HG:              " << p["hg"] << "\n"
     << "zG:              " << p["zg"] << "\n"
     << "per-vertex h_i:  " << p["h_i"] << "\n";
  return os.str();
}

int cmd_stat(const RunConfig& c) {
  const Graph g = load_graph(c);
  const VertexSequence s = load_sequence(c, g);
  const json payload = stat_payload(g, s);
  const std::string f = format_or(c, "json");
  if (f == "csv")
    throw ValidationError("stat supports json or text output only");
  emit(c, f == "text" ? stat_text(payload) : payload.dump(2));
  return kExitOk;
}

int cmd_test_er(const RunConfig& c, const std::string& statistic,
                const std::string& sided) {
  const Graph g = load_graph(c);
  const VertexSequence s = load_sequence(c, g);
  const std::string sd = sided == "two" ? "two_sided" : sided;
  const TestReport rep = statistic == "HG" ? er_test_hg(g, s, c.alpha, sd)
                                           : er_test(g, s, c.alpha, sd);
  emit(c, format_or(c, "json") == "text" ? rep.to_text()
                                         : rep.to_json().dump(2));
  return kExitOk;
}

int cmd_test_orgm(const RunConfig& c, int r_opt, int reference_samples) {
  const Graph g = load_graph(c);
  const VertexSequence s = load_sequence(c, g);
  const bool simple = simple_variant(c);
  const FitResult fit = fit_bandwidth(g, s, simple);
  const int r = r_opt > 0 ? r_opt : static_cast<int>(fit.r_star);
  const TestReport rep_in = in_envelope_test(g, s, r, simple, c.alpha);
  const TestReport rep_all = er_test(g, s, c.alpha);

  json out;
  out["fit"] = json{{"r_star", fit.r_star},
                    {"eps_star", std::isinf(fit.eps_star)
                                     ? json(nullptr)
                                     : json(fit.eps_star)},
                    {"m_in", fit.m_in},
                    {"m_out", fit.m_out},
                    {"variant", simple ? "simple" : "multigraph"}};
  out["r_used"] = r;
  out["in_envelope"] = rep_in.to_json();
  out["whole_graph"] = rep_all.to_json();

  std::optional<std::vector<double>> reference;
  if (reference_samples > 0) {
    reference = er_reference_h1(g.num_vertices(), g.num_edges(),
                                reference_samples, c.seed);
    out["er_reference"] = json{
        {"samples", reference_samples},
        {"ordering", "spectral"},
        {"alpha_quantile", empirical_quantile(*reference, c.alpha)},
        {"seed", c.seed}};
  } else {
    out["er_reference"] = nullptr;
  }
  const LocalityType type = classify(rep_all, rep_in, reference, c.alpha);
  out["classification"] = to_string(type);
  emit(c, out.dump(2));
  return kExitOk;
}

int cmd_test_seq(const RunConfig& c, bool exact, std::int64_t n_samples,
                 int cap) {
  const Graph g = load_graph(c);
  const VertexSequence s = load_sequence(c, g);
  const double z = z1(g, s);

  SequenceNullSummary summary;
  const bool small_enough = g.num_vertices() <= cap;
  if (exact && !small_enough)
    throw SizeCapError("exact enumeration requested above the size cap (" +
                       std::to_string(cap) + " vertices)");
  if (small_enough)
    summary = exact_seq_distribution(g, cap);
  else
    summary = sampled_seq_distribution(g, n_samples, c.seed);

  json out = summary.to_json();
  out["observed_z1"] = z;
  out["z1_factor"] = z1_factor(g, s);
  out["p_leq"] = summary.p_leq(z);
  out["p_lt"] = summary.p_lt(z);
  if (!summary.enumerated) {
    const double p = summary.p_leq(z);
    out["p_leq_standard_error"] =
        std::sqrt(p * (1 - p) / static_cast<double>(summary.n_sequences));
  }
  emit(c, out.dump(2));
  return kExitOk;
}

int cmd_fit(const RunConfig& c) {
  const Graph g = load_graph(c);
  const VertexSequence s = load_sequence(c, g);
  const FitResult fit = fit_bandwidth(g, s, simple_variant(c));
  const std::string f = format_or(c, "json");
  if (f == "csv") {
    std::ostringstream os;
    os << "r,m_in,m_out,log_count,feasible\n";
    char buf[64];
    for (const FitRow& row : fit.curve) {
      std::snprintf(buf, sizeof buf, "%.12g", row.log_count);
      os << row.r << ',' << row.m_in << ',' << row.m_out << ','
         << (row.feasible ? buf : "") << ',' << (row.feasible ? 1 : 0) << '\n';
    }
    emit(c, os.str());
    return kExitOk;
  }
  json out;
  out["r_star"] = fit.r_star;
  out["eps_star"] =
      std::isinf(fit.eps_star) ? json(nullptr) : json(fit.eps_star);
  out["m_in"] = fit.m_in;
  out["m_out"] = fit.m_out;
  out["variant"] = simple_variant(c) ? "simple" : "multigraph";
  json curve = json::array();
  for (const FitRow& row : fit.curve)
    curve.push_back(json{{"r", row.r},
                         {"m_in", row.m_in},
                         {"m_out", row.m_out},
                         {"log_count", row.feasible ? json(row.log_count)
                                                    : json(nullptr)},
                         {"feasible", row.feasible}});
  out["curve"] = curve;
  emit(c, out.dump(2));
  return kExitOk;
}

int cmd_sweep_r(const RunConfig& c, int r_lo, int r_hi) {
  const Graph g = load_graph(c);
  const VertexSequence s = load_sequence(c, g);
  const auto rows = ci_sweep(g, s, simple_variant(c), c.alpha, r_lo, r_hi);
  const std::string f = format_or(c, "csv");
  if (f == "csv") {
    std::ostringstream os;
    os << "r,m_in,m_out,h1_in,mean,ci_lower,ci_upper,z,p_value,defined\n";
    char buf[64];
    auto num = [&](double v) -> std::string {
      std::snprintf(buf, sizeof buf, "%.12g", v);
      return buf;
    };
    for (const auto& row : rows) {
      os << row.r << ',' << row.m_in << ',' << row.m_out << ',';
      if (row.defined)
        os << num(row.h1_in) << ',' << num(row.mean) << ','
           << num(row.ci_lower) << ',' << num(row.ci_upper) << ','
           << num(row.z) << ',' << num(row.p_value);
      else
        os << ",,,,,";
      os << ',' << (row.defined ? 1 : 0) << '\n';
    }
    emit(c, os.str());
    return kExitOk;
  }
  json arr = json::array();
  for (const auto& row : rows) {
    json j{{"r", row.r}, {"m_in", row.m_in}, {"m_out", row.m_out},
           {"defined", row.defined}};
    if (row.defined) {
      j["h1_in"] = row.h1_in;
      j["mean"] = row.mean;
      j["ci_lower"] = row.ci_lower;
      j["ci_upper"] = row.ci_upper;
      j["z"] = row.z;
      j["p_value"] = row.p_value;
    }
    arr.push_back(j);
  }
  emit(c, arr.dump(2));
  return kExitOk;
}

struct PowerOptidx {
  std::string grid = "r-eps";
  std::string mode = "analytic";
  std::string statistic = "H1";
  int n = 0;
  std::int64_t m = 0;
  std::vector<double> r_over_n;
  std::vector<double> eps;
  std::vector<int> n_values;
  std::vector<double> degrees;
  double fixed_r_over_n = 0.75;
  double fixed_eps = 0.0;
  std::int64_t samples = 200;
};

int cmd_power(const RunConfig& c, const PowerOptidx& o) {
  PowerGrid grid;
  if (o.grid == "r-eps") {
    if (o.n < 3 || o.m < 1)
      throw ValidationError("power --grid r-eps requires --n and --m");
    std::vector<double> rs = o.r_over_n;
    std::vector<double> es = o.eps;
    if (rs.empty())
      for (int i = 1; i <= 9; ++i) rs.push_back(i / 10.0);
    if (es.empty())
      for (int i = 0; i <= 10; ++i) es.push_back(i / 10.0);
    grid = power_grid_r_eps(o.n, o.m, rs, es, c.alpha, simple_variant(c),
                            o.mode, o.statistic, o.samples, c.seed);
  } else if (o.grid == "n-degree") {
    std::vector<int> ns = o.n_values;
    std::vector<double> ds = o.degrees;
    if (ns.empty()) ns = {50, 100, 150, 200};
    if (ds.empty()) ds = {4, 8, 12, 16};
    grid = power_grid_n_degree(ns, ds, o.fixed_r_over_n, o.fixed_eps, c.alpha,
                               simple_variant(c), o.mode, o.statistic,
                               o.samples, c.seed);
  } else {
    throw ValidationError("unknown grid kind: " + o.grid);
  }
  const std::string f = format_or(c, "csv");
  if (f == "json") {
    emit(c, grid.to_json().dump(2));
  } else {
    std::ostringstream os;
    grid.write_csv(os);
    emit(c, os.str());
  }
  return kExitOk;
}

int cmd_order(const RunConfig& c, const std::string& method) {
  const Graph g = load_graph(c);
  const OrderingResult res =
      method == "spectral" ? spectral_ordering(g) : rcm_ordering(g);
  const std::string f = format_or(c, "text");
  if (f == "json") {
    json out;
    out["method"] = res.method;
    out["bandwidth"] = res.bandwidth;
    if (res.method == "spectral") out["fiedler_value"] = res.fiedler_value;
    out["positions"] = res.sequence.positions();
    emit(c, out.dump(2));
  } else {
    std::ostringstream os;
    write_sequence(os, res.sequence);
    emit(c, os.str());
  }
  return kExitOk;
}

void write_sample_outputs(const RunConfig& c, const Graph& g,
                          const json& meta) {
  std::ostringstream os;
  write_edge_list(os, g);
  if (c.output.empty()) {
    emit(c, os.str());
    return;
  }
  write_file_atomic(c.output, os.str());
  write_file_atomic(c.output + ".meta.json", meta.dump(2) + "\n");
}

int cmd_sample_er(const RunConfig& c, int n, std::int64_t m) {
  const bool simple = simple_variant(c);
  const Graph g = sample_er(n, m, simple, c.seed);
  json meta{{"model", "er_fixed_m"},
            {"n", n},
            {"m", m},
            {"variant", simple ? "simple" : "multigraph"},
            {"seed", c.seed}};
  write_sample_outputs(c, g, meta);
  return kExitOk;
}

int cmd_sample_orgm(const RunConfig& c, int n, std::int64_t m, int r,
                    double eps, std::int64_t m_in_opt, std::int64_t m_out_opt,
                    const std::vector<int>& blocks) {
  const bool simple = simple_variant(c);
  OrgmParams p;
  p.n = n;
  p.simple = simple;
  p.envelope =
      blocks.empty() ? EnvelopeSpec::banded(r) : EnvelopeSpec::block_diagonal(blocks);
  if (m_in_opt >= 0 || m_out_opt >= 0) {
    if (m_in_opt < 0 || m_out_opt < 0)
      throw ValidationError("--m-in and --m-out must be given together");
    p.m_in = m_in_opt;
    p.m_out = m_out_opt;
  } else {
    if (blocks.empty()) {
      p = orgm_params_from_eps(n, m, r, eps, simple);
    } else {
      const auto [oin, oout] = p.envelope.omega_sizes(n);
      const auto [mi, mo] = split_edges(m, eps, oin, oout);
      p.m_in = mi;
      p.m_out = mo;
    }
  }
  p.validate();
  const Graph g = sample_orgm(p, c.seed);
  json meta = p.to_json();
  meta["model"] = "orgm";
  meta["seed"] = c.seed;
  if (p.m_in > 0 && p.envelope.omega_sizes(n).second > 0)
    meta["eps"] = p.eps();
  write_sample_outputs(c, g, meta);
  return kExitOk;
}

int cmd_fetch(const std::string& url, const std::string& output) {
  // Thin download helper: GET the URL, write the body verbatim.
  static const std::string http = "http://";
  static const std::string https = "https://";
  std::string host_port, path = "/";
  bool tls = false;
  std::string rest;
  if (url.rfind(http, 0) == 0) {
    rest = url.substr(http.size());
  } else if (url.rfind(https, 0) == 0) {
    rest = url.substr(https.size());
    tls = true;
  } else {
    throw ValidationError("fetch expects an http:// or https:// URL");
  }
  const auto slash = rest.find('/');
  host_port = rest.substr(0, slash);
  if (slash != std::string::npos) path = rest.substr(slash);
  if (host_port.empty()) throw ValidationError("fetch URL has no host");

  auto finish = [&](httplib::Result res) {
    if (!res)
      throw IoError("fetch failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
      throw IoError("fetch failed: HTTP status " +
                    std::to_string(res->status));
    write_file_atomic(output, res->body);
    return kExitOk;
  };
  if (tls) {
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
    httplib::SSLClient cli(host_port);
    cli.enable_server_certificate_verification(false);
    return finish(cli.Get(path));
#else
    throw IoError("this build has no TLS support; use an http:// mirror");
#endif
  }
  httplib::Client cli(host_port);
  cli.set_connection_timeout(10);
  cli.set_read_timeout(30);
  return finish(cli.Get(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypothesis tests for sequential locality in graphs"};
  app.require_subcommand(1);

  RunConfig c;

  // stat
  auto* stat = app.add_subcommand("stat", "sequential-locality statistics");
  add_common_options(stat, c, true);

  // test {er|orgm|seq}
  auto* test = app.add_subcommand("test", "hypothesis tests");
  test->require_subcommand(1);
  auto* test_er = test->add_subcommand("er", "fixed-M random-graph null");
  add_common_options(test_er, c, true);
  std::string er_statistic = "H1", er_sided = "two";
  test_er->add_option("--statistic", er_statistic, "H1 | HG")
      ->check(CLI::IsMember({"H1", "HG"}));
  test_er->add_option("--sided", er_sided, "two | lower | upper")
      ->check(CLI::IsMember({"two", "lower", "upper"}));

  auto* test_orgm = test->add_subcommand("orgm", "in-envelope test + fit");
  add_common_options(test_orgm, c, true);
  int orgm_r = 0, reference_samples = 100;
  test_orgm->add_option("--r", orgm_r, "bandwidth (default: fitted r*)");
  test_orgm->add_option("--reference-samples", reference_samples,
                        "ER reference draws for classification (0 = none)");

  auto* test_seq = test->add_subcommand("seq", "random-sequence null");
  add_common_options(test_seq, c, true);
  bool seq_exact = false;
  std::int64_t seq_samples = 100000;
  int seq_cap = 9;
  test_seq->add_flag("--exact", seq_exact, "require exact enumeration");
  test_seq->add_option("--samples", seq_samples, "Monte Carlo sample count");
  test_seq->add_option("--cap", seq_cap, "max N for exact enumeration");

  // fit
  auto* fit = app.add_subcommand("fit", "bandwidth/density-ratio estimate");
  add_common_options(fit, c, true);

  // sweep-r
  auto* sweep = app.add_subcommand("sweep-r", "in-envelope CI sweep over r");
  add_common_options(sweep, c, true);
  int sweep_lo = 1, sweep_hi = 0;
  sweep->add_option("--r-min", sweep_lo, "lowest bandwidth");
  sweep->add_option("--r-max", sweep_hi, "highest bandwidth (default N-1)");

  // power
  auto* power = app.add_subcommand("power", "power grids");
  add_common_options(power, c, false);
  PowerOptidx po;
  power->add_option("--grid", po.grid, "r-eps | n-degree")
      ->check(CLI::IsMember({"r-eps", "n-degree"}));
  power->add_option("--mode", po.mode, "analytic | empirical")
      ->check(CLI::IsMember({"analytic", "empirical"}));
  power->add_option("--statistic", po.statistic, "H1 | HG")
      ->check(CLI::IsMember({"H1", "HG"}));
  power->add_option("--n", po.n, "vertex count (r-eps grid)");
  power->add_option("--m", po.m, "edge count (r-eps grid)");
  power->add_option("--r-over-n", po.r_over_n, "relative bandwidth values");
  power->add_option("--eps", po.eps, "density-ratio values");
  power->add_option("--n-values", po.n_values, "vertex counts (n-degree grid)");
  power->add_option("--degrees", po.degrees, "average degrees (n-degree grid)");
  power->add_option("--fixed-r-over-n", po.fixed_r_over_n,
                    "r/N for the n-degree grid");
  power->add_option("--fixed-eps", po.fixed_eps, "eps for the n-degree grid");
  power->add_option("--samples", po.samples, "samples per empirical cell");

  // order {spectral|rcm}
  auto* order = app.add_subcommand("order", "compute vertex orderings");
  order->require_subcommand(1);
  auto* order_spectral =
      order->add_subcommand("spectral", "normalized-Laplacian ordering");
  add_common_options(order_spectral, c, true);
  auto* order_rcm =
      order->add_subcommand("rcm", "reversed Cuthill-McKee ordering");
  add_common_options(order_rcm, c, true);

  // sample {er|orgm}
  auto* sample = app.add_subcommand("sample", "draw random graphs");
  sample->require_subcommand(1);
  auto* sample_er_cmd = sample->add_subcommand("er", "fixed-M random graph");
  add_common_options(sample_er_cmd, c, false);
  int er_n = 0;
  std::int64_t er_m = 0;
  sample_er_cmd->add_option("--n", er_n, "vertex count")->required();
  sample_er_cmd->add_option("--m", er_m, "edge count")->required();

  auto* sample_orgm_cmd = sample->add_subcommand("orgm", "ordered random graph");
  add_common_options(sample_orgm_cmd, c, false);
  int og_n = 0, og_r = 0;
  std::int64_t og_m = 0, og_m_in = -1, og_m_out = -1;
  double og_eps = 0.0;
  std::vector<int> og_blocks;
  sample_orgm_cmd->add_option("--n", og_n, "vertex count")->required();
  sample_orgm_cmd->add_option("--m", og_m, "total edge count");
  sample_orgm_cmd->add_option("--r", og_r, "bandwidth (banded envelope)");
  sample_orgm_cmd->add_option("--eps", og_eps, "density ratio");
  sample_orgm_cmd->add_option("--m-in", og_m_in, "in-envelope edges");
  sample_orgm_cmd->add_option("--m-out", og_m_out, "out-of-envelope edges");
  sample_orgm_cmd->add_option("--blocks", og_blocks,
                              "block sizes (block-diagonal envelope)");

  // fetch
  auto* fetch = app.add_subcommand("fetch", "download a file over HTTP");
  std::string fetch_url, fetch_output;
  fetch->add_option("--url", fetch_url, "source URL")->required();
  fetch->add_option("--output", fetch_output, "destination file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (stat->parsed()) return cmd_stat(c);
    if (test_er->parsed()) return cmd_test_er(c, er_statistic, er_sided);
    if (test_orgm->parsed()) return cmd_test_orgm(c, orgm_r, reference_samples);
    if (test_seq->parsed()) return cmd_test_seq(c, seq_exact, seq_samples, seq_cap);
    if (fit->parsed()) return cmd_fit(c);
    if (sweep->parsed()) return cmd_sweep_r(c, sweep_lo, sweep_hi);
    if (power->parsed()) return cmd_power(c, po);
    if (order_spectral->parsed()) return cmd_order(c, "spectral");
    if (order_rcm->parsed()) return cmd_order(c, "rcm");
    if (sample_er_cmd->parsed()) return cmd_sample_er(c, er_n, er_m);
    if (sample_orgm_cmd->parsed())
      return cmd_sample_orgm(c, og_n, og_m, og_r, og_eps, og_m_in, og_m_out,
                             og_blocks);
    if (fetch->parsed()) return cmd_fetch(fetch_url, fetch_output);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  std::cerr << "error: no subcommand selected\n";
  return kExitValidation;
}
