#include <doctest.h>

#include <chrono>
#include <cmath>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "seqloc/er_null.hpp"
#include "seqloc/graph.hpp"
#include "seqloc/ordering.hpp"
#include "seqloc/orgm.hpp"
#include "seqloc/random_seq.hpp"
#include "seqloc/stats.hpp"
#include "test_support.hpp"

using namespace seqloc;
using doctest::Approx;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path write_graph_file(const Graph& g) {
  const fs::path p = testsup::scratch_dir() / "graph.txt";
  std::ostringstream os;
  write_edge_list(os, g);
  testsup::write_text(p, os.str());
  return p;
}

bool has_tmp_leftovers(const fs::path& dir) {
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().filename().string().find(".tmp-") != std::string::npos)
      return true;
  return false;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("stat prints the statistics as json and text") {
  const Graph g = testsup::path_graph(12);
  const fs::path in = write_graph_file(g);
  const VertexSequence id = VertexSequence::identity(12);

  const auto res = testsup::run_cli("stat --input " + in.string());
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j.at("n").get<int>() == 12);
  CHECK(j.at("m").get<std::int64_t>() == 11);
  CHECK(j.at("h1").get<double>() == Approx(3.0 / 13.0).epsilon(1e-12));
  CHECK(j.at("h1_raw").get<double>() == Approx(11.0).epsilon(1e-12));
  CHECK(j.at("z1").get<double>() == Approx(z1(g, id)).epsilon(1e-12));
  CHECK(j.at("zg").get<double>() == Approx(zg(g, id)).epsilon(1e-12));
  REQUIRE(j.at("h_i").size() == 12);
  CHECK(j.at("h_i")[0].get<double>() > 0.0);
  // Output round-trips through the parser unchanged.
  CHECK(json::parse(j.dump()) == j);

  const auto text = testsup::run_cli("stat --input " + in.string() +
                                     " --format text");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("H1:") != std::string::npos);

  CHECK(testsup::run_cli("stat --input " + in.string() + " --format csv")
            .exit_code == 2);
}

TEST_CASE("stat honors an explicit sequence file") {
  const fs::path in = write_graph_file(testsup::path_graph(3));
  const fs::path seq = testsup::scratch_dir() / "seq.txt";
  testsup::write_text(seq, "2\n1\n3\n");
  const auto res = testsup::run_cli("stat --input " + in.string() +
                                    " --sequence " + seq.string());
  REQUIRE(res.exit_code == 0);
  CHECK(json::parse(res.out).at("h1").get<double>() ==
        Approx(1.125).epsilon(1e-12));
}

TEST_CASE("bad inputs map to the documented exit codes") {
  CHECK(testsup::run_cli("stat --input /nonexistent/graph.txt").exit_code == 3);

  const fs::path in = write_graph_file(testsup::path_graph(3));
  const fs::path seq = testsup::scratch_dir() / "seq.txt";
  testsup::write_text(seq, "1\n1\n3\n");  // not a permutation
  const auto res = testsup::run_cli("stat --input " + in.string() +
                                    " --sequence " + seq.string());
  CHECK(res.exit_code == 2);
  CHECK(res.err.find("error:") != std::string::npos);

  CHECK(testsup::run_cli("stat --input " + in.string() + " --bogus-flag")
            .exit_code == 2);
  CHECK(testsup::run_cli("").exit_code == 2);  // a subcommand is required
  const auto help = testsup::run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("stat") != std::string::npos);
}

TEST_CASE("test er matches the library report") {
  const fs::path small = write_graph_file(testsup::path_graph(3));
  const auto res = testsup::run_cli("test er --input " + small.string());
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j.at("statistic") == "H1");
  CHECK(j.at("null_model") == "er_fixed_m_normal");
  CHECK(j.at("sidedness") == "two_sided");
  CHECK(j.at("p_value").get<double>() ==
        Approx(0.31731050786291415).epsilon(1e-12));
  CHECK(j.at("decision") == "not-reject");
  CHECK(j.at("details").at("n").get<int>() == 3);

  const fs::path longer = write_graph_file(testsup::path_graph(12));
  const json two =
      json::parse(testsup::run_cli("test er --input " + longer.string()).out);
  CHECK(two.at("decision") == "reject");
  const json lower = json::parse(
      testsup::run_cli("test er --input " + longer.string() + " --sided lower")
          .out);
  CHECK(lower.at("p_value").get<double>() ==
        Approx(two.at("p_value").get<double>() / 2.0).epsilon(1e-12));

  const json hg = json::parse(
      testsup::run_cli("test er --input " + longer.string() +
                       " --statistic HG --sided lower")
          .out);
  CHECK(hg.at("statistic") == "HG");
  CHECK(hg.at("observed").get<double>() < 1.0);
  CHECK(hg.at("decision") == "reject");

  const auto text = testsup::run_cli("test er --input " + longer.string() +
                                     " --format text");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("decision:   reject") != std::string::npos);

  // n = 2 cannot host z1.
  const fs::path tiny = write_graph_file(Graph::from_edges(2, {{0, 1, 1}}));
  CHECK(testsup::run_cli("test er --input " + tiny.string()).exit_code == 2);
}

TEST_CASE("test seq enumerates small graphs and samples big ones") {
  const Graph tp = testsup::triangle_with_pendant();
  const fs::path in = write_graph_file(tp);
  // Identity order: raw sum 7 of the 24-sequence histogram {5,6,7,8}.
  const auto ident =
      testsup::run_cli("test seq --exact --input " + in.string());
  REQUIRE(ident.exit_code == 0);
  const json ij = json::parse(ident.out);
  CHECK(ij.at("observed_z1").get<double>() ==
        Approx(1.0 / std::sqrt(20.0)).epsilon(1e-12));
  CHECK(ij.at("p_leq").get<double>() == Approx(20.0 / 24.0).epsilon(1e-12));

  // An optimal arrangement (pendant first) reaches the smallest raw sum; no
  // sequence lies strictly below it.
  const fs::path seq = testsup::scratch_dir() / "best.txt";
  testsup::write_text(seq, "2\n3\n4\n1\n");
  const auto res = testsup::run_cli("test seq --exact --input " + in.string() +
                                    " --sequence " + seq.string());
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j.at("enumerated").get<bool>());
  CHECK(j.at("n_sequences").get<std::uint64_t>() == 24);
  CHECK(j.at("distinct_matrices").get<std::uint64_t>() == 12);
  CHECK(j.at("observed_z1").get<double>() ==
        Approx(-1.118033988749895).epsilon(1e-12));
  const VertexSequence best = VertexSequence::from_positions({2, 3, 4, 1});
  CHECK(j.at("z1_factor").get<double>() ==
        Approx(z1_factor(tp, best)).epsilon(1e-12));
  CHECK(j.at("p_leq").get<double>() == Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(j.at("p_lt").get<double>() == 0.0);
  CHECK_FALSE(j.contains("p_leq_standard_error"));

  const fs::path big = write_graph_file(testsup::path_graph(10));
  CHECK(testsup::run_cli("test seq --exact --input " + big.string())
            .exit_code == 2);
  const auto sampled = testsup::run_cli(
      "test seq --input " + big.string() + " --samples 2000 --seed 5");
  REQUIRE(sampled.exit_code == 0);
  const json s = json::parse(sampled.out);
  CHECK_FALSE(s.at("enumerated").get<bool>());
  CHECK(s.at("n_sequences").get<std::uint64_t>() == 2000);
  CHECK(s.at("p_leq_standard_error").get<double>() >= 0.0);
}

TEST_CASE("test orgm fits, tests and classifies in one pass") {
  const fs::path dir = testsup::scratch_dir();
  const fs::path band = dir / "band.txt";
  REQUIRE(testsup::run_cli("sample orgm --n 30 --r 5 --m-in 60 --m-out 10 "
                           "--seed 21 --output " +
                           band.string())
              .exit_code == 0);

  const auto res = testsup::run_cli("test orgm --input " + band.string() +
                                    " --reference-samples 20 --seed 3");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j.at("fit").at("r_star").get<int>() >= 1);
  CHECK(j.at("fit").at("variant") == "simple");
  CHECK(j.at("r_used").get<int>() == j.at("fit").at("r_star").get<int>());
  CHECK(j.at("in_envelope").at("statistic") == "H1_in");
  CHECK(j.at("in_envelope").at("null_model") == "orgm_banded_normal");
  CHECK(j.at("whole_graph").at("null_model") == "er_fixed_m_normal");
  CHECK(j.at("er_reference").at("samples").get<int>() == 20);
  CHECK(j.at("er_reference").at("ordering") == "spectral");
  CHECK(j.at("er_reference").at("alpha_quantile").get<double>() > 0.0);
  const std::string type = j.at("classification").get<std::string>();
  CHECK((type == "I" || type == "II" || type == "III" || type == "IV" ||
         type == "indeterminate"));

  const auto fixed = testsup::run_cli("test orgm --input " + band.string() +
                                      " --r 7 --reference-samples 0");
  REQUIRE(fixed.exit_code == 0);
  const json f = json::parse(fixed.out);
  CHECK(f.at("r_used").get<int>() == 7);
  CHECK(f.at("er_reference").is_null());
}

TEST_CASE("fit emits the bandwidth curve in both formats") {
  const fs::path dir = testsup::scratch_dir();
  const fs::path band = dir / "band.txt";
  REQUIRE(testsup::run_cli("sample orgm --n 30 --r 5 --m-in 60 --m-out 10 "
                           "--seed 21 --output " +
                           band.string())
              .exit_code == 0);

  const json j =
      json::parse(testsup::run_cli("fit --input " + band.string()).out);
  CHECK(j.at("r_star").get<int>() >= 1);
  CHECK(j.at("curve").size() == 29);
  CHECK(j.at("curve")[0].at("r").get<int>() == 1);

  const auto csv = testsup::run_cli("fit --input " + band.string() +
                                    " --format csv");
  REQUIRE(csv.exit_code == 0);
  std::istringstream lines(csv.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "r,m_in,m_out,log_count,feasible");
  int rows = 0;
  for (std::string line; std::getline(lines, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 29);
}

TEST_CASE("sweep-r emits one row per bandwidth") {
  const fs::path in = write_graph_file(sample_er(20, 40, true, 2));
  const auto csv = testsup::run_cli("sweep-r --input " + in.string() +
                                    " --r-min 2 --r-max 6");
  REQUIRE(csv.exit_code == 0);
  std::istringstream lines(csv.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "r,m_in,m_out,h1_in,mean,ci_lower,ci_upper,z,p_value,defined");
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);)
    if (!line.empty()) rows.push_back(line);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].rfind("2,", 0) == 0);

  const json j = json::parse(
      testsup::run_cli("sweep-r --input " + in.string() + " --format json").out);
  REQUIRE(j.size() == 19);
  for (const auto& row : j) CHECK(row.contains("defined"));
}

TEST_CASE("power grids come out as csv surfaces or json") {
  const auto csv = testsup::run_cli(
      "power --grid r-eps --mode analytic --n 40 --m 120 "
      "--r-over-n 0.1 0.3 --eps 0 0.5");
  REQUIRE(csv.exit_code == 0);
  std::istringstream lines(csv.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "eps\\r_over_n,0.1,0.3");
  int rows = 0;
  for (std::string line; std::getline(lines, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 2);

  const json j = json::parse(
      testsup::run_cli("power --grid n-degree --n-values 30 50 --degrees 4 "
                       "--mode analytic --format json")
          .out);
  CHECK(j.at("x_name") == "n");
  REQUIRE(j.at("cells").size() == 1);
  CHECK(j.at("cells")[0].size() == 2);

  CHECK(testsup::run_cli("power --grid r-eps --mode analytic").exit_code == 2);
  CHECK(testsup::run_cli("power --grid r-eps --mode analytic --n 40 --m 120 "
                         "--statistic HG")
            .exit_code == 2);
}

TEST_CASE("order writes loadable sequence files") {
  std::vector<Edge> edges;
  const std::vector<int> true_order{3, 0, 5, 2, 4, 1};
  for (std::size_t i = 0; i + 1 < true_order.size(); ++i)
    edges.push_back({true_order[i], true_order[i + 1], 1});
  const Graph g = Graph::from_edges(6, edges);
  const fs::path in = write_graph_file(g);

  const auto res = testsup::run_cli("order spectral --input " + in.string());
  REQUIRE(res.exit_code == 0);
  std::istringstream seq_in(res.out);
  const VertexSequence s = read_sequence(seq_in, 6);
  CHECK(sequence_bandwidth(g, s) == 1);

  const json j = json::parse(
      testsup::run_cli("order rcm --input " + in.string() + " --format json")
          .out);
  CHECK(j.at("method") == "rcm");
  CHECK(j.at("bandwidth").get<std::int64_t>() == 1);
  CHECK_FALSE(j.contains("fiedler_value"));
  REQUIRE(j.at("positions").size() == 6);

  const json sj = json::parse(
      testsup::run_cli("order spectral --input " + in.string() +
                       " --format json")
          .out);
  CHECK(sj.at("fiedler_value").get<double>() > 0.0);
}

TEST_CASE("sampling is seed-deterministic and leaves no temp files") {
  const fs::path dir = testsup::scratch_dir();
  const fs::path a = dir / "a.txt";
  const fs::path b = dir / "b.txt";
  const fs::path other = dir / "other.txt";
  REQUIRE(testsup::run_cli("sample er --n 25 --m 60 --seed 9 --output " +
                           a.string())
              .exit_code == 0);
  REQUIRE(testsup::run_cli("sample er --n 25 --m 60 --seed 9 --output " +
                           b.string())
              .exit_code == 0);
  REQUIRE(testsup::run_cli("sample er --n 25 --m 60 --seed 10 --output " +
                           other.string())
              .exit_code == 0);
  CHECK(testsup::read_text(a) == testsup::read_text(b));
  CHECK(testsup::read_text(a) != testsup::read_text(other));
  CHECK_FALSE(has_tmp_leftovers(dir));

  const json meta = json::parse(testsup::read_text(a.string() + ".meta.json"));
  CHECK(meta.at("model") == "er_fixed_m");
  CHECK(meta.at("n").get<int>() == 25);
  CHECK(meta.at("seed").get<std::uint64_t>() == 9);

  const fs::path band = dir / "band.txt";
  REQUIRE(testsup::run_cli("sample orgm --n 30 --r 5 --m-in 60 --m-out 10 "
                           "--seed 21 --output " +
                           band.string())
              .exit_code == 0);
  const json bmeta =
      json::parse(testsup::read_text(band.string() + ".meta.json"));
  CHECK(bmeta.at("model") == "orgm");
  // eps = (10/300) / (60/135) with omega_in(5) = 135 of the 435 slots.
  CHECK(bmeta.at("eps").get<double>() == Approx(0.075).epsilon(1e-12));

  // The sampled band graph really is band-limited under the identity order.
  std::istringstream gs(testsup::read_text(band));
  const Graph bg = read_edge_list(gs);
  const InEnvelopeStat stat =
      in_envelope_stat(bg, VertexSequence::identity(30), 5);
  CHECK(stat.m_in == 60);
  CHECK(stat.m_out == 10);

  // Infeasible request: 100 simple edges in a 9-slot band.
  CHECK(testsup::run_cli("sample orgm --n 10 --r 1 --m-in 100 --m-out 0")
            .exit_code == 2);
}

TEST_CASE("a sampled graph is ordered and then tested end to end") {
  const fs::path dir = testsup::scratch_dir();
  const fs::path graph = dir / "er.txt";
  const fs::path seq = dir / "seq.txt";
  REQUIRE(testsup::run_cli("sample er --n 100 --m 250 --seed 5 --output " +
                           graph.string())
              .exit_code == 0);
  REQUIRE(testsup::run_cli("order spectral --input " + graph.string() +
                           " --output " + seq.string())
              .exit_code == 0);
  const auto res = testsup::run_cli("test er --input " + graph.string() +
                                    " --sequence " + seq.string());
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.out);
  // A sequence optimized on pure noise looks far more local than random
  // placement: the two-sided test must fire on the low side.
  CHECK(j.at("z").get<double>() < 0.0);
  CHECK(j.at("decision") == "reject");
}

TEST_CASE("fetch downloads over http and reports failures") {
  httplib::Server server;
  server.Get("/data.txt", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("the quick brown payload\n", "text/plain");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread runner([&server] { server.listen_after_bind(); });
  server.wait_until_ready();

  const fs::path dir = testsup::scratch_dir();
  const fs::path got = dir / "got.txt";
  const std::string base = "http://127.0.0.1:" + std::to_string(port);
  CHECK(testsup::run_cli("fetch --url " + base + "/data.txt --output " +
                         got.string())
            .exit_code == 0);
  CHECK(testsup::read_text(got) == "the quick brown payload\n");

  CHECK(testsup::run_cli("fetch --url " + base + "/missing --output " +
                         (dir / "x1").string())
            .exit_code == 3);

  server.stop();
  runner.join();

  // Nothing listens on the discard port; the connection is refused.
  CHECK(testsup::run_cli("fetch --url http://127.0.0.1:9/x --output " +
                         (dir / "x2").string())
            .exit_code == 3);
  CHECK(testsup::run_cli("fetch --url ftp://example.org/x --output " +
                         (dir / "x3").string())
            .exit_code == 2);
}

}  // TEST_SUITE("cli")
