#include "seqloc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace seqloc {

namespace {

// Parses a nonnegative integer token; returns false on any malformation.
bool parse_int64(const std::string& tok, std::int64_t& out) {
  if (tok.empty()) return false;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream iss(line);
  std::string t;
  while (iss >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw ValidationError("vertex count must be nonnegative");
  std::map<std::pair<int, int>, std::int64_t> agg;
  for (const Edge& e : edges) {
    int u = e.u, v = e.v;
    if (u == v)
      throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ValidationError("endpoint outside [0, " + std::to_string(n) +
                            "): (" + std::to_string(u) + ", " +
                            std::to_string(v) + ")");
    if (e.mult <= 0) throw ValidationError("multiplicity must be positive");
    if (u > v) std::swap(u, v);
    agg[{u, v}] += e.mult;
  }
  Graph g;
  g.n_ = n;
  g.edges_.reserve(agg.size());
  for (const auto& [pair, mult] : agg) {
    g.edges_.push_back({pair.first, pair.second, mult});
    g.m_ += mult;
  }
  return g;
}

bool Graph::is_simple() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.mult == 1; });
}

std::vector<std::int64_t> Graph::degrees() const {
  std::vector<std::int64_t> d(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    d[static_cast<std::size_t>(e.u)] += e.mult;
    d[static_cast<std::size_t>(e.v)] += e.mult;
  }
  return d;
}

std::int64_t Graph::wedge_count() const {
  // Pairs of distinct edges sharing exactly one vertex, counting
  // parallel-edge slots separately: sum_v (d_v^2 - sum_u mult(v,u)^2) / 2.
  // For simple graphs sum_u mult^2 = d_v and this is sum_v C(d_v, 2).
  std::vector<std::int64_t> d = degrees();
  std::vector<std::int64_t> sq(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    sq[static_cast<std::size_t>(e.u)] += e.mult * e.mult;
    sq[static_cast<std::size_t>(e.v)] += e.mult * e.mult;
  }
  std::int64_t total = 0;
  for (int v = 0; v < n_; ++v) {
    total += d[static_cast<std::size_t>(v)] * d[static_cast<std::size_t>(v)] -
             sq[static_cast<std::size_t>(v)];
  }
  return total / 2;
}

std::int64_t Graph::multiplicity(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                             [](const Edge& e, const std::pair<int, int>& p) {
                               return std::pair{e.u, e.v} < p;
                             });
  if (it != edges_.end() && it->u == u && it->v == v) return it->mult;
  return 0;
}

VertexSequence VertexSequence::identity(int n) {
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = i + 1;
  VertexSequence s;
  s.positions_ = std::move(pos);
  return s;
}

VertexSequence VertexSequence::from_positions(std::vector<int> positions) {
  const int n = static_cast<int>(positions.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int p : positions) {
    if (p < 1 || p > n)
      throw ValidationError("position " + std::to_string(p) +
                            " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(p)])
      throw ValidationError("position " + std::to_string(p) +
                            " assigned twice (not a bijection)");
    seen[static_cast<std::size_t>(p)] = true;
  }
  VertexSequence s;
  s.positions_ = std::move(positions);
  return s;
}

VertexSequence VertexSequence::from_order(const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> pos(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    int v = order[static_cast<std::size_t>(k)];
    if (v < 0 || v >= n)
      throw ValidationError("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(n - 1));
    if (pos[static_cast<std::size_t>(v)] != 0)
      throw ValidationError("vertex " + std::to_string(v) +
                            " listed twice in the order");
    pos[static_cast<std::size_t>(v)] = k + 1;
  }
  VertexSequence s;
  s.positions_ = std::move(pos);
  return s;
}

std::vector<int> VertexSequence::order() const {
  std::vector<int> ord(positions_.size());
  for (int v = 0; v < size(); ++v)
    ord[static_cast<std::size_t>(positions_[static_cast<std::size_t>(v)] - 1)] = v;
  return ord;
}

Graph apply_permutation(const Graph& g, const VertexSequence& s) {
  if (s.size() != g.num_vertices())
    throw ValidationError("sequence length does not match vertex count");
  std::vector<Edge> relabeled;
  relabeled.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    relabeled.push_back({s.position(e.u) - 1, s.position(e.v) - 1, e.mult});
  return Graph::from_edges(g.num_vertices(), relabeled);
}

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;
  std::int64_t declared_n = -1;
  int max_id = -1;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "%N") {
      if (!first_content_line)
        throw ParseError(lineno, "vertex-count header must come first");
      if (toks.size() != 2 || !parse_int64(toks[1], declared_n) ||
          declared_n < 0)
        throw ParseError(lineno, "malformed vertex-count header");
      first_content_line = false;
      continue;
    }
    first_content_line = false;
    if (toks.size() != 2 && toks.size() != 3)
      throw ParseError(lineno, "expected 'u v' or 'u v multiplicity'");
    std::int64_t u, v, mult = 1;
    if (!parse_int64(toks[0], u) || !parse_int64(toks[1], v))
      throw ParseError(lineno, "vertex ids must be nonnegative integers");
    if (toks.size() == 3 && (!parse_int64(toks[2], mult) || mult <= 0))
      throw ParseError(lineno, "multiplicity must be a positive integer");
    if (u == v) throw ParseError(lineno, "self-loops are not allowed");
    if (u > std::numeric_limits<int>::max() || v > std::numeric_limits<int>::max())
      throw ParseError(lineno, "vertex id too large");
    edges.push_back({static_cast<int>(u), static_cast<int>(v), mult});
    max_id = std::max({max_id, static_cast<int>(u), static_cast<int>(v)});
  }
  std::int64_t n = declared_n >= 0 ? declared_n : max_id + 1;
  if (declared_n >= 0 && max_id >= declared_n)
    throw ValidationError("edge endpoint " + std::to_string(max_id) +
                          " exceeds declared vertex count " +
                          std::to_string(declared_n));
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "%N " << g.num_vertices() << "\n";
  for (const Edge& e : g.edges()) {
    out << e.u << " " << e.v;
    if (e.mult > 1) out << " " << e.mult;
    out << "\n";
  }
}

VertexSequence read_sequence(std::istream& in, int n) {
  std::vector<int> positions;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    std::int64_t p;
    if (toks.size() != 1 || !parse_int64(toks[0], p))
      throw ParseError(lineno, "expected one integer position per line");
    if (p < 1 || p > n)
      throw ParseError(lineno, "position outside 1.." + std::to_string(n));
    positions.push_back(static_cast<int>(p));
  }
  if (static_cast<int>(positions.size()) != n)
    throw ValidationError("sequence file has " +
                          std::to_string(positions.size()) + " entries, " +
                          "expected " + std::to_string(n));
  return VertexSequence::from_positions(std::move(positions));
}

VertexSequence read_sequence_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return read_sequence(in, n);
}

void write_sequence(std::ostream& out, const VertexSequence& s) {
  for (int v = 0; v < s.size(); ++v) out << s.position(v) << "\n";
}

}  // namespace seqloc
