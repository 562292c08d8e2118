/// Core graph and vertex-sequence types.
///
/// A Graph is an undirected (multi)graph over vertices 0..n-1 stored as a
/// canonical weighted edge list: endpoints normalized to u < v, pairs sorted
/// lexicographically, parallel edges aggregated into a multiplicity count.
/// A VertexSequence assigns each vertex a distinct position 1..n.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqloc {

/// Base class for all input-validation failures (CLI maps these to exit 2).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; carries the 1-based line number of the offence.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An undirected edge with endpoints u < v and multiplicity >= 1.
struct Edge {
  int u = 0;
  int v = 0;
  std::int64_t mult = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;

  /// Builds a graph on n vertices from raw (possibly unordered, repeated)
  /// endpoint pairs.  Endpoints are normalized, duplicates aggregated.
  /// Throws ValidationError for self-loops, endpoints outside [0, n) or
  /// non-positive multiplicities.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int num_vertices() const { return n_; }
  /// Total edge count M including multiplicities.
  std::int64_t num_edges() const { return m_; }
  /// Canonical aggregated edge list (u < v, sorted, multiplicities >= 1).
  const std::vector<Edge>& edges() const { return edges_; }

  /// True when every multiplicity equals 1.
  bool is_simple() const;

  /// Multiplicity-weighted degree of every vertex.
  std::vector<std::int64_t> degrees() const;

  /// Number of wedges (paths of length two).  For simple graphs this is
  /// sum_i C(d_i, 2); with parallel edges each unordered pair of distinct
  /// neighbors-with-multiplicity counts, i.e.
  /// sum_v (d_v^2 - sum_u mult(v,u)^2) / 2.
  std::int64_t wedge_count() const;

  /// Multiplicity of the pair {u, v} (0 when absent).
  std::int64_t multiplicity(int u, int v) const;

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<Edge> edges_;
};

/// A bijection vertex -> position taking values 1..n.
class VertexSequence {
 public:
  VertexSequence() = default;

  /// Identity sequence: vertex i gets position i + 1.
  static VertexSequence identity(int n);

  /// Validates that `positions` (1-based) is a permutation of 1..n.
  static VertexSequence from_positions(std::vector<int> positions);

  /// Builds from a vertex ordering: order[k] is the vertex placed at
  /// position k + 1.
  static VertexSequence from_order(const std::vector<int>& order);

  int size() const { return static_cast<int>(positions_.size()); }
  /// Position of vertex v, in 1..n.
  int position(int v) const { return positions_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& positions() const { return positions_; }

  /// Vertices listed by increasing position.
  std::vector<int> order() const;

 private:
  std::vector<int> positions_;
};

/// Relabels the graph so that adjacency under the identity sequence equals
/// adjacency under `s`: vertex v becomes s.position(v) - 1.  Preserves n, m,
/// the degree multiset and the wedge count.
Graph apply_permutation(const Graph& g, const VertexSequence& s);

/// Reads a whitespace-separated edge list: lines "u v" or "u v mult" with
/// 0-based vertex ids, '#' starting a comment, blank lines skipped, and an
/// optional "%N <count>" header pinning the vertex count (otherwise n is
/// 1 + max endpoint).  Throws ParseError with the offending line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Writes the canonical edge list ("u v" lines, "u v mult" when mult > 1),
/// preceded by a "%N <count>" header so isolated trailing vertices survive.
void write_edge_list(std::ostream& out, const Graph& g);

/// Reads a vertex sequence: one 1-based position per line, line i holding
/// the position of vertex i - 1.  Must contain exactly n lines forming a
/// permutation of 1..n.
VertexSequence read_sequence(std::istream& in, int n);
VertexSequence read_sequence_file(const std::string& path, int n);

void write_sequence(std::ostream& out, const VertexSequence& s);

}  // namespace seqloc
