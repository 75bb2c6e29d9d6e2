#pragma once

// Integer partitions, their placement inside the staircase delta_n, and the
// natural unit interval order they index.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cqsym {

class Partition {
 public:
  Partition() = default;
  /// Accepts padded input; trailing zeros are dropped. Throws
  /// std::invalid_argument on negative or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// `2,2`; the empty partition is `0` or the empty string.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  /// lambda_i for 1-based i; 0 beyond the length (and for i < 1).
  int part(int i) const;
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const;
  /// Comma-separated parts, `0` for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; sorting with std::greater yields reverse-lex.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

/// Orders partitions so that larger ones in lexicographic order come first.
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

/// Simple graph on vertices 1..n.
class IncGraph {
 public:
  explicit IncGraph(int n);
  void add_edge(int i, int j);
  bool adjacent(int i, int j) const;
  int vertex_count() const { return n_; }
  /// Edges {i,j} with i<j, sorted.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;
  /// Bitmask of neighbours of v with smaller label (bit u set for u < v).
  std::uint64_t lower_neighbours(int v) const { return lower_[v]; }

 private:
  int n_;
  std::vector<std::uint64_t> lower_;
};

bool fits_staircase(const Partition& lambda, int n);
bool fits_rectangle(const Partition& lambda, int rows, int cols);
/// m_i = n - lambda_i for i = 1..n-1. Requires fits_staircase.
std::vector<int> m_sequence(const Partition& lambda, int n);
/// Incomparability graph of P_lambda: {i,j} (i<j) is an edge iff j <= m_i.
IncGraph inc_graph(const Partition& lambda, int n);
/// a_i = m_i - i.
std::vector<int> area_sequence(const Partition& lambda, int n);
inline Partition conjugate(const Partition& lambda) { return lambda.conjugate(); }

/// All partitions of n, in reverse-lex order ((n) first).
std::vector<Partition> partitions_of(int n);
/// Partitions with at most `rows` parts, each at most `cols`, reverse-lex.
std::vector<Partition> partitions_in_box(int rows, int cols);
/// Partitions inside delta_n, reverse-lex.
std::vector<Partition> partitions_in_staircase(int n);
/// The rectangle (width^height).
Partition rectangle(int height, int width);

}  // namespace cqsym
