#include "cqsym/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace cqsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return {};
  while (true) {
    auto comma = text.find(',');
    auto tok = trim(text.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("cannot parse partition part '" + std::string(tok) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c(static_cast<std::size_t>(largest()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

IncGraph::IncGraph(int n) : n_(n), lower_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 0 || n > 63) throw std::invalid_argument("IncGraph supports 0..63 vertices");
}

void IncGraph::add_edge(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n_ || i == j) throw std::invalid_argument("edge endpoints out of range");
  lower_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
}

bool IncGraph::adjacent(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n_ || i == j) return false;
  return (lower_[static_cast<std::size_t>(j)] >> i) & 1U;
}

std::vector<std::pair<int, int>> IncGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

std::size_t IncGraph::edge_count() const {
  std::size_t c = 0;
  for (auto m : lower_) c += static_cast<std::size_t>(__builtin_popcountll(m));
  return c;
}

bool fits_staircase(const Partition& lambda, int n) {
  if (n < 1) return false;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) > n - i) return false;
  return true;
}

bool fits_rectangle(const Partition& lambda, int rows, int cols) {
  return lambda.length() <= rows && lambda.largest() <= cols;
}

std::vector<int> m_sequence(const Partition& lambda, int n) {
  if (!fits_staircase(lambda, n)) throw std::invalid_argument("partition " + lambda.to_string() + " does not fit delta_" + std::to_string(n));
  std::vector<int> m;
  m.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    int mi = n - lambda.part(i);
    if (mi < i || mi > n || (!m.empty() && mi < m.back()))
      throw std::logic_error("m_sequence invariant violated");
    m.push_back(mi);
  }
  return m;
}

IncGraph inc_graph(const Partition& lambda, int n) {
  const auto m = m_sequence(lambda, n);
  IncGraph g(n);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= m[static_cast<std::size_t>(i - 1)]; ++j) g.add_edge(i, j);
  return g;
}

std::vector<int> area_sequence(const Partition& lambda, int n) {
  auto m = m_sequence(lambda, n);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] -= static_cast<int>(i) + 1;
  return m;
}

namespace {

void gen_bounded(int remaining_rows, int max_part, std::vector<int>& cur,
                 std::vector<Partition>& out, const auto& accept) {
  out.emplace_back(cur);
  if (!accept(out.back())) out.pop_back();
  if (remaining_rows == 0) return;
  for (int v = max_part; v >= 1; --v) {
    cur.push_back(v);
    gen_bounded(remaining_rows - 1, v, cur, out, accept);
    cur.pop_back();
  }
}

void gen_exact(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int v = std::min(n, max_part); v >= 1; --v) {
    cur.push_back(v);
    gen_exact(n - v, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n >= 0) gen_exact(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_bounded(std::max(rows, 0), std::max(cols, 0), cur, out, [](const Partition&) { return true; });
  std::sort(out.begin(), out.end(), ReverseLex{});
  return out;
}

std::vector<Partition> partitions_in_staircase(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_bounded(std::max(n - 1, 0), std::max(n - 1, 0), cur, out,
              [n](const Partition& p) { return fits_staircase(p, n); });
  std::sort(out.begin(), out.end(), ReverseLex{});
  return out;
}

Partition rectangle(int height, int width) {
  if (height < 0 || width < 0) throw std::invalid_argument("rectangle dimensions must be nonnegative");
  return Partition(std::vector<int>(static_cast<std::size_t>(width == 0 ? 0 : height), width));
}

}  // namespace cqsym
