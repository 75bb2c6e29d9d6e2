#include "cqsym/rectlemma.hpp"

#include <algorithm>
#include <utility>

namespace cqsym {

namespace {

void check_subset(int ell, std::span<const int> subset) {
  if (ell < 1) throw std::invalid_argument("ell must be at least 1");
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 1 || subset[i] > ell) throw std::invalid_argument("subset element outside [ell]");
    if (i > 0 && subset[i] <= subset[i - 1]) throw std::invalid_argument("subset must be strictly increasing");
  }
}

bool contains(std::span<const int> subset, int x) {
  return std::binary_search(subset.begin(), subset.end(), x);
}

using Edge = std::pair<int, int>;

bool nested_in(const Edge& inner, const Edge& outer) {
  return outer.first <= inner.first && inner.second <= outer.second;
}

QPoly c_recursive(std::vector<Edge> edges, int top) {
  std::erase(edges, Edge{0, top});
  if (edges.empty()) return QPoly{1};
  std::vector<Edge> maximal;
  for (const auto& e : edges) {
    bool covered = std::any_of(edges.begin(), edges.end(),
                               [&](const Edge& f) { return f != e && nested_in(e, f); });
    if (!covered) maximal.push_back(e);
  }
  std::sort(maximal.begin(), maximal.end());
  std::vector<long> sizes;
  QPoly product{1};
  for (const auto& [p, a] : maximal) {
    std::vector<Edge> block;
    for (const auto& e : edges)
      if (nested_in(e, {p, a})) block.emplace_back(e.first - p, e.second - p);
    sizes.push_back(static_cast<long>(block.size()));
    product *= c_recursive(std::move(block), a - p);
  }
  return qmultinomial(sizes) * product;
}

}  // namespace

std::vector<Subset> subsets_colex(int ell, int r) {
  std::vector<Subset> out;
  if (r < 0 || r > ell) return out;
  Subset cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int x = next; x <= ell; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

NestGraph build_nest_graph(int ell, std::span<const int> subset) {
  check_subset(ell, subset);
  NestGraph g{ell, Subset(subset.begin(), subset.end()), {}};
  const int top = ell + 1;
  std::vector<bool> used(static_cast<std::size_t>(top), false);
  std::vector<Edge> edges;
  for (int a : subset) {
    int b = 0;
    for (int c = a - 1; c >= 1; --c)
      if (!contains(subset, c) && !used[static_cast<std::size_t>(c)]) {
        b = c;
        break;
      }
    if (b != 0) used[static_cast<std::size_t>(b)] = true;
    edges.emplace_back(b, a);
  }
  for (int c = 1; c <= ell; ++c)
    if (!contains(subset, c) && !used[static_cast<std::size_t>(c)]) edges.emplace_back(c, top);
  while (static_cast<int>(edges.size()) < ell) edges.emplace_back(0, top);

  const int parallel = static_cast<int>(std::count(edges.begin(), edges.end(), Edge{0, top}));
  int seen = 0;
  for (const auto& e : edges) {
    int len;
    if (e == Edge{0, top}) {
      len = ell - parallel + 1 + seen++;
    } else {
      len = static_cast<int>(std::count_if(edges.begin(), edges.end(),
                                           [&](const Edge& f) { return nested_in(f, e); }));
    }
    g.edges.push_back({e.first, e.second, len});
  }
  return g;
}

FProduct f_product(int ell, long m, const Partition& lambda, std::span<const int> subset) {
  const NestGraph g = build_nest_graph(ell, subset);
  const ExtendedShape hat(lambda, m);
  FProduct out{QPoly{1}, false};
  for (const auto& e : g.edges) {
    const long arg = hat[ell + 1 - e.hi] - hat[ell + 1 - e.lo] - e.length + 1;
    if (arg < 0) out.negative_factor = true;
    if (arg <= 0) out.value = QPoly{};
    if (!out.value.is_zero()) out.value *= qint(arg);
  }
  return out;
}

QPoly f_poly(int ell, long m, const Partition& lambda, std::span<const int> subset) {
  return f_product(ell, m, lambda, subset).value;
}

QPoly c_inductive(const NestGraph& g) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges) edges.emplace_back(e.lo, e.hi);
  return c_recursive(std::move(edges), g.ell + 1);
}

QPoly c_hook(const NestGraph& g) {
  QPoly den{1};
  for (const auto& e : g.edges) den *= qint(e.length);
  return exact_div(qfact(g.ell), den);
}

long d_exp(const Partition& lambda, std::span<const int> subset, int ell, long width) {
  const long r = static_cast<long>(subset.size());
  long d = r * width;
  for (long i = 1; i <= r; ++i) {
    const int a = subset[static_cast<std::size_t>(i - 1)];
    d -= ell - r + i - a;
    d -= lambda.part(ell - a + 1);
  }
  return d;
}

std::vector<CoefficientTerm> coefficient_terms(const Partition& lambda, int ell, long m,
                                               long width, int r) {
  std::vector<CoefficientTerm> out;
  for (const auto& subset : subsets_colex(ell, r)) {
    QPoly f = f_poly(ell, m, lambda, subset);
    if (f.is_zero()) continue;
    const long d = d_exp(lambda, subset, ell, width);
    if (d < 0)
      throw NegativeExponent("negative exponent for lambda=" + lambda.to_string() + ", ell=" +
                             std::to_string(ell) + ", width=" + std::to_string(width));
    QPoly c = c_hook(build_nest_graph(ell, subset));
    QPoly value = scale_power(c * f, static_cast<std::size_t>(d));
    out.push_back({subset, d, std::move(c), std::move(f), std::move(value)});
  }
  return out;
}

bool rect_admissible(const Partition& lambda, int ell, int n, int s) {
  return ell >= 1 && ell <= s && ell <= n - s && fits_rectangle(lambda, ell, n - s);
}

namespace {

void require_rect(const Partition& lambda, int ell, int n, int s) {
  if (!rect_admissible(lambda, ell, n, s))
    throw std::invalid_argument("need 1 <= ell <= min(s, n-s) and lambda inside ell x (n-s); got lambda=" +
                                lambda.to_string() + ", ell=" + std::to_string(ell) + ", n=" +
                                std::to_string(n) + ", s=" + std::to_string(s));
}

std::string rect_label(const Partition& lambda, int ell, int n, int s) {
  return "lambda=" + lambda.to_string() + " ell=" + std::to_string(ell) + " n=" + std::to_string(n) +
         " s=" + std::to_string(s);
}

QPoly sum_values(const std::vector<CoefficientTerm>& terms) {
  QPoly total;
  for (const auto& t : terms) total += t.value;
  return total;
}

}  // namespace

std::vector<CoefficientTerm> big_f_terms(const Partition& lambda, int ell, int n, int s, int r) {
  require_rect(lambda, ell, n, s);
  return coefficient_terms(lambda, ell, n - s, n - s, r);
}

QPoly big_f(const Partition& lambda, int ell, int n, int s, int r) {
  return sum_values(big_f_terms(lambda, ell, n, s, r));
}

HalfInt big_f_center(const Partition& lambda, int ell, int n, int s, int r) {
  return HalfInt{static_cast<long>(n - s) * (ell + r) - static_cast<long>(ell) * (ell + 1) / 2 -
                 lambda.size()};
}

CheckReport rect_decompose_check(const Partition& lambda, int ell, int n, int s, OracleCache& oracle) {
  require_rect(lambda, ell, n, s);
  CheckReport report;
  report.label = rect_label(lambda, ell, n, s);
  const EExpansion lhs = oracle.get(lambda, n).scaled(qint_range(n - s, n - s - ell + 1));
  EExpansion rhs(n);
  for (int r = 0; r <= ell; ++r) {
    const QPoly f = big_f(lambda, ell, n, s, r);
    if (!is_nonnegative(f) || !is_unimodal(f))
      report.notes.push_back("F_" + std::to_string(r) + " = " + f.to_pretty() + " is not nonnegative unimodal");
    if (!f.is_zero()) rhs += oracle.get(rectangle(r, n - s), n).scaled(f);
  }
  report.mismatch = first_difference(lhs, rhs);
  report.pass = !report.mismatch;
  return report;
}

CheckReport center_check(const Partition& lambda, int ell, int n, int s) {
  require_rect(lambda, ell, n, s);
  CheckReport report;
  report.label = rect_label(lambda, ell, n, s);
  for (int r = 0; r <= ell; ++r) {
    const HalfInt want = big_f_center(lambda, ell, n, s, r);
    for (const auto& t : big_f_terms(lambda, ell, n, s, r)) {
      auto c = palindrome_center(t.value);
      if (!c || !c->admits(want)) {
        report.pass = false;
        std::string subset;
        for (int a : t.subset) subset += (subset.empty() ? "" : ",") + std::to_string(a);
        report.notes.push_back("r=" + std::to_string(r) + " I={" + subset + "}: " + t.value.to_pretty() +
                               " is not palindromic about " + want.to_string());
      }
    }
  }
  return report;
}

bool abelian_admissible(const Partition& lambda, int ell, int n) {
  return ell >= 1 && 2 * ell <= n && fits_rectangle(lambda, ell, n - ell);
}

QPoly g_r(const Partition& lambda, int ell, int n, int r) {
  if (!abelian_admissible(lambda, ell, n))
    throw std::invalid_argument("need lambda inside ell x (n-ell) with ell <= n/2");
  return sum_values(coefficient_terms(lambda, ell, n - r - 1, n - r, r));
}

EExpansion e_expansion_abelian(const Partition& lambda, int ell, int n) {
  EExpansion out(n);
  for (int r = 0; r <= ell; ++r) {
    const QPoly g = g_r(lambda, ell, n, r);
    if (g.is_zero()) continue;
    QPoly prefactor = n - r - ell >= 1 ? qint(n - 2 * r) * qfact(n - r - ell - 1) : QPoly{1};
    out.add_term(two_row(n, r), prefactor * qfact(r) * g);
  }
  return out;
}

MoveIdentity column_move_identity(int ell, std::span<const int> subset, int u) {
  const int v = u + 1;
  if (u < 1 || v > ell || contains(subset, u) || !contains(subset, v))
    throw std::invalid_argument("need u not in I and u+1 in I");
  const NestGraph g = build_nest_graph(ell, subset);

  const NestEdge* delta = nullptr;
  for (const auto& e : g.edges)
    if (e.lo < u && v < e.hi && (!delta || e.length < delta->length)) delta = &e;
  if (!delta) throw std::logic_error("no edge encloses (u, u+1)");

  std::vector<const NestEdge*> inside;
  for (const auto& e : g.edges)
    if (delta->lo <= e.lo && e.hi <= delta->hi && e.length < delta->length) inside.push_back(&e);
  std::vector<const NestEdge*> children;
  for (const auto* e : inside) {
    bool covered = std::any_of(inside.begin(), inside.end(), [&](const NestEdge* f) {
      return f != e && f->lo <= e->lo && e->hi <= f->hi && f->length > e->length;
    });
    if (!covered) children.push_back(e);
  }
  std::sort(children.begin(), children.end(),
            [](const NestEdge* a, const NestEdge* b) { return std::pair(a->lo, a->hi) < std::pair(b->lo, b->hi); });

  auto moved = [&](int remove, int insert) {
    Subset s;
    for (int x : subset)
      if (x != remove) s.push_back(x);
    s.push_back(insert);
    std::sort(s.begin(), s.end());
    return c_hook(build_nest_graph(ell, s));
  };

  QPoly rhs;
  std::size_t shift = 1;
  for (auto it = children.rbegin(); it != children.rend(); ++it) {
    if ((*it)->hi >= u) continue;
    rhs += scale_power(moved((*it)->hi, u), shift);
    shift += static_cast<std::size_t>((*it)->length);
  }
  shift = 1;
  for (const auto* e : children) {
    if (e->lo <= v) continue;
    rhs += scale_power(moved(v, e->lo), shift);
    shift += static_cast<std::size_t>(e->length);
  }
  rhs += moved(v, u);
  return {qint(2) * c_hook(g), std::move(rhs)};
}

bool has_vanishing_pair(const Partition& lambda, int ell, std::span<const int> subset) {
  for (int j = 1; j < ell; ++j)
    if (lambda.part(ell - j) == lambda.part(ell - j + 1) && !contains(subset, j) && contains(subset, j + 1))
      return true;
  return false;
}

}  // namespace cqsym
