#pragma once

// Independent brute-force reference computations used by the tests.

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "mipkit/fp_linalg.hpp"
#include "mipkit/group.hpp"

namespace oracle {

using mipkit::Elem;
using mipkit::FiniteGroup;

/// order -> number of elements of that order.
inline std::map<std::size_t, std::size_t> order_census(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> c;
  for (Elem x = 0; x < g.order(); ++x) {
    std::size_t k = 1;
    for (Elem y = x; y != 0; y = g.mul(y, x)) ++k;
    ++c[k];
  }
  return c;
}

/// Closure of a set under products, by repeated squaring of the set.
inline std::set<Elem> closure(const FiniteGroup& g, std::set<Elem> s) {
  s.insert(0);
  while (true) {
    std::set<Elem> next = s;
    for (Elem a : s)
      for (Elem b : s) next.insert(g.mul(a, b));
    if (next == s) return s;
    s = std::move(next);
  }
}

/// Every subgroup, found by joining cyclic subgroups until nothing new appears.
inline std::vector<std::set<Elem>> all_subgroups(const FiniteGroup& g) {
  std::set<std::set<Elem>> found;
  std::vector<std::set<Elem>> cyclic;
  for (Elem x = 0; x < g.order(); ++x) {
    auto c = closure(g, {x});
    if (found.insert(c).second) cyclic.push_back(c);
  }
  std::vector<std::set<Elem>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::set<Elem>> next;
    for (const auto& s : frontier)
      for (const auto& c : cyclic) {
        if (std::includes(s.begin(), s.end(), c.begin(), c.end())) continue;
        std::set<Elem> u = s;
        u.insert(c.begin(), c.end());
        auto j = closure(g, u);
        if (found.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

/// Intersection of all maximal subgroups (index p in a p-group).
inline std::set<Elem> frattini_by_maximal_subgroups(const FiniteGroup& g) {
  std::set<Elem> phi;
  for (Elem x = 0; x < g.order(); ++x) phi.insert(x);
  for (const auto& s : all_subgroups(g)) {
    if (s.size() * g.p() != g.order()) continue;
    std::set<Elem> keep;
    std::set_intersection(phi.begin(), phi.end(), s.begin(), s.end(), std::inserter(keep, keep.begin()));
    phi = std::move(keep);
  }
  return phi;
}

/// Coefficients of prod_n (1 + x^n + ... + x^{(p-1)n})^{r_n}.
inline std::vector<std::size_t> poincare_coefficients(unsigned p, const std::vector<std::size_t>& ranks) {
  std::vector<std::size_t> poly{1};
  for (std::size_t n = 1; n <= ranks.size(); ++n)
    for (std::size_t r = 0; r < ranks[n - 1]; ++r) {
      std::vector<std::size_t> next(poly.size() + (p - 1) * n, 0);
      for (std::size_t i = 0; i < poly.size(); ++i)
        for (std::size_t k = 0; k < p; ++k) next[i + k * n] += poly[i];
      poly = std::move(next);
    }
  return poly;
}

/// Abelian type from the order census, by trying every candidate type of |G|.
inline std::vector<std::size_t> abelian_type_by_census(const FiniteGroup& g) {
  const unsigned p = g.p();
  const unsigned n = *mipkit::log_p(g.order(), p);
  auto target = order_census(g);
  // partitions of n into nonincreasing parts
  std::vector<std::vector<unsigned>> parts;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned left, unsigned maxpart) -> void {
    if (left == 0) {
      parts.push_back(cur);
      return;
    }
    for (unsigned k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  for (const auto& part : parts) {
    // census of the product of cyclic groups of orders p^part[i]
    std::map<std::size_t, std::size_t> c;
    std::vector<std::size_t> mod;
    for (unsigned e : part) mod.push_back(mipkit::ipow(p, e));
    std::vector<std::size_t> a(part.size(), 0);
    while (true) {
      std::size_t ord = 1;
      for (std::size_t i = 0; i < a.size(); ++i) {
        std::size_t o = mod[i];
        std::size_t x = a[i];
        while (x != 0 && x % p == 0 && o > 1) {
          x /= p;
          o /= p;
        }
        if (a[i] == 0) o = 1;
        ord = std::max(ord, o);
      }
      ++c[ord];
      std::size_t i = 0;
      while (i < a.size() && ++a[i] == mod[i]) a[i++] = 0;
      if (i == a.size()) break;
    }
    if (c == target) return mod;
  }
  return {};
}

inline mipkit::FpVector random_vector(std::mt19937& rng, unsigned p, std::size_t n) {
  std::uniform_int_distribution<unsigned> d(0, p - 1);
  mipkit::FpVector v(p, n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, d(rng));
  return v;
}

inline std::vector<mipkit::FpVector> random_rows(std::mt19937& rng, unsigned p, std::size_t rows, std::size_t n) {
  std::vector<mipkit::FpVector> out;
  for (std::size_t i = 0; i < rows; ++i) out.push_back(random_vector(rng, p, n));
  return out;
}

}  // namespace oracle
