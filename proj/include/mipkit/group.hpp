#pragma once

// Finite p-groups as explicit multiplication tables.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mipkit/error.hpp"

namespace mipkit {

using Elem = std::uint32_t;

inline constexpr std::size_t kMaxOrderP2 = 128;
inline constexpr std::size_t kMaxOrderOdd = 243;

inline std::size_t order_cap(unsigned p) { return p == 2 ? kMaxOrderP2 : kMaxOrderOdd; }

/// Returns e with p^e == n, or nullopt when n is not a power of p.
inline std::optional<unsigned> log_p(std::size_t n, unsigned p) {
  if (n == 0) return std::nullopt;
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return e;
}

inline std::size_t ipow(std::size_t base, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

/// A finite p-group given by its multiplication table. Element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup(unsigned p, std::vector<Elem> table, std::string provenance = {})
      : p_(p), n_(0), mul_(std::move(table)), provenance_(std::move(provenance)) {
    std::size_t n = 0;
    while (n * n < mul_.size()) ++n;
    if (n * n != mul_.size() || n == 0) throw ParseError("multiplication table is not square");
    n_ = n;
    validate();
  }

  static FiniteGroup trivial(unsigned p) { return FiniteGroup(p, {0}, "trivial"); }

  unsigned p() const { return p_; }
  std::size_t order() const { return n_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem comm(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elem conj(Elem a, Elem by) const { return mul(mul(inv(by), a), by); }
  const std::string& provenance() const { return provenance_; }
  const std::vector<Elem>& table() const { return mul_; }

  Elem pow(Elem a, std::size_t k) const {
    Elem r = 0, b = a;
    while (k) {
      if (k & 1) r = mul(r, b);
      b = mul(b, b);
      k >>= 1;
    }
    return r;
  }

  /// a^(p^t).
  Elem ppow(Elem a, unsigned t) const { return pow(a, ipow(p_, t)); }

  std::size_t element_order(Elem a) const {
    std::size_t k = 1;
    Elem x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  std::size_t exponent() const {
    std::size_t e = 1;
    for (Elem g = 0; g < n_; ++g) e = std::max(e, element_order(g));
    return e;
  }

  /// log_p of the exponent.
  unsigned exponent_log() const { return *log_p(exponent(), p_); }

  bool is_abelian() const {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Exhaustive associativity check.
  bool is_associative() const {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b) {
        Elem ab = mul(a, b);
        for (Elem c = 0; c < n_; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    return true;
  }

  bool operator==(const FiniteGroup& o) const { return p_ == o.p_ && mul_ == o.mul_; }

 private:
  void validate() {
    require_p();
    for (Elem x : mul_)
      if (x >= n_) throw ParseError("multiplication table entry out of range");
    for (Elem a = 0; a < n_; ++a)
      if (mul(0, a) != a || mul(a, 0) != a) throw ParseError("element 0 is not the identity");
    // Latin square rows give unique inverses.
    inv_.assign(n_, 0);
    for (Elem a = 0; a < n_; ++a) {
      std::vector<bool> seen(n_, false);
      bool found = false;
      for (Elem b = 0; b < n_; ++b) {
        Elem c = mul(a, b);
        if (seen[c]) throw ParseError("multiplication table row is not a permutation");
        seen[c] = true;
        if (c == 0) {
          inv_[a] = b;
          found = true;
        }
      }
      if (!found) throw ParseError("element without inverse");
    }
    for (Elem a = 0; a < n_; ++a)
      if (mul(inv_[a], a) != 0) throw ParseError("left and right inverses differ");
  }

  void require_p() const {
    if (!(p_ == 2 || p_ == 3 || p_ == 5 || p_ == 7)) throw ParseError("unsupported prime");
    if (!log_p(n_, p_)) throw ParseError("group order is not a power of p");
  }

  unsigned p_;
  std::size_t n_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::string provenance_;
};

/// A subgroup of some parent FiniteGroup: sorted element list plus membership mask.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::size_t parent_order, std::vector<Elem> elements, std::vector<Elem> generators = {})
      : elements_(std::move(elements)), generators_(std::move(generators)), member_(parent_order, false) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (Elem e : elements_) member_.at(e) = true;
  }

  std::size_t order() const { return elements_.size(); }
  std::size_t parent_order() const { return member_.size(); }
  const std::vector<Elem>& elements() const { return elements_; }
  const std::vector<Elem>& generators() const { return generators_; }
  bool contains(Elem g) const { return member_[g]; }
  bool is_trivial() const { return elements_.size() == 1; }
  bool contains(const Subgroup& o) const {
    return std::all_of(o.elements_.begin(), o.elements_.end(), [&](Elem e) { return member_[e]; });
  }
  const std::vector<bool>& mask() const { return member_; }

  bool operator==(const Subgroup& o) const { return elements_ == o.elements_ && member_.size() == o.member_.size(); }
  bool operator<(const Subgroup& o) const { return elements_ < o.elements_; }

 private:
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
  std::vector<bool> member_;
};

/// Nonincreasing list of cyclic factor orders.
struct AbelianType {
  std::vector<std::size_t> factors;

  std::size_t order() const {
    return std::accumulate(factors.begin(), factors.end(), std::size_t{1}, std::multiplies<>());
  }
  bool operator==(const AbelianType&) const = default;
  auto operator<=>(const AbelianType&) const = default;
};

/// A homomorphism given by its image table.
struct GroupHom {
  std::shared_ptr<const FiniteGroup> domain;
  std::shared_ptr<const FiniteGroup> codomain;
  std::vector<Elem> images;

  Elem operator()(Elem g) const { return images.at(g); }

  bool is_homomorphism() const {
    for (Elem a = 0; a < domain->order(); ++a)
      for (Elem b = 0; b < domain->order(); ++b)
        if (images[domain->mul(a, b)] != codomain->mul(images[a], images[b])) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Subgroup generation and lattice operations

/// Closure of gens under multiplication (finite group, so inverses come for free).
inline Subgroup generate(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> elems{0};
  seen[0] = true;
  std::vector<Elem> useful;
  for (Elem x : gens)
    if (x != 0) useful.push_back(x);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Elem s : useful) {
      Elem y = g.mul(elems[i], s);
      if (!seen[y]) {
        seen[y] = true;
        elems.push_back(y);
      }
    }
  }
  return Subgroup(g.order(), std::move(elems), std::move(useful));
}

inline Subgroup whole(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  std::vector<Elem> gens;
  // a small generating set: greedily add elements not yet generated
  Subgroup cur = generate(g, {});
  for (Elem x = 1; x < g.order() && cur.order() < g.order(); ++x)
    if (!cur.contains(x)) {
      gens.push_back(x);
      cur = generate(g, gens);
    }
  return Subgroup(g.order(), std::move(all), std::move(gens));
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g.order(), {0}); }

/// Generators of s, falling back to all elements when none were recorded.
inline std::vector<Elem> generating_set(const Subgroup& s) {
  if (!s.generators().empty() || s.is_trivial()) return s.generators();
  return s.elements();
}

/// Subgroup generated by the union of the inputs.
inline Subgroup join(const FiniteGroup& g, const std::vector<Subgroup>& parts) {
  std::vector<Elem> gens;
  for (const auto& s : parts) {
    auto gs = generating_set(s);
    gens.insert(gens.end(), gs.begin(), gs.end());
  }
  return generate(g, gens);
}

inline Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) { return join(g, {a, b}); }

/// Same element set, with a greedily chosen small generating set recorded.
inline Subgroup with_small_generators(const FiniteGroup& g, const Subgroup& s) {
  std::vector<Elem> gens;
  Subgroup cur = trivial_subgroup(g);
  for (Elem x : s.elements())
    if (!cur.contains(x)) {
      gens.push_back(x);
      cur = generate(g, gens);
    }
  return Subgroup(g.order(), s.elements(), std::move(gens));
}

inline Subgroup meet(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> e;
  for (Elem x : a.elements())
    if (b.contains(x)) e.push_back(x);
  return with_small_generators(g, Subgroup(g.order(), std::move(e)));
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& n) {
  auto gens = generating_set(n);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem m : gens)
      if (!n.contains(g.conj(m, x))) return false;
  return true;
}

inline void require_normal(const FiniteGroup& g, const Subgroup& n, const char* what) {
  if (n.parent_order() != g.order()) throw DimensionMismatch(std::string(what) + ": subgroup of a different group");
  if (!is_normal(g, n)) throw NotContained(std::string(what) + ": subgroup is not normal");
}

inline Subgroup normal_closure(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::vector<Elem> conj_gens;
  for (Elem m : gens)
    for (Elem x = 0; x < g.order(); ++x) conj_gens.push_back(g.conj(m, x));
  std::sort(conj_gens.begin(), conj_gens.end());
  conj_gens.erase(std::unique(conj_gens.begin(), conj_gens.end()), conj_gens.end());
  return generate(g, conj_gens);
}

// ---------------------------------------------------------------------------
// Standard subgroups and series

inline Subgroup center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  Subgroup s(g.order(), z);
  return with_small_generators(g, s);
}

inline Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  auto gens = generating_set(s);
  std::vector<Elem> c;
  for (Elem a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Elem b : gens)
      if (g.mul(a, b) != g.mul(b, a)) {
        ok = false;
        break;
      }
    if (ok) c.push_back(a);
  }
  Subgroup raw(g.order(), c);
  return with_small_generators(g, raw);
}

/// [A, B] = <[a, b] : a ∈ A, b ∈ B>.
inline Subgroup commutator(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> cs;
  std::vector<bool> seen(g.order(), false);
  for (Elem x : a.elements())
    for (Elem y : b.elements()) {
      Elem c = g.comm(x, y);
      if (!seen[c]) {
        seen[c] = true;
        cs.push_back(c);
      }
    }
  Subgroup raw = generate(g, cs);
  return with_small_generators(g, raw);
}

inline Subgroup commutator_subgroup(const FiniteGroup& g) {
  Subgroup w = whole(g);
  return commutator(g, w, w);
}

/// γ_1 = G ⊇ γ_2 ⊇ ... ending with the first repeated term.
inline std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> s{whole(g)};
  Subgroup all = s.front();
  while (true) {
    Subgroup next = commutator(g, s.back(), all);
    if (next == s.back()) break;
    s.push_back(std::move(next));
  }
  return s;
}

/// ℧_t(L) = <x^(p^t) : x ∈ L>.
inline Subgroup agemo(const FiniteGroup& g, const Subgroup& l, unsigned t) {
  std::vector<Elem> pw;
  std::vector<bool> seen(g.order(), false);
  for (Elem x : l.elements()) {
    Elem y = g.ppow(x, t);
    if (!seen[y]) {
      seen[y] = true;
      pw.push_back(y);
    }
  }
  Subgroup raw = generate(g, pw);
  return with_small_generators(g, raw);
}
inline Subgroup agemo(const FiniteGroup& g, unsigned t) { return agemo(g, whole(g), t); }

/// Ω_t(L) = <x ∈ L : x^(p^t) = 1>.
inline Subgroup omega(const FiniteGroup& g, const Subgroup& l, unsigned t) {
  std::vector<Elem> xs;
  for (Elem x : l.elements())
    if (g.ppow(x, t) == 0) xs.push_back(x);
  Subgroup raw = generate(g, xs);
  return with_small_generators(g, raw);
}
inline Subgroup omega(const FiniteGroup& g, unsigned t) { return omega(g, whole(g), t); }

/// Ω_t(G:N) = <x ∈ G : x^(p^t) ∈ N>, the subgroup with Ω_t(G:N)/N = Ω_t(G/N).
inline Subgroup omega_relative(const FiniteGroup& g, const Subgroup& n, unsigned t) {
  require_normal(g, n, "omega_relative");
  std::vector<Elem> xs;
  for (Elem x = 0; x < g.order(); ++x)
    if (n.contains(g.ppow(x, t))) xs.push_back(x);
  Subgroup raw = generate(g, xs);
  return with_small_generators(g, raw);
}

/// Φ(G) = ℧_1(G) G'.
inline Subgroup frattini(const FiniteGroup& g) { return join(g, agemo(g, 1), commutator_subgroup(g)); }

/// D_1 = G ⊇ D_2 ⊇ ... ⊇ D_c = 1 by D_n = ∏_{i p^j >= n} ℧_j(γ_i(G)).
inline std::vector<Subgroup> jennings_series_product_formula(const FiniteGroup& g) {
  const unsigned p = g.p();
  auto gamma = lower_central_series(g);
  const unsigned max_j = g.exponent_log();
  std::vector<std::vector<Subgroup>> mho(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i)
    for (unsigned j = 0; j <= max_j; ++j) mho[i].push_back(agemo(g, gamma[i], j));

  std::vector<Subgroup> series;
  for (std::size_t n = 1;; ++n) {
    std::vector<Subgroup> parts;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      // smallest j with (i+1) p^j >= n; larger j give smaller subgroups
      unsigned j = 0;
      while ((i + 1) * ipow(p, j) < n) ++j;
      if (j <= max_j) parts.push_back(mho[i][j]);
    }
    Subgroup d = parts.empty() ? trivial_subgroup(g) : join(g, parts);
    series.push_back(d);
    if (d.is_trivial()) break;
  }
  return series;
}

/// Deterministic greedy basis of A modulo B ⊴ A: repeatedly the smallest
/// element of `pool` outside <B, chosen>.
inline std::vector<Elem> greedy_basis(const FiniteGroup& g, const Subgroup& a, const Subgroup& b,
                                      const Subgroup& pool, std::vector<Elem> seeds = {}) {
  std::vector<Elem> chosen = seeds;
  auto current = [&] {
    std::vector<Elem> gens = generating_set(b);
    gens.insert(gens.end(), chosen.begin(), chosen.end());
    return generate(g, gens);
  };
  Subgroup cur = current();
  for (Elem x : pool.elements()) {
    if (cur.order() == a.order()) break;
    if (!cur.contains(x)) {
      chosen.push_back(x);
      cur = current();
    }
  }
  return chosen;
}

/// Minimal generating set: lift of a basis of G/Φ(G), smallest indices first.
inline std::vector<Elem> burnside_basis(const FiniteGroup& g) {
  Subgroup w = whole(g);
  return greedy_basis(g, w, frattini(g), w);
}

/// Extends seeds (independent modulo Φ(G)) to a Burnside basis of G.
inline std::vector<Elem> extend_burnside_basis(const FiniteGroup& g, const std::vector<Elem>& seeds) {
  Subgroup w = whole(g);
  Subgroup phi = frattini(g);
  std::vector<Elem> seed_gens = generating_set(phi);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    Subgroup before = generate(g, seed_gens);
    if (before.contains(seeds[i])) throw NotContained("seeds are not independent modulo the Frattini subgroup");
    seed_gens.push_back(seeds[i]);
  }
  return greedy_basis(g, w, phi, w, seeds);
}

inline std::size_t min_generators(const FiniteGroup& g) { return burnside_basis(g).size(); }

inline std::size_t element_order(const FiniteGroup& g, Elem x) { return g.element_order(x); }

// ---------------------------------------------------------------------------
// Constructions

/// Standalone copy of a subgroup. embedding[i] is the parent index of element i.
struct SubgroupGroup {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<Elem> embedding;

  Elem to_parent(Elem x) const { return embedding[x]; }
  Subgroup to_parent(const FiniteGroup& parent, const Subgroup& s) const {
    std::vector<Elem> e, gens;
    for (Elem x : s.elements()) e.push_back(embedding[x]);
    for (Elem x : s.generators()) gens.push_back(embedding[x]);
    return Subgroup(parent.order(), std::move(e), std::move(gens));
  }
  Subgroup from_parent(const Subgroup& s) const {
    std::vector<Elem> e, gens;
    for (std::size_t i = 0; i < embedding.size(); ++i)
      if (s.contains(embedding[i])) e.push_back(static_cast<Elem>(i));
    return Subgroup(embedding.size(), std::move(e));
  }
  std::optional<Elem> local(Elem parent_elem) const {
    auto it = std::lower_bound(embedding.begin(), embedding.end(), parent_elem);
    if (it == embedding.end() || *it != parent_elem) return std::nullopt;
    return static_cast<Elem>(it - embedding.begin());
  }
};

inline SubgroupGroup as_group(const FiniteGroup& g, const Subgroup& s) {
  const auto& e = s.elements();
  const std::size_t m = e.size();
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) local[e[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Elem prod = g.mul(e[i], e[j]);
      if (!s.contains(prod)) throw NotContained("as_group: element set is not closed");
      table[i * m + j] = local[prod];
    }
  return {std::make_shared<const FiniteGroup>(g.p(), std::move(table), g.provenance() + " (subgroup)"), e};
}

struct DirectProduct {
  std::shared_ptr<const FiniteGroup> group;
  /// embed_a[x] = (x, 1), embed_b[y] = (1, y).
  std::vector<Elem> embed_a, embed_b;
};

/// Index of (a, b) is a * |B| + b.
inline DirectProduct direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.p() != b.p()) throw DimensionMismatch("direct_product: groups over different primes");
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > order_cap(a.p())) throw CapExceeded("direct_product: order " + std::to_string(n) + " exceeds cap");
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Elem ia = a.mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb));
      Elem ib = b.mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
      table[x * n + y] = static_cast<Elem>(ia * nb + ib);
    }
  DirectProduct dp{std::make_shared<const FiniteGroup>(a.p(), std::move(table),
                                                       "(" + a.provenance() + ") x (" + b.provenance() + ")"),
                   {},
                   {}};
  for (Elem x = 0; x < na; ++x) dp.embed_a.push_back(static_cast<Elem>(x * nb));
  for (Elem y = 0; y < nb; ++y) dp.embed_b.push_back(y);
  return dp;
}

struct Quotient {
  std::shared_ptr<const FiniteGroup> group;
  GroupHom projection;
  /// Smallest element of each coset, indexed by quotient element.
  std::vector<Elem> representatives;
};

/// G/N; quotient elements are numbered by their smallest coset element.
inline Quotient quotient(const std::shared_ptr<const FiniteGroup>& gp, const Subgroup& n) {
  const FiniteGroup& g = *gp;
  require_normal(g, n, "quotient");
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> coset(g.order(), unset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset[x] != unset) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : n.elements()) coset[g.mul(x, m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = coset[g.mul(reps[i], reps[j])];
  auto qg = std::make_shared<const FiniteGroup>(g.p(), std::move(table), g.provenance() + " / N");
  return {qg, GroupHom{gp, qg, coset}, reps};
}

/// Image of a subgroup under a homomorphism.
inline Subgroup image(const GroupHom& h, const Subgroup& s) {
  std::vector<Elem> e;
  for (Elem x : s.elements()) e.push_back(h(x));
  return Subgroup(h.codomain->order(), std::move(e));
}

/// Full preimage of a subgroup of the codomain.
inline Subgroup preimage(const GroupHom& h, const Subgroup& s) {
  std::vector<Elem> e;
  for (Elem x = 0; x < h.domain->order(); ++x)
    if (s.contains(h(x))) e.push_back(x);
  Subgroup raw(h.domain->order(), e);
  return with_small_generators(*h.domain, raw);
}

// ---------------------------------------------------------------------------
// Abelian groups

/// Invariant factors from the ranks |Ω_i / Ω_{i-1}|.
inline AbelianType abelian_type(const FiniteGroup& g, const Subgroup& a) {
  for (Elem x : a.elements())
    for (Elem y : a.elements())
      if (g.mul(x, y) != g.mul(y, x)) throw NotContained("abelian_type: subgroup is not abelian");
  const unsigned p = g.p();
  std::vector<std::size_t> ranks;  // ranks[i-1] = number of factors of order >= p^i
  std::size_t prev = 1;
  for (unsigned i = 1;; ++i) {
    std::size_t cur = omega(g, a, i).order();
    if (cur == prev) break;
    ranks.push_back(*log_p(cur / prev, p));
    prev = cur;
  }
  AbelianType t;
  for (std::size_t i = ranks.size(); i-- > 0;) {
    std::size_t next = i + 1 < ranks.size() ? ranks[i + 1] : 0;
    for (std::size_t k = 0; k < ranks[i] - next; ++k) t.factors.push_back(ipow(p, static_cast<unsigned>(i + 1)));
  }
  return t;
}

inline AbelianType abelian_type(const FiniteGroup& g) { return abelian_type(g, whole(g)); }

/// Abelian type of the section A/B (B ⊴ A, A/B abelian).
inline AbelianType section_type(const std::shared_ptr<const FiniteGroup>& g, const Subgroup& a, const Subgroup& b) {
  if (!a.contains(b)) throw NotContained("section_type: B is not contained in A");
  SubgroupGroup ag = as_group(*g, a);
  Quotient q = quotient(ag.group, ag.from_parent(b));
  return abelian_type(*q.group);
}

// ---------------------------------------------------------------------------
// Normal subgroup enumeration (test support)

/// Normal closures of cyclic subgroups, closed under pairwise joins.
inline std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> found;
  auto add = [&](Subgroup s) {
    for (const auto& f : found)
      if (f == s) return false;
    found.push_back(std::move(s));
    return true;
  };
  for (Elem x = 0; x < g.order(); ++x) add(normal_closure(g, {x}));
  std::vector<Subgroup> generators = found;
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < generators.size(); ++j) {
      if (found[i].contains(generators[j])) continue;
      add(join(g, found[i], generators[j]));
    }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return found;
}

}  // namespace mipkit
