#pragma once

// The group algebra F_p G with the group elements as basis. Elements are
// coefficient vectors indexed by group element; ideals are Subspaces.

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "mipkit/error.hpp"
#include "mipkit/fp_linalg.hpp"
#include "mipkit/group.hpp"

namespace mipkit {

class GroupAlgebra {
 public:
  explicit GroupAlgebra(std::shared_ptr<const FiniteGroup> g) : g_(std::move(g)) {}

  const FiniteGroup& group() const { return *g_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return g_; }
  unsigned p() const { return g_->p(); }
  std::size_t dim() const { return g_->order(); }

  FpVector zero() const { return FpVector(p(), dim()); }
  FpVector basis(Elem g) const { return FpVector::unit(p(), dim(), g); }
  FpVector one() const { return basis(0); }

  /// g - 1.
  FpVector minus_one(Elem g) const {
    FpVector v(p(), dim());
    if (g == 0) return v;
    v.set(g, 1);
    v.set(0, p() - 1);
    return v;
  }

  FpVector multiply(const FpVector& x, const FpVector& y) const {
    check(x);
    check(y);
    std::vector<unsigned> acc(dim(), 0);
    for (Elem a = 0; a < dim(); ++a) {
      if (!x[a]) continue;
      for (Elem b = 0; b < dim(); ++b)
        if (y[b]) acc[g_->mul(a, b)] += x[a] * y[b];
    }
    FpVector out(p(), dim());
    for (Elem c = 0; c < dim(); ++c) out.set(c, acc[c] % p());
    return out;
  }

  /// x * g.
  FpVector right_mul(const FpVector& x, Elem g) const {
    FpVector out(p(), dim());
    for (Elem a = 0; a < dim(); ++a)
      if (x[a]) out.set(g_->mul(a, g), x[a]);
    return out;
  }

  /// g * x.
  FpVector left_mul(Elem g, const FpVector& x) const {
    FpVector out(p(), dim());
    for (Elem a = 0; a < dim(); ++a)
      if (x[a]) out.set(g_->mul(g, a), x[a]);
    return out;
  }

  FpVector power(const FpVector& x, std::size_t k) const {
    FpVector r = one(), b = x;
    while (k) {
      if (k & 1) r = multiply(r, b);
      k >>= 1;
      if (k) b = multiply(b, b);
    }
    return r;
  }

  residue augmentation(const FpVector& x) const {
    check(x);
    return x.sum();
  }

  /// Matrix of x |-> x * a.
  FpMatrix right_multiplication_matrix(const FpVector& a) const {
    FpMatrix m(p(), dim(), dim());
    for (Elem g = 0; g < dim(); ++g) m.row(g) = multiply(basis(g), a);
    return m;
  }

  /// I(G)^0 = kG, I(G)^1, ..., ending with the first zero power.
  const std::vector<Subspace>& augmentation_powers() const {
    std::call_once(powers_once_, [this] { compute_powers(); });
    return powers_;
  }

  /// I(G)^n for any n >= 0.
  const Subspace& augmentation_power(std::size_t n) const {
    const auto& pw = augmentation_powers();
    return n < pw.size() ? pw[n] : pw.back();
  }

  void check(const FpVector& x) const {
    if (x.p() != p() || x.size() != dim()) throw DimensionMismatch("element does not belong to this algebra");
  }

 private:
  void compute_powers() const {
    std::vector<Elem> gens = burnside_basis(*g_);
    std::vector<FpVector> aug;
    for (Elem g = 1; g < dim(); ++g) aug.push_back(minus_one(g));
    powers_.push_back(Subspace::full(p(), dim()));
    powers_.push_back(Subspace::span(p(), dim(), aug));
    // I^n = sum over generators x of I^(n-1) (x - 1)
    while (!powers_.back().is_zero()) {
      const Subspace& prev = powers_.back();
      EchelonBuilder b(p(), dim());
      for (const auto& v : prev.basis())
        for (Elem x : gens) {
          FpVector w = right_mul(v, x);
          w -= v;
          b.insert(std::move(w));
        }
      powers_.push_back(Subspace::from_builder(b));
    }
  }

  std::shared_ptr<const FiniteGroup> g_;
  mutable std::once_flag powers_once_;
  mutable std::vector<Subspace> powers_;
};

// ---------------------------------------------------------------------------
// Ideals

inline const Subspace& augmentation_ideal(const GroupAlgebra& a) { return a.augmentation_power(1); }

/// I(N) G = span{(n - 1) g}, the kernel of kG -> k(G/N).
inline Subspace relative_augmentation_ideal(const GroupAlgebra& a, const Subgroup& n) {
  require_normal(a.group(), n, "relative_augmentation_ideal");
  EchelonBuilder b(a.p(), a.dim());
  for (Elem m : generating_set(n)) {
    FpVector v = a.minus_one(m);
    for (Elem g = 0; g < a.dim() && !b.full(); ++g) b.insert(a.right_mul(v, g));
  }
  return Subspace::from_builder(b);
}

/// The augmentation ideal of kN as a subspace of kG: span{n - 1 : n ∈ N}.
inline Subspace subgroup_augmentation(const GroupAlgebra& a, const Subgroup& n) {
  std::vector<FpVector> v;
  for (Elem m : n.elements())
    if (m) v.push_back(a.minus_one(m));
  return Subspace::span(a.p(), a.dim(), v);
}

/// I(M) kN = span{(m - 1) x : m ∈ M, x ∈ N} for M ⊆ N.
inline Subspace relative_ideal_in_subgroup(const GroupAlgebra& a, const Subgroup& m, const Subgroup& n) {
  if (!n.contains(m)) throw NotContained("relative_ideal_in_subgroup: M is not contained in N");
  EchelonBuilder b(a.p(), a.dim());
  for (Elem x : generating_set(m)) {
    FpVector v = a.minus_one(x);
    for (Elem y : n.elements()) b.insert(a.right_mul(v, y));
  }
  return Subspace::from_builder(b);
}

/// span{x y : x ∈ I, y ∈ J} on the echelon bases.
inline Subspace ideal_product(const GroupAlgebra& a, const Subspace& i, const Subspace& j) {
  EchelonBuilder b(a.p(), a.dim());
  for (const auto& x : i.basis())
    for (const auto& y : j.basis()) {
      if (b.full()) break;
      b.insert(a.multiply(x, y));
    }
  return Subspace::from_builder(b);
}

/// I^n by iterated products; I^0 is the whole algebra.
inline Subspace ideal_power(const GroupAlgebra& a, const Subspace& i, std::size_t n) {
  if (i == augmentation_ideal(a)) return a.augmentation_power(n);
  Subspace r = Subspace::full(a.p(), a.dim());
  for (std::size_t k = 0; k < n; ++k) {
    r = ideal_product(a, r, i);
    if (r.is_zero()) break;
  }
  return r;
}

/// Closed under left and right multiplication by every group element.
inline bool is_two_sided_ideal(const GroupAlgebra& a, const Subspace& s) {
  const Subgroup all = whole(a.group());
  for (Elem g : all.generators())
    for (const auto& v : s.basis())
      if (!s.contains(a.right_mul(v, g)) || !s.contains(a.left_mul(g, v))) return false;
  return true;
}

/// (I(L)^n)_{n >= 0} computed inside kL ⊆ kG, ending with the zero power.
inline std::vector<Subspace> subgroup_augmentation_powers(const GroupAlgebra& a, const Subgroup& l) {
  std::vector<Subspace> out;
  std::vector<FpVector> unit;
  for (Elem x : l.elements()) unit.push_back(a.basis(x));
  out.push_back(Subspace::span(a.p(), a.dim(), unit));
  out.push_back(subgroup_augmentation(a, l));
  std::vector<Elem> gens = generating_set(l);
  while (!out.back().is_zero()) {
    EchelonBuilder b(a.p(), a.dim());
    for (const auto& v : out.back().basis())
      for (Elem x : gens) {
        FpVector w = a.right_mul(v, x);
        w -= v;
        b.insert(std::move(w));
      }
    out.push_back(Subspace::from_builder(b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Jennings series through ideal membership

/// D_n(G) = {g : g - 1 ∈ I^n}, for n = 1 until the trivial group. Checked
/// against the product formula; a mismatch throws VerificationFailure.
inline std::vector<Subgroup> jennings_by_ideal(const GroupAlgebra& a) {
  const FiniteGroup& g = a.group();
  std::vector<Subgroup> series;
  for (std::size_t n = 1;; ++n) {
    const Subspace& in = a.augmentation_power(n);
    std::vector<Elem> e;
    for (Elem x = 0; x < g.order(); ++x)
      if (in.contains(a.minus_one(x))) e.push_back(x);
    series.push_back(with_small_generators(g, Subgroup(g.order(), std::move(e))));
    if (series.back().is_trivial()) break;
  }
  verify(series == jennings_series_product_formula(g), "Jennings series by ideal membership differs from the product formula");
  return series;
}

/// dim I^n / I^(n+1) for n = 0, 1, ... while nonzero.
inline std::vector<std::size_t> jennings_layer_dims(const GroupAlgebra& a) {
  const auto& pw = a.augmentation_powers();
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n + 1 < pw.size(); ++n) out.push_back(pw[n].dim() - pw[n + 1].dim());
  return out;
}

/// (1 + I(N)G + I^n) ∩ G, checked to equal D_n(G) N.
inline Subgroup group_jennings_with_normal(const GroupAlgebra& a, const Subgroup& n, std::size_t k) {
  const FiniteGroup& g = a.group();
  Subspace ideal = sum(relative_augmentation_ideal(a, n), a.augmentation_power(k));
  std::vector<Elem> e;
  for (Elem x = 0; x < g.order(); ++x)
    if (ideal.contains(a.minus_one(x))) e.push_back(x);
  Subgroup lhs(g.order(), std::move(e));
  auto d = jennings_series_product_formula(g);
  const Subgroup& dk = k == 0 ? d.front() : d[std::min(k, d.size()) - 1];
  verify(lhs == join(g, dk, n), "group elements of 1 + I(N)G + I^n differ from D_n(G)N");
  return with_small_generators(g, lhs);
}

// ---------------------------------------------------------------------------
// Commutators and centre

/// [kG, kG] = span{gh - hg}.
inline Subspace commutator_subspace(const GroupAlgebra& a) {
  const FiniteGroup& g = a.group();
  EchelonBuilder b(a.p(), a.dim());
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = x + 1; y < g.order(); ++y) {
      Elem xy = g.mul(x, y), yx = g.mul(y, x);
      if (xy == yx) continue;
      FpVector v(a.p(), a.dim());
      v.set(xy, 1);
      v.set(yx, a.p() - 1);
      b.insert(std::move(v));
    }
  return Subspace::from_builder(b);
}

/// Z(kG): solutions of x g = g x for the generators g.
inline Subspace algebra_center(const GroupAlgebra& a) {
  const auto gens = whole(a.group()).generators();
  const std::size_t n = a.dim();
  FpMatrix m(a.p(), n, n * std::max<std::size_t>(gens.size(), 1));
  for (Elem h = 0; h < n; ++h) {
    FpVector e = a.basis(h);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      FpVector d = a.right_mul(e, gens[k]) - a.left_mul(gens[k], e);
      for (std::size_t c = 0; c < n; ++c)
        if (d[c]) m.set(h, k * n + c, d[c]);
    }
  }
  return kernel(m);
}

/// The two direct-sum splittings of the centre:
///   Z(kG) = kZ(G) ⊕ C  and  Z(kG) ∩ I(G) = I(Z(G)) ⊕ C,  C = [kG, kG] ∩ Z(kG).
struct CenterSplitting {
  std::size_t center_dim = 0, class_count = 0;
  std::size_t group_center_span_dim = 0, commutator_part_dim = 0, augmented_center_dim = 0, center_augmentation_dim = 0;
  bool full_split = false, augmented_split = false;
};

inline CenterSplitting center_splitting(const GroupAlgebra& a) {
  const FiniteGroup& g = a.group();
  CenterSplitting r;
  Subspace zk = algebra_center(a);
  Subgroup zg = center(g);
  Subspace c = intersect(commutator_subspace(a), zk);
  std::vector<FpVector> zbasis;
  for (Elem x : zg.elements()) zbasis.push_back(a.basis(x));
  Subspace kz = Subspace::span(a.p(), a.dim(), zbasis);
  Subspace iz = subgroup_augmentation(a, zg);
  Subspace zi = intersect(zk, augmentation_ideal(a));

  r.center_dim = zk.dim();
  std::vector<bool> seen(g.order(), false);
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++r.class_count;
    for (Elem y = 0; y < g.order(); ++y) seen[g.conj(x, y)] = true;
  }
  r.group_center_span_dim = kz.dim();
  r.commutator_part_dim = c.dim();
  r.augmented_center_dim = zi.dim();
  r.center_augmentation_dim = iz.dim();
  r.full_split = intersect(kz, c).is_zero() && sum(kz, c) == zk;
  r.augmented_split = intersect(iz, c).is_zero() && sum(iz, c) == zi;
  return r;
}

// ---------------------------------------------------------------------------
// Maps between group algebras

struct NaturalProjection {
  Quotient quotient;
  /// |G| x |G/N| matrix of g |-> gN.
  FpMatrix matrix;
};

/// kG -> k(G/N); its kernel is checked to be I(N)G.
inline NaturalProjection natural_projection(const GroupAlgebra& a, const Subgroup& n) {
  Quotient q = quotient(a.group_ptr(), n);
  FpMatrix m(a.p(), a.dim(), q.group->order());
  for (Elem g = 0; g < a.dim(); ++g) m.set(g, q.projection(g), 1);
  verify(kernel(m) == relative_augmentation_ideal(a, n), "kernel of the natural projection is not I(N)G");
  return {std::move(q), std::move(m)};
}

/// x |-> x^(p^t) on a commutative group algebra; over F_p this is the linear
/// extension of g |-> g^(p^t). The kernel is checked to be I(Ω_t(Q))Q and the
/// span of the image to be k℧_t(Q).
inline FpMatrix power_map_commutative(const GroupAlgebra& a, unsigned t) {
  const FiniteGroup& q = a.group();
  if (!q.is_abelian()) throw NotContained("power_map_commutative: group is not abelian");
  FpMatrix m(a.p(), a.dim(), a.dim());
  for (Elem g = 0; g < a.dim(); ++g) m.set(g, q.ppow(g, t), 1);
  verify(kernel(m) == relative_augmentation_ideal(a, omega(q, t)), "kernel of the p^t power map is not I(Omega_t)");
  std::vector<FpVector> mho;
  const Subgroup mho_t = agemo(q, t);
  for (Elem x : mho_t.elements()) mho.push_back(a.basis(x));
  verify(image(m) == Subspace::span(a.p(), a.dim(), mho), "image of the p^t power map is not k Mho_t");
  return m;
}

// ---------------------------------------------------------------------------
// Subspace identities relating ideals and subgroups

struct IdentitySides {
  Subspace lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

/// I(L)G ∩ I(N) versus I(L ∩ N) N for normal L, N.
inline IdentitySides intersection_identity(const GroupAlgebra& a, const Subgroup& n, const Subgroup& l) {
  const FiniteGroup& g = a.group();
  Subspace lhs = intersect(relative_augmentation_ideal(a, l), subgroup_augmentation(a, n));
  Subspace rhs = relative_ideal_in_subgroup(a, meet(g, l, n), n);
  return {std::move(lhs), std::move(rhs)};
}

/// I(L)G versus the preimage of I(L/N)(G/N) under kG -> k(G/N), for N ⊆ L
/// normal; `qa` is the group algebra of pi.quotient.group.
inline IdentitySides projection_preimage_identity(const GroupAlgebra& a, const NaturalProjection& pi,
                                                  const GroupAlgebra& qa, const Subgroup& n, const Subgroup& l) {
  if (!l.contains(n)) throw NotContained("projection_preimage_identity: N is not contained in L");
  Subgroup lq = with_small_generators(*pi.quotient.group, image(pi.quotient.projection, l));
  Subspace rhs = preimage(pi.matrix, relative_augmentation_ideal(qa, lq));
  return {relative_augmentation_ideal(a, l), std::move(rhs)};
}

inline IdentitySides projection_preimage_identity(const GroupAlgebra& a, const Subgroup& n, const Subgroup& l) {
  if (!l.contains(n)) throw NotContained("projection_preimage_identity: N is not contained in L");
  NaturalProjection pi = natural_projection(a, n);
  GroupAlgebra qa(pi.quotient.group);
  return projection_preimage_identity(a, pi, qa, n, l);
}

/// For G = N × L: I(G)^n versus I(N) I(G)^(n-1) ⊕ I(L)^n, with the
/// intersection of the two summands reported separately.
struct PowerSplitting {
  IdentitySides sides;
  bool summands_independent = false;
  bool holds() const { return sides.holds() && summands_independent; }
};

inline PowerSplitting direct_power_splitting(const GroupAlgebra& a, const Subgroup& n, const Subgroup& l,
                                             std::size_t k) {
  if (k == 0) throw DimensionMismatch("direct_power_splitting: n must be positive");
  const FiniteGroup& g = a.group();
  verify(meet(g, n, l).is_trivial() && n.order() * l.order() == g.order() && is_normal(g, n) && is_normal(g, l),
         "direct_power_splitting: not a direct product");
  EchelonBuilder b(a.p(), a.dim());
  for (Elem m : generating_set(n)) {
    FpVector v = a.minus_one(m);
    for (const auto& y : a.augmentation_power(k - 1).basis()) b.insert(a.multiply(v, y));
  }
  Subspace first = Subspace::from_builder(b);
  auto lp = subgroup_augmentation_powers(a, l);
  const Subspace& second = k < lp.size() ? lp[k] : lp.back();
  PowerSplitting r{{a.augmentation_power(k), sum(first, second)}, intersect(first, second).is_zero()};
  return r;
}

}  // namespace mipkit
