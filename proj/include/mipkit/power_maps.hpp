#pragma once

// The p-power maps between elementary abelian sections of G and between
// layers of the augmentation filtration of F_p G:
//
//   λ_G^{t-1}: Ω_t(Z(G))Φ(G)/Φ(G) -> ℧_{t-1}(G)G'/℧_t(G)G',   xΦ |-> x^{p^{t-1}}
//   Λ_G^{t-1}: I/I^2 -> (I^q + I(N)G)/(I^{q+1} + I(N)G),        x |-> x^q
//   ψ_n^N:     D_n(G)N/D_{n+1}(G)N -> (I^n + I(N)G)/(I^{n+1} + I(N)G),  x |-> x - 1
//
// with q = p^{t-1} and N = ℧_t(G)G'.

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "mipkit/algebra.hpp"
#include "mipkit/error.hpp"
#include "mipkit/fp_linalg.hpp"
#include "mipkit/group.hpp"

namespace mipkit {

/// An elementary abelian section A/B of G with a deterministic basis: the
/// greedy choice of smallest elements of `pool` (which must lie in A).
class ElementarySection {
 public:
  ElementarySection(const FiniteGroup& g, Subgroup a, Subgroup b, const Subgroup& pool)
      : g_(&g), a_(std::move(a)), b_(std::move(b)), coords_(g.order()) {
    if (!a_.contains(b_)) throw NotContained("section: B is not contained in A");
    if (!a_.contains(pool)) throw NotContained("section: representative pool is not contained in A");
    basis_ = greedy_basis(g, a_, b_, pool);
    const unsigned p = g.p();
    for (Elem x : basis_) {
      verify(b_.contains(g.ppow(x, 1)), "section is not of exponent p");
      for (Elem y : basis_) verify(b_.contains(g.comm(x, y)), "section is not abelian");
    }
    verify(ipow(p, static_cast<unsigned>(basis_.size())) * b_.order() == a_.order(), "section basis does not span");
    // walk every coefficient vector and tag its coset
    std::vector<unsigned> c(basis_.size(), 0);
    while (true) {
      FpVector v(p, basis_.size());
      Elem e = 0;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        v.set(i, c[i]);
        e = g.mul(e, g.pow(basis_[i], c[i]));
      }
      for (Elem m : b_.elements()) coords_[g.mul(e, m)] = v;
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == p) c[i++] = 0;
      if (i == c.size()) break;
    }
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Elem>& basis() const { return basis_; }
  const Subgroup& numerator() const { return a_; }
  const Subgroup& denominator() const { return b_; }

  FpVector coords(Elem x) const {
    if (!a_.contains(x)) throw NotContained("element is not in the section numerator");
    return coords_[x];
  }

  /// ∏ basis_i^{c_i}.
  Elem lift(const FpVector& c) const {
    Elem e = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) e = g_->mul(e, g_->pow(basis_[i], c[i]));
    return e;
  }

 private:
  const FiniteGroup* g_;
  Subgroup a_, b_;
  std::vector<Elem> basis_;
  std::vector<FpVector> coords_;
};

// ---------------------------------------------------------------------------
// λ on the group

struct SectionMap {
  ElementarySection domain, codomain;
  FpMatrix matrix;
  Subspace kernel() const { return mipkit::kernel(matrix); }
};

/// λ_G^{t-1} with domain representatives taken from Ω_t(Z(G)). The map is
/// recomputed on every element of Ω_t(Z(G)); disagreement throws.
inline SectionMap lambda_group_map(const FiniteGroup& g, unsigned t) {
  if (t == 0) throw DimensionMismatch("lambda_group_map: t must be positive");
  Subgroup phi = frattini(g);
  Subgroup omz = omega(g, center(g), t);
  Subgroup derived = commutator_subgroup(g);
  Subgroup top = join(g, agemo(g, t - 1), derived);
  Subgroup bottom = join(g, agemo(g, t), derived);
  ElementarySection dom(g, join(g, omz, phi), phi, omz);
  ElementarySection cod(g, top, bottom, top);
  FpMatrix m(g.p(), dom.dim(), cod.dim());
  for (std::size_t i = 0; i < dom.dim(); ++i) m.row(i) = cod.coords(g.ppow(dom.basis()[i], t - 1));
  for (Elem x : omz.elements())
    verify(cod.coords(g.ppow(x, t - 1)) == m.apply(dom.coords(x)), "lambda is not well defined on the Frattini quotient");
  return {std::move(dom), std::move(cod), std::move(m)};
}

// ---------------------------------------------------------------------------
// Maps into layers of the augmentation filtration

/// (I^n + I(N)G) / (I^{n+1} + I(N)G).
inline QuotientSpace filtration_layer(const GroupAlgebra& a, const Subgroup& n, std::size_t k) {
  Subspace rel = relative_augmentation_ideal(a, n);
  return QuotientSpace(sum(a.augmentation_power(k), rel), sum(a.augmentation_power(k + 1), rel));
}

struct PsiMap {
  ElementarySection domain;
  QuotientSpace codomain;
  FpMatrix matrix;
};

/// ψ_n^N: x D_{n+1}(G)N |-> x - 1; linearity is checked on every element of
/// D_n(G)N and injectivity on the matrix.
inline PsiMap psi_map(const GroupAlgebra& a, const Subgroup& n, std::size_t k) {
  if (k == 0) throw DimensionMismatch("psi_map: n must be positive");
  const FiniteGroup& g = a.group();
  require_normal(g, n, "psi_map");
  auto d = jennings_series_product_formula(g);
  auto term = [&](std::size_t i) { return i <= d.size() ? d[i - 1] : d.back(); };
  Subgroup top = join(g, term(k), n), bottom = join(g, term(k + 1), n);
  ElementarySection dom(g, top, bottom, top);
  QuotientSpace cod = filtration_layer(a, n, k);
  FpMatrix m(a.p(), dom.dim(), cod.dim());
  for (std::size_t i = 0; i < dom.dim(); ++i) m.row(i) = cod.coords(a.minus_one(dom.basis()[i]));
  for (Elem x : top.elements())
    verify(cod.coords(a.minus_one(x)) == m.apply(dom.coords(x)), "psi is not additive on the section");
  verify(kernel(m).is_zero(), "psi is not injective");
  return {std::move(dom), std::move(cod), std::move(m)};
}

struct AlgebraPowerMap {
  QuotientSpace domain, codomain;
  FpMatrix matrix;
  std::size_t q;
  Subspace kernel() const { return mipkit::kernel(matrix); }
};

/// Λ_G^{t-1}: x + I^2 |-> x^q. Representative independence and additivity are
/// tested on deterministic pseudo-random samples (`samples` per basis vector).
inline AlgebraPowerMap Lambda_algebra_map(const GroupAlgebra& a, unsigned t, std::size_t samples = 4) {
  if (t == 0) throw DimensionMismatch("Lambda_algebra_map: t must be positive");
  const FiniteGroup& g = a.group();
  const std::size_t q = ipow(g.p(), t - 1);
  Subgroup n = join(g, agemo(g, t), commutator_subgroup(g));
  QuotientSpace dom(a.augmentation_power(1), a.augmentation_power(2));
  QuotientSpace cod = filtration_layer(a, n, q);
  FpMatrix m(a.p(), dom.dim(), cod.dim());
  for (std::size_t i = 0; i < dom.dim(); ++i) m.row(i) = cod.coords(a.power(dom.rep(i), q));

  std::mt19937 rng(12345);
  auto random_in = [&](const Subspace& s) {
    FpVector v(a.p(), a.dim());
    for (const auto& b : s.basis()) v.axpy(rng() % a.p(), b);
    return v;
  };
  const Subspace& i2 = a.augmentation_power(2);
  for (std::size_t i = 0; i < dom.dim(); ++i)
    for (std::size_t s = 0; s < samples; ++s) {
      FpVector x = dom.rep(i) + random_in(i2);
      verify(cod.coords(a.power(x, q)) == m.row(i), "Lambda depends on the representative");
    }
  for (std::size_t s = 0; s < samples * std::max<std::size_t>(dom.dim(), 1); ++s) {
    FpVector x = random_in(a.augmentation_power(1)), y = random_in(a.augmentation_power(1));
    verify(cod.coords(a.power(x + y, q)) == m.apply(dom.coords(x)) + m.apply(dom.coords(y)), "Lambda is not additive");
  }
  return {std::move(dom), std::move(cod), std::move(m), q};
}

// ---------------------------------------------------------------------------
// The commutative square relating λ and Λ

struct PowerSquare {
  SectionMap lambda;
  AlgebraPowerMap Lambda;
  PsiMap psi_1;   // N = 1, n = 1
  PsiMap psi_q;   // N = ℧_t(G)G', n = q
  FpMatrix inclusion;  // domain of λ into G/Φ(G) = domain of ψ_1
  bool sections_match = false;
  bool commutes = false;
  bool kernels_correspond = false;
};

/// Builds all four maps and checks Λ ∘ ψ_1 = ψ_q ∘ λ on the domain of λ, both
/// as matrices and on every element of Ω_t(Z(G)), and that ψ_1 carries ker λ
/// onto the part of ker Λ inside the image of the domain.
inline PowerSquare power_square(const GroupAlgebra& a, unsigned t) {
  const FiniteGroup& g = a.group();
  SectionMap lam = lambda_group_map(g, t);
  AlgebraPowerMap Lam = Lambda_algebra_map(a, t);
  PsiMap p1 = psi_map(a, trivial_subgroup(g), 1);
  Subgroup n = join(g, agemo(g, t), commutator_subgroup(g));
  PsiMap pq = psi_map(a, n, Lam.q);

  PowerSquare sq{std::move(lam), std::move(Lam), std::move(p1), std::move(pq), FpMatrix(a.p(), 0, 0)};
  sq.sections_match = sq.psi_q.domain.numerator() == sq.lambda.codomain.numerator() &&
                      sq.psi_q.domain.denominator() == sq.lambda.codomain.denominator();
  if (!sq.sections_match) return sq;

  const auto& dom = sq.lambda.domain;
  FpMatrix inc(a.p(), dom.dim(), sq.psi_1.domain.dim());
  for (std::size_t i = 0; i < dom.dim(); ++i) inc.row(i) = sq.psi_1.domain.coords(dom.basis()[i]);
  FpMatrix change(a.p(), sq.lambda.codomain.dim(), sq.psi_q.domain.dim());
  for (std::size_t i = 0; i < sq.lambda.codomain.dim(); ++i)
    change.row(i) = sq.psi_q.domain.coords(sq.lambda.codomain.basis()[i]);

  FpMatrix left = inc.then(sq.psi_1.matrix).then(sq.Lambda.matrix);
  FpMatrix right = sq.lambda.matrix.then(change).then(sq.psi_q.matrix);
  bool ok = left == right;
  Subgroup omz = omega(g, center(g), t);
  for (Elem x : omz.elements()) {
    FpVector via_Lambda = sq.Lambda.codomain.coords(a.power(a.minus_one(x), sq.Lambda.q));
    FpVector via_lambda = sq.psi_q.codomain.coords(a.minus_one(g.ppow(x, t - 1)));
    ok = ok && via_Lambda == via_lambda && via_Lambda == left.apply(dom.coords(x));
  }
  sq.commutes = ok;

  FpMatrix embed = inc.then(sq.psi_1.matrix);
  Subspace image_of_domain = image(embed);
  Subspace lhs = map_subspace(embed, sq.lambda.kernel());
  Subspace rhs = intersect(sq.Lambda.kernel(), image_of_domain);
  sq.kernels_correspond = lhs == rhs;
  sq.inclusion = std::move(inc);
  return sq;
}

}  // namespace mipkit
