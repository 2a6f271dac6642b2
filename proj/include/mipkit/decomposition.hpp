#pragma once

// Splitting off homocyclic direct factors: G = NAb(G) ⊕ H_1(G) ⊕ H_2(G) ⊕ ...
// where H_t(G) ≅ (C_{p^t})^{r_t}.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mipkit/error.hpp"
#include "mipkit/group.hpp"
#include "mipkit/power_maps.hpp"

namespace mipkit {

/// Rank of H_t(G): dim Ω_t(Z(G))Φ(G)/Φ(G) - dim ker λ_G^{t-1}.
inline std::size_t homocyclic_rank(const FiniteGroup& g, unsigned t) {
  SectionMap lam = lambda_group_map(g, t);
  return lam.domain.dim() - lam.kernel().dim();
}

/// True when s ∩ t = 1, [s, t] = 1 and |s||t| = |G|, i.e. G = S ⊕ T internally.
inline bool is_internal_direct_product(const FiniteGroup& g, const Subgroup& s, const Subgroup& t) {
  if (s.order() * t.order() != g.order()) return false;
  if (!meet(g, s, t).is_trivial()) return false;
  for (Elem x : generating_set(s))
    for (Elem y : generating_set(t))
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

inline bool is_homocyclic(const FiniteGroup& g, const Subgroup& t, unsigned exponent_log) {
  if (t.is_trivial()) return true;
  AbelianType ty = abelian_type(g, t);
  const std::size_t q = ipow(g.p(), exponent_log);
  return std::all_of(ty.factors.begin(), ty.factors.end(), [&](std::size_t f) { return f == q; });
}

namespace detail {

/// One application of the complement claim: given a Burnside basis
/// `others ∪ {y}` of the ambient group with y central of order p^t and
/// <y> ∩ N = 1, replaces each z in `others` by z^w y^(p^(e-s)) so that the
/// new elements generate a complement of <y>.
inline std::vector<Elem> complement_claim(const FiniteGroup& g, const std::vector<Elem>& others, Elem y, unsigned t,
                                          const Subgroup& n) {
  const unsigned p = g.p();
  const std::size_t pt = ipow(p, t);
  Subgroup cy = generate(g, {y});
  std::vector<Elem> out;
  std::vector<Elem> sn_gens = generating_set(n);  // generators of S_j N
  auto meet_y = [&](const std::vector<Elem>& gens) { return meet(g, generate(g, gens), cy); };
  for (Elem z : others) {
    std::vector<Elem> with_z = sn_gens;
    with_z.push_back(z);
    Subgroup m = meet_y(with_z);
    Elem chosen = z;
    if (!m.is_trivial()) {
      // m = <y^(p^e)>
      const unsigned e = t - *log_p(m.order(), p);
      Subgroup sn = generate(g, sn_gens);
      Elem target_inv = g.inv(g.ppow(y, e));
      bool found = false;
      for (unsigned s = 0; s <= e && !found; ++s)
        for (std::size_t w = 1; w < pt && !found; ++w) {
          if (w % p == 0) continue;
          if (sn.contains(g.mul(g.pow(z, w * ipow(p, s)), target_inv))) {
            chosen = g.mul(g.pow(z, w), g.ppow(y, e - s));
            found = true;
          }
        }
      verify(found, "complement construction: no (w, s) found");
    }
    out.push_back(chosen);
    sn_gens.push_back(chosen);
    verify(meet_y(sn_gens).is_trivial(), "complement construction: S_j N meets <y>");
  }
  return out;
}

}  // namespace detail

/// A complement S with G = S ⊕ T, built from a Burnside basis of G extending
/// one of T by repeated application of the complement claim. Preconditions:
/// T ⊆ Ω_t(Z(G)) homocyclic of exponent p^t, d(T) = d(TΦ(G)/Φ(G)) and
/// T ∩ ℧_t(G)G' = 1.
struct ComplementResult {
  Subgroup complement;
  std::vector<Elem> complement_generators;
  std::vector<Elem> component_generators;
};

inline ComplementResult complement_construction(const FiniteGroup& g, const Subgroup& t) {
  if (t.parent_order() != g.order()) throw DimensionMismatch("complement_construction: subgroup of another group");
  if (t.is_trivial()) {
    Subgroup w = whole(g);
    return {w, w.generators(), {}};
  }
  const unsigned p = g.p();
  // t is determined by the exponent of T
  std::size_t exp_t = 1;
  for (Elem x : t.elements()) exp_t = std::max(exp_t, g.element_order(x));
  const unsigned te = *log_p(exp_t, p);
  Subgroup n = join(g, agemo(g, te), commutator_subgroup(g));
  Subgroup phi = frattini(g);
  if (!omega(g, center(g), te).contains(t)) throw NotContained("complement_construction: T is not in Omega_t(Z(G))");
  if (!is_homocyclic(g, t, te)) throw NotContained("complement_construction: T is not homocyclic");
  std::vector<Elem> ys = greedy_basis(g, t, agemo(g, t, 1), t);
  Subgroup t_phi = join(g, t, phi);
  if (ipow(p, static_cast<unsigned>(ys.size())) * phi.order() != t_phi.order())
    throw NotContained("complement_construction: d(T) differs from d(T Phi(G) / Phi(G))");
  if (!meet(g, t, n).is_trivial()) throw NotContained("complement_construction: T meets Mho_t(G) G'");

  std::vector<Elem> basis = extend_burnside_basis(g, ys);
  std::vector<Elem> xs(basis.begin() + static_cast<long>(ys.size()), basis.end());
  // peel y_r, then y_(r-1)', ...; each complement keeps N = ℧_t(G)G'
  std::vector<Elem> cur_y = ys;
  for (std::size_t k = cur_y.size(); k-- > 0;) {
    std::vector<Elem> others = xs;
    others.insert(others.end(), cur_y.begin(), cur_y.begin() + static_cast<long>(k));
    std::vector<Elem> adjusted = detail::complement_claim(g, others, cur_y[k], te, n);
    std::copy(adjusted.begin(), adjusted.begin() + static_cast<long>(xs.size()), xs.begin());
    std::copy(adjusted.begin() + static_cast<long>(xs.size()), adjusted.end(), cur_y.begin());
  }
  Subgroup s = generate(g, xs);
  verify(generate(g, cur_y) == t, "complement construction: adjusted basis of T does not generate T");
  verify(is_internal_direct_product(g, s, t), "complement construction: G is not S x T");
  return {with_small_generators(g, s), xs, cur_y};
}

struct ComponentSplit {
  unsigned t = 0;
  std::size_t rank = 0;
  Subgroup component;    // T
  Subgroup complement;   // S
  std::vector<Elem> component_generators, complement_generators;
};

/// T lifted from the complement of ker λ_G^{t-1} spanned by unit vectors at
/// the non-pivot columns of its echelon basis, and S from
/// complement_construction. Everything is verified afterwards.
inline ComponentSplit extract_component(const FiniteGroup& g, unsigned t) {
  SectionMap lam = lambda_group_map(g, t);
  Subspace ker = lam.kernel();
  ComponentSplit r;
  r.t = t;
  std::vector<bool> pivot(lam.domain.dim(), false);
  for (std::size_t c : ker.pivots()) pivot[c] = true;
  for (std::size_t c = 0; c < lam.domain.dim(); ++c)
    if (!pivot[c]) r.component_generators.push_back(lam.domain.lift(FpVector::unit(g.p(), lam.domain.dim(), c)));
  r.rank = r.component_generators.size();
  r.component = generate(g, r.component_generators);
  if (r.rank == 0) {
    r.complement = whole(g);
    r.complement_generators = r.complement.generators();
    return r;
  }
  verify(is_homocyclic(g, r.component, t) && abelian_type(g, r.component).factors.size() == r.rank,
         "extracted component is not homocyclic of the expected rank");
  ComplementResult c = complement_construction(g, r.component);
  r.complement = c.complement;
  r.complement_generators = c.complement_generators;
  verify(is_internal_direct_product(g, r.complement, r.component), "extracted component is not a direct factor");
  return r;
}

// ---------------------------------------------------------------------------
// Full split

struct HomocyclicComponent {
  unsigned t = 0;
  std::size_t rank = 0;
  Subgroup subgroup;             // inside the input group
  std::vector<Elem> generators;  // inside the input group
};

struct PeelStep {
  unsigned t = 0;
  std::size_t residual_order = 0;
  std::size_t rank = 0;
  std::size_t complement_order = 0;
  std::vector<Elem> component_generators;
  std::vector<Elem> complement_generators;
};

struct HomocyclicDecomposition {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<HomocyclicComponent> components;  // ascending t, nonzero rank
  Subgroup nab;
  std::vector<Elem> nab_generators;
  std::vector<PeelStep> trace;

  AbelianType ab_type() const {
    AbelianType a;
    for (auto it = components.rbegin(); it != components.rend(); ++it)
      for (std::size_t k = 0; k < it->rank; ++k) a.factors.push_back(ipow(group->p(), it->t));
    return a;
  }
};

/// Ab(G) ≅ ⊕_t H_t(Ω_t(Z(G))℧_t(G)G' / ℧_t(G)G'), evaluated with abelian types.
inline AbelianType ab_type_by_formula(const std::shared_ptr<const FiniteGroup>& gp) {
  const FiniteGroup& g = *gp;
  const unsigned p = g.p();
  Subgroup derived = commutator_subgroup(g);
  Subgroup z = center(g);
  AbelianType out;
  const unsigned top = g.exponent_log();
  for (unsigned t = top; t >= 1; --t) {
    Subgroup n = join(g, agemo(g, t), derived);
    AbelianType q = section_type(gp, join(g, omega(g, z, t), n), n);
    for (std::size_t f : q.factors)
      if (f == ipow(p, t)) out.factors.push_back(f);
  }
  return out;
}

/// Rank of the exponent-p^t homocyclic component of Ω_t(Z(G))℧_t(G)G' / ℧_t(G)G'.
inline std::size_t homocyclic_rank_of_section(const std::shared_ptr<const FiniteGroup>& gp, unsigned t) {
  const FiniteGroup& g = *gp;
  Subgroup n = join(g, agemo(g, t), commutator_subgroup(g));
  AbelianType q = section_type(gp, join(g, omega(g, center(g), t), n), n);
  return static_cast<std::size_t>(std::count(q.factors.begin(), q.factors.end(), ipow(g.p(), t)));
}

/// Peels H_1, H_2, ... off in ascending t; the residual is NAb(G). The final
/// decomposition and the rank of every component are verified.
inline HomocyclicDecomposition ab_nab_split(const std::shared_ptr<const FiniteGroup>& gp) {
  const FiniteGroup& g = *gp;
  HomocyclicDecomposition d;
  d.group = gp;
  std::shared_ptr<const FiniteGroup> residual = gp;
  std::vector<Elem> to_g(g.order());
  for (Elem x = 0; x < g.order(); ++x) to_g[x] = x;
  auto lift = [&](const std::vector<Elem>& xs) {
    std::vector<Elem> out;
    for (Elem x : xs) out.push_back(to_g[x]);
    return out;
  };

  const unsigned top = g.exponent_log();
  for (unsigned t = 1; t <= top; ++t) {
    ComponentSplit c = extract_component(*residual, t);
    PeelStep step{t, residual->order(), c.rank, c.complement.order(), lift(c.component_generators), {}};
    if (c.rank > 0) {
      HomocyclicComponent comp;
      comp.t = t;
      comp.rank = c.rank;
      comp.generators = lift(c.component_generators);
      comp.subgroup = with_small_generators(g, generate(g, comp.generators));
      d.components.push_back(std::move(comp));
      SubgroupGroup sub = as_group(*residual, c.complement);
      std::vector<Elem> next(sub.embedding.size());
      for (std::size_t i = 0; i < next.size(); ++i) next[i] = to_g[sub.embedding[i]];
      to_g = std::move(next);
      residual = sub.group;
      step.complement_generators = lift(whole(*residual).generators());
    } else {
      step.complement_generators = lift(whole(*residual).generators());
    }
    d.trace.push_back(std::move(step));
  }
  d.nab_generators = lift(whole(*residual).generators());
  d.nab = with_small_generators(g, generate(g, d.nab_generators));

  // certificate: G = NAb ⊕ H_1 ⊕ ... ⊕ H_k
  std::vector<Subgroup> factors{d.nab};
  for (const auto& c : d.components) factors.push_back(c.subgroup);
  std::size_t prod = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    prod *= factors[i].order();
    std::vector<Subgroup> rest;
    for (std::size_t j = 0; j < factors.size(); ++j)
      if (j != i) rest.push_back(factors[j]);
    Subgroup others = rest.empty() ? trivial_subgroup(g) : join(g, rest);
    verify(meet(g, factors[i], others).is_trivial(), "decomposition factors are not independent");
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      for (Elem x : generating_set(factors[i]))
        for (Elem y : generating_set(factors[j]))
          verify(g.mul(x, y) == g.mul(y, x), "decomposition factors do not commute");
  }
  verify(prod == g.order(), "decomposition factor orders do not multiply to |G|");
  for (const auto& c : d.components)
    verify(is_homocyclic(g, c.subgroup, c.t) && abelian_type(g, c.subgroup).factors.size() == c.rank,
           "decomposition component has the wrong type");
  // each H_t matches the homocyclic part of Ω_t(Z(G))℧_t(G)G' / ℧_t(G)G'
  for (unsigned t = 1; t <= top + 1; ++t) {
    std::size_t rank = 0;
    for (const auto& c : d.components)
      if (c.t == t) rank = c.rank;
    verify(rank == homocyclic_rank_of_section(gp, t), "component rank differs from the section formula");
  }
  return d;
}

// ---------------------------------------------------------------------------
// Properties of each extracted component

struct ComponentReport {
  unsigned t = 0;
  bool in_omega_center = false;           // H_t ⊆ Ω_t(Z(G))
  bool rank_matches_frattini_image = false;  // d(H_t) = d(H_tΦ/Φ)
  bool complement_keeps_series = false;   // ℧_t(G)G' = ℧_t(U)U' for the complement U
  bool meets_series_trivially = false;    // H_t ∩ ℧_t(G)G' = 1
  bool lambda_injective = false;          // λ_G^{t-1} injective on H_tΦ/Φ
  bool all() const {
    return in_omega_center && rank_matches_frattini_image && complement_keeps_series && meets_series_trivially &&
           lambda_injective;
  }
};

inline std::vector<ComponentReport> component_checks(const HomocyclicDecomposition& d) {
  const FiniteGroup& g = *d.group;
  const unsigned p = g.p();
  std::vector<ComponentReport> out;
  Subgroup phi = frattini(g);
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    ComponentReport r;
    r.t = c.t;
    r.in_omega_center = omega(g, center(g), c.t).contains(c.subgroup);
    std::size_t d_h = abelian_type(g, c.subgroup).factors.size();
    Subgroup hphi = join(g, c.subgroup, phi);
    r.rank_matches_frattini_image = ipow(p, static_cast<unsigned>(d_h)) * phi.order() == hphi.order();

    std::vector<Subgroup> rest{d.nab};
    for (std::size_t j = 0; j < d.components.size(); ++j)
      if (j != i) rest.push_back(d.components[j].subgroup);
    Subgroup u = join(g, rest);
    SubgroupGroup ug = as_group(g, u);
    const FiniteGroup& uu = *ug.group;
    Subgroup n_u = ug.to_parent(g, join(uu, agemo(uu, c.t), commutator_subgroup(uu)));
    Subgroup n = join(g, agemo(g, c.t), commutator_subgroup(g));
    r.complement_keeps_series = n_u == n;
    r.meets_series_trivially = meet(g, c.subgroup, n).is_trivial();

    SectionMap lam = lambda_group_map(g, c.t);
    std::vector<FpVector> rows;
    for (Elem x : c.subgroup.elements())
      if (lam.domain.numerator().contains(x)) rows.push_back(lam.domain.coords(x));
    Subspace hspace = Subspace::span(p, lam.domain.dim(), rows);
    r.lambda_injective = hspace.dim() == d_h && intersect(hspace, lam.kernel()).is_zero();
    out.push_back(r);
  }
  return out;
}

}  // namespace mipkit
