#pragma once

// Explicit augmentation-preserving isomorphisms kG -> kH for tiny groups,
// found by exhaustive search over images of a Burnside basis of G in 1 + I(H).

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "mipkit/algebra.hpp"
#include "mipkit/error.hpp"
#include "mipkit/fp_linalg.hpp"
#include "mipkit/group.hpp"

namespace mipkit {

struct AlgebraIsomorphism {
  std::shared_ptr<const FiniteGroup> source, target;
  std::vector<Elem> generators;  // in the source group
  std::vector<FpVector> images;  // units of the target algebra
  FpMatrix matrix;               // row g is φ(g)

  FpVector apply(const FpVector& x) const { return matrix.apply(x); }
  Subspace map(const Subspace& s) const { return map_subspace(matrix, s); }
};

/// Extends g_i |-> u_i along the Cayley graph of G (edges x -> x g_i). Returns
/// nothing if two paths disagree, i.e. the u_i violate a relation of G.
inline std::optional<FpMatrix> induced_map(const GroupAlgebra& a, const GroupAlgebra& b, const std::vector<Elem>& gens,
                                           const std::vector<FpVector>& images) {
  if (gens.size() != images.size()) throw DimensionMismatch("induced_map: generator and image counts differ");
  if (a.p() != b.p()) throw DimensionMismatch("induced_map: different characteristics");
  const FiniteGroup& g = a.group();
  std::vector<std::optional<FpVector>> value(g.order());
  value[0] = b.one();
  std::queue<Elem> todo;
  todo.push(0);
  while (!todo.empty()) {
    Elem x = todo.front();
    todo.pop();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = g.mul(x, gens[i]);
      FpVector v = b.multiply(*value[x], images[i]);
      if (!value[y]) {
        value[y] = std::move(v);
        todo.push(y);
      } else if (*value[y] != v) {
        return std::nullopt;
      }
    }
  }
  FpMatrix m(a.p(), a.dim(), b.dim());
  for (Elem x = 0; x < g.order(); ++x) {
    if (!value[x]) throw NotContained("induced_map: generators do not generate the group");
    m.row(x) = *value[x];
  }
  return m;
}

/// Unital, augmentation preserving, multiplicative on group elements times
/// generators, and bijective.
inline bool is_algebra_isomorphism(const GroupAlgebra& a, const GroupAlgebra& b, const FpMatrix& m) {
  if (m.rows() != a.dim() || m.cols() != b.dim() || a.dim() != b.dim()) return false;
  const FiniteGroup& g = a.group();
  if (m.row(0) != b.one()) return false;
  for (Elem x = 0; x < g.order(); ++x)
    if (b.augmentation(m.row(x)) != 1) return false;
  const Subgroup all = whole(g);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y : all.generators())
      if (b.multiply(m.row(x), m.row(y)) != m.row(g.mul(x, y))) return false;
  return rank(m) == a.dim();
}

struct IsoSearchResult {
  std::optional<AlgebraIsomorphism> witness;
  std::size_t search_space = 0;      // |1 + I(H)|^d
  std::size_t candidates = 0;        // generator-image tuples examined after pruning
  std::size_t relation_passes = 0;   // tuples that satisfied every relation
  std::size_t isomorphisms = 0;      // bijective ones among them
};

struct IsoSearchCaps {
  std::size_t max_order = 16;
  std::size_t max_generators = 2;
};

/// Units of 1 + I(B) in little-endian order of their coefficient vectors.
inline std::vector<FpVector> augmentation_units(const GroupAlgebra& b) {
  const unsigned p = b.p();
  const std::size_t n = b.dim();
  std::vector<FpVector> out;
  std::vector<residue> c(n, 0);
  while (true) {
    unsigned s = 0;
    for (residue x : c) s += x;
    if (s % p == 1) out.emplace_back(p, c);
    std::size_t i = 0;
    while (i < n && ++c[i] == p) c[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Enumerates isomorphisms kG -> kH sending a Burnside basis x_1..x_d of G
/// to units u_1..u_d of 1 + I(H), in little-endian order of (u_1, ..., u_d)
/// with u_d varying fastest. Candidates are pruned by u_i^{|x_i|} = 1 and by
/// independence of the u_i - 1 modulo I(H)^2, both necessary for any
/// isomorphism. `visit` returns false to stop.
template <class Visit>
IsoSearchResult for_each_isomorphism(const GroupAlgebra& a, const GroupAlgebra& b, const IsoSearchCaps& caps,
                                     Visit&& visit) {
  const FiniteGroup& g = a.group();
  if (a.p() != b.p()) throw DimensionMismatch("iso_search: different characteristics");
  if (a.dim() != b.dim()) throw DimensionMismatch("iso_search: algebras of different dimension");
  if (a.dim() > caps.max_order) throw CapExceeded("iso_search: group order above the search cap");
  std::vector<Elem> gens = burnside_basis(g);
  if (gens.size() > caps.max_generators) throw CapExceeded("iso_search: too many generators for exhaustive search");

  IsoSearchResult r;
  const Subspace& i2 = b.augmentation_power(2);
  std::vector<FpVector> units = augmentation_units(b);
  r.search_space = ipow(units.size(), static_cast<unsigned>(gens.size()));
  std::vector<std::vector<FpVector>> pools(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (const auto& u : units)
      if (!i2.contains(u - b.one()) && b.power(u, g.element_order(gens[i])) == b.one()) pools[i].push_back(u);

  std::vector<std::size_t> idx(gens.size(), 0);
  if (std::any_of(pools.begin(), pools.end(), [](const auto& v) { return v.empty(); })) return r;
  while (true) {
    std::vector<FpVector> images;
    for (std::size_t i = 0; i < gens.size(); ++i) images.push_back(pools[i][idx[i]]);
    ++r.candidates;
    EchelonBuilder mod_i2(b.p(), b.dim());
    for (const auto& v : i2.basis()) mod_i2.insert(v);
    bool independent = true;
    for (const auto& u : images) independent = independent && mod_i2.insert(u - b.one());
    if (independent) {
      if (auto m = induced_map(a, b, gens, images)) {
        ++r.relation_passes;
        if (rank(*m) == a.dim()) {
          verify(is_algebra_isomorphism(a, b, *m), "iso_search: induced map is not an algebra isomorphism");
          ++r.isomorphisms;
          AlgebraIsomorphism phi{a.group_ptr(), b.group_ptr(), gens, std::move(images), std::move(*m)};
          if (!r.witness) r.witness = phi;
          if (!visit(phi)) return r;
        }
      }
    }
    std::size_t k = gens.size();
    while (k > 0 && ++idx[k - 1] == pools[k - 1].size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return r;
}

/// The first isomorphism in enumeration order, or exhaustion.
inline IsoSearchResult iso_search(const GroupAlgebra& a, const GroupAlgebra& b, const IsoSearchCaps& caps = {}) {
  return for_each_isomorphism(a, b, caps, [](const AlgebraIsomorphism&) { return false; });
}

/// φ ⊗ id: k(G x K) -> k(H x K), (g, c) |-> φ(g) ⊗ c, verified afterwards.
inline AlgebraIsomorphism tensor_with_identity(const AlgebraIsomorphism& phi, const FiniteGroup& k) {
  DirectProduct src = direct_product(*phi.source, k);
  DirectProduct dst = direct_product(*phi.target, k);
  const std::size_t nk = k.order();
  const unsigned p = phi.source->p();
  FpMatrix m(p, src.group->order(), dst.group->order());
  for (Elem x = 0; x < phi.source->order(); ++x)
    for (Elem c = 0; c < nk; ++c)
      for (std::size_t h = 0; h < phi.target->order(); ++h)
        if (residue v = phi.matrix.row(x)[h]) m.set(x * nk + c, h * nk + c, v);
  GroupAlgebra a(src.group), b(dst.group);
  verify(is_algebra_isomorphism(a, b, m), "tensor_with_identity: result is not an algebra isomorphism");
  AlgebraIsomorphism out{src.group, dst.group, {}, {}, std::move(m)};
  for (std::size_t i = 0; i < phi.generators.size(); ++i) {
    out.generators.push_back(src.embed_a[phi.generators[i]]);
    out.images.push_back(out.matrix.row(out.generators.back()));
  }
  const Subgroup kall = whole(k);
  for (Elem c : kall.generators()) {
    out.generators.push_back(src.embed_b[c]);
    out.images.push_back(out.matrix.row(out.generators.back()));
  }
  return out;
}

}  // namespace mipkit
