#pragma once

// Group invariants determined by F_pG, evaluated on every expression of a
// generated canonical catalog, with a canonical JSON serialization.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mipkit/canonical.hpp"
#include "mipkit/decomposition.hpp"
#include "mipkit/error.hpp"
#include "mipkit/group.hpp"

namespace mipkit {

struct FingerprintOptions {
  std::size_t depth = 2;
  unsigned t_max = 0;           // 0: log_p(exp G) + 1
  std::size_t pair_depth = 1;   // catalog depth used for (L, N) pair invariants
};

inline unsigned default_t_max(const FiniteGroup& g) { return g.exponent_log() + 1; }

struct PairInvariants {
  AbelianType quotient;  // G / LN
  AbelianType section;   // LN / N
};

struct ExprInvariants {
  std::size_t order = 0;
  std::vector<std::size_t> jennings;      // |D_n(L)|
  std::optional<AbelianType> abelian;     // type of L when abelian
  AbelianType center_meet;                // Z(G) ∩ L
  AbelianType center_quotient;            // Z(G)L / L
  std::map<std::string, PairInvariants> pairs;  // keyed by N
};

struct Fingerprint {
  unsigned p = 0;
  std::size_t order = 0, d = 0;
  std::size_t depth = 0;
  unsigned t_max = 0;
  std::vector<std::size_t> jennings;  // |D_n(G)|
  AbelianType ab_type;                // Ab(G)
  std::map<std::string, ExprInvariants> catalog;
};

inline std::vector<std::size_t> jennings_orders(const FiniteGroup& g) {
  std::vector<std::size_t> o;
  for (const auto& s : jennings_series_product_formula(g)) o.push_back(s.order());
  return o;
}

inline nlohmann::json to_json(const AbelianType& a) { return a.factors; }

/// Canonical JSON: object keys sorted (std::map), integers only.
inline nlohmann::json to_json(const Fingerprint& f) {
  nlohmann::json j;
  j["p"] = f.p;
  j["order"] = f.order;
  j["d"] = f.d;
  j["depth"] = f.depth;
  j["t_max"] = f.t_max;
  j["jennings"] = f.jennings;
  j["ab_type"] = to_json(f.ab_type);
  nlohmann::json cat = nlohmann::json::object();
  for (const auto& [key, e] : f.catalog) {
    nlohmann::json x;
    x["order"] = e.order;
    x["jennings"] = e.jennings;
    x["abelian_type"] = e.abelian ? to_json(*e.abelian) : nlohmann::json(nullptr);
    x["center_meet"] = to_json(e.center_meet);
    x["center_quotient"] = to_json(e.center_quotient);
    if (!e.pairs.empty()) {
      nlohmann::json pj = nlohmann::json::object();
      for (const auto& [n, pi] : e.pairs) pj[n] = {{"quotient", to_json(pi.quotient)}, {"section", to_json(pi.section)}};
      x["pairs"] = std::move(pj);
    }
    cat[key] = std::move(x);
  }
  j["catalog"] = std::move(cat);
  return j;
}

/// Byte-comparable serialization.
inline std::string serialize(const Fingerprint& f) { return to_json(f).dump(); }

inline Fingerprint fingerprint(const std::shared_ptr<const FiniteGroup>& gp, const FingerprintOptions& opt = {}) {
  const FiniteGroup& g = *gp;
  Fingerprint f;
  f.p = g.p();
  f.order = g.order();
  f.d = min_generators(g);
  f.depth = opt.depth;
  f.t_max = opt.t_max ? opt.t_max : default_t_max(g);
  f.jennings = jennings_orders(g);

  AbelianType by_formula = ab_type_by_formula(gp);
  AbelianType by_peeling = ab_nab_split(gp).ab_type();
  verify(by_formula == by_peeling, "Ab(G) by formula differs from Ab(G) by direct peeling");
  f.ab_type = by_formula;

  CanonicalEvaluator eval(g);
  const Subgroup z = center(g);
  std::map<std::vector<Elem>, ExprInvariants> by_subgroup;
  auto invariants_of = [&](const Subgroup& l) {
    if (auto it = by_subgroup.find(l.elements()); it != by_subgroup.end()) return it->second;
    ExprInvariants e;
    e.order = l.order();
    SubgroupGroup lg = as_group(g, l);
    e.jennings = jennings_orders(*lg.group);
    if (lg.group->is_abelian()) e.abelian = abelian_type(*lg.group);
    e.center_meet = abelian_type(g, meet(g, z, l));
    e.center_quotient = section_type(gp, join(g, z, l), l);
    return by_subgroup.emplace(l.elements(), std::move(e)).first->second;
  };

  auto catalog = generate_catalog(opt.depth, f.t_max);
  for (const auto& expr : catalog) f.catalog.emplace(expr.key(), invariants_of(eval(expr)));

  // G' ⊆ N is guaranteed syntactically, and re-checked before use
  auto small = generate_catalog(std::min(opt.pair_depth, opt.depth), f.t_max);
  const Subgroup derived = commutator_subgroup(g);
  std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, PairInvariants> pair_memo;
  for (const auto& l : small)
    for (const auto& n : small) {
      if (!n.contains_derived()) continue;
      const Subgroup& ns = eval(n);
      if (!ns.contains(derived)) continue;
      const Subgroup& ls = eval(l);
      auto key = std::make_pair(ls.elements(), ns.elements());
      auto it = pair_memo.find(key);
      if (it == pair_memo.end()) {
        Subgroup ln = join(g, ls, ns);
        PairInvariants pi{section_type(gp, whole(g), ln), section_type(gp, ln, ns)};
        it = pair_memo.emplace(key, std::move(pi)).first;
      }
      f.catalog.at(l.key()).pairs.emplace(n.key(), it->second);
    }
  return f;
}

struct CompareVerdict {
  bool distinguished = false;
  std::string key;  // first differing key, e.g. "jennings" or "catalog/Mho(1,G,G')"
  nlohmann::json left, right;
};

/// First differing invariant in the order: order, jennings, d, ab_type, then
/// catalog keys in sorted order. Both fingerprints must share depth and t_max.
inline CompareVerdict compare(const Fingerprint& a, const Fingerprint& b) {
  if (a.p != b.p) throw DimensionMismatch("compare: groups for different primes");
  if (a.depth != b.depth || a.t_max != b.t_max) throw DimensionMismatch("compare: fingerprints with different catalogs");
  nlohmann::json ja = to_json(a), jb = to_json(b);
  CompareVerdict v;
  for (const char* k : {"order", "jennings", "d", "ab_type"})
    if (ja[k] != jb[k]) {
      v = {true, k, ja[k], jb[k]};
      return v;
    }
  const auto& ca = ja["catalog"];
  const auto& cb = jb["catalog"];
  for (auto it = ca.begin(); it != ca.end(); ++it) {
    const auto other = cb.find(it.key());
    if (other == cb.end() || *other != it.value()) {
      v = {true, "catalog/" + it.key(), it.value(), other == cb.end() ? nlohmann::json(nullptr) : *other};
      return v;
    }
  }
  for (auto it = cb.begin(); it != cb.end(); ++it)
    if (!ca.contains(it.key())) {
      v = {true, "catalog/" + it.key(), nullptr, it.value()};
      return v;
    }
  return v;
}

/// Fingerprints both groups with a common t_max (the larger default) and compares.
inline CompareVerdict compare(const std::shared_ptr<const FiniteGroup>& g, const std::shared_ptr<const FiniteGroup>& h,
                              FingerprintOptions opt = {}) {
  if (g->p() != h->p()) throw DimensionMismatch("compare: groups for different primes");
  if (!opt.t_max) opt.t_max = std::max(default_t_max(*g), default_t_max(*h));
  return compare(fingerprint(g, opt), fingerprint(h, opt));
}

}  // namespace mipkit
