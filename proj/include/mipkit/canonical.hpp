#pragma once

// Expressions for k-canonical subgroup assignations, closed under
//   Ω_t(G:N),  ℧_t(L)N,  Ω_t(Z(G))N,  LN
// with base cases G, G' and 1. Every N must contain G'; this is guaranteed
// syntactically by generate_catalog and checked on evaluation.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mipkit/error.hpp"
#include "mipkit/group.hpp"

namespace mipkit {

class CanonicalExpr {
 public:
  enum class Kind { Group, Derived, Trivial, OmegaRel, MhoProd, OmegaCenterProd, Join };

  static CanonicalExpr group() { return CanonicalExpr(Kind::Group); }
  static CanonicalExpr derived() { return CanonicalExpr(Kind::Derived); }
  static CanonicalExpr trivial() { return CanonicalExpr(Kind::Trivial); }

  /// Ω_t(G:N).
  static CanonicalExpr omega_rel(unsigned t, CanonicalExpr n) {
    check_t(t);
    if (n.kind_ == Kind::Group) return n;
    CanonicalExpr e(Kind::OmegaRel);
    e.t_ = t;
    e.children_ = {std::move(n)};
    return e.finish();
  }

  /// ℧_t(L)N.
  static CanonicalExpr mho_prod(unsigned t, CanonicalExpr l, CanonicalExpr n) {
    check_t(t);
    if (n.kind_ == Kind::Group) return n;
    if (l.kind_ == Kind::Trivial || l == n) return n;
    if (l.kind_ == Kind::Derived && n.contains_derived()) return n;
    CanonicalExpr e(Kind::MhoProd);
    e.t_ = t;
    e.children_ = {std::move(l), std::move(n)};
    return e.finish();
  }

  /// Ω_t(Z(G))N.
  static CanonicalExpr omega_center_prod(unsigned t, CanonicalExpr n) {
    check_t(t);
    if (n.kind_ == Kind::Group) return n;
    CanonicalExpr e(Kind::OmegaCenterProd);
    e.t_ = t;
    e.children_ = {std::move(n)};
    return e.finish();
  }

  /// L_1 L_2 ... flattened, sorted and deduplicated.
  static CanonicalExpr join(std::vector<CanonicalExpr> parts) {
    std::vector<CanonicalExpr> flat;
    for (auto& x : parts) {
      if (x.kind_ == Kind::Join) {
        for (auto& c : x.children_) flat.push_back(c);
      } else if (x.kind_ == Kind::Group) {
        return x;
      } else if (x.kind_ != Kind::Trivial) {
        flat.push_back(std::move(x));
      }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return trivial();
    if (flat.size() == 1) return flat.front();
    CanonicalExpr e(Kind::Join);
    e.children_ = std::move(flat);
    return e.finish();
  }
  static CanonicalExpr join(CanonicalExpr a, CanonicalExpr b) { return join(std::vector<CanonicalExpr>{a, b}); }

  Kind kind() const { return kind_; }
  unsigned t() const { return t_; }
  const std::vector<CanonicalExpr>& children() const { return children_; }
  const std::string& key() const { return key_; }
  std::size_t depth() const { return depth_; }

  /// G' ⊆ E holds for every group by construction.
  bool contains_derived() const {
    switch (kind_) {
      case Kind::Group:
      case Kind::Derived:
      case Kind::OmegaRel:
        return true;
      case Kind::Trivial:
        return false;
      case Kind::MhoProd:
      case Kind::OmegaCenterProd:
        return children_.back().contains_derived();
      case Kind::Join:
        return std::any_of(children_.begin(), children_.end(), [](const auto& c) { return c.contains_derived(); });
    }
    return false;
  }

  bool operator==(const CanonicalExpr& o) const { return key_ == o.key_; }
  std::strong_ordering operator<=>(const CanonicalExpr& o) const { return key_ <=> o.key_; }

 private:
  explicit CanonicalExpr(Kind k) : kind_(k) {
    if (k == Kind::Group) key_ = "G";
    if (k == Kind::Derived) key_ = "G'";
    if (k == Kind::Trivial) key_ = "1";
  }

  static void check_t(unsigned t) {
    if (t == 0) throw DimensionMismatch("canonical expression: t must be positive");
  }

  CanonicalExpr& finish() {
    std::string args;
    depth_ = 0;
    for (const auto& c : children_) {
      args += (args.empty() ? "" : ",") + c.key_;
      depth_ = std::max(depth_, c.depth_);
    }
    ++depth_;
    switch (kind_) {
      case Kind::OmegaRel:
        key_ = "Omega(" + std::to_string(t_) + "," + args + ")";
        break;
      case Kind::MhoProd:
        key_ = "Mho(" + std::to_string(t_) + "," + args + ")";
        break;
      case Kind::OmegaCenterProd:
        key_ = "OmegaZ(" + std::to_string(t_) + "," + args + ")";
        break;
      case Kind::Join:
        key_ = "Join(" + args + ")";
        break;
      default:
        break;
    }
    return *this;
  }

  Kind kind_;
  unsigned t_ = 0;
  std::vector<CanonicalExpr> children_;
  std::string key_;
  std::size_t depth_ = 0;
};

/// Evaluates expressions on one group, memoized by key.
class CanonicalEvaluator {
 public:
  explicit CanonicalEvaluator(const FiniteGroup& g)
      : g_(&g), derived_(commutator_subgroup(g)), center_(center(g)) {}

  const FiniteGroup& group() const { return *g_; }

  const Subgroup& operator()(const CanonicalExpr& e) {
    if (auto it = memo_.find(e.key()); it != memo_.end()) return it->second;
    Subgroup s = compute(e);
    verify(is_normal(*g_, s), "canonical expression evaluated to a non-normal subgroup");
    return memo_.emplace(e.key(), std::move(s)).first->second;
  }

 private:
  const Subgroup& checked_n(const CanonicalExpr& n) {
    const Subgroup& s = (*this)(n);
    if (!s.contains(derived_)) throw NotContained("canonical expression: G' is not contained in " + n.key());
    return s;
  }

  Subgroup compute(const CanonicalExpr& e) {
    const FiniteGroup& g = *g_;
    switch (e.kind()) {
      case CanonicalExpr::Kind::Group:
        return whole(g);
      case CanonicalExpr::Kind::Derived:
        return derived_;
      case CanonicalExpr::Kind::Trivial:
        return trivial_subgroup(g);
      case CanonicalExpr::Kind::OmegaRel:
        return omega_relative(g, checked_n(e.children()[0]), e.t());
      case CanonicalExpr::Kind::MhoProd: {
        Subgroup n = checked_n(e.children()[1]);
        Subgroup l = (*this)(e.children()[0]);
        return join(g, agemo(g, l, e.t()), n);
      }
      case CanonicalExpr::Kind::OmegaCenterProd: {
        Subgroup n = checked_n(e.children()[0]);
        return join(g, omega(g, center_, e.t()), n);
      }
      case CanonicalExpr::Kind::Join: {
        std::vector<Subgroup> parts;
        for (const auto& c : e.children()) parts.push_back((*this)(c));
        return join(g, parts);
      }
    }
    throw VerificationFailure("unknown canonical expression kind");
  }

  const FiniteGroup* g_;
  Subgroup derived_, center_;
  std::map<std::string, Subgroup> memo_;
};

inline Subgroup evaluate(const CanonicalExpr& e, const FiniteGroup& g) { return CanonicalEvaluator(g)(e); }

/// All normal-form expressions of nesting depth at most `depth` with
/// t in 1..t_max, sorted by key. Joins are binary at each level (and
/// flattened).
inline std::vector<CanonicalExpr> generate_catalog(std::size_t depth, unsigned t_max) {
  if (depth == 0) throw DimensionMismatch("generate_catalog: depth must be positive");
  if (t_max == 0) throw DimensionMismatch("generate_catalog: t_max must be positive");
  std::map<std::string, CanonicalExpr> all;
  auto add = [&](CanonicalExpr e) {
    if (e.depth() <= depth) all.emplace(e.key(), std::move(e));
  };
  add(CanonicalExpr::group());
  add(CanonicalExpr::derived());
  add(CanonicalExpr::trivial());
  for (std::size_t level = 1; level <= depth; ++level) {
    std::vector<CanonicalExpr> prev;
    for (const auto& [k, e] : all) prev.push_back(e);
    for (const auto& n : prev) {
      if (!n.contains_derived()) continue;
      for (unsigned t = 1; t <= t_max; ++t) {
        add(CanonicalExpr::omega_rel(t, n));
        add(CanonicalExpr::omega_center_prod(t, n));
        for (const auto& l : prev) add(CanonicalExpr::mho_prod(t, l, n));
      }
    }
    for (std::size_t i = 0; i < prev.size(); ++i)
      for (std::size_t j = i + 1; j < prev.size(); ++j) add(CanonicalExpr::join(prev[i], prev[j]));
  }
  std::vector<CanonicalExpr> out;
  for (auto& [k, e] : all) out.push_back(std::move(e));
  return out;
}

}  // namespace mipkit
