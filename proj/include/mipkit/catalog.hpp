#pragma once

// Built-in catalog of small p-groups given by power-commutator presentations.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mipkit/error.hpp"
#include "mipkit/group.hpp"
#include "mipkit/presentation.hpp"

namespace mipkit {

struct CatalogEntry {
  std::string name;
  std::string presentation;
  // expected facts, checked by selftest
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::size_t exponent = 0;
  std::optional<AbelianType> abelian;
};

/// Presentation of A x B: the generators of B follow those of A.
inline PcPresentation product_presentation(const PcPresentation& a, const PcPresentation& b) {
  if (a.p != b.p) throw DimensionMismatch("product_presentation: different primes");
  PcPresentation r = a;
  const std::size_t shift = a.generators();
  auto shifted = [&](Word w) {
    for (auto& s : w) s.gen += shift;
    return w;
  };
  for (std::size_t i = 0; i < b.generators(); ++i) {
    r.relative_orders.push_back(b.relative_orders[i]);
    r.powers.push_back(shifted(b.powers[i]));
  }
  for (const auto& [key, w] : b.comms) r.comms[{key.first + shift, key.second + shift}] = shifted(w);
  return r;
}

namespace detail {

inline PcPresentation cyclic_presentation(unsigned p, std::size_t n) {
  return parse_pc_presentation("p " + std::to_string(p) + "\ngens 1\norder 1 " + std::to_string(n) + "\n");
}

struct CatalogSeed {
  const char* name;
  std::vector<const char*> factors;
  std::size_t center_order, derived_order, exponent;
};

inline std::vector<CatalogEntry> make_catalog() {
  // Non-abelian building blocks. g1 acts on g2 (and g3).
  const std::map<std::string, std::string> blocks = {
      {"D8", "p 2\ngens 2\norder 1 2\norder 2 4\ncomm 2 1 = g2^2\n"},
      {"Q8", "p 2\ngens 2\norder 1 2\norder 2 4\npow 1 = g2^2\ncomm 2 1 = g2^2\n"},
      {"D16", "p 2\ngens 2\norder 1 2\norder 2 8\ncomm 2 1 = g2^6\n"},
      {"Q16", "p 2\ngens 2\norder 1 2\norder 2 8\npow 1 = g2^4\ncomm 2 1 = g2^6\n"},
      {"SD16", "p 2\ngens 2\norder 1 2\norder 2 8\ncomm 2 1 = g2^2\n"},
      {"M16", "p 2\ngens 2\norder 1 2\norder 2 8\ncomm 2 1 = g2^4\n"},
      {"Heisenberg27", "p 3\ngens 3\norder 1 3\norder 2 3\norder 3 3\ncomm 2 1 = g3\n"},
      {"M27", "p 3\ngens 2\norder 1 3\norder 2 9\ncomm 2 1 = g2^3\n"},
  };
  auto block = [&](const std::string& name) -> PcPresentation {
    auto it = blocks.find(name);
    if (it != blocks.end()) return parse_pc_presentation(it->second);
    // cyclic group "C<n>"
    std::size_t n = std::stoul(name.substr(1));
    unsigned p = n % 2 == 0 ? 2 : 3;
    return cyclic_presentation(p, n);
  };

  // name, factors, |Z(G)|, |G'|, exponent
  const std::vector<CatalogSeed> seeds = {
      {"C2", {"C2"}, 2, 1, 2},
      {"C4", {"C4"}, 4, 1, 4},
      {"C8", {"C8"}, 8, 1, 8},
      {"C16", {"C16"}, 16, 1, 16},
      {"C2xC2", {"C2", "C2"}, 4, 1, 2},
      {"C4xC2", {"C4", "C2"}, 8, 1, 4},
      {"C2xC2xC2", {"C2", "C2", "C2"}, 8, 1, 2},
      {"C4xC4", {"C4", "C4"}, 16, 1, 4},
      {"C8xC2", {"C8", "C2"}, 16, 1, 8},
      {"C4xC2xC2", {"C4", "C2", "C2"}, 16, 1, 4},
      {"C2xC2xC2xC2", {"C2", "C2", "C2", "C2"}, 16, 1, 2},
      {"D8", {"D8"}, 2, 2, 4},
      {"Q8", {"Q8"}, 2, 2, 4},
      {"D16", {"D16"}, 2, 4, 8},
      {"Q16", {"Q16"}, 2, 4, 8},
      {"SD16", {"SD16"}, 2, 4, 8},
      {"M16", {"M16"}, 4, 2, 8},
      {"D8xC2", {"D8", "C2"}, 4, 2, 4},
      {"Q8xC2", {"Q8", "C2"}, 4, 2, 4},
      {"D8xC4", {"D8", "C4"}, 8, 2, 4},
      {"Q8xC4", {"Q8", "C4"}, 8, 2, 4},
      {"D8xC4xC2", {"D8", "C4", "C2"}, 16, 2, 4},
      {"Q8xC4xC2", {"Q8", "C4", "C2"}, 16, 2, 4},
      {"C3", {"C3"}, 3, 1, 3},
      {"C9", {"C9"}, 9, 1, 9},
      {"C27", {"C27"}, 27, 1, 27},
      {"C3xC3", {"C3", "C3"}, 9, 1, 3},
      {"C9xC3", {"C9", "C3"}, 27, 1, 9},
      {"C3xC3xC3", {"C3", "C3", "C3"}, 27, 1, 3},
      {"C9xC9", {"C9", "C9"}, 81, 1, 9},
      {"C27xC3", {"C27", "C3"}, 81, 1, 27},
      {"C9xC3xC3", {"C9", "C3", "C3"}, 81, 1, 9},
      {"C27xC9", {"C27", "C9"}, 243, 1, 27},
      {"C9xC9xC3", {"C9", "C9", "C3"}, 243, 1, 9},
      {"Heisenberg27", {"Heisenberg27"}, 3, 3, 3},
      {"M27", {"M27"}, 3, 3, 9},
      {"Heisenberg27xC3", {"Heisenberg27", "C3"}, 9, 3, 3},
      {"M27xC3", {"M27", "C3"}, 9, 3, 9},
      {"Heisenberg27xC9", {"Heisenberg27", "C9"}, 27, 3, 9},
      {"M27xC9", {"M27", "C9"}, 27, 3, 9},
  };

  std::vector<CatalogEntry> out;
  for (const auto& s : seeds) {
    PcPresentation pres = block(s.factors.front());
    for (std::size_t k = 1; k < s.factors.size(); ++k) pres = product_presentation(pres, block(s.factors[k]));
    CatalogEntry e;
    e.name = s.name;
    e.presentation = format_pc_presentation(pres);
    e.order = pres.order();
    e.center_order = s.center_order;
    e.derived_order = s.derived_order;
    e.exponent = s.exponent;
    if (s.derived_order == 1) {
      AbelianType t;
      for (const char* f : s.factors) t.factors.push_back(std::stoul(std::string(f).substr(1)));
      std::sort(t.factors.rbegin(), t.factors.rend());
      e.abelian = t;
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = detail::make_catalog();
  return catalog;
}

inline const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : builtin_catalog())
    if (e.name == name) return &e;
  return nullptr;
}

inline std::shared_ptr<const FiniteGroup> build_entry(const CatalogEntry& e) {
  return build_group(parse_pc_presentation(e.presentation), e.name);
}

/// Catalog group by name; throws ParseError for unknown names.
inline std::shared_ptr<const FiniteGroup> catalog_group(const std::string& name) {
  const CatalogEntry* e = find_catalog_entry(name);
  if (!e) throw ParseError("unknown catalog group '" + name + "'");
  return build_entry(*e);
}

/// Checks every expected fact of an entry; returns the failures.
inline std::vector<std::string> selftest_entry(const CatalogEntry& e) {
  std::vector<std::string> failures;
  std::shared_ptr<const FiniteGroup> g;
  try {
    g = build_entry(e);
  } catch (const Error& err) {
    return {e.name + ": presentation does not build: " + err.what()};
  }
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(e.name + ": " + what);
  };
  expect(g->order() == e.order, "order");
  expect(center(*g).order() == e.center_order, "center order");
  expect(commutator_subgroup(*g).order() == e.derived_order, "derived subgroup order");
  expect(g->exponent() == e.exponent, "exponent");
  expect(g->is_abelian() == e.abelian.has_value(), "commutativity");
  if (e.abelian && g->is_abelian()) expect(abelian_type(*g) == *e.abelian, "abelian type");
  return failures;
}

}  // namespace mipkit
