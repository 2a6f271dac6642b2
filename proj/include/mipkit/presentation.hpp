#pragma once

// Power-commutator presentations.
//
// Text format, one statement per line (blank lines and '#' comments ignored):
//
//   p <prime>
//   gens <d>
//   order <i> <p^e>              relative order of g_i
//   pow <i> = <word>             g_i^(relative order) = word in g_{i+1..d}
//   comm <j> <i> = <word>        [g_j, g_i] = word in g_{i+1..d}, j > i
//
// <word> is `1` or factors `g<k>` / `g<k>^<n>` joined by `*`. Omitted pow and
// comm relations are trivial. Commutators are [x, y] = x^-1 y^-1 x y.
//
// Elements are numbered by their normal form g_1^a_1 ... g_d^a_d in mixed
// radix with a_1 most significant, so the identity is element 0.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mipkit/error.hpp"
#include "mipkit/group.hpp"

namespace mipkit {

/// Generator index (0-based) raised to an exponent.
struct Syllable {
  std::size_t gen;
  long exp;
  bool operator==(const Syllable&) const = default;
};
using Word = std::vector<Syllable>;

struct PcPresentation {
  unsigned p = 2;
  std::vector<std::size_t> relative_orders;
  std::vector<Word> powers;                                   // powers[i]
  std::map<std::pair<std::size_t, std::size_t>, Word> comms;  // (j, i), j > i

  std::size_t generators() const { return relative_orders.size(); }
  std::size_t order() const {
    std::size_t n = 1;
    for (auto m : relative_orders) n *= m;
    return n;
  }

  /// Exponent vector of an element index.
  std::vector<std::size_t> exponents(Elem x) const {
    std::vector<std::size_t> a(generators());
    for (std::size_t i = generators(); i-- > 0;) {
      a[i] = x % relative_orders[i];
      x = static_cast<Elem>(x / relative_orders[i]);
    }
    return a;
  }

  Elem index(const std::vector<std::size_t>& a) const {
    std::size_t x = 0;
    for (std::size_t i = 0; i < generators(); ++i) x = x * relative_orders[i] + a[i];
    return static_cast<Elem>(x);
  }

  Elem generator(std::size_t i) const {
    std::vector<std::size_t> a(generators(), 0);
    a[i] = 1;
    return index(a);
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline long parse_long(const std::string& s, const std::string& ctx) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw ParseError(ctx + ": expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParseError(ctx + ": expected an integer, got '" + s + "'");
  return v;
}

inline Word parse_word(const std::string& text, std::size_t d, const std::string& ctx) {
  std::string w = trim(text);
  if (w == "1") return {};
  if (w.empty()) throw ParseError(ctx + ": empty word");
  Word out;
  std::stringstream ss(w);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    factor = trim(factor);
    if (factor.size() < 2 || factor[0] != 'g') throw ParseError(ctx + ": bad factor '" + factor + "'");
    auto caret = factor.find('^');
    long gen = parse_long(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), ctx);
    long exp = caret == std::string::npos ? 1 : parse_long(factor.substr(caret + 1), ctx);
    if (gen < 1 || static_cast<std::size_t>(gen) > d) throw ParseError(ctx + ": generator out of range in '" + factor + "'");
    out.push_back({static_cast<std::size_t>(gen - 1), exp});
  }
  return out;
}

inline std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += "g" + std::to_string(w[k].gen + 1);
    if (w[k].exp != 1) s += "^" + std::to_string(w[k].exp);
  }
  return s;
}

}  // namespace detail

inline PcPresentation parse_pc_presentation(const std::string& text) {
  PcPresentation pres;
  std::stringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_p = false, have_d = false;
  std::size_t d = 0;
  std::vector<bool> have_order;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const std::string ctx = "line " + std::to_string(lineno);
    std::string lhs = line, rhs;
    auto eq = line.find('=');
    if (eq != std::string::npos) {
      lhs = detail::trim(line.substr(0, eq));
      rhs = line.substr(eq + 1);
    }
    std::stringstream ls(lhs);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    const std::string& kw = tok[0];
    if (kw == "p") {
      if (tok.size() != 2 || have_p || eq != std::string::npos) throw ParseError(ctx + ": expected 'p <prime>'");
      long p = detail::parse_long(tok[1], ctx);
      if (!(p == 2 || p == 3 || p == 5 || p == 7)) throw ParseError(ctx + ": unsupported prime");
      pres.p = static_cast<unsigned>(p);
      have_p = true;
    } else if (kw == "gens") {
      if (!have_p || have_d || tok.size() != 2) throw ParseError(ctx + ": expected 'gens <d>' after 'p'");
      long dd = detail::parse_long(tok[1], ctx);
      if (dd < 0 || dd > 32) throw ParseError(ctx + ": bad generator count");
      d = static_cast<std::size_t>(dd);
      pres.relative_orders.assign(d, 0);
      pres.powers.assign(d, {});
      have_order.assign(d, false);
      have_d = true;
    } else if (!have_d) {
      throw ParseError(ctx + ": 'p' and 'gens' must come first");
    } else if (kw == "order") {
      if (tok.size() != 3) throw ParseError(ctx + ": expected 'order <i> <p^e>'");
      long i = detail::parse_long(tok[1], ctx), m = detail::parse_long(tok[2], ctx);
      if (i < 1 || static_cast<std::size_t>(i) > d) throw ParseError(ctx + ": generator out of range");
      auto e = m > 1 ? log_p(static_cast<std::size_t>(m), pres.p) : std::nullopt;
      if (!e) throw ParseError(ctx + ": relative order must be a positive power of p");
      pres.relative_orders[i - 1] = static_cast<std::size_t>(m);
      have_order[i - 1] = true;
    } else if (kw == "pow") {
      if (tok.size() != 2 || eq == std::string::npos) throw ParseError(ctx + ": expected 'pow <i> = <word>'");
      long i = detail::parse_long(tok[1], ctx);
      if (i < 1 || static_cast<std::size_t>(i) > d) throw ParseError(ctx + ": generator out of range");
      Word w = detail::parse_word(rhs, d, ctx);
      for (auto& s : w)
        if (s.gen <= static_cast<std::size_t>(i - 1)) throw ParseError(ctx + ": power word must use later generators");
      pres.powers[i - 1] = std::move(w);
    } else if (kw == "comm") {
      if (tok.size() != 3 || eq == std::string::npos) throw ParseError(ctx + ": expected 'comm <j> <i> = <word>'");
      long j = detail::parse_long(tok[1], ctx), i = detail::parse_long(tok[2], ctx);
      if (i < 1 || j <= i || static_cast<std::size_t>(j) > d) throw ParseError(ctx + ": need 1 <= i < j <= d");
      Word w = detail::parse_word(rhs, d, ctx);
      for (auto& s : w)
        if (s.gen <= static_cast<std::size_t>(i - 1)) throw ParseError(ctx + ": commutator word must use generators after g_i");
      pres.comms[{static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)}] = std::move(w);
    } else {
      throw ParseError(ctx + ": unknown statement '" + kw + "'");
    }
  }
  if (!have_p || !have_d) throw ParseError("presentation must declare 'p' and 'gens'");
  for (std::size_t i = 0; i < d; ++i)
    if (!have_order[i]) throw ParseError("missing 'order' line for generator " + std::to_string(i + 1));
  return pres;
}

/// Canonical text of a presentation; parse_pc_presentation inverts it.
inline std::string format_pc_presentation(const PcPresentation& pres) {
  std::string s = "p " + std::to_string(pres.p) + "\ngens " + std::to_string(pres.generators()) + "\n";
  for (std::size_t i = 0; i < pres.generators(); ++i)
    s += "order " + std::to_string(i + 1) + " " + std::to_string(pres.relative_orders[i]) + "\n";
  for (std::size_t i = 0; i < pres.generators(); ++i)
    if (!pres.powers[i].empty()) s += "pow " + std::to_string(i + 1) + " = " + detail::format_word(pres.powers[i]) + "\n";
  for (const auto& [key, w] : pres.comms)
    if (!w.empty())
      s += "comm " + std::to_string(key.first + 1) + " " + std::to_string(key.second + 1) + " = " +
           detail::format_word(w) + "\n";
  return s;
}

namespace detail {

/// Evaluates a word in a level group whose generators g_k (k >= first) sit at gen_elem[k].
inline Elem eval_word(const FiniteGroup& h, const std::vector<Elem>& gen_elem, const Word& w) {
  Elem r = 0;
  for (const auto& s : w) {
    Elem g = gen_elem[s.gen];
    long e = s.exp;
    if (e < 0) {
      g = h.inv(g);
      e = -e;
    }
    r = h.mul(r, h.pow(g, static_cast<std::size_t>(e)));
  }
  return r;
}

}  // namespace detail

/// Builds the group as a tower of cyclic extensions G_i = <g_i> G_{i+1}, where
/// g_i acts on G_{i+1} by conjugation. Every consistency condition of the
/// extension is checked, and the final table is checked for associativity.
inline std::shared_ptr<const FiniteGroup> build_group(const PcPresentation& pres, const std::string& provenance = {}) {
  const std::size_t d = pres.generators();
  const unsigned p = pres.p;
  if (pres.order() > order_cap(p))
    throw CapExceeded("presentation defines a group of order " + std::to_string(pres.order()) + ", above the cap " +
                      std::to_string(order_cap(p)));

  auto level = std::make_shared<const FiniteGroup>(FiniteGroup::trivial(p));
  for (std::size_t i = d; i-- > 0;) {
    const FiniteGroup& h = *level;
    const std::size_t hn = h.order();
    const std::size_t m = pres.relative_orders[i];

    // generator g_k (k > i) inside the current level group
    std::vector<Elem> gen_elem(d, 0);
    {
      std::size_t stride = hn;
      for (std::size_t k = i + 1; k < d; ++k) {
        stride /= pres.relative_orders[k];
        gen_elem[k] = static_cast<Elem>(stride);
      }
    }
    // action σ(h) = g_i^-1 h g_i on generators: g_k [g_k, g_i]
    std::vector<Elem> sigma_gen(d, 0);
    for (std::size_t k = i + 1; k < d; ++k) {
      auto it = pres.comms.find({k, i});
      Elem c = it == pres.comms.end() ? 0 : detail::eval_word(h, gen_elem, it->second);
      sigma_gen[k] = h.mul(gen_elem[k], c);
    }
    // extend σ to all of G_{i+1} through normal forms
    std::vector<Elem> sigma(hn);
    for (Elem x = 0; x < hn; ++x) {
      Elem rem = x, img = 0;
      std::size_t stride = hn;
      for (std::size_t k = i + 1; k < d; ++k) {
        stride /= pres.relative_orders[k];
        std::size_t a = rem / stride;
        rem = static_cast<Elem>(rem % stride);
        img = h.mul(img, h.pow(sigma_gen[k], a));
      }
      sigma[x] = img;
    }
    Elem w = detail::eval_word(h, gen_elem, pres.powers[i]);

    const std::string ctx = "inconsistent presentation at generator " + std::to_string(i + 1) + ": ";
    std::vector<bool> hit(hn, false);
    for (Elem x = 0; x < hn; ++x) {
      if (hit[sigma[x]]) throw ParseError(ctx + "conjugation action is not bijective");
      hit[sigma[x]] = true;
      for (Elem y = 0; y < hn; ++y)
        if (sigma[h.mul(x, y)] != h.mul(sigma[x], sigma[y]))
          throw ParseError(ctx + "conjugation action is not a homomorphism");
    }
    if (sigma[w] != w) throw ParseError(ctx + "power relation is not fixed by the generator");

    // σ^b for b < m, then σ^m must be conjugation by w
    std::vector<std::vector<Elem>> sigma_pow(m, std::vector<Elem>(hn));
    for (Elem x = 0; x < hn; ++x) sigma_pow[0][x] = x;
    for (std::size_t b = 1; b < m; ++b)
      for (Elem x = 0; x < hn; ++x) sigma_pow[b][x] = sigma[sigma_pow[b - 1][x]];
    for (Elem x = 0; x < hn; ++x)
      if (sigma[sigma_pow[m - 1][x]] != h.conj(x, w)) throw ParseError(ctx + "power relation conflicts with the action");

    const std::size_t n = m * hn;
    std::vector<Elem> table(n * n);
    for (std::size_t a = 0; a < m; ++a)
      for (Elem x = 0; x < hn; ++x)
        for (std::size_t b = 0; b < m; ++b)
          for (Elem y = 0; y < hn; ++y) {
            std::size_t s = a + b;
            Elem tail = h.mul(sigma_pow[b][x], y);
            if (s >= m) {
              s -= m;
              tail = h.mul(w, tail);
            }
            table[(a * hn + x) * n + (b * hn + y)] = static_cast<Elem>(s * hn + tail);
          }
    level = std::make_shared<const FiniteGroup>(p, std::move(table), provenance);
  }
  if (!level->is_associative()) throw ParseError("inconsistent presentation: table is not associative");
  return level;
}

inline std::shared_ptr<const FiniteGroup> from_pc_presentation(const std::string& text, const std::string& provenance = {}) {
  return build_group(parse_pc_presentation(text), provenance.empty() ? text : provenance);
}

}  // namespace mipkit
