#pragma once

// Dense linear algebra over the prime fields F_2, F_3, F_5, F_7.
//
// Vectors are rows; a linear map F_p^m -> F_p^n is an m x n matrix whose
// i-th row is the image of the i-th unit vector (x |-> x * M).

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mipkit/error.hpp"

namespace mipkit {

using residue = std::uint8_t;

inline bool is_supported_prime(unsigned p) { return p == 2 || p == 3 || p == 5 || p == 7; }

inline void require_prime(unsigned p) {
  if (!is_supported_prime(p)) throw DimensionMismatch("unsupported prime " + std::to_string(p));
}

inline residue inv_mod(unsigned p, residue a) {
  for (unsigned x = 1; x < p; ++x)
    if ((x * a) % p == 1) return static_cast<residue>(x);
  throw Error("zero has no inverse");
}

/// A coordinate vector over F_p.
class FpVector {
 public:
  FpVector() = default;
  FpVector(unsigned p, std::size_t n) : p_(p), v_(n, 0) { require_prime(p); }
  FpVector(unsigned p, std::vector<residue> coords) : p_(p), v_(std::move(coords)) {
    require_prime(p);
    for (auto& c : v_) c = static_cast<residue>(c % p);
  }
  FpVector(unsigned p, std::initializer_list<int> coords) : p_(p) {
    require_prime(p);
    v_.reserve(coords.size());
    for (int c : coords) v_.push_back(static_cast<residue>(((c % int(p)) + int(p)) % int(p)));
  }

  static FpVector unit(unsigned p, std::size_t n, std::size_t i) {
    FpVector e(p, n);
    e.v_.at(i) = 1;
    return e;
  }

  unsigned p() const { return p_; }
  std::size_t size() const { return v_.size(); }
  residue operator[](std::size_t i) const { return v_[i]; }
  void set(std::size_t i, unsigned value) { v_[i] = static_cast<residue>(value % p_); }
  std::span<const residue> coords() const { return v_; }
  std::span<residue> coords_mut() { return v_; }

  bool is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](residue c) { return c == 0; });
  }

  /// First nonzero coordinate, or size() for the zero vector.
  std::size_t leading() const {
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (v_[i]) return i;
    return v_.size();
  }

  /// this += f * other, touching coordinates from `from` on.
  void axpy(unsigned f, const FpVector& other, std::size_t from = 0) {
    check_same(other);
    f %= p_;
    if (f == 0) return;
    const residue* src = other.v_.data();
    residue* dst = v_.data();
    const std::size_t n = v_.size();
    if (p_ == 2) {
      for (std::size_t i = from; i < n; ++i) dst[i] ^= src[i];
      return;
    }
    if (p_ == 3) {
      for (std::size_t i = from; i < n; ++i) dst[i] = static_cast<residue>((dst[i] + f * src[i]) % 3u);
      return;
    }
    for (std::size_t i = from; i < n; ++i) dst[i] = static_cast<residue>((dst[i] + f * src[i]) % p_);
  }

  void scale(unsigned f) {
    f %= p_;
    for (auto& c : v_) c = static_cast<residue>((c * f) % p_);
  }

  FpVector& operator+=(const FpVector& o) {
    axpy(1, o);
    return *this;
  }
  FpVector& operator-=(const FpVector& o) {
    axpy(p_ - 1, o);
    return *this;
  }
  friend FpVector operator+(FpVector a, const FpVector& b) { return a += b; }
  friend FpVector operator-(FpVector a, const FpVector& b) { return a -= b; }
  friend FpVector operator*(unsigned f, FpVector a) {
    a.scale(f);
    return a;
  }

  bool operator==(const FpVector&) const = default;
  auto operator<=>(const FpVector&) const = default;

  /// Coefficient sum.
  residue sum() const {
    unsigned s = 0;
    for (auto c : v_) s += c;
    return static_cast<residue>(s % p_);
  }

 private:
  void check_same(const FpVector& o) const {
    if (o.p_ != p_ || o.v_.size() != v_.size()) throw DimensionMismatch("vector shape mismatch");
  }

  unsigned p_ = 2;
  std::vector<residue> v_;
};

/// A dense m x n matrix over F_p, stored as rows.
class FpMatrix {
 public:
  FpMatrix(unsigned p, std::size_t rows, std::size_t cols) : p_(p), cols_(cols), rows_(rows, FpVector(p, cols)) {}

  static FpMatrix from_rows(unsigned p, std::size_t cols, std::vector<FpVector> rows) {
    FpMatrix m(p, 0, cols);
    for (auto& r : rows) {
      if (r.p() != p || r.size() != cols) throw DimensionMismatch("row length mismatch in matrix");
      m.rows_.push_back(std::move(r));
    }
    return m;
  }

  static FpMatrix from_ints(unsigned p, std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<FpVector> rs;
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    for (auto r : rows) {
      if (r.size() != cols) throw DimensionMismatch("row length mismatch in matrix");
      rs.emplace_back(p, r);
    }
    return from_rows(p, cols, std::move(rs));
  }

  static FpMatrix identity(unsigned p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i, 1);
    return m;
  }

  unsigned p() const { return p_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const FpVector& row(std::size_t i) const { return rows_[i]; }
  FpVector& row(std::size_t i) { return rows_[i]; }
  const std::vector<FpVector>& row_list() const { return rows_; }
  residue at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  void set(std::size_t i, std::size_t j, unsigned v) { rows_[i].set(j, v); }

  /// x * M.
  FpVector apply(const FpVector& x) const {
    if (x.size() != rows() || x.p() != p_) throw DimensionMismatch("vector does not match matrix domain");
    FpVector y(p_, cols_);
    for (std::size_t i = 0; i < rows(); ++i)
      if (x[i]) y.axpy(x[i], rows_[i]);
    return y;
  }

  /// this followed by other (x |-> x * this * other).
  FpMatrix then(const FpMatrix& other) const {
    if (other.rows() != cols_ || other.p() != p_) throw DimensionMismatch("matrix composition shape mismatch");
    FpMatrix out(p_, 0, other.cols());
    for (const auto& r : rows_) out.rows_.push_back(other.apply(r));
    return out;
  }

  bool operator==(const FpMatrix&) const = default;

 private:
  unsigned p_;
  std::size_t cols_;
  std::vector<FpVector> rows_;
};

/// Incremental echelon form. Rows have distinct pivots; reduced() returns the
/// canonical RREF basis.
class EchelonBuilder {
 public:
  EchelonBuilder(unsigned p, std::size_t n) : p_(p), n_(n), pivot_row_(n, -1) { require_prime(p); }

  unsigned p() const { return p_; }
  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces v in place against the current rows; v becomes zero iff it lies in the span.
  void reduce(FpVector& v) const {
    for (std::size_t c = 0; c < n_; ++c) {
      if (v[c] == 0 || pivot_row_[c] < 0) continue;
      const FpVector& r = rows_[static_cast<std::size_t>(pivot_row_[c])];
      v.axpy(p_ - v[c], r, c);
    }
  }

  bool contains(FpVector v) const {
    check(v);
    reduce(v);
    return v.is_zero();
  }

  /// Returns true when v enlarged the span.
  bool insert(FpVector v) {
    check(v);
    reduce(v);
    std::size_t lead = v.leading();
    if (lead == n_) return false;
    v.scale(inv_mod(p_, v[lead]));
    pivot_row_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  bool full() const { return rows_.size() == n_; }

  /// Canonical reduced row echelon basis, sorted by pivot.
  std::vector<FpVector> reduced() const {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < n_; ++c)
      if (pivot_row_[c] >= 0) pivots.push_back(c);
    std::vector<FpVector> out;
    out.reserve(pivots.size());
    for (std::size_t c : pivots) out.push_back(rows_[static_cast<std::size_t>(pivot_row_[c])]);
    // back substitution: clear every pivot column outside its own row
    for (std::size_t k = out.size(); k-- > 0;) {
      std::size_t c = pivots[k];
      for (std::size_t i = 0; i < k; ++i)
        if (out[i][c]) out[i].axpy(p_ - out[i][c], out[k], c);
    }
    return out;
  }

 private:
  void check(const FpVector& v) const {
    if (v.p() != p_ || v.size() != n_) throw DimensionMismatch("vector does not match ambient space");
  }

  unsigned p_;
  std::size_t n_;
  std::vector<int> pivot_row_;
  std::vector<FpVector> rows_;
};

/// A subspace of F_p^n held as its canonical reduced row echelon basis.
/// Two subspaces are equal as sets iff their bases are identical.
class Subspace {
 public:
  Subspace(unsigned p, std::size_t n) : p_(p), n_(n) { require_prime(p); }

  static Subspace zero(unsigned p, std::size_t n) { return Subspace(p, n); }
  static Subspace full(unsigned p, std::size_t n) {
    Subspace s(p, n);
    for (std::size_t i = 0; i < n; ++i) {
      s.basis_.push_back(FpVector::unit(p, n, i));
      s.pivots_.push_back(i);
    }
    return s;
  }

  static Subspace span(unsigned p, std::size_t n, std::span<const FpVector> vectors) {
    EchelonBuilder b(p, n);
    for (const auto& v : vectors) {
      if (b.full()) break;
      b.insert(v);
    }
    return from_builder(b);
  }
  static Subspace span(unsigned p, std::size_t n, const std::vector<FpVector>& vectors) {
    return span(p, n, std::span<const FpVector>(vectors));
  }

  static Subspace from_builder(const EchelonBuilder& b) {
    Subspace s(b.p(), b.ambient());
    s.basis_ = b.reduced();
    for (const auto& r : s.basis_) s.pivots_.push_back(r.leading());
    return s;
  }

  unsigned p() const { return p_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<FpVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == n_; }

  /// Normal form of v modulo this subspace: zero at every pivot column.
  FpVector reduce(FpVector v) const {
    check(v);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      std::size_t c = pivots_[k];
      if (v[c]) v.axpy(p_ - v[c], basis_[k]);
    }
    return v;
  }

  bool contains(const FpVector& v) const { return reduce(v).is_zero(); }

  bool contains(const Subspace& other) const {
    same_ambient(other);
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const FpVector& v) { return contains(v); });
  }

  /// Coordinates of v (which must lie in the subspace) with respect to basis().
  FpVector coordinates(const FpVector& v) const {
    if (!contains(v)) throw NotContained("vector is not in the subspace");
    FpVector c(p_, basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) c.set(k, v[pivots_[k]]);
    return c;
  }

  EchelonBuilder builder() const {
    EchelonBuilder b(p_, n_);
    for (const auto& r : basis_) b.insert(r);
    return b;
  }

  void same_ambient(const Subspace& o) const {
    if (o.p_ != p_ || o.n_ != n_) throw DimensionMismatch("subspaces live in different ambient spaces");
  }

  bool operator==(const Subspace& o) const { return p_ == o.p_ && n_ == o.n_ && basis_ == o.basis_; }

 private:
  void check(const FpVector& v) const {
    if (v.p() != p_ || v.size() != n_) throw DimensionMismatch("vector does not match ambient space");
  }

  unsigned p_;
  std::size_t n_;
  std::vector<FpVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical span of the rows of M.
inline Subspace rref(const FpMatrix& m) { return Subspace::span(m.p(), m.cols(), m.row_list()); }

inline Subspace sum(const Subspace& u, const Subspace& v) {
  u.same_ambient(v);
  EchelonBuilder b = u.builder();
  for (const auto& r : v.basis()) b.insert(r);
  return Subspace::from_builder(b);
}

/// {x : x * M = 0}.
inline Subspace kernel(const FpMatrix& m) {
  const unsigned p = m.p();
  const std::size_t rows = m.rows(), cols = m.cols();
  // Row-reduce [M | I]; rows whose M-part vanishes span the kernel.
  EchelonBuilder b(p, cols + rows);
  std::vector<FpVector> kernel_vectors;
  for (std::size_t i = 0; i < rows; ++i) {
    FpVector aug(p, cols + rows);
    for (std::size_t j = 0; j < cols; ++j) aug.set(j, m.at(i, j));
    aug.set(cols + i, 1);
    b.reduce(aug);
    if (aug.leading() >= cols) {
      FpVector k(p, rows);
      for (std::size_t j = 0; j < rows; ++j) k.set(j, aug[cols + j]);
      kernel_vectors.push_back(std::move(k));
    } else {
      b.insert(std::move(aug));
    }
  }
  return Subspace::span(p, rows, kernel_vectors);
}

inline Subspace image(const FpMatrix& m) { return rref(m); }

/// {x : x * M ∈ W}.
inline Subspace preimage(const FpMatrix& m, const Subspace& w) {
  if (w.ambient_dim() != m.cols() || w.p() != m.p()) throw DimensionMismatch("preimage target does not match codomain");
  std::vector<FpVector> rows;
  rows.reserve(m.rows());
  for (const auto& r : m.row_list()) rows.push_back(w.reduce(r));
  return kernel(FpMatrix::from_rows(m.p(), m.cols(), std::move(rows)));
}

/// Image of a subspace under x |-> x * M.
inline Subspace map_subspace(const FpMatrix& m, const Subspace& u) {
  if (u.ambient_dim() != m.rows()) throw DimensionMismatch("subspace does not match matrix domain");
  std::vector<FpVector> imgs;
  imgs.reserve(u.dim());
  for (const auto& r : u.basis()) imgs.push_back(m.apply(r));
  return Subspace::span(m.p(), m.cols(), imgs);
}

/// Solves x * B_U = y * B_V on the stacked bases.
inline Subspace intersect(const Subspace& u, const Subspace& v) {
  u.same_ambient(v);
  const std::size_t n = u.ambient_dim();
  std::vector<FpVector> stacked(u.basis());
  stacked.insert(stacked.end(), v.basis().begin(), v.basis().end());
  Subspace k = kernel(FpMatrix::from_rows(u.p(), n, std::move(stacked)));
  std::vector<FpVector> vecs;
  for (const auto& x : k.basis()) {
    FpVector w(u.p(), n);
    for (std::size_t i = 0; i < u.dim(); ++i)
      if (x[i]) w.axpy(x[i], u.basis()[i]);
    vecs.push_back(std::move(w));
  }
  return Subspace::span(u.p(), n, vecs);
}

/// dim V - dim U for U ⊆ V.
inline std::size_t quotient_dim(const Subspace& u, const Subspace& v) {
  u.same_ambient(v);
  if (!v.contains(u)) throw NotContained("quotient_dim: U is not contained in V");
  return v.dim() - u.dim();
}

/// The quotient V/U with a canonical basis of coset representatives: the
/// reduced echelon basis of the normal forms of V modulo U.
class QuotientSpace {
 public:
  QuotientSpace(Subspace v, Subspace u) : v_(std::move(v)), u_(std::move(u)), reps_(u_.p(), u_.ambient_dim()) {
    u_.same_ambient(v_);
    if (!v_.contains(u_)) throw NotContained("quotient space: U is not contained in V");
    std::vector<FpVector> nf;
    for (const auto& r : v_.basis()) nf.push_back(u_.reduce(r));
    reps_ = Subspace::span(u_.p(), u_.ambient_dim(), nf);
  }

  std::size_t dim() const { return reps_.dim(); }
  unsigned p() const { return u_.p(); }
  const Subspace& numerator() const { return v_; }
  const Subspace& denominator() const { return u_; }
  /// Canonical representative of the i-th basis coset.
  const FpVector& rep(std::size_t i) const { return reps_.basis()[i]; }

  bool contains(const FpVector& x) const { return v_.contains(x); }

  /// Coordinates of x + U; x must lie in V.
  FpVector coords(const FpVector& x) const {
    if (!v_.contains(x)) throw NotContained("element is not in the quotient numerator");
    return reps_.coordinates(u_.reduce(x));
  }

  FpVector lift(const FpVector& c) const {
    FpVector x(p(), u_.ambient_dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (c[i]) x.axpy(c[i], rep(i));
    return x;
  }

 private:
  Subspace v_;
  Subspace u_;
  Subspace reps_;
};

inline std::size_t rank(const FpMatrix& m) { return rref(m).dim(); }

}  // namespace mipkit
