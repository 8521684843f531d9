#pragma once

// Truncated even cohomology H⁰⊕H²⊕H⁴⊕H⁶ of a threefold, modelled through its
// triple-intersection tensor, and the restricted Picard lattice of an
// anticanonical K3 surface.
//
// H⁴ classes are stored as functionals on H²: a4[i] = ∫ (H⁴-part)·e_i.
// Poincaré duality makes this faithful over ℚ, and every product needed by
// Riemann–Roch then only involves the tensor d[i][j][k] = ∫ e_i·e_j·e_k.

#include "mukaikit/linalg.hpp"
#include "mukaikit/rational.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mukaikit {

using IntVector = std::vector<std::int64_t>;

inline RationalVector to_rational(const IntVector& v) { return RationalVector(v.begin(), v.end()); }

class ThreefoldRing {
 public:
  struct Data {
    std::string name;
    std::vector<std::string> basis_labels;
    std::vector<std::int64_t> triple;  // row-major rho³ entries
    IntVector c1_coords;
    IntVector c2_values;
    std::int64_t chi_top = 0;
    std::int64_t h12 = 0;
  };

  /// Validates and builds a ring; throws ValidationError naming the failed check.
  explicit ThreefoldRing(Data data) : d_(std::move(data)) {
    const std::size_t n = d_.basis_labels.size();
    if (n == 0) throw ValidationError("ring '" + d_.name + "': rho must be at least 1");
    if (std::set<std::string>(d_.basis_labels.begin(), d_.basis_labels.end()).size() != n)
      throw ValidationError("ring '" + d_.name + "': basis labels must be distinct");
    if (d_.triple.size() != n * n * n)
      throw ValidationError("ring '" + d_.name + "': triple tensor must have rho^3 entries");
    if (d_.c1_coords.size() != n || d_.c2_values.size() != n)
      throw ValidationError("ring '" + d_.name + "': c1 and c2_values must have rho entries");
    if (d_.h12 < 0) throw ValidationError("ring '" + d_.name + "': h12 must be nonnegative");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          auto v = triple(i, j, k);
          if (v != triple(j, i, k) || v != triple(i, k, j) || v != triple(k, j, i))
            throw ValidationError("ring '" + d_.name + "': triple tensor is not symmetric");
        }
    if (is_calabi_yau() && d_.chi_top != 2 * (static_cast<std::int64_t>(n) - d_.h12))
      throw ValidationError("ring '" + d_.name + "': chi_top = " + std::to_string(d_.chi_top) +
                            " but 2*(rho - h12) = " +
                            std::to_string(2 * (static_cast<std::int64_t>(n) - d_.h12)));
  }

  const std::string& name() const { return d_.name; }
  std::size_t rho() const { return d_.basis_labels.size(); }
  const std::vector<std::string>& basis_labels() const { return d_.basis_labels; }
  std::int64_t triple(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t n = rho();
    return d_.triple[(i * n + j) * n + k];
  }
  const std::vector<std::int64_t>& triple_flat() const { return d_.triple; }
  const IntVector& c1_coords() const { return d_.c1_coords; }
  const IntVector& c2_values() const { return d_.c2_values; }
  std::int64_t chi_top() const { return d_.chi_top; }
  std::int64_t h12() const { return d_.h12; }
  const Data& data() const { return d_; }

  bool is_calabi_yau() const {
    for (auto c : d_.c1_coords)
      if (c != 0) return false;
    return true;
  }

  /// ∫ c₁·c₂ of the tangent bundle.
  std::int64_t c1_c2() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rho(); ++i) s += d_.c1_coords[i] * d_.c2_values[i];
    return s;
  }

  friend bool operator==(const ThreefoldRing& a, const ThreefoldRing& b) {
    const auto& x = a.d_;
    const auto& y = b.d_;
    return x.name == y.name && x.basis_labels == y.basis_labels && x.triple == y.triple &&
           x.c1_coords == y.c1_coords && x.c2_values == y.c2_values && x.chi_top == y.chi_top &&
           x.h12 == y.h12;
  }

 private:
  Data d_;
};

/// Element of H⁰⊕H²⊕H⁴⊕H⁶ with exact rational coordinates.
struct GradedClass {
  Rational a0;
  RationalVector a2;
  RationalVector a4;
  Rational a6;

  static GradedClass zero(std::size_t rho) { return {0, RationalVector(rho), RationalVector(rho), 0}; }
  static GradedClass unit(std::size_t rho) { return {1, RationalVector(rho), RationalVector(rho), 0}; }
  static GradedClass divisor(const RationalVector& d) { return {0, d, RationalVector(d.size()), 0}; }

  std::size_t rho() const { return a2.size(); }

  GradedClass& operator+=(const GradedClass& o) {
    check_same(o);
    a0 += o.a0;
    for (std::size_t i = 0; i < a2.size(); ++i) {
      a2[i] += o.a2[i];
      a4[i] += o.a4[i];
    }
    a6 += o.a6;
    return *this;
  }
  GradedClass& operator-=(const GradedClass& o) { return *this += o * Rational(-1); }

  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator-(GradedClass a) { return a * Rational(-1); }
  friend GradedClass operator*(GradedClass a, const Rational& s) {
    a.a0 *= s;
    for (auto& x : a.a2) x *= s;
    for (auto& x : a.a4) x *= s;
    a.a6 *= s;
    return a;
  }
  friend GradedClass operator*(const Rational& s, GradedClass a) { return std::move(a) * s; }
  friend bool operator==(const GradedClass&, const GradedClass&) = default;

  void check_same(const GradedClass& o) const {
    if (o.a2.size() != a2.size() || o.a4.size() != a4.size())
      throw ValidationError("graded classes belong to rings of different rank");
  }
};

inline void check_in_ring(const ThreefoldRing& r, const GradedClass& x) {
  if (x.a2.size() != r.rho() || x.a4.size() != r.rho())
    throw ValidationError("class dimension does not match ring '" + r.name() + "' (rho = " +
                          std::to_string(r.rho()) + ")");
}

/// Cup product truncated above degree 6.
inline GradedClass ring_multiply(const ThreefoldRing& r, const GradedClass& x, const GradedClass& y) {
  check_in_ring(r, x);
  check_in_ring(r, y);
  const std::size_t n = r.rho();
  GradedClass z = GradedClass::zero(n);
  z.a0 = x.a0 * y.a0;
  for (std::size_t i = 0; i < n; ++i) {
    z.a2[i] = x.a0 * y.a2[i] + y.a0 * x.a2[i];
    z.a4[i] = x.a0 * y.a4[i] + y.a0 * x.a4[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (x.a2[j] == 0) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (y.a2[k] == 0) continue;
      Rational xy = x.a2[j] * y.a2[k];
      for (std::size_t i = 0; i < n; ++i) z.a4[i] += xy * r.triple(j, k, i);
    }
  }
  z.a6 = x.a0 * y.a6 + y.a0 * x.a6;
  for (std::size_t i = 0; i < n; ++i) z.a6 += x.a2[i] * y.a4[i] + y.a2[i] * x.a4[i];
  return z;
}

/// The involution acting by (-1)^k on H^{2k}.
inline GradedClass star(GradedClass x) {
  for (auto& v : x.a2) v = -v;
  x.a6 = -x.a6;
  return x;
}

/// e^L = 1 + L + L²/2 + L³/6 for an H² class L.
inline GradedClass exp_class(const ThreefoldRing& r, const RationalVector& line) {
  GradedClass l = GradedClass::divisor(line);
  check_in_ring(r, l);
  GradedClass l2 = ring_multiply(r, l, l);
  GradedClass l3 = ring_multiply(r, l2, l);
  return GradedClass::unit(r.rho()) + l + l2 * Rational(1, 2) + l3 * Rational(1, 6);
}

/// Gram matrix of the restricted lattice: G[i][j] = ∫ e_i·e_j·S.
class K3Restriction {
 public:
  K3Restriction(Matrix gram, IntVector s_coords) : gram_(std::move(gram)), s_(std::move(s_coords)) {
    if (!gram_.is_symmetric()) throw ValidationError("restricted gram matrix must be symmetric");
    if (gram_.rows() != s_.size()) throw ValidationError("gram matrix and s_coords disagree on rho");
  }

  static K3Restriction from_ring(const ThreefoldRing& r, const IntVector& s_coords) {
    if (s_coords.size() != r.rho()) throw ValidationError("s_coords must have rho entries");
    Matrix g(r.rho(), r.rho());
    for (std::size_t i = 0; i < r.rho(); ++i)
      for (std::size_t j = 0; j < r.rho(); ++j) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < r.rho(); ++k) s += r.triple(i, j, k) * s_coords[k];
        g(i, j) = s;
      }
    return K3Restriction(std::move(g), s_coords);
  }

  const Matrix& gram() const { return gram_; }
  const IntVector& s_coords() const { return s_; }
  std::size_t rho() const { return s_.size(); }

  /// True when the stored gram equals the one regenerated from `r`.
  bool consistent_with(const ThreefoldRing& r) const { return from_ring(r, s_).gram_ == gram_; }

 private:
  Matrix gram_;
  IntVector s_;
};

/// (v0, v2, v4) in H⁰⊕(restricted H²)⊕H⁴ of the K3 surface.
struct K3Vector {
  Rational v0;
  RationalVector v2;
  Rational v4;

  friend K3Vector operator+(K3Vector a, const K3Vector& b) {
    if (a.v2.size() != b.v2.size()) throw ValidationError("K3 vectors of different rank");
    a.v0 += b.v0;
    for (std::size_t i = 0; i < a.v2.size(); ++i) a.v2[i] += b.v2[i];
    a.v4 += b.v4;
    return a;
  }
  friend bool operator==(const K3Vector&, const K3Vector&) = default;
};

/// Pullback to S: the H⁶ part does not restrict, ∫_S a4|_S = Σ s_i·a4[i].
inline K3Vector restrict_to_k3(const ThreefoldRing& r, const IntVector& s_coords, const GradedClass& x) {
  check_in_ring(r, x);
  if (s_coords.size() != r.rho()) throw ValidationError("s_coords must have rho entries");
  Rational top = 0;
  for (std::size_t i = 0; i < r.rho(); ++i) top += s_coords[i] * x.a4[i];
  return {x.a0, x.a2, top};
}

}  // namespace mukaikit
