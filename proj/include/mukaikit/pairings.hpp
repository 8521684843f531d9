#pragma once

// Mukai pairings, the Euler form via Riemann–Roch–Hirzebruch, twists,
// reflections and restriction of Mukai vectors to the K3 surface.

#include "mukaikit/char_classes.hpp"

#include <optional>
#include <string>
#include <utility>

namespace mukaikit {

struct PairingResult {
  Rational value;
  std::optional<std::string> integrality_note;
};

/// Declared value of h(E₁,E₂) = rk H¹ − rk H⁰; never computed.
struct HDeclaration {
  std::string first;
  std::string second;
  BigInt value;
};

/// (u, v) = −[v*·u]₆; skew-symmetric.
inline Rational mukai_pairing_3fold(const ThreefoldRing& r, const GradedClass& u, const GradedClass& v) {
  return -ring_multiply(r, star(v), u).a6;
}

/// (u, v) = −[v*·u]₄ = u₂ᵀGv₂ − u₀v₄ − u₄v₀; symmetric.
inline Rational mukai_pairing_k3(const K3Restriction& g, const K3Vector& u, const K3Vector& v) {
  if (u.v2.size() != g.rho() || v.v2.size() != g.rho())
    throw ValidationError("K3 vector dimension does not match restriction data");
  return bilinear(g.gram(), u.v2, v.v2) - u.v0 * v.v4 - u.v4 * v.v0;
}

/// χ on the K3 surface: χ(v, w) = −(v, w).
inline Rational euler_chi_k3(const K3Restriction& g, const K3Vector& u, const K3Vector& v) {
  return -mukai_pairing_k3(g, u, v);
}

inline bool is_integral(const ChernData& e) {
  for (const auto& x : e.c1)
    if (!is_integer(x)) return false;
  for (const auto& x : e.c2)
    if (!is_integer(x)) return false;
  return is_integer(e.c3);
}

/// χ(E₁,E₂) = [ch E₂ · ch E₁* · td]₆.
inline PairingResult euler_chi(const ThreefoldRing& r, const ChernData& e1, const ChernData& e2) {
  GradedClass p = ring_multiply(r, chern_character(r, e2), chern_character(r, dual_chern(e1)));
  PairingResult out{ring_multiply(r, p, todd_class(r)).a6, std::nullopt};
  if (!is_integer(out.value) && is_integral(e1) && is_integral(e2))
    out.integrality_note = "chi = " + format(out.value) +
                           " is fractional on integral Chern data; intersection data may be inconsistent";
  return out;
}

struct ChiSplit {
  Rational symmetric;
  Rational skew;
};

/// χ₊ and χ₋ with χ₊ + χ₋ = χ(e1, e2).
inline ChiSplit chi_split(const ThreefoldRing& r, const ChernData& e1, const ChernData& e2) {
  Rational a = euler_chi(r, e1, e2).value;
  Rational b = euler_chi(r, e2, e1).value;
  return {(a + b) / 2, (a - b) / 2};
}

/// m·e^{kL}.
inline GradedClass twist_T(const ThreefoldRing& r, const GradedClass& m, const RationalVector& line,
                           std::int64_t k) {
  RationalVector kl(line);
  for (auto& x : kl) x *= k;
  return ring_multiply(r, m, exp_class(r, kl));
}

enum class ReflectionMode { Chi, H };

/// α_m(m') = −m' − c·m, where c is χ(m, m') or a declared h(m, m').
inline GradedClass reflect_alpha(const GradedClass& m, const GradedClass& mp, const Rational& pairing_value) {
  return -mp - m * pairing_value;
}

/// χ-mode reflection: the coefficient is the Euler form of the two Mukai vectors.
inline GradedClass reflect_alpha_chi(const ThreefoldRing& r, const GradedClass& m, const GradedClass& mp) {
  return reflect_alpha(m, mp, mukai_pairing_3fold(r, m, mp));
}

inline GradedClass reflect_alpha_h(const GradedClass& m, const GradedClass& mp, const HDeclaration& h) {
  return reflect_alpha(m, mp, Rational(h.value));
}

/// Pushforward of a K3 class along S ⊂ Y: degrees shift up by two.
inline GradedClass pushforward_from_k3(const FlagDescriptor& flag, const K3Vector& v) {
  const std::size_t n = flag.ring().rho();
  GradedClass out = GradedClass::zero(n);
  for (std::size_t i = 0; i < n; ++i) out.a2[i] = v.v0 * flag.s_coords()[i];
  out.a4 = flag.k3().gram() * v.v2;
  out.a6 = v.v4;
  return out;
}

struct RestrictionReport {
  K3Vector vector;
  /// m(E) − m(E)·e^{−S}, the lattice-level expression for the restriction.
  GradedClass lattice_expression;
  /// Whether the degree-≤4 part of lattice_expression equals i_*(m(E|_S)).
  bool lattice_expression_matches;
  /// Grothendieck–Riemann–Roch for S ⊂ Y: ch(E)(1 − e^{−S})td_Y = i_*(ch(E|_S)td_S).
  bool grr_matches;
};

inline RestrictionReport mukai_restrict(const FlagDescriptor& flag, const ChernData& e) {
  const ThreefoldRing& r = flag.ring();
  RestrictionReport rep;
  rep.vector = k3_mukai_vector(flag, e);

  RationalVector minus_s = to_rational(flag.s_coords());
  for (auto& x : minus_s) x = -x;
  GradedClass one_minus = GradedClass::unit(r.rho()) - exp_class(r, minus_s);

  GradedClass m = mukai_vector(r, e).value;
  rep.lattice_expression = ring_multiply(r, m, one_minus);
  GradedClass pushed = pushforward_from_k3(flag, rep.vector);
  rep.lattice_expression_matches = rep.lattice_expression.a0 == pushed.a0 &&
                                   rep.lattice_expression.a2 == pushed.a2 &&
                                   rep.lattice_expression.a4 == pushed.a4;

  K3Vector ch_s = restrict_to_k3(r, flag.s_coords(), chern_character(r, e));
  ch_s.v4 += 2 * ch_s.v0;  // td_S = 1 + 2·pt
  GradedClass lhs = ring_multiply(r, ring_multiply(r, chern_character(r, e), one_minus), todd_class(r));
  rep.grr_matches = lhs == pushforward_from_k3(flag, ch_s);
  return rep;
}

/// Whether v_plus = g*(v_minus) for the lattice isometry A.
inline bool g_pullback_match(const K3Restriction& g, const Matrix& a, const K3Vector& v_plus,
                             const K3Vector& v_minus) {
  if (a.rows() != g.rho() || a.cols() != g.rho()) throw ValidationError("gluing matrix must be rho x rho");
  Matrix pulled = a.transpose() * g.gram() * a;
  if (!(pulled == g.gram())) {
    std::string msg = "gluing matrix is not an isometry: A^T G A differs from G at";
    for (std::size_t i = 0; i < g.rho(); ++i)
      for (std::size_t j = 0; j < g.rho(); ++j)
        if (pulled(i, j) != g.gram()(i, j))
          msg += " (" + std::to_string(i) + "," + std::to_string(j) + "): " + format(pulled(i, j)) +
                 " vs " + format(g.gram()(i, j));
    throw ValidationError(msg);
  }
  if (v_plus.v2.size() != g.rho() || v_minus.v2.size() != g.rho())
    throw ValidationError("K3 vector dimension does not match restriction data");
  return v_plus.v0 == v_minus.v0 && v_plus.v2 == a * v_minus.v2 && v_plus.v4 == v_minus.v4;
}

}  // namespace mukaikit
