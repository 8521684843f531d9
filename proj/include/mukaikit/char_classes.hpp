#pragma once

// Chern characters, Todd classes, truncated square roots and Mukai vectors.

#include "mukaikit/cohomology.hpp"
#include "mukaikit/flag.hpp"

#include <string>

namespace mukaikit {

/// Topological type of a bundle: rank and Chern classes in ring coordinates
/// (c1 in H², c2 as H⁴ functionals, c3 as ∫ c₃).
struct ChernData {
  std::int64_t rank = 1;
  RationalVector c1;
  RationalVector c2;
  Rational c3;

  static ChernData trivial(std::size_t rho) { return {1, RationalVector(rho), RationalVector(rho), 0}; }
  static ChernData line_bundle(const RationalVector& l) { return {1, l, RationalVector(l.size()), 0}; }

  friend bool operator==(const ChernData&, const ChernData&) = default;
};

inline void check_in_ring(const ThreefoldRing& r, const ChernData& e) {
  if (e.rank < 1) throw ValidationError("bundle rank must be at least 1");
  if (e.c1.size() != r.rho() || e.c2.size() != r.rho())
    throw ValidationError("Chern data dimension does not match ring '" + r.name() + "'");
}

/// Whitney sum of topological types.
inline ChernData direct_sum(const ThreefoldRing& r, const ChernData& a, const ChernData& b) {
  check_in_ring(r, a);
  check_in_ring(r, b);
  // c(a⊕b) = c(a)·c(b)
  GradedClass ca{1, a.c1, a.c2, a.c3};
  GradedClass cb{1, b.c1, b.c2, b.c3};
  GradedClass c = ring_multiply(r, ca, cb);
  return {a.rank + b.rank, c.a2, c.a4, c.a6};
}

inline GradedClass chern_character(const ThreefoldRing& r, const ChernData& e) {
  check_in_ring(r, e);
  GradedClass c1 = GradedClass::divisor(e.c1);
  GradedClass c2{0, RationalVector(r.rho()), e.c2, 0};
  GradedClass c1sq = ring_multiply(r, c1, c1);
  GradedClass c1c2 = ring_multiply(r, c1, c2);
  GradedClass c1cube = ring_multiply(r, c1sq, c1);

  GradedClass ch = GradedClass::zero(r.rho());
  ch.a0 = e.rank;
  ch.a2 = e.c1;
  for (std::size_t i = 0; i < r.rho(); ++i) ch.a4[i] = (c1sq.a4[i] - 2 * e.c2[i]) / 2;
  ch.a6 = (c1cube.a6 - 3 * c1c2.a6 + 3 * e.c3) / 6;
  return ch;
}

/// Inverse of chern_character on classes with integral rank.
inline ChernData chern_data_from_character(const ThreefoldRing& r, const GradedClass& ch) {
  check_in_ring(r, ch);
  if (!is_integer(ch.a0) || ch.a0 < 1) throw ValidationError("character has non-positive or fractional rank");
  GradedClass c1 = GradedClass::divisor(ch.a2);
  GradedClass c1sq = ring_multiply(r, c1, c1);
  ChernData e;
  e.rank = static_cast<std::int64_t>(to_integer(ch.a0));
  e.c1 = ch.a2;
  e.c2.resize(r.rho());
  for (std::size_t i = 0; i < r.rho(); ++i) e.c2[i] = c1sq.a4[i] / 2 - ch.a4[i];
  GradedClass c2{0, RationalVector(r.rho()), e.c2, 0};
  Rational c1c2 = ring_multiply(r, c1, c2).a6;
  Rational c1cube = ring_multiply(r, c1sq, c1).a6;
  e.c3 = 2 * ch.a6 - c1cube / 3 + c1c2;
  return e;
}

inline ChernData dual_chern(ChernData e) {
  for (auto& x : e.c1) x = -x;
  e.c3 = -e.c3;
  return e;
}

/// Chern data of E ⊗ L, through ch(E)·e^L.
inline ChernData twist_chern(const ThreefoldRing& r, const ChernData& e, const RationalVector& line) {
  GradedClass ch = ring_multiply(r, chern_character(r, e), exp_class(r, line));
  return chern_data_from_character(r, ch);
}

/// td = (1, c₁/2, (c₁²+c₂)/12, c₁c₂/24) for a threefold.
inline GradedClass todd_class(const ThreefoldRing& r) {
  const std::size_t n = r.rho();
  RationalVector c1 = to_rational(r.c1_coords());
  GradedClass c1sq = ring_multiply(r, GradedClass::divisor(c1), GradedClass::divisor(c1));
  GradedClass td = GradedClass::unit(n);
  for (std::size_t i = 0; i < n; ++i) {
    td.a2[i] = c1[i] / 2;
    td.a4[i] = (c1sq.a4[i] + r.c2_values()[i]) / 12;
  }
  td.a6 = Rational(r.c1_c2(), 24);
  return td;
}

/// The unique y with y·y = x and leading term 1, from the binomial series
/// √(1+t) = 1 + t/2 − t²/8 + t³/16 truncated above degree 6.
inline GradedClass sqrt_series(const ThreefoldRing& r, const GradedClass& x) {
  check_in_ring(r, x);
  if (x.a0 != 1) throw ValidationError("sqrt_series requires leading term 1, got " + format(x.a0));
  GradedClass t = x - GradedClass::unit(r.rho());
  GradedClass t2 = ring_multiply(r, t, t);
  GradedClass t3 = ring_multiply(r, t2, t);
  return GradedClass::unit(r.rho()) + t * Rational(1, 2) - t2 * Rational(1, 8) + t3 * Rational(1, 16);
}

enum class Normalization { Cy3FullTodd, FanoFullTodd };

inline std::string to_string(Normalization n) {
  return n == Normalization::Cy3FullTodd ? "cy3-full-todd" : "fano-full-todd";
}

struct MukaiVector {
  GradedClass value;
  std::string ring_name;
  Normalization normalization;
};

/// m(E) = ch(E)·√td.
inline MukaiVector mukai_vector(const ThreefoldRing& r, const ChernData& e) {
  GradedClass m = ring_multiply(r, chern_character(r, e), sqrt_series(r, todd_class(r)));
  return {std::move(m), r.name(), r.is_calabi_yau() ? Normalization::Cy3FullTodd : Normalization::FanoFullTodd};
}

/// m(E|_S) = ch(E|_S)·(1,0,1) = (rank, c₁|_S, ∫_S ch₂(E) + rank).
inline K3Vector k3_mukai_vector(const FlagDescriptor& flag, const ChernData& e) {
  const ThreefoldRing& r = flag.ring();
  K3Vector v = restrict_to_k3(r, flag.s_coords(), chern_character(r, e));
  v.v4 += v.v0;
  return v;
}

}  // namespace mukaikit
