#pragma once

// Randomized invariants shared by the GoogleTest property suite and the
// acceptance runner. Each check returns the number of cases run and the first
// counterexample, if any.

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <functional>
#include <optional>
#include <string>

namespace props {

using namespace mukaikit;

struct Outcome {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

/// Runs `body` for `cases` seeds; `body` returns an error message on failure.
inline Outcome run(int cases, std::uint64_t seed, const std::function<std::optional<std::string>(gen::Rng&)>& body) {
  Outcome out;
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    ++out.cases;
    std::optional<std::string> err;
    try {
      err = body(rng);
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    if (err) {
      if (out.failures++ == 0) out.first_failure = "case " + std::to_string(i) + ": " + *err;
    }
  }
  return out;
}

// (a) the threefold pairing is antisymmetric and χ(e, e) = 0 on CY rings
inline Outcome pairing_antisymmetric(int cases, std::uint64_t seed = 101) {
  return run(cases, seed, [](gen::Rng& rng) -> std::optional<std::string> {
    auto r = gen::cy_ring(rng, gen::rho(rng));
    auto u = gen::graded(rng, r.rho()), v = gen::graded(rng, r.rho());
    if (mukai_pairing_3fold(r, u, v) != -mukai_pairing_3fold(r, v, u)) return "pairing not antisymmetric";
    auto e = gen::chern(rng, r.rho());
    auto chi = euler_chi(r, e, e).value;
    if (chi != 0) return "chi(e,e) = " + format(chi);
    return std::nullopt;
  });
}

// (b) χ(e1, e2) = (m(e1), m(e2)) on CY rings
inline Outcome chi_equals_pairing(int cases, std::uint64_t seed = 102) {
  return run(cases, seed, [](gen::Rng& rng) -> std::optional<std::string> {
    auto r = gen::cy_ring(rng, gen::rho(rng));
    auto e1 = gen::chern(rng, r.rho()), e2 = gen::chern(rng, r.rho());
    Rational chi = euler_chi(r, e1, e2).value;
    Rational pair = mukai_pairing_3fold(r, mukai_vector(r, e1).value, mukai_vector(r, e2).value);
    if (chi != pair) return "chi " + format(chi) + " vs pairing " + format(pair);
    return std::nullopt;
  });
}

// (c) χ(e1⊗L, e2⊗L) = χ(e1, e2)
inline Outcome chi_twist_invariant(int cases, std::uint64_t seed = 103) {
  return run(cases, seed, [](gen::Rng& rng) -> std::optional<std::string> {
    auto r = gen::any_ring(rng, gen::rho(rng));
    auto e1 = gen::chern(rng, r.rho()), e2 = gen::chern(rng, r.rho());
    auto l = gen::vec(rng, r.rho(), 3);
    Rational before = euler_chi(r, e1, e2).value;
    Rational after = euler_chi(r, twist_chern(r, e1, l), twist_chern(r, e2, l)).value;
    if (before != after) return "chi changed from " + format(before) + " to " + format(after);
    return std::nullopt;
  });
}

// (d) sqrt_series(x)² = x for x with unit constant term
inline Outcome sqrt_round_trip(int cases, std::uint64_t seed = 104) {
  return run(cases, seed, [](gen::Rng& rng) -> std::optional<std::string> {
    auto r = gen::any_ring(rng, gen::rho(rng));
    auto x = gen::graded(rng, r.rho());
    x.a0 = 1;
    auto s = sqrt_series(r, x);
    if (!(ring_multiply(r, s, s) == x)) return "sqrt squared differs from input";
    return std::nullopt;
  });
}

// (e) Δ·H and the Bogomolov verdict are twist invariant
inline Outcome bogomolov_twist_invariant(int cases, std::uint64_t seed = 105) {
  return run(cases, seed, [](gen::Rng& rng) -> std::optional<std::string> {
    auto r = gen::any_ring(rng, gen::rho(rng));
    auto e = gen::chern(rng, r.rho());
    auto h = gen::vec(rng, r.rho(), 3);
    auto l = gen::vec(rng, r.rho(), 3);
    auto a = bogomolov_check(r, e, h), b = bogomolov_check(r, twist_chern(r, e, l), h);
    if (a.degree != b.degree) return "degree changed from " + format(a.degree) + " to " + format(b.degree);
    if (a.positive != b.positive) return "verdict changed";
    return std::nullopt;
  });
}

inline schubert::SchubertElement random_schubert(gen::Rng& rng, int n) {
  schubert::SchubertElement x(n);
  int terms = static_cast<int>(rng.uniform(1, 3));
  for (int t = 0; t < terms; ++t) {
    int a = static_cast<int>(rng.uniform(0, n - 2));
    int b = static_cast<int>(rng.uniform(0, a));
    x.add({a, b}, BigInt(rng.uniform(-3, 3)));
  }
  return x;
}

// (f) commutativity, associativity and Poincaré duality on G(2,n), n ≤ 7
inline Outcome schubert_ring_axioms(int cases, std::uint64_t seed = 106) {
  return run(cases, seed, [](gen::Rng& rng) -> std::optional<std::string> {
    using namespace schubert;
    int n = static_cast<int>(rng.uniform(2, 7));
    auto x = random_schubert(rng, n), y = random_schubert(rng, n), z = random_schubert(rng, n);
    if (!(multiply(x, y) == multiply(y, x))) return "not commutative on G(2," + std::to_string(n) + ")";
    if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z))))
      return "not associative on G(2," + std::to_string(n) + ")";
    int a = static_cast<int>(rng.uniform(0, n - 2)), b = static_cast<int>(rng.uniform(0, a));
    int c = static_cast<int>(rng.uniform(0, n - 2)), d = static_cast<int>(rng.uniform(0, c));
    BigInt pairing = integrate(multiply(SchubertElement::sigma(n, a, b), SchubertElement::sigma(n, c, d)));
    bool dual = c == n - 2 - b && d == n - 2 - a;
    if (pairing != (dual ? 1 : 0)) return "duality fails for " + to_string({a, b}) + ", " + to_string({c, d});
    return std::nullopt;
  });
}

inline BigInt catalan(int m) { return binomial(2 * m, m) / (m + 1); }

// (g) ∫σ1^{2(n−2)} = Catalan(n−2)
inline Outcome grassmannian_degree(int cases, std::uint64_t seed = 107) {
  return run(cases, seed, [](gen::Rng& rng) -> std::optional<std::string> {
    using namespace schubert;
    int n = static_cast<int>(rng.uniform(2, 8));
    BigInt deg = integrate(power(SchubertElement::sigma(n, 1), 2 * (n - 2)));
    if (deg != catalan(n - 2)) return "deg G(2," + std::to_string(n) + ") = " + deg.str();
    return std::nullopt;
  });
}

// On a valid flag, χ(e1,e2) + χ(e2,e1) = χ_S(e1|S, e2|S) = −(res e1, res e2).
inline Outcome flag_serre_restriction(int cases, std::uint64_t seed = 108) {
  return run(cases, seed, [](gen::Rng& rng) -> std::optional<std::string> {
    auto f = gen::valid_flag(rng, gen::rho(rng));
    const auto& r = f.ring();
    auto e1 = gen::chern(rng, r.rho()), e2 = gen::chern(rng, r.rho());
    Rational sym = euler_chi(r, e1, e2).value + euler_chi(r, e2, e1).value;
    K3Vector v1 = k3_mukai_vector(f, e1), v2 = k3_mukai_vector(f, e2);
    Rational on_s = euler_chi_k3(f.k3(), v1, v2);
    if (sym != on_s) return "2 chi_+ = " + format(sym) + " but chi_S = " + format(on_s);
    if (on_s != -mukai_pairing_k3(f.k3(), v1, v2)) return "chi_S differs from minus the K3 pairing";
    return std::nullopt;
  });
}

// h-mode with h(m,m) = −1 makes α_m(m') orthogonal to m; χ-mode on CY
// satisfies α_m(α_m(m')) − m' = 2χ(m,m')·m.
inline Outcome reflection_identities(int cases, std::uint64_t seed = 109) {
  return run(cases, seed, [](gen::Rng& rng) -> std::optional<std::string> {
    auto r = gen::cy_ring(rng, gen::rho(rng));
    auto m = gen::graded(rng, r.rho()), mp = gen::graded(rng, r.rho());
    // h is any bilinear form with h(m,m) = −1; use a diagonal one scaled on m.
    Rational hmm = -1, hmmp = rng.rational();
    auto alpha = reflect_alpha(m, mp, hmmp);
    // h(m, α) = −h(m,m') − h(m,m')·h(m,m) by bilinearity
    Rational h_after = -hmmp - hmmp * hmm;
    if (h_after != 0) return "h(m, alpha_m(m')) = " + format(h_after);
    if (!(alpha == -mp - m * hmmp)) return "h-mode reflection formula";

    Rational c = mukai_pairing_3fold(r, m, mp);
    auto once = reflect_alpha_chi(r, m, mp);
    auto twice = reflect_alpha(m, once, mukai_pairing_3fold(r, m, once));
    if (!(twice - mp == m * (2 * c))) return "double reflection identity";
    return std::nullopt;
  });
}

// ch of a sum of line bundles is Σ e^{L_i}.
inline Outcome chern_character_additive(int cases, std::uint64_t seed = 110) {
  return run(cases, seed, [](gen::Rng& rng) -> std::optional<std::string> {
    auto r = gen::any_ring(rng, gen::rho(rng));
    int count = static_cast<int>(rng.uniform(1, 3));
    ChernData e = ChernData::line_bundle(gen::vec(rng, r.rho(), 3));
    GradedClass expected = exp_class(r, e.c1);
    for (int i = 1; i < count; ++i) {
      auto l = gen::vec(rng, r.rho(), 3);
      e = direct_sum(r, e, ChernData::line_bundle(l));
      expected = expected + exp_class(r, l);
    }
    if (!(chern_character(r, e) == expected)) return "ch(sum of lines) != sum of exponentials";
    if (!(chern_data_from_character(r, expected) == e)) return "Chern data does not round-trip";
    return std::nullopt;
  });
}

}  // namespace props
