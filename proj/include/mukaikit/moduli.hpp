#pragma once

// Virtual dimensions, nonemptiness and stability predicates, and the
// Casson–Donaldson bookkeeping registry.

#include "mukaikit/pairings.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mukaikit {

/// m² + 2 on the K3 surface.
inline Rational vdim_k3(const K3Restriction& g, const K3Vector& m) { return mukai_pairing_k3(g, m, m) + 2; }

/// ½·res(m)² + 1 for a bundle on a flag.
inline Rational vdim_flag(const FlagDescriptor& flag, const ChernData& e) {
  K3Vector v = k3_mukai_vector(flag, e);
  return mukai_pairing_k3(flag.k3(), v, v) / 2 + 1;
}

struct VdimCy3Report {
  std::int64_t vdim = 0;
  Rational chi_self;  // χ(e, e), zero on a Calabi–Yau
  std::optional<std::string> note;
};

inline ChernData tangent_chern(const ThreefoldRing& r) {
  return {3, to_rational(r.c1_coords()), to_rational(r.c2_values()), Rational(r.chi_top())};
}

inline VdimCy3Report vdim_cy3(const ThreefoldRing& r, const ChernData& e) {
  if (!r.is_calabi_yau()) throw ValidationError("vdim_cy3 requires a Calabi-Yau ring (c1 = 0), got '" + r.name() + "'");
  VdimCy3Report rep;
  rep.chi_self = euler_chi(r, e, e).value;
  if (e == tangent_chern(r))
    rep.note = "tangent-bundle type: deformations of TM may be obstructed or unobstructed; virtual count only";
  return rep;
}

struct NonemptyReport {
  bool nonempty = false;
  Rational square;
  /// gcd of the integral components; primitive when it equals 1.
  std::optional<BigInt> content;
  bool primitive = false;
};

/// Mukai's criterion: u₀ > 0 and m² ≥ −2. The H^{1,1} condition holds
/// automatically for restricted classes. Primitivity is reported only.
inline NonemptyReport mukai_nonempty(const K3Restriction& g, const K3Vector& m) {
  NonemptyReport rep;
  rep.square = mukai_pairing_k3(g, m, m);
  rep.nonempty = m.v0 > 0 && rep.square >= -2;
  bool integral = is_integer(m.v0) && is_integer(m.v4);
  for (const auto& x : m.v2) integral = integral && is_integer(x);
  if (integral) {
    BigInt c = gcd(numerator(m.v0), numerator(m.v4));
    for (const auto& x : m.v2) c = gcd(c, numerator(x));
    rep.content = c;
    rep.primitive = c == 1;
  }
  return rep;
}

struct BogomolovReport {
  GradedClass discriminant;  // H⁴ part only
  Rational degree;           // ∫ Δ·H
  bool positive = false;
  bool applicable = true;    // false for rank 1
};

/// Δ(E) = c₂ − (r−1)/(2r)·c₁² and the strict inequality Δ·H > 0.
inline BogomolovReport bogomolov_check(const ThreefoldRing& r, const ChernData& e, const RationalVector& polarization) {
  check_in_ring(r, e);
  if (polarization.size() != r.rho()) throw ValidationError("polarization must have rho entries");
  GradedClass c1 = GradedClass::divisor(e.c1);
  GradedClass c1sq = ring_multiply(r, c1, c1);
  BogomolovReport rep;
  rep.discriminant = GradedClass::zero(r.rho());
  Rational coeff(e.rank - 1, 2 * e.rank);
  for (std::size_t i = 0; i < r.rho(); ++i) {
    rep.discriminant.a4[i] = e.c2[i] - coeff * c1sq.a4[i];
    rep.degree += rep.discriminant.a4[i] * polarization[i];
  }
  rep.applicable = e.rank >= 2;
  rep.positive = rep.applicable && rep.degree > 0;
  return rep;
}

/// χ_top = 2(h^{1,1} − h^{1,2}) for a Calabi–Yau threefold.
inline std::int64_t chi_top_cy3(const ThreefoldRing& r) {
  if (!r.is_calabi_yau()) throw ValidationError("chi_top_cy3 requires a Calabi-Yau ring");
  std::int64_t chi = 2 * (static_cast<std::int64_t>(r.rho()) - r.h12());
  if (chi != r.chi_top())
    throw ValidationError("Hodge data give chi_top = " + std::to_string(chi) + " but ring stores " +
                          std::to_string(r.chi_top()));
  return chi;
}

// ---------------------------------------------------------------------------
// Casson–Donaldson registry

enum class Provenance { LineBundleRule, SkyscraperRule, Degeneration, Closure, RegistryConstant };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::LineBundleRule: return "line-bundle-rule";
    case Provenance::SkyscraperRule: return "skyscraper-rule";
    case Provenance::Degeneration: return "degeneration";
    case Provenance::Closure: return "closure";
    case Provenance::RegistryConstant: return "registry-constant";
  }
  return "unknown";
}

inline Provenance provenance_from_string(const std::string& s) {
  for (auto p : {Provenance::LineBundleRule, Provenance::SkyscraperRule, Provenance::Degeneration,
                 Provenance::Closure, Provenance::RegistryConstant})
    if (to_string(p) == s) return p;
  throw ParseError("unknown provenance '" + s + "'");
}

/// Either an integer or a named quantity with no known numeric value.
struct CDValue {
  std::optional<BigInt> number;
  std::string symbol;

  static CDValue of(BigInt n) { return {std::move(n), {}}; }
  static CDValue named(std::string s) { return {std::nullopt, std::move(s)}; }
  bool is_numeric() const { return number.has_value(); }
  std::string str() const { return number ? number->str() : symbol; }
  friend bool operator==(const CDValue&, const CDValue&) = default;
};

inline CDValue operator*(const CDValue& a, const CDValue& b) {
  if (a.is_numeric() && b.is_numeric()) return CDValue::of(*a.number * *b.number);
  return CDValue::named("(" + a.str() + ")*(" + b.str() + ")");
}

struct CDEntry {
  std::string id;
  std::string manifold;
  std::string vector_label;
  std::optional<GradedClass> vector;
  std::optional<K3Vector> k3_vector;
  CDValue value;
  Provenance provenance = Provenance::RegistryConstant;
  std::string citation;
  bool exceptional = false;
  std::vector<std::string> parents;
  std::string constraint;
  std::optional<std::string> sign_note;
};

class CDRegistry {
 public:
  /// Inserts `e`. Re-inserting an identical value is a no-op; a conflicting
  /// value for an existing id is rejected.
  const CDEntry& insert(CDEntry e) {
    auto it = entries_.find(e.id);
    if (it != entries_.end()) {
      if (!(it->second.value == e.value))
        throw ValidationError("registry already holds '" + e.id + "' with value " + it->second.value.str() +
                              ", refusing " + e.value.str());
      return it->second;
    }
    auto id = e.id;
    return entries_.emplace(std::move(id), std::move(e)).first->second;
  }

  const CDEntry& at(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw ValidationError("no registry entry '" + id + "'");
    return it->second;
  }
  bool contains(const std::string& id) const { return entries_.count(id) != 0; }
  const std::map<std::string, CDEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  CDEntry& mutable_at(const std::string& id) {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw ValidationError("no registry entry '" + id + "'");
    return it->second;
  }

 private:
  std::map<std::string, CDEntry> entries_;
};

enum class SeedKind { LineBundle, Skyscraper };

/// CD(m(L)) = 1 for a line bundle L (default: trivial) and CD(m(O_p)) = χ_top.
inline const CDEntry& cd_seed(CDRegistry& reg, const ThreefoldRing& r, SeedKind kind,
                              const RationalVector& line = {}) {
  CDEntry e;
  e.manifold = r.name();
  if (kind == SeedKind::LineBundle) {
    RationalVector l = line.empty() ? RationalVector(r.rho()) : line;
    if (l.size() != r.rho()) throw ValidationError("line bundle class must have rho entries");
    std::string label = "O(";
    for (std::size_t i = 0; i < l.size(); ++i) label += (i ? "," : "") + format(l[i]);
    label += ")";
    e.id = r.name() + ":" + label;
    e.vector_label = "m(" + label + ")";
    e.vector = mukai_vector(r, ChernData::line_bundle(l)).value;
    e.value = CDValue::of(1);
    e.provenance = Provenance::LineBundleRule;
    e.citation = "CD_H(m(L)) = 1";
  } else {
    e.id = r.name() + ":O_p";
    e.vector_label = "m(O_p)";
    GradedClass pt = GradedClass::zero(r.rho());
    pt.a6 = 1;
    e.vector = pt;
    e.value = CDValue::of(r.is_calabi_yau() ? chi_top_cy3(r) : r.chi_top());
    e.provenance = Provenance::SkyscraperRule;
    e.citation = "CD_H(m(O_p)) = chi_top(M)";
  }
  return reg.insert(std::move(e));
}

/// Marks an entry as realised by exceptional stable bundles (user assertion).
inline void cd_mark_exceptional(CDRegistry& reg, const std::string& id, bool flag = true) {
  reg.mutable_at(id).exceptional = flag;
}

/// CD(α_m(T_H^k(m'))) = CD(m)·CD(m') for k > k₀(m, m'). The child carries
/// k symbolically; when a ring, polarization and concrete k are supplied and
/// both parents carry threefold vectors, the vector for that k is recorded.
inline const CDEntry& cd_closure(CDRegistry& reg, const std::string& m_id, const std::string& mp_id,
                                 const ThreefoldRing* ring = nullptr, const RationalVector& polarization = {},
                                 std::optional<std::int64_t> k = std::nullopt) {
  const CDEntry& m = reg.at(m_id);
  const CDEntry& mp = reg.at(mp_id);
  for (const CDEntry* p : {&m, &mp})
    if (!p->exceptional)
      throw ValidationError("closure parent '" + p->id + "' is not marked as realised by exceptional stable bundles");

  const std::string k0 = "k0(" + m_id + "," + mp_id + ")";
  CDEntry child;
  child.manifold = m.manifold;
  child.vector_label = "alpha_{" + m.vector_label + "}(T_H^k(" + mp.vector_label + "))";
  child.id = "alpha(" + m_id + ",T^k(" + mp_id + "))";
  child.value = m.value * mp.value;
  child.provenance = Provenance::Closure;
  child.citation = "CD_H(alpha_m(T^k_H(m'))) = CD_H(m)*CD_H(m')";
  child.exceptional = true;
  child.parents = {m_id, mp_id};
  child.constraint = "k > " + k0;
  if (k && ring && m.vector && mp.vector) {
    RationalVector h = polarization.empty() ? RationalVector(ring->rho()) : polarization;
    if (polarization.empty()) h[0] = 1;
    GradedClass twisted = twist_T(*ring, *mp.vector, h, *k);
    child.vector = reflect_alpha_chi(*ring, *m.vector, twisted);
    child.id = "alpha(" + m_id + ",T^" + std::to_string(*k) + "(" + mp_id + "))";
    child.constraint = std::to_string(*k) + " > " + k0 + " (assumed)";
  }
  return reg.insert(std::move(child));
}

/// CD_{S,Y}(m) = ±χ(M_Y(m)₀) from a caller-supplied Euler characteristic.
inline const CDEntry& cd_degeneration(CDRegistry& reg, const FlagDescriptor& flag, const ChernData& e,
                                      const BigInt& euler_char_of_moduli, const std::string& label = {}) {
  CDEntry d;
  d.manifold = flag.ring().name();
  d.k3_vector = k3_mukai_vector(flag, e);
  std::string vec = "(" + format(d.k3_vector->v0) + ",[";
  for (std::size_t i = 0; i < d.k3_vector->v2.size(); ++i) vec += (i ? "," : "") + format(d.k3_vector->v2[i]);
  vec += "]," + format(d.k3_vector->v4) + ")";
  d.vector_label = label.empty() ? "res m = " + vec : label;
  d.id = flag.ring().name() + ":rel" + vec;
  BigInt abs_chi = euler_char_of_moduli < 0 ? BigInt(-euler_char_of_moduli) : euler_char_of_moduli;
  d.value = CDValue::of(abs_chi);
  d.provenance = Provenance::Degeneration;
  d.citation = "CD_{S,Y}(m) = +-chi(M_Y(m)_0)";
  d.sign_note = "sign of +-chi unresolved; recorded |chi| = " + abs_chi.str() + " from chi = " +
                euler_char_of_moduli.str();
  return reg.insert(std::move(d));
}

/// Degeneration entry whose Euler characteristic is only known by name.
inline const CDEntry& cd_degeneration_named(CDRegistry& reg, const std::string& manifold, const std::string& id,
                                            const std::string& vector_label, const std::string& symbol) {
  CDEntry d;
  d.manifold = manifold;
  d.id = id;
  d.vector_label = vector_label;
  d.value = CDValue::named(symbol);
  d.provenance = Provenance::Degeneration;
  d.citation = "CD_{S,Y}(m) = +-chi(M_Y(m)_0)";
  d.sign_note = "value known only symbolically";
  return reg.insert(std::move(d));
}

// ---------------------------------------------------------------------------
// Literature constants the library cannot recompute.

struct Constant {
  std::string key;
  std::optional<BigInt> value;  // empty for open problems
  std::string description;
  std::string citation;
};

class ConstantsRegistry {
 public:
  explicit ConstantsRegistry(std::vector<Constant> table) : table_(std::move(table)) {}

  const std::vector<Constant>& entries() const { return table_; }

  const Constant& at(const std::string& key) const {
    for (const auto& c : table_)
      if (c.key == key) return c;
    throw ValidationError("no constant '" + key + "'");
  }

 private:
  std::vector<Constant> table_;
};

inline const ConstantsRegistry& builtin_constants() {
  static const ConstantsRegistry reg({
      {"R_Q5(1)", BigInt(2875), "lines on a generic quintic threefold",
       "R_M(m) = 2875 for the line class on the quintic (Schubert)"},
      {"R_Q5(5)", BigInt("229305888887625"), "rational quintic curves on a generic quintic threefold",
       "R_{Q_5}(5) = 229305888887625"},
      {"R_Q5(10)", std::nullopt, "rational curves of degree 10 on a generic quintic threefold",
       "open: not given by the degree-10 generating-function coefficient"},
      {"R_M8(1)", BigInt(12), "lines on a generic double cover of CP^3 branched along an octic",
       "R_{M_8}(1) = 2 r(G(2,4))^2 = 2 c_top T^*G(2,4) = 12"},
      {"BNvS_nodes", BigInt(130), "nodes of the Barth-Nieto-van Straten quintic",
       "quintic in the pencil <S_5, S_2*S_3> on S_1 = 0 with 130 nodes (Barth-Nieto, van Straten)"},
      {"Hilb6_conic_cubic", std::nullopt, "intersection number #[r+({conics}) . r-({cubics})] in Hilb^6(S)",
       "open: #[r_+({gamma_2}) cap r_-({gamma_3})] = ?"},
      {"CD_double_octic_c2_5", std::nullopt,
       "CD of (2,0,-5/2 PD(H),0) on the double octic, as chi(MI_3) + chi(M_3)",
       "chi(MI_3) + chi(M_3), Bott-formula Euler characteristics not computed here"},
      {"AR_instanton", BigInt(0), "Atiyah-Rees invariant of a mathematical instanton",
       "h^1(E|_S) = 0 mod 2 for c_1(E) = 0, hence AR(E) = 0"},
      {"quintic_rank2_rigidity", std::nullopt,
       "conjecture: every stable rank-2 bundle on a generic quintic is infinitesimally rigid",
       "conjectural H^1(ad E) = 0; recorded as a note"},
  });
  return reg;
}

}  // namespace mukaikit
