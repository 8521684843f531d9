#pragma once

// Quasi-Fano flags, obstruction kernels of the restriction map, and the
// gluing/smoothing predicates for Y₊ ∪_S Y₋.

#include "mukaikit/moduli.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mukaikit {

struct FlagValidation {
  bool valid = true;
  std::vector<std::string> failures;
  std::int64_t c1_c2 = 0;  // ∫ c₁c₂ = 24·χ(O_Y)
  std::int64_t c2_s = 0;   // ∫ c₂·S
  Matrix gram;
};

inline FlagValidation validate_flag(const FlagDescriptor& f) {
  const ThreefoldRing& r = f.ring();
  FlagValidation v;
  v.c1_c2 = r.c1_c2();
  v.gram = f.k3().gram();
  for (std::size_t i = 0; i < r.rho(); ++i) v.c2_s += r.c2_values()[i] * f.s_coords()[i];

  if (v.c1_c2 != 24) v.failures.push_back("χ(O_Y) = " + format(Rational(v.c1_c2, 24)) + " ≠ 1");
  if (f.s_coords() != r.c1_coords()) v.failures.push_back("S is not anticanonical: s_coords ≠ c1");
  if (v.c2_s != 24) v.failures.push_back("∫ c2(TY)·S = " + std::to_string(v.c2_s) + " ≠ 24");
  if (!f.k3().consistent_with(r)) v.failures.push_back("restricted gram matrix disagrees with triple tensor");
  v.valid = v.failures.empty();
  return v;
}

inline void require_valid_flag(const FlagDescriptor& f) {
  FlagValidation v = validate_flag(f);
  if (v.valid) return;
  std::string msg = "invalid flag '" + f.ring().name() + "':";
  for (const auto& s : v.failures) msg += " " + s + ";";
  throw ValidationError(msg);
}

struct KernelReport {
  std::size_t dimension = 0;
  std::vector<RationalVector> basis;
};

/// Kernel of H^{1,1}(Y) → H^{1,1}(S), i.e. the nullspace of the restricted
/// gram matrix. Dimension zero means unobstructed deformations of (S, Y).
inline KernelReport obstruction_kernel(const FlagDescriptor& f) {
  require_valid_flag(f);
  KernelReport k;
  k.basis = nullspace(f.k3().gram());
  k.dimension = k.basis.size();
  return k;
}

class GluingDescriptor {
 public:
  /// `a` maps restricted coordinates of Y₋ to those of Y₊ and must satisfy
  /// AᵀG₊A = G₋. D defaults to s₊ + A·s₋ in Y₊ coordinates.
  GluingDescriptor(FlagDescriptor plus, FlagDescriptor minus, Matrix a,
                   std::optional<RationalVector> section_class = std::nullopt,
                   std::optional<Matrix> cross_gram = std::nullopt)
      : plus_(std::move(plus)), minus_(std::move(minus)), a_(std::move(a)), cross_(std::move(cross_gram)) {
    const std::size_t n = plus_.ring().rho();
    if (minus_.ring().rho() != n) throw ValidationError("glued flags must have the same restricted rank");
    if (a_.rows() != n || a_.cols() != n) throw ValidationError("gluing matrix must be rho x rho");
    if (!(a_.transpose() * plus_.k3().gram() * a_ == minus_.k3().gram()))
      throw ValidationError("gluing matrix is not an isometry: A^T G+ A != G-");
    if (cross_ && (cross_->rows() != n || cross_->cols() != n))
      throw ValidationError("cross gram block must be rho x rho");
    if (section_class) {
      if (section_class->size() != n) throw ValidationError("section class must have rho entries");
      d_ = *section_class;
      d_supplied_ = true;
    } else {
      d_ = to_rational(plus_.s_coords());
      RationalVector as = a_ * to_rational(minus_.s_coords());
      for (std::size_t i = 0; i < n; ++i) d_[i] += as[i];
    }
  }

  const FlagDescriptor& plus() const { return plus_; }
  const FlagDescriptor& minus() const { return minus_; }
  const Matrix& a() const { return a_; }
  const std::optional<Matrix>& cross_gram() const { return cross_; }
  const RationalVector& section_class() const { return d_; }
  bool section_class_supplied() const { return d_supplied_; }

  /// Pairing ⟨r₊e_i, r₋f_j⟩ on S.
  Matrix cross_block() const { return cross_ ? *cross_ : plus_.k3().gram() * a_; }

 private:
  FlagDescriptor plus_;
  FlagDescriptor minus_;
  Matrix a_;
  std::optional<Matrix> cross_;
  RationalVector d_;
  bool d_supplied_ = false;
};

/// Nullspace of the Gram matrix of {r₊e_i} ∪ {r₋f_j} in H²(S).
inline KernelReport joint_obstruction_kernel(const Matrix& g_plus, const Matrix& g_minus, const Matrix& cross) {
  const std::size_t p = g_plus.rows(), m = g_minus.rows();
  if (cross.rows() != p || cross.cols() != m) throw ValidationError("cross block has wrong shape");
  Matrix big(p + m, p + m);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) big(i, j) = g_plus(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) big(p + i, p + j) = g_minus(i, j);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < m; ++j) big(i, p + j) = big(p + j, i) = cross(i, j);
  KernelReport k;
  k.basis = nullspace(big);
  k.dimension = k.basis.size();
  return k;
}

inline KernelReport joint_obstruction_kernel(const GluingDescriptor& gd) {
  require_valid_flag(gd.plus());
  require_valid_flag(gd.minus());
  return joint_obstruction_kernel(gd.plus().k3().gram(), gd.minus().k3().gram(), gd.cross_block());
}

struct SmoothnessReport {
  bool smooth = false;
  RationalVector section_class;
  Rational section_square;  // DᵀG₊D
};

/// The total space of the smoothing is smooth iff N₊ ⊗ N₋ is trivial, i.e. D = 0.
inline SmoothnessReport smooth_total_space(const GluingDescriptor& gd) {
  SmoothnessReport s;
  s.section_class = gd.section_class();
  s.section_square = bilinear(gd.plus().k3().gram(), s.section_class, s.section_class);
  s.smooth = true;
  for (const auto& x : s.section_class)
    if (x != 0) s.smooth = false;
  return s;
}

enum class DeformationTag { UnobstructedSmoothBody, GeneratedBySectionsAssumed };

inline std::string to_string(DeformationTag t) {
  return t == DeformationTag::UnobstructedSmoothBody ? "unobstructed-smooth-body" : "generated-by-sections-assumed";
}

struct DeformationDims {
  Rational dimension;
  DeformationTag tag = DeformationTag::UnobstructedSmoothBody;
  std::optional<Rational> h0_section;
  std::string h0_source;  // "vanishing-assumed" | "user-supplied" | ""
};

/// Virtual dimension of deformations of the glued threefold:
///   D = 0:  h¹²₊ + h¹²₋ + 1
///   D ≠ 0:  h¹²₊ + h¹²₋ + h⁰(D) − 1, with h⁰(D) = 2 + D²/2 unless supplied.
inline DeformationDims deformation_dims(const GluingDescriptor& gd, std::int64_t h12_plus, std::int64_t h12_minus,
                                        std::optional<BigInt> h0_user = std::nullopt) {
  if (h12_plus < 0 || h12_minus < 0) throw ValidationError("h12 values must be nonnegative");
  DeformationDims out;
  SmoothnessReport s = smooth_total_space(gd);
  if (s.smooth) {
    out.dimension = h12_plus + h12_minus + 1;
    out.tag = DeformationTag::UnobstructedSmoothBody;
    return out;
  }
  Rational h0;
  if (h0_user) {
    h0 = Rational(*h0_user);
    out.h0_source = "user-supplied";
  } else {
    h0 = 2 + s.section_square / 2;
    out.h0_source = "vanishing-assumed";
  }
  if (h0 < 0) throw ValidationError("h0(N+ (x) N-) estimate " + format(h0) + " is negative");
  out.h0_section = h0;
  out.dimension = h12_plus + h12_minus + h0 - 1;
  out.tag = DeformationTag::GeneratedBySectionsAssumed;
  return out;
}

/// 2_S Y = (Y, S, Y) with identity gluing.
inline GluingDescriptor build_double(const FlagDescriptor& f) {
  require_valid_flag(f);
  return GluingDescriptor(f, f, Matrix::identity(f.ring().rho()));
}

/// Euler pairing on Y₊ ∪_S Y₋ for bundles given by matching pairs:
/// χ(E,F) = χ₊(E₊,F₊) + χ₋(E₋,F₋) − χ_S(E|_S, F|_S).
inline Rational glued_euler_pairing(const GluingDescriptor& gd, const ChernData& e_plus, const ChernData& e_minus,
                                    const ChernData& f_plus, const ChernData& f_minus) {
  K3Vector ep = k3_mukai_vector(gd.plus(), e_plus), em = k3_mukai_vector(gd.minus(), e_minus);
  K3Vector fp = k3_mukai_vector(gd.plus(), f_plus), fm = k3_mukai_vector(gd.minus(), f_minus);
  if (!g_pullback_match(gd.plus().k3(), gd.a(), ep, em) || !g_pullback_match(gd.plus().k3(), gd.a(), fp, fm))
    throw ValidationError("bundle pair restrictions do not match across S");
  return euler_chi(gd.plus().ring(), e_plus, f_plus).value + euler_chi(gd.minus().ring(), e_minus, f_minus).value -
         euler_chi_k3(gd.plus().k3(), ep, fp);
}

/// Self-pairing of the doubled vector 2_S E; zero because the form is skew.
inline Rational double_self_pairing(const GluingDescriptor& gd, const ChernData& e) {
  return glued_euler_pairing(gd, e, e, e, e);
}

/// For an involution A of the restricted lattice, whether A fixes s|_S.
inline bool involution_fixes_anticanonical(const FlagDescriptor& f, const Matrix& involution) {
  const std::size_t n = f.ring().rho();
  if (involution.rows() != n || involution.cols() != n) throw ValidationError("involution must be rho x rho");
  if (!(involution * involution == Matrix::identity(n))) throw ValidationError("matrix is not an involution: A^2 != I");
  if (!(involution.transpose() * f.k3().gram() * involution == f.k3().gram()))
    throw ValidationError("involution is not an isometry of the restricted lattice");
  RationalVector s = to_rational(f.s_coords());
  return involution * s == s;
}

}  // namespace mukaikit
