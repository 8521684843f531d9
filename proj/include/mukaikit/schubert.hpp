#pragma once

// Schubert calculus on the Grassmannian G(2,n) of lines in P^{n-1}.
//
// Classes σ_(a,b) are indexed by two-row partitions n−2 ≥ a ≥ b ≥ 0. Products
// use Pieri for σ_k and Giambelli σ_(a,b) = σ_a·σ_b − σ_(a+1)·σ_(b−1) for the rest.

#include "mukaikit/rational.hpp"

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mukaikit::schubert {

struct Partition {
  int first = 0;
  int second = 0;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

inline std::string to_string(const Partition& p) {
  return "sigma(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

class SchubertElement {
 public:
  explicit SchubertElement(int n) : n_(n) {
    if (n < 2) throw ValidationError("G(2,n) requires n >= 2");
  }

  /// σ_(a,b); zero when the partition leaves the 2×(n−2) box.
  static SchubertElement sigma(int n, int a, int b = 0) {
    if (a < b || b < 0) throw ValidationError("partition must satisfy a >= b >= 0");
    SchubertElement x(n);
    if (a <= n - 2) x.terms_[{a, b}] = 1;
    return x;
  }

  static SchubertElement one(int n) { return sigma(n, 0, 0); }

  int n() const { return n_; }
  int box() const { return n_ - 2; }
  const std::map<Partition, BigInt>& terms() const { return terms_; }

  BigInt coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add(const Partition& p, const BigInt& c) {
    if (p.first < p.second || p.second < 0 || p.first > box())
      throw ValidationError(to_string(p) + " is outside the box of G(2," + std::to_string(n_) + ")");
    BigInt& slot = terms_[p];
    slot += c;
    if (slot == 0) terms_.erase(p);
  }

  SchubertElement& operator+=(const SchubertElement& o) {
    check_same(o);
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
  }
  friend SchubertElement operator+(SchubertElement a, const SchubertElement& b) { return a += b; }
  friend SchubertElement operator-(SchubertElement a, const SchubertElement& b) { return a += b * BigInt(-1); }
  friend SchubertElement operator*(SchubertElement a, const BigInt& s) {
    if (s == 0) return SchubertElement(a.n_);
    for (auto& [p, c] : a.terms_) c *= s;
    return a;
  }
  friend bool operator==(const SchubertElement&, const SchubertElement&) = default;

  void check_same(const SchubertElement& o) const {
    if (o.n_ != n_) throw ValidationError("Schubert classes live on different Grassmannians");
  }

 private:
  int n_;
  std::map<Partition, BigInt> terms_;
};

namespace detail {

// x·σ_k without range checks; k beyond the box gives zero.
inline SchubertElement pieri_unchecked(const SchubertElement& x, int k) {
  const int box = x.box();
  SchubertElement out(x.n());
  if (k < 0 || k > box) return out;
  for (const auto& [p, c] : x.terms()) {
    // Horizontal strip: a' ≥ a ≥ b' ≥ b with a' + b' = a + b + k.
    for (int b2 = p.second; b2 <= p.first; ++b2) {
      int a2 = p.first + p.second + k - b2;
      if (a2 < p.first || a2 > box) continue;
      out.add({a2, b2}, c);
    }
  }
  return out;
}

}  // namespace detail

/// x·σ_k by the Pieri rule.
inline SchubertElement pieri_mult(const SchubertElement& x, int k) {
  if (k < 0 || k > x.box())
    throw ValidationError("Pieri index " + std::to_string(k) + " out of range [0, " + std::to_string(x.box()) + "]");
  return detail::pieri_unchecked(x, k);
}

inline SchubertElement multiply(const SchubertElement& x, const SchubertElement& y) {
  x.check_same(y);
  SchubertElement out(x.n());
  for (const auto& [p, c] : y.terms()) {
    SchubertElement term = detail::pieri_unchecked(detail::pieri_unchecked(x, p.first), p.second);
    if (p.second > 0)
      term = term - detail::pieri_unchecked(detail::pieri_unchecked(x, p.first + 1), p.second - 1);
    out += term * c;
  }
  return out;
}

inline SchubertElement power(const SchubertElement& x, int e) {
  if (e < 0) throw ValidationError("negative exponent");
  SchubertElement out = SchubertElement::one(x.n());
  for (int i = 0; i < e; ++i) out = multiply(out, x);
  return out;
}

/// Degree map: coefficient of the point class σ_(n−2,n−2).
inline BigInt integrate(const SchubertElement& x) { return x.coefficient({x.box(), x.box()}); }

/// χ(G(2,n)) as the number of Schubert cells.
inline BigInt euler_char_g2n(int n) {
  if (n < 2) throw ValidationError("G(2,n) requires n >= 2");
  return binomial(n, 2);
}

// ---------------------------------------------------------------------------
// Symmetric polynomials in the two Chern roots of the dual tautological bundle.

/// Polynomial in x₁, x₂ with integer coefficients, keyed by (deg x₁, deg x₂).
using BiPoly = std::map<std::pair<int, int>, BigInt>;

inline BiPoly bipoly_multiply(const BiPoly& p, const BiPoly& q) {
  BiPoly out;
  for (const auto& [e1, c1] : p)
    for (const auto& [e2, c2] : q) {
      auto& slot = out[{e1.first + e2.first, e1.second + e2.second}];
      slot += c1 * c2;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline bool is_symmetric(const BiPoly& p) {
  for (const auto& [e, c] : p) {
    auto it = p.find({e.second, e.first});
    if (it == p.end() || it->second != c) return false;
  }
  return true;
}

/// Rewrites a symmetric polynomial in e₁ = x₁ + x₂ and e₂ = x₁x₂ by
/// repeatedly removing the leading monomial x₁^a x₂^b (a ≥ b) with
/// c·e₁^{a−b}·e₂^b. Result is keyed by (power of e₁, power of e₂).
inline BiPoly to_elementary(BiPoly p) {
  if (!is_symmetric(p)) throw ValidationError("polynomial is not symmetric in the Chern roots");
  BiPoly out;
  while (!p.empty()) {
    // Lexicographically largest exponent with a ≥ b.
    std::pair<int, int> lead{-1, -1};
    for (const auto& [e, c] : p)
      if (e.first >= e.second && e > lead) lead = e;
    BigInt c = p[lead];
    int a = lead.first, b = lead.second;
    out[{a - b, b}] += c;
    // e₁^{a−b}e₂^b expanded in x₁, x₂.
    BiPoly mono{{{b, b}, 1}};
    BiPoly e1{{{1, 0}, 1}, {{0, 1}, 1}};
    for (int i = 0; i < a - b; ++i) mono = bipoly_multiply(mono, e1);
    for (const auto& [e, cc] : mono) {
      auto& slot = p[e];
      slot -= c * cc;
    }
    std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
  }
  return out;
}

/// ∫_{G(2,n)} c_top(Sym^k S*) where S is the tautological subbundle:
/// the Chern roots of Sym^k S* are i·x₁ + (k−i)·x₂ for i = 0..k.
inline BigInt ctop_sym_k_dual_tautological(int n, int k) {
  if (k < 0) throw ValidationError("symmetric power must be nonnegative");
  BiPoly prod{{{0, 0}, 1}};
  for (int i = 0; i <= k; ++i) {
    BiPoly factor;
    if (i != 0) factor[{1, 0}] = i;
    if (k - i != 0) factor[{0, 1}] = k - i;
    prod = bipoly_multiply(prod, factor);
  }
  BiPoly elem = to_elementary(prod);
  // c(S*) = 1 + σ₁ + σ₁₁.
  SchubertElement e1 = SchubertElement::sigma(n, 1), e2 = SchubertElement::sigma(n, 1, 1);
  SchubertElement total(n);
  for (const auto& [pq, c] : elem) total += multiply(power(e1, pq.first), power(e2, pq.second)) * c;
  return integrate(total);
}

/// Lines on a generic quintic threefold: c_top(Sym⁵ S*) on G(2,5).
inline BigInt lines_on_quintic() { return ctop_sym_k_dual_tautological(5, 5); }

namespace detail {

inline SchubertElement determinant(const std::vector<std::vector<SchubertElement>>& m, int n) {
  const std::size_t size = m.size();
  if (size == 1) return m[0][0];
  SchubertElement out(n);
  for (std::size_t col = 0; col < size; ++col) {
    if (m[0][col].terms().empty()) continue;
    std::vector<std::vector<SchubertElement>> minor;
    for (std::size_t i = 1; i < size; ++i) {
      std::vector<SchubertElement> row;
      for (std::size_t j = 0; j < size; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    SchubertElement term = multiply(m[0][col], determinant(minor, n));
    out = col % 2 == 0 ? out + term : out - term;
  }
  return out;
}

}  // namespace detail

/// c_top(TG) for TG = S*⊗Q, as the resultant of Π(t − y_j) (roots of Q,
/// coefficients (−1)^k σ_k) and t² + σ₁t + σ₁₁ (roots −x_i of S*).
inline SchubertElement ctop_tangent(int n) {
  const int m = n - 2;
  if (m < 1) return SchubertElement::one(n);
  std::vector<SchubertElement> a;  // leading coefficient first
  for (int k = 0; k <= m; ++k) {
    SchubertElement s = SchubertElement::sigma(n, k);
    a.push_back(k % 2 == 0 ? s : s * BigInt(-1));
  }
  std::vector<SchubertElement> b{SchubertElement::one(n), SchubertElement::sigma(n, 1), SchubertElement::sigma(n, 1, 1)};
  const int size = m + 2;
  std::vector<std::vector<SchubertElement>> syl(size, std::vector<SchubertElement>(size, SchubertElement(n)));
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k <= m; ++k) syl[r][r + k] = a[k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= 2; ++k) syl[2 + r][r + k] = b[k];
  return detail::determinant(syl, n);
}

struct OcticDoubleLines {
  BigInt total;           // 2·χ(G(2,4))
  BigInt ctop_cotangent;  // ∫ c_top(T*G(2,4)) = (−1)^4 ∫ c_top(TG)
  BigInt cell_count;      // χ(G(2,4))
};

/// Lines on the double octic: two Lagrangian copies of G(2,4) meeting in
/// Hilb⁴(S), each contributing its self-intersection c_top(T*G).
inline OcticDoubleLines lines_on_octic_double() {
  OcticDoubleLines out;
  out.cell_count = euler_char_g2n(4);
  out.ctop_cotangent = integrate(ctop_tangent(4));  // dimension 4 is even
  out.total = 2 * out.ctop_cotangent;
  return out;
}

struct FourLinesNote {
  BigInt total;
  std::vector<std::pair<std::string, BigInt>> parts;
  BigInt schubert_check;  // ∫ σ₁⁴ on G(2,4)
};

/// Lines meeting four general lines in P³, counted on the degeneration where
/// the lines pair off into two coplanar pairs.
inline FourLinesNote four_lines_degeneration_note(int n = 4) {
  if (n != 4) throw ValidationError("the four-lines degeneration lives on G(2,4) only");
  FourLinesNote note;
  note.parts = {{"line through l1∩l2 and m1∩m2", 1}, {"line π_l ∩ π_m", 1}};
  for (const auto& p : note.parts) note.total += p.second;
  note.schubert_check = integrate(power(SchubertElement::sigma(4, 1), 4));
  return note;
}

/// Parses products such as "sigma1^4", "sigma33", "sigma(2,1)*sigma1" or "1".
inline SchubertElement parse_expression(int n, std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("schubert expression '" + std::string(text) + "' at offset " + std::to_string(i) + ": " + why);
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&] {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("expected a number");
    return std::stoi(std::string(text.substr(start, i - start)));
  };

  SchubertElement result = SchubertElement::one(n);
  bool first = true;
  for (;;) {
    skip_ws();
    if (!first) {
      if (i == text.size()) break;
      if (text[i] != '*') fail("expected '*'");
      ++i;
      skip_ws();
    }
    first = false;
    SchubertElement factor(n);
    if (text.substr(i, 5) == "sigma") {
      i += 5;
      if (i < text.size() && text[i] == '_') ++i;
      int a = 0, b = 0;
      if (i < text.size() && (text[i] == '(' || text[i] == '{')) {
        char close = text[i] == '(' ? ')' : '}';
        ++i;
        a = read_int();
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          skip_ws();
          b = read_int();
        }
        if (i >= text.size() || text[i] != close) fail("unbalanced bracket");
        ++i;
      } else {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        std::string digits(text.substr(start, i - start));
        if (digits.size() == 1) {
          a = digits[0] - '0';
        } else if (digits.size() == 2) {
          a = digits[0] - '0';
          b = digits[1] - '0';
        } else {
          fail("use sigma(a,b) for indices with more than two digits");
        }
      }
      if (a < b) fail("partition must satisfy a >= b");
      factor = SchubertElement::sigma(n, a, b);
    } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      factor = SchubertElement::one(n) * BigInt(read_int());
    } else {
      fail("expected 'sigma' or an integer");
    }
    skip_ws();
    int exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      exponent = read_int();
    }
    result = multiply(result, power(factor, exponent));
    skip_ws();
    if (i == text.size()) break;
  }
  return result;
}

}  // namespace mukaikit::schubert
