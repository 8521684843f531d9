#pragma once

// JSON documents (manifolds, flags, bundles, gluings, CD registries) and
// deterministic report rendering.
//
// Rationals are written as JSON integers when they fit in 64 bits and as
// "p/q" strings otherwise. Object keys are emitted sorted.

#include "mukaikit/degeneration.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

namespace mukaikit::io {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// scalars

inline Json to_json(const BigInt& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(z));
  return Json(z.str());
}

inline Json to_json(const Rational& q) {
  if (is_integer(q)) return to_json(numerator(q));
  return Json(format(q));
}

inline Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (const auto& row : m.to_rows()) a.push_back(to_json(row));
  return a;
}

inline Json to_json(const GradedClass& x) {
  return Json{{"a0", to_json(x.a0)}, {"a2", to_json(x.a2)}, {"a4", to_json(x.a4)}, {"a6", to_json(x.a6)}};
}

inline Json to_json(const K3Vector& v) {
  return Json{{"v0", to_json(v.v0)}, {"v2", to_json(v.v2)}, {"v4", to_json(v.v4)}};
}

inline Json to_json(const ChernData& e) {
  return Json{{"rank", e.rank}, {"c1", to_json(e.c1)}, {"c2", to_json(e.c2)}, {"c3", to_json(e.c3)}};
}

inline Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

inline BigInt integer_from_json(const Json& j, const std::string& where) {
  Rational q = rational_from_json(j, where);
  if (!is_integer(q)) throw ParseError(where + ": expected an integer");
  return numerator(q);
}

inline std::int64_t int64_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

inline RationalVector rational_vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  RationalVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline IntVector int_vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(int64_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a nested array");
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(rational_vector_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return Matrix::from_rows(rows);
}

inline const Json& require(const Json& obj, const char* key, const std::string& doc) {
  if (!obj.is_object()) throw ParseError(doc + ": expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(doc + ": missing key '" + key + "'");
  return *it;
}

/// Runs `fn`, turning JSON type errors (wrong value kinds) into ParseError.
template <class F>
auto guarded(const std::string& doc, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError(doc + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// files

/// Parses JSON text; syntax errors carry line and column.
inline Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    byte = std::min(byte, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": JSON syntax error");
  }
}

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path.string());
}

inline void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError(path.string() + ": cannot write file");
  out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// manifolds and flags

struct ManifoldDocument {
  std::string kind;  // "cy3" | "fano3"
  ThreefoldRing ring;
  std::optional<IntVector> s_coords;
  std::optional<std::int64_t> h1_ty;
  std::optional<std::int64_t> h0_n;
  std::optional<bool> first_obstruction_vanishes;

  /// Flag on this manifold; s defaults to c₁ when the document has none.
  FlagDescriptor flag() const {
    FlagDescriptor f(ring, s_coords.value_or(ring.c1_coords()), h1_ty, h0_n);
    f.first_obstruction_vanishes = first_obstruction_vanishes;
    return f;
  }
};

/// Builds the document without enforcing flag conditions.
inline ManifoldDocument manifold_from_json(const Json& j, const std::string& doc = "manifold") {
  ThreefoldRing::Data d;
  d.name = require(j, "name", doc).get<std::string>();
  std::string kind = require(j, "kind", doc).get<std::string>();
  if (kind != "cy3" && kind != "fano3") throw ParseError(doc + ": kind must be \"cy3\" or \"fano3\"");
  std::int64_t rho = int64_from_json(require(j, "rho", doc), doc + ".rho");
  if (rho < 1) throw ValidationError(doc + ": rho must be at least 1");
  const Json& basis = require(j, "basis", doc);
  if (!basis.is_array()) throw ParseError(doc + ".basis: expected an array of strings");
  for (const auto& b : basis) d.basis_labels.push_back(b.get<std::string>());
  if (static_cast<std::int64_t>(d.basis_labels.size()) != rho)
    throw ValidationError(doc + ": basis has " + std::to_string(d.basis_labels.size()) + " labels, rho = " + std::to_string(rho));
  const Json& triple = require(j, "triple", doc);
  const std::size_t n = static_cast<std::size_t>(rho);
  if (!triple.is_array() || triple.size() != n) throw ValidationError(doc + ".triple: expected rho x rho x rho nested array");
  for (std::size_t a = 0; a < n; ++a) {
    if (!triple[a].is_array() || triple[a].size() != n) throw ValidationError(doc + ".triple: expected rho x rho x rho nested array");
    for (std::size_t b = 0; b < n; ++b) {
      IntVector row = int_vector_from_json(triple[a][b], doc + ".triple");
      if (row.size() != n) throw ValidationError(doc + ".triple: expected rho x rho x rho nested array");
      d.triple.insert(d.triple.end(), row.begin(), row.end());
    }
  }
  d.c1_coords = int_vector_from_json(require(j, "c1", doc), doc + ".c1");
  d.c2_values = int_vector_from_json(require(j, "c2_values", doc), doc + ".c2_values");
  d.chi_top = int64_from_json(require(j, "chi_top", doc), doc + ".chi_top");
  d.h12 = int64_from_json(require(j, "h12", doc), doc + ".h12");

  ManifoldDocument m{kind, ThreefoldRing(std::move(d)), {}, {}, {}, {}};
  if (kind == "cy3" && !m.ring.is_calabi_yau()) throw ValidationError(doc + ": kind cy3 requires c1 = 0");
  if (kind == "fano3" && m.ring.is_calabi_yau()) throw ValidationError(doc + ": kind fano3 requires c1 != 0");
  if (j.contains("s_coords")) m.s_coords = int_vector_from_json(j["s_coords"], doc + ".s_coords");
  if (j.contains("h1_TY")) m.h1_ty = int64_from_json(j["h1_TY"], doc + ".h1_TY");
  if (j.contains("h0_N")) m.h0_n = int64_from_json(j["h0_N"], doc + ".h0_N");
  if (j.contains("first_obstruction_vanishes")) m.first_obstruction_vanishes = j["first_obstruction_vanishes"].get<bool>();
  if (m.s_coords && m.s_coords->size() != n) throw ValidationError(doc + ": s_coords must have rho entries");
  return m;
}

/// Loads a manifold document. Ring invariants are always enforced; when the
/// document declares s_coords the flag conditions are enforced as well.
inline ManifoldDocument load_manifold(const std::filesystem::path& path) {
  Json j = read_json_file(path);
  ManifoldDocument m = guarded(path.string(), [&] { return manifold_from_json(j, path.string()); });
  if (m.s_coords) require_valid_flag(m.flag());
  return m;
}

/// Loads a document that must describe a valid flag.
inline FlagDescriptor load_flag(const std::filesystem::path& path) {
  Json j = read_json_file(path);
  ManifoldDocument m = guarded(path.string(), [&] { return manifold_from_json(j, path.string()); });
  FlagDescriptor f = m.flag();
  require_valid_flag(f);
  return f;
}

inline Json manifold_to_json(const ManifoldDocument& m) {
  const ThreefoldRing& r = m.ring;
  const std::size_t n = r.rho();
  Json triple = Json::array();
  for (std::size_t a = 0; a < n; ++a) {
    Json plane = Json::array();
    for (std::size_t b = 0; b < n; ++b) {
      Json row = Json::array();
      for (std::size_t c = 0; c < n; ++c) row.push_back(r.triple(a, b, c));
      plane.push_back(row);
    }
    triple.push_back(plane);
  }
  Json j{{"name", r.name()},           {"kind", m.kind},          {"rho", n},
         {"basis", r.basis_labels()},  {"triple", triple},        {"c1", r.c1_coords()},
         {"c2_values", r.c2_values()}, {"chi_top", r.chi_top()},  {"h12", r.h12()}};
  if (m.s_coords) j["s_coords"] = *m.s_coords;
  if (m.h1_ty) j["h1_TY"] = *m.h1_ty;
  if (m.h0_n) j["h0_N"] = *m.h0_n;
  if (m.first_obstruction_vanishes) j["first_obstruction_vanishes"] = *m.first_obstruction_vanishes;
  return j;
}

// ---------------------------------------------------------------------------
// bundles

struct BundleDocument {
  std::string manifold;
  ChernData chern;
  bool stable = false;
  bool exceptional = false;
  bool instanton = false;
};

inline BundleDocument bundle_from_json(const Json& j, const std::string& doc = "bundle") {
  BundleDocument b;
  b.manifold = require(j, "manifold", doc).get<std::string>();
  b.chern.rank = int64_from_json(require(j, "rank", doc), doc + ".rank");
  if (b.chern.rank < 1) throw ValidationError(doc + ": rank must be at least 1");
  b.chern.c1 = rational_vector_from_json(require(j, "c1", doc), doc + ".c1");
  b.chern.c2 = rational_vector_from_json(require(j, "c2", doc), doc + ".c2");
  b.chern.c3 = rational_from_json(require(j, "c3", doc), doc + ".c3");
  if (j.contains("labels")) {
    const Json& l = j["labels"];
    b.stable = l.value("stable", false);
    b.exceptional = l.value("exceptional", false);
    b.instanton = l.value("instanton", false);
  }
  return b;
}

inline BundleDocument load_bundle(const std::filesystem::path& path, const ThreefoldRing& ring) {
  Json j = read_json_file(path);
  BundleDocument b = guarded(path.string(), [&] { return bundle_from_json(j, path.string()); });
  if (b.manifold != ring.name())
    throw ValidationError(path.string() + ": bundle refers to manifold '" + b.manifold + "', loaded '" + ring.name() + "'");
  check_in_ring(ring, b.chern);
  return b;
}

inline Json bundle_to_json(const BundleDocument& b) {
  Json j = to_json(b.chern);
  j["manifold"] = b.manifold;
  j["labels"] = Json{{"stable", b.stable}, {"exceptional", b.exceptional}, {"instanton", b.instanton}};
  return j;
}

// ---------------------------------------------------------------------------
// gluings

struct GluingDocument {
  std::string name;
  GluingDescriptor gluing;
  std::optional<BigInt> h0_section;
  std::optional<std::int64_t> h12_plus;
  std::optional<std::int64_t> h12_minus;
};

inline FlagDescriptor flag_ref_from_json(const Json& j, const std::filesystem::path& base, const std::string& where) {
  if (j.is_string()) return load_flag(base / j.get<std::string>());
  FlagDescriptor f = manifold_from_json(j, where).flag();
  require_valid_flag(f);
  return f;
}

inline GluingDocument gluing_from_json(const Json& j, const std::filesystem::path& base, const std::string& doc = "gluing") {
  FlagDescriptor plus = flag_ref_from_json(require(j, "plus", doc), base, doc + ".plus");
  FlagDescriptor minus = flag_ref_from_json(require(j, "minus", doc), base, doc + ".minus");
  Matrix a = j.contains("A") ? matrix_from_json(j["A"], doc + ".A") : Matrix::identity(plus.ring().rho());
  std::optional<RationalVector> d;
  if (j.contains("section_class")) d = rational_vector_from_json(j["section_class"], doc + ".section_class");
  std::optional<Matrix> cross;
  if (j.contains("cross_gram")) cross = matrix_from_json(j["cross_gram"], doc + ".cross_gram");
  GluingDocument g{j.value("name", std::string("gluing")), GluingDescriptor(plus, minus, a, d, cross), {}, {}, {}};
  if (j.contains("h0_section")) g.h0_section = integer_from_json(j["h0_section"], doc + ".h0_section");
  if (j.contains("h12_plus")) g.h12_plus = int64_from_json(j["h12_plus"], doc + ".h12_plus");
  if (j.contains("h12_minus")) g.h12_minus = int64_from_json(j["h12_minus"], doc + ".h12_minus");
  return g;
}

inline GluingDocument load_gluing(const std::filesystem::path& path) {
  Json j = read_json_file(path);
  return guarded(path.string(), [&] { return gluing_from_json(j, path.parent_path(), path.string()); });
}

inline Json gluing_to_json(const GluingDescriptor& gd, const std::string& name) {
  auto flag_json = [](const FlagDescriptor& f) {
    ManifoldDocument m{f.ring().is_calabi_yau() ? "cy3" : "fano3", f.ring(), f.s_coords(), f.h1_ty(), f.h0_n(),
                       f.first_obstruction_vanishes};
    return manifold_to_json(m);
  };
  Json j{{"name", name},
         {"plus", flag_json(gd.plus())},
         {"minus", flag_json(gd.minus())},
         {"A", to_json(gd.a())},
         {"section_class", to_json(gd.section_class())}};
  if (gd.cross_gram()) j["cross_gram"] = to_json(*gd.cross_gram());
  return j;
}

// ---------------------------------------------------------------------------
// CD registry

inline Json to_json(const CDEntry& e) {
  Json j{{"id", e.id},
         {"manifold", e.manifold},
         {"vector_label", e.vector_label},
         {"provenance", to_string(e.provenance)},
         {"citation", e.citation},
         {"exceptional", e.exceptional},
         {"parents", e.parents},
         {"constraint", e.constraint}};
  if (e.value.is_numeric())
    j["value"] = to_json(*e.value.number);
  else
    j["value_symbol"] = e.value.symbol;
  if (e.vector) j["vector"] = to_json(*e.vector);
  if (e.k3_vector) j["k3_vector"] = to_json(*e.k3_vector);
  if (e.sign_note) j["sign_note"] = *e.sign_note;
  return j;
}

inline Json to_json(const CDRegistry& reg) {
  Json entries = Json::array();
  for (const auto& [id, e] : reg.entries()) entries.push_back(to_json(e));
  return Json{{"entries", entries}};
}

inline GradedClass graded_from_json(const Json& j, const std::string& where) {
  return {rational_from_json(require(j, "a0", where), where + ".a0"),
          rational_vector_from_json(require(j, "a2", where), where + ".a2"),
          rational_vector_from_json(require(j, "a4", where), where + ".a4"),
          rational_from_json(require(j, "a6", where), where + ".a6")};
}

inline K3Vector k3_from_json(const Json& j, const std::string& where) {
  return {rational_from_json(require(j, "v0", where), where + ".v0"),
          rational_vector_from_json(require(j, "v2", where), where + ".v2"),
          rational_from_json(require(j, "v4", where), where + ".v4")};
}

inline CDRegistry registry_from_json(const Json& j, const std::string& doc = "registry") {
  CDRegistry reg;
  const Json& entries = require(j, "entries", doc);
  if (!entries.is_array()) throw ParseError(doc + ".entries: expected an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Json& x = entries[i];
    const std::string where = doc + ".entries[" + std::to_string(i) + "]";
    CDEntry e;
    e.id = require(x, "id", where).get<std::string>();
    e.manifold = x.value("manifold", std::string());
    e.vector_label = x.value("vector_label", std::string());
    e.provenance = provenance_from_string(require(x, "provenance", where).get<std::string>());
    e.citation = x.value("citation", std::string());
    e.exceptional = x.value("exceptional", false);
    if (x.contains("parents")) e.parents = x["parents"].get<std::vector<std::string>>();
    e.constraint = x.value("constraint", std::string());
    if (x.contains("value"))
      e.value = CDValue::of(integer_from_json(x["value"], where + ".value"));
    else
      e.value = CDValue::named(require(x, "value_symbol", where).get<std::string>());
    if (x.contains("vector")) e.vector = graded_from_json(x["vector"], where + ".vector");
    if (x.contains("k3_vector")) e.k3_vector = k3_from_json(x["k3_vector"], where + ".k3_vector");
    if (x.contains("sign_note")) e.sign_note = x["sign_note"].get<std::string>();
    reg.insert(std::move(e));
  }
  return reg;
}

/// Missing file means an empty registry.
inline CDRegistry load_registry(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return {};
  Json j = read_json_file(path);
  return guarded(path.string(), [&] { return registry_from_json(j, path.string()); });
}

inline void save_registry(const std::filesystem::path& path, const CDRegistry& reg) { write_json_file(path, to_json(reg)); }

inline Json to_json(const Constant& c) {
  Json j{{"key", c.key}, {"description", c.description}, {"citation", c.citation}};
  if (c.value)
    j["value"] = to_json(*c.value);
  else
    j["value"] = nullptr;
  return j;
}

// ---------------------------------------------------------------------------
// reports

enum class Format { Text, Json };

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "unknown";
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + "]";
  }
  if (v.is_object()) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, x] : v.items()) {
      s += (first ? "" : ", ") + k + ": " + scalar_text(x);
      first = false;
    }
    return s + "}";
  }
  return v.dump();
}

inline void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  out.emplace_back(prefix, scalar_text(v));
}

}  // namespace detail

/// Renders a result object. Text: one "key  value" line per leaf, keys
/// aligned and sorted. JSON: pretty-printed with sorted keys.
inline std::string emit_report(const Json& result, Format format) {
  if (format == Format::Json) return result.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> lines;
  detail::flatten(result, "", lines);
  std::size_t width = 0;
  for (const auto& [k, v] : lines) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : lines) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

}  // namespace mukaikit::io
