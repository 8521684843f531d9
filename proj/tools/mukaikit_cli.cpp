// mukaikit command-line front end.
//
// Exit codes: 0 success, 1 domain validation failure, 2 document parse
// failure, 64 usage error (unknown subcommand or bad flags).

#include "mukaikit/io.hpp"
#include "mukaikit/mukaikit.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace mukaikit;
using io::Json;

constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitUsage = 64;

struct Options {
  bool json = false;
  std::string manifold;
  std::string flag;
  std::vector<std::string> bundles;
  std::string gluing;
  std::string registry;
  std::string line;
  std::optional<std::int64_t> k;
};

/// Result of one command: the report plus an exit status.
struct Outcome {
  Json report;
  int status = 0;
};

RationalVector parse_vector(const std::string& text, std::size_t rho) {
  RationalVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != rho)
    throw ValidationError("vector '" + text + "' has " + std::to_string(v.size()) + " entries, expected " + std::to_string(rho));
  return v;
}

Matrix parse_matrix(const std::string& text) {
  std::vector<RationalVector> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    RationalVector r;
    std::stringstream rs(row);
    std::string item;
    while (std::getline(rs, item, ',')) r.push_back(parse_rational(item));
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows);
}

/// Polarization / twisting class: --line, or the first basis vector.
RationalVector line_or_default(const Options& o, std::size_t rho) {
  if (!o.line.empty()) return parse_vector(o.line, rho);
  RationalVector h(rho);
  h[0] = 1;
  return h;
}

io::ManifoldDocument load_context(const Options& o) {
  if (!o.flag.empty()) {
    io::Json j = io::read_json_file(o.flag);
    io::ManifoldDocument m = io::guarded(o.flag, [&] { return io::manifold_from_json(j, o.flag); });
    require_valid_flag(m.flag());
    if (!m.s_coords) m.s_coords = m.ring.c1_coords();
    return m;
  }
  if (!o.manifold.empty()) return io::load_manifold(o.manifold);
  throw ValidationError("this command needs --manifold or --flag");
}

std::vector<ChernData> load_bundles(const Options& o, const ThreefoldRing& r, std::size_t count) {
  if (o.bundles.size() != count)
    throw ValidationError("expected " + std::to_string(count) + " --bundle argument(s), got " + std::to_string(o.bundles.size()));
  std::vector<ChernData> out;
  for (const auto& path : o.bundles) out.push_back(io::load_bundle(path, r).chern);
  return out;
}

Json kernel_json(const KernelReport& k) {
  Json basis = Json::array();
  for (const auto& v : k.basis) basis.push_back(io::to_json(v));
  return Json{{"dimension", k.dimension}, {"basis", basis}};
}

// ---------------------------------------------------------------------------
// commands

Outcome cmd_mukai(const Options& o) {
  auto doc = load_context(o);
  ChernData e = load_bundles(o, doc.ring, 1)[0];
  MukaiVector m = mukai_vector(doc.ring, e);
  Json r{{"manifold", doc.ring.name()},
         {"chern_character", io::to_json(chern_character(doc.ring, e))},
         {"mukai_vector", io::to_json(m.value)},
         {"normalization", to_string(m.normalization)}};
  if (doc.s_coords) r["k3_mukai_vector"] = io::to_json(k3_mukai_vector(doc.flag(), e));
  return {r};
}

Outcome cmd_chi(const Options& o) {
  auto doc = load_context(o);
  auto es = load_bundles(o, doc.ring, 2);
  PairingResult chi = euler_chi(doc.ring, es[0], es[1]);
  ChiSplit split = chi_split(doc.ring, es[0], es[1]);
  Json r{{"result", io::to_json(chi.value)},
         {"chi_reverse", io::to_json(euler_chi(doc.ring, es[1], es[0]).value)},
         {"chi_plus", io::to_json(split.symmetric)},
         {"chi_minus", io::to_json(split.skew)}};
  if (chi.integrality_note) r["warning"] = *chi.integrality_note;
  return {r};
}

Outcome cmd_pair(const Options& o) {
  auto doc = load_context(o);
  auto es = load_bundles(o, doc.ring, 2);
  GradedClass u = mukai_vector(doc.ring, es[0]).value, v = mukai_vector(doc.ring, es[1]).value;
  Json r{{"result", io::to_json(mukai_pairing_3fold(doc.ring, u, v))}};
  if (doc.s_coords) {
    FlagDescriptor f = doc.flag();
    r["k3_pairing"] = io::to_json(mukai_pairing_k3(f.k3(), k3_mukai_vector(f, es[0]), k3_mukai_vector(f, es[1])));
  }
  return {r};
}

Outcome cmd_restrict(const Options& o) {
  if (o.flag.empty()) throw ValidationError("restrict needs --flag");
  auto doc = load_context(o);
  FlagDescriptor f = doc.flag();
  ChernData e = load_bundles(o, doc.ring, 1)[0];
  RestrictionReport rep = mukai_restrict(f, e);
  return {Json{{"result", io::to_json(rep.vector)},
               {"square", io::to_json(mukai_pairing_k3(f.k3(), rep.vector, rep.vector))},
               {"lattice_expression", io::to_json(rep.lattice_expression)},
               {"lattice_expression_matches", rep.lattice_expression_matches},
               {"grr_matches", rep.grr_matches}}};
}

Outcome cmd_vdim(const Options& o) {
  auto doc = load_context(o);
  ChernData e = load_bundles(o, doc.ring, 1)[0];
  if (o.flag.empty() && doc.ring.is_calabi_yau()) {
    VdimCy3Report rep = vdim_cy3(doc.ring, e);
    Json r{{"result", rep.vdim}, {"chi_self", io::to_json(rep.chi_self)}};
    if (rep.note) r["note"] = *rep.note;
    return {r};
  }
  if (!doc.s_coords) throw ValidationError("vdim on a non-Calabi-Yau manifold needs a flag (s_coords)");
  FlagDescriptor f = doc.flag();
  require_valid_flag(f);
  K3Vector v = k3_mukai_vector(f, e);
  Rational flag_dim = vdim_flag(f, e);
  Rational k3_dim = vdim_k3(f.k3(), v);
  NonemptyReport ne = mukai_nonempty(f.k3(), v);
  Json nonempty{{"nonempty", ne.nonempty}, {"primitive", ne.primitive}};
  if (ne.content) nonempty["content"] = io::to_json(*ne.content);
  return {Json{{"result", io::to_json(flag_dim)},
               {"vdim_k3", io::to_json(k3_dim)},
               {"doubling_holds", k3_dim == 2 * flag_dim},
               {"k3_vector", io::to_json(v)},
               {"k3_square", io::to_json(ne.square)},
               {"mukai_criterion", nonempty}}};
}

Outcome cmd_twist(const Options& o) {
  auto doc = load_context(o);
  ChernData e = load_bundles(o, doc.ring, 1)[0];
  RationalVector l = line_or_default(o, doc.ring.rho());
  std::int64_t k = o.k.value_or(1);
  RationalVector kl = l;
  for (auto& x : kl) x *= k;
  ChernData t = twist_chern(doc.ring, e, kl);
  GradedClass m = mukai_vector(doc.ring, e).value;
  BogomolovReport before = bogomolov_check(doc.ring, e, l), after = bogomolov_check(doc.ring, t, l);
  return {Json{{"twisted_chern", io::to_json(t)},
               {"twisted_mukai_vector", io::to_json(twist_T(doc.ring, m, l, k))},
               {"discriminant_degree", io::to_json(after.degree)},
               {"discriminant_invariant", before.degree == after.degree}}};
}

Outcome cmd_reflect(const Options& o, const std::optional<std::string>& h_value) {
  auto doc = load_context(o);
  auto es = load_bundles(o, doc.ring, 2);
  GradedClass m = mukai_vector(doc.ring, es[0]).value, mp = mukai_vector(doc.ring, es[1]).value;
  Json r;
  if (h_value) {
    HDeclaration h{o.bundles[0], o.bundles[1], to_integer(parse_rational(*h_value))};
    r["mode"] = "h";
    r["pairing_value"] = io::to_json(h.value);
    r["result"] = io::to_json(reflect_alpha_h(m, mp, h));
  } else {
    Rational c = mukai_pairing_3fold(doc.ring, m, mp);
    r["mode"] = "chi";
    r["pairing_value"] = io::to_json(c);
    r["result"] = io::to_json(reflect_alpha(m, mp, c));
  }
  return {r};
}

Outcome cmd_validate_flag(const std::string& path) {
  io::Json j = io::read_json_file(path);
  io::ManifoldDocument doc = io::guarded(path, [&] { return io::manifold_from_json(j, path); });
  FlagValidation v = validate_flag(doc.flag());
  Json r{{"valid", v.valid},
         {"c1_c2", v.c1_c2},
         {"chi_O_Y", io::to_json(Rational(v.c1_c2, 24))},
         {"c2_S", v.c2_s},
         {"gram", io::to_json(v.gram)},
         {"failures", v.failures}};
  return {r, v.valid ? 0 : kExitValidation};
}

Outcome cmd_double(const Options& o, const std::string& out_path) {
  if (o.flag.empty()) throw ValidationError("double needs --flag");
  FlagDescriptor f = load_context(o).flag();
  GluingDescriptor gd = build_double(f);
  SmoothnessReport s = smooth_total_space(gd);
  Json r{{"gluing", io::gluing_to_json(gd, "2_S " + f.ring().name())},
         {"section_class", io::to_json(s.section_class)},
         {"section_square", io::to_json(s.section_square)},
         {"smooth_total_space", s.smooth}};
  if (!o.bundles.empty()) {
    ChernData e = load_bundles(o, f.ring(), 1)[0];
    r["induced_self_pairing"] = io::to_json(double_self_pairing(gd, e));
  }
  if (!out_path.empty()) io::write_json_file(out_path, io::gluing_to_json(gd, "2_S " + f.ring().name()));
  return {r};
}

GluingDescriptor gluing_from_options(const Options& o) {
  if (!o.gluing.empty()) return io::load_gluing(o.gluing).gluing;
  if (!o.flag.empty()) return build_double(load_context(o).flag());
  throw ValidationError("this command needs --gluing or --flag");
}

Outcome cmd_glue_check(const Options& o, const std::string& involution) {
  if (!involution.empty()) {
    if (o.flag.empty()) throw ValidationError("--involution needs --flag");
    FlagDescriptor f = load_context(o).flag();
    require_valid_flag(f);
    return {Json{{"result", involution_fixes_anticanonical(f, parse_matrix(involution))}}};
  }
  GluingDescriptor gd = gluing_from_options(o);
  SmoothnessReport s = smooth_total_space(gd);
  Json r{{"joint_kernel", kernel_json(joint_obstruction_kernel(gd))},
         {"obstruction_kernel_plus", kernel_json(obstruction_kernel(gd.plus()))},
         {"obstruction_kernel_minus", kernel_json(obstruction_kernel(gd.minus()))},
         {"section_class", io::to_json(s.section_class)},
         {"section_square", io::to_json(s.section_square)},
         {"smooth_total_space", s.smooth}};
  if (!o.bundles.empty()) {
    if (o.bundles.size() != 2) throw ValidationError("glue-check takes --bundle <plus> --bundle <minus>");
    ChernData ep = io::load_bundle(o.bundles[0], gd.plus().ring()).chern;
    ChernData em = io::load_bundle(o.bundles[1], gd.minus().ring()).chern;
    r["pullback_match"] = g_pullback_match(gd.plus().k3(), gd.a(), k3_mukai_vector(gd.plus(), ep),
                                           k3_mukai_vector(gd.minus(), em));
  }
  return {r};
}

Outcome cmd_deform_dims(const Options& o, std::optional<std::int64_t> h12p, std::optional<std::int64_t> h12m,
                        std::optional<std::int64_t> h0) {
  std::optional<BigInt> h0_section;
  GluingDescriptor gd = [&] {
    if (!o.gluing.empty()) {
      io::GluingDocument g = io::load_gluing(o.gluing);
      if (!h12p) h12p = g.h12_plus;
      if (!h12m) h12m = g.h12_minus;
      h0_section = g.h0_section;
      return g.gluing;
    }
    return gluing_from_options(o);
  }();
  if (h0) h0_section = BigInt(*h0);
  if (!h12p) h12p = gd.plus().ring().h12();
  if (!h12m) h12m = gd.minus().ring().h12();
  DeformationDims d = deformation_dims(gd, *h12p, *h12m, h0_section);
  Json r{{"result", io::to_json(d.dimension)}, {"tag", to_string(d.tag)}, {"h12_plus", *h12p}, {"h12_minus", *h12m}};
  if (d.h0_section) {
    r["h0_section"] = io::to_json(*d.h0_section);
    r["h0_source"] = d.h0_source;
  }
  return {r};
}

Json constants_json(const std::string& key) {
  if (!key.empty()) return io::to_json(builtin_constants().at(key));
  Json all = Json::object();
  for (const auto& c : builtin_constants().entries()) all[c.key] = io::to_json(c);
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mukaikit: Mukai lattices, flags and Schubert counts in exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_flag("--json", o.json, "Emit a machine-readable JSON result");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--manifold", o.manifold, "Manifold document");
    sub->add_option("--flag", o.flag, "Flag document (manifold with s_coords)");
    sub->add_option("--bundle", o.bundles, "Bundle document (repeatable)");
  };

  std::function<Outcome()> run;

  auto* mukai = app.add_subcommand("mukai", "Mukai vector of a bundle");
  add_common(mukai);
  mukai->callback([&] { run = [&] { return cmd_mukai(o); }; });

  auto* chi = app.add_subcommand("chi", "Euler form chi(E1, E2) and its symmetric/skew parts");
  add_common(chi);
  chi->callback([&] { run = [&] { return cmd_chi(o); }; });

  auto* pair = app.add_subcommand("pair", "Mukai pairing of two bundles' vectors");
  add_common(pair);
  pair->callback([&] { run = [&] { return cmd_pair(o); }; });

  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict a Mukai vector to the K3 surface");
  add_common(restrict_cmd);
  restrict_cmd->callback([&] { run = [&] { return cmd_restrict(o); }; });

  auto* vdim = app.add_subcommand("vdim", "Virtual dimension of the moduli space");
  add_common(vdim);
  vdim->callback([&] { run = [&] { return cmd_vdim(o); }; });

  auto* twist = app.add_subcommand("twist", "Twist by a line bundle L^k");
  add_common(twist);
  twist->add_option("--k", o.k, "Twist exponent");
  twist->add_option("--line", o.line, "Line class, comma separated (default: first basis vector)");
  twist->callback([&] { run = [&] { return cmd_twist(o); }; });

  std::optional<std::string> h_value;
  auto* reflect = app.add_subcommand("reflect", "Reflection alpha_m(m')");
  add_common(reflect);
  reflect->add_option("--h-value", h_value, "Declared h(m, m') (h-mode); default is chi-mode");
  reflect->callback([&] { run = [&] { return cmd_reflect(o, h_value); }; });

  std::string validate_path;
  auto* validate = app.add_subcommand("validate-flag", "Check the quasi-Fano flag conditions");
  validate->add_option("path", validate_path, "Flag document");
  validate->add_option("--flag", validate_path, "Flag document");
  validate->callback([&] {
    run = [&] {
      if (validate_path.empty()) throw ValidationError("validate-flag needs a document path");
      return cmd_validate_flag(validate_path);
    };
  });

  std::string double_out;
  auto* dbl = app.add_subcommand("double", "Build the double 2_S Y of a flag");
  add_common(dbl);
  dbl->add_option("--out", double_out, "Write the gluing document here");
  dbl->callback([&] { run = [&] { return cmd_double(o, double_out); }; });

  std::string involution;
  auto* glue = app.add_subcommand("glue-check", "Joint obstruction kernel, smoothness and gluing checks");
  add_common(glue);
  glue->add_option("--gluing", o.gluing, "Gluing document");
  glue->add_option("--involution", involution, "Involution of the restricted lattice, rows ';'-separated");
  glue->callback([&] { run = [&] { return cmd_glue_check(o, involution); }; });

  std::optional<std::int64_t> h12p, h12m, h0;
  auto* deform = app.add_subcommand("deform-dims", "Deformation dimension of the glued threefold");
  add_common(deform);
  deform->add_option("--gluing", o.gluing, "Gluing document");
  deform->add_option("--h12-plus", h12p, "h^{1,2}(Y+)");
  deform->add_option("--h12-minus", h12m, "h^{1,2}(Y-)");
  deform->add_option("--h0", h0, "h^0(N+ (x) N-), overriding the Riemann-Roch estimate");
  deform->callback([&] { run = [&] { return cmd_deform_dims(o, h12p, h12m, h0); }; });

  // cd registry
  auto* cd = app.add_subcommand("cd", "Casson-Donaldson registry operations");
  cd->require_subcommand(1);
  cd->add_option("--registry", o.registry, "Registry file");
  std::vector<std::string> parents;
  std::string seed_kind, entry_id, label, symbol, save_out;
  std::optional<std::int64_t> euler_char;

  auto with_registry = [&](auto body) {
    return [&, body] {
      if (o.registry.empty()) throw ValidationError("cd commands need --registry <path>");
      CDRegistry reg = io::load_registry(o.registry);
      Outcome out = body(reg);
      return out;
    };
  };

  auto* seed = cd->add_subcommand("seed", "Seed a line-bundle or skyscraper entry");
  add_common(seed);
  seed->add_option("--registry", o.registry, "Registry file");
  seed->add_option("--kind", seed_kind, "line-bundle | skyscraper")->required();
  seed->add_option("--line", o.line, "Line bundle class (default trivial)");
  seed->callback([&] {
    run = with_registry([&](CDRegistry& reg) {
      auto doc = load_context(o);
      SeedKind kind;
      if (seed_kind == "line-bundle") kind = SeedKind::LineBundle;
      else if (seed_kind == "skyscraper") kind = SeedKind::Skyscraper;
      else throw ValidationError("--kind must be line-bundle or skyscraper");
      RationalVector l = o.line.empty() ? RationalVector{} : parse_vector(o.line, doc.ring.rho());
      Json e = io::to_json(cd_seed(reg, doc.ring, kind, l));
      io::save_registry(o.registry, reg);
      return Outcome{Json{{"entry", e}, {"result", e.contains("value") ? e["value"] : e["value_symbol"]}}};
    });
  });

  auto* mark = cd->add_subcommand("mark-exceptional", "Assert an entry is realised by exceptional stable bundles");
  mark->add_option("--registry", o.registry, "Registry file");
  mark->add_option("--id", entry_id, "Entry id")->required();
  mark->callback([&] {
    run = with_registry([&](CDRegistry& reg) {
      cd_mark_exceptional(reg, entry_id);
      io::save_registry(o.registry, reg);
      return Outcome{Json{{"entry", io::to_json(reg.at(entry_id))}}};
    });
  });

  auto* closure = cd->add_subcommand("closure", "Product rule CD(alpha_m(T^k m')) = CD(m) CD(m')");
  add_common(closure);
  closure->add_option("--registry", o.registry, "Registry file");
  closure->add_option("--parent", parents, "Parent ids m then m'")->expected(2);
  closure->add_option("--k", o.k, "Concrete twist level (assumed > k0)");
  closure->add_option("--line", o.line, "Polarization class");
  closure->callback([&] {
    run = with_registry([&](CDRegistry& reg) {
      if (parents.size() != 2) throw ValidationError("closure needs two --parent ids");
      std::optional<io::ManifoldDocument> doc;
      if (!o.manifold.empty() || !o.flag.empty()) doc = load_context(o);
      RationalVector h = doc ? line_or_default(o, doc->ring.rho()) : RationalVector{};
      const CDEntry& e = cd_closure(reg, parents[0], parents[1], doc ? &doc->ring : nullptr, h, o.k);
      Json j = io::to_json(e);
      io::save_registry(o.registry, reg);
      return Outcome{Json{{"entry", j}, {"result", j.contains("value") ? j["value"] : j["value_symbol"]}}};
    });
  });

  auto* degen = cd->add_subcommand("degeneration", "Relative CD from the Euler characteristic of the flag moduli");
  add_common(degen);
  degen->add_option("--registry", o.registry, "Registry file");
  degen->add_option("--euler-char", euler_char, "Euler characteristic of M_Y(m)_0");
  degen->add_option("--label", label, "Vector label");
  degen->add_option("--id", entry_id, "Entry id (symbolic entries)");
  degen->add_option("--symbol", symbol, "Named Euler characteristic when no number is known");
  degen->callback([&] {
    run = with_registry([&](CDRegistry& reg) {
      Json j;
      if (!symbol.empty()) {
        if (entry_id.empty()) throw ValidationError("symbolic degeneration entries need --id");
        std::string manifold = o.flag.empty() ? std::string() : load_context(o).ring.name();
        j = io::to_json(cd_degeneration_named(reg, manifold, entry_id, label, symbol));
      } else {
        if (!euler_char) throw ValidationError("degeneration needs --euler-char or --symbol");
        if (o.flag.empty()) throw ValidationError("degeneration needs --flag");
        FlagDescriptor f = load_context(o).flag();
        ChernData e = load_bundles(o, f.ring(), 1)[0];
        j = io::to_json(cd_degeneration(reg, f, e, BigInt(*euler_char), label));
      }
      io::save_registry(o.registry, reg);
      return Outcome{Json{{"entry", j}, {"result", j.contains("value") ? j["value"] : j["value_symbol"]}}};
    });
  });

  auto* load = cd->add_subcommand("load", "Validate and print a registry");
  load->add_option("--registry", o.registry, "Registry file");
  load->callback([&] {
    run = with_registry([&](CDRegistry& reg) { return Outcome{io::to_json(reg)}; });
  });

  auto* save = cd->add_subcommand("save", "Write a normalized copy of a registry");
  save->add_option("--registry", o.registry, "Registry file");
  save->add_option("--out", save_out, "Destination")->required();
  save->callback([&] {
    run = with_registry([&](CDRegistry& reg) {
      io::save_registry(save_out, reg);
      return Outcome{Json{{"saved", save_out}, {"entries", reg.size()}}};
    });
  });

  // schubert
  auto* sch = app.add_subcommand("schubert", "Schubert calculus on G(2,n)");
  sch->require_subcommand(1);
  int n = 4, k_index = 1;
  std::string expr = "1";

  auto* pieri = sch->add_subcommand("pieri", "Multiply a class by sigma_k");
  pieri->add_option("--n", n, "Ambient n of G(2,n)");
  pieri->add_option("--class", expr, "Class expression, e.g. sigma1 or sigma(2,1)");
  pieri->add_option("--k", k_index, "Special class index")->required();
  pieri->callback([&] {
    run = [&] {
      auto x = schubert::pieri_mult(schubert::parse_expression(n, expr), k_index);
      Json terms = Json::object();
      for (const auto& [p, c] : x.terms()) terms[schubert::to_string(p)] = io::to_json(c);
      return Outcome{Json{{"result", terms}}};
    };
  });

  auto* integ = sch->add_subcommand("integrate", "Degree of a class expression");
  integ->add_option("expression", expr, "e.g. sigma1^4")->required();
  integ->add_option("--n", n, "Ambient n of G(2,n)");
  integ->callback([&] {
    run = [&] {
      auto x = schubert::parse_expression(n, expr);
      Json terms = Json::object();
      for (const auto& [p, c] : x.terms()) terms[schubert::to_string(p)] = io::to_json(c);
      return Outcome{Json{{"result", io::to_json(schubert::integrate(x))}, {"expansion", terms}}};
    };
  });

  int sym_k = 5;
  auto* ctop = sch->add_subcommand("ctop", "Integral of c_top(Sym^k S*) on G(2,n)");
  ctop->add_option("--n", n, "Ambient n")->required();
  ctop->add_option("--k", sym_k, "Symmetric power")->required();
  ctop->callback([&] {
    run = [&] { return Outcome{Json{{"result", io::to_json(schubert::ctop_sym_k_dual_tautological(n, sym_k))}}}; };
  });

  auto* lq = sch->add_subcommand("lines-quintic", "Lines on a generic quintic threefold");
  lq->callback([&] { run = [&] { return Outcome{Json{{"result", io::to_json(schubert::lines_on_quintic())}}}; }; });

  auto* lo = sch->add_subcommand("lines-octic-double", "Lines on a generic double octic");
  lo->callback([&] {
    run = [&] {
      auto l = schubert::lines_on_octic_double();
      return Outcome{Json{{"result", io::to_json(l.total)},
                          {"ctop_cotangent_G24", io::to_json(l.ctop_cotangent)},
                          {"euler_char_G24", io::to_json(l.cell_count)}}};
    };
  });

  auto* four = sch->add_subcommand("four-lines", "Lines meeting four lines in P^3 via degeneration");
  four->add_option("--n", n, "Must be 4");
  four->callback([&] {
    run = [&] {
      auto note = schubert::four_lines_degeneration_note(n);
      Json parts = Json::array();
      for (const auto& [what, c] : note.parts) parts.push_back(Json{{"part", what}, {"count", io::to_json(c)}});
      return Outcome{Json{{"result", io::to_json(note.total)},
                          {"parts", parts},
                          {"schubert_check", io::to_json(note.schubert_check)}}};
    };
  });

  auto* euler = sch->add_subcommand("euler", "Euler characteristic of G(2,n)");
  euler->add_option("--n", n, "Ambient n")->required();
  euler->callback([&] {
    run = [&] {
      return Outcome{Json{{"result", io::to_json(schubert::euler_char_g2n(n))},
                          {"ctop_tangent", io::to_json(schubert::integrate(schubert::ctop_tangent(n)))}}};
    };
  });

  std::string const_key;
  auto* consts = app.add_subcommand("constants", "Literature constants with citations");
  consts->add_option("--key", const_key, "Single constant");
  consts->callback([&] { run = [&] { return Outcome{constants_json(const_key)}; }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  io::Format fmt = o.json ? io::Format::Json : io::Format::Text;
  try {
    if (!run) return kExitUsage;
    Outcome out = run();
    std::cout << io::emit_report(out.report, fmt);
    return out.status;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const io::Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
