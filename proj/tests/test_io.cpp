#include "mukaikit/io.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace mukaikit;
namespace fs = std::filesystem;

namespace {

const fs::path kData = MUKAIKIT_DATA_DIR;

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("mukaikit-io-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
};

}  // namespace

TEST(Documents, BundledManifoldsLoad) {
  auto q = io::load_manifold(kData / "quintic.json");
  EXPECT_EQ(q.kind, "cy3");
  EXPECT_EQ(q.ring, fx::quintic());
  auto p = io::load_manifold(kData / "cp3-quartic.json");
  EXPECT_EQ(p.ring, fx::cp3());
  EXPECT_EQ(p.h0_n, 34);
  EXPECT_EQ(io::load_flag(kData / "synthetic-rho2.json").k3().gram(), fx::synthetic_rho2().k3().gram());
  EXPECT_EQ(io::load_flag(kData / "swap-rho2.json").k3().gram(), fx::swap_rho2().k3().gram());
}

TEST(Documents, QuinticIsNotAFlag) { EXPECT_THROW(io::load_flag(kData / "quintic.json"), ValidationError); }

TEST(Documents, BundlesLoadAgainstTheirManifold) {
  auto inst = io::load_bundle(kData / "instanton1.json", fx::cp3());
  EXPECT_EQ(inst.chern, fx::instanton());
  EXPECT_TRUE(inst.instanton);
  EXPECT_TRUE(io::load_bundle(kData / "cp3-hyperplane.json", fx::cp3()).exceptional);
  EXPECT_THROW(io::load_bundle(kData / "instanton1.json", fx::quintic()), ValidationError);
}

TEST(Documents, GluingsResolveRelativeFlags) {
  auto dbl = io::load_gluing(kData / "double-cp3-quartic.json");
  EXPECT_EQ(dbl.gluing.a(), Matrix::identity(1));
  EXPECT_EQ(dbl.gluing.section_class(), (RationalVector{8}));
  auto triv = io::load_gluing(kData / "trivial-normal-gluing.json");
  EXPECT_TRUE(triv.gluing.section_class_supplied());
  EXPECT_EQ(triv.h12_plus, 3);
  EXPECT_EQ(triv.h12_minus, 4);
}

TEST(Documents, ManifoldRoundTrip) {
  for (const char* name : {"quintic.json", "cp3-quartic.json", "synthetic-rho2.json", "swap-rho2.json"}) {
    auto doc = io::load_manifold(kData / name);
    io::Json j = io::manifold_to_json(doc);
    auto back = io::manifold_from_json(j);
    EXPECT_EQ(back.ring, doc.ring) << name;
    EXPECT_EQ(back.s_coords, doc.s_coords) << name;
    EXPECT_EQ(io::manifold_to_json(back), j) << name;
  }
}

TEST(Documents, BundleRoundTrip) {
  auto b = io::load_bundle(kData / "instanton1.json", fx::cp3());
  auto back = io::bundle_from_json(io::bundle_to_json(b));
  EXPECT_EQ(back.chern, b.chern);
  EXPECT_EQ(back.instanton, b.instanton);
  EXPECT_EQ(back.manifold, b.manifold);
}

TEST(Documents, GluingRoundTrip) {
  auto g = io::load_gluing(kData / "double-cp3-quartic.json");
  io::Json j = io::gluing_to_json(g.gluing, "double");
  auto back = io::gluing_from_json(j, kData);
  EXPECT_EQ(back.gluing.a(), g.gluing.a());
  EXPECT_EQ(back.gluing.section_class(), g.gluing.section_class());
  EXPECT_EQ(back.gluing.plus().ring(), g.gluing.plus().ring());
}

TEST_F(TempDir, SyntaxErrorsReportLineAndColumn) {
  auto p = write("bad.json", "{\n  \"name\": \"x\",\n  \"rho\": ,\n}\n");
  try {
    io::load_manifold(p);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos) << e.what();
  }
}

TEST_F(TempDir, MissingKeysAndWrongTypes) {
  auto missing = write("m.json", R"({"name": "x", "kind": "cy3", "rho": 1})");
  EXPECT_THROW(io::load_manifold(missing), ParseError);
  auto wrong = write("w.json", R"({"name": 3, "kind": "cy3"})");
  EXPECT_THROW(io::load_manifold(wrong), ParseError);
  auto kind = write("k.json", R"({"name": "x", "kind": "k3", "rho": 1})");
  EXPECT_THROW(io::load_manifold(kind), ParseError);
  EXPECT_THROW(io::load_manifold(dir_ / "absent.json"), ParseError);
}

TEST_F(TempDir, KindMustMatchC1) {
  auto p = write("q.json", R"({"name": "q", "kind": "fano3", "rho": 1, "basis": ["H"], "triple": [[[5]]],
    "c1": [0], "c2_values": [50], "chi_top": -200, "h12": 101})");
  EXPECT_THROW(io::load_manifold(p), ValidationError);
}

TEST_F(TempDir, RationalStringsInBundles) {
  auto p = write("b.json", R"({"manifold": "quintic", "rank": 2, "c1": [0], "c2": ["5/2"], "c3": 0})");
  auto b = io::load_bundle(p, fx::quintic());
  EXPECT_EQ(b.chern.c2, (RationalVector{Rational(5, 2)}));
}

TEST_F(TempDir, RegistryRoundTrip) {
  CDRegistry reg;
  auto q = fx::quintic();
  std::string a = cd_seed(reg, q, SeedKind::LineBundle).id;
  cd_seed(reg, q, SeedKind::Skyscraper);
  cd_mark_exceptional(reg, a);
  cd_closure(reg, a, a, &q, {1}, 3);
  cd_degeneration(reg, fx::cp3_quartic(), fx::instanton(), BigInt(6));
  cd_degeneration_named(reg, "octic", "octic:x", "v", "chi(MI_3)+chi(M_3)");

  fs::path p = dir_ / "reg.json";
  io::save_registry(p, reg);
  CDRegistry back = io::load_registry(p);
  ASSERT_EQ(back.size(), reg.size());
  for (const auto& [id, e] : reg.entries()) {
    const CDEntry& b = back.at(id);
    EXPECT_EQ(b.value, e.value) << id;
    EXPECT_EQ(b.provenance, e.provenance) << id;
    EXPECT_EQ(b.exceptional, e.exceptional) << id;
    EXPECT_EQ(b.parents, e.parents) << id;
    EXPECT_EQ(b.vector, e.vector) << id;
    EXPECT_EQ(b.k3_vector, e.k3_vector) << id;
    EXPECT_EQ(b.sign_note, e.sign_note) << id;
    EXPECT_EQ(b.constraint, e.constraint) << id;
  }
  EXPECT_EQ(io::to_json(back), io::to_json(reg));
  EXPECT_EQ(io::load_registry(dir_ / "none.json").size(), 0u);
}

TEST_F(TempDir, RegistryRejectsConflictingDuplicates) {
  auto p = write("r.json", R"({"entries": [
    {"id": "a", "provenance": "closure", "value": 2},
    {"id": "a", "provenance": "closure", "value": 3}]})");
  EXPECT_THROW(io::load_registry(p), ValidationError);
  auto bad = write("s.json", R"({"entries": [{"id": "a", "provenance": "closure", "value": "2/3"}]})");
  EXPECT_THROW(io::load_registry(bad), std::runtime_error);
}

TEST(Report, TextIsSortedAndAligned) {
  io::Json j{{"zeta", 1}, {"alpha", io::Json{{"x", "2/3"}, {"y", io::Json::array({1, 2})}}}, {"open", nullptr}};
  std::string text = io::emit_report(j, io::Format::Text);
  EXPECT_EQ(text, "alpha.x  2/3\nalpha.y  [1, 2]\nopen     unknown\nzeta     1\n");
  EXPECT_EQ(io::Json::parse(io::emit_report(j, io::Format::Json)), j);
}

TEST(Report, JsonEncodingOfExactValues) {
  EXPECT_EQ(io::to_json(Rational(3, 4)), io::Json("3/4"));
  EXPECT_EQ(io::rational_from_json(io::to_json(Rational(-7, 2)), "x"), Rational(-7, 2));
  BigInt big("229305888887625000000000000");
  EXPECT_EQ(io::integer_from_json(io::to_json(big), "x"), big);
}
