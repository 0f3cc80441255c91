#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "algext/formats.hpp"
#include "helpers.hpp"

using namespace algext;
using namespace algext::testing;

#ifndef ALGEXT_TEST_CATALOG
#define ALGEXT_TEST_CATALOG "catalog"
#endif

namespace {

const std::string kCatalog = ALGEXT_TEST_CATALOG;

std::string catalog_file(const std::string& name) { return kCatalog + "/" + name; }

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "algext_test_tmp_" + std::to_string(counter++) + ".json";
    std::ofstream(path) << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("shipped lie files parse and validate") {
  auto sl2 = parse_lie_file(catalog_file("sl2.lie"));
  CHECK(sl2.name == "sl2");
  CHECK(sl2.algebra == make_sl2());
  REQUIRE(sl2.levi.has_value());
  CHECK(sl2.levi->red_indices == std::vector<std::size_t>{0, 1, 2});

  auto h3 = parse_lie_file(catalog_file("h3.lie"));
  CHECK(h3.algebra == make_h3());

  auto semi = parse_lie_file(catalog_file("sl2semi.lie"));
  CHECK(semi.algebra == make_sl2semi());
  REQUIRE(semi.levi.has_value());
  CHECK(validate_levi_pair(*semi.levi).ok());
}

TEST_CASE("lie file round-trips through serialization") {
  for (const std::string name : {"sl2.lie", "h3.lie", "sl2semi.lie", "gl2.lie", "borel2.lie"}) {
    auto lie = parse_lie_file(catalog_file(name));
    TempFile tmp(lie_to_json(lie).dump(2));
    auto again = parse_lie_file(tmp.path);
    CHECK(again.algebra == lie.algebra);
    CHECK(again.name == lie.name);
    CHECK(again.levi.has_value() == lie.levi.has_value());
    if (lie.levi) {
      CHECK(again.levi->red_indices == lie.levi->red_indices);
      CHECK(again.levi->u_indices == lie.levi->u_indices);
    }
  }
}

TEST_CASE("module files parse against their algebra") {
  auto sl2 = parse_lie_file(catalog_file("sl2.lie"));
  auto vstd = parse_module_file(catalog_file("vstd_sl2.mod"), sl2);
  CHECK(vstd.dim == 2);
  CHECK(validate_module(vstd).ok());
  CHECK(vstd.action[0] == make_vstd(make_sl2()).action[0]);

  auto adj = parse_module_file(catalog_file("adj_sl2.mod"), sl2);
  CHECK(adj.action[1] == adjoint_module(make_sl2()).action[1]);

  // module over the wrong algebra is rejected by name
  auto h3 = parse_lie_file(catalog_file("h3.lie"));
  CHECK_THROWS_WITH_AS(static_cast<void>(parse_module_file(catalog_file("vstd_sl2.mod"), h3)),
                       doctest::Contains("ValidationError"), Error);

  // module round-trip
  TempFile tmp(module_to_json(vstd, "sl2").dump(2));
  auto again = parse_module_file(tmp.path, sl2);
  CHECK(again.action[0] == vstd.action[0]);
  CHECK(again.action[2] == vstd.action[2]);
}

TEST_CASE("antisymmetry violations in files are reported") {
  // both (0,1) and (1,0) listed with the same sign
  TempFile bad(R"({
    "schema": 1, "kind": "lie-algebra", "name": "bad", "dim": 3,
    "brackets": [
      {"i": 0, "j": 1, "coeffs": {"2": "1"}},
      {"i": 1, "j": 0, "coeffs": {"2": "1"}}
    ]
  })");
  CHECK_THROWS_WITH_AS(static_cast<void>(parse_lie_file(bad.path)),
                       doctest::Contains("AntisymmetryViolation"), Error);

  TempFile diag(R"({
    "schema": 1, "kind": "lie-algebra", "name": "bad2", "dim": 2,
    "brackets": [ {"i": 1, "j": 1, "coeffs": {"0": "1"}} ]
  })");
  CHECK_THROWS_WITH_AS(static_cast<void>(parse_lie_file(diag.path)),
                       doctest::Contains("AntisymmetryViolation"), Error);
}

TEST_CASE("jacobi violations in files are reported") {
  TempFile bad(R"({
    "schema": 1, "kind": "lie-algebra", "name": "notlie", "dim": 3,
    "brackets": [
      {"i": 1, "j": 0, "coeffs": {"0": "2"}},
      {"i": 1, "j": 2, "coeffs": {"2": "-2"}},
      {"i": 0, "j": 2, "coeffs": {"0": "1"}}
    ]
  })");
  CHECK_THROWS_WITH_AS(static_cast<void>(parse_lie_file(bad.path)),
                       doctest::Contains("JacobiViolation"), Error);
}

TEST_CASE("group files parse") {
  auto pgl2 = parse_alg_group_file(catalog_file("pgl2.grp"), kCatalog);
  CHECK(pgl2.name == "PGL2");
  CHECK(pgl2.data.pi1_derived.invariant_factors() == std::vector<Int>{2});
  CHECK(pgl2.data.levi.red_indices.size() == 3);

  auto vsl2 = parse_alg_group_file(catalog_file("vsl2.grp"), kCatalog);
  CHECK(vsl2.data.levi.u_indices == std::vector<std::size_t>{3, 4});

  auto heis = parse_poly_group_file(catalog_file("heisenberg.grp"));
  CHECK(heis.group.dim == 3);
  CHECK(heis.lie_name == "h3");
  CHECK(lie_algebra_of(heis.group) == make_h3());

  CHECK(group_file_kind(catalog_file("torus1.grp")) == GroupFileKind::Coefficient);
  CHECK(group_file_kind(catalog_file("heisenberg.grp")) == GroupFileKind::Poly);
  CHECK(group_file_kind(catalog_file("sl2.grp")) == GroupFileKind::Algebraic);
}

TEST_CASE("coefficient instantiation") {
  auto sl2 = parse_lie_file(catalog_file("sl2.lie"));
  auto torus = parse_coeff_file(catalog_file("torus1.grp"));
  auto c1 = instantiate_coeff(torus, sl2, kCatalog);
  CHECK(c1.torus_dim == 1);
  CHECK(c1.au_module.dim == 0);

  auto ga = parse_coeff_file(catalog_file("ga_on_sl2.grp"));
  auto c2 = instantiate_coeff(ga, sl2, kCatalog);
  CHECK(c2.torus_dim == 0);
  CHECK(c2.au_module.dim == 1);
  CHECK(c2.au_module.action[0].is_zero());
}

TEST_CASE("pi1 catalog lookups") {
  CHECK(pi1_from_catalog(kCatalog, "A", 1, "adjoint") == std::vector<Int>{2});
  CHECK(pi1_from_catalog(kCatalog, "A", 3, "adjoint") == std::vector<Int>{4});
  CHECK(pi1_from_catalog(kCatalog, "B", 2, "simply-connected").empty());
  CHECK(pi1_from_catalog(kCatalog, "D", 4, "adjoint") == std::vector<Int>{2, 2});
  CHECK(pi1_from_catalog(kCatalog, "D", 5, "adjoint") == std::vector<Int>{4});
  CHECK(pi1_from_catalog(kCatalog, "E", 6, "adjoint") == std::vector<Int>{3});
  CHECK_THROWS_AS(static_cast<void>(pi1_from_catalog(kCatalog, "Z", 9, "adjoint")), Error);
}

TEST_CASE("io errors carry the right kinds") {
  CHECK_THROWS_WITH_AS(static_cast<void>(parse_lie_file("definitely_missing.lie")),
                       doctest::Contains("IoError"), Error);
  TempFile garbage("this is not json");
  CHECK_THROWS_WITH_AS(static_cast<void>(parse_lie_file(garbage.path)),
                       doctest::Contains("ParseError"), Error);
  TempFile wrong_kind(R"({"kind": "something-else"})");
  CHECK_THROWS_WITH_AS(static_cast<void>(parse_lie_file(wrong_kind.path)),
                       doctest::Contains("ParseError"), Error);
  CHECK_THROWS_AS(static_cast<void>(resolve_input("nope.nope", kCatalog)), Error);
}

TEST_CASE("result serialization is canonical") {
  auto pair = make_sl2semi_pair();
  auto t5 = trivial_module(pair.g, 1);
  auto h2 = relative_cohomology(2, pair, t5);
  Json a = cohomology_to_json(h2);
  Json b = cohomology_to_json(relative_cohomology(2, pair, t5));
  CHECK(a.dump() == b.dump());
  CHECK(a["dim"] == 1);
  CHECK(a["representatives"][0]["terms"][0]["tuple"] == Json::array({3, 4}));

  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("abc") == fnv1a64_hex("abc"));
  CHECK(fnv1a64_hex("abc") != fnv1a64_hex("abd"));
}
