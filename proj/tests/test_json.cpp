#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "liecontact/json_io.hpp"

using namespace liecontact;

TEST_CASE("algebra serialization round-trips byte-identically") {
  for (auto build : {builtin::build_so_kkn(2, 1), builtin::build_sl_n(3)}) {
    json j1 = algebra_to_json(build);
    LieAlgebra g2 = algebra_from_json(j1);
    json j2 = algebra_to_json(g2);
    CHECK(j1.dump(2) == j2.dump(2));
    CHECK(g2.dim() == build.dim());
    CHECK(g2.has_realization() == build.has_realization());
  }
}

TEST_CASE("rational strings in and out") {
  CHECK(rational_from_json(json("3/4")) == Rational(3, 4));
  CHECK(rational_to_json(Rational(-5, 10)) == json("-1/2"));
  CHECK_THROWS_AS(rational_from_json(json(3)), BadInput);
  CHECK_THROWS_AS(rational_from_json(json("1/0")), BadInput);
}

TEST_CASE("malformed algebra inputs are rejected") {
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"dim":2})")), BadInput);
  CHECK_THROWS_AS(algebra_from_json(json::parse(
                      R"({"dim":2,"basis":["a"],"brackets":[]})")),
                  BadInput);
  // i >= j is invalid
  CHECK_THROWS_AS(algebra_from_json(json::parse(
                      R"({"dim":2,"basis":["a","b"],
                          "brackets":[{"i":1,"j":0,"out":[]}]})")),
                  BadInput);
  // Jacobi violation rejected at load
  CHECK_THROWS_AS(algebra_from_json(json::parse(
                      R"({"dim":3,"basis":["a","b","c"],"brackets":[
                          {"i":0,"j":1,"out":[{"k":2,"num":"1","den":"1"}]},
                          {"i":0,"j":2,"out":[{"k":1,"num":"1","den":"1"}]},
                          {"i":1,"j":2,"out":[{"k":1,"num":"1","den":"1"}]}]})")),
                  BadInput);
}

TEST_CASE("forms files") {
  auto rows = forms_from_json(json::parse(R"({"rows":[["1","2"],["2","1"]]})"));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == Vec{Rational(1), Rational(2)});
  CHECK_THROWS_AS(forms_from_json(json::parse(R"({"cols":[]})")), BadInput);
  CHECK(forms_from_json(forms_to_json(rows)) == rows);
}

TEST_CASE("decomposition serialization carries the frozen root order") {
  auto g = builtin::build_so_kkn(2, 1);
  auto d = restricted_roots(g, builtin::canonical_cartan(g, 2));
  json j = decomposition_to_json(d);
  REQUIRE(j["roots"].size() == 8);
  REQUIRE(j["positive"].size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    Vec pos = vec_from_json(j["roots"][i]["functional"]);
    Vec neg = vec_from_json(j["roots"][4 + i]["functional"]);
    CHECK(neg == -Rational(1) * pos);
  }
}

TEST_CASE("certificate JSON mirrors the record") {
  auto g = builtin::build_so_kkn(2, 1);
  auto d = restricted_roots(g, builtin::canonical_cartan(g, 2));
  auto cert = verify_contact(make_cartan_structure(d, {{Rational(1), Rational(2)}, {Rational(2), Rational(1)}}));
  json j = certificate_to_json(cert);
  CHECK(j["verdict"] == true);
  CHECK(j["i_block_det"] == "-3");
  CHECK(j["per_form"].size() == 2);
  CHECK(j["per_form"][0]["pfaffian"].get<std::string>() == to_string(cert.per_form[0].pfaffian));
}

TEST_CASE("float serialization uses 17 significant digits") {
  std::string s = float_to_json(1.0 / 3.0).get<std::string>();
  CHECK(s.find('e') != std::string::npos);
  CHECK(s.substr(0, 10) == "3.33333333");
}

TEST_CASE("extension spec validation") {
  auto spec = extension_spec_from_json(json::parse(R"({"kind":"central","l":2,"assignment":[0,1]})"));
  CHECK(spec.kind == "central");
  CHECK(spec.l == 2);
  CHECK_THROWS_AS(extension_spec_from_json(json::parse(R"({"kind":"weird"})")), BadInput);
  CHECK_THROWS_AS(extension_spec_from_json(json::parse(R"({"kind":"central","l":0})")), BadInput);
  CHECK_THROWS_AS(extension_spec_from_json(json::parse(R"({"kind":"modified"})")), BadInput);
  auto mod = extension_spec_from_json(json::parse(R"({"kind":"modified","a_star":[["1","0"]]})"));
  CHECK(mod.a_star.size() == 1);
}

TEST_CASE("kammeyer table JSON loads and verifies") {
  json j = json::parse(R"({
    "algebra": {"dim": 3, "basis": ["H1_a", "Z_a", "Z_-a"], "brackets": [
      {"i": 0, "j": 1, "out": [{"k": 1, "num": "2", "den": "1"}]},
      {"i": 0, "j": 2, "out": [{"k": 2, "num": "-2", "den": "1"}]},
      {"i": 1, "j": 2, "out": [{"k": 0, "num": "1", "den": "1"}]}]},
    "roles": [{"family": "H1", "root": "a"}, {"family": "Z", "root": "a"}, {"family": "Z", "root": "-a"}],
    "roots": {"a": {"type": "real", "sign": 1, "negation": "-a", "sigma": "a"},
              "-a": {"type": "real", "sign": -1, "negation": "a", "sigma": "-a"}},
    "sums_complete": true,
    "d": [{"alpha": "a", "beta": "a", "i": 1, "value": "2"},
          {"alpha": "a", "beta": "-a", "i": 1, "value": "2"}],
    "hhat1": {"a": {"a": "-1"}, "-a": {"a": "-1"}}
  })");
  auto t = kammeyer_from_json(j);
  CHECK(t.algebra.dim() == 3);
  CHECK(t.roles[1].family == "Z");
  CHECK(verify_kammeyer_relations(t).all_pass);
  j["roles"][0]["family"] = "Q7";
  CHECK_THROWS_AS(kammeyer_from_json(j), BadInput);
}
