#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "liecontact/extension.hpp"

using namespace liecontact;

namespace {

struct Fixture23 {
  LieAlgebra g = builtin::build_so_kkn(2, 1);
  RootDecomposition d = restricted_roots(g, builtin::canonical_cartan(g, 2));
  ContactStructure s = make_cartan_structure(d, {{Rational(1), Rational(2)}, {Rational(2), Rational(1)}});
};

struct Fixture24 {
  LieAlgebra g = builtin::build_so_kkn(2, 2);
  RootDecomposition d = restricted_roots(g, builtin::canonical_cartan(g, 2));
  ContactStructure s = make_cartan_structure(d, {{Rational(1), Rational(2)}, {Rational(2), Rational(1)}});
};

}  // namespace

TEST_CASE("central extension of so(2,3) by one generator") {
  Fixture23 fx;
  auto res = central_extension(fx.s, 1);
  CHECK(res.algebra->dim() == 11);
  CHECK(res.structure.forms.size() == 3);
  CHECK(res.structure.I.dim() == 3);
  CHECK(res.structure.F.dim() == 8);
  CHECK(res.certificate.verdict);

  // the new generator is central
  Vec w = zero_vec(11);
  w[10] = 1;
  for (std::size_t i = 0; i < 11; ++i) {
    Vec e = zero_vec(11);
    e[i] = 1;
    CHECK(is_zero(res.algebra->bracket(w, e)));
  }

  // the extended Reeb frame restricts to the base frame on a
  auto base_frame = reeb_frame(fx.s);
  auto ext_frame = reeb_frame(res.structure);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < fx.g.dim(); ++i)
      CHECK(ext_frame.vectors[j][i] == base_frame.vectors[j][i]);
}

TEST_CASE("central extension with explicit assignment and l = 2") {
  Fixture23 fx;
  auto res = central_extension(fx.s, 2, {0, 1});
  CHECK(res.algebra->dim() == 12);
  CHECK(res.structure.forms.size() == 4);
  CHECK(res.certificate.verdict);
  CHECK_THROWS_AS(central_extension(fx.s, 2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(central_extension(fx.s, 1, {5}), std::invalid_argument);
}

TEST_CASE("modified weyl structure on so(2,4)") {
  Fixture24 fx;
  REQUIRE(verify_contact(fx.s).verdict);
  Subspace a_star(fx.g.dim(), {lt::unit(fx.g, "D_12")});
  auto res = modified_weyl(fx.s, fx.d, a_star);
  CHECK(res.structure.I.dim() == 3);
  CHECK(res.structure.F.dim() == 12);  // 3 + 12 = 15 = dim so(2,4)
  CHECK(res.structure.forms.size() == 3);
  CHECK(res.certificate.verdict);

  // the third form is dual to D_12 on I
  CHECK(dot(res.structure.forms[2], lt::unit(fx.g, "D_12")) == 1);

  // extended Reeb frame: dual to all three forms, restriction to the
  // base Reeb elements still lies in a
  auto frame = reeb_frame(res.structure);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(dot(res.structure.forms[i], frame.vectors[j]) == Rational(i == j ? 1 : 0));
}

TEST_CASE("modified weyl rejects invalid a_star") {
  Fixture24 fx;
  // X_11 is not in the compact part
  CHECK_THROWS_AS(modified_weyl(fx.s, fx.d, Subspace(fx.g.dim(), {lt::unit(fx.g, "X_11")})),
                  NotCentralizing);
  // a Cartan vector is not allowed either
  CHECK_THROWS_AS(modified_weyl(fx.s, fx.d, Subspace(fx.g.dim(), {lt::unit(fx.g, "H_11")})),
                  NotCentralizing);
}

TEST_CASE("extension certificates re-verify deterministically") {
  Fixture23 fx;
  auto r1 = central_extension(fx.s, 1);
  auto r2 = central_extension(fx.s, 1);
  CHECK(r1.certificate.i_block_det == r2.certificate.i_block_det);
  for (std::size_t j = 0; j < r1.certificate.per_form.size(); ++j)
    CHECK(r1.certificate.per_form[j].pfaffian == r2.certificate.per_form[j].pfaffian);
  // d(xi) = 0: the new form's pfaffian on F equals its companion's
  CHECK(r1.certificate.per_form[2].pfaffian == r1.certificate.per_form[0].pfaffian);
}
