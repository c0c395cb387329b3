#include <catch2/catch_amalgamated.hpp>
#include <map>

#include "helpers.hpp"
#include "liecontact/anosov.hpp"

using namespace liecontact;

namespace {

struct Fixture {
  LieAlgebra g = builtin::build_so_kkn(2, 1);
  RootDecomposition d = restricted_roots(g, builtin::canonical_cartan(g, 2));
};

}  // namespace

TEST_CASE("anosov certification and rejection") {
  Fixture fx;
  auto res = is_anosov(fx.d, {Rational(1), Rational(2)});
  REQUIRE(res.anosov);
  CHECK(res.certificate.stable.dim() == 4);
  CHECK(res.certificate.unstable.dim() == 4);
  CHECK(res.certificate.chamber == chamber_of(fx.d, {Rational(1), Rational(2)}));

  auto rejected = is_anosov(fx.d, {Rational(1), Rational(1)});
  CHECK_FALSE(rejected.anosov);
  CHECK(dot(rejected.witness_root, Vec{Rational(1), Rational(1)}) == 0);
  CHECK_FALSE(is_anosov(fx.d, {Rational(0), Rational(0)}).anosov);
  CHECK_THROWS_AS(is_anosov(fx.d, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("splitting is invariant under the bracket with the element") {
  Fixture fx;
  auto res = is_anosov(fx.d, {Rational(1), Rational(2)});
  Vec ambient = res.certificate.element[0] * fx.d.cartan.basis[0] +
                res.certificate.element[1] * fx.d.cartan.basis[1];
  for (const auto& v : res.certificate.stable.basis)
    CHECK(res.certificate.stable.contains(fx.g.bracket(ambient, v)));
  for (const auto& v : res.certificate.unstable.basis)
    CHECK(res.certificate.unstable.contains(fx.g.bracket(ambient, v)));
}

TEST_CASE("splittings are constant on chambers (seeded)") {
  Fixture fx;
  lt::RationalSampler sample(4242);
  std::map<ChamberId, std::pair<Subspace, Subspace>> reference;
  std::map<ChamberId, int> seen;
  int collected = 0;
  while (collected < 8 * 20) {
    Vec x = {sample(), sample()};
    auto res = is_anosov(fx.d, x);
    if (!res.anosov) continue;
    auto it = reference.find(res.certificate.chamber);
    if (it == reference.end()) {
      reference.emplace(res.certificate.chamber,
                        std::make_pair(res.certificate.stable, res.certificate.unstable));
    } else {
      CHECK(res.certificate.stable.same_span(it->second.first));
      CHECK(res.certificate.unstable.same_span(it->second.second));
    }
    if (seen[res.certificate.chamber]++ < 20) ++collected;
  }
  CHECK(reference.size() == 8);
}

TEST_CASE("adapted parameterization lands every reeb element in one chamber") {
  Fixture fx;
  // deliberately mixed-chamber input: the Reeb elements of these rows
  // sit in different chambers
  auto s = make_cartan_structure(fx.d, {{Rational(1), Rational(2)}, {Rational(2), Rational(1)}});
  auto frame0 = reeb_frame(s);
  auto c0 = chamber_of(fx.d, fx.d.project_to_cartan(frame0.vectors[0]));
  auto c1 = chamber_of(fx.d, fx.d.project_to_cartan(frame0.vectors[1]));
  CHECK(c0 != c1);

  auto adapted = adapt_parameterization(s, fx.d);
  auto rep = reparameterize(s, adapted.b);
  REQUIRE(rep.valid);
  CHECK(verify_contact(rep.structure).verdict);
  auto frame = reeb_frame(rep.structure);
  for (const auto& r : frame.vectors)
    CHECK(chamber_of(fx.d, fx.d.project_to_cartan(r)) == adapted.chamber);
}

TEST_CASE("adapted parameterization is deterministic") {
  Fixture fx;
  auto s = make_cartan_structure(fx.d, {{Rational(1), Rational(2)}, {Rational(2), Rational(1)}});
  auto a1 = adapt_parameterization(s, fx.d);
  auto a2 = adapt_parameterization(s, fx.d);
  CHECK(a1.chamber == a2.chamber);
  CHECK(a1.b == a2.b);
}

TEST_CASE("growth spot-check stays within tolerance") {
  Fixture fx;
  auto report = growth_spotcheck(fx.d, {Rational(1), Rational(2)}, {0.5, 1.0, 2.0});
  CHECK(report.pass);
  CHECK(report.max_deviation <= 1e-6);
  CHECK(report.entries.size() == 8 * 3);
}

TEST_CASE("growth spot-check needs a realization") {
  auto ab = LieAlgebra::from_table({"u", "v"}, {});
  auto d = restricted_roots(ab, Subspace(2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}));
  CHECK_THROWS_AS(growth_spotcheck(d, {Rational(1), Rational(1)}, {1.0}), NoRealization);
}
