#include <catch2/catch_amalgamated.hpp>
#include <deque>
#include <set>

#include "helpers.hpp"
#include "liecontact/root_decomposition.hpp"

using namespace liecontact;

namespace {

RootDecomposition decompose(LieAlgebra g, std::size_t rank) {
  // decompositions point into their algebra, so keep it alive
  static std::deque<LieAlgebra> keep;
  keep.push_back(std::move(g));
  return restricted_roots(keep.back(), builtin::canonical_cartan(keep.back(), rank));
}

std::multiset<std::vector<std::string>> functional_set(const RootDecomposition& d) {
  std::multiset<std::vector<std::string>> out;
  for (const auto& r : d.roots) {
    std::vector<std::string> f;
    for (const auto& x : r.functional) f.push_back(to_string(x));
    out.insert(f);
  }
  return out;
}

}  // namespace

TEST_CASE("centralizer of the Cartan subspace") {
  auto g23 = builtin::build_so_kkn(2, 1);
  auto a23 = builtin::canonical_cartan(g23, 2);
  CHECK(centralizer(g23, a23).same_span(a23));  // so(1) = 0

  auto g24 = builtin::build_so_kkn(2, 2);
  auto c24 = centralizer(g24, builtin::canonical_cartan(g24, 2));
  CHECK(c24.dim() == 3);  // a + so(2)
  CHECK(c24.contains(lt::unit(g24, "D_12")));

  // abelian algebra: centralizer of itself is everything
  auto ab = LieAlgebra::from_table({"u", "v"}, {});
  Subspace whole(2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  CHECK(centralizer(ab, whole).dim() == 2);
}

TEST_CASE("restricted roots of so(2,3)") {
  auto g = builtin::build_so_kkn(2, 1);
  auto d = decompose(g, 2);
  CHECK(d.roots.size() == 8);
  CHECK(d.positive.size() == 4);
  CHECK(d.g0.dim() == 2);
  CHECK(d.compact_part.dim() == 0);
  auto fs = functional_set(d);
  std::multiset<std::vector<std::string>> expect = {
      {"1", "1"}, {"1", "-1"}, {"1", "0"}, {"0", "1"},
      {"-1", "-1"}, {"-1", "1"}, {"-1", "0"}, {"0", "-1"}};
  CHECK(fs == expect);
  for (const auto& r : d.roots) CHECK(r.multiplicity == 1);
  CHECK(verify_grading(d));
}

TEST_CASE("restricted roots of sl(3,R) and so(3,4)") {
  auto sl3 = builtin::build_sl_n(3);
  auto d3 = decompose(sl3, 2);
  CHECK(d3.roots.size() == 6);
  CHECK(d3.g0.dim() == 2);
  CHECK(verify_grading(d3));

  auto g34 = builtin::build_so_kkn(3, 1);
  auto d34 = decompose(g34, 3);
  CHECK(d34.roots.size() == 18);
  CHECK(d34.positive.size() == 9);
  CHECK(verify_grading(d34));
}

TEST_CASE("root symmetry and completeness") {
  for (auto [k, n] : {std::pair<std::size_t, std::size_t>{2, 1}, {2, 2}, {3, 1}}) {
    auto g = builtin::build_so_kkn(k, n);
    auto d = decompose(g, k);
    std::size_t total = d.g0.dim();
    for (const auto& r : d.roots) total += r.space.dim();
    CHECK(total == g.dim());
    const std::size_t m = d.positive.size();
    REQUIRE(d.roots.size() == 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(d.roots[m + i].functional == -Rational(1) * d.roots[i].functional);
      CHECK(d.roots[m + i].multiplicity == d.roots[i].multiplicity);
    }
  }
}

TEST_CASE("eigenrelation holds exactly on every root space") {
  auto g = builtin::build_so_kkn(2, 2);
  auto d = decompose(g, 2);
  for (const auto& r : d.roots)
    for (std::size_t i = 0; i < d.rank(); ++i)
      for (const auto& v : r.space.basis)
        CHECK(g.bracket(d.cartan.basis[i], v) == r.functional[i] * v);
}

TEST_CASE("abelian algebra yields no roots") {
  auto ab = LieAlgebra::from_table({"u", "v"}, {});
  auto d = restricted_roots(ab, Subspace(2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}));
  CHECK(d.roots.empty());
  CHECK(d.g0.dim() == 2);
}

TEST_CASE("pairing locality on all builtins") {
  for (auto [k, n] : {std::pair<std::size_t, std::size_t>{2, 1}, {2, 2}, {3, 1}}) {
    auto g = builtin::build_so_kkn(k, n);
    auto d = decompose(g, k);
    for (const auto& r1 : d.roots)
      for (const auto& r2 : d.roots) {
        if (is_zero(r1.functional + r2.functional)) continue;
        for (const auto& u : r1.space.basis)
          for (const auto& v : r2.space.basis)
            CHECK(is_zero(d.project_to_cartan(g.bracket(u, v))));
      }
  }
}

TEST_CASE("weyl chamber counts") {
  auto d23 = decompose(builtin::build_so_kkn(2, 1), 2);
  CHECK(weyl_chambers(d23).size() == 8);
  auto dsl3 = decompose(builtin::build_sl_n(3), 2);
  CHECK(weyl_chambers(dsl3).size() == 6);
  auto d34 = decompose(builtin::build_so_kkn(3, 1), 3);
  CHECK(weyl_chambers(d34).size() == 48);
}

TEST_CASE("chamber enumeration is independent of the worker count") {
  auto d = decompose(builtin::build_so_kkn(2, 2), 2);
  auto serial = weyl_chambers(d, 1);
  CHECK(serial == weyl_chambers(d, 3));
  CHECK(serial == weyl_chambers(d, 8));
}

TEST_CASE("chamber_of walls and ray constancy") {
  auto d = decompose(builtin::build_so_kkn(2, 1), 2);
  CHECK_THROWS_AS(chamber_of(d, {Rational(1), Rational(1)}), OnWall);
  CHECK(chamber_of(d, {Rational(1), Rational(2)}).size() == 4);
  lt::RationalSampler sample(777);
  for (int trial = 0; trial < 30; ++trial) {
    Vec x = {sample(), sample()};
    Rational q = sample.nonzero();
    if (q < 0) q = -q;
    try {
      ChamberId c1 = chamber_of(d, x);
      ChamberId c2 = chamber_of(d, q * x);
      CHECK(c1 == c2);
    } catch (const OnWall&) {
      // walls are equally on-wall along the ray
      CHECK_THROWS_AS(chamber_of(d, q * x), OnWall);
    }
  }
}

TEST_CASE("every enumerated chamber is hit by some sample and vice versa") {
  auto d = decompose(builtin::build_so_kkn(2, 1), 2);
  auto chambers = weyl_chambers(d);
  std::set<ChamberId> enumerated(chambers.begin(), chambers.end());
  std::set<ChamberId> sampled;
  for (long p = -4; p <= 4; ++p)
    for (long q = -4; q <= 4; ++q) {
      try {
        sampled.insert(chamber_of(d, {Rational(p), Rational(q, 2)}));
      } catch (const OnWall&) {
      }
    }
  CHECK(sampled == enumerated);
}

TEST_CASE("condition (A)") {
  auto d = decompose(builtin::build_so_kkn(2, 1), 2);
  CHECK(check_condition_A(d, {Rational(1), Rational(2)}));
  CHECK_FALSE(check_condition_A(d, {Rational(0), Rational(0)}));
  CHECK_FALSE(check_condition_A(d, {Rational(1), Rational(1)}));

  // sl(3): lambda vanishing on the coroot of e1-e2 fails
  auto dsl = decompose(builtin::build_sl_n(3), 2);
  bool found_failing = false;
  // the coroot pairing: lambda = (0, 1) vanishes on proj_a([E_12, E_21]) = T_1
  if (!check_condition_A(dsl, {Rational(0), Rational(1)})) found_failing = true;
  CHECK(found_failing);
  CHECK(check_condition_A(dsl, {Rational(1), Rational(2)}));
}

TEST_CASE("non-cartan input raises NonDiagonalizable") {
  auto g = builtin::build_so_kkn(2, 1);
  auto d = decompose(g, 2);
  // a root vector is ad-nilpotent, so its span is not a Cartan subspace
  Subspace s(g.dim(), {d.roots[0].space.basis[0]});
  CHECK_THROWS_AS(restricted_roots(g, s), NonDiagonalizable);
}
