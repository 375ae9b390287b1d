#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "schubert/error.hpp"
#include "schubert/gkm.hpp"

using namespace schubert;

namespace {

WeylElt wd(const RootSystem& rs, std::initializer_list<int> w) {
  std::vector<int> v(w);
  return WeylElt::from_word(rs, v);
}

Poly pp(int rank, const char* text) { return Poly::parse(rank, text); }

}  // namespace

TEST_CASE("point class and the sign pin") {
  RootSystem rs(CartanType('A', 2));
  WeylGroup wg(rs);
  EmultEngine eng(rs);
  GkmAlgebra alg(wg, eng);
  WeylElt e = WeylElt::identity(rs);
  // xi(e)|_e = + product of the positive roots
  Poly prod = Poly::one(2);
  for (const Root& b : rs.positive_roots()) prod = prod * Poly::linear_form(b);
  CHECK(alg.restriction(e, e) == prod);
  for (size_t x = 1; x < wg.size(); ++x) CHECK(alg.restriction(e, wg[x]).is_zero());
}

TEST_CASE("A2 restriction values") {
  RootSystem rs(CartanType('A', 2));
  WeylGroup wg(rs);
  EmultEngine eng(rs);
  GkmAlgebra alg(wg, eng);
  WeylElt s1s2 = wd(rs, {0, 1});
  CHECK(alg.restriction(s1s2, s1s2) == pp(2, "a2"));
  CHECK(alg.restriction(s1s2, WeylElt::identity(rs)) == pp(2, "a1 + a2"));
  WeylElt s1 = wd(rs, {0});
  CHECK(alg.restriction(s1, WeylElt::identity(rs)) == pp(2, "a1*a2 + a2^2"));
  CHECK(alg.restriction(s1, s1) == pp(2, "a1*a2 + a2^2"));
}

TEST_CASE("support law and homogeneity") {
  for (const char* name : {"A2", "B2"}) {
    RootSystem rs(CartanType::parse(name));
    WeylGroup wg(rs);
    EmultEngine eng(rs);
    GkmAlgebra alg(wg, eng);
    int n_pos = static_cast<int>(rs.positive_roots().size());
    for (size_t w = 0; w < wg.size(); ++w) {
      const GkmTuple& xi = alg.schubert_class(w);
      for (size_t x = 0; x < wg.size(); ++x) {
        CHECK(xi.value(x).is_zero() == !wg.leq(x, w));
        if (!xi.value(x).is_zero()) {
          CHECK(xi.value(x).is_homogeneous());
          CHECK(xi.value(x).degree() == n_pos - wg[w].length());
        }
      }
    }
  }
}

TEST_CASE("all Schubert classes satisfy the congruences") {
  for (const char* name : {"A2", "B2", "G2"}) {
    RootSystem rs(CartanType::parse(name));
    WeylGroup wg(rs);
    EmultEngine eng(rs);
    GkmAlgebra alg(wg, eng);
    for (size_t w = 0; w < wg.size(); ++w)
      CHECK_NOTHROW(alg.schubert_class(w));  // verified on construction
  }
}

TEST_CASE("verify_gkm finds violations") {
  RootSystem rs(CartanType('A', 2));
  WeylGroup wg(rs);
  EmultEngine eng(rs);
  GkmAlgebra alg(wg, eng);

  GkmTuple constant = GkmTuple::constant(wg, pp(2, "a1^2 + a2"));
  CHECK(alg.verify(constant).empty());

  GkmTuple bad(wg);
  bad.value(size_t{0}) = pp(2, "a1");  // f_e = a1, all others zero
  auto violations = alg.verify(bad);
  REQUIRE(violations.size() == 2);  // a1 fails mod a2 and mod a1+a2
  bool found_a2 = false;
  for (const auto& v : violations) {
    CHECK(v.x_index == 0);
    if (v.alpha == Root(std::vector<int>{0, 1})) found_a2 = true;
  }
  CHECK(found_a2);
}

TEST_CASE("tuple ring operations") {
  RootSystem rs(CartanType('A', 2));
  WeylGroup wg(rs);
  EmultEngine eng(rs);
  GkmAlgebra alg(wg, eng);
  const GkmTuple& t = alg.schubert_class(wd(rs, {0, 1}));
  GkmTuple zero(wg);
  CHECK(t + zero == t);
  GkmTuple f = GkmTuple::constant(wg, pp(2, "a1"));
  GkmTuple ft = f * t;
  for (size_t x = 0; x < wg.size(); ++x) CHECK(ft.value(x) == pp(2, "a1") * t.value(x));
}

TEST_CASE("products of Schubert classes stay in the congruence algebra") {
  for (const char* name : {"A2", "B2"}) {
    RootSystem rs(CartanType::parse(name));
    WeylGroup wg(rs);
    EmultEngine eng(rs);
    GkmAlgebra alg(wg, eng);
    for (size_t u = 0; u < wg.size(); ++u)
      for (size_t v = 0; v < wg.size(); ++v) {
        GkmTuple prod = alg.schubert_class(u) * alg.schubert_class(v);
        CHECK(alg.verify(prod).empty());
      }
  }
}

TEST_CASE("basis expansion: indicators and round trips") {
  RootSystem rs(CartanType('A', 2));
  WeylGroup wg(rs);
  EmultEngine eng(rs);
  GkmAlgebra alg(wg, eng);

  for (size_t w = 0; w < wg.size(); ++w) {
    auto exp = alg.expand(alg.schubert_class(w));
    REQUIRE(exp.size() == 1);
    CHECK(exp[0].first == w);
    CHECK(exp[0].second.is_one());
  }

  // random S-combinations round-trip exactly
  oracles::PolyGen gen(71);
  std::mt19937 rng(73);
  std::uniform_int_distribution<size_t> pick(0, wg.size() - 1);
  for (int t = 0; t < 10; ++t) {
    std::map<size_t, Poly> coeffs;
    coeffs[pick(rng)] = gen.next(2, 2, 2);
    coeffs[pick(rng)] = gen.next(2, 1, 2);
    GkmTuple combo(wg);
    for (const auto& [w, c] : coeffs) {
      if (c.is_zero()) continue;
      const GkmTuple& xi = alg.schubert_class(w);
      for (size_t x = 0; x < wg.size(); ++x)
        combo.value(x) += c * xi.value(x);
    }
    auto exp = alg.expand(combo);
    std::map<size_t, Poly> got(exp.begin(), exp.end());
    for (const auto& [w, c] : coeffs)
      if (!c.is_zero()) CHECK(got.at(w) == c);
    for (const auto& [w, c] : got) CHECK(coeffs.at(w) == c);
  }

  // constant tuples reproduce themselves through the expansion
  GkmTuple f = GkmTuple::constant(wg, pp(2, "a1 + 3*a2"));
  auto exp = alg.expand(f);
  GkmTuple back(wg);
  for (const auto& [w, c] : exp) {
    const GkmTuple& xi = alg.schubert_class(w);
    for (size_t x = 0; x < wg.size(); ++x) back.value(x) += c * xi.value(x);
  }
  CHECK(back == f);
}

TEST_CASE("the curve classes multiply through the point class") {
  RootSystem rs(CartanType('A', 2));
  WeylGroup wg(rs);
  EmultEngine eng(rs);
  GkmAlgebra alg(wg, eng);
  GkmTuple prod = alg.schubert_class(wd(rs, {0})) * alg.schubert_class(wd(rs, {1}));
  auto exp = alg.expand(prod);
  REQUIRE(exp.size() == 1);
  CHECK(wg[exp[0].first].is_identity());
  CHECK(exp[0].second == pp(2, "a1 + a2"));
}

TEST_CASE("specialization to ordinary coefficients") {
  RootSystem rs(CartanType('A', 2));
  WeylGroup wg(rs);
  EmultEngine eng(rs);
  GkmAlgebra alg(wg, eng);

  // a basis class specializes to its own indicator
  for (size_t w = 0; w < wg.size(); ++w) {
    auto ord = alg.specialize(alg.schubert_class(w));
    REQUIRE(ord.size() == 1);
    CHECK(ord[0].first == w);
    CHECK(ord[0].second == 1);
  }

  // divisor-class product: the classical coefficients land on s1 and s2
  GkmTuple prod = alg.schubert_class(wd(rs, {0, 1})) * alg.schubert_class(wd(rs, {1, 0}));
  auto ord = alg.specialize(prod);
  REQUIRE(ord.size() == 2);
  CHECK(wg[ord[0].first] == wd(rs, {0}));
  CHECK(ord[0].second == 1);
  CHECK(wg[ord[1].first] == wd(rs, {1}));
  CHECK(ord[1].second == 1);

  // specialized products of classes are nonnegative across A2
  for (size_t u = 0; u < wg.size(); ++u)
    for (size_t v = 0; v < wg.size(); ++v) {
      GkmTuple p = alg.schubert_class(u) * alg.schubert_class(v);
      for (const auto& [w, c] : alg.specialize(p)) CHECK(c > 0);
    }
}

TEST_CASE("expansion coefficients of class products are integral") {
  for (const char* name : {"A2", "B2"}) {
    RootSystem rs(CartanType::parse(name));
    WeylGroup wg(rs);
    EmultEngine eng(rs);
    GkmAlgebra alg(wg, eng);
    for (size_t u = 0; u < wg.size(); ++u)
      for (size_t v = 0; v < wg.size(); ++v) {
        GkmTuple p = alg.schubert_class(u) * alg.schubert_class(v);
        for (const auto& [w, c] : alg.expand(p)) CHECK(c.has_integer_coeffs());
      }
  }
}

TEST_CASE("expand rejects tuples breaking the congruences") {
  RootSystem rs(CartanType('A', 2));
  WeylGroup wg(rs);
  EmultEngine eng(rs);
  GkmAlgebra alg(wg, eng);
  GkmTuple bad(wg);
  bad.value(size_t{0}) = pp(2, "a1");
  CHECK_THROWS_AS(alg.expand(bad), InvalidInput);
}
