#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "schubert/error.hpp"
#include "schubert/poly.hpp"
#include "schubert/root_fraction.hpp"

using namespace schubert;

namespace {

Root root(std::initializer_list<int> c) { return Root(std::vector<int>(c)); }

Poly var(int rank, int i) { return Poly::variable(rank, i); }

RootFraction frac(const RootSystem& rs, const char* text) {
  return RootFraction::parse(rs, text);
}

}  // namespace

TEST_CASE("poly ring basics") {
  Poly a1 = var(2, 0), a2 = var(2, 1);
  CHECK((a1 + (-a1)).is_zero());
  CHECK(a1 * (a1 + a2) == a1 * a1 + a1 * a2);
  CHECK((a1 * make_rational(3, 2)).to_string() == "3/2*a1");
  CHECK_THROWS_AS(var(2, 0) + var(3, 0), InvalidInput);
}

TEST_CASE("poly canonical text and parsing") {
  Poly p = var(2, 0) * var(2, 0) * var(2, 1) - Poly::constant(2, make_rational(3, 2)) *
                                                   var(2, 1) * var(2, 1) * var(2, 1);
  CHECK(p.to_string() == "a1^2*a2 - 3/2*a2^3");
  CHECK(Poly(2).to_string() == "0");
  CHECK(Poly::parse(2, "a1^2*a2 - 3/2*a2^3") == p);
  CHECK(Poly::parse(2, "0").is_zero());
  oracles::PolyGen gen(11);
  for (int t = 0; t < 50; ++t) {
    Poly q = gen.next(3, 4, 5);
    CHECK(Poly::parse(3, q.to_string()) == q);
  }
  CHECK_THROWS_AS(Poly::parse(2, "a3"), InvalidInput);
  CHECK_THROWS_AS(Poly::parse(2, "1 +"), InvalidInput);
}

TEST_CASE("poly_mul agrees with a dense convolution oracle") {
  oracles::PolyGen gen(23);
  for (int t = 0; t < 40; ++t) {
    Poly p = gen.next(2, 3, 4), q = gen.next(2, 3, 4);
    CHECK(p * q == oracles::dense_mul_rank2(p, q, 3));
  }
}

TEST_CASE("linear_form examples") {
  CHECK(Poly::linear_form(root({1, 0})).to_string() == "a1");
  CHECK(Poly::linear_form(root({-1, -1})).to_string() == "-a1 - a2");
  CHECK(Poly::linear_form(root({1, 2})).to_string() == "a1 + 2*a2");
}

TEST_CASE("divide_by_linear") {
  Poly a1 = var(2, 0), a2 = var(2, 1);
  auto q = (a1 * a1 + a1 * a2).divide_by_linear(root({1, 0}));
  REQUIRE(q.has_value());
  CHECK(*q == a1 + a2);
  CHECK_FALSE((a1 + a2).divide_by_linear(root({1, 0})).has_value());
  CHECK_THROWS_AS(a1.divide_by_linear(root({-1, 0})), InvalidInput);

  // round trip: (beta * q) / beta == q for random q and every positive root
  RootSystem b2(CartanType('B', 2));
  oracles::PolyGen gen(5);
  for (const Root& beta : b2.positive_roots())
    for (int t = 0; t < 10; ++t) {
      Poly p = gen.next(2, 3, 4);
      auto back = (Poly::linear_form(beta) * p).divide_by_linear(beta);
      REQUIRE(back.has_value());
      CHECK(*back == p);
    }
}

TEST_CASE("f - s_beta(f) is divisible by beta") {
  for (const char* name : {"A2", "B2", "G2"}) {
    RootSystem rs(CartanType::parse(name));
    oracles::PolyGen gen(17);
    for (const Root& beta : rs.positive_roots()) {
      WeylElt s = reflection(rs, beta);
      for (int t = 0; t < 8; ++t) {
        Poly f = gen.next(rs.rank(), 3, 4);
        CHECK((f - f.weyl_act(s)).divide_by_linear(beta).has_value());
      }
    }
  }
}

TEST_CASE("weyl action on polynomials") {
  RootSystem rs(CartanType('A', 2));
  WeylElt s1 = WeylElt::simple(rs, 0);
  Poly a2 = var(2, 1);
  CHECK(a2.weyl_act(s1) == var(2, 0) + var(2, 1));  // matches roots.reflect
  oracles::PolyGen gen(31);
  auto elems = enumerate(rs);
  for (int t = 0; t < 20; ++t) {
    Poly p = gen.next(2, 3, 3), q = gen.next(2, 3, 3);
    const WeylElt& w = elems[t % elems.size()];
    CHECK(p.weyl_act(WeylElt::identity(rs)) == p);
    CHECK((p * q).weyl_act(w) == p.weyl_act(w) * q.weyl_act(w));
    CHECK((p + q).weyl_act(w) == p.weyl_act(w) + q.weyl_act(w));
    for (const WeylElt& u : elems)
      CHECK(p.weyl_act(compose(u, w)) == p.weyl_act(w).weyl_act(u));
  }
}

TEST_CASE("fraction basics") {
  RootSystem rs(CartanType('A', 2));
  RootFraction inv_a1 = RootFraction::inverse_root(rs, root({1, 0}));
  CHECK((inv_a1 + (-inv_a1)).is_zero());
  CHECK((inv_a1 + (-inv_a1)).den_indices().empty());

  // 1/(a1 a2) + 1/(a1 (a1+a2)) = (a1 + 2 a2) / (a1 a2 (a1+a2))
  RootFraction f = frac(rs, "1 / (a2 * a1)");
  RootFraction g = frac(rs, "1 / (a1 * (a1+a2))");
  CHECK(f + g == frac(rs, "(a1 + 2*a2) / (a2 * a1 * (a1+a2))"));

  // s1 (1/(a1 a2)) = -1/(a1 (a1+a2))
  WeylElt s1 = WeylElt::simple(rs, 0);
  CHECK(f.weyl_act(s1) == frac(rs, "-1 / (a1 * (a1+a2))"));
}

TEST_CASE("fraction to_string and parse round-trip") {
  RootSystem b2(CartanType('B', 2));
  RootFraction f(b2, Poly::constant(2, 2), {0, 1, 3});
  CHECK(f.to_string() == "2 / (a2 * a1 * (a1+2*a2))");
  CHECK(RootFraction::parse(b2, f.to_string()) == f);
  RootFraction z = RootFraction::zero(b2);
  CHECK(z.to_string() == "0");
  CHECK(RootFraction::parse(b2, "0") == z);
}

TEST_CASE("fraction evaluation") {
  RootSystem rs(CartanType('A', 2));
  std::vector<Rational> ones = {1, 1};
  CHECK(frac(rs, "1 / (a2 * a1)").eval(ones) == 1);
  CHECK(frac(rs, "1 / (a2 * a1 * (a1+a2))").eval(ones) == make_rational(1, 2));
  std::vector<Rational> wall = {0, 1};
  try {
    frac(rs, "1 / (a2 * a1)").eval(wall);
    CHECK(false);
  } catch (const InvalidInput& e) {
    CHECK(e.kind() == "DenominatorVanishes");
    CHECK(std::string(e.what()).find("a1") != std::string::npos);
  }
}

TEST_CASE("fraction arithmetic agrees with the naive oracle") {
  RootSystem b2(CartanType('B', 2));
  oracles::PolyGen gen(41);
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> idx(0, 3), cnt(0, 3);
  auto random_fraction = [&] {
    std::vector<int> den;
    for (int k = cnt(rng); k > 0; --k) den.push_back(idx(rng));
    Poly num = gen.next(2, 2, 3);
    return RootFraction(b2, num, den);
  };
  for (int t = 0; t < 60; ++t) {
    RootFraction f = random_fraction(), g = random_fraction();
    auto nf = oracles::NaiveFrac::of(f), ng = oracles::NaiveFrac::of(g);
    CHECK(oracles::NaiveFrac::of(f + g).equals(nf.add(ng)));
    CHECK(oracles::NaiveFrac::of(f * g).equals(nf.mul(ng)));
  }
}

TEST_CASE("reduction is canonical") {
  RootSystem rs(CartanType('A', 2));
  // multiply numerator and denominator by the same root: same value, same
  // reduced representation
  RootFraction f = frac(rs, "(a1 + 2*a2) / (a2 * a1)");
  RootFraction g(rs, f.num() * Poly::linear_form(root({1, 1})), {0, 1, 2});
  CHECK(f == g);
  CHECK(g.den_indices() == std::vector<int>{0, 1});
  // zero numerator forces the canonical zero
  RootFraction z(rs, Poly(2), {0, 1});
  CHECK(z.is_zero());
  CHECK(z.den_indices().empty());
}

TEST_CASE("degrees under fraction arithmetic") {
  RootSystem rs(CartanType('A', 2));
  RootFraction f = frac(rs, "1 / (a2 * a1)");          // degree -2
  RootFraction g = frac(rs, "a1 / (a2 * (a1+a2))");    // degree -1
  CHECK(f.degree() == -2);
  CHECK(g.degree() == -1);
  CHECK((f * g).degree() == -3);
  RootFraction h = frac(rs, "1 / (a1 * (a1+a2))");
  auto sum = f + h;
  CHECK(sum.degree() == -2);
}

TEST_CASE("modular evaluation agrees with exact evaluation") {
  const uint64_t p = 2147483647;
  oracles::PolyGen gen(67);
  std::mt19937 rng(68);
  std::uniform_int_distribution<uint64_t> pt(0, 1000);
  for (int t = 0; t < 30; ++t) {
    Poly q = gen.next(3, 4, 5);
    std::vector<uint64_t> point = {pt(rng), pt(rng), pt(rng)};
    std::vector<Rational> exact_pt = {Rational(static_cast<unsigned long>(point[0])),
                                      Rational(static_cast<unsigned long>(point[1])),
                                      Rational(static_cast<unsigned long>(point[2]))};
    auto got = q.eval_mod(point, p);
    REQUIRE(got.has_value());
    Rational exact = q.eval(exact_pt);
    // compare num * den^{-1} mod p
    uint64_t num = mpz_fdiv_ui(exact.get_num().get_mpz_t(), p);
    uint64_t den = mpz_fdiv_ui(exact.get_den().get_mpz_t(), p);
    uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    CHECK(*got == num * inv % p);
  }
  CHECK(Poly(2).eval_mod(std::vector<uint64_t>{1, 2}, p) == 0);
}

TEST_CASE("fraction field laws on random inputs") {
  RootSystem rs(CartanType('G', 2));
  oracles::PolyGen gen(59);
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> idx(0, 5), cnt(0, 2);
  auto random_fraction = [&] {
    std::vector<int> den;
    for (int k = cnt(rng); k > 0; --k) den.push_back(idx(rng));
    return RootFraction(rs, gen.next(2, 2, 2), den);
  };
  for (int t = 0; t < 40; ++t) {
    RootFraction f = random_fraction(), g = random_fraction(), h = random_fraction();
    CHECK(f + g == g + f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f - f == RootFraction::zero(rs));
  }
}

TEST_CASE("weyl action commutes with evaluation") {
  RootSystem b2(CartanType('B', 2));
  oracles::PolyGen gen(53);
  auto elems = enumerate(b2);
  std::vector<Rational> lam = {make_rational(2), make_rational(3)};
  for (int t = 0; t < 20; ++t) {
    RootFraction f(b2, gen.next(2, 2, 3), {0, 2});
    const WeylElt& w = elems[t % elems.size()];
    // (w f)(lam) = f(lam composed with w): pull lam back through w
    std::vector<Rational> pulled(2);
    for (int i = 0; i < 2; ++i) {
      Root img = w.act(b2.simple_root(i));
      Rational v = 0;
      for (int j = 0; j < 2; ++j) v += Rational(img.coeffs[j]) * lam[j];
      pulled[i] = v;
    }
    bool wall = false;
    for (int k : f.den_indices()) {
      if (Poly::linear_form(b2.positive_roots()[k]).eval(pulled) == 0) wall = true;
    }
    if (wall) continue;
    CHECK(f.weyl_act(w).eval(lam) == f.eval(pulled));
  }
}
