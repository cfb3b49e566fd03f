#include <catch2/catch_amalgamated.hpp>

#include "qgor/parse.hpp"
#include "qgor/random.hpp"

using namespace qgor;

namespace {

RingPtr<QQ> q3() { return make_ring(QQ{}, {"x", "y", "z"}); }

Polynomial<QQ> P(const RingPtr<QQ>& R, const std::string& s) { return parse_polynomial<QQ>(s, R); }

}  // namespace

TEST_CASE("rationals are stored reduced with positive denominator") {
  auto a = QQ::make(4, -6);
  CHECK(QQ::to_string(a) == "-2/3");
  CHECK(QQ::equal(QQ::make(2, 4), QQ::make(1, 2)));
  CHECK(QQ::to_string(QQ::make(8, 4)) == "2");
  CHECK_THROWS_AS(QQ::make(1, 0), std::invalid_argument);
}

TEST_CASE("prime field elements are canonical representatives") {
  GFp f(101);
  CHECK(f.from_int(-1) == 100);
  CHECK(f.from_int(202) == 0);
  CHECK(f.mul(f.from_int(50), f.from_int(50)) == 2500 % 101);
  for (std::uint32_t a = 1; a < 101; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK_THROWS_AS(GFp(10), std::invalid_argument);
  CHECK_THROWS_AS(GFp(1), std::invalid_argument);
  GFp big(2147483647);  // largest prime below 2^31
  CHECK(big.mul(big.from_int(-1), big.from_int(-1)) == 1);
}

TEST_CASE("parser handles the declared grammar") {
  auto R = q3();
  SECTION("leading term under grevlex ties") {
    auto f = P(R, "x*y + 3*z^2");
    // equal degree, grevlex breaks the tie by the last exponent
    CHECK(f.leading_monomial() == P(R, "x*y").leading_monomial());
  }
  SECTION("zero polynomial is the empty term list") {
    auto z = P(R, "0");
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
    CHECK(z.to_string() == "0");
  }
  SECTION("binomial expansion over a prime field") {
    auto Rp = make_ring(GFp(101), {"x", "y"});
    auto f = parse_polynomial<GFp>("(x+y)^2", Rp);
    CHECK(f == parse_polynomial<GFp>("x^2 + 2*x*y + y^2", Rp));
  }
  SECTION("rational coefficient literals") {
    auto f = P(R, "1/2*x + 3/4");
    CHECK(f.to_string() == "1/2*x + 3/4");
  }
  SECTION("errors carry positions") {
    CHECK_THROWS_AS(P(R, "x + w"), parse_error);
    try {
      P(R, "x + w");
    } catch (const parse_error& e) {
      CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(P(R, "x + "), parse_error);
    CHECK_THROWS_AS(P(R, "(x"), parse_error);
    CHECK_THROWS_AS(P(R, "x^9999999"), parse_error);
  }
}

TEST_CASE("polynomial arithmetic identities") {
  auto R = q3();
  CHECK(P(R, "(x+y)*(x-y)") == P(R, "x^2 - y^2"));
  auto p = P(R, "x^2*y - 3*z + 1");
  CHECK((p + p.scaled(QQ::from_int(-1))).is_zero());
  auto R3 = make_ring(GFp(3), {"x", "y"});
  CHECK(parse_polynomial<GFp>("(x+y)^3", R3) == parse_polynomial<GFp>("x^3 + y^3", R3));
  CHECK_THROWS_AS(P(R, "x") + parse_polynomial<QQ>("a", make_ring(QQ{}, {"a"})), std::invalid_argument);
}

TEST_CASE("monomial comparisons under the three orders") {
  Monomial x2y({2, 1, 0}), xyz({1, 1, 1}), x({1, 0}), y5({0, 5});
  CHECK(compare_monomials(x2y, xyz, MonomialOrder::Grevlex()) > 0);
  CHECK(compare_monomials(x, y5, MonomialOrder::Lex()) > 0);
  CHECK(compare_monomials(x2y, x2y, MonomialOrder::Grevlex()) == 0);
  CHECK_THROWS_AS(compare_monomials(x2y, x, MonomialOrder::Lex()), std::invalid_argument);
  // block(1) ranks anything with the first variable above anything without
  Monomial t({1, 0, 0}), z9({0, 0, 9});
  CHECK(compare_monomials(t, z9, MonomialOrder::Block(1)) > 0);
}

TEST_CASE("monomial orders are multiplicative well-orderings") {
  std::mt19937_64 rng(7);
  auto random_monomial = [&](std::size_t n) {
    std::vector<std::uint32_t> e(n);
    for (auto& v : e) v = static_cast<std::uint32_t>(rng() % 5);
    return Monomial(e);
  };
  for (MonomialOrder ord : {MonomialOrder::Lex(), MonomialOrder::Grevlex(), MonomialOrder::Block(2)}) {
    Monomial one(4);
    for (int i = 0; i < 500; ++i) {
      Monomial a = random_monomial(4), b = random_monomial(4), c = random_monomial(4);
      int ab = compare_monomials(a, b, ord);
      CHECK(compare_monomials(a * c, b * c, ord) == ab);
      CHECK(compare_monomials(one, a * one, ord) <= 0);  // 1 is minimal
    }
  }
}

TEST_CASE("ring axioms on random triples") {
  auto R = q3();
  auto Rp = make_ring(GFp(32003), {"x", "y", "z"});
  std::mt19937_64 rng(11);
  auto random_poly = [&](auto ring) {
    using F = typename std::decay_t<decltype(*ring)>::field_type;
    std::vector<Term<F>> terms;
    int nterms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < nterms; ++t) {
      std::vector<std::uint32_t> e(3);
      for (auto& v : e) v = static_cast<std::uint32_t>(rng() % 3);
      terms.push_back({Monomial(e), ring->field.from_int(static_cast<long long>(rng() % 19) - 9)});
    }
    return Polynomial<F>::from_terms(ring, std::move(terms));
  };
  auto laws = [&](auto ring) {
    for (int i = 0; i < 1000; ++i) {
      auto a = random_poly(ring), b = random_poly(ring), c = random_poly(ring);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
    }
  };
  laws(R);
  laws(Rp);
}

TEST_CASE("print-parse round trip is a fixed point") {
  auto R = q3();
  std::vector<std::string> fixed = {"x^2 + 5/2*x*y + y^2 - z^2", "0", "-x + 1", "x*y*z - 1/3"};
  for (const auto& s : fixed) {
    auto p = P(R, s);
    CHECK(P(R, p.to_string()) == p);
  }
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    std::vector<Term<QQ>> terms;
    for (int t = 0; t < 4; ++t) {
      std::vector<std::uint32_t> e(3);
      for (auto& v : e) v = static_cast<std::uint32_t>(rng() % 4);
      terms.push_back({Monomial(e), QQ::make(static_cast<long long>(rng() % 21) - 10,
                                             1 + static_cast<long long>(rng() % 7))});
    }
    auto p = Polynomial<QQ>::from_terms(R, std::move(terms));
    CHECK(P(R, p.to_string()) == p);
  }
}

TEST_CASE("random homogeneous forms are reproducible") {
  auto R = make_ring(GFp(32003), {"x", "y", "z", "t"});
  auto f = random_homogeneous_form(R, 1, 42);
  auto g = random_homogeneous_form(R, 1, 42);
  CHECK(f == g);
  CHECK(f.to_string() == g.to_string());
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 1);
  CHECK_FALSE(f == random_homogeneous_form(R, 1, 43));

  auto R2 = make_ring(QQ{}, {"x", "y"});
  auto q = random_homogeneous_form(R2, 2, 7);
  CHECK(q.is_homogeneous());
  CHECK(q.degree() == 2);
  for (const auto& t : q.terms()) CHECK(t.mon.degree() == 2);  // supported on x^2, xy, y^2
}
