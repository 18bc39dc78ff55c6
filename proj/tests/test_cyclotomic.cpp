#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "wilson/errors.hpp"

using namespace wilson;
using wilson::testing::close;
using wilson::testing::numeric;

TEST_CASE("cyclotomic polynomials", "[cyclotomic]") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<std::int64_t>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient outside {-1, 0, 1}
  auto const phi105 = cyclotomic_polynomial(105);
  CHECK(phi105.size() == 49);
  CHECK(std::count(phi105.begin(), phi105.end(), -2) == 2);
  for (unsigned n = 1; n <= 30; ++n) {
    CHECK(cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
  }
}

TEST_CASE("roots of unity", "[cyclotomic]") {
  auto const& f12 = CyclotomicField::get(12);
  CHECK(root_of_unity(CyclotomicField::get(1), 1, 0) == Cyclotomic(1));
  CHECK(root_of_unity(f12, 4, 2) == Cyclotomic(-1));
  CHECK(root_of_unity(f12, 3, 1) + root_of_unity(f12, 3, 2) == Cyclotomic(-1));
  CHECK(root_of_unity(f12, 3, 1) * root_of_unity(f12, 3, 2) == Cyclotomic(1));
  CHECK(Cyclotomic(1) / root_of_unity(f12, 3, 1) == root_of_unity(f12, 3, 2));
  CHECK(root_of_unity(f12, 12, -1) == root_of_unity(f12, 12, 11));
  CHECK_THROWS_AS(root_of_unity(f12, 5, 1), ConductorMismatch);

  for (unsigned n : {1u, 2u, 4u, 6u, 10u, 12u}) {
    auto const& field = CyclotomicField::get(n);
    for (unsigned m = 1; m <= n; ++m) {
      if (n % m != 0) {
        continue;
      }
      for (unsigned k = 0; k < m; ++k) {
        auto const z = root_of_unity(field, m, k);
        CHECK(z.pow(m) == Cyclotomic(1));
        CHECK(close(numeric(z), std::polar(1.0, 2 * std::numbers::pi * k / m)));
      }
    }
  }
}

TEST_CASE("complex conjugation", "[cyclotomic]") {
  auto const& f4 = CyclotomicField::get(4);
  auto const  i  = root_of_unity(f4, 4, 1);
  CHECK(i.conj() == -i);
  CHECK(Cyclotomic(Rational(3, 7)).conj() == Cyclotomic(Rational(3, 7)));
  std::mt19937_64 rng(5);
  auto const&     f10 = CyclotomicField::get(10);
  for (int k = 0; k < 200; ++k) {
    auto const a = wilson::testing::random_cyclotomic(rng, f10);
    CHECK(a.conj().conj() == a);
    CHECK(close(numeric(a.conj()), std::conj(numeric(a))));
  }
}

TEST_CASE("division by zero and conductor mismatch", "[cyclotomic]") {
  auto const& f3 = CyclotomicField::get(3);
  auto const& f4 = CyclotomicField::get(4);
  CHECK_THROWS_AS(Cyclotomic(1) / Cyclotomic(0), DivisionByZero);
  CHECK_THROWS_AS(Cyclotomic(f3, Rational(0)).inverse(), DivisionByZero);
  CHECK_THROWS_AS(root_of_unity(f3, 3, 1) + root_of_unity(f4, 4, 1), ConductorMismatch);
  // rationals combine with anything
  CHECK(Cyclotomic(2) * root_of_unity(f4, 4, 1) + Cyclotomic(Rational(1, 2))
        == Cyclotomic(f4, Cyclotomic::Coeffs{Rational(1, 2), Rational(2)}));
}

TEST_CASE("embedding into a larger field", "[cyclotomic]") {
  auto const& f3  = CyclotomicField::get(3);
  auto const& f12 = CyclotomicField::get(12);
  auto const  z3  = root_of_unity(f3, 3, 1);
  CHECK(z3.embed(f12) == root_of_unity(f12, 3, 1));
  CHECK(close(numeric(z3.embed(f12)), numeric(z3)));
  CHECK(Cyclotomic(Rational(5, 3)).embed(CyclotomicField::get(7)).conductor() == 7);
  CHECK_THROWS_AS(z3.embed(CyclotomicField::get(4)), ConductorMismatch);
}

TEST_CASE("field axioms on random triples", "[cyclotomic][property]") {
  std::mt19937_64 rng(7);
  for (unsigned n : {1u, 4u, 6u, 10u, 12u}) {
    auto const& field = CyclotomicField::get(n);
    for (int k = 0; k < 1000; ++k) {
      auto const a = wilson::testing::random_cyclotomic(rng, field, true);
      auto const b = wilson::testing::random_cyclotomic(rng, field, true);
      auto const c = wilson::testing::random_cyclotomic(rng, field);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) {
        CHECK((a * b) / a == b);
      }
    }
  }
}

TEST_CASE("products agree with floating-point evaluation", "[cyclotomic][property]") {
  std::mt19937_64 rng(11);
  for (unsigned n : {3u, 5u, 8u, 12u}) {
    auto const& field = CyclotomicField::get(n);
    for (int k = 0; k < 300; ++k) {
      auto const a = wilson::testing::random_cyclotomic(rng, field);
      auto const b = wilson::testing::random_cyclotomic(rng, field);
      CHECK(close(numeric(a * b), numeric(a) * numeric(b)));
      CHECK(close(numeric(a + b), numeric(a) + numeric(b)));
      if (!b.is_zero()) {
        CHECK(close(numeric(a / b), numeric(a) / numeric(b), 1e-7));
      }
    }
  }
}

TEST_CASE("string form", "[cyclotomic]") {
  auto const& f6 = CyclotomicField::get(6);
  CHECK(Cyclotomic(0).to_string() == "0");
  CHECK(Cyclotomic(Rational(-1, 2)).to_string() == "-1/2");
  CHECK(root_of_unity(f6, 6, 1).to_string() == "z6");
}
