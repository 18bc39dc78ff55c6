#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "wilson/errors.hpp"

using namespace wilson;

TEST_CASE("validate accepts semigroups and pinpoints failures", "[semigroup]") {
  CHECK_NOTHROW(validate(examples::two_multiplicative()));
  CHECK_NOTHROW(validate(examples::cyclic_group(3)));

  CayleyTable const bad{{1, 0}, {0, 0}};
  auto const        fail = find_associativity_failure(bad);
  REQUIRE(fail.has_value());
  // (0*0)*1 = 1*1 = 0 but 0*(0*1) = 0*0 = 1; (0, 0, 0) itself is fine
  CHECK(fail->x == 0);
  CHECK(fail->y == 0);
  CHECK(fail->z == 1);
  CHECK(bad(bad(0, 0), 0) == bad(0, bad(0, 0)));
  try {
    validate(bad);
    FAIL("expected AssocFail");
  } catch (AssocFail const& e) {
    CHECK(e.x() == 0);
    CHECK(e.z() == 1);
  }
  CHECK_THROWS_AS(CayleyTable(2, {0, 1, 2, 0}), IndexOutOfRange);
}

TEST_CASE("census counts match a naive full scan", "[semigroup][census]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const fast  = enumerate_semigroups(n);
    auto const naive = wilson::testing::naive_semigroups(n);
    CHECK(fast == naive);
  }
  CHECK(enumerate_semigroups(2).size() == 8);
  CHECK(enumerate_semigroups(3).size() == 113);
}

TEST_CASE("order 4 census", "[semigroup][census]") {
  auto const tables = enumerate_semigroups(4);
  CHECK(tables.size() == 3492);
  CHECK(std::is_sorted(tables.begin(), tables.end()));
  CHECK(std::all_of(tables.begin(), tables.end(), [](CayleyTable const& t) {
    return !find_associativity_failure(t).has_value();
  }));
}

TEST_CASE("enumeration limits", "[semigroup]") {
  CHECK_THROWS_AS(SemigroupEnumerator(5), Error);
  CHECK_THROWS_AS(SemigroupEnumerator(6, 6), Error);
  CHECK_THROWS_AS(SemigroupEnumerator(0), Error);
  CHECK_NOTHROW(SemigroupEnumerator(5, 5));
}

TEST_CASE("square generation", "[semigroup]") {
  CHECK(is_square_generated(examples::cyclic_group(3)));
  CHECK(is_square_generated(examples::two_multiplicative()));
  CHECK(is_square_generated(examples::trivial()));
  // null semigroup on two elements: squares give only 0
  auto const null = examples::constant(2, 0);
  auto const gen  = square_generation(null);
  CHECK_FALSE(gen.generated);
  CHECK(gen.closure == std::vector<Element>{0});
  // Z/2: x + x = 0 for both elements, so the squares generate only {0}
  CHECK_FALSE(is_square_generated(examples::cyclic_group(2)));

  // brute force: every element is a product of squares
  for (auto const& t : enumerate_semigroups(3)) {
    std::vector<bool> reach(t.order(), false);
    for (Element x = 0; x < t.order(); ++x) {
      reach[t(x, x)] = true;
    }
    for (bool grew = true; grew;) {
      grew = false;
      for (Element a = 0; a < t.order(); ++a) {
        for (Element b = 0; b < t.order(); ++b) {
          if (reach[a] && reach[b] && !reach[t(a, b)]) {
            reach[t(a, b)] = grew = true;
          }
        }
      }
    }
    bool const all = std::all_of(reach.begin(), reach.end(), [](bool v) { return v; });
    CHECK(is_square_generated(t) == all);
    if (all) {
      auto const ss = products(t);
      CHECK(std::all_of(ss.begin(), ss.end(), [](bool v) { return v; }));
    }
  }
}

TEST_CASE("involutive automorphisms", "[semigroup]") {
  auto const z3 = enumerate_involutive_automorphisms(examples::cyclic_group(3));
  REQUIRE(z3.size() == 2);
  CHECK(z3[0].perm == std::vector<Element>{0, 1, 2});
  CHECK(z3[1].perm == std::vector<Element>{0, 2, 1});

  // naive: every permutation checked for involution and homomorphism
  for (auto const& t : enumerate_semigroups(3)) {
    std::vector<Element> p(t.order());
    std::iota(p.begin(), p.end(), Element{0});
    std::vector<Involution> naive;
    do {
      bool ok = true;
      for (Element x = 0; x < t.order() && ok; ++x) {
        ok = p[p[x]] == x;
        for (Element y = 0; y < t.order() && ok; ++y) {
          ok = p[t(x, y)] == t(p[x], p[y]);
        }
      }
      if (ok) {
        naive.push_back(Involution{p});
      }
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(enumerate_involutive_automorphisms(t) == naive);
  }
}

TEST_CASE("monogenic data and the session conductor", "[semigroup]") {
  auto const z3 = examples::cyclic_group(3);
  auto const m  = monogenic_data(z3, 1);
  CHECK(m.index == 1);
  CHECK(m.period == 3);
  CHECK(period_lcm(z3) == 3);
  CHECK(session_conductor(z3) == 6);
  CHECK(session_conductor(examples::two_multiplicative()) == 2);

  // x^(i+p) = x^i with (i, p) minimal, by scanning a list of powers
  for (auto const& t : enumerate_semigroups(3)) {
    for (Element x = 0; x < t.order(); ++x) {
      std::vector<Element> pw{0, x};  // pw[k] = x^k, pw[0] unused
      for (std::size_t k = 2; k <= 2 * t.order() + 2; ++k) {
        pw.push_back(t(pw.back(), x));
      }
      std::size_t i = 0, p = 0;
      for (std::size_t a = 1; i == 0; ++a) {
        for (std::size_t b = 1; a + b < pw.size(); ++b) {
          if (pw[a + b] == pw[a]) {
            i = a;
            p = b;
            break;
          }
        }
      }
      auto const md = monogenic_data(t, x);
      CHECK(md.index == i);
      CHECK(md.period == p);
    }
  }
}

TEST_CASE("order 4 conductors stay small", "[semigroup][census]") {
  unsigned largest = 0, largest_square_generated = 0;
  for (auto const& t : enumerate_semigroups(4)) {
    largest = std::max(largest, session_conductor(t));
    if (is_square_generated(t)) {
      largest_square_generated = std::max(largest_square_generated, session_conductor(t));
    }
  }
  CHECK(largest == 8);  // Z/4
  CHECK(largest_square_generated == 6);
}

TEST_CASE("text format", "[semigroup]") {
  auto const t = parse_semigroup_text("# comment\norder 2\n0 0\n\n0 1\n");
  CHECK(t == examples::two_multiplicative());
  CHECK(parse_semigroup_text(to_text(examples::cyclic_group(4))) == examples::cyclic_group(4));
  try {
    parse_semigroup_text("order 2\n0 0\n0 x\n");
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_semigroup_text("order 2\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_semigroup_text("order 2\n0 0\n0 5\n"), ParseError);
}
