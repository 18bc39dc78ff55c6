#ifndef WILSON_TESTS_SUPPORT_HPP_
#define WILSON_TESTS_SUPPORT_HPP_

// Shared helpers for the tests: floating-point images of exact values (an
// independent check on the exact arithmetic), random generators and naive
// brute-force enumerators.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "wilson/cyclotomic.hpp"
#include "wilson/function_space.hpp"
#include "wilson/semigroup.hpp"

namespace wilson::testing {

  inline double to_double(Rational const& r) {
    return std::stod(r.numerator_string()) / std::stod(r.denominator_string());
  }

  //! sum_k c_k exp(2 pi i k / n).
  inline std::complex<double> numeric(Cyclotomic const& value) {
    std::complex<double> out = 0;
    double const         n   = value.conductor();
    for (std::size_t k = 0; k < value.coeffs().size(); ++k) {
      out += to_double(value.coeffs()[k])
             * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n);
    }
    return out;
  }

  inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
    return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
  }

  inline Rational random_rational(std::mt19937_64& rng, bool allow_big = false) {
    if (allow_big && rng() % 8 == 0) {
      // spill past 64 bits
      std::string digits = std::to_string(rng() % 9 + 1);
      for (int i = 0; i < 25; ++i) {
        digits += static_cast<char>('0' + rng() % 10);
      }
      return Rational::from_strings((rng() % 2 ? "-" : "") + digits,
                                    std::to_string(rng() % 1000 + 1));
    }
    auto const num = static_cast<std::int64_t>(rng() % 21) - 10;
    auto const den = static_cast<std::int64_t>(rng() % 9) + 1;
    return Rational(num, den);
  }

  inline Cyclotomic random_cyclotomic(std::mt19937_64&       rng,
                                      CyclotomicField const& field,
                                      bool                   allow_big = false) {
    Cyclotomic::Coeffs coeffs;
    for (unsigned k = 0; k < field.degree(); ++k) {
      coeffs.push_back(rng() % 3 == 0 ? Rational(0) : random_rational(rng, allow_big));
    }
    return Cyclotomic(field, std::move(coeffs));
  }

  //! Every table of order n checked on all n^3 triples; n <= 3.
  inline std::vector<CayleyTable> naive_semigroups(std::size_t n) {
    std::size_t const    cells = n * n;
    std::size_t          total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
      total *= n;
    }
    std::vector<CayleyTable> out;
    std::vector<Element>     entries(cells);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = cells; i-- > 0;) {
        entries[i] = static_cast<Element>(c % n);
        c /= n;
      }
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        for (std::size_t y = 0; y < n && ok; ++y) {
          for (std::size_t z = 0; z < n && ok; ++z) {
            ok = entries[entries[x * n + y] * n + z]
                 == entries[x * n + entries[y * n + z]];
          }
        }
      }
      if (ok) {
        out.emplace_back(n, entries);
      }
    }
    return out;
  }

  //! Every (S, sigma, mu) on square-generated tables of order <= max_order.
  inline std::vector<StructureInstance> census_instances(std::size_t max_order) {
    std::vector<StructureInstance> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      for (auto const& t : enumerate_semigroups(n)) {
        if (!is_square_generated(t)) {
          continue;
        }
        auto const& field = CyclotomicField::get(session_conductor(t));
        for (auto const& sigma : enumerate_involutive_automorphisms(t)) {
          for (auto const& mu : enumerate_mu(t, sigma, field)) {
            out.push_back(StructureInstance{t, sigma, mu.func});
          }
        }
      }
    }
    return out;
  }

  inline SFunc random_function(std::mt19937_64& rng, StructureInstance const& ctx) {
    auto const& field = CyclotomicField::get(session_conductor(ctx.table));
    SFunc       f(static_cast<Index>(ctx.order()));
    for (Index x = 0; x < f.size(); ++x) {
      f(x) = random_cyclotomic(rng, field);
    }
    return f;
  }

  //! k -> zeta_n^(j k) on Z/n, in the field of conductor `conductor`.
  inline SFunc cyclic_character(std::size_t n, unsigned j, unsigned conductor) {
    auto const& field = CyclotomicField::get(conductor);
    SFunc       chi(static_cast<Index>(n));
    for (Index k = 0; k < chi.size(); ++k) {
      auto const e = static_cast<std::int64_t>(j) * k;
      chi(k)       = root_of_unity(field, static_cast<unsigned>(n), e);
    }
    return chi;
  }

}  // namespace wilson::testing

#endif  // WILSON_TESTS_SUPPORT_HPP_
