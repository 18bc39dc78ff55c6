#ifndef WILSON_EQUATIONS_HPP_
#define WILSON_EQUATIONS_HPP_

// The Wilson-type equations
//   (W1)  f(xy) + mu(y) f(sigma(y) x) = 2 f(x) g(y)
//   (W2)  f(xy) + mu(y) f(sigma(y) x) = 2 f(y) g(x)
// the d'Alembert variant
//   (D)   g(xy) + mu(y) g(sigma(y) x) = 2 g(x) g(y)
// and the mu-d'Alembert equation
//   (MD)  g(xy) + mu(y) g(x sigma(y)) = 2 g(x) g(y)
// on a finite semigroup, together with the solution families and their
// classifiers.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wilson/function_space.hpp"

namespace wilson {

  enum class Equation { wilson1, wilson2, dalembert, mu_dalembert };

  std::string to_string(Equation eq);
  Equation    parse_equation(std::string const& name);

  template <typename Scalar>
  struct ResidualWitness {
    Element x;
    Element y;
    Scalar  residual;
  };

  //! Number of pairs (x, y) with nonzero residual, plus the first one in
  //! row-major order.
  template <typename Scalar>
  struct ResidualReport {
    std::size_t                            violations = 0;
    std::optional<ResidualWitness<Scalar>> witness;

    bool is_zero() const noexcept {
      return !witness.has_value();
    }
  };

  template <typename Scalar, typename Residual>
  ResidualReport<Scalar> scan_residual(std::size_t order, Residual&& r) {
    ResidualReport<Scalar> report;
    auto const             n = static_cast<Element>(order);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        Scalar value = r(x, y);
        if (!is_zero(value)) {
          if (!report.witness) {
            report.witness = ResidualWitness<Scalar>{x, y, std::move(value)};
          }
          ++report.violations;
        }
      }
    }
    return report;
  }

  template <typename Scalar>
  ResidualReport<Scalar> residual_eq1(Function<Scalar> const&  f,
                                      Function<Scalar> const&  g,
                                      Structure<Scalar> const& ctx) {
    auto const& s = ctx.table;
    return scan_residual<Scalar>(s.order(), [&](Element x, Element y) {
      return f(s(x, y)) + ctx.mu(y) * f(s(ctx.sigma(y), x))
             - Scalar(2) * f(x) * g(y);
    });
  }

  template <typename Scalar>
  ResidualReport<Scalar> residual_eq2(Function<Scalar> const&  f,
                                      Function<Scalar> const&  g,
                                      Structure<Scalar> const& ctx) {
    auto const& s = ctx.table;
    return scan_residual<Scalar>(s.order(), [&](Element x, Element y) {
      return f(s(x, y)) + ctx.mu(y) * f(s(ctx.sigma(y), x))
             - Scalar(2) * f(y) * g(x);
    });
  }

  template <typename Scalar>
  ResidualReport<Scalar>
  residual_dalembert_variant(Function<Scalar> const&  g,
                             Structure<Scalar> const& ctx) {
    auto const& s = ctx.table;
    return scan_residual<Scalar>(s.order(), [&](Element x, Element y) {
      return g(s(x, y)) + ctx.mu(y) * g(s(ctx.sigma(y), x))
             - Scalar(2) * g(x) * g(y);
    });
  }

  template <typename Scalar>
  ResidualReport<Scalar> residual_mu_dalembert(Function<Scalar> const&  g,
                                               Structure<Scalar> const& ctx) {
    auto const& s = ctx.table;
    return scan_residual<Scalar>(s.order(), [&](Element x, Element y) {
      return g(s(x, y)) + ctx.mu(y) * g(s(x, ctx.sigma(y)))
             - Scalar(2) * g(x) * g(y);
    });
  }

  //! g = (m + m*)/2 for multiplicative m; throws
  //! PreconditionError("not-multiplicative") otherwise.
  template <typename Scalar>
  Function<Scalar> make_dalembert(Function<Scalar> const&  m,
                                  Structure<Scalar> const& ctx) {
    if (!is_multiplicative(ctx.table, m)) {
      throw PreconditionError("not-multiplicative",
                              "make_dalembert needs a multiplicative m");
    }
    return even_part(m, ctx);
  }

  struct SolutionPair {
    SFunc f;
    SFunc g;
  };

  //! f = lambda chi + delta chi*, g = (chi + chi*)/2.
  SolutionPair make_family2(SFunc const&             chi,
                            Cyclotomic const&        lambda,
                            Cyclotomic const&        delta,
                            StructureInstance const& ctx);

  //! f = chi (c + A) off the null ideal of chi and 0 on it, g = chi.
  //! `additive` is a full-length vector; its values on I_chi are ignored.
  //! Preconditions are checked in order and reported with distinct kinds:
  //! chi-zero, not-multiplicative, chi-not-star-invariant, additive-zero,
  //! not-additive, additive-not-odd.
  SolutionPair make_family3(SFunc const&             chi,
                            Cyclotomic const&        c,
                            SFunc const&             additive,
                            StructureInstance const& ctx);

  //! f = alpha (chi + chi*)/2, g = (chi + chi*)/2.
  SolutionPair make_eq2_family2(SFunc const&             chi,
                                Cyclotomic const&        alpha,
                                StructureInstance const& ctx);

  enum class FamilyTag { eq1_f1, eq1_f2, eq1_f3, eq2_f1, eq2_f2 };

  std::string to_string(FamilyTag tag);

  //! A symbolic solution family: the free parameters range over C (minus
  //! the excluded values recorded in `constraints`).
  struct SolutionFamily {
    FamilyTag                tag;
    std::optional<SFunc>     chi;
    std::optional<SFunc>     chi_star;
    std::vector<std::string> parameters;
    std::vector<std::string> constraints;
    std::vector<bool>        null_ideal;      // eq1_f3 only
    Matrix<Cyclotomic>       additive_basis;  // eq1_f3 only
  };

  //! Nonzero multiplicative functions up to chi ~ chi*, each represented by
  //! the lexicographically smaller of the two. Pairs are (chi, chi*).
  std::vector<std::pair<SFunc, SFunc>>
  canonical_characters(StructureInstance const& ctx,
                       std::vector<SFunc> const& multiplicative);

  std::vector<SolutionFamily> classify_eq1(StructureInstance const& ctx);
  std::vector<SolutionFamily> classify_eq2(StructureInstance const& ctx);

  //! For a solution (f, g) of (W1) and a in S, checks that
  //! f_a(x) = f(ax) - f(a) g(x) obeys the sine addition law
  //! f_a(xy) = f_a(x) g(y) + f_a(y) g(x). Throws
  //! PreconditionError("not-a-solution") when (f, g) does not solve (W1).
  ResidualReport<Cyclotomic> sine_addition_check(SFunc const&             f,
                                                 SFunc const&             g,
                                                 Element                  a,
                                                 StructureInstance const& ctx);

}  // namespace wilson

#endif  // WILSON_EQUATIONS_HPP_
