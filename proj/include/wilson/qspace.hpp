#ifndef WILSON_QSPACE_HPP_
#define WILSON_QSPACE_HPP_

// Symbolic backend over S = (Q^d, +) with an integer involutive matrix
// sigma. Multiplicative functions are exp of linear forms, additive
// functions are linear forms, and function values are exponential
// polynomials with affine coefficients, compared exactly after
// normalization.
//
// Every x in Q^d is x/2 + x/2, i.e. a square, so S is generated by its
// squares.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wilson/rational.hpp"

namespace wilson::qspace {

  //! a + b i with a, b rational.
  class GaussianRational {
   public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
    template <typename Int, typename = std::enable_if_t<std::is_integral_v<Int>>>
    GaussianRational(Int re) : re_(re) {}  // NOLINT
    GaussianRational(Rational re, Rational im)
        : re_(std::move(re)), im_(std::move(im)) {}

    Rational const& re() const noexcept {
      return re_;
    }
    Rational const& im() const noexcept {
      return im_;
    }
    bool is_zero() const noexcept {
      return re_.is_zero() && im_.is_zero();
    }

    GaussianRational operator-() const;
    GaussianRational& operator+=(GaussianRational const& other);
    GaussianRational& operator-=(GaussianRational const& other);
    GaussianRational& operator*=(GaussianRational const& other);

    friend GaussianRational operator+(GaussianRational a, GaussianRational const& b) {
      return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, GaussianRational const& b) {
      return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, GaussianRational const& b) {
      return a *= b;
    }
    friend bool operator==(GaussianRational const&, GaussianRational const&)
        = default;
    friend std::strong_ordering operator<=>(GaussianRational const& a,
                                            GaussianRational const& b);

    std::string to_string() const;

   private:
    Rational re_;
    Rational im_;
  };

  //! plain + pi * (i pi), a formal module element; 1 and i pi are treated as
  //! independent.
  struct ExpCoeff {
    GaussianRational plain;
    GaussianRational pi;

    bool is_zero() const noexcept {
      return plain.is_zero() && pi.is_zero();
    }
    ExpCoeff operator-() const {
      return {-plain, -pi};
    }
    ExpCoeff& operator+=(ExpCoeff const& other);
    ExpCoeff& operator-=(ExpCoeff const& other);
    ExpCoeff& operator*=(Rational const& scale);

    friend ExpCoeff operator+(ExpCoeff a, ExpCoeff const& b) {
      return a += b;
    }
    friend ExpCoeff operator-(ExpCoeff a, ExpCoeff const& b) {
      return a -= b;
    }
    friend bool operator==(ExpCoeff const&, ExpCoeff const&) = default;
    friend std::strong_ordering operator<=>(ExpCoeff const& a, ExpCoeff const& b);

    std::string to_string() const;
  };

  //! An integer matrix acting on coordinate vectors; rows() x cols().
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }
    std::int64_t& operator()(std::size_t r, std::size_t c) {
      return data_[r * cols_ + c];
    }
    std::int64_t operator()(std::size_t r, std::size_t c) const {
      return data_[r * cols_ + c];
    }

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
    friend bool      operator==(IntMatrix const&, IntMatrix const&) = default;

   private:
    std::size_t               rows_ = 0;
    std::size_t               cols_ = 0;
    std::vector<std::int64_t> data_;
  };

  //! A linear form v -> sum coeffs[j] v_j.
  struct LinForm {
    std::vector<ExpCoeff> coeffs;

    LinForm() = default;
    explicit LinForm(std::size_t vars) : coeffs(vars) {}
    explicit LinForm(std::vector<ExpCoeff> c) : coeffs(std::move(c)) {}

    std::size_t vars() const noexcept {
      return coeffs.size();
    }
    bool is_zero() const noexcept;

    LinForm& operator+=(LinForm const& other);
    LinForm& operator-=(LinForm const& other);
    friend LinForm operator+(LinForm a, LinForm const& b) {
      return a += b;
    }
    friend LinForm operator-(LinForm a, LinForm const& b) {
      return a -= b;
    }
    LinForm operator-() const;

    //! The form v -> this(m v), with m of shape vars() x k.
    LinForm compose(IntMatrix const& m) const;

    friend bool operator==(LinForm const&, LinForm const&) = default;
    friend std::strong_ordering operator<=>(LinForm const& a, LinForm const& b);
  };

  //! Builds a LinForm with plain rational coefficients.
  LinForm rational_form(std::vector<Rational> const& coeffs);

  //! constant + sum linear[j] v_j, Gaussian-rational coefficients.
  struct AffineForm {
    GaussianRational              constant;
    std::vector<GaussianRational> linear;

    AffineForm() = default;
    explicit AffineForm(std::size_t vars) : linear(vars) {}
    AffineForm(GaussianRational c, std::vector<GaussianRational> l)
        : constant(std::move(c)), linear(std::move(l)) {}

    std::size_t vars() const noexcept {
      return linear.size();
    }
    bool is_zero() const noexcept;
    bool is_constant() const noexcept;

    AffineForm& operator+=(AffineForm const& other);
    AffineForm operator-() const;

    //! Throws Error when both factors have degree 1.
    friend AffineForm operator*(AffineForm const& a, AffineForm const& b);

    AffineForm compose(IntMatrix const& m) const;

    friend bool operator==(AffineForm const&, AffineForm const&) = default;
  };

  struct ExpTerm {
    AffineForm affine;
    LinForm    exponent;

    friend bool operator==(ExpTerm const&, ExpTerm const&) = default;
  };

  //! sum_k affine_k(v) exp(exponent_k(v)) over vars() variables.
  //! Normal form: exponents sorted and pairwise distinct, no zero affine
  //! part. Distinct exponential monomials are linearly independent, so two
  //! ExpPolys are equal as functions iff their normal forms coincide.
  class ExpPoly {
   public:
    explicit ExpPoly(std::size_t vars = 0) : vars_(vars) {}
    //! Keeps `terms` as given; call normalized() for the normal form.
    ExpPoly(std::size_t vars, std::vector<ExpTerm> terms);

    static ExpPoly constant(std::size_t vars, GaussianRational const& c);
    static ExpPoly exponential(LinForm exponent);

    std::size_t vars() const noexcept {
      return vars_;
    }
    std::vector<ExpTerm> const& terms() const noexcept {
      return terms_;
    }
    bool is_normalized() const;
    //! True iff the normal form is empty.
    bool    is_zero() const;
    ExpPoly normalized() const;

    ExpPoly& operator+=(ExpPoly const& other);
    ExpPoly& operator-=(ExpPoly const& other);
    ExpPoly& operator*=(ExpPoly const& other);
    ExpPoly  operator-() const;

    friend ExpPoly operator+(ExpPoly a, ExpPoly const& b) {
      return a += b;
    }
    friend ExpPoly operator-(ExpPoly a, ExpPoly const& b) {
      return a -= b;
    }
    friend ExpPoly operator*(ExpPoly a, ExpPoly const& b) {
      return a *= b;
    }
    friend ExpPoly operator*(GaussianRational const& c, ExpPoly p);

    //! v -> this(m v); m has shape vars() x k.
    ExpPoly compose(IntMatrix const& m) const;

    //! Equality of normal forms.
    friend bool operator==(ExpPoly const& a, ExpPoly const& b);

    std::string to_string(std::vector<std::string> const& names = {}) const;

   private:
    std::size_t          vars_;
    std::vector<ExpTerm> terms_;
  };

  //! (Q^d, +) with sigma an integer matrix, sigma^2 = I.
  class QVecSemigroup {
   public:
    //! Throws PreconditionError("sigma-not-involutive") or ("bad-shape").
    QVecSemigroup(std::size_t d, IntMatrix sigma);

    std::size_t dim() const noexcept {
      return d_;
    }
    IntMatrix const& sigma() const noexcept {
      return sigma_;
    }
    //! Every x equals x/2 + x/2.
    static constexpr bool square_generated = true;

   private:
    std::size_t d_;
    IntMatrix   sigma_;
  };

  //! Basis of the rational forms a with a o sigma = -a (resp. +a).
  std::vector<std::vector<Rational>> odd_forms(QVecSemigroup const& ctx);
  std::vector<std::vector<Rational>> even_forms(QVecSemigroup const& ctx);

  //! chi = exp(l).
  ExpPoly make_char(LinForm const& l, QVecSemigroup const& ctx);

  //! mu = exp(l) after checking l o (I + sigma) = 0; the violation is
  //! reported as PreconditionError("mu-constraint") naming the form.
  ExpPoly make_mu(LinForm const& l, QVecSemigroup const& ctx);

  struct OddAdditive {
    LinForm form;
    bool    zero = false;  // valid, but family (3) needs A != 0
  };
  //! Checks a o sigma = -a; PreconditionError("additive-not-odd") otherwise.
  //! A must have no i pi part ("additive-not-affine").
  OddAdditive make_additive_odd(LinForm const& a, QVecSemigroup const& ctx);

  //! Exponent of a one-term character exp(l); throws when p is not one.
  LinForm character_exponent(ExpPoly const& p);

  //! star(chi) = mu * chi o sigma, for characters.
  ExpPoly star_char(ExpPoly const& chi,
                    ExpPoly const& mu,
                    QVecSemigroup const& ctx);

  //! Residual f(x+y) + mu(y) f(sigma(y) + x) - 2 f(x) g(y) of f = chi (c + A),
  //! g = chi, over the 2d variables (x, y). Throws
  //! PreconditionError("chi-not-star-invariant") when chi != chi*.
  ExpPoly residual_eq1_symbolic(ExpPoly const&          chi,
                                ExpPoly const&          mu,
                                LinForm const&          additive,
                                GaussianRational const& c,
                                QVecSemigroup const&    ctx);

  //! Variable names x1..xd, y1..yd.
  std::vector<std::string> residual_names(std::size_t d);

  struct Draw {
    std::size_t      d = 0;
    IntMatrix        sigma;
    LinForm          chi_exponent;
    LinForm          additive;
    GaussianRational c;
    std::uint64_t    seed = 0;
  };

  struct DrawResult {
    Draw                   draw;
    LinForm                mu_exponent;
    bool                   family_empty = false;  // no nonzero odd A exists
    ExpPoly                residual;
    bool                   residual_zero = false;
    std::optional<LinForm> twin_additive;  // A + (nonzero even form)
    std::optional<ExpPoly> twin_residual;
    bool                   twin_nonzero = false;

    bool pass() const noexcept {
      return family_empty
             || (residual_zero && (!twin_additive.has_value() || twin_nonzero));
    }
  };

  //! mu = exp(l_chi - l_chi o sigma), validated, then residual and twin.
  //! Precondition failures on the draw propagate as PreconditionError.
  DrawResult verify_draw(Draw const& draw);

  //! Seeded random draw: signed-permutation sigma != +-I, random chi
  //! exponent with optional i pi parts, nonzero odd A, random c.
  Draw random_draw(std::size_t d, std::uint64_t seed);

  struct GridSpec {
    std::size_t d;
    std::size_t draws;
  };

  struct GridReport {
    std::uint64_t           seed = 0;
    std::vector<DrawResult> results;
    std::size_t             zero_residuals  = 0;
    std::size_t             nonzero_twins   = 0;

    bool pass() const noexcept;
  };

  //! Defaults to 10 draws in d = 2 and 5 in d = 3.
  GridReport verify_family3_grid(std::vector<GridSpec> const& grid
                                 = {{2, 10}, {3, 5}},
                                 std::uint64_t seed = 0);

}  // namespace wilson::qspace

#endif  // WILSON_QSPACE_HPP_
