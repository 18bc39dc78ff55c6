#ifndef WILSON_FUNCTION_SPACE_HPP_
#define WILSON_FUNCTION_SPACE_HPP_

// Functions S -> C on a finite semigroup, stored as dense Eigen vectors
// indexed by element. The algebraic operations are templated on the scalar
// so they run over Rational as well as Cyclotomic; the enumerations produce
// Cyclotomic values in the semigroup's session field.

#include <cstddef>
#include <string>
#include <vector>

#include "wilson/cyclotomic.hpp"
#include "wilson/errors.hpp"
#include "wilson/linalg.hpp"
#include "wilson/semigroup.hpp"

namespace wilson {

  template <typename Scalar>
  using Function = Vector<Scalar>;

  using SFunc = Function<Cyclotomic>;

  //! A semigroup with an involutive automorphism sigma and a weight mu.
  template <typename Scalar>
  struct Structure {
    CayleyTable      table;
    Involution       sigma;
    Function<Scalar> mu;

    std::size_t order() const noexcept {
      return table.order();
    }
  };

  using StructureInstance = Structure<Cyclotomic>;

  //! Checks square generation, that sigma is an involutive automorphism, and
  //! that mu is multiplicative, nowhere zero with mu(x sigma(x)) = 1.
  //! Throws BlanketAssumptionViolated naming the first failed condition.
  template <typename Scalar>
  Structure<Scalar> const& validate_structure(Structure<Scalar> const& ctx);

  template <typename Scalar>
  Function<Scalar> constant_function(std::size_t order, Scalar const& value) {
    Function<Scalar> out(static_cast<Index>(order));
    out.setConstant(value);
    return out;
  }

  template <typename Scalar>
  Function<Scalar> zero_function(std::size_t order) {
    return constant_function(order, Scalar(0));
  }

  //! F*(x) = mu(x) F(sigma(x)).
  template <typename Scalar>
  Function<Scalar> star(Function<Scalar> const&  f,
                        Structure<Scalar> const& ctx) {
    Function<Scalar> out(f.size());
    for (Index x = 0; x < f.size(); ++x) {
      out(x) = ctx.mu(x) * f(ctx.sigma(static_cast<Element>(x)));
    }
    return out;
  }

  template <typename Scalar>
  Function<Scalar> even_part(Function<Scalar> const&  f,
                             Structure<Scalar> const& ctx) {
    return (f + star(f, ctx)) / Scalar(2);
  }

  template <typename Scalar>
  Function<Scalar> odd_part(Function<Scalar> const&  f,
                            Structure<Scalar> const& ctx) {
    return (f - star(f, ctx)) / Scalar(2);
  }

  template <typename Scalar>
  bool is_multiplicative(CayleyTable const& s, Function<Scalar> const& f) {
    auto const n = static_cast<Element>(s.order());
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!(f(s(x, y)) == f(x) * f(y))) {
          return false;
        }
      }
    }
    return true;
  }

  //! Additivity over the members of `domain` (all of S when empty).
  template <typename Scalar>
  bool is_additive(CayleyTable const&       s,
                   Function<Scalar> const&  f,
                   std::vector<bool> const& domain = {}) {
    auto const n = static_cast<Element>(s.order());
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!domain.empty() && !(domain[x] && domain[y])) {
          continue;
        }
        if (!(f(s(x, y)) == f(x) + f(y))) {
          return false;
        }
      }
    }
    return true;
  }

  template <typename Scalar>
  bool is_central(CayleyTable const& s, Function<Scalar> const& f) {
    auto const n = static_cast<Element>(s.order());
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (!(f(s(x, y)) == f(s(y, x)))) {
          return false;
        }
      }
    }
    return true;
  }

  template <typename Scalar>
  bool is_even(Function<Scalar> const& f, Structure<Scalar> const& ctx) {
    return exactly_equal(star(f, ctx), f);
  }

  //! Every multiplicative function S -> C, zero function first.
  //!
  //! A value chi(x) satisfies chi(x)^i = chi(x)^(i+p) for the monogenic data
  //! (i, p) of x, so it is 0 or a p-th root of unity; the search assigns
  //! values from that finite set element by element and prunes on the
  //! Cayley table. The field's conductor must be a multiple of the period
  //! lcm.
  std::vector<SFunc> enumerate_multiplicative(CayleyTable const&     s,
                                              CyclotomicField const& field);

  struct MuWitness {
    SFunc      func;
    Involution sigma;
  };

  //! All admissible weights for (S, sigma); constant 1 is always present.
  std::vector<MuWitness> enumerate_mu(CayleyTable const&     s,
                                      Involution const&      sigma,
                                      CyclotomicField const& field);

  //! Basis (as columns of length |S|, zero off the subset) of the additive
  //! functions on a subsemigroup given as a membership mask. Throws
  //! PreconditionError when the subset is not closed.
  Matrix<Cyclotomic> additive_space(CayleyTable const&       s,
                                    std::vector<bool> const& subset);

  //! Additive functions on the subset that also satisfy A o sigma = -A;
  //! the subset must be sigma-stable.
  Matrix<Cyclotomic> odd_additive_space(CayleyTable const&       s,
                                        std::vector<bool> const& subset,
                                        Involution const&        sigma);

  //! I_chi := chi^{-1}(0). Reports record this definition alongside
  //! serialized families.
  struct NullIdeal {
    std::vector<bool> members;

    std::vector<bool> complement() const {
      std::vector<bool> out(members.size());
      for (std::size_t i = 0; i < members.size(); ++i) {
        out[i] = !members[i];
      }
      return out;
    }
  };

  inline constexpr char const* kNullIdealDefinition = "I_chi := chi^{-1}(0)";

  //! Throws PreconditionError("not-multiplicative") for non-multiplicative
  //! chi; checks the two-sided ideal and closed-complement properties.
  NullIdeal null_ideal(SFunc const& chi, CayleyTable const& s);

  //! Convenience: the blanket-assumption instance (S, sigma, mu) in the
  //! session field of S. Defaults: sigma = id, mu = 1.
  StructureInstance make_instance(CayleyTable const& s);
  StructureInstance make_instance(CayleyTable const& s, Involution sigma);
  StructureInstance make_instance(CayleyTable const& s,
                                  Involution         sigma,
                                  SFunc              mu);

  //! Lexicographic order on functions (elementwise Cyclotomic order).
  bool function_less(SFunc const& lhs, SFunc const& rhs);

  // ---- template definitions ----

  template <typename Scalar>
  Structure<Scalar> const& validate_structure(Structure<Scalar> const& ctx) {
    auto const& s = ctx.table;
    auto const  n = static_cast<Element>(s.order());
    if (!is_square_generated(s)) {
      throw BlanketAssumptionViolated("S is not generated by its squares");
    }
    if (!is_involutive_automorphism(s, ctx.sigma.perm)) {
      throw BlanketAssumptionViolated(
          "sigma is not an involutive automorphism");
    }
    if (ctx.mu.size() != static_cast<Index>(n)) {
      throw BlanketAssumptionViolated("mu has the wrong length");
    }
    for (Element x = 0; x < n; ++x) {
      if (is_zero(ctx.mu(x))) {
        throw BlanketAssumptionViolated("mu vanishes at element "
                                        + std::to_string(x));
      }
    }
    if (!is_multiplicative(s, ctx.mu)) {
      throw BlanketAssumptionViolated("mu is not multiplicative");
    }
    for (Element x = 0; x < n; ++x) {
      if (!(ctx.mu(s(x, ctx.sigma(x))) == Scalar(1))) {
        throw BlanketAssumptionViolated("mu(x sigma(x)) != 1 at element "
                                        + std::to_string(x));
      }
    }
    return ctx;
  }

}  // namespace wilson

#endif  // WILSON_FUNCTION_SPACE_HPP_
