#ifndef WILSON_CYCLOTOMIC_HPP_
#define WILSON_CYCLOTOMIC_HPP_

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include <Eigen/Core>

#include "wilson/rational.hpp"

namespace wilson {

  //! Coefficients (low degree first) of the n-th cyclotomic polynomial,
  //! obtained by dividing x^n - 1 by every lower-order cyclotomic
  //! polynomial of a proper divisor of n.
  std::vector<std::int64_t> cyclotomic_polynomial(unsigned n);

  unsigned euler_phi(unsigned n);

  //! Q(zeta_n) in the power basis 1, x, ..., x^(phi(n)-1) modulo Phi_n.
  //!
  //! Instances are interned and never destroyed, so a Cyclotomic can hold a
  //! plain pointer to its field and pointer equality is field equality.
  class CyclotomicField {
   public:
    //! Thread-safe; returns the same object for the same conductor.
    static CyclotomicField const& get(unsigned conductor);

    CyclotomicField(CyclotomicField const&)            = delete;
    CyclotomicField& operator=(CyclotomicField const&) = delete;

    unsigned conductor() const noexcept {
      return conductor_;
    }
    unsigned degree() const noexcept {
      return degree_;
    }
    std::vector<std::int64_t> const& modulus() const noexcept {
      return modulus_;
    }
    //! Reduced coordinates of x^e, for any e >= 0 (x^n = 1).
    std::span<std::int64_t const> power(std::uint64_t e) const noexcept {
      auto const r = static_cast<std::size_t>(e % conductor_);
      return {powers_.data() + r * degree_, degree_};
    }

   private:
    explicit CyclotomicField(unsigned conductor);

    unsigned                  conductor_;
    unsigned                  degree_;
    std::vector<std::int64_t> modulus_;
    std::vector<std::int64_t> powers_;  // conductor_ rows of degree_ entries
  };

  //! Exact element of a cyclotomic field.
  //!
  //! Conductor 1 is Q itself; such values combine with elements of any
  //! field. Otherwise both operands of a binary operation must share the
  //! conductor, or ConductorMismatch is thrown.
  class Cyclotomic {
   public:
    using Coeffs = boost::container::small_vector<Rational, 4>;

    Cyclotomic() : field_(&CyclotomicField::get(1)), coeffs_(1) {}

    template <std::integral I>
    Cyclotomic(I value)  // NOLINT(runtime/explicit)
        : Cyclotomic(Rational(value)) {}

    Cyclotomic(Rational value)  // NOLINT(runtime/explicit)
        : field_(&CyclotomicField::get(1)), coeffs_{std::move(value)} {}

    Cyclotomic(CyclotomicField const& field, Rational const& value);

    //! Throws Error unless coeffs has exactly field.degree() entries.
    Cyclotomic(CyclotomicField const& field, Coeffs coeffs);

    CyclotomicField const& field() const noexcept {
      return *field_;
    }
    unsigned conductor() const noexcept {
      return field_->conductor();
    }
    Coeffs const& coeffs() const noexcept {
      return coeffs_;
    }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    //! True iff the value lies in Q.
    bool is_rational() const noexcept;

    //! The image of this value under zeta -> zeta^(n-1).
    Cyclotomic conj() const;
    Cyclotomic inverse() const;
    Cyclotomic pow(std::int64_t exponent) const;

    //! Re-expresses the value in a field whose conductor is a multiple of
    //! this one.
    Cyclotomic embed(CyclotomicField const& target) const;

    Cyclotomic& operator+=(Cyclotomic const& other);
    Cyclotomic& operator-=(Cyclotomic const& other);
    Cyclotomic& operator*=(Cyclotomic const& other);
    Cyclotomic& operator/=(Cyclotomic const& other);

    friend Cyclotomic operator+(Cyclotomic lhs, Cyclotomic const& rhs) {
      return lhs += rhs;
    }
    friend Cyclotomic operator-(Cyclotomic lhs, Cyclotomic const& rhs) {
      return lhs -= rhs;
    }
    friend Cyclotomic operator*(Cyclotomic lhs, Cyclotomic const& rhs) {
      return lhs *= rhs;
    }
    friend Cyclotomic operator/(Cyclotomic lhs, Cyclotomic const& rhs) {
      return lhs /= rhs;
    }
    Cyclotomic operator-() const;

    friend bool operator==(Cyclotomic const& lhs, Cyclotomic const& rhs);
    //! Lexicographic order on power-basis coordinates; a total order used
    //! only for canonical choices, not a field order.
    friend std::strong_ordering operator<=>(Cyclotomic const& lhs,
                                            Cyclotomic const& rhs);

    std::string to_string() const;

   private:
    CyclotomicField const* field_;
    Coeffs                 coeffs_;
  };

  //! zeta_n^k inside `field`; n must divide the field's conductor.
  Cyclotomic root_of_unity(CyclotomicField const& field,
                           unsigned               n,
                           std::int64_t           k);

  inline bool is_zero(Cyclotomic const& value) noexcept {
    return value.is_zero();
  }

  std::ostream& operator<<(std::ostream& os, Cyclotomic const& value);

}  // namespace wilson

namespace Eigen {
  template <>
  struct NumTraits<wilson::Cyclotomic>
      : GenericNumTraits<wilson::Cyclotomic> {
    using Real       = wilson::Cyclotomic;
    using NonInteger = wilson::Cyclotomic;
    using Literal    = wilson::Cyclotomic;
    using Nested     = wilson::Cyclotomic;
    enum {
      IsComplex             = 0,
      IsInteger             = 0,
      IsSigned              = 1,
      RequireInitialization = 1,
      ReadCost              = 8,
      AddCost               = 32,
      MulCost               = 128
    };
    static inline Real epsilon() {
      return Real(0);
    }
    static inline Real dummy_precision() {
      return Real(0);
    }
    static inline int digits10() {
      return 0;
    }
  };
}  // namespace Eigen

#endif  // WILSON_CYCLOTOMIC_HPP_
