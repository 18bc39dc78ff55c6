#ifndef WILSON_RATIONAL_HPP_
#define WILSON_RATIONAL_HPP_

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace wilson {

  //! Arbitrary precision rational number, always stored in lowest terms
  //! with a positive denominator.
  //!
  //! Values whose numerator and denominator fit in 64 bits are kept inline
  //! and combined with 128-bit intermediates; anything larger spills to a
  //! shared, immutable GMP rational. The two representations never overlap,
  //! so equality is a plain field comparison.
  class Rational {
   public:
    Rational() = default;

    template <std::integral I>
    Rational(I value)  // NOLINT(runtime/explicit)
        : Rational(static_cast<std::int64_t>(value), std::int64_t{1}) {}

    Rational(std::int64_t numerator, std::int64_t denominator);

    //! Parses decimal integers, e.g. from_strings("-12", "7").
    static Rational from_strings(std::string_view numerator,
                                 std::string_view denominator = "1");
    //! Parses "a", "a/b" or a JSON-style decimal integer string.
    static Rational parse(std::string_view text);

    std::string numerator_string() const;
    std::string denominator_string() const;
    std::string to_string() const;

    bool is_zero() const noexcept {
      return big_ == nullptr && num_ == 0;
    }
    bool is_one() const noexcept {
      return big_ == nullptr && num_ == 1 && den_ == 1;
    }
    bool is_integer() const;
    int  sign() const;
    bool is_small() const noexcept {
      return big_ == nullptr;
    }
    Rational inverse() const;

    Rational& operator+=(Rational const& other);
    Rational& operator-=(Rational const& other);
    Rational& operator*=(Rational const& other);
    Rational& operator/=(Rational const& other);

    friend Rational operator+(Rational lhs, Rational const& rhs) {
      return lhs += rhs;
    }
    friend Rational operator-(Rational lhs, Rational const& rhs) {
      return lhs -= rhs;
    }
    friend Rational operator*(Rational lhs, Rational const& rhs) {
      return lhs *= rhs;
    }
    friend Rational operator/(Rational lhs, Rational const& rhs) {
      return lhs /= rhs;
    }
    Rational operator-() const;

    friend bool operator==(Rational const& lhs, Rational const& rhs);
    friend std::strong_ordering operator<=>(Rational const& lhs,
                                            Rational const& rhs);

    std::size_t hash() const;

   private:
    struct Big;
    static Rational from_wide(__int128 num, __int128 den);
    static Rational from_big(Big const& value);
    Big             to_big() const;

    std::int64_t               num_ = 0;
    std::int64_t               den_ = 1;
    std::shared_ptr<Big const> big_;
  };

  std::ostream& operator<<(std::ostream& os, Rational const& value);

  inline bool is_zero(Rational const& value) noexcept {
    return value.is_zero();
  }

}  // namespace wilson

template <>
struct std::hash<wilson::Rational> {
  std::size_t operator()(wilson::Rational const& value) const {
    return value.hash();
  }
};

namespace Eigen {
  template <>
  struct NumTraits<wilson::Rational> : GenericNumTraits<wilson::Rational> {
    using Real       = wilson::Rational;
    using NonInteger = wilson::Rational;
    using Literal    = wilson::Rational;
    using Nested     = wilson::Rational;
    enum {
      IsComplex             = 0,
      IsInteger             = 0,
      IsSigned              = 1,
      RequireInitialization = 1,
      ReadCost              = 2,
      AddCost               = 8,
      MulCost               = 8
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

#endif  // WILSON_RATIONAL_HPP_
