#include "wilson/rational.hpp"

#include <gmpxx.h>

#include <limits>
#include <ostream>

#include "wilson/errors.hpp"

namespace wilson {

  struct Rational::Big {
    mpq_class value;
  };

  namespace {
    using u128 = unsigned __int128;

    u128 magnitude(__int128 v) {
      return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    }

    u128 gcd(u128 a, u128 b) {
      while (b != 0) {
        u128 t = a % b;
        a      = b;
        b      = t;
      }
      return a;
    }

    constexpr __int128 kSmallMax = std::numeric_limits<std::int64_t>::max();

    bool fits(__int128 v) {
      return v <= kSmallMax && v >= -kSmallMax;
    }

    mpz_class to_mpz(__int128 v) {
      bool const negative = v < 0;
      u128       m        = magnitude(v);
      mpz_class  hi(static_cast<unsigned long>(m >> 64));
      mpz_class  lo(static_cast<unsigned long>(m & 0xFFFFFFFFFFFFFFFFULL));
      mpz_class  out = (hi << 64) + lo;
      return negative ? mpz_class(-out) : out;
    }

    bool mpz_fits_small(mpz_class const& z) {
      // |z| <= 2^63 - 1
      return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63;
    }

    std::int64_t mpz_to_small(mpz_class const& z) {
      // mpz_get_si is exact for long; long is 64-bit on supported platforms.
      static_assert(sizeof(long) == 8);
      return mpz_get_si(z.get_mpz_t());
    }
  }  // namespace

  Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
      throw DivisionByZero();
    }
    *this = from_wide(numerator, denominator);
  }

  Rational Rational::from_wide(__int128 num, __int128 den) {
    if (den == 0) {
      throw DivisionByZero();
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Rational out;
    if (num == 0) {
      return out;
    }
    u128 const g = gcd(magnitude(num), static_cast<u128>(den));
    if (g > 1) {
      num /= static_cast<__int128>(g);
      den /= static_cast<__int128>(g);
    }
    if (fits(num) && fits(den)) {
      out.num_ = static_cast<std::int64_t>(num);
      out.den_ = static_cast<std::int64_t>(den);
      return out;
    }
    Big big{mpq_class(to_mpz(num), to_mpz(den))};
    big.value.canonicalize();
    return from_big(big);
  }

  Rational Rational::from_big(Big const& value) {
    Rational out;
    mpz_class const& n = value.value.get_num();
    mpz_class const& d = value.value.get_den();
    if (mpz_fits_small(n) && mpz_fits_small(d)) {
      out.num_ = mpz_to_small(n);
      out.den_ = mpz_to_small(d);
      return out;
    }
    out.big_ = std::make_shared<Big const>(value);
    return out;
  }

  Rational::Big Rational::to_big() const {
    if (big_) {
      return *big_;
    }
    return Big{mpq_class(mpz_class(static_cast<long>(num_)),
                         mpz_class(static_cast<long>(den_)))};
  }

  Rational Rational::from_strings(std::string_view numerator,
                                  std::string_view denominator) {
    mpz_class n, d;
    if (n.set_str(std::string(numerator), 10) != 0
        || d.set_str(std::string(denominator), 10) != 0) {
      throw Error("malformed rational: \"" + std::string(numerator) + "/"
                  + std::string(denominator) + "\"");
    }
    if (d == 0) {
      throw DivisionByZero();
    }
    Big big{mpq_class(n, d)};
    big.value.canonicalize();
    return from_big(big);
  }

  Rational Rational::parse(std::string_view text) {
    auto const slash = text.find('/');
    if (slash == std::string_view::npos) {
      return from_strings(text);
    }
    return from_strings(text.substr(0, slash), text.substr(slash + 1));
  }

  std::string Rational::numerator_string() const {
    return big_ ? big_->value.get_num().get_str() : std::to_string(num_);
  }

  std::string Rational::denominator_string() const {
    return big_ ? big_->value.get_den().get_str() : std::to_string(den_);
  }

  std::string Rational::to_string() const {
    if (is_integer()) {
      return numerator_string();
    }
    return numerator_string() + "/" + denominator_string();
  }

  bool Rational::is_integer() const {
    return big_ ? big_->value.get_den() == 1 : den_ == 1;
  }

  int Rational::sign() const {
    if (big_) {
      return sgn(big_->value);
    }
    return (num_ > 0) - (num_ < 0);
  }

  Rational Rational::inverse() const {
    if (is_zero()) {
      throw DivisionByZero();
    }
    if (!big_) {
      return from_wide(den_, num_);
    }
    Big big{1 / big_->value};
    return from_big(big);
  }

  Rational& Rational::operator+=(Rational const& other) {
    if (!big_ && !other.big_) {
      if (den_ == 1 && other.den_ == 1) {
        *this = from_wide(static_cast<__int128>(num_) + other.num_, 1);
        return *this;
      }
      __int128 const n = static_cast<__int128>(num_) * other.den_
                         + static_cast<__int128>(other.num_) * den_;
      __int128 const d = static_cast<__int128>(den_) * other.den_;
      *this            = from_wide(n, d);
      return *this;
    }
    *this = from_big(Big{to_big().value + other.to_big().value});
    return *this;
  }

  Rational& Rational::operator-=(Rational const& other) {
    return *this += -other;
  }

  Rational& Rational::operator*=(Rational const& other) {
    if (!big_ && !other.big_) {
      if (num_ == 0 || other.num_ == 0) {
        *this = Rational();
        return *this;
      }
      *this = from_wide(static_cast<__int128>(num_) * other.num_,
                        static_cast<__int128>(den_) * other.den_);
      return *this;
    }
    *this = from_big(Big{to_big().value * other.to_big().value});
    return *this;
  }

  Rational& Rational::operator/=(Rational const& other) {
    if (other.is_zero()) {
      throw DivisionByZero();
    }
    if (!big_ && !other.big_) {
      *this = from_wide(static_cast<__int128>(num_) * other.den_,
                        static_cast<__int128>(den_) * other.num_);
      return *this;
    }
    *this = from_big(Big{to_big().value / other.to_big().value});
    return *this;
  }

  Rational Rational::operator-() const {
    if (!big_) {
      Rational out;
      out.num_ = -num_;
      out.den_ = den_;
      return out;
    }
    return from_big(Big{-big_->value});
  }

  bool operator==(Rational const& lhs, Rational const& rhs) {
    if (!lhs.big_ && !rhs.big_) {
      return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    if (lhs.big_ && rhs.big_) {
      return lhs.big_->value == rhs.big_->value;
    }
    return false;
  }

  std::strong_ordering operator<=>(Rational const& lhs, Rational const& rhs) {
    if (!lhs.big_ && !rhs.big_) {
      __int128 const a = static_cast<__int128>(lhs.num_) * rhs.den_;
      __int128 const b = static_cast<__int128>(rhs.num_) * lhs.den_;
      return a <=> b;
    }
    int const c = cmp(lhs.to_big().value, rhs.to_big().value);
    return c <=> 0;
  }

  std::size_t Rational::hash() const {
    if (big_) {
      return std::hash<std::string>{}(to_string());
    }
    std::size_t h = std::hash<std::int64_t>{}(num_);
    h ^= std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6)
         + (h >> 2);
    return h;
  }

  std::ostream& operator<<(std::ostream& os, Rational const& value) {
    return os << value.to_string();
  }

}  // namespace wilson
