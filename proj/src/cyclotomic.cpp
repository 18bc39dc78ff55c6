#include "wilson/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "wilson/errors.hpp"
#include "wilson/linalg.hpp"

namespace wilson {

  namespace {
    using Poly = std::vector<std::int64_t>;

    // Exact quotient of `num` by the monic polynomial `den`.
    Poly divide_exact(Poly num, Poly const& den) {
      std::size_t const dn = den.size() - 1;
      Poly              quotient(num.size() - dn, 0);
      for (std::size_t i = num.size(); i-- > dn;) {
        std::int64_t const c    = num[i];
        quotient[i - dn]        = c;
        for (std::size_t j = 0; j <= dn; ++j) {
          num[i - dn + j] -= c * den[j];
        }
      }
      return quotient;
    }

    std::mutex& registry_mutex() {
      static std::mutex m;
      return m;
    }

    std::map<unsigned, std::unique_ptr<CyclotomicField>>& registry() {
      static std::map<unsigned, std::unique_ptr<CyclotomicField>> r;
      return r;
    }

    // The field both operands live in, promoting rationals.
    CyclotomicField const* common_field(CyclotomicField const* a,
                                        CyclotomicField const* b) {
      if (a == b || b->conductor() == 1) {
        return a;
      }
      if (a->conductor() == 1) {
        return b;
      }
      throw ConductorMismatch(a->conductor(), b->conductor());
    }

    Cyclotomic::Coeffs lift(Cyclotomic const& value,
                            CyclotomicField const& target) {
      if (&value.field() == &target) {
        return value.coeffs();
      }
      // value is rational here
      Cyclotomic::Coeffs out(target.degree());
      out[0] = value.coeffs()[0];
      return out;
    }
  }  // namespace

  unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        while (n % p == 0) {
          n /= p;
        }
        result -= result / p;
      }
    }
    if (n > 1) {
      result -= result / n;
    }
    return result;
  }

  std::vector<std::int64_t> cyclotomic_polynomial(unsigned n) {
    if (n == 0) {
      throw Error("cyclotomic polynomial of order 0 is undefined");
    }
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
      if (n % d == 0) {
        p = divide_exact(std::move(p), cyclotomic_polynomial(d));
      }
    }
    return p;
  }

  CyclotomicField::CyclotomicField(unsigned conductor)
      : conductor_(conductor),
        degree_(euler_phi(conductor)),
        modulus_(cyclotomic_polynomial(conductor)),
        powers_(static_cast<std::size_t>(conductor) * degree_, 0) {
    // Row e holds x^e mod Phi_n; x^(e+1) = x * x^e with one reduction step.
    std::vector<std::int64_t> current(degree_, 0);
    current[0] = 1;
    for (unsigned e = 0; e < conductor_; ++e) {
      std::copy(current.begin(),
                current.end(),
                powers_.begin() + static_cast<std::ptrdiff_t>(e) * degree_);
      std::int64_t const top = current[degree_ - 1];
      for (unsigned j = degree_ - 1; j > 0; --j) {
        current[j] = current[j - 1] - top * modulus_[j];
      }
      current[0] = -top * modulus_[0];
    }
  }

  CyclotomicField const& CyclotomicField::get(unsigned conductor) {
    if (conductor == 0) {
      throw Error("conductor must be positive");
    }
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto&                       slot = registry()[conductor];
    if (!slot) {
      slot.reset(new CyclotomicField(conductor));
    }
    return *slot;
  }

  Cyclotomic::Cyclotomic(CyclotomicField const& field, Rational const& value)
      : field_(&field), coeffs_(field.degree()) {
    coeffs_[0] = value;
  }

  Cyclotomic::Cyclotomic(CyclotomicField const& field, Coeffs coeffs)
      : field_(&field), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field.degree()) {
      throw Error("expected " + std::to_string(field.degree())
                  + " coefficients for conductor "
                  + std::to_string(field.conductor()) + ", got "
                  + std::to_string(coeffs_.size()));
    }
  }

  Cyclotomic root_of_unity(CyclotomicField const& field,
                           unsigned               n,
                           std::int64_t           k) {
    if (n == 0 || field.conductor() % n != 0) {
      throw ConductorMismatch(n, field.conductor());
    }
    std::int64_t const          N = field.conductor();
    std::int64_t                e = (k % static_cast<std::int64_t>(n) + n) % n;
    e *= N / static_cast<std::int64_t>(n);
    auto const          row = field.power(static_cast<std::uint64_t>(e));
    Cyclotomic::Coeffs  coeffs(row.begin(), row.end());
    return Cyclotomic(field, std::move(coeffs));
  }

  bool Cyclotomic::is_zero() const noexcept {
    for (auto const& c : coeffs_) {
      if (!c.is_zero()) {
        return false;
      }
    }
    return true;
  }

  bool Cyclotomic::is_rational() const noexcept {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (!coeffs_[i].is_zero()) {
        return false;
      }
    }
    return true;
  }

  bool Cyclotomic::is_one() const noexcept {
    return is_rational() && coeffs_[0].is_one();
  }

  Cyclotomic& Cyclotomic::operator+=(Cyclotomic const& other) {
    auto const* field = common_field(field_, &other.field());
    if (field != field_) {
      coeffs_ = lift(*this, *field);
      field_  = field;
    }
    if (&other.field() == field_) {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!other.coeffs_[i].is_zero()) {
          coeffs_[i] += other.coeffs_[i];
        }
      }
    } else {
      coeffs_[0] += other.coeffs_[0];
    }
    return *this;
  }

  Cyclotomic& Cyclotomic::operator-=(Cyclotomic const& other) {
    return *this += -other;
  }

  Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out(*this);
    for (auto& c : out.coeffs_) {
      if (!c.is_zero()) {
        c = -c;
      }
    }
    return out;
  }

  Cyclotomic& Cyclotomic::operator*=(Cyclotomic const& other) {
    auto const* field = common_field(field_, &other.field());
    if (other.is_rational()) {
      Rational const& s = other.coeffs_[0];
      if (field != field_) {
        coeffs_ = lift(*this, *field);
        field_  = field;
      }
      if (s.is_zero()) {
        for (auto& c : coeffs_) {
          c = Rational();
        }
      } else if (!s.is_one()) {
        for (auto& c : coeffs_) {
          if (!c.is_zero()) {
            c *= s;
          }
        }
      }
      return *this;
    }
    if (is_rational()) {
      Rational const s = coeffs_[0];
      Cyclotomic     out(other);
      out *= Cyclotomic(s);
      *this = std::move(out);
      return *this;
    }
    // Both genuinely in the same nontrivial field.
    unsigned const        d = field->degree();
    std::vector<Rational> product(2 * d - 1);
    for (unsigned i = 0; i < d; ++i) {
      if (coeffs_[i].is_zero()) {
        continue;
      }
      for (unsigned j = 0; j < d; ++j) {
        if (!other.coeffs_[j].is_zero()) {
          product[i + j] += coeffs_[i] * other.coeffs_[j];
        }
      }
    }
    Coeffs out(d);
    for (unsigned k = 0; k < d; ++k) {
      out[k] = std::move(product[k]);
    }
    for (unsigned k = d; k < 2 * d - 1; ++k) {
      if (product[k].is_zero()) {
        continue;
      }
      auto const row = field->power(k);
      for (unsigned j = 0; j < d; ++j) {
        if (row[j] != 0) {
          out[j] += product[k] * Rational(row[j]);
        }
      }
    }
    coeffs_ = std::move(out);
    return *this;
  }

  Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) {
      throw DivisionByZero();
    }
    if (is_rational()) {
      return Cyclotomic(*field_, coeffs_[0].inverse());
    }
    // Solve (multiplication by this) * c = 1 in the power basis.
    auto const       d = static_cast<Index>(field_->degree());
    Matrix<Rational> m(d, d);
    Cyclotomic       basis_vector(*field_, Rational(1));
    Cyclotomic const x = root_of_unity(*field_, field_->conductor(), 1);
    for (Index j = 0; j < d; ++j) {
      Cyclotomic const column = *this * basis_vector;
      for (Index i = 0; i < d; ++i) {
        m(i, j) = column.coeffs_[static_cast<std::size_t>(i)];
      }
      basis_vector *= x;
    }
    Vector<Rational> e(d);
    e.setConstant(Rational(0));
    e(0)          = Rational(1);
    auto solution = solve<Rational>(m, e);
    if (!solution) {
      throw Error("cyclotomic inverse: singular multiplication matrix");
    }
    Coeffs out(solution->begin(), solution->end());
    return Cyclotomic(*field_, std::move(out));
  }

  Cyclotomic& Cyclotomic::operator/=(Cyclotomic const& other) {
    common_field(field_, &other.field());
    return *this *= other.inverse();
  }

  Cyclotomic Cyclotomic::pow(std::int64_t exponent) const {
    Cyclotomic base = exponent < 0 ? inverse() : *this;
    auto       e    = static_cast<std::uint64_t>(exponent < 0 ? -exponent
                                                               : exponent);
    Cyclotomic result(*field_, Rational(1));
    while (e > 0) {
      if (e & 1U) {
        result *= base;
      }
      base *= base;
      e >>= 1U;
    }
    return result;
  }

  Cyclotomic Cyclotomic::conj() const {
    unsigned const n = field_->conductor();
    Coeffs         out(field_->degree());
    for (unsigned k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k].is_zero()) {
        continue;
      }
      auto const row = field_->power((n - k % n) % n);
      for (unsigned j = 0; j < out.size(); ++j) {
        if (row[j] != 0) {
          out[j] += coeffs_[k] * Rational(row[j]);
        }
      }
    }
    return Cyclotomic(*field_, std::move(out));
  }

  Cyclotomic Cyclotomic::embed(CyclotomicField const& target) const {
    if (&target == field_) {
      return *this;
    }
    if (is_rational()) {
      return Cyclotomic(target, coeffs_[0]);
    }
    unsigned const n = field_->conductor();
    if (target.conductor() % n != 0) {
      throw ConductorMismatch(n, target.conductor());
    }
    unsigned const step = target.conductor() / n;
    Coeffs         out(target.degree());
    for (unsigned k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k].is_zero()) {
        continue;
      }
      auto const row = target.power(static_cast<std::uint64_t>(k) * step);
      for (unsigned j = 0; j < out.size(); ++j) {
        if (row[j] != 0) {
          out[j] += coeffs_[k] * Rational(row[j]);
        }
      }
    }
    return Cyclotomic(target, std::move(out));
  }

  bool operator==(Cyclotomic const& lhs, Cyclotomic const& rhs) {
    if (lhs.field_ == rhs.field_) {
      return lhs.coeffs_ == rhs.coeffs_;
    }
    auto const* field = common_field(lhs.field_, rhs.field_);
    return lift(lhs, *field) == lift(rhs, *field);
  }

  std::strong_ordering operator<=>(Cyclotomic const& lhs,
                                   Cyclotomic const& rhs) {
    auto const* field = common_field(lhs.field_, rhs.field_);
    auto const  a     = lift(lhs, *field);
    auto const  b     = lift(rhs, *field);
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto const c = a[i] <=> b[i];
      if (c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool               first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      Rational const& c = coeffs_[k];
      if (c.is_zero()) {
        continue;
      }
      if (!first) {
        os << (c.sign() < 0 ? " - " : " + ");
      } else if (c.sign() < 0) {
        os << "-";
      }
      Rational const mag = c.sign() < 0 ? -c : c;
      if (k == 0) {
        os << mag;
      } else {
        if (!mag.is_one()) {
          os << mag << "*";
        }
        os << "z" << conductor();
        if (k > 1) {
          os << "^" << k;
        }
      }
      first = false;
    }
    if (first) {
      os << "0";
    }
    return os.str();
  }

  std::ostream& operator<<(std::ostream& os, Cyclotomic const& value) {
    return os << value.to_string();
  }

}  // namespace wilson
