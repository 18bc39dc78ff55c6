#include "wilson/qspace.hpp"

#include <algorithm>
#include <random>

#include "wilson/errors.hpp"
#include "wilson/linalg.hpp"
#include "wilson/seed.hpp"

namespace wilson::qspace {

  // ---- GaussianRational ----

  GaussianRational GaussianRational::operator-() const {
    return {-re_, -im_};
  }

  GaussianRational& GaussianRational::operator+=(GaussianRational const& other) {
    re_ += other.re_;
    im_ += other.im_;
    return *this;
  }

  GaussianRational& GaussianRational::operator-=(GaussianRational const& other) {
    re_ -= other.re_;
    im_ -= other.im_;
    return *this;
  }

  GaussianRational& GaussianRational::operator*=(GaussianRational const& other) {
    Rational re = re_ * other.re_ - im_ * other.im_;
    Rational im = re_ * other.im_ + im_ * other.re_;
    re_         = std::move(re);
    im_         = std::move(im);
    return *this;
  }

  std::strong_ordering operator<=>(GaussianRational const& a,
                                   GaussianRational const& b) {
    if (auto c = a.re_ <=> b.re_; c != 0) {
      return c;
    }
    return a.im_ <=> b.im_;
  }

  std::string GaussianRational::to_string() const {
    if (im_.is_zero()) {
      return re_.to_string();
    }
    std::string im = im_.is_one()       ? "i"
                     : (-im_).is_one() ? "-i"
                                       : im_.to_string() + "i";
    if (re_.is_zero()) {
      return im;
    }
    std::string const sep = im_.sign() < 0 ? "" : "+";
    return "(" + re_.to_string() + sep + im + ")";
  }

  // ---- ExpCoeff ----

  ExpCoeff& ExpCoeff::operator+=(ExpCoeff const& other) {
    plain += other.plain;
    pi += other.pi;
    return *this;
  }

  ExpCoeff& ExpCoeff::operator-=(ExpCoeff const& other) {
    plain -= other.plain;
    pi -= other.pi;
    return *this;
  }

  ExpCoeff& ExpCoeff::operator*=(Rational const& scale) {
    plain *= GaussianRational(scale);
    pi *= GaussianRational(scale);
    return *this;
  }

  std::strong_ordering operator<=>(ExpCoeff const& a, ExpCoeff const& b) {
    if (auto c = a.plain <=> b.plain; c != 0) {
      return c;
    }
    return a.pi <=> b.pi;
  }

  std::string ExpCoeff::to_string() const {
    if (pi.is_zero()) {
      return plain.to_string();
    }
    std::string const p = pi.to_string() + "*i*pi";
    if (plain.is_zero()) {
      return p;
    }
    return "(" + plain.to_string() + " + " + p + ")";
  }

  // ---- IntMatrix ----

  IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  IntMatrix::IntMatrix(
      std::initializer_list<std::initializer_list<std::int64_t>> rows)
      : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    for (auto const& row : rows) {
      if (row.size() != cols_) {
        throw Error("ragged IntMatrix initializer");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw Error("IntMatrix shape mismatch");
    }
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
          out(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return out;
  }

  // ---- LinForm ----

  bool LinForm::is_zero() const noexcept {
    return std::all_of(
        coeffs.begin(), coeffs.end(), [](ExpCoeff const& c) { return c.is_zero(); });
  }

  LinForm& LinForm::operator+=(LinForm const& other) {
    if (other.vars() != vars()) {
      throw Error("LinForm variable count mismatch");
    }
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      coeffs[j] += other.coeffs[j];
    }
    return *this;
  }

  LinForm& LinForm::operator-=(LinForm const& other) {
    return *this += -other;
  }

  LinForm LinForm::operator-() const {
    LinForm out(*this);
    for (auto& c : out.coeffs) {
      c = -c;
    }
    return out;
  }

  LinForm LinForm::compose(IntMatrix const& m) const {
    if (m.rows() != vars()) {
      throw Error("LinForm::compose shape mismatch");
    }
    LinForm out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j) != 0) {
          ExpCoeff term = coeffs[i];
          term *= Rational(m(i, j));
          out.coeffs[j] += term;
        }
      }
    }
    return out;
  }

  std::strong_ordering operator<=>(LinForm const& a, LinForm const& b) {
    return std::lexicographical_compare_three_way(
        a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(), b.coeffs.end());
  }

  LinForm rational_form(std::vector<Rational> const& coeffs) {
    LinForm out(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      out.coeffs[j].plain = GaussianRational(coeffs[j]);
    }
    return out;
  }

  namespace {
    std::string var_name(std::vector<std::string> const& names, std::size_t j) {
      return j < names.size() ? names[j] : "v" + std::to_string(j + 1);
    }

    std::string form_string(LinForm const&                  form,
                            std::vector<std::string> const& names = {}) {
      std::string out;
      for (std::size_t j = 0; j < form.vars(); ++j) {
        if (form.coeffs[j].is_zero()) {
          continue;
        }
        if (!out.empty()) {
          out += " + ";
        }
        out += form.coeffs[j].to_string() + "*" + var_name(names, j);
      }
      return out.empty() ? "0" : out;
    }
  }  // namespace

  // ---- AffineForm ----

  bool AffineForm::is_zero() const noexcept {
    return constant.is_zero() && is_constant();
  }

  bool AffineForm::is_constant() const noexcept {
    return std::all_of(linear.begin(), linear.end(), [](GaussianRational const& c) {
      return c.is_zero();
    });
  }

  AffineForm& AffineForm::operator+=(AffineForm const& other) {
    if (other.vars() != vars()) {
      throw Error("AffineForm variable count mismatch");
    }
    constant += other.constant;
    for (std::size_t j = 0; j < linear.size(); ++j) {
      linear[j] += other.linear[j];
    }
    return *this;
  }

  AffineForm AffineForm::operator-() const {
    AffineForm out(*this);
    out.constant = -out.constant;
    for (auto& c : out.linear) {
      c = -c;
    }
    return out;
  }

  AffineForm operator*(AffineForm const& a, AffineForm const& b) {
    if (a.vars() != b.vars()) {
      throw Error("AffineForm variable count mismatch");
    }
    if (!a.is_constant() && !b.is_constant()) {
      throw Error("affine product of degree 2: polynomial parts are limited to "
                  "degree 1");
    }
    AffineForm const& scalar = a.is_constant() ? a : b;
    AffineForm        out    = a.is_constant() ? b : a;
    out.constant *= scalar.constant;
    for (auto& c : out.linear) {
      c *= scalar.constant;
    }
    return out;
  }

  AffineForm AffineForm::compose(IntMatrix const& m) const {
    if (m.rows() != vars()) {
      throw Error("AffineForm::compose shape mismatch");
    }
    AffineForm out(m.cols());
    out.constant = constant;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j) != 0) {
          out.linear[j] += linear[i] * GaussianRational(m(i, j));
        }
      }
    }
    return out;
  }

  // ---- ExpPoly ----

  ExpPoly::ExpPoly(std::size_t vars, std::vector<ExpTerm> terms)
      : vars_(vars), terms_(std::move(terms)) {
    for (auto const& t : terms_) {
      if (t.affine.vars() != vars_ || t.exponent.vars() != vars_) {
        throw Error("ExpTerm variable count does not match the ExpPoly");
      }
    }
  }

  ExpPoly ExpPoly::constant(std::size_t vars, GaussianRational const& c) {
    return ExpPoly(vars,
                   {ExpTerm{AffineForm(c, std::vector<GaussianRational>(vars)),
                            LinForm(vars)}})
        .normalized();
  }

  ExpPoly ExpPoly::exponential(LinForm exponent) {
    auto const vars = exponent.vars();
    return ExpPoly(vars,
                   {ExpTerm{AffineForm(GaussianRational(1),
                                       std::vector<GaussianRational>(vars)),
                            std::move(exponent)}});
  }

  ExpPoly ExpPoly::normalized() const {
    std::vector<ExpTerm> sorted = terms_;
    std::stable_sort(sorted.begin(), sorted.end(), [](auto const& a, auto const& b) {
      return a.exponent < b.exponent;
    });
    std::vector<ExpTerm> out;
    for (auto& t : sorted) {
      if (!out.empty() && out.back().exponent == t.exponent) {
        out.back().affine += t.affine;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](ExpTerm const& t) { return t.affine.is_zero(); });
    ExpPoly result(vars_);
    result.terms_ = std::move(out);
    return result;
  }

  bool ExpPoly::is_normalized() const {
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (terms_[k].affine.is_zero()) {
        return false;
      }
      if (k > 0 && !(terms_[k - 1].exponent < terms_[k].exponent)) {
        return false;
      }
    }
    return true;
  }

  bool ExpPoly::is_zero() const {
    return normalized().terms_.empty();
  }

  ExpPoly& ExpPoly::operator+=(ExpPoly const& other) {
    if (other.vars_ != vars_) {
      throw Error("ExpPoly variable count mismatch");
    }
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    *this = normalized();
    return *this;
  }

  ExpPoly& ExpPoly::operator-=(ExpPoly const& other) {
    return *this += -other;
  }

  ExpPoly ExpPoly::operator-() const {
    ExpPoly out(*this);
    for (auto& t : out.terms_) {
      t.affine = -t.affine;
    }
    return out;
  }

  ExpPoly& ExpPoly::operator*=(ExpPoly const& other) {
    if (other.vars_ != vars_) {
      throw Error("ExpPoly variable count mismatch");
    }
    std::vector<ExpTerm> product;
    product.reserve(terms_.size() * other.terms_.size());
    for (auto const& a : terms_) {
      for (auto const& b : other.terms_) {
        product.push_back(ExpTerm{a.affine * b.affine, a.exponent + b.exponent});
      }
    }
    terms_ = std::move(product);
    *this  = normalized();
    return *this;
  }

  ExpPoly operator*(GaussianRational const& c, ExpPoly p) {
    return ExpPoly::constant(p.vars(), c) * p;
  }

  ExpPoly ExpPoly::compose(IntMatrix const& m) const {
    if (m.rows() != vars_) {
      throw Error("ExpPoly::compose shape mismatch");
    }
    std::vector<ExpTerm> out;
    out.reserve(terms_.size());
    for (auto const& t : terms_) {
      out.push_back(ExpTerm{t.affine.compose(m), t.exponent.compose(m)});
    }
    return ExpPoly(m.cols(), std::move(out)).normalized();
  }

  bool operator==(ExpPoly const& a, ExpPoly const& b) {
    return a.vars_ == b.vars_ && a.normalized().terms_ == b.normalized().terms_;
  }

  std::string ExpPoly::to_string(std::vector<std::string> const& names) const {
    if (terms_.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& t : terms_) {
      if (!out.empty()) {
        out += " + ";
      }
      std::string affine;
      if (!t.affine.constant.is_zero()) {
        affine = t.affine.constant.to_string();
      }
      for (std::size_t j = 0; j < t.affine.vars(); ++j) {
        if (!t.affine.linear[j].is_zero()) {
          affine += (affine.empty() ? "" : " + ") + t.affine.linear[j].to_string()
                    + "*" + var_name(names, j);
        }
      }
      out += "[" + affine + "]";
      if (!t.exponent.is_zero()) {
        out += "*exp(" + form_string(t.exponent, names) + ")";
      }
    }
    return out;
  }

  // ---- QVecSemigroup ----

  QVecSemigroup::QVecSemigroup(std::size_t d, IntMatrix sigma)
      : d_(d), sigma_(std::move(sigma)) {
    if (d_ == 0 || sigma_.rows() != d_ || sigma_.cols() != d_) {
      throw PreconditionError("bad-shape", "sigma must be a d x d matrix, d >= 1");
    }
    if (!(sigma_ * sigma_ == IntMatrix::identity(d_))) {
      throw PreconditionError("sigma-not-involutive", "sigma * sigma != I");
    }
  }

  namespace {
    std::vector<std::vector<Rational>> forms_with_sign(QVecSemigroup const& ctx,
                                                       int                  sign) {
      // a sigma = sign * a  <=>  (sigma^T - sign I) a^T = 0
      auto const       d = static_cast<Index>(ctx.dim());
      Matrix<Rational> m(d, d);
      for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
          m(i, j) = Rational(ctx.sigma()(static_cast<std::size_t>(j),
                                         static_cast<std::size_t>(i)))
                    - Rational(i == j ? sign : 0);
        }
      }
      auto const                         basis = kernel(m);
      std::vector<std::vector<Rational>> out;
      for (Index k = 0; k < basis.cols(); ++k) {
        out.emplace_back(basis.col(k).begin(), basis.col(k).end());
      }
      return out;
    }

    void require_vars(LinForm const& l, std::size_t d, char const* what) {
      if (l.vars() != d) {
        throw PreconditionError("bad-shape",
                                std::string(what) + " has " + std::to_string(l.vars())
                                    + " coefficients, expected "
                                    + std::to_string(d));
      }
    }

    std::vector<GaussianRational> affine_coefficients(LinForm const& a) {
      std::vector<GaussianRational> out;
      for (auto const& c : a.coeffs) {
        if (!c.pi.is_zero()) {
          throw PreconditionError("additive-not-affine",
                                  "A must not carry i*pi coefficients");
        }
        out.push_back(c.plain);
      }
      return out;
    }
  }  // namespace

  std::vector<std::vector<Rational>> odd_forms(QVecSemigroup const& ctx) {
    return forms_with_sign(ctx, -1);
  }

  std::vector<std::vector<Rational>> even_forms(QVecSemigroup const& ctx) {
    return forms_with_sign(ctx, 1);
  }

  ExpPoly make_char(LinForm const& l, QVecSemigroup const& ctx) {
    require_vars(l, ctx.dim(), "chi exponent");
    return ExpPoly::exponential(l);
  }

  ExpPoly make_mu(LinForm const& l, QVecSemigroup const& ctx) {
    require_vars(l, ctx.dim(), "mu exponent");
    LinForm const composite = l + l.compose(ctx.sigma());
    if (!composite.is_zero()) {
      throw PreconditionError("mu-constraint",
                              "l o (I + sigma) = " + form_string(composite)
                                  + " is not zero");
    }
    return ExpPoly::exponential(l);
  }

  OddAdditive make_additive_odd(LinForm const& a, QVecSemigroup const& ctx) {
    require_vars(a, ctx.dim(), "A");
    affine_coefficients(a);
    LinForm const sum = a + a.compose(ctx.sigma());
    if (!sum.is_zero()) {
      throw PreconditionError("additive-not-odd",
                              "A o sigma + A = " + form_string(sum)
                                  + " is not zero");
    }
    return OddAdditive{a, a.is_zero()};
  }

  LinForm character_exponent(ExpPoly const& p) {
    auto const n = p.normalized();
    if (n.terms().size() != 1 || !n.terms().front().affine.is_constant()
        || !(n.terms().front().affine.constant == GaussianRational(1))) {
      throw PreconditionError("not-a-character",
                              "expected a single term exp(l) with coefficient 1");
    }
    return n.terms().front().exponent;
  }

  ExpPoly star_char(ExpPoly const&       chi,
                    ExpPoly const&       mu,
                    QVecSemigroup const& ctx) {
    return ExpPoly::exponential(character_exponent(mu)
                                + character_exponent(chi).compose(ctx.sigma()));
  }

  std::vector<std::string> residual_names(std::size_t d) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= d; ++i) {
      names.push_back("x" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= d; ++i) {
      names.push_back("y" + std::to_string(i));
    }
    return names;
  }

  ExpPoly residual_eq1_symbolic(ExpPoly const&          chi,
                                ExpPoly const&          mu,
                                LinForm const&          additive,
                                GaussianRational const& c,
                                QVecSemigroup const&    ctx) {
    auto const d = ctx.dim();
    require_vars(additive, d, "A");
    LinForm const l_chi = character_exponent(chi);
    LinForm const l_mu  = character_exponent(mu);
    require_vars(l_chi, d, "chi exponent");
    require_vars(l_mu, d, "mu exponent");
    if (!(l_mu + l_chi.compose(ctx.sigma()) == l_chi)) {
      throw PreconditionError("chi-not-star-invariant",
                              "mu * chi o sigma != chi");
    }

    ExpPoly const f(d, {ExpTerm{AffineForm(c, affine_coefficients(additive)), l_chi}});

    // d x 2d substitutions for (x, y)
    IntMatrix x_of(d, 2 * d), y_of(d, 2 * d), sum(d, 2 * d), shifted(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      x_of(i, i)        = 1;
      y_of(i, d + i)    = 1;
      sum(i, i)         = 1;
      sum(i, d + i)     = 1;
      shifted(i, i)     = 1;
      for (std::size_t j = 0; j < d; ++j) {
        shifted(i, d + j) = ctx.sigma()(i, j);
      }
    }
    ExpPoly residual = f.compose(sum) + mu.compose(y_of) * f.compose(shifted)
                       - GaussianRational(2) * f.compose(x_of) * chi.compose(y_of);
    return residual.normalized();
  }

  // ---- draws ----

  DrawResult verify_draw(Draw const& draw) {
    QVecSemigroup const ctx(draw.d, draw.sigma);
    DrawResult          result;
    result.draw        = draw;
    ExpPoly const chi  = make_char(draw.chi_exponent, ctx);
    result.mu_exponent = draw.chi_exponent - draw.chi_exponent.compose(ctx.sigma());
    ExpPoly const mu   = make_mu(result.mu_exponent, ctx);
    auto const    odd  = make_additive_odd(draw.additive, ctx);
    if (odd.zero) {
      if (odd_forms(ctx).empty()) {
        result.family_empty = true;
        return result;
      }
      throw PreconditionError("additive-zero",
                              "family (3) needs a nonzero additive A");
    }
    result.residual = residual_eq1_symbolic(chi, mu, draw.additive, draw.c, ctx);
    result.residual_zero = result.residual.is_zero();

    auto const evens = even_forms(ctx);
    if (!evens.empty()) {
      LinForm twin         = draw.additive + rational_form(evens.front());
      result.twin_residual = residual_eq1_symbolic(chi, mu, twin, draw.c, ctx);
      result.twin_nonzero  = !result.twin_residual->is_zero();
      result.twin_additive = std::move(twin);
    }
    return result;
  }

  namespace {
    Rational small_rational(std::mt19937_64& rng) {
      auto const num = static_cast<std::int64_t>(rng() % 7) - 3;
      auto const den = static_cast<std::int64_t>(rng() % 3) + 1;
      return Rational(num, den);
    }

    GaussianRational small_gaussian(std::mt19937_64& rng) {
      Rational re = small_rational(rng);
      if (rng() % 2 == 0) {
        return GaussianRational(std::move(re));
      }
      return GaussianRational(std::move(re), small_rational(rng));
    }

    IntMatrix random_signed_involution(std::size_t d, std::mt19937_64& rng) {
      for (;;) {
        IntMatrix         m(d, d);
        std::vector<bool> used(d, false);
        for (std::size_t i = 0; i < d; ++i) {
          if (used[i]) {
            continue;
          }
          std::vector<std::size_t> partners = {i};
          for (std::size_t j = i + 1; j < d; ++j) {
            if (!used[j]) {
              partners.push_back(j);
            }
          }
          std::size_t const  j    = partners[rng() % partners.size()];
          std::int64_t const sign = rng() % 2 == 0 ? 1 : -1;
          m(i, j)                 = sign;
          m(j, i)                 = sign;
          used[i] = used[j] = true;
        }
        IntMatrix minus(d, d);
        for (std::size_t i = 0; i < d; ++i) {
          minus(i, i) = -1;
        }
        if (!(m == IntMatrix::identity(d)) && !(m == minus)) {
          return m;
        }
      }
    }
  }  // namespace

  Draw random_draw(std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Draw            draw;
    draw.d     = d;
    draw.seed  = seed;
    draw.sigma = random_signed_involution(d, rng);
    QVecSemigroup const ctx(d, draw.sigma);

    draw.chi_exponent = LinForm(d);
    for (auto& coeff : draw.chi_exponent.coeffs) {
      coeff.plain = small_gaussian(rng);
      if (rng() % 3 == 0) {
        coeff.pi = GaussianRational(small_rational(rng));
      }
    }
    do {
      LinForm a(d);
      for (auto& coeff : a.coeffs) {
        coeff.plain = small_gaussian(rng);
      }
      draw.additive = a - a.compose(draw.sigma);
    } while (draw.additive.is_zero());
    draw.c = small_gaussian(rng);
    return draw;
  }

  bool GridReport::pass() const noexcept {
    return std::all_of(results.begin(), results.end(), [](DrawResult const& r) {
      return r.residual_zero && r.twin_nonzero;
    });
  }

  GridReport verify_family3_grid(std::vector<GridSpec> const& grid,
                                 std::uint64_t                seed) {
    GridReport report;
    report.seed = seed;
    for (auto const& spec : grid) {
      for (std::size_t k = 0; k < spec.draws; ++k) {
        auto result = verify_draw(random_draw(spec.d, derive_seed(seed, spec.d, k)));
        report.zero_residuals += result.residual_zero ? 1 : 0;
        report.nonzero_twins += result.twin_nonzero ? 1 : 0;
        report.results.push_back(std::move(result));
      }
    }
    return report;
  }

}  // namespace wilson::qspace
