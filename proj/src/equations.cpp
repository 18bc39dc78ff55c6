#include "wilson/equations.hpp"

#include <algorithm>

namespace wilson {

  std::string to_string(Equation eq) {
    switch (eq) {
      case Equation::wilson1:
        return "eq1";
      case Equation::wilson2:
        return "eq2";
      case Equation::dalembert:
        return "dalembert";
      case Equation::mu_dalembert:
        return "mu-dalembert";
    }
    return "?";
  }

  Equation parse_equation(std::string const& name) {
    if (name == "eq1") {
      return Equation::wilson1;
    }
    if (name == "eq2") {
      return Equation::wilson2;
    }
    if (name == "dalembert") {
      return Equation::dalembert;
    }
    if (name == "mu-dalembert") {
      return Equation::mu_dalembert;
    }
    throw Error("unknown equation \"" + name + "\"");
  }

  std::string to_string(FamilyTag tag) {
    switch (tag) {
      case FamilyTag::eq1_f1:
        return "EQ1_F1";
      case FamilyTag::eq1_f2:
        return "EQ1_F2";
      case FamilyTag::eq1_f3:
        return "EQ1_F3";
      case FamilyTag::eq2_f1:
        return "EQ2_F1";
      case FamilyTag::eq2_f2:
        return "EQ2_F2";
    }
    return "?";
  }

  namespace {
    void require_nonzero_multiplicative(SFunc const&             chi,
                                        StructureInstance const& ctx) {
      if (chi.size() != static_cast<Index>(ctx.order())) {
        throw PreconditionError("bad-length", "chi has the wrong length");
      }
      if (all_zero(chi)) {
        throw PreconditionError("chi-zero", "chi must be nonzero");
      }
      if (!is_multiplicative(ctx.table, chi)) {
        throw PreconditionError("not-multiplicative",
                                "chi must be multiplicative");
      }
    }
  }  // namespace

  SolutionPair make_family2(SFunc const&             chi,
                            Cyclotomic const&        lambda,
                            Cyclotomic const&        delta,
                            StructureInstance const& ctx) {
    require_nonzero_multiplicative(chi, ctx);
    if (lambda.is_zero() && delta.is_zero()) {
      throw PreconditionError("zero-parameters",
                              "(lambda, delta) must not be (0, 0)");
    }
    SFunc const chi_star = star(chi, ctx);
    return SolutionPair{chi * lambda + chi_star * delta,
                        (chi + chi_star) / Cyclotomic(2)};
  }

  SolutionPair make_family3(SFunc const&             chi,
                            Cyclotomic const&        c,
                            SFunc const&             additive,
                            StructureInstance const& ctx) {
    require_nonzero_multiplicative(chi, ctx);
    if (!exactly_equal(star(chi, ctx), chi)) {
      throw PreconditionError("chi-not-star-invariant",
                              "family (3) needs chi = chi*");
    }
    auto const        ideal  = null_ideal(chi, ctx.table);
    auto const        domain = ideal.complement();
    auto const        n      = static_cast<Element>(ctx.order());
    SFunc             a      = additive;
    for (Element x = 0; x < n; ++x) {
      if (!domain[x]) {
        a(x) = Cyclotomic(0);
      }
    }
    if (all_zero(a)) {
      throw PreconditionError("additive-zero",
                              "A must be a nonzero additive function");
    }
    if (!is_additive(ctx.table, a, domain)) {
      throw PreconditionError("not-additive",
                              "A is not additive on the complement of I_chi");
    }
    for (Element x = 0; x < n; ++x) {
      if (domain[x] && !(a(ctx.sigma(x)) == -a(x))) {
        throw PreconditionError("additive-not-odd", "A o sigma != -A");
      }
    }
    SFunc f(chi.size());
    for (Element x = 0; x < n; ++x) {
      f(x) = domain[x] ? chi(x) * (c + a(x)) : Cyclotomic(0);
    }
    return SolutionPair{std::move(f), chi};
  }

  SolutionPair make_eq2_family2(SFunc const&             chi,
                                Cyclotomic const&        alpha,
                                StructureInstance const& ctx) {
    if (alpha.is_zero()) {
      throw PreconditionError("alpha-zero", "alpha must be nonzero");
    }
    if (!is_multiplicative(ctx.table, chi)) {
      throw PreconditionError("not-multiplicative",
                              "chi must be multiplicative");
    }
    SFunc g = even_part(chi, ctx);
    return SolutionPair{g * alpha, g};
  }

  std::vector<std::pair<SFunc, SFunc>>
  canonical_characters(StructureInstance const&  ctx,
                       std::vector<SFunc> const& multiplicative) {
    std::vector<std::pair<SFunc, SFunc>> out;
    for (auto const& chi : multiplicative) {
      if (all_zero(chi)) {
        continue;
      }
      SFunc chi_star = star(chi, ctx);
      if (function_less(chi_star, chi)) {
        continue;  // represented by chi_star
      }
      out.emplace_back(chi, std::move(chi_star));
    }
    return out;
  }

  std::vector<SolutionFamily> classify_eq1(StructureInstance const& ctx) {
    auto const& field = CyclotomicField::get(session_conductor(ctx.table));
    std::vector<SolutionFamily> out;
    out.push_back(SolutionFamily{FamilyTag::eq1_f1,
                                 std::nullopt,
                                 std::nullopt,
                                 {"g"},
                                 {"f = 0", "g arbitrary"},
                                 {},
                                 {}});
    auto const multiplicative = enumerate_multiplicative(ctx.table, field);
    auto       characters     = canonical_characters(ctx, multiplicative);
    for (auto const& [chi, chi_star] : characters) {
      out.push_back(SolutionFamily{FamilyTag::eq1_f2,
                                   chi,
                                   chi_star,
                                   {"lambda", "delta"},
                                   {"(lambda, delta) != (0, 0)"},
                                   {},
                                   {}});
    }
    for (auto const& [chi, chi_star] : characters) {
      if (!exactly_equal(chi, chi_star)) {
        continue;
      }
      auto const ideal = null_ideal(chi, ctx.table);
      auto       odd = odd_additive_space(ctx.table, ideal.complement(), ctx.sigma);
      if (odd.cols() == 0) {
        continue;
      }
      out.push_back(SolutionFamily{FamilyTag::eq1_f3,
                                   chi,
                                   chi_star,
                                   {"c", "A"},
                                   {"A nonzero", "A o sigma = -A"},
                                   ideal.members,
                                   std::move(odd)});
    }
    return out;
  }

  std::vector<SolutionFamily> classify_eq2(StructureInstance const& ctx) {
    auto const& field = CyclotomicField::get(session_conductor(ctx.table));
    std::vector<SolutionFamily> out;
    out.push_back(SolutionFamily{FamilyTag::eq2_f1,
                                 std::nullopt,
                                 std::nullopt,
                                 {"g"},
                                 {"f = 0", "g arbitrary"},
                                 {},
                                 {}});
    auto const multiplicative = enumerate_multiplicative(ctx.table, field);
    for (auto const& [chi, chi_star] :
         canonical_characters(ctx, multiplicative)) {
      if (all_zero(SFunc(chi + chi_star))) {
        continue;  // degenerates into family (1)
      }
      out.push_back(SolutionFamily{FamilyTag::eq2_f2,
                                   chi,
                                   chi_star,
                                   {"alpha"},
                                   {"alpha != 0"},
                                   {},
                                   {}});
    }
    return out;
  }

  ResidualReport<Cyclotomic> sine_addition_check(SFunc const&             f,
                                                 SFunc const&             g,
                                                 Element                  a,
                                                 StructureInstance const& ctx) {
    if (!residual_eq1(f, g, ctx).is_zero()) {
      throw PreconditionError("not-a-solution",
                              "(f, g) does not satisfy the first equation");
    }
    auto const& s = ctx.table;
    SFunc       fa(f.size());
    for (Element x = 0; x < s.order(); ++x) {
      fa(x) = f(s(a, x)) - f(a) * g(x);
    }
    return scan_residual<Cyclotomic>(s.order(), [&](Element x, Element y) {
      return fa(s(x, y)) - fa(x) * g(y) - fa(y) * g(x);
    });
  }

}  // namespace wilson
