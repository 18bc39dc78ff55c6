#include "wilson/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

namespace wilson {

  namespace {
    SFunc half_sum(SFunc const& a, SFunc const& b) {
      return (a + b) / Cyclotomic(2);
    }

    Matrix<Cyclotomic> columns_of(std::vector<SFunc> const& vs, Index rows) {
      Matrix<Cyclotomic> m(rows, static_cast<Index>(vs.size()));
      for (std::size_t k = 0; k < vs.size(); ++k) {
        m.col(static_cast<Index>(k)) = vs[k];
      }
      return m;
    }

    std::vector<SFunc> stars_of(StructureInstance const&  ctx,
                                std::vector<SFunc> const& multiplicative) {
      std::vector<SFunc> out;
      out.reserve(multiplicative.size());
      for (auto const& m : multiplicative) {
        out.push_back(star(m, ctx));
      }
      return out;
    }

    std::vector<SFunc> multiplicative_of(StructureInstance const& ctx) {
      return enumerate_multiplicative(
          ctx.table, CyclotomicField::get(session_conductor(ctx.table)));
    }

    // Centrality rows f(xy) - f(yx) for x < y.
    Matrix<Cyclotomic> centrality_system(CayleyTable const& s) {
      auto const         n = static_cast<Element>(s.order());
      Matrix<Cyclotomic> c(static_cast<Index>(n * (n - 1) / 2),
                           static_cast<Index>(n));
      c.setConstant(Cyclotomic(0));
      Index row = 0;
      for (Element x = 0; x < n; ++x) {
        for (Element y = x + 1; y < n; ++y) {
          c(row, s(x, y)) += Cyclotomic(1);
          c(row, s(y, x)) -= Cyclotomic(1);
          ++row;
        }
      }
      return c;
    }
  }  // namespace

  std::string to_string(GShape shape) {
    switch (shape) {
      case GShape::zero:
        return "zero";
      case GShape::conjugate_pair:
        return "conjugate_pair";
      case GShape::self_conjugate:
        return "self_conjugate";
      case GShape::other_pair:
        return "other_pair";
      case GShape::random:
        return "random";
    }
    return "?";
  }

  Matrix<Cyclotomic> wilson_system(Equation                 eq,
                                   SFunc const&             g,
                                   StructureInstance const& ctx) {
    if (eq != Equation::wilson1 && eq != Equation::wilson2) {
      throw Error("the f-kernel is defined only for eq1 and eq2");
    }
    auto const&        s = ctx.table;
    auto const         n = static_cast<Element>(s.order());
    Matrix<Cyclotomic> a(static_cast<Index>(n * n), static_cast<Index>(n));
    a.setConstant(Cyclotomic(0));
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        Index const row = static_cast<Index>(x * n + y);
        a(row, s(x, y)) += Cyclotomic(1);
        a(row, s(ctx.sigma(y), x)) += ctx.mu(y);
        if (eq == Equation::wilson1) {
          a(row, x) -= Cyclotomic(2) * g(y);
        } else {
          a(row, y) -= Cyclotomic(2) * g(x);
        }
      }
    }
    return a;
  }

  Matrix<Cyclotomic> kernel_f_given_g(Equation                 eq,
                                      SFunc const&             g,
                                      StructureInstance const& ctx) {
    return kernel(wilson_system(eq, g, ctx));
  }

  Matrix<Cyclotomic> predicted_space(Equation                  eq,
                                     SFunc const&              g,
                                     StructureInstance const&  ctx,
                                     std::vector<SFunc> const& multiplicative) {
    auto const         rows = static_cast<Index>(ctx.order());
    std::vector<SFunc> span;
    if (all_zero(g)) {
      return Matrix<Cyclotomic>(rows, 0);
    }
    for (auto const& chi : multiplicative) {
      if (all_zero(chi)) {
        continue;
      }
      SFunc const chi_star = star(chi, ctx);
      if (!exactly_equal(half_sum(chi, chi_star), g)) {
        continue;
      }
      if (eq == Equation::wilson2) {
        span.push_back(g);
        continue;
      }
      span.push_back(chi);
      span.push_back(chi_star);
      if (exactly_equal(chi, chi_star)) {
        // chi * (odd additive functions on S minus I_chi)
        auto const ideal = null_ideal(chi, ctx.table);
        auto const odd
            = odd_additive_space(ctx.table, ideal.complement(), ctx.sigma);
        for (Index k = 0; k < odd.cols(); ++k) {
          span.push_back(chi.cwiseProduct(odd.col(k)));
        }
      }
    }
    return canonical_basis(columns_of(span, rows));
  }

  Matrix<Cyclotomic> predicted_space(Equation                 eq,
                                     SFunc const&             g,
                                     StructureInstance const& ctx) {
    return predicted_space(eq, g, ctx, multiplicative_of(ctx));
  }

  std::vector<CandidateG>
  pair_candidates(StructureInstance const&  ctx,
                  std::vector<SFunc> const& multiplicative) {
    auto const              stars = stars_of(ctx, multiplicative);
    std::vector<CandidateG> out;
    for (std::size_t i = 0; i < multiplicative.size(); ++i) {
      for (std::size_t j = i; j < multiplicative.size(); ++j) {
        SFunc g = half_sum(multiplicative[i], multiplicative[j]);
        if (std::any_of(out.begin(), out.end(), [&](CandidateG const& c) {
              return exactly_equal(c.g, g);
            })) {
          continue;
        }
        GShape shape = GShape::other_pair;
        if (all_zero(g)) {
          shape = GShape::zero;
        } else if (i != j && exactly_equal(multiplicative[j], stars[i])) {
          shape = GShape::conjugate_pair;
        } else if (i == j && exactly_equal(multiplicative[i], stars[i])) {
          shape = GShape::self_conjugate;
        }
        out.push_back(CandidateG{std::move(g),
                                 shape,
                                 "pair(" + std::to_string(i) + ","
                                     + std::to_string(j) + ")"});
      }
    }
    return out;
  }

  std::vector<CandidateG> random_candidates(StructureInstance const& ctx,
                                            std::size_t              count,
                                            std::uint64_t            seed) {
    auto const&             field = CyclotomicField::get(
        session_conductor(ctx.table));
    std::vector<Cyclotomic> pool = {Cyclotomic(0),
                                    Cyclotomic(1),
                                    Cyclotomic(-1),
                                    Cyclotomic(2),
                                    Cyclotomic(Rational(1, 2)),
                                    Cyclotomic(Rational(-1, 3)),
                                    Cyclotomic(3)};
    for (unsigned k = 1; k < field.conductor(); ++k) {
      pool.push_back(root_of_unity(field, field.conductor(), k));
    }
    std::mt19937_64         rng(seed);
    std::vector<CandidateG> out;
    auto const              n = static_cast<Index>(ctx.order());
    for (std::size_t k = 0; k < count; ++k) {
      SFunc g(n);
      for (Index x = 0; x < n; ++x) {
        g(x) = pool[static_cast<std::size_t>(rng() % pool.size())];
      }
      out.push_back(
          CandidateG{std::move(g), GShape::random, "random#" + std::to_string(k)});
    }
    return out;
  }

  Index expected_kernel_dim(Equation eq, GShape shape) {
    switch (shape) {
      case GShape::zero:
      case GShape::other_pair:
        return 0;
      case GShape::conjugate_pair:
        return eq == Equation::wilson1 ? 2 : 1;
      case GShape::self_conjugate:
        return 1;
      case GShape::random:
        return -1;
    }
    return -1;
  }

  std::vector<CompletenessReport>
  verify_completeness(Equation                  eq,
                      StructureInstance const&  ctx,
                      VerifyOptions const&      options,
                      std::vector<SFunc> const& multiplicative,
                      std::string const&        instance_id) {
    auto candidates = pair_candidates(ctx, multiplicative);
    auto randoms
        = random_candidates(ctx, options.random_g_count, options.seed);
    candidates.insert(candidates.end(),
                      std::make_move_iterator(randoms.begin()),
                      std::make_move_iterator(randoms.end()));
    std::vector<CompletenessReport> reports;
    reports.reserve(candidates.size());
    for (auto& candidate : candidates) {
      CompletenessReport report;
      report.instance_id  = instance_id;
      report.equation     = eq;
      report.kernel_basis = kernel_f_given_g(eq, candidate.g, ctx);
      report.predicted_basis
          = predicted_space(eq, candidate.g, ctx, multiplicative);
      if (options.corrupt_predicted && report.predicted_basis.cols() > 0) {
        report.predicted_basis = Matrix<Cyclotomic>(
            report.predicted_basis.leftCols(report.predicted_basis.cols() - 1));
      }
      report.pass = same_span(report.kernel_basis, report.predicted_basis);
      report.candidate = std::move(candidate);
      reports.push_back(std::move(report));
    }
    return reports;
  }

  std::vector<CompletenessReport>
  verify_completeness(Equation                 eq,
                      StructureInstance const& ctx,
                      VerifyOptions const&     options,
                      std::string const&       instance_id) {
    return verify_completeness(
        eq, ctx, options, multiplicative_of(ctx), instance_id);
  }

  VanishingKernelReport vanishing_kernel_check(SFunc const&                chi,
                                               std::vector<Element> const& phi,
                                               CayleyTable const&          s) {
    if (!is_multiplicative(s, chi)) {
      throw PreconditionError("not-multiplicative", "chi must be multiplicative");
    }
    if (!is_homomorphism(s, phi)) {
      throw PreconditionError("not-homomorphism", "phi must be a homomorphism");
    }
    auto const         n = static_cast<Element>(s.order());
    Matrix<Cyclotomic> a(static_cast<Index>(n * n), static_cast<Index>(n));
    a.setConstant(Cyclotomic(0));
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        Index const row = static_cast<Index>(x * n + y);
        a(row, s(x, y)) += Cyclotomic(1);
        a(row, s(phi[y], x)) += chi(y);
      }
    }
    VanishingKernelReport report;
    report.kernel_basis = kernel(a);
    auto const sss      = triple_products(s);
    for (Index k = 0; k < report.kernel_basis.cols() && report.pass; ++k) {
      for (Element x = 0; x < n; ++x) {
        if (sss[x] && !report.kernel_basis(x, k).is_zero()) {
          report.pass   = false;
          report.detail = "kernel member nonzero at element "
                          + std::to_string(x) + " of S*S*S";
          break;
        }
      }
    }
    auto const ss = products(s);
    if (report.pass && std::all_of(ss.begin(), ss.end(), [](bool b) { return b; })
        && report.kernel_basis.cols() != 0) {
      report.pass   = false;
      report.detail = "S = S*S but the kernel is nonzero";
    }
    return report;
  }

  CommutationReport commutation_check(CayleyTable const& s) {
    auto const ss = products(s);
    if (!std::all_of(ss.begin(), ss.end(), [](bool b) { return b; })) {
      throw PreconditionError("not-SS", "commutation_check needs S = S*S");
    }
    auto const       n = static_cast<Element>(s.order());
    Matrix<Rational> a(static_cast<Index>(n * n), static_cast<Index>(2 * n));
    a.setConstant(Rational(0));
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        Index const row = static_cast<Index>(x * n + y);
        a(row, s(x, y)) += Rational(1);
        a(row, n + s(y, x)) -= Rational(1);
      }
    }
    auto const    basis = kernel(a);
    CommutationReport report;
    report.kernel_dim = basis.cols();
    for (Index k = 0; k < basis.cols(); ++k) {
      for (Element x = 0; x < n; ++x) {
        if (!(basis(x, k) == basis(n + x, k))) {
          report.pass   = false;
          report.detail = "kernel vector with f != F at element "
                          + std::to_string(x);
          return report;
        }
      }
    }
    return report;
  }

  DalembertGridReport dalembert_grid_completeness(
      StructureInstance const&  ctx,
      std::vector<SFunc> const& multiplicative) {
    auto const& s     = ctx.table;
    auto const& field = CyclotomicField::get(session_conductor(s));
    auto const  l     = static_cast<unsigned>(period_lcm(s));

    std::vector<Cyclotomic> base = {Cyclotomic(field, Rational(0))};
    for (unsigned k = 0; k < l; ++k) {
      base.push_back(root_of_unity(field, l, k));
    }
    std::vector<Cyclotomic> grid;
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = i; j < base.size(); ++j) {
        grid.push_back((base[i] + base[j]) / Cyclotomic(2));
      }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    DalembertGridReport report;
    report.grid_size = grid.size();

    auto const            n = static_cast<int>(s.order());
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    SFunc                 g(n);
    auto consistent = [&](int upto) {
      for (int x = 0; x <= upto; ++x) {
        for (int y = 0; y <= upto; ++y) {
          auto const xy = static_cast<int>(s(static_cast<Element>(x),
                                             static_cast<Element>(y)));
          auto const sx = static_cast<int>(
              s(ctx.sigma(static_cast<Element>(y)), static_cast<Element>(x)));
          if (xy > upto || sx > upto) {
            continue;
          }
          if (x != upto && y != upto && xy != upto && sx != upto) {
            continue;
          }
          Cyclotomic const r = g(xy) + ctx.mu(y) * g(sx)
                               - Cyclotomic(2) * g(x) * g(y);
          if (!r.is_zero()) {
            return false;
          }
        }
      }
      return true;
    };
    int x = 0;
    while (x >= 0) {
      auto const ux = static_cast<std::size_t>(x);
      if (choice[ux] == grid.size()) {
        choice[ux] = 0;
        --x;
        if (x >= 0) {
          ++choice[static_cast<std::size_t>(x)];
        }
        continue;
      }
      g(x) = grid[choice[ux]];
      if (!consistent(x)) {
        ++choice[ux];
        continue;
      }
      if (x == n - 1) {
        report.solutions.push_back(g);
        ++choice[ux];
        continue;
      }
      ++x;
      choice[static_cast<std::size_t>(x)] = 0;
    }

    std::vector<SFunc> classified;
    for (auto const& m : multiplicative) {
      classified.push_back(make_dalembert(m, ctx));
    }
    for (auto const& sol : report.solutions) {
      bool const matched
          = std::any_of(classified.begin(), classified.end(), [&](SFunc const& c) {
              return exactly_equal(c, sol);
            });
      if (!matched) {
        report.unmatched.push_back(sol);
      }
    }
    // every classified solution must also show up on the grid
    for (auto const& c : classified) {
      bool const found = std::any_of(
          report.solutions.begin(), report.solutions.end(), [&](SFunc const& sol) {
            return exactly_equal(c, sol);
          });
      if (!found) {
        report.pass   = false;
        report.detail = "a classified solution is missing from the grid search";
      }
    }
    if (!report.unmatched.empty()) {
      report.pass   = false;
      report.detail = std::to_string(report.unmatched.size())
                      + " grid solution(s) not of the form (m + m*)/2";
    }
    return report;
  }

  CentralSolutionReport central_solution_check(StructureInstance const&       ctx,
                                               std::vector<CandidateG> const& candidates) {
    CentralSolutionReport      report;
    auto const         central_rows = centrality_system(ctx.table);
    for (auto const& candidate : candidates) {
      ++report.checked;
      auto const k = kernel_f_given_g(Equation::wilson1, candidate.g, ctx);
      if (k.cols() == 0) {
        continue;
      }
      // central members of span(k): k * ker(C k)
      Matrix<Cyclotomic> ck      = central_rows * k;
      Index const        central = kernel(ck).cols();
      if (central < k.cols()) {
        ++report.noncentral_kernels;
      }
      if (central == 0) {
        continue;
      }
      ++report.with_central_solution;
      if (!residual_mu_dalembert(candidate.g, ctx).is_zero()) {
        report.pass   = false;
        report.detail = "g from " + candidate.origin
                        + " has a central solution f but fails the "
                          "mu-d'Alembert equation";
      }
    }
    return report;
  }

  // ---- census ----

  std::size_t OrderSummary::failures() const {
    std::size_t total = 0;
    for (auto const& [name, counter] : checks) {
      total += counter.failed;
    }
    return total;
  }

  std::size_t CensusReport::total_failures() const {
    std::size_t total = 0;
    for (auto const& o : orders) {
      total += o.failures();
    }
    return total;
  }

  CheckCounter CensusReport::check(std::string const& name) const {
    CheckCounter out;
    for (auto const& o : orders) {
      auto it = o.checks.find(name);
      if (it != o.checks.end()) {
        out.checked += it->second.checked;
        out.failed += it->second.failed;
      }
    }
    return out;
  }

  namespace {
    struct TableResult {
      bool                                square_generated = false;
      std::size_t                         instances        = 0;
      std::map<std::string, CheckCounter> checks;
      std::map<std::string, std::size_t>  kernel_dims;
      std::vector<CensusFailure>          failures;
    };

    class TableVerifier {
     public:
      TableVerifier(CensusOptions const& options,
                    std::size_t          order,
                    std::size_t          index,
                    CayleyTable const&   table)
          : options_(options), order_(order), index_(index), table_(table) {}

      TableResult run() {
        result_.square_generated = is_square_generated(table_);
        if (!result_.square_generated) {
          return std::move(result_);
        }
        field_          = &CyclotomicField::get(session_conductor(table_));
        multiplicative_ = enumerate_multiplicative(table_, *field_);
        check_semigroup_level();
        auto const sigmas = enumerate_involutive_automorphisms(table_);
        std::size_t instance = 0;
        for (auto const& sigma : sigmas) {
          record("sigma_valid", is_involutive_automorphism(table_, sigma.perm),
                 sigma, {}, "");
          for (auto const& twist : multiplicative_) {
            auto const rep = vanishing_kernel_check(twist, sigma.perm, table_);
            record("vanishing_kernel", rep.pass, sigma, {}, rep.detail);
          }
          auto const mus = enumerate_mu(table_, sigma, *field_);
          record("mu_nonempty", !mus.empty(), sigma, {}, "");
          for (auto const& mu : mus) {
            StructureInstance ctx{table_, sigma, mu.func};
            check_instance(ctx, derive_seed(options_.seed, order_, index_, instance));
            ++instance;
            ++result_.instances;
          }
        }
        return std::move(result_);
      }

     private:
      void record(std::string const& check,
                  bool               ok,
                  Involution const&  sigma,
                  SFunc const&       mu,
                  std::string const& detail) {
        auto& counter = result_.checks[check];
        ++counter.checked;
        if (!ok) {
          ++counter.failed;
          result_.failures.push_back(
              CensusFailure{order_, index_, table_, sigma, mu, check, detail});
        }
      }

      void check_semigroup_level() {
        Involution const id = identity_involution(table_.order());
        auto const       ss = products(table_);
        record("square_generated_implies_SS",
               std::all_of(ss.begin(), ss.end(), [](bool b) { return b; }),
               id, {}, "");
        auto const commutation = commutation_check(table_);
        record("commutation", commutation.pass, id, {}, commutation.detail);
        for (auto const& chi : multiplicative_) {
          record("multiplicative_valid", is_multiplicative(table_, chi), id, {},
                 "");
          if (all_zero(chi)) {
            continue;
          }
          auto const ideal = null_ideal(chi, table_);
          auto const space = additive_space(table_, ideal.complement());
          record("additive_space_zero", space.cols() == 0, id, {},
                 "additive space of dimension " + std::to_string(space.cols()));
        }
      }

      void check_instance(StructureInstance const& ctx, std::uint64_t seed) {
        auto const& sigma = ctx.sigma;
        auto const& mu    = ctx.mu;
        auto        fail  = [&](std::string const& check, bool ok,
                        std::string const& detail = "") {
          record(check, ok, sigma, mu, detail);
        };

        // Constructive soundness with parameters from {0, 1, 2, zeta}.
        std::vector<Cyclotomic> const params
            = {Cyclotomic(0), Cyclotomic(1), Cyclotomic(2),
               root_of_unity(*field_, field_->conductor(), 1)};
        for (auto const& chi : multiplicative_) {
          SFunc const g = make_dalembert(chi, ctx);
          fail("dalembert_residual", residual_dalembert_variant(g, ctx).is_zero());
          fail("dalembert_even", is_even(g, ctx));
          for (auto const& alpha : params) {
            if (alpha.is_zero()) {
              continue;
            }
            auto const pair = make_eq2_family2(chi, alpha, ctx);
            fail("family2_eq2_residual", residual_eq2(pair.f, pair.g, ctx).is_zero());
          }
          if (all_zero(chi)) {
            continue;
          }
          for (auto const& lambda : params) {
            for (auto const& delta : params) {
              if (lambda.is_zero() && delta.is_zero()) {
                continue;
              }
              auto const pair = make_family2(chi, lambda, delta, ctx);
              fail("family2_eq1_residual",
                   residual_eq1(pair.f, pair.g, ctx).is_zero());
            }
          }
        }

        // No family (3) on a finite semigroup.
        auto const families = classify_eq1(ctx);
        fail("classify_no_f3",
             std::none_of(families.begin(), families.end(),
                          [](SolutionFamily const& f) {
                            return f.tag == FamilyTag::eq1_f3;
                          }));

        // Completeness for both equations.
        VerifyOptions opts;
        opts.random_g_count = options_.random_g_count;
        opts.seed           = seed;
        for (Equation eq : {Equation::wilson1, Equation::wilson2}) {
          auto const reports = verify_completeness(eq, ctx, opts, multiplicative_);
          std::string const tag = to_string(eq);
          for (auto const& rep : reports) {
            fail("completeness_" + tag, rep.pass,
                 "g from " + rep.candidate.origin + ": kernel dim "
                     + std::to_string(rep.kernel_dim()) + ", predicted dim "
                     + std::to_string(rep.predicted_dim()));
            ++result_.kernel_dims[tag + ":" + to_string(rep.candidate.shape) + ":"
                                  + std::to_string(rep.kernel_dim())];
            Index const expected = expected_kernel_dim(eq, rep.candidate.shape);
            if (expected >= 0) {
              fail("kernel_dim_" + tag, rep.kernel_dim() == expected,
                   "g from " + rep.candidate.origin + " (" +
                       to_string(rep.candidate.shape) + "): kernel dim "
                       + std::to_string(rep.kernel_dim()) + ", expected "
                       + std::to_string(expected));
            } else {
              ++result_.checks["random_g_" + tag].checked;
              if (rep.predicted_dim() == 0) {
                fail("random_nonfamily_kernel_zero_" + tag, rep.kernel_dim() == 0);
              }
            }
            if (eq == Equation::wilson1) {
              for (Index k = 0; k < rep.kernel_basis.cols(); ++k) {
                SFunc const f = rep.kernel_basis.col(k);
                for (Element a = 0; a < ctx.order(); ++a) {
                  fail("sine_addition",
                       sine_addition_check(f, rep.candidate.g, a, ctx).is_zero());
                }
              }
            }
          }
        }

        // Structural checks on the candidates.
        auto pairs = pair_candidates(ctx, multiplicative_);
        auto randoms = random_candidates(ctx, options_.random_g_count, seed);
        pairs.insert(pairs.end(), randoms.begin(), randoms.end());
        auto const central = central_solution_check(ctx, pairs);
        fail("central_solution", central.pass, central.detail);
        result_.checks["central_solution_noncentral_kernels"].checked
            += central.noncentral_kernels;
        if (ctx.order() <= options_.dalembert_grid_max_order) {
          auto const grid = dalembert_grid_completeness(ctx, multiplicative_);
          fail("dalembert_grid", grid.pass, grid.detail);
        }

        // Star involution and even/odd reconstruction on one random F.
        auto const probe = random_candidates(ctx, 1, seed ^ 0x5bd1e995ULL);
        SFunc const& f   = probe.front().g;
        fail("star_involution", exactly_equal(star(star(f, ctx), ctx), f));
        fail("even_odd_reconstruction",
             exactly_equal(SFunc(even_part(f, ctx) + odd_part(f, ctx)), f));
      }

      CensusOptions const&   options_;
      std::size_t            order_;
      std::size_t            index_;
      CayleyTable const&     table_;
      CyclotomicField const* field_ = nullptr;
      std::vector<SFunc>     multiplicative_;
      TableResult            result_;
    };
  }  // namespace

  CensusReport census_verify(CensusOptions const& options) {
    if (options.max_order > kHardMaxOrder) {
      throw Error("max order " + std::to_string(options.max_order)
                  + " exceeds the hard cap " + std::to_string(kHardMaxOrder));
    }
    CensusReport report;
    report.options = options;
    for (std::size_t order = std::max<std::size_t>(options.min_order, 1);
         order <= options.max_order;
         ++order) {
      auto const tables
          = enumerate_semigroups(order, std::max(options.max_order, kDefaultMaxOrder));
      std::vector<TableResult> results(tables.size());
      std::atomic<std::size_t> next{0};
      auto                     worker = [&]() {
        for (std::size_t i = next++; i < tables.size(); i = next++) {
          results[i] = TableVerifier(options, order, i, tables[i]).run();
        }
      };
      std::size_t const jobs = std::max<std::size_t>(options.jobs, 1);
      if (jobs == 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) {
          pool.emplace_back(worker);
        }
        for (auto& t : pool) {
          t.join();
        }
      }
      OrderSummary summary;
      summary.order   = order;
      summary.scanned = tables.size();
      for (auto& r : results) {
        summary.square_generated += r.square_generated ? 1 : 0;
        summary.instances += r.instances;
        for (auto const& [name, c] : r.checks) {
          summary.checks[name].checked += c.checked;
          summary.checks[name].failed += c.failed;
        }
        for (auto const& [key, count] : r.kernel_dims) {
          summary.kernel_dims[key] += count;
        }
        for (auto& f : r.failures) {
          report.failures.push_back(std::move(f));
        }
      }
      report.orders.push_back(std::move(summary));
    }
    return report;
  }

}  // namespace wilson
