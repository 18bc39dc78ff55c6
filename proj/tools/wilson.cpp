// Command-line driver: validate, classify, verify, census, qspace-verify.
//
// Exit codes: 0 verified/valid, 1 counterexample or invalid structure,
// 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wilson/errors.hpp"
#include "wilson/serialize.hpp"

namespace {

  using namespace wilson;
  using io::json;

  constexpr int kOk      = 0;
  constexpr int kFailed  = 1;
  constexpr int kBadInput = 2;

  struct Config {
    std::string   input;
    std::string   output;
    std::string   equation;
    std::size_t   max_order      = kDefaultMaxOrder;
    std::size_t   min_order      = 1;
    std::size_t   random_g_count = 20;
    std::uint64_t seed           = 0;
    std::size_t   jobs           = 1;
    bool          corrupt        = false;
  };

  void write_output(Config const& cfg, json const& report) {
    if (cfg.output.empty()) {
      return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) {
      throw Error("cannot write " + cfg.output);
    }
    out << report.dump(2) << '\n';
  }

  std::string describe(SFunc const& f) {
    std::string out = "[";
    for (Index i = 0; i < f.size(); ++i) {
      out += (i == 0 ? "" : ", ") + f(i).to_string();
    }
    return out + "]";
  }

  // ---- validate ----

  int cmd_validate(Config const& cfg) {
    json report = io::report_header(cfg.seed);
    report["command"] = "validate";
    report["input"]   = cfg.input;

    io::RawInstance raw;
    try {
      raw = io::load_instance_file(cfg.input);
    } catch (AssocFail const& e) {
      std::cout << "invalid: " << e.what() << '\n';
      report["valid"]      = false;
      report["assoc_fail"] = {e.x(), e.y(), e.z()};
      write_output(cfg, report);
      return kFailed;
    }
    auto const& table = raw.table;
    auto const  gen   = square_generation(table);
    report["order"]            = table.order();
    report["associative"]      = true;
    report["commutative"]      = is_commutative(table);
    report["square_generated"] = gen.generated;
    std::cout << "order " << table.order() << ": associative, "
              << (is_commutative(table) ? "commutative" : "noncommutative")
              << ", " << (gen.generated ? "" : "not ") << "generated by its squares\n";
    if (!gen.generated) {
      std::cout << "invalid: blanket assumption violated (not generated by its "
                   "squares)\n";
      report["valid"] = false;
      write_output(cfg, report);
      return kFailed;
    }
    try {
      auto const ctx = io::build_instance(raw);
      report["sigma"] = ctx.sigma.perm;
      report["mu"]    = io::to_json(ctx.mu);
      if (raw.sigma || raw.mu) {
        std::cout << "sigma and mu admissible\n";
      }
    } catch (BlanketAssumptionViolated const& e) {
      std::cout << "invalid: " << e.what() << '\n';
      report["valid"] = false;
      report["error"] = e.what();
      write_output(cfg, report);
      return kFailed;
    }
    std::cout << "valid\n";
    report["valid"] = true;
    write_output(cfg, report);
    return kOk;
  }

  // ---- classify ----

  StructureInstance load_instance(Config const& cfg) {
    return io::build_instance(io::load_instance_file(cfg.input));
  }

  int cmd_classify(Config const& cfg) {
    auto const ctx      = load_instance(cfg);
    auto const equation = parse_equation(cfg.equation.empty() ? "eq1" : cfg.equation);
    json       report   = io::report_header(cfg.seed);
    report["command"]   = "classify";
    report["equation"]  = to_string(equation);
    report["instance"]  = io::to_json(ctx);

    if (equation == Equation::dalembert) {
      auto const& field = CyclotomicField::get(session_conductor(ctx.table));
      std::vector<SFunc> solutions;
      for (auto const& m : enumerate_multiplicative(ctx.table, field)) {
        SFunc g = make_dalembert(m, ctx);
        bool const seen
            = std::any_of(solutions.begin(), solutions.end(), [&](SFunc const& s) {
                return exactly_equal(s, g);
              });
        if (!seen) {
          solutions.push_back(std::move(g));
        }
      }
      json out = json::array();
      for (auto const& g : solutions) {
        std::cout << "g = (m + m*)/2 = " << describe(g) << '\n';
        out.push_back(io::to_json(g));
      }
      report["solutions"] = std::move(out);
      write_output(cfg, report);
      return kOk;
    }
    if (equation != Equation::wilson1 && equation != Equation::wilson2) {
      throw Error("classify supports eq1, eq2 and dalembert");
    }
    auto const families
        = equation == Equation::wilson1 ? classify_eq1(ctx) : classify_eq2(ctx);
    json out = json::array();
    for (auto const& family : families) {
      std::cout << to_string(family.tag);
      if (family.chi) {
        std::cout << "  chi = " << describe(*family.chi)
                  << "  chi* = " << describe(*family.chi_star);
      } else {
        std::cout << "  f = 0, g arbitrary";
      }
      std::cout << '\n';
      out.push_back(io::to_json(family));
    }
    report["families"] = std::move(out);
    write_output(cfg, report);
    return kOk;
  }

  // ---- verify ----

  int cmd_verify(Config const& cfg) {
    auto const ctx = load_instance(cfg);
    auto const& field = CyclotomicField::get(session_conductor(ctx.table));
    auto const  mult  = enumerate_multiplicative(ctx.table, field);

    std::vector<Equation> equations;
    if (cfg.equation.empty()) {
      equations = {Equation::wilson1, Equation::wilson2};
    } else {
      equations = {parse_equation(cfg.equation)};
    }

    json report         = io::report_header(cfg.seed);
    report["command"]   = "verify";
    report["random_g"]  = cfg.random_g_count;
    report["instance"]  = io::to_json(ctx);
    json checks         = json::array();
    json counterexamples = json::array();
    bool all_pass        = true;

    auto record = [&](std::string const& name, bool pass, json detail = {}) {
      json entry{{"check", name}, {"pass", pass}};
      if (!detail.is_null()) {
        entry["detail"] = std::move(detail);
      }
      if (!pass) {
        all_pass = false;
        counterexamples.push_back(entry);
      }
      checks.push_back(std::move(entry));
      std::cout << (pass ? "PASS " : "FAIL ") << name << '\n';
    };

    VerifyOptions opts;
    opts.random_g_count    = cfg.random_g_count;
    opts.seed              = cfg.seed;
    opts.corrupt_predicted = cfg.corrupt;

    for (Equation eq : equations) {
      std::string const tag = to_string(eq);
      if (eq == Equation::dalembert || eq == Equation::mu_dalembert) {
        bool residuals_ok = true;
        for (auto const& m : mult) {
          residuals_ok = residuals_ok
                         && residual_dalembert_variant(make_dalembert(m, ctx), ctx)
                                .is_zero();
        }
        record("dalembert residuals of (m + m*)/2", residuals_ok);
        auto const grid = dalembert_grid_completeness(ctx, mult);
        json       detail{{"grid_size", grid.grid_size},
                          {"solutions", grid.solutions.size()},
                          {"unmatched", json::array()}};
        for (auto const& u : grid.unmatched) {
          detail["unmatched"].push_back(io::to_json(u));
        }
        record("dalembert grid completeness", grid.pass, std::move(detail));
        continue;
      }
      auto const reports = verify_completeness(eq, ctx, opts, mult, cfg.input);
      std::size_t failed = 0;
      json        all    = json::array();
      for (auto const& r : reports) {
        all.push_back(io::to_json(r));
        Index const expected = expected_kernel_dim(eq, r.candidate.shape);
        bool const  ok = r.pass && (expected < 0 || expected == r.kernel_dim());
        if (!ok) {
          ++failed;
          counterexamples.push_back(io::to_json(r));
        }
      }
      report["completeness_" + tag] = std::move(all);
      std::cout << (failed == 0 ? "PASS " : "FAIL ") << "completeness " << tag
                << ": " << reports.size() - failed << "/" << reports.size()
                << " candidate g\n";
      all_pass = all_pass && failed == 0;

      if (eq == Equation::wilson1) {
        bool sine_ok = true;
        for (auto const& r : reports) {
          for (Index k = 0; k < r.kernel_basis.cols(); ++k) {
            for (Element a = 0; a < ctx.order(); ++a) {
              sine_ok = sine_ok
                        && sine_addition_check(r.kernel_basis.col(k), r.candidate.g,
                                               a, ctx)
                               .is_zero();
            }
          }
        }
        record("sine addition law for f_a", sine_ok);
      }
    }

    bool vanishing = true;
    for (auto const& chi : mult) {
      vanishing = vanishing && vanishing_kernel_check(chi, ctx.sigma.perm, ctx.table).pass;
    }
    record("twisted kernel vanishes on S*S*S", vanishing);
    auto const commutation = commutation_check(ctx.table);
    record("f(xy) = F(yx) forces f = F", commutation.pass,
           json{{"kernel_dim", commutation.kernel_dim}});
    auto candidates = pair_candidates(ctx, mult);
    auto randoms    = random_candidates(ctx, cfg.random_g_count, cfg.seed);
    candidates.insert(candidates.end(), randoms.begin(), randoms.end());
    auto const central = central_solution_check(ctx, candidates);
    record("central solutions give mu-d'Alembert g", central.pass,
           json{{"checked", central.checked},
                {"with_central_solution", central.with_central_solution},
                {"noncentral_kernels", central.noncentral_kernels}});

    report["checks"]          = std::move(checks);
    report["pass"]            = all_pass;
    report["counterexamples"] = std::move(counterexamples);
    write_output(cfg, report);
    std::cout << (all_pass ? "verified" : "counterexample found") << '\n';
    return all_pass ? kOk : kFailed;
  }

  // ---- census ----

  int cmd_census(Config const& cfg) {
    if (cfg.max_order > kHardMaxOrder) {
      std::cerr << "error: --max-order " << cfg.max_order << " exceeds the cap of "
                << kHardMaxOrder << '\n';
      return kBadInput;
    }
    CensusOptions options;
    options.max_order      = cfg.max_order;
    options.min_order      = cfg.min_order;
    options.seed           = cfg.seed;
    options.random_g_count = cfg.random_g_count;
    options.jobs           = cfg.jobs;

    auto const start  = std::chrono::steady_clock::now();
    auto const report = census_verify(options);
    std::chrono::duration<double> const elapsed
        = std::chrono::steady_clock::now() - start;

    for (auto const& o : report.orders) {
      std::cout << "order " << o.order << ": scanned=" << o.scanned
                << " square_generated=" << o.square_generated
                << " instances=" << o.instances << " failures=" << o.failures()
                << '\n';
    }
    std::size_t const scanned
        = report.orders.empty() ? 0 : report.orders.back().scanned;
    std::cout << "scanned=" << scanned << " failures=" << report.total_failures()
              << '\n';
    for (auto const& f : report.failures) {
      std::cout << "  counterexample: order " << f.order << " table #"
                << f.table_index << " check " << f.check << ": " << f.detail
                << '\n';
    }
    std::cerr << "census finished in " << elapsed.count() << " s\n";
    write_output(cfg, io::to_json(report));
    return report.total_failures() == 0 ? kOk : kFailed;
  }

  // ---- qspace-verify ----

  int cmd_qspace(Config const& cfg) {
    if (cfg.input.empty()) {
      auto const report = qspace::verify_family3_grid({{2, 10}, {3, 5}}, cfg.seed);
      std::cout << "qspace grid: " << report.results.size() << " draws, "
                << report.zero_residuals << " zero residuals, "
                << report.nonzero_twins << " nonzero perturbed twins\n";
      write_output(cfg, io::to_json(report));
      std::cout << (report.pass() ? "verified" : "counterexample found") << '\n';
      return report.pass() ? kOk : kFailed;
    }
    auto const draw = io::draw_from_json(io::parse_json(io::read_file(cfg.input)));
    json       report = io::report_header(draw.seed);
    report["command"] = "qspace-verify";
    report["input"]   = cfg.input;
    try {
      auto const result = qspace::verify_draw(draw);
      report["result"]  = io::to_json(result);
      report["pass"]    = result.pass();
      if (result.family_empty) {
        std::cout << "family (3) is empty: sigma admits no nonzero odd additive "
                     "function\n";
      } else {
        std::cout << "residual: "
                  << result.residual.to_string(qspace::residual_names(draw.d))
                  << '\n';
        if (result.twin_residual) {
          std::cout << "perturbed twin residual: "
                    << result.twin_residual->to_string(
                           qspace::residual_names(draw.d))
                    << '\n';
        }
      }
      write_output(cfg, report);
      std::cout << (result.pass() ? "verified" : "counterexample found") << '\n';
      return result.pass() ? kOk : kFailed;
    } catch (PreconditionError const& e) {
      std::cout << "precondition violated: " << e.what() << '\n';
      report["pass"]                 = false;
      report["precondition_violated"] = e.kind();
      report["error"]                = e.what();
      write_output(cfg, report);
      return kFailed;
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Wilson-type functional equations on "
               "semigroups"};
  app.set_version_flag("--version", std::string(io::tool_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--output", cfg.output, "Write the JSON report to this path");
  app.add_option("--seed", cfg.seed, "Seed for random candidate draws");

  auto equation_check = CLI::IsMember({"eq1", "eq2", "dalembert"});

  auto* validate = app.add_subcommand("validate", "Validate a semigroup or instance file");
  validate->add_option("path", cfg.input, "Semigroup or instance file")->required();

  auto* classify = app.add_subcommand("classify", "List the solution families");
  classify->add_option("path", cfg.input, "Instance file")->required();
  classify->add_option("--equation", cfg.equation, "eq1, eq2 or dalembert")
      ->check(equation_check);

  auto* verify = app.add_subcommand(
      "verify", "Check the classification against the exact kernels");
  verify->add_option("path", cfg.input, "Instance file")->required();
  verify->add_option("--equation", cfg.equation, "eq1, eq2 or dalembert (default: eq1 and eq2)")
      ->check(equation_check);
  verify->add_option("--random-g", cfg.random_g_count, "Random g draws per equation");
  verify->add_flag("--test-corrupt-predicted", cfg.corrupt)->group("");

  auto* census = app.add_subcommand(
      "census", "Verify every square-generated semigroup up to a given order");
  census->add_option("--max-order", cfg.max_order, "Largest order (at most 5)");
  census->add_option("--min-order", cfg.min_order, "Smallest order")
      ->check(CLI::PositiveNumber);
  census->add_option("--random-g", cfg.random_g_count, "Random g draws per instance");
  census->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* qspace_cmd = app.add_subcommand(
      "qspace-verify", "Check family (3) symbolically on (Q^d, +)");
  qspace_cmd->add_option("path", cfg.input, "Draw file (default: seeded grid)");
  qspace_cmd->add_flag("--grid", "Use the seeded default grid");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*validate) {
      return cmd_validate(cfg);
    }
    if (*classify) {
      return cmd_classify(cfg);
    }
    if (*verify) {
      return cmd_verify(cfg);
    }
    if (*census) {
      return cmd_census(cfg);
    }
    if (*qspace_cmd) {
      return cmd_qspace(cfg);
    }
  } catch (BlanketAssumptionViolated const& e) {
    std::cout << "invalid: " << e.what() << '\n';
    return kFailed;
  } catch (AssocFail const& e) {
    std::cout << "invalid: " << e.what() << '\n';
    return kFailed;
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (PreconditionError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (nlohmann::json::exception const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
