#ifndef WILSON_ORACLE_HPP_
#define WILSON_ORACLE_HPP_

// Independent verification of the classifications. Both Wilson variants are
// linear in f once g is fixed, so the exact solution space {f} for a given g
// is the kernel of an |S|^2 x |S| matrix; that kernel is compared as a
// subspace against the span predicted by the solution families.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wilson/equations.hpp"
#include "wilson/seed.hpp"

namespace wilson {

  //! Row (x, y) = x*|S| + y holds the f-coefficients of
  //! f(xy) + mu(y) f(sigma(y) x) - 2 f(x) g(y)     (wilson1), or
  //! f(xy) + mu(y) f(sigma(y) x) - 2 f(y) g(x)     (wilson2).
  Matrix<Cyclotomic> wilson_system(Equation                 eq,
                                   SFunc const&             g,
                                   StructureInstance const& ctx);

  //! Basis (columns) of {f : (f, g) solves eq}.
  Matrix<Cyclotomic> kernel_f_given_g(Equation                 eq,
                                      SFunc const&             g,
                                      StructureInstance const& ctx);

  //! The f-space the classification predicts for this g. `multiplicative`
  //! must be the output of enumerate_multiplicative for ctx.table.
  Matrix<Cyclotomic> predicted_space(Equation                  eq,
                                     SFunc const&              g,
                                     StructureInstance const&  ctx,
                                     std::vector<SFunc> const& multiplicative);
  Matrix<Cyclotomic> predicted_space(Equation                 eq,
                                     SFunc const&             g,
                                     StructureInstance const& ctx);

  //! Where a candidate g came from, and the kernel dimension the classification
  //! assigns to it.
  enum class GShape {
    zero,            // g = 0
    conjugate_pair,  // g = (chi + chi*)/2, chi != chi*
    self_conjugate,  // g = chi = chi* != 0
    other_pair,      // (chi1 + chi2)/2 not of the above shapes
    random
  };

  std::string to_string(GShape shape);

  struct CandidateG {
    SFunc       g;
    GShape      shape;
    std::string origin;  // e.g. "pair(2,5)" or "random#7"
  };

  //! Every distinct (chi1 + chi2)/2 with chi1, chi2 multiplicative
  //! (including 0), classified by shape.
  std::vector<CandidateG>
  pair_candidates(StructureInstance const&  ctx,
                  std::vector<SFunc> const& multiplicative);

  //! Seed-fixed uniform draws from a pool of small rationals and roots of
  //! unity in the session field.
  std::vector<CandidateG> random_candidates(StructureInstance const& ctx,
                                            std::size_t              count,
                                            std::uint64_t            seed);

  struct CompletenessReport {
    std::string        instance_id;
    Equation           equation;
    CandidateG         candidate;
    Matrix<Cyclotomic> kernel_basis;
    Matrix<Cyclotomic> predicted_basis;
    bool               pass = false;

    Index kernel_dim() const noexcept {
      return kernel_basis.cols();
    }
    Index predicted_dim() const noexcept {
      return predicted_basis.cols();
    }
  };

  struct VerifyOptions {
    std::size_t   random_g_count = 20;
    std::uint64_t seed           = 0;
    //! Test hook: drop the last predicted basis vector to exercise the
    //! failure path.
    bool corrupt_predicted = false;
  };

  //! Compares kernel and predicted spaces for every pair candidate and
  //! `random_g_count` random draws. Failing reports are kept, never dropped.
  std::vector<CompletenessReport>
  verify_completeness(Equation                  eq,
                      StructureInstance const&  ctx,
                      VerifyOptions const&      options,
                      std::vector<SFunc> const& multiplicative,
                      std::string const&        instance_id = "");
  std::vector<CompletenessReport>
  verify_completeness(Equation                 eq,
                      StructureInstance const& ctx,
                      VerifyOptions const&     options,
                      std::string const&       instance_id = "");

  //! Dimension the classification gives for a shape (random -> 0 unless
  //! the draw happens to be a family g, which is why random candidates are
  //! judged by the predicted space instead). Returns -1 for "not fixed".
  Index expected_kernel_dim(Equation eq, GShape shape);

  struct CheckReport {
    bool        pass = true;
    std::string detail;
  };

  //! Kernel of F(xy) + chi(y) F(phi(y) x) = 0 for a homomorphism phi;
  //! checks that every kernel member vanishes on S*S*S and that the kernel
  //! is zero when S = S*S.
  struct VanishingKernelReport : CheckReport {
    Matrix<Cyclotomic> kernel_basis;
  };
  VanishingKernelReport vanishing_kernel_check(SFunc const&                chi,
                                               std::vector<Element> const& phi,
                                               CayleyTable const&          s);

  //! Joint kernel of f(xy) - F(yx) = 0 in (f, F); checks f = F on each
  //! basis vector. Throws PreconditionError unless S = S*S.
  struct CommutationReport : CheckReport {
    Index kernel_dim = 0;
  };
  CommutationReport commutation_check(CayleyTable const& s);

  //! Exhaustive search for solutions g of the d'Alembert variant with values
  //! in {(u + v)/2 : u, v in {0} U L-th roots of unity}, L the period lcm,
  //! each matched against (m + m*)/2 for the enumerated m. Completeness is
  //! only established over this grid.
  struct DalembertGridReport : CheckReport {
    std::size_t        grid_size = 0;
    std::vector<SFunc> solutions;
    std::vector<SFunc> unmatched;
  };
  DalembertGridReport dalembert_grid_completeness(
      StructureInstance const&  ctx,
      std::vector<SFunc> const& multiplicative);

  //! For each g: if the first equation has a nonzero central solution f
  //! then g must solve the mu-d'Alembert equation. Kernels with noncentral
  //! members are counted, not judged.
  struct CentralSolutionReport : CheckReport {
    std::size_t checked               = 0;
    std::size_t with_central_solution = 0;
    std::size_t noncentral_kernels    = 0;
  };
  CentralSolutionReport central_solution_check(StructureInstance const&       ctx,
                                               std::vector<CandidateG> const& candidates);

  // ---- census ----

  struct CheckCounter {
    std::size_t checked = 0;
    std::size_t failed  = 0;
  };

  struct CensusFailure {
    std::size_t order;
    std::size_t table_index;
    CayleyTable table;
    Involution  sigma;
    SFunc       mu;
    std::string check;
    std::string detail;
  };

  struct OrderSummary {
    std::size_t                         order           = 0;
    std::size_t                         scanned         = 0;
    std::size_t                         square_generated = 0;
    std::size_t                         instances       = 0;
    std::map<std::string, CheckCounter> checks;
    //! "eq1:conjugate_pair:2" -> count, i.e. equation, shape, kernel dim.
    std::map<std::string, std::size_t> kernel_dims;

    std::size_t failures() const;
  };

  struct CensusOptions {
    std::size_t   max_order                = kDefaultMaxOrder;
    std::size_t   min_order                = 1;
    std::uint64_t seed                     = 0;
    std::size_t   random_g_count           = 20;
    std::size_t   jobs                     = 1;
    std::size_t   dalembert_grid_max_order = 3;
  };

  struct CensusReport {
    CensusOptions              options;
    std::vector<OrderSummary>  orders;
    std::vector<CensusFailure> failures;

    std::size_t total_failures() const;
    //! Merged counter over all orders.
    CheckCounter check(std::string const& name) const;
  };

  //! Streams every table of order min_order..max_order, and on each
  //! square-generated one runs, for every (sigma, mu): family residuals,
  //! completeness for both equations, the structural checks and the finite
  //! obstruction to family (3). Deterministic in (options).
  CensusReport census_verify(CensusOptions const& options);

}  // namespace wilson

#endif  // WILSON_ORACLE_HPP_
