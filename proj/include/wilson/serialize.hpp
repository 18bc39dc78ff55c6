#ifndef WILSON_SERIALIZE_HPP_
#define WILSON_SERIALIZE_HPP_

// JSON forms of scalars, functions, tables, instances and reports.
//
//   scalar    {"conductor": n, "coeffs": [["num", "den"], ...]}
//             (input also accepts a bare integer or a "p/q" string)
//   function  [scalar, ...]
//   semigroup {"order": n, "table": [[...], ...]}
//   instance  {"semigroup": <path or inline>, "sigma": [perm], "mu": [...]}
//   draw      {"d": d, "sigma": [[...]], "chi_exponent": [...], "A": [...],
//              "c": gaussian, "seed": s}
//
// Gaussian rationals are "p/q", integers or ["re", "im"] pairs; exponent
// coefficients are gaussians or {"plain": gaussian, "pi": gaussian}.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wilson/oracle.hpp"
#include "wilson/qspace.hpp"

namespace wilson::io {

  using json = nlohmann::ordered_json;

  char const* tool_version() noexcept;

  //! {"tool": "wilson", "version": ..., "seed": seed}
  json report_header(std::uint64_t seed);

  //! Parses JSON text, converting syntax errors into ParseError with line
  //! and column.
  json parse_json(std::string_view text);
  std::string read_file(std::filesystem::path const& path);

  json       to_json(Rational const& value);
  Rational   rational_from_json(json const& j);
  json       to_json(Cyclotomic const& value);
  Cyclotomic scalar_from_json(json const& j);

  json  to_json(SFunc const& f);
  SFunc function_from_json(json const& j);
  json  basis_to_json(Matrix<Cyclotomic> const& columns);

  json        to_json(CayleyTable const& table);
  //! Accepts {"order", "table"} or a bare array of rows; validates range
  //! and associativity (IndexOutOfRange / AssocFail).
  CayleyTable table_from_json(json const& j);

  //! JSON when the text starts with '{' or '[', the plain text format
  //! ("order n" then n rows) otherwise.
  CayleyTable parse_semigroup(std::string_view text);
  CayleyTable load_semigroup(std::filesystem::path const& path);

  struct RawInstance {
    CayleyTable                       table;
    std::optional<Involution>         sigma;
    std::optional<std::vector<Cyclotomic>> mu;
  };
  //! The unvalidated contents of an instance file; relative semigroup
  //! paths resolve against `base`.
  RawInstance parse_instance(json const& j, std::filesystem::path const& base);
  //! Reads either an instance file or a bare semigroup file.
  RawInstance load_instance_file(std::filesystem::path const& path);
  //! Validates (throws BlanketAssumptionViolated) and builds the instance.
  StructureInstance build_instance(RawInstance const& raw);

  json to_json(StructureInstance const& ctx);
  json to_json(SolutionFamily const& family);
  json to_json(CompletenessReport const& report);
  json to_json(CensusReport const& report);

  json                       to_json(qspace::GaussianRational const& g);
  qspace::GaussianRational   gaussian_from_json(json const& j);
  json                       to_json(qspace::ExpCoeff const& c);
  qspace::ExpCoeff           exp_coeff_from_json(json const& j);
  json                       to_json(qspace::LinForm const& form);
  qspace::LinForm            lin_form_from_json(json const& j);
  json                       to_json(qspace::IntMatrix const& m);
  qspace::IntMatrix          int_matrix_from_json(json const& j);
  json                       to_json(qspace::ExpPoly const& p,
                                     std::vector<std::string> const& names = {});
  json                       to_json(qspace::Draw const& draw);
  qspace::Draw               draw_from_json(json const& j);
  json                       to_json(qspace::DrawResult const& result);
  json                       to_json(qspace::GridReport const& report);

}  // namespace wilson::io

#endif  // WILSON_SERIALIZE_HPP_
