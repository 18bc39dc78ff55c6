#include "wilson/serialize.hpp"

#include <fstream>
#include <sstream>

#include "wilson/errors.hpp"

#ifndef WILSON_VERSION
#define WILSON_VERSION "unknown"
#endif

namespace wilson::io {

  char const* tool_version() noexcept {
    return WILSON_VERSION;
  }

  json report_header(std::uint64_t seed) {
    return json{{"tool", "wilson"}, {"version", tool_version()}, {"seed", seed}};
  }

  json parse_json(std::string_view text) {
    try {
      return json::parse(text.begin(), text.end());
    } catch (json::parse_error const& e) {
      std::size_t line = 1, column = 1;
      for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      throw ParseError("malformed JSON", line, column);
    }
  }

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  namespace {
    [[noreturn]] void bad(std::string const& what) {
      throw Error("invalid input: " + what);
    }

    std::string integer_text(json const& j) {
      if (j.is_string()) {
        return j.get<std::string>();
      }
      if (j.is_number_integer()) {
        return j.dump();
      }
      bad("expected an integer or a decimal string, got " + j.dump());
    }
  }  // namespace

  // ---- scalars ----

  json to_json(Rational const& value) {
    return json::array({value.numerator_string(), value.denominator_string()});
  }

  Rational rational_from_json(json const& j) {
    try {
      if (j.is_array() && j.size() == 2) {
        return Rational::from_strings(integer_text(j[0]), integer_text(j[1]));
      }
      if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
      }
      if (j.is_number_integer()) {
        return Rational::parse(j.dump());
      }
    } catch (Error const&) {
      throw;
    } catch (std::exception const& e) {
      bad(std::string("rational ") + j.dump() + ": " + e.what());
    }
    bad("expected a rational, got " + j.dump());
  }

  json to_json(Cyclotomic const& value) {
    json coeffs = json::array();
    for (auto const& c : value.coeffs()) {
      coeffs.push_back(to_json(c));
    }
    return json{{"conductor", value.conductor()}, {"coeffs", std::move(coeffs)}};
  }

  Cyclotomic scalar_from_json(json const& j) {
    if (!j.is_object()) {
      return Cyclotomic(rational_from_json(j));
    }
    if (!j.contains("conductor") || !j.contains("coeffs")) {
      bad("scalar object needs \"conductor\" and \"coeffs\"");
    }
    auto const n = j.at("conductor").get<long long>();
    if (n < 1 || n > 100000) {
      bad("conductor out of range: " + std::to_string(n));
    }
    auto const&        field = CyclotomicField::get(static_cast<unsigned>(n));
    Cyclotomic::Coeffs coeffs;
    for (auto const& c : j.at("coeffs")) {
      coeffs.push_back(rational_from_json(c));
    }
    if (coeffs.size() != field.degree()) {
      bad("conductor " + std::to_string(n) + " needs "
          + std::to_string(field.degree()) + " coefficients, got "
          + std::to_string(coeffs.size()));
    }
    return Cyclotomic(field, std::move(coeffs));
  }

  json to_json(SFunc const& f) {
    json out = json::array();
    for (Index i = 0; i < f.size(); ++i) {
      out.push_back(to_json(f(i)));
    }
    return out;
  }

  SFunc function_from_json(json const& j) {
    if (!j.is_array()) {
      bad("expected an array of scalars");
    }
    SFunc f(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
      f(static_cast<Index>(i)) = scalar_from_json(j[i]);
    }
    return f;
  }

  json basis_to_json(Matrix<Cyclotomic> const& columns) {
    json out = json::array();
    for (Index k = 0; k < columns.cols(); ++k) {
      out.push_back(to_json(SFunc(columns.col(k))));
    }
    return out;
  }

  // ---- tables and instances ----

  json to_json(CayleyTable const& table) {
    json rows = json::array();
    for (Element x = 0; x < table.order(); ++x) {
      json row = json::array();
      for (Element y = 0; y < table.order(); ++y) {
        row.push_back(table(x, y));
      }
      rows.push_back(std::move(row));
    }
    return json{{"order", table.order()}, {"table", std::move(rows)}};
  }

  CayleyTable table_from_json(json const& j) {
    json const& rows = j.is_object() ? j.at("table") : j;
    if (!rows.is_array() || rows.empty()) {
      bad("a table needs at least one row");
    }
    std::size_t const n = rows.size();
    if (j.is_object() && j.contains("order") && j.at("order").get<std::size_t>() != n) {
      bad("\"order\" does not match the number of rows");
    }
    std::vector<Element> entries;
    for (auto const& row : rows) {
      if (!row.is_array() || row.size() != n) {
        bad("every row must have " + std::to_string(n) + " entries");
      }
      for (auto const& v : row) {
        if (!v.is_number_integer()) {
          bad("table entries must be integers");
        }
        auto const value = v.get<long long>();
        if (value < 0) {
          throw IndexOutOfRange(entries.size() / n, entries.size() % n, 0);
        }
        entries.push_back(static_cast<Element>(value));
      }
    }
    CayleyTable table(n, std::move(entries));
    validate(table);
    return table;
  }

  CayleyTable parse_semigroup(std::string_view text) {
    auto const first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && (text[first] == '{' || text[first] == '[')) {
      return table_from_json(parse_json(text));
    }
    CayleyTable table = parse_semigroup_text(text);
    validate(table);
    return table;
  }

  CayleyTable load_semigroup(std::filesystem::path const& path) {
    return parse_semigroup(read_file(path));
  }

  RawInstance parse_instance(json const& j, std::filesystem::path const& base) {
    RawInstance raw;
    if (!j.is_object() || !j.contains("semigroup")) {
      raw.table = table_from_json(j);
      return raw;
    }
    json const& s = j.at("semigroup");
    if (s.is_string()) {
      auto path = std::filesystem::path(s.get<std::string>());
      raw.table = load_semigroup(path.is_absolute() ? path : base / path);
    } else {
      raw.table = table_from_json(s);
    }
    if (j.contains("sigma")) {
      Involution sigma;
      for (auto const& v : j.at("sigma")) {
        auto const value = v.get<long long>();
        if (value < 0 || static_cast<std::size_t>(value) >= raw.table.order()) {
          bad("sigma entry " + std::to_string(value) + " out of range");
        }
        sigma.perm.push_back(static_cast<Element>(value));
      }
      raw.sigma = std::move(sigma);
    }
    if (j.contains("mu")) {
      std::vector<Cyclotomic> mu;
      for (auto const& v : j.at("mu")) {
        mu.push_back(scalar_from_json(v));
      }
      raw.mu = std::move(mu);
    }
    return raw;
  }

  RawInstance load_instance_file(std::filesystem::path const& path) {
    std::string const text  = read_file(path);
    auto const        first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) {
      return RawInstance{parse_semigroup(text), std::nullopt, std::nullopt};
    }
    return parse_instance(parse_json(text), path.parent_path());
  }

  StructureInstance build_instance(RawInstance const& raw) {
    Involution sigma = raw.sigma.value_or(identity_involution(raw.table.order()));
    if (sigma.perm.size() != raw.table.order()) {
      throw BlanketAssumptionViolated("sigma has the wrong length");
    }
    if (!raw.mu) {
      return make_instance(raw.table, std::move(sigma));
    }
    if (raw.mu->size() != raw.table.order()) {
      throw BlanketAssumptionViolated("mu has the wrong length");
    }
    SFunc mu(static_cast<Index>(raw.mu->size()));
    for (std::size_t i = 0; i < raw.mu->size(); ++i) {
      mu(static_cast<Index>(i)) = (*raw.mu)[i];
    }
    try {
      return make_instance(raw.table, std::move(sigma), std::move(mu));
    } catch (ConductorMismatch const&) {
      throw BlanketAssumptionViolated(
          "mu takes values outside the field of the semigroup's periods");
    }
  }

  json to_json(StructureInstance const& ctx) {
    return json{{"semigroup", to_json(ctx.table)},
                {"sigma", ctx.sigma.perm},
                {"mu", to_json(ctx.mu)}};
  }

  // ---- reports ----

  json to_json(SolutionFamily const& family) {
    json out{{"tag", to_string(family.tag)},
             {"parameters", family.parameters},
             {"constraints", family.constraints}};
    if (family.chi) {
      out["chi"] = to_json(*family.chi);
    }
    if (family.chi_star) {
      out["chi_star"] = to_json(*family.chi_star);
    }
    if (family.chi) {
      std::vector<std::size_t> members;
      for (Index x = 0; x < family.chi->size(); ++x) {
        if ((*family.chi)(x).is_zero()) {
          members.push_back(static_cast<std::size_t>(x));
        }
      }
      out["null_ideal"]
          = json{{"definition", kNullIdealDefinition}, {"members", members}};
    }
    if (family.tag == FamilyTag::eq1_f3) {
      out["additive_basis"] = basis_to_json(family.additive_basis);
    }
    return out;
  }

  json to_json(CompletenessReport const& report) {
    return json{{"instance", report.instance_id},
                {"equation", to_string(report.equation)},
                {"g", to_json(report.candidate.g)},
                {"shape", to_string(report.candidate.shape)},
                {"origin", report.candidate.origin},
                {"kernel_dim", report.kernel_dim()},
                {"predicted_dim", report.predicted_dim()},
                {"kernel_basis", basis_to_json(report.kernel_basis)},
                {"predicted_basis", basis_to_json(report.predicted_basis)},
                {"pass", report.pass}};
  }

  json to_json(CensusReport const& report) {
    json out                 = report_header(report.options.seed);
    out["command"]           = "census";
    out["max_order"]         = report.options.max_order;
    out["min_order"]         = report.options.min_order;
    out["random_g"]          = report.options.random_g_count;
    out["dalembert_grid_max_order"] = report.options.dalembert_grid_max_order;
    json orders              = json::array();
    std::size_t scanned      = 0;
    for (auto const& o : report.orders) {
      json checks = json::object();
      for (auto const& [name, c] : o.checks) {
        checks[name] = json{{"checked", c.checked}, {"failed", c.failed}};
      }
      json dims = json::object();
      for (auto const& [key, count] : o.kernel_dims) {
        dims[key] = count;
      }
      orders.push_back(json{{"order", o.order},
                            {"scanned", o.scanned},
                            {"square_generated", o.square_generated},
                            {"instances", o.instances},
                            {"failures", o.failures()},
                            {"checks", std::move(checks)},
                            {"kernel_dims", std::move(dims)}});
      scanned = o.scanned;
    }
    out["scanned"]  = scanned;
    out["failures"] = report.total_failures();
    out["orders"]   = std::move(orders);
    json failures   = json::array();
    for (auto const& f : report.failures) {
      failures.push_back(json{{"order", f.order},
                              {"table_index", f.table_index},
                              {"semigroup", to_json(f.table)},
                              {"sigma", f.sigma.perm},
                              {"mu", to_json(f.mu)},
                              {"check", f.check},
                              {"detail", f.detail}});
    }
    out["counterexamples"] = std::move(failures);
    return out;
  }

  // ---- qspace ----

  json to_json(qspace::GaussianRational const& g) {
    if (g.im().is_zero()) {
      return g.re().to_string();
    }
    return json::array({g.re().to_string(), g.im().to_string()});
  }

  qspace::GaussianRational gaussian_from_json(json const& j) {
    if (j.is_array()) {
      if (j.size() != 2) {
        bad("a gaussian rational is [re, im], got " + j.dump());
      }
      return {rational_from_json(j[0]), rational_from_json(j[1])};
    }
    return qspace::GaussianRational(rational_from_json(j));
  }

  json to_json(qspace::ExpCoeff const& c) {
    if (c.pi.is_zero()) {
      return to_json(c.plain);
    }
    return json{{"plain", to_json(c.plain)}, {"pi", to_json(c.pi)}};
  }

  qspace::ExpCoeff exp_coeff_from_json(json const& j) {
    if (j.is_object()) {
      qspace::ExpCoeff c;
      if (j.contains("plain")) {
        c.plain = gaussian_from_json(j.at("plain"));
      }
      if (j.contains("pi")) {
        c.pi = gaussian_from_json(j.at("pi"));
      }
      return c;
    }
    return qspace::ExpCoeff{gaussian_from_json(j), {}};
  }

  json to_json(qspace::LinForm const& form) {
    json out = json::array();
    for (auto const& c : form.coeffs) {
      out.push_back(to_json(c));
    }
    return out;
  }

  qspace::LinForm lin_form_from_json(json const& j) {
    if (!j.is_array()) {
      bad("a linear form is an array of coefficients");
    }
    qspace::LinForm form;
    for (auto const& c : j) {
      form.coeffs.push_back(exp_coeff_from_json(c));
    }
    return form;
  }

  json to_json(qspace::IntMatrix const& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) {
        row.push_back(m(i, j));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  qspace::IntMatrix int_matrix_from_json(json const& j) {
    if (!j.is_array() || j.empty()) {
      bad("a matrix is a nonempty array of rows");
    }
    qspace::IntMatrix m(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_array() || j[i].size() != m.cols()) {
        bad("ragged matrix");
      }
      for (std::size_t k = 0; k < m.cols(); ++k) {
        m(i, k) = j[i][k].get<std::int64_t>();
      }
    }
    return m;
  }

  json to_json(qspace::ExpPoly const& p, std::vector<std::string> const& names) {
    json terms = json::array();
    for (auto const& t : p.terms()) {
      json linear = json::array();
      for (auto const& c : t.affine.linear) {
        linear.push_back(to_json(c));
      }
      terms.push_back(json{{"affine",
                            json{{"constant", to_json(t.affine.constant)},
                                 {"linear", std::move(linear)}}},
                           {"exponent", to_json(t.exponent)}});
    }
    return json{{"vars", p.vars()},
                {"terms", std::move(terms)},
                {"text", p.to_string(names)}};
  }

  json to_json(qspace::Draw const& draw) {
    return json{{"d", draw.d},
                {"sigma", to_json(draw.sigma)},
                {"chi_exponent", to_json(draw.chi_exponent)},
                {"A", to_json(draw.additive)},
                {"c", to_json(draw.c)},
                {"seed", draw.seed}};
  }

  qspace::Draw draw_from_json(json const& j) {
    if (!j.is_object()) {
      bad("a draw is a JSON object");
    }
    for (char const* key : {"d", "sigma", "chi_exponent", "A", "c"}) {
      if (!j.contains(key)) {
        bad(std::string("draw is missing \"") + key + "\"");
      }
    }
    qspace::Draw draw;
    draw.d            = j.at("d").get<std::size_t>();
    draw.sigma        = int_matrix_from_json(j.at("sigma"));
    draw.chi_exponent = lin_form_from_json(j.at("chi_exponent"));
    draw.additive     = lin_form_from_json(j.at("A"));
    draw.c            = gaussian_from_json(j.at("c"));
    draw.seed         = j.value("seed", std::uint64_t{0});
    return draw;
  }

  json to_json(qspace::DrawResult const& result) {
    auto const names = qspace::residual_names(result.draw.d);
    json       out{{"draw", to_json(result.draw)},
                   {"mu_exponent", to_json(result.mu_exponent)},
                   {"family_empty", result.family_empty},
                   {"pass", result.pass()}};
    if (!result.family_empty) {
      out["residual"]      = to_json(result.residual, names);
      out["residual_zero"] = result.residual_zero;
    }
    if (result.twin_additive) {
      out["twin_A"]        = to_json(*result.twin_additive);
      out["twin_residual"] = to_json(*result.twin_residual, names);
      out["twin_nonzero"]  = result.twin_nonzero;
    }
    return out;
  }

  json to_json(qspace::GridReport const& report) {
    json out              = report_header(report.seed);
    out["command"]        = "qspace-verify";
    out["draws"]          = report.results.size();
    out["zero_residuals"] = report.zero_residuals;
    out["nonzero_twins"]  = report.nonzero_twins;
    out["pass"]           = report.pass();
    json results          = json::array();
    for (auto const& r : report.results) {
      results.push_back(to_json(r));
    }
    out["results"] = std::move(results);
    return out;
  }

}  // namespace wilson::io
