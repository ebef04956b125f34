#include "tbtinv/io.hpp"

#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <set>

namespace tbtinv::io {

using nlohmann::json;

namespace {

json finite_or_sentinel(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json complex_entry(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::runtime_error("expected [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_data(const CMat& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < a.cols(); ++k) row.push_back(complex_entry(a(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat matrix_from_data(const json& data, Eigen::Index rows, Eigen::Index cols,
                      const char* what) {
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows) {
    throw std::runtime_error(std::string(what) + ": row count mismatch");
  }
  CMat a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = data[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::runtime_error(std::string(what) + ": column count mismatch at row " +
                               std::to_string(i));
    }
    for (Eigen::Index k = 0; k < cols; ++k) a(i, k) = complex_from(row[k]);
  }
  return a;
}

void expect_kind(const json& j, const std::string& kind) {
  if (!j.is_object() || j.value("kind", "") != kind) {
    throw std::runtime_error("expected JSON object with kind \"" + kind + "\"");
  }
}

}  // namespace

json symbol_to_json(const TbtSymbol& sym) {
  json coeffs = json::array();
  for (int r = -(sym.n - 1); r <= sym.n - 1; ++r)
    for (int s = -(sym.m - 1); s <= sym.m - 1; ++s)
      coeffs.push_back({{"r", r},
                        {"s", s},
                        {"re", sym.at(r, s).real()},
                        {"im", sym.at(r, s).imag()}});
  return {{"kind", "tbt-symbol"}, {"m", sym.m}, {"n", sym.n}, {"coeffs", coeffs}};
}

TbtSymbol symbol_from_json(const json& j) {
  expect_kind(j, "tbt-symbol");
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  if (m < 1 || n < 1) throw std::runtime_error("symbol: m, n must be >= 1");
  TbtSymbol sym(m, n);
  std::set<std::pair<int, int>> seen;
  for (const auto& c : j.at("coeffs")) {
    const int r = c.at("r").get<int>();
    const int s = c.at("s").get<int>();
    if (r < -(n - 1) || r > n - 1 || s < -(m - 1) || s > m - 1) {
      throw std::runtime_error("symbol: coefficient index (" + std::to_string(r) + ", " +
                               std::to_string(s) + ") out of range");
    }
    if (!seen.insert({r, s}).second) {
      throw std::runtime_error("symbol: duplicate coefficient (" + std::to_string(r) +
                               ", " + std::to_string(s) + ")");
    }
    sym.at(r, s) = Complex{c.at("re").get<double>(), c.at("im").get<double>()};
  }
  if (static_cast<int>(seen.size()) != (2 * n - 1) * (2 * m - 1)) {
    throw std::runtime_error("symbol: expected " +
                             std::to_string((2 * n - 1) * (2 * m - 1)) +
                             " coefficients, got " + std::to_string(seen.size()));
  }
  if (!all_finite(sym.coeffs)) throw std::runtime_error("symbol: non-finite coefficient");
  return sym;
}

json gpair_to_json(const GPair& gp) {
  return {{"kind", "gpair"}, {"m", gp.m}, {"n", gp.n}, {"g12", matrix_data(gp.g12)}};
}

GPair gpair_from_json(const json& j) {
  expect_kind(j, "gpair");
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  if (m < 1 || n < 1) throw std::runtime_error("gpair: m, n must be >= 1");
  CMat g12 = matrix_from_data(j.at("g12"), 2 * m, 2 * n, "gpair");
  return GPair::from_g12(std::move(g12), m, n);
}

json matrix_to_json(const CMat& a) {
  return {{"kind", "cmatrix"},
          {"rows", a.rows()},
          {"cols", a.cols()},
          {"data", matrix_data(a)}};
}

CMat matrix_from_json(const json& j) {
  expect_kind(j, "cmatrix");
  return matrix_from_data(j.at("data"), j.at("rows").get<Eigen::Index>(),
                          j.at("cols").get<Eigen::Index>(), "cmatrix");
}

json report_to_json(const ReconstructionReport& rep) {
  json j{{"kind", "report"}, {"m", rep.m}, {"n", rep.n}};
  auto put = [&](const char* key, const std::optional<double>& v) {
    if (v) j[key] = finite_or_sentinel(*v);
  };
  put("identity_residual_p1", rep.identity_residual_p1);
  put("identity_residual_p2", rep.identity_residual_p2);
  put("aux_residual_12", rep.aux_residual_12);
  put("aux_residual_21", rep.aux_residual_21);
  if (rep.displacement_rank_1) j["displacement_rank_1"] = *rep.displacement_rank_1;
  if (rep.displacement_rank_2) j["displacement_rank_2"] = *rep.displacement_rank_2;
  put("g21_discrepancy", rep.g21_discrepancy);
  put("theta_leading_deviation", rep.theta_leading_deviation);
  put("theta_factor_residual", rep.theta_factor_residual);
  put("omega_branch_gap", rep.omega_branch_gap);
  put("scalar_probe_residual", rep.scalar_probe_residual);
  put("annihilation_residual", rep.annihilation_residual);
  put("pf_det_residual", rep.pf_det_residual);
  put("roundtrip_error", rep.roundtrip_error);
  put("condition_t", rep.condition_t);
  put("condition_r", rep.condition_r);
  put("tbt_deviation", rep.tbt_deviation);
  json pass = json::object();
  for (const auto& [name, ok] : rep.pass) pass[name] = ok;
  j["pass"] = pass;
  j["failures"] = rep.failures;
  j["all_pass"] = rep.all_pass();
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << '\n';
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

TbtSymbol read_symbol(const std::string& path) {
  return symbol_from_json(read_json_file(path));
}

GPair read_gpair(const std::string& path) {
  return gpair_from_json(read_json_file(path));
}

CMat read_matrix(const std::string& path) {
  return matrix_from_json(read_json_file(path));
}

}  // namespace tbtinv::io
