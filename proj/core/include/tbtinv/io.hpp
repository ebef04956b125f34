#ifndef TBTINV_IO_HPP
#define TBTINV_IO_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "tbtinv/extraction.hpp"
#include "tbtinv/symbol.hpp"
#include "tbtinv/verify.hpp"

namespace tbtinv::io {

/// File formats (all JSON):
///   symbol: {"kind":"tbt-symbol","m":M,"n":N,
///            "coeffs":[{"r":r,"s":s,"re":x,"im":y}, ...]}
///           all (2n-1)(2m-1) pairs required, duplicates rejected
///   gpair:  {"kind":"gpair","m":M,"n":N,"g12":[[[re,im],...],...]}
///           row-major 2m x 2n; g21 is always derived, never stored
///   matrix: {"kind":"cmatrix","rows":R,"cols":C,"data":[[[re,im],...],...]}
///   report: flat object of ReconstructionReport fields plus per-criterion
///           "pass" booleans

nlohmann::json symbol_to_json(const TbtSymbol& sym);
TbtSymbol symbol_from_json(const nlohmann::json& j);

nlohmann::json gpair_to_json(const GPair& gp);
GPair gpair_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const CMat& a);
CMat matrix_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ReconstructionReport& rep);

void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

TbtSymbol read_symbol(const std::string& path);
GPair read_gpair(const std::string& path);
CMat read_matrix(const std::string& path);

}  // namespace tbtinv::io

#endif
