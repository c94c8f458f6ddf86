#pragma once

// File formats: Wigner tables (CSV / JSON / PGM), density and unitary
// matrices (JSON), Kraus channels (JSON) and the state-spec grammar.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dwigner/channels.hpp"
#include "dwigner/wigner.hpp"

namespace dwigner::io {

/// Malformed or unreadable input (maps to CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 2N lines of 2N comma-separated values, 17 significant digits.
std::string format_table_csv(const WignerTable& table);
WignerTable parse_table_csv(std::string_view text);

/// {"n": N, "grid": "2N", "values": [[...], ...]}
nlohmann::json table_to_json(const WignerTable& table);
WignerTable table_from_json(const nlohmann::json& j);

/// Binary 8-bit PGM, one pixel per cell, row q, column p;
/// gray = 128 + round(127·W/max|W|).
std::string format_table_pgm(const WignerTable& table);

/// JSON when the first non-blank character is '{', CSV otherwise.
WignerTable parse_table(std::string_view text);
WignerTable read_table_file(const std::filesystem::path& path);

/// [[[re, im], ...], ...] (rows of pairs).
nlohmann::json matrix_to_json(const ComplexMatrix& m);
/// Accepts rows of pairs, or a flat row-major list of n² pairs.
ComplexMatrix matrix_from_json(const nlohmann::json& j, int n);

/// {"n": N, "matrix": ...}
nlohmann::json density_to_json(const ComplexMatrix& rho);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

/// {"n": N, "kraus": [matrix, ...]}; validation failures report the
/// trace-preservation residual.
nlohmann::json channel_to_json(const KrausChannel& channel);
KrausChannel channel_from_json(const nlohmann::json& j);
KrausChannel read_channel_file(const std::filesystem::path& path);

/// ket:<q0> | sup:<q0>,<q1>,<phi-radians> | file:<density-json-path>
StateSpec parse_state_spec(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace dwigner::io
