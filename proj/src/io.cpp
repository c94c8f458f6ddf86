#include "dwigner/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace dwigner::io {

using nlohmann::json;

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

double parse_double(std::string_view token) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value))
    throw InputError("not a number: '" + std::string(token) + "'");
  return value;
}

long long parse_integer(std::string_view token) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw InputError("not an integer: '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int side_to_n(std::size_t side) {
  if (side < 4 || side % 4 != 0) throw InputError("table side must be 2N with N even, got " + std::to_string(side));
  return static_cast<int>(side / 2);
}

Complex pair_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("matrix entries must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

int read_n(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer()) throw InputError("missing integer field 'n'");
  const int n = j["n"].get<int>();
  if (n < 1) throw InputError("'n' must be positive");
  return n;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string format_table_csv(const WignerTable& table) {
  std::string out;
  const auto& v = table.values();
  for (Eigen::Index q = 0; q < v.rows(); ++q) {
    for (Eigen::Index p = 0; p < v.cols(); ++p) {
      if (p) out += ',';
      out += format_double(v(q, p));
    }
    out += '\n';
  }
  return out;
}

WignerTable parse_table_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    std::vector<double> row;
    for (auto cell : split(line, ',')) row.push_back(parse_double(cell));
    rows.push_back(std::move(row));
  }
  const int n = side_to_n(rows.size());
  RealMatrix values(2 * n, 2 * n);
  for (int q = 0; q < 2 * n; ++q) {
    if (rows[q].size() != rows.size()) throw InputError("CSV table is not square");
    for (int p = 0; p < 2 * n; ++p) values(q, p) = rows[q][p];
  }
  return WignerTable(n, std::move(values));
}

json table_to_json(const WignerTable& table) {
  json rows = json::array();
  for (Eigen::Index q = 0; q < table.values().rows(); ++q) {
    json row = json::array();
    for (Eigen::Index p = 0; p < table.values().cols(); ++p) row.push_back(table.values()(q, p));
    rows.push_back(std::move(row));
  }
  return {{"n", table.n()}, {"grid", "2N"}, {"values", std::move(rows)}};
}

WignerTable table_from_json(const json& j) {
  if (!j.is_object()) throw InputError("table JSON must be an object");
  const int n = read_n(j);
  if (j.contains("grid") && j["grid"] != "2N") throw InputError("only the 2N grid is supported");
  if (!j.contains("values") || !j["values"].is_array()) throw InputError("missing 'values'");
  const auto& rows = j["values"];
  if (rows.size() != static_cast<std::size_t>(2 * n)) throw InputError("'values' must have 2N rows");
  if (n % 2 != 0) throw InputError("N must be even");
  RealMatrix values(2 * n, 2 * n);
  for (int q = 0; q < 2 * n; ++q) {
    if (!rows[q].is_array() || rows[q].size() != static_cast<std::size_t>(2 * n))
      throw InputError("'values' rows must have 2N entries");
    for (int p = 0; p < 2 * n; ++p) {
      if (!rows[q][p].is_number()) throw InputError("table entries must be numbers");
      values(q, p) = rows[q][p].get<double>();
    }
  }
  return WignerTable(n, std::move(values));
}

std::string format_table_pgm(const WignerTable& table) {
  const auto& v = table.values();
  const double scale = v.cwiseAbs().maxCoeff();
  std::ostringstream out;
  out << "P5\n" << v.cols() << ' ' << v.rows() << "\n255\n";
  std::string pixels;
  pixels.reserve(static_cast<std::size_t>(v.size()));
  for (Eigen::Index q = 0; q < v.rows(); ++q) {
    for (Eigen::Index p = 0; p < v.cols(); ++p) {
      const double level = scale > 0.0 ? 128.0 + std::round(127.0 * v(q, p) / scale) : 128.0;
      pixels.push_back(static_cast<char>(static_cast<unsigned char>(std::clamp(level, 0.0, 255.0))));
    }
  }
  out << pixels;
  return out.str();
}

WignerTable parse_table(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw InputError("empty table");
  if (text[first] == '{') return table_from_json(parse_json(text));
  return parse_table_csv(text);
}

WignerTable read_table_file(const std::filesystem::path& path) { return parse_table(read_text_file(path)); }

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, int n) {
  if (!j.is_array()) throw InputError("matrix must be an array");
  ComplexMatrix m(n, n);
  const bool flat = !j.empty() && j[0].is_array() && !j[0].empty() && j[0][0].is_number();
  if (flat) {
    if (j.size() != static_cast<std::size_t>(n) * n) throw InputError("flat matrix must have n*n entries");
    for (int i = 0; i < n * n; ++i) m(i / n, i % n) = pair_from_json(j[i]);
    return m;
  }
  if (j.size() != static_cast<std::size_t>(n)) throw InputError("matrix must have n rows");
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != static_cast<std::size_t>(n)) throw InputError("matrix rows must have n entries");
    for (int k = 0; k < n; ++k) m(i, k) = pair_from_json(j[i][k]);
  }
  return m;
}

json density_to_json(const ComplexMatrix& rho) {
  return {{"n", rho.rows()}, {"matrix", matrix_to_json(rho)}};
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  const json j = parse_json(read_text_file(path));
  if (!j.is_object() || !j.contains("matrix")) throw InputError(path.string() + ": expected {n, matrix}");
  return matrix_from_json(j["matrix"], read_n(j));
}

json channel_to_json(const KrausChannel& channel) {
  json kraus = json::array();
  for (const auto& v : channel.kraus()) kraus.push_back(matrix_to_json(v));
  return {{"n", channel.dim()}, {"kraus", std::move(kraus)}};
}

KrausChannel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kraus") || !j["kraus"].is_array())
    throw InputError("expected {n, kraus: [...]}");
  const int n = read_n(j);
  std::vector<ComplexMatrix> kraus;
  for (const auto& m : j["kraus"]) kraus.push_back(matrix_from_json(m, n));
  try {
    return KrausChannel(std::move(kraus));
  } catch (const Error& e) {
    throw InputError(std::string("invalid channel: ") + e.what());
  }
}

KrausChannel read_channel_file(const std::filesystem::path& path) {
  return channel_from_json(parse_json(read_text_file(path)));
}

StateSpec parse_state_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("state spec must look like ket:<q0>, sup:<q0>,<q1>,<phi> or file:<path>");
  const auto kind = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  if (kind == "ket") return BasisKet{static_cast<int>(parse_integer(rest))};
  if (kind == "sup") {
    const auto parts = split(rest, ',');
    if (parts.size() != 3) throw InputError("sup needs <q0>,<q1>,<phi>");
    return Superposition{static_cast<int>(parse_integer(parts[0])), static_cast<int>(parse_integer(parts[1])),
                         parse_double(parts[2])};
  }
  if (kind == "file") return DensitySpec{read_matrix_file(std::filesystem::path(std::string(rest)))};
  throw InputError("unknown state kind '" + std::string(kind) + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << contents;
}

}  // namespace dwigner::io
