#include "lqu/density_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lqu/errors.hpp"

namespace lqu::io {

using nlohmann::json;

namespace {

std::string where(std::size_t r, std::size_t c) {
  return "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]";
}

double component(const json& pair, std::size_t idx, std::size_t r, std::size_t c) {
  const json& v = pair[idx];
  if (!v.is_number()) {
    throw Error(ErrorKind::Parse, where(r, c) + (idx == 0 ? ".re" : ".im") + " is not a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::Parse, where(r, c) + (idx == 0 ? ".re" : ".im") + " is not finite");
  }
  return x;
}

}  // namespace

DensityMatrix parse_density_matrix(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, "malformed JSON at byte offset " + std::to_string(e.byte) + ": " + e.what());
  } catch (const json::out_of_range& e) {
    // Numeric overflow such as 1e999; the library reports the token but not its offset.
    const std::string what = e.what();
    const auto open = what.find('\'');
    const auto close = what.rfind('\'');
    std::string where_text;
    if (open != std::string::npos && close > open) {
      const auto pos = text.find(what.substr(open + 1, close - open - 1));
      if (pos != std::string_view::npos) where_text = " at byte offset " + std::to_string(pos);
    }
    throw Error(ErrorKind::Parse, "non-finite number" + where_text + ": " + what);
  }
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "top level must be an object");
  if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer()) {
    throw Error(ErrorKind::Parse, "missing integer field 'n_qubits'");
  }
  const auto n = doc["n_qubits"].get<long long>();
  if (n < 1 || n > 16) throw Error(ErrorKind::Parse, "n_qubits = " + std::to_string(n) + " out of range [1, 16]");
  if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
    throw Error(ErrorKind::Parse, "missing array field 'matrix'");
  }
  const std::size_t dim = std::size_t{1} << n;
  const json& rows = doc["matrix"];
  if (rows.size() != dim) {
    throw Error(ErrorKind::Parse, "matrix has " + std::to_string(rows.size()) + " rows, expected " +
                                      std::to_string(dim) + " for n_qubits = " + std::to_string(n));
  }
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != dim) {
      throw Error(ErrorKind::Parse, "matrix[" + std::to_string(r) + "] must be an array of " +
                                        std::to_string(dim) + " [re, im] pairs");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      const json& pair = row[c];
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorKind::Parse, where(r, c) + " must be a [re, im] pair");
      }
      m(r, c) = Complex(component(pair, 0, r, c), component(pair, 1, r, c));
    }
  }
  return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix read_density_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_density_matrix(buf.str());
}

std::string format_density_matrix(const DensityMatrix& rho) {
  json rows = json::array();
  const auto& m = rho.matrix();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  json doc;
  doc["n_qubits"] = rho.n_qubits();
  doc["matrix"] = std::move(rows);
  return doc.dump() + "\n";
}

void write_density_matrix(const std::filesystem::path& path, const DensityMatrix& rho) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path.string());
  out << format_density_matrix(rho);
  if (!out) throw Error(ErrorKind::Parse, "failed writing " + path.string());
}

}  // namespace lqu::io
