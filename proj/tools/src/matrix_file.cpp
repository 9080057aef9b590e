#include "posmap_tools/matrix_file.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace posmap::tools {

using nlohmann::json;

MatrixFile MatrixFile::plain(ComplexMatrix m) {
  MatrixFile f;
  f.dim1 = m.rows();
  f.matrix = std::move(m);
  return f;
}

MatrixFile MatrixFile::from_operator(const BipartiteOperator& op) {
  MatrixFile f;
  f.dim1 = op.dim1();
  f.dim2 = op.dim2();
  f.bipartite = true;
  f.matrix = op.matrix();
  return f;
}

BipartiteOperator MatrixFile::as_operator() const {
  if (!bipartite) {
    throw Error(ErrorCode::DimensionMismatch, "expected a bipartite operator (dim2 missing)");
  }
  return {dim1, dim2, matrix};
}

MatrixFile parse_matrix_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim1") || !doc.contains("data")) {
    throw std::runtime_error("matrix file needs \"dim1\" and \"data\"");
  }
  auto count = [&](const char* key) {
    const json& v = doc.at(key);
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
      throw std::runtime_error(std::string("\"") + key + "\" must be a positive integer");
    }
    return v.get<std::size_t>();
  };

  MatrixFile f;
  f.dim1 = count("dim1");
  if (doc.contains("dim2")) {
    f.dim2 = count("dim2");
    f.bipartite = true;
  }
  const std::size_t side = f.dim1 * f.dim2;
  const json& data = doc.at("data");
  if (!data.is_array() || data.size() != side * side) {
    throw std::runtime_error("\"data\" must hold " + std::to_string(side * side) + " entries");
  }
  std::vector<Complex> entries;
  entries.reserve(data.size());
  for (const json& z : data) {
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
      throw std::runtime_error("entries must be [re, im] pairs");
    }
    entries.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  f.matrix = ComplexMatrix(side, side, std::move(entries));
  return f;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_file(buf.str());
}

std::string serialize_matrix_file(const MatrixFile& file) {
  json data = json::array();
  for (const Complex& z : file.matrix.entries()) data.push_back({z.real(), z.imag()});
  json doc;
  doc["dim1"] = file.dim1;
  if (file.bipartite) doc["dim2"] = file.dim2;
  doc["data"] = std::move(data);
  return doc.dump() + "\n";
}

void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_matrix_file(file);
}

}  // namespace posmap::tools
