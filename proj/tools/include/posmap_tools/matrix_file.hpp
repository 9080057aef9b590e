#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "posmap/matrix.hpp"

namespace posmap::tools {

/// {"dim1": n, "dim2": m, "data": [[re, im], ...]}; dim2 is omitted for a
/// plain n x n matrix and then reads back as 1.
struct MatrixFile {
  std::size_t dim1 = 0;
  std::size_t dim2 = 1;
  bool bipartite = false;
  ComplexMatrix matrix;

  static MatrixFile plain(ComplexMatrix m);
  static MatrixFile from_operator(const BipartiteOperator& op);

  /// Throws DimensionMismatch unless the file carries dim2.
  BipartiteOperator as_operator() const;
};

/// Parse and shape failures raise std::runtime_error.
MatrixFile parse_matrix_file(const std::string& text);
MatrixFile read_matrix_file(const std::filesystem::path& path);

/// Shortest round-trip decimal doubles, trailing newline.
std::string serialize_matrix_file(const MatrixFile& file);
void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file);

}  // namespace posmap::tools
