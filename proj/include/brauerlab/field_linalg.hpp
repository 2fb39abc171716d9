#pragma once

#include <optional>
#include <vector>

#include "brauerlab/field.hpp"
#include "brauerlab/matrix.hpp"

namespace brauerlab {

using FieldMatrix = Matrix<FieldElement>;
using FieldVector = std::vector<FieldElement>;

FieldMatrix field_zero(const FieldPtr& ctx, std::size_t rows, std::size_t cols);
FieldMatrix field_identity(const FieldPtr& ctx, std::size_t n);
FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
FieldVector operator*(const FieldMatrix& a, const FieldVector& v);

/// Reduced row echelon form; pivots prefer entries with the fewest terms.
struct Echelon {
  FieldMatrix rref;
  std::vector<std::size_t> pivot_cols;
};
Echelon echelon(FieldMatrix a);

std::size_t rank(const FieldMatrix& a);
/// Basis of the right kernel.
std::vector<FieldVector> kernel(const FieldMatrix& a);
/// Some x with a x = b, or none.
std::optional<FieldVector> solve(const FieldMatrix& a, const FieldVector& b);
FieldElement determinant(FieldMatrix a);
/// Throws "singular matrix".
FieldMatrix inverse(const FieldMatrix& a);

}  // namespace brauerlab
