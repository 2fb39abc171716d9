#pragma once

#include <optional>

#include "brauerlab/matrix.hpp"

namespace brauerlab {

/// U * A * V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal of D.
struct SNFResult {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  std::size_t rank = 0;

  std::vector<Int> diagonal() const;
};

struct SNFOptions {
  bool want_u = true;
  bool want_v = true;
};

SNFResult smith_normal_form(const IntMatrix& a, SNFOptions opts = {});

std::size_t integer_rank(const IntMatrix& a);
std::vector<Int> elementary_divisors(const IntMatrix& a);
/// True when every nonzero elementary divisor is 1 (column span is saturated).
bool has_unit_divisors(const IntMatrix& a);

/// Saturated integer kernel: columns form a Z-basis of {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Integer matrix L with L * B = I; requires B of full column rank with saturated span.
std::optional<IntMatrix> left_inverse(const IntMatrix& b);

/// Reusable solver for A x = b over Z.
class IntegerSolver {
 public:
  explicit IntegerSolver(const IntMatrix& a);
  std::optional<IntVector> solve(const IntVector& b) const;
  std::size_t rank() const { return snf_.rank; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  SNFResult snf_;
};

/// Integer coordinates x with sum_j x_j * spanning[j] = target, if any.
std::optional<IntVector> solve_membership(const IntVector& target,
                                          const std::vector<IntVector>& spanning);

}  // namespace brauerlab
