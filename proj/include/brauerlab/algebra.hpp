#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauerlab/certificate.hpp"
#include "brauerlab/field_linalg.hpp"

namespace brauerlab {

/// Finite-dimensional algebra over F given by structure constants: e_i e_j = table[i][j].
class StructureAlgebra {
 public:
  StructureAlgebra(FieldPtr F, std::vector<std::string> basis, std::vector<std::vector<FieldVector>> table,
                   FieldVector one, std::size_t degree);

  const FieldPtr& field() const { return F_; }
  std::size_t dim() const { return basis_.size(); }
  /// Degree of the central simple algebra, sqrt(dim).
  std::size_t degree() const { return degree_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const FieldVector& unit() const { return one_; }
  FieldVector basis_vector(std::size_t i) const;
  FieldVector scalar(const FieldElement& c) const;

  FieldVector mul(const FieldVector& x, const FieldVector& y) const;
  FieldVector add(const FieldVector& x, const FieldVector& y) const;
  FieldVector scale(const FieldVector& x, const FieldElement& c) const;
  FieldVector pow(const FieldVector& x, unsigned k) const;
  /// Matrix of y -> x y, columns indexed by the basis.
  FieldMatrix left_matrix(const FieldVector& x) const;
  /// Regular trace divided by the degree.
  FieldElement reduced_trace(const FieldVector& x) const;
  /// c when x = c * 1.
  std::optional<FieldElement> as_scalar(const FieldVector& x) const;
  bool is_zero(const FieldVector& x) const;

  /// (e_i e_j) e_k = e_i (e_j e_k) on all triples, or on `sample` seeded random triples.
  Certificate check_associative(std::size_t sample = 0, std::uint64_t seed = 1) const;
  Certificate check_unit() const;
  /// Basis of {y : y x = x y for x in elems}.
  std::vector<FieldVector> centralizer(const std::vector<FieldVector>& elems) const;
  std::string to_string(const FieldVector& x) const;

 private:
  FieldPtr F_;
  std::vector<std::string> basis_;
  std::vector<std::vector<FieldVector>> table_;
  FieldVector one_;
  std::size_t degree_;
};

/// M_n(F) with basis E_ij, index i*n + j.
StructureAlgebra matrix_algebra(const FieldPtr& F, std::size_t n);
/// A (x) B with basis a_i (x) b_j, index i*dim(B) + j.
StructureAlgebra tensor_product(const StructureAlgebra& a, const StructureAlgebra& b);

/// Symbol algebra (a, b)_m: x^m = a, y^m = b, xy = zeta_m yx; basis x^i y^j at index i + m*j.
class SymbolAlgebra {
 public:
  SymbolAlgebra(FieldPtr F, FieldElement a, FieldElement b, int m);

  const FieldPtr& field() const { return F_; }
  int m() const { return m_; }
  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  /// zeta_m as an element of F.
  const FieldElement& zeta() const { return zeta_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_ * m_); }

  FieldVector x() const;
  FieldVector y() const;
  FieldVector one() const;
  FieldVector mul(const FieldVector& p, const FieldVector& q) const;
  FieldVector pow(const FieldVector& p, unsigned k) const;
  /// x^m = a, y^m = b, xy = zeta yx and associativity on basis triples.
  Certificate check_relations() const;
  StructureAlgebra structure() const;

 private:
  FieldPtr F_;
  FieldElement a_, b_, zeta_;
  int m_;
  std::vector<FieldElement> zpow_;
};

/// Throws "zero parameter" when a or b vanishes; needs a primitive m-th root of unity in the scalars.
SymbolAlgebra symbol_algebra(const FieldPtr& F, const FieldElement& a, const FieldElement& b, int m);

/// zeta_m inside Q(zeta_N): needs m | N, or m | 2N with N odd.
FieldElement root_of_unity(const FieldPtr& F, int m);

}  // namespace brauerlab
