#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brauerlab/certificate.hpp"
#include "brauerlab/field_linalg.hpp"
#include "brauerlab/groups.hpp"

namespace brauerlab {

/// Field automorphism given by images of variables (unlisted ones fixed) and zeta -> zeta^k.
struct FieldAutomorphism {
  std::map<std::size_t, FieldElement> images;
  long zeta_power = 1;

  FieldElement apply(const FieldElement& f) const;
  FieldMatrix apply(const FieldMatrix& m) const;
  FieldVector apply(const FieldVector& v) const;
};

/// A finite group acting on F by automorphisms and on V = F^d semilinearly:
/// g(sum x_j e_j) = sum g(x_j) g(e_j), with column j of the matrix of g holding g(e_j).
class SemilinearAction {
 public:
  /// Automorphisms and matrices are listed in the order of group->generators().
  SemilinearAction(GroupPtr group, FieldPtr field, std::vector<std::string> basis,
                   std::vector<FieldAutomorphism> generator_automorphisms, std::vector<FieldMatrix> generator_matrices);

  const GroupPtr& group() const { return group_; }
  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<FieldAutomorphism>& automorphisms() const { return autos_; }

  FieldVector apply_generator(std::size_t k, const FieldVector& v) const;
  /// Action of group element g, evaluated along a word in the generators.
  FieldVector apply(std::size_t g, const FieldVector& v) const;
  FieldElement apply_scalar(std::size_t g, const FieldElement& f) const;
  /// t(v) = sum over the group of g(v).
  FieldVector average(const FieldVector& v) const;
  /// s(g(x)) = (sg)(x) for every element g, generator s, basis vector and variable.
  Certificate check_action() const;
  /// Every non-identity element moves some variable or zeta.
  bool scalar_action_faithful() const;
  FieldVector basis_vector(std::size_t j) const;

 private:
  GroupPtr group_;
  FieldPtr field_;
  std::vector<std::string> basis_;
  std::vector<FieldAutomorphism> autos_;
  std::vector<FieldMatrix> mats_;
  std::vector<std::vector<std::size_t>> words_;  // generator positions, applied left to right
};

/// Invariant vectors spanning V over F, from t applied to w^k e_j for k = 0, 1, ..., |G|-1 with w a
/// primitive element (default: sum of (i+1) x_i, plus zeta when the scalars are not rational).
/// Throws "action not faithful" or "averaging degenerate".
std::vector<FieldVector> invariant_basis_average(const SemilinearAction& act,
                                                 std::optional<FieldElement> primitive = std::nullopt);

}  // namespace brauerlab
