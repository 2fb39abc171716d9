#pragma once

#include <string>
#include <vector>

#include "brauerlab/field_linalg.hpp"

namespace brauerlab {

/// K = F(alpha1, alpha2) with alpha1^m = a1, alpha2^2 = a2, acted on by Z/m x Z/2:
/// sigma1(alpha1) = zeta_m alpha1, sigma2(alpha2) = -alpha2. Elements are coordinate vectors
/// over F in the basis alpha1^i alpha2^j, index i + m*j.
class KummerField {
 public:
  using Elem = FieldVector;

  KummerField(FieldPtr F, int m, FieldElement a1, FieldElement a2);

  const FieldPtr& base() const { return F_; }
  int m() const { return m_; }
  std::size_t dim() const { return static_cast<std::size_t>(2 * m_); }
  const FieldElement& a1() const { return a1_; }
  const FieldElement& a2() const { return a2_; }
  const FieldElement& zeta() const { return zeta_; }
  static std::size_t index(int i, int j, int m) { return static_cast<std::size_t>(i + m * j); }

  Elem zero() const;
  Elem one() const;
  Elem from_base(const FieldElement& c) const;
  Elem alpha1() const;
  Elem alpha2() const;
  /// c0 + c1 alpha2.
  Elem in_alpha2(const FieldElement& c0, const FieldElement& c1) const;

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem scale(const Elem& x, const FieldElement& c) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem pow(const Elem& x, long k) const;
  /// sigma1^k sigma2^l.
  Elem sigma(const Elem& x, int k, int l) const;
  /// Product of all conjugates, an element of F.
  FieldElement norm(const Elem& x) const;
  /// Product of conjugates over the subgroup generated by sigma1 (lands in F(alpha2)) or sigma2 (F(alpha1)).
  Elem norm_sigma1(const Elem& x) const;
  Elem norm_sigma2(const Elem& x) const;
  /// prod_{g != 1} g(x) / N(x); throws "division by zero".
  Elem inverse(const Elem& x) const;

  bool is_zero(const Elem& x) const;
  bool equal(const Elem& x, const Elem& y) const;
  /// Fixed by sigma1 (only alpha2 powers) or by sigma2 (only alpha1 powers).
  bool in_fixed_sigma1(const Elem& x) const;
  bool in_fixed_sigma2(const Elem& x) const;
  std::optional<FieldElement> as_base(const Elem& x) const;
  std::string to_string(const Elem& x) const;

 private:
  FieldPtr F_;
  int m_;
  FieldElement a1_, a2_, zeta_;
  std::vector<FieldElement> zpow_;
};

}  // namespace brauerlab
