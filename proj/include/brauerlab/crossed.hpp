#pragma once

#include <memory>
#include <string>
#include <vector>

#include "brauerlab/algebra.hpp"
#include "brauerlab/kummer.hpp"
#include "json.hpp"

namespace brauerlab {

using KummerPtr = std::shared_ptr<const KummerField>;

/// (K, G, u, b1, b2) for G = Z/m x Z/2: sum over w = (k, l) of K z^w with z^w = z1^k z2^l,
/// z1 x z1^-1 = sigma1(x), z2 x z2^-1 = sigma2(x), z1^m = b1, z2^2 = b2, z1 z2 = u z2 z1.
class CrossedAlgebra {
 public:
  /// One K-coordinate vector per group element, index k + m*l.
  using Element = std::vector<KummerField::Elem>;

  /// Builds the multiplication; associativity is not checked here (see crossed_from_data).
  CrossedAlgebra(KummerPtr K, KummerField::Elem u, KummerField::Elem b1, KummerField::Elem b2);

  const KummerPtr& kummer() const { return K_; }
  const FieldPtr& base() const { return K_->base(); }
  int m() const { return K_->m(); }
  std::size_t group_order() const { return static_cast<std::size_t>(2 * m()); }
  std::size_t dim() const { return group_order() * group_order(); }
  const KummerField::Elem& u() const { return u_; }
  const KummerField::Elem& b1() const { return b1_; }
  const KummerField::Elem& b2() const { return b2_; }
  /// c(w, w') with z^w z^w' = c(w, w') z^(ww').
  const KummerField::Elem& cocycle(std::size_t w, std::size_t wp) const { return c_[w * group_order() + wp]; }

  Element zero() const;
  Element one() const;
  Element from_k(const KummerField::Elem& x) const;
  Element from_base(const FieldElement& c) const;
  /// x z1^k z2^l.
  Element monomial(const KummerField::Elem& x, int k, int l) const;
  Element z1() const { return monomial(K_->one(), 1, 0); }
  Element z2() const { return monomial(K_->one(), 0, 1); }
  Element alpha1() const { return from_k(K_->alpha1()); }
  Element alpha2() const { return from_k(K_->alpha2()); }

  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element scale(const Element& x, const FieldElement& c) const;
  Element mul(const Element& x, const Element& y) const;
  Element pow(const Element& x, unsigned k) const;
  bool equal(const Element& x, const Element& y) const;
  bool is_zero(const Element& x) const;
  std::optional<FieldElement> as_scalar(const Element& x) const;
  /// 2m times the constant coordinate of the identity component.
  FieldElement reduced_trace(const Element& x) const;

  /// Coordinates over F, index (i + m*j) + 2m*w; inverse map below.
  FieldVector flatten(const Element& x) const;
  Element unflatten(const FieldVector& v) const;
  StructureAlgebra structure() const;
  std::string to_string(const Element& x) const;

  /// c(w,w')c(ww',w'') = sigma_w(c(w',w'')) c(w,w'w'') for all triples: equivalent to associativity.
  Certificate check_cocycle() const;
  /// Literal (e_i e_j) e_k = e_i (e_j e_k) over F-basis triples: all of them, or `sample` seeded ones.
  Certificate check_basis_associativity(std::size_t sample, std::uint64_t seed = 7) const;
  /// Conjugation by z1, z2 on the K-basis; z1^m = b1, z2^2 = b2, z1 z2 = u z2 z1; unit.
  Certificate check_relations() const;

  std::size_t compose(std::size_t w, std::size_t wp) const;

 private:
  KummerPtr K_;
  KummerField::Elem u_, b1_, b2_;
  std::vector<KummerField::Elem> c_;
};

/// Validates the data (nonzero, b1 in F(alpha2), b2 in F(alpha1)) and checks associativity:
/// the complete cocycle criterion always, plus literal basis triples (all for m <= 3, 10,000 sampled
/// for m >= 4 when `literal` is set). Throws "associativity violated: incompatible (u, b1, b2)".
CrossedAlgebra crossed_from_data(const KummerPtr& K, const KummerField::Elem& u, const KummerField::Elem& b1,
                                 const KummerField::Elem& b2, bool literal = false);

/// Data obtained from the split algebra (K, G, 1, beta, delta) by z1 -> k z1, z2 -> l z2:
/// b1 = N_sigma1(k) beta, b2 = N_sigma2(l) delta, u = k sigma1(l) / (sigma2(k) l). Always associative.
CrossedAlgebra twisted_crossed(const KummerPtr& K, const KummerField::Elem& k, const KummerField::Elem& l,
                               const FieldElement& beta, const FieldElement& delta);

/// Same algebra after z1 -> k z1, z2 -> l z2: (u k sigma1(l) / (sigma2(k) l), N_sigma1(k) b1, N_sigma2(l) b2).
CrossedAlgebra twist(const CrossedAlgebra& A, const KummerField::Elem& k, const KummerField::Elem& l);

/// (K, G, uu', b1b1', b2b2'); throws "mismatched K-data".
CrossedAlgebra tensor_brauer(const CrossedAlgebra& a, const CrossedAlgebra& b);

/// (z1 + alpha1)^m = z1^m + alpha1^m = b1 + a1, by exact multiplication.
Certificate bergman_power(const CrossedAlgebra& A);

nlohmann::json to_json(const CrossedAlgebra& A);

}  // namespace brauerlab
