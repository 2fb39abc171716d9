#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauerlab/matrix.hpp"

namespace brauerlab {

/// Q(zeta_N) with basis 1, z, ..., z^(phi(N)-1) modulo the N-th cyclotomic polynomial.
class CyclotomicField {
 public:
  explicit CyclotomicField(int conductor);

  int conductor() const { return n_; }
  int degree() const { return phi_; }
  /// Monic Phi_N, coefficients from degree 0 up.
  const std::vector<long>& modulus() const { return modulus_; }
  /// Reduced coordinates of z^k for 0 <= k < N.
  const std::vector<Rat>& power(int k) const;

  /// Reduce a coefficient vector of any length in place to length phi.
  void reduce(std::vector<Rat>& c) const;

 private:
  int n_;
  int phi_;
  std::vector<long> modulus_;
  std::vector<std::vector<Rat>> powers_;
};

/// Interned field for conductor N; N = 1 and N = 2 are both Q, with zeta = 1 and -1.
const CyclotomicField* cyclotomic_field(int conductor);
std::vector<long> cyclotomic_polynomial(int n);

class Cyc {
 public:
  Cyc() = default;
  explicit Cyc(const CyclotomicField* f);
  Cyc(const CyclotomicField* f, const Rat& q);
  Cyc(const CyclotomicField* f, std::vector<Rat> coeffs);

  static Cyc zeta(const CyclotomicField* f, long k = 1);

  const CyclotomicField* field() const { return f_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rat rational() const { return c_.empty() ? Rat(0) : c_[0]; }
  /// Number of nonzero coordinates.
  std::size_t weight() const;

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator-() const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator*(const Rat& q) const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc inverse() const;
  Cyc pow(long k) const;
  /// Image under zeta -> zeta^k, gcd(k, N) = 1.
  Cyc galois(long k) const;
  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  /// Square root. Rational multiples of powers of zeta are exact; other elements use a complex
  /// embedding guess with rational reconstruction, verified exactly, so a miss means inconclusive.
  std::optional<Cyc> sqrt() const;
  std::string to_string() const;

 private:
  std::optional<Cyc> numeric_sqrt() const;

  const CyclotomicField* f_ = nullptr;
  std::vector<Rat> c_;
};

/// Exact square root of a nonnegative rational, if it exists.
std::optional<Rat> rational_sqrt(const Rat& q);

}  // namespace brauerlab
