#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauerlab/cyclotomic.hpp"

namespace brauerlab {

constexpr std::size_t kMaxVars = 15;

/// Exponent vector; slot kMaxVars caches the total degree.
struct Monomial {
  std::array<std::uint16_t, kMaxVars + 1> e{};

  std::uint16_t degree() const { return e[kMaxVars]; }
  std::uint16_t operator[](std::size_t i) const { return e[i]; }
  void set(std::size_t i, std::uint16_t v);
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / this, assuming divides(o).
  Monomial quotient_of(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

/// Graded reverse lexicographic: true when a is strictly larger than b.
bool grevlex_greater(const Monomial& a, const Monomial& b);

/// Sparse polynomial over a cyclotomic field, terms sorted by decreasing grevlex order.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Cyc>;

  MultiPoly() = default;
  explicit MultiPoly(const CyclotomicField* f) : f_(f) {}
  MultiPoly(const CyclotomicField* f, const Cyc& c);
  static MultiPoly variable(const CyclotomicField* f, std::size_t i);

  const CyclotomicField* field() const { return f_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0); }
  Cyc constant_value() const;
  const Term& leading() const { return terms_.front(); }
  std::size_t total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }
  /// Highest exponent of variable i.
  std::uint16_t degree_in(std::size_t i) const;
  bool uses_variable(std::size_t i) const { return degree_in(i) > 0; }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Cyc& c) const;
  MultiPoly mul_term(const Monomial& m, const Cyc& c) const;
  MultiPoly pow(unsigned k) const;
  /// Exact quotient when d divides this, otherwise none.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;
  MultiPoly galois(long k) const;
  MultiPoly derivative(std::size_t i) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Polynomial square root via the leading-term recursion; none when not a square or undecidable.
  std::optional<MultiPoly> sqrt() const;
  std::string to_string(const std::vector<std::string>& names) const;

  /// Build from unsorted terms, combining duplicates and dropping zeros.
  static MultiPoly from_terms(const CyclotomicField* f, std::vector<Term> terms);

 private:
  const CyclotomicField* f_ = nullptr;
  std::vector<Term> terms_;
};

}  // namespace brauerlab
