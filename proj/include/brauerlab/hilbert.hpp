#pragma once

#include <map>
#include <vector>

#include "brauerlab/quadforms.hpp"

namespace brauerlab {

/// Prime divisors of |n| in increasing order (trial division, then Pollard rho).
std::vector<Int> prime_factors(const Int& n);

/// Squarefree integer in the square class of the nonzero rational q.
Int squarefree_part(const Rat& q);

/// (a, b)_p for nonzero rationals; p = 0 is the real place.
int hilbert_symbol(const Rat& a, const Rat& b, const Int& p);

/// Rational diagonal entries of a form; throws "degenerate form" or "entry not rational".
std::vector<Rat> rational_entries(const QuadraticForm& q);

struct RationalInvariants {
  std::size_t rank = 0;
  std::size_t positive = 0, negative = 0;
  Int discriminant;             // squarefree representative of prod a_i
  std::map<Int, int> hasse;     // prod_{i<j} (a_i, a_j)_p at 0 (real), 2 and primes of the entries
  /// Places where the Hasse symbol is -1.
  std::vector<Int> hasse_negative() const;
};

RationalInvariants invariants_over_Q(const std::vector<Rat>& entries);
RationalInvariants invariants_over_Q(const QuadraticForm& q);
/// Hasse-Minkowski: rank, signature, discriminant and Hasse symbols.
bool isometry_over_Q(const std::vector<Rat>& a, const std::vector<Rat>& b);
bool isometry_over_Q(const QuadraticForm& a, const QuadraticForm& b);

/// Invariants after base change to Q(i): -1 is a square, no real place, and (a, b) is trivial at 2 and at
/// primes p = 3 mod 4 (local degree 2), so only split primes p = 1 mod 4 carry Hasse data.
struct GaussianInvariants {
  std::size_t rank = 0;
  Int discriminant;  // positive squarefree, modulo squares and -1
  std::vector<Int> hasse_negative;
};

GaussianInvariants invariants_over_Qi(const std::vector<Rat>& entries);
bool isometry_over_Qi(const std::vector<Rat>& a, const std::vector<Rat>& b);
/// Pads the smaller side with <1, 1> = <1, -1> planes; false when the dimensions differ in parity.
bool witt_equivalent_over_Qi(const std::vector<Rat>& a, const std::vector<Rat>& b);
bool witt_equivalent_over_Q(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace brauerlab
