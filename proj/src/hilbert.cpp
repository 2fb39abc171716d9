#include "brauerlab/hilbert.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace brauerlab {

namespace {

Int pollard_rho(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto f = [&](const Int& v) {
      Int r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Int diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Int n, std::set<Int>& out) {
  if (n <= 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    out.insert(n);
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

int valuation(Int& n, const Int& p) {
  int v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

int mod_int(const Int& n, unsigned long m) { return static_cast<int>(mpz_fdiv_ui(n.get_mpz_t(), m)); }

/// (a, b)_p for nonzero integers.
int hilbert_int(Int a, Int b, const Int& p) {
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  int alpha = valuation(a, p), beta = valuation(b, p);
  if (p == 2) {
    auto eps = [](const Int& u) { return (mod_int(u, 4) - 1) / 2; };
    auto omega = [](const Int& u) {
      int r = mod_int(u, 8);
      return (r * r - 1) / 8 % 2;
    };
    int e = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a);
    return e % 2 ? -1 : 1;
  }
  int sign = 1;
  Int half = (p - 1) / 2;
  if (alpha % 2 && beta % 2 && mpz_odd_p(half.get_mpz_t())) sign = -sign;
  if (beta % 2) sign *= mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
  if (alpha % 2) sign *= mpz_legendre(b.get_mpz_t(), p.get_mpz_t());
  return sign;
}

Int as_integer(const Rat& q) {
  if (q == 0) throw std::invalid_argument("zero argument");
  return q.get_num() * q.get_den();
}

std::set<Int> bad_primes(const std::vector<Rat>& e) {
  std::set<Int> ps{Int(2)};
  for (const auto& q : e) {
    for (const auto& p : prime_factors(q.get_num())) ps.insert(p);
    for (const auto& p : prime_factors(q.get_den())) ps.insert(p);
  }
  return ps;
}

/// Squarefree part of prod e, from the valuations of the factors at the bad primes.
Int squarefree_product(const std::vector<Rat>& e, const std::set<Int>& primes) {
  int sign = 1;
  for (const auto& q : e) sign *= sgn(q) < 0 ? -1 : 1;
  Int r = sign;
  for (const auto& p : primes) {
    int v = 0;
    for (const auto& q : e) {
      Int a = abs(q.get_num()), b = q.get_den();
      v += valuation(a, p) + valuation(b, p);
    }
    if (v % 2) r *= p;
  }
  return r;
}

int hasse_at(const std::vector<Rat>& e, const Int& p) {
  int h = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) h *= hilbert_int(as_integer(e[i]), as_integer(e[j]), p);
  return h;
}

}  // namespace

std::vector<Int> prime_factors(const Int& n) {
  Int m = abs(n);
  std::set<Int> out;
  for (unsigned long p = 2; p < 10000 && p * p <= m; ++p)
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.insert(Int(p));
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;
    }
  factor_into(m, out);
  return {out.begin(), out.end()};
}

Int squarefree_part(const Rat& q) {
  if (q == 0) throw std::invalid_argument("zero argument");
  return squarefree_product({q}, bad_primes({q}));
}

int hilbert_symbol(const Rat& a, const Rat& b, const Int& p) {
  if (p < 0 || (p > 1 && !mpz_probab_prime_p(p.get_mpz_t(), 30)) || p == 1)
    throw std::invalid_argument("place must be 0 (real) or a prime");
  return hilbert_int(as_integer(a), as_integer(b), p);
}

std::vector<Rat> rational_entries(const QuadraticForm& q) {
  auto d = diagonalize(q);
  if (d.degenerate) throw std::invalid_argument("degenerate form");
  std::vector<Rat> e;
  for (const auto& x : d.form.entries()) {
    if (x.is_zero()) throw std::invalid_argument("degenerate form");
    auto r = x.rational();
    if (!r) throw std::invalid_argument("entry not rational");
    e.push_back(*r);
  }
  return e;
}

std::vector<Int> RationalInvariants::hasse_negative() const {
  std::vector<Int> r;
  for (const auto& [p, h] : hasse)
    if (h < 0) r.push_back(p);
  return r;
}

RationalInvariants invariants_over_Q(const std::vector<Rat>& e) {
  RationalInvariants inv;
  inv.rank = e.size();
  for (const auto& q : e) {
    if (q == 0) throw std::invalid_argument("degenerate form");
    (q > 0 ? inv.positive : inv.negative)++;
  }
  auto primes = bad_primes(e);
  inv.discriminant = squarefree_product(e, primes);
  inv.hasse[Int(0)] = hasse_at(e, Int(0));
  for (const auto& p : primes) inv.hasse[p] = hasse_at(e, p);
  return inv;
}

RationalInvariants invariants_over_Q(const QuadraticForm& q) { return invariants_over_Q(rational_entries(q)); }

bool isometry_over_Q(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  auto ia = invariants_over_Q(a), ib = invariants_over_Q(b);
  return ia.rank == ib.rank && ia.positive == ib.positive && ia.discriminant == ib.discriminant &&
         ia.hasse_negative() == ib.hasse_negative();
}

bool isometry_over_Q(const QuadraticForm& a, const QuadraticForm& b) {
  return isometry_over_Q(rational_entries(a), rational_entries(b));
}

GaussianInvariants invariants_over_Qi(const std::vector<Rat>& e) {
  GaussianInvariants inv;
  inv.rank = e.size();
  for (const auto& q : e)
    if (q == 0) throw std::invalid_argument("degenerate form");
  auto primes = bad_primes(e);
  inv.discriminant = abs(squarefree_product(e, primes));
  for (const auto& p : primes)
    if (mod_int(p, 4) == 1 && hasse_at(e, p) < 0) inv.hasse_negative.push_back(p);
  return inv;
}

bool isometry_over_Qi(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  auto ia = invariants_over_Qi(a), ib = invariants_over_Qi(b);
  return ia.rank == ib.rank && ia.discriminant == ib.discriminant && ia.hasse_negative == ib.hasse_negative;
}

namespace {

bool witt_pad(std::vector<Rat> a, std::vector<Rat> b, const Rat& minus_one,
              bool (*iso)(const std::vector<Rat>&, const std::vector<Rat>&)) {
  if (a.size() % 2 != b.size() % 2) return false;
  auto& small = a.size() < b.size() ? a : b;
  const std::size_t target = std::max(a.size(), b.size());
  while (small.size() < target) {
    small.push_back(1);
    small.push_back(minus_one);
  }
  return iso(a, b);
}

}  // namespace

bool witt_equivalent_over_Qi(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  return witt_pad(a, b, Rat(1), isometry_over_Qi);
}

bool witt_equivalent_over_Q(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  return witt_pad(a, b, Rat(-1), static_cast<bool (*)(const std::vector<Rat>&, const std::vector<Rat>&)>(isometry_over_Q));
}

}  // namespace brauerlab
