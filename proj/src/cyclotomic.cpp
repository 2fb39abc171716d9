#include "brauerlab/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace brauerlab {

namespace {

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

// exact quotient of integer polynomials, divisor monic
std::vector<long> poly_divide(std::vector<long> a, const std::vector<long>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<long> q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    long c = a[k];
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  return q;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide(p, cyclotomic_polynomial(d));
  return p;
}

CyclotomicField::CyclotomicField(int conductor) : n_(conductor) {
  if (conductor < 1) throw std::invalid_argument("CyclotomicField: conductor must be positive");
  phi_ = euler_phi(n_);
  modulus_ = cyclotomic_polynomial(n_);
  powers_.resize(static_cast<std::size_t>(n_));
  for (int k = 0; k < n_; ++k) {
    std::vector<Rat> c(static_cast<std::size_t>(std::max(k + 1, phi_)), Rat(0));
    c[static_cast<std::size_t>(k)] = 1;
    reduce(c);
    powers_[static_cast<std::size_t>(k)] = std::move(c);
  }
}

const std::vector<Rat>& CyclotomicField::power(int k) const {
  k %= n_;
  if (k < 0) k += n_;
  return powers_[static_cast<std::size_t>(k)];
}

void CyclotomicField::reduce(std::vector<Rat>& c) const {
  const std::size_t d = static_cast<std::size_t>(phi_);
  for (std::size_t k = c.size(); k-- > d;) {
    if (sgn(c[k]) == 0) continue;
    Rat lead = c[k];
    for (std::size_t i = 0; i < d; ++i)
      if (modulus_[i] != 0) c[k - d + i] -= lead * modulus_[i];
    c[k] = 0;
  }
  c.resize(d, Rat(0));
}

const CyclotomicField* cyclotomic_field(int conductor) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = fields[conductor];
  if (!slot) slot = std::make_unique<CyclotomicField>(conductor);
  return slot.get();
}

Cyc::Cyc(const CyclotomicField* f) : f_(f), c_(static_cast<std::size_t>(f->degree()), Rat(0)) {}

Cyc::Cyc(const CyclotomicField* f, const Rat& q) : Cyc(f) { c_[0] = q; }

Cyc::Cyc(const CyclotomicField* f, std::vector<Rat> coeffs) : f_(f), c_(std::move(coeffs)) {
  if (c_.size() < static_cast<std::size_t>(f->degree())) c_.resize(static_cast<std::size_t>(f->degree()), Rat(0));
  f_->reduce(c_);
}

Cyc Cyc::zeta(const CyclotomicField* f, long k) {
  long n = f->conductor();
  long r = ((k % n) + n) % n;
  return Cyc(f, f->power(static_cast<int>(r)));
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Cyc::is_one() const { return is_rational() && c_[0] == 1; }

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

std::size_t Cyc::weight() const {
  std::size_t w = 0;
  for (const auto& x : c_)
    if (sgn(x) != 0) ++w;
  return w;
}

namespace {
void same_field(const Cyc& a, const Cyc& b) {
  if (a.field() != b.field()) throw std::invalid_argument("Cyc: elements of different cyclotomic fields");
}
}  // namespace

Cyc Cyc::operator+(const Cyc& o) const {
  Cyc r(*this);
  r += o;
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
  Cyc r(*this);
  r -= o;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  same_field(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  same_field(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
  return *this;
}

Cyc Cyc::operator-() const {
  Cyc r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  same_field(*this, o);
  const std::size_t d = c_.size();
  if (d == 1) return Cyc(f_, c_[0] * o.c_[0]);
  if (o.is_rational()) return *this * o.c_[0];
  if (is_rational()) return o * c_[0];
  std::vector<Rat> p(2 * d - 1, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (sgn(o.c_[j]) != 0) p[i + j] += c_[i] * o.c_[j];
  }
  return Cyc(f_, std::move(p));
}

Cyc Cyc::operator*(const Rat& q) const {
  Cyc r(*this);
  for (auto& x : r.c_)
    if (sgn(x) != 0) x *= q;
  return r;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return Cyc(f_, 1 / c_[0]);
  // solve (multiplication by this) x = 1 over Q
  const std::size_t d = c_.size();
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d + 1, Rat(0)));
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rat> e(d, Rat(0));
    e[j] = 1;
    Cyc col = *this * Cyc(f_, e);
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.c_[i];
  }
  m[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (sgn(m[p][c]) == 0) ++p;
    std::swap(m[p], m[c]);
    Rat inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      Rat k = m[r][c];
      for (std::size_t j = c; j <= d; ++j) m[r][j] -= k * m[c][j];
    }
  }
  std::vector<Rat> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = m[i][d];
  return Cyc(f_, std::move(x));
}

Cyc Cyc::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyc r(f_, Rat(1)), b(*this);
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Cyc Cyc::galois(long k) const {
  const long n = f_->conductor();
  if (std::gcd(((k % n) + n) % n, n) != 1 && n > 1) throw std::invalid_argument("Cyc::galois: exponent not a unit");
  Cyc r(f_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    long e = ((static_cast<long>(i) * k) % n + n) % n;
    const auto& p = f_->power(static_cast<int>(e));
    for (std::size_t j = 0; j < p.size(); ++j)
      if (sgn(p[j]) != 0) r.c_[j] += c_[i] * p[j];
  }
  return r;
}

bool Cyc::operator==(const Cyc& o) const {
  if (f_ != o.f_) return is_rational() && o.is_rational() && rational() == o.rational();
  return c_ == o.c_;
}

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rat(0);
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rat(rn, rd);
}

namespace {

// continued-fraction approximation with bounded denominator
std::optional<Rat> reconstruct(long double x) {
  const long double tol = 1e-9L * std::max<long double>(1.0L, std::fabs(x));
  long double y = x;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 40; ++it) {
    long double a = std::floor(y);
    mpz_class ai(static_cast<double>(a));
    mpz_class h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    Rat r(h1, k1);
    r.canonicalize();
    if (std::fabs(static_cast<long double>(r.get_d()) - x) < tol) return r;
    if (k1 > 100000000) break;
    long double frac = y - a;
    if (frac < 1e-15L) break;
    y = 1.0L / frac;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Cyc> Cyc::numeric_sqrt() const {
  // embeddings z -> exp(2 pi i j / N), j a unit; conjugate pairs share a sign choice
  const int n = f_->conductor(), d = f_->degree();
  std::vector<int> units;
  for (int j = 1; j <= n; ++j)
    if (std::gcd(j, n) == 1) units.push_back(j % n);
  std::vector<int> reps;
  for (int j : units)
    if (2 * j <= n) reps.push_back(j);
  using C = std::complex<long double>;
  const long double pi = std::acos(-1.0L);
  auto root_of = [&](int j) { return std::polar(1.0L, 2 * pi * j / n); };
  std::vector<C> vals(units.size());
  for (std::size_t u = 0; u < units.size(); ++u) {
    C v = 0, zj = root_of(units[u]), p = 1;
    for (int k = 0; k < d; ++k, p *= zj) v += static_cast<long double>(c_[static_cast<std::size_t>(k)].get_d()) * p;
    vals[u] = std::sqrt(v);
  }
  if (reps.size() > 12) return std::nullopt;
  for (unsigned mask = 0; mask < (1u << (reps.size() - 1)); ++mask) {
    // signed embedding values of the candidate root
    std::vector<C> target(units.size());
    for (std::size_t u = 0; u < units.size(); ++u) {
      int j = units[u];
      bool conj = 2 * j > n;
      int rep = conj ? n - j : j;
      std::size_t r = static_cast<std::size_t>(std::find(reps.begin(), reps.end(), rep) - reps.begin());
      long double s = (r > 0 && ((mask >> (r - 1)) & 1u)) ? -1.0L : 1.0L;
      C base = vals[static_cast<std::size_t>(std::find(units.begin(), units.end(), rep) - units.begin())];
      target[u] = s * (conj ? std::conj(base) : base);
    }
    // solve the Vandermonde system sum_k x_k z_j^k = target_j
    std::vector<std::vector<C>> m(units.size(), std::vector<C>(static_cast<std::size_t>(d) + 1));
    for (std::size_t u = 0; u < units.size(); ++u) {
      C zj = root_of(units[u]), p = 1;
      for (int k = 0; k < d; ++k, p *= zj) m[u][static_cast<std::size_t>(k)] = p;
      m[u][static_cast<std::size_t>(d)] = target[u];
    }
    const std::size_t dd = static_cast<std::size_t>(d);
    for (std::size_t c = 0; c < dd; ++c) {
      std::size_t best = c;
      for (std::size_t r = c + 1; r < dd; ++r)
        if (std::abs(m[r][c]) > std::abs(m[best][c])) best = r;
      std::swap(m[c], m[best]);
      for (std::size_t r = 0; r < dd; ++r) {
        if (r == c) continue;
        C k = m[r][c] / m[c][c];
        for (std::size_t j = c; j <= dd; ++j) m[r][j] -= k * m[c][j];
      }
    }
    std::vector<Rat> x(dd);
    bool ok = true;
    for (std::size_t k = 0; k < dd && ok; ++k) {
      C v = m[k][dd] / m[k][k];
      if (std::fabs(v.imag()) > 1e-6L) ok = false;
      auto q = reconstruct(v.real());
      if (!q) ok = false;
      else x[k] = *q;
    }
    if (!ok) continue;
    Cyc cand(f_, std::move(x));
    if (cand * cand == *this) return cand;
  }
  return std::nullopt;
}

std::optional<Cyc> Cyc::sqrt() const {
  if (is_zero()) return *this;
  const long n = f_->conductor();
  // single term q * z^k; otherwise a numeric guess verified exactly
  if (weight() != 1) return numeric_sqrt();
  std::size_t k = 0;
  while (sgn(c_[k]) == 0) ++k;
  Rat q = c_[k];
  // root of z^k
  std::optional<Cyc> unit;
  if (k % 2 == 0) {
    unit = zeta(f_, static_cast<long>(k / 2));
  } else if (n % 2 == 1) {
    unit = zeta(f_, (static_cast<long>(k) + n) / 2);
  } else {
    return numeric_sqrt();
  }
  if (auto r = rational_sqrt(q)) return *unit * *r;
  if (n % 4 == 0)
    if (auto r = rational_sqrt(-q)) return *unit * zeta(f_, n / 4) * *r;  // -1 = zeta_4^2
  return numeric_sqrt();
}

std::string Cyc::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Rat x = c_[i];
    if (!first) os << (sgn(x) < 0 ? " - " : " + ");
    else if (sgn(x) < 0) os << "-";
    Rat a = abs(x);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "zeta";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace brauerlab
