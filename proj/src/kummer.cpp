#include "brauerlab/kummer.hpp"

#include <stdexcept>

#include "brauerlab/algebra.hpp"

namespace brauerlab {

KummerField::KummerField(FieldPtr F, int m, FieldElement a1, FieldElement a2)
    : F_(std::move(F)), m_(m), a1_(std::move(a1)), a2_(std::move(a2)) {
  if (m_ < 2) throw std::invalid_argument("Kummer field: m must be at least 2");
  if (a1_.is_zero() || a2_.is_zero()) throw std::invalid_argument("zero parameter");
  zeta_ = root_of_unity(F_, m_);
  zpow_.push_back(FieldElement(F_, Rat(1)));
  for (int k = 1; k < m_; ++k) zpow_.push_back(zpow_.back() * zeta_);
}

KummerField::Elem KummerField::zero() const { return Elem(dim(), FieldElement(F_, Rat(0))); }

KummerField::Elem KummerField::one() const { return from_base(FieldElement(F_, Rat(1))); }

KummerField::Elem KummerField::from_base(const FieldElement& c) const {
  Elem x = zero();
  x[0] = c;
  return x;
}

KummerField::Elem KummerField::alpha1() const {
  Elem x = zero();
  x[1] = FieldElement(F_, Rat(1));
  return x;
}

KummerField::Elem KummerField::alpha2() const {
  Elem x = zero();
  x[static_cast<std::size_t>(m_)] = FieldElement(F_, Rat(1));
  return x;
}

KummerField::Elem KummerField::in_alpha2(const FieldElement& c0, const FieldElement& c1) const {
  Elem x = zero();
  x[0] = c0;
  x[static_cast<std::size_t>(m_)] = c1;
  return x;
}

KummerField::Elem KummerField::add(const Elem& x, const Elem& y) const {
  Elem r(x);
  for (std::size_t i = 0; i < dim(); ++i) r[i] += y[i];
  return r;
}

KummerField::Elem KummerField::sub(const Elem& x, const Elem& y) const {
  Elem r(x);
  for (std::size_t i = 0; i < dim(); ++i) r[i] -= y[i];
  return r;
}

KummerField::Elem KummerField::neg(const Elem& x) const {
  Elem r(x);
  for (auto& v : r) v = -v;
  return r;
}

KummerField::Elem KummerField::scale(const Elem& x, const FieldElement& c) const {
  Elem r(x);
  for (auto& v : r) v = v * c;
  return r;
}

KummerField::Elem KummerField::mul(const Elem& x, const Elem& y) const {
  const int m = m_;
  Elem r = zero();
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < m; ++i) {
      const auto& xv = x[index(i, j, m)];
      if (xv.is_zero()) continue;
      for (int l = 0; l < 2; ++l)
        for (int k = 0; k < m; ++k) {
          const auto& yv = y[index(k, l, m)];
          if (yv.is_zero()) continue;
          FieldElement c = xv * yv;
          int p = i + k, q = j + l;
          if (p >= m) {
            p -= m;
            c = c * a1_;
          }
          if (q >= 2) {
            q -= 2;
            c = c * a2_;
          }
          r[index(p, q, m)] += c;
        }
    }
  return r;
}

KummerField::Elem KummerField::pow(const Elem& x, long k) const {
  if (k < 0) return pow(inverse(x), -k);
  Elem r = one(), b = x;
  while (k) {
    if (k & 1) r = mul(r, b);
    k >>= 1;
    if (k) b = mul(b, b);
  }
  return r;
}

KummerField::Elem KummerField::sigma(const Elem& x, int k, int l) const {
  k = ((k % m_) + m_) % m_;
  l = ((l % 2) + 2) % 2;
  Elem r(x);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < m_; ++i) {
      auto& v = r[index(i, j, m_)];
      if (v.is_zero()) continue;
      v = v * zpow_[static_cast<std::size_t>((k * i) % m_)];
      if (l && j) v = -v;
    }
  return r;
}

KummerField::Elem KummerField::norm_sigma1(const Elem& x) const {
  Elem r = x;
  for (int k = 1; k < m_; ++k) r = mul(r, sigma(x, k, 0));
  return r;
}

KummerField::Elem KummerField::norm_sigma2(const Elem& x) const { return mul(x, sigma(x, 0, 1)); }

FieldElement KummerField::norm(const Elem& x) const {
  Elem n = norm_sigma2(norm_sigma1(x));
  auto c = as_base(n);
  if (!c) throw std::logic_error("Kummer norm is not in the base field");
  return *c;
}

KummerField::Elem KummerField::inverse(const Elem& x) const {
  if (is_zero(x)) throw std::domain_error("division by zero");
  Elem conj = one();
  for (int l = 0; l < 2; ++l)
    for (int k = 0; k < m_; ++k)
      if (k || l) conj = mul(conj, sigma(x, k, l));
  Elem n = mul(conj, x);
  auto c = as_base(n);
  if (!c) throw std::logic_error("Kummer norm is not in the base field");
  if (c->is_zero()) throw std::domain_error("division by zero: element has zero norm");
  return scale(conj, c->inverse());
}

bool KummerField::is_zero(const Elem& x) const {
  for (const auto& v : x)
    if (!v.is_zero()) return false;
  return true;
}

bool KummerField::equal(const Elem& x, const Elem& y) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i] != y[i]) return false;
  return true;
}

bool KummerField::in_fixed_sigma1(const Elem& x) const {
  for (int j = 0; j < 2; ++j)
    for (int i = 1; i < m_; ++i)
      if (!x[index(i, j, m_)].is_zero()) return false;
  return true;
}

bool KummerField::in_fixed_sigma2(const Elem& x) const {
  for (int i = 0; i < m_; ++i)
    if (!x[index(i, 1, m_)].is_zero()) return false;
  return true;
}

std::optional<FieldElement> KummerField::as_base(const Elem& x) const {
  for (std::size_t i = 1; i < dim(); ++i)
    if (!x[i].is_zero()) return std::nullopt;
  return x[0];
}

std::string KummerField::to_string(const Elem& x) const {
  std::string s;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < m_; ++i) {
      const auto& v = x[index(i, j, m_)];
      if (v.is_zero()) continue;
      std::string mono;
      if (i) mono += i == 1 ? "alpha1" : "alpha1^" + std::to_string(i);
      if (j) mono += std::string(mono.empty() ? "" : "*") + "alpha2";
      std::string coeff = v.to_string();
      if (!s.empty()) s += " + ";
      if (mono.empty()) s += coeff;
      else if (coeff == "1") s += mono;
      else s += "(" + coeff + ")*" + mono;
    }
  return s.empty() ? "0" : s;
}

}  // namespace brauerlab
