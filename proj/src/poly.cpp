#include "brauerlab/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace brauerlab {

void Monomial::set(std::size_t i, std::uint16_t v) {
  e[kMaxVars] = static_cast<std::uint16_t>(e[kMaxVars] - e[i] + v);
  e[i] = v;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i <= kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (e[kMaxVars] > o.e[kMaxVars]) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i <= kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(o.e[i] - e[i]);
  return r;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.e[kMaxVars] != b.e[kMaxVars]) return a.e[kMaxVars] > b.e[kMaxVars];
  for (std::size_t i = kMaxVars; i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

namespace {

struct TermOrder {
  bool operator()(const MultiPoly::Term& a, const MultiPoly::Term& b) const {
    return grevlex_greater(a.first, b.first);
  }
};

void check_field(const MultiPoly& a, const MultiPoly& b) {
  if (a.field() != b.field()) throw std::invalid_argument("MultiPoly: operands over different scalar fields");
}

}  // namespace

MultiPoly::MultiPoly(const CyclotomicField* f, const Cyc& c) : f_(f) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

MultiPoly MultiPoly::variable(const CyclotomicField* f, std::size_t i) {
  if (i >= kMaxVars) throw std::out_of_range("MultiPoly: too many variables");
  MultiPoly p(f);
  Monomial m;
  m.set(i, 1);
  p.terms_.emplace_back(m, Cyc(f, Rat(1)));
  return p;
}

MultiPoly MultiPoly::from_terms(const CyclotomicField* f, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), TermOrder{});
  MultiPoly p(f);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Cyc MultiPoly::constant_value() const {
  if (terms_.empty()) return Cyc(f_);
  if (!is_constant()) throw std::logic_error("MultiPoly: not a constant");
  return terms_[0].second;
}

std::uint16_t MultiPoly::degree_in(std::size_t i) const {
  std::uint16_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first[i]);
  return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_field(*this, o);
  MultiPoly r(f_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && grevlex_greater(terms_[i].first, o.terms_[j].first))) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || grevlex_greater(o.terms_[j].first, terms_[i].first)) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Cyc c = terms_[i].second + o.terms_[j].second;
      if (!c.is_zero()) r.terms_.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::mul_term(const Monomial& m, const Cyc& c) const {
  MultiPoly r(f_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves the order
  for (const auto& t : terms_) {
    Cyc v = t.second * c;
    if (!v.is_zero()) r.terms_.emplace_back(t.first * m, std::move(v));
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Cyc& c) const { return mul_term(Monomial{}, c); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_field(*this, o);
  if (terms_.empty() || o.terms_.empty()) return MultiPoly(f_);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].first, o.terms_[0].second);
  if (terms_.size() == 1) return o.mul_term(terms_[0].first, terms_[0].second);
  std::vector<Term> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) all.emplace_back(a.first * b.first, a.second * b.second);
  return from_terms(f_, std::move(all));
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r(f_, Cyc(f_, Rat(1))), b(*this);
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  check_field(*this, d);
  if (d.is_zero()) throw std::domain_error("division by zero");
  MultiPoly q(f_);
  if (is_zero()) return q;
  if (d.terms_.size() == 1) {
    const auto& [dm, dc] = d.terms_[0];
    Cyc inv = dc.inverse();
    for (const auto& t : terms_) {
      if (!dm.divides(t.first)) return std::nullopt;
      q.terms_.emplace_back(dm.quotient_of(t.first), t.second * inv);
    }
    return q;
  }
  const auto& [lm, lc] = d.terms_[0];
  Cyc linv = lc.inverse();
  MultiPoly r(*this);
  std::vector<Term> qt;
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.terms_[0];
    // every remaining term is smaller than LT(r); LT(d) must divide it
    if (!lm.divides(rm)) return std::nullopt;
    Monomial qm = lm.quotient_of(rm);
    Cyc qc = rc * linv;
    r = r - d.mul_term(qm, qc);
    qt.emplace_back(qm, std::move(qc));
  }
  q.terms_ = std::move(qt);  // generated in decreasing order
  return q;
}

MultiPoly MultiPoly::galois(long k) const {
  MultiPoly r(f_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first, t.second.galois(k));
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t i) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    if (!m[i]) continue;
    Monomial d = m;
    d.set(i, static_cast<std::uint16_t>(m[i] - 1));
    out.emplace_back(d, c * Rat(m[i]));
  }
  return from_terms(f_, std::move(out));
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].first != o.terms_[i].first || !(terms_[i].second == o.terms_[i].second)) return false;
  return true;
}

std::optional<MultiPoly> MultiPoly::sqrt() const {
  if (is_zero()) return *this;
  const auto& [lm, lc] = terms_[0];
  Monomial half;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (lm[i] % 2) return std::nullopt;
    half.set(i, static_cast<std::uint16_t>(lm[i] / 2));
  }
  auto root = lc.sqrt();
  if (!root) return std::nullopt;
  // g = g0 + rest; p - g^2 has leading term 2 g0 * LT(rest)
  MultiPoly g(f_);
  g.terms_.emplace_back(half, *root);
  Cyc two_lead_inv = (*root * Rat(2)).inverse();
  MultiPoly r = *this - g * g;
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.terms_[0];
    if (!half.divides(rm)) return std::nullopt;
    Monomial m = half.quotient_of(rm);
    if (!grevlex_greater(half, m)) return std::nullopt;
    Cyc c = rc * two_lead_inv;
    MultiPoly t(f_);
    t.terms_.emplace_back(m, c);
    // (g + t)^2 - g^2 = 2 g t + t^2
    r = r - (g * t) * Cyc(f_, Rat(2)) - t * t;
    g = g + t;
  }
  return g;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.to_string();
    bool compound = c.weight() > 1;
    bool neg = !compound && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    bool unit = cs == "1";
    if (m.degree() == 0) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (!unit) os << (compound ? "(" + cs + ")" : cs) << "*";
    bool firstvar = true;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!m[i]) continue;
      if (!firstvar) os << "*";
      firstvar = false;
      os << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

}  // namespace brauerlab
