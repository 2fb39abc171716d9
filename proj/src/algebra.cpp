#include "brauerlab/algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "brauerlab/rng.hpp"

namespace brauerlab {

StructureAlgebra::StructureAlgebra(FieldPtr F, std::vector<std::string> basis,
                                   std::vector<std::vector<FieldVector>> table, FieldVector one, std::size_t degree)
    : F_(std::move(F)), basis_(std::move(basis)), table_(std::move(table)), one_(std::move(one)), degree_(degree) {
  const std::size_t d = basis_.size();
  if (table_.size() != d || one_.size() != d) throw std::invalid_argument("StructureAlgebra: table size mismatch");
  for (const auto& row : table_) {
    if (row.size() != d) throw std::invalid_argument("StructureAlgebra: table size mismatch");
    for (const auto& v : row)
      if (v.size() != d) throw std::invalid_argument("StructureAlgebra: table size mismatch");
  }
}

FieldVector StructureAlgebra::basis_vector(std::size_t i) const {
  FieldVector v(dim(), FieldElement(F_, Rat(0)));
  v[i] = FieldElement(F_, Rat(1));
  return v;
}

FieldVector StructureAlgebra::scalar(const FieldElement& c) const { return scale(one_, c); }

FieldVector StructureAlgebra::mul(const FieldVector& x, const FieldVector& y) const {
  FieldVector r(dim(), FieldElement(F_, Rat(0)));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      FieldElement c = x[i] * y[j];
      const auto& t = table_[i][j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (!t[k].is_zero()) r[k] += c * t[k];
    }
  }
  return r;
}

FieldVector StructureAlgebra::add(const FieldVector& x, const FieldVector& y) const {
  FieldVector r(x);
  for (std::size_t i = 0; i < dim(); ++i) r[i] += y[i];
  return r;
}

FieldVector StructureAlgebra::scale(const FieldVector& x, const FieldElement& c) const {
  FieldVector r(x);
  for (auto& v : r) v = v * c;
  return r;
}

FieldVector StructureAlgebra::pow(const FieldVector& x, unsigned k) const {
  FieldVector r = one_;
  for (unsigned i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

FieldMatrix StructureAlgebra::left_matrix(const FieldVector& x) const {
  FieldMatrix m = field_zero(F_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, mul(x, basis_vector(j)));
  return m;
}

FieldElement StructureAlgebra::reduced_trace(const FieldVector& x) const {
  FieldElement tr(F_, Rat(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!table_[i][j][j].is_zero()) tr += x[i] * table_[i][j][j];
  }
  return tr * Rat(1, static_cast<long>(degree_));
}

std::optional<FieldElement> StructureAlgebra::as_scalar(const FieldVector& x) const {
  std::size_t pivot = dim();
  for (std::size_t i = 0; i < dim(); ++i)
    if (!one_[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot == dim()) return std::nullopt;
  FieldElement c = x[pivot] / one_[pivot];
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i] != c * one_[i]) return std::nullopt;
  return c;
}

bool StructureAlgebra::is_zero(const FieldVector& x) const {
  for (const auto& v : x)
    if (!v.is_zero()) return false;
  return true;
}

Certificate StructureAlgebra::check_associative(std::size_t sample, std::uint64_t seed) const {
  Certificate c;
  std::string bad;
  const std::size_t d = dim();
  auto test = [&](std::size_t i, std::size_t j, std::size_t k) {
    auto ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
    if (mul(table_[i][j], ek) != mul(ei, table_[j][k]))
      bad = "(" + basis_[i] + ", " + basis_[j] + ", " + basis_[k] + ")";
  };
  if (sample == 0) {
    for (std::size_t i = 0; i < d && bad.empty(); ++i)
      for (std::size_t j = 0; j < d && bad.empty(); ++j)
        for (std::size_t k = 0; k < d && bad.empty(); ++k) test(i, j, k);
  } else {
    Rng rng(seed);
    for (std::size_t s = 0; s < sample && bad.empty(); ++s) test(rng.index(d), rng.index(d), rng.index(d));
  }
  c.add(sample ? "associativity on sampled basis triples" : "associativity on all basis triples", bad.empty(), bad);
  return c;
}

Certificate StructureAlgebra::check_unit() const {
  Certificate c;
  std::string bad;
  for (std::size_t i = 0; i < dim() && bad.empty(); ++i) {
    auto e = basis_vector(i);
    if (mul(one_, e) != e || mul(e, one_) != e) bad = basis_[i];
  }
  c.add("two-sided unit", bad.empty(), bad);
  return c;
}

std::vector<FieldVector> StructureAlgebra::centralizer(const std::vector<FieldVector>& elems) const {
  const std::size_t d = dim();
  FieldMatrix m = field_zero(F_, d * elems.size(), d);
  for (std::size_t e = 0; e < elems.size(); ++e)
    for (std::size_t j = 0; j < d; ++j) {
      auto ej = basis_vector(j);
      auto diff = mul(ej, elems[e]);
      auto other = mul(elems[e], ej);
      for (std::size_t i = 0; i < d; ++i) m(e * d + i, j) = diff[i] - other[i];
    }
  return kernel(m);
}

std::string StructureAlgebra::to_string(const FieldVector& x) const {
  std::string s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + x[i].to_string() + ")*" + basis_[i];
  }
  return s.empty() ? "0" : s;
}

StructureAlgebra matrix_algebra(const FieldPtr& F, std::size_t n) {
  const std::size_t d = n * n;
  FieldElement zero(F, Rat(0)), one(F, Rat(1));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<std::vector<FieldVector>> table(d, std::vector<FieldVector>(d, FieldVector(d, zero)));
  // E_ij E_kl = [j = k] E_il
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) table[i * n + j][j * n + l][i * n + l] = one;
  FieldVector unit(d, zero);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = one;
  return StructureAlgebra(F, names, table, unit, n);
}

StructureAlgebra tensor_product(const StructureAlgebra& a, const StructureAlgebra& b) {
  if (a.field() != b.field()) throw std::invalid_argument("tensor_product: different base fields");
  const auto& F = a.field();
  const std::size_t da = a.dim(), db = b.dim(), d = da * db;
  FieldElement zero(F, Rat(0));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) names.push_back(a.basis()[i] + "*" + b.basis()[j]);
  std::vector<std::vector<FieldVector>> table(d, std::vector<FieldVector>(d, FieldVector(d, zero)));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < da; ++k) {
      auto pa = a.mul(a.basis_vector(i), a.basis_vector(k));
      for (std::size_t j = 0; j < db; ++j)
        for (std::size_t l = 0; l < db; ++l) {
          auto pb = b.mul(b.basis_vector(j), b.basis_vector(l));
          auto& out = table[i * db + j][k * db + l];
          for (std::size_t p = 0; p < da; ++p) {
            if (pa[p].is_zero()) continue;
            for (std::size_t q = 0; q < db; ++q)
              if (!pb[q].is_zero()) out[p * db + q] = pa[p] * pb[q];
          }
        }
    }
  FieldVector unit(d, zero);
  for (std::size_t p = 0; p < da; ++p)
    for (std::size_t q = 0; q < db; ++q)
      if (!a.unit()[p].is_zero() && !b.unit()[q].is_zero()) unit[p * db + q] = a.unit()[p] * b.unit()[q];
  return StructureAlgebra(F, names, table, unit, a.degree() * b.degree());
}

FieldElement root_of_unity(const FieldPtr& F, int m) {
  const int n = F->conductor();
  if (m <= 0) throw std::invalid_argument("root_of_unity: order must be positive");
  if (n % m == 0) return FieldElement::zeta(F, n / m);
  if (n % 2 == 1 && (2 * n) % m == 0) return (-FieldElement::zeta(F)).pow((2 * n) / m);  // -zeta_N has order 2N
  throw std::invalid_argument("no primitive " + std::to_string(m) + "-th root of unity in Q(zeta_" +
                              std::to_string(n) + ")");
}

SymbolAlgebra::SymbolAlgebra(FieldPtr F, FieldElement a, FieldElement b, int m)
    : F_(std::move(F)), a_(std::move(a)), b_(std::move(b)), m_(m) {
  if (m_ < 1) throw std::invalid_argument("symbol algebra: degree must be positive");
  if (a_.is_zero() || b_.is_zero()) throw std::invalid_argument("zero parameter");
  zeta_ = root_of_unity(F_, m_);
  zpow_.push_back(FieldElement(F_, Rat(1)));
  for (int k = 1; k < m_; ++k) zpow_.push_back(zpow_.back() * zeta_);
}

FieldVector SymbolAlgebra::one() const {
  FieldVector v(dim(), FieldElement(F_, Rat(0)));
  v[0] = FieldElement(F_, Rat(1));
  return v;
}

FieldVector SymbolAlgebra::x() const {
  FieldVector v(dim(), FieldElement(F_, Rat(0)));
  if (m_ == 1) v[0] = a_;
  else v[1] = FieldElement(F_, Rat(1));
  return v;
}

FieldVector SymbolAlgebra::y() const {
  FieldVector v(dim(), FieldElement(F_, Rat(0)));
  if (m_ == 1) v[0] = b_;
  else v[static_cast<std::size_t>(m_)] = FieldElement(F_, Rat(1));
  return v;
}

FieldVector SymbolAlgebra::mul(const FieldVector& p, const FieldVector& q) const {
  // (x^i y^j)(x^k y^l) = zeta^(-jk) x^(i+k) y^(j+l)
  const std::size_t m = static_cast<std::size_t>(m_);
  FieldVector r(dim(), FieldElement(F_, Rat(0)));
  for (std::size_t s = 0; s < dim(); ++s) {
    if (p[s].is_zero()) continue;
    std::size_t i = s % m, j = s / m;
    for (std::size_t t = 0; t < dim(); ++t) {
      if (q[t].is_zero()) continue;
      std::size_t k = t % m, l = t / m;
      FieldElement c = p[s] * q[t] * zpow_[(m - (j * k) % m) % m];
      std::size_t xi = i + k, yj = j + l;
      if (xi >= m) {
        xi -= m;
        c = c * a_;
      }
      if (yj >= m) {
        yj -= m;
        c = c * b_;
      }
      r[xi + m * yj] += c;
    }
  }
  return r;
}

FieldVector SymbolAlgebra::pow(const FieldVector& p, unsigned k) const {
  FieldVector r = one();
  for (unsigned i = 0; i < k; ++i) r = mul(r, p);
  return r;
}

Certificate SymbolAlgebra::check_relations() const {
  Certificate c;
  const unsigned m = static_cast<unsigned>(m_);
  FieldVector A = one(), B = one();
  for (auto& v : A) v = v * a_;
  for (auto& v : B) v = v * b_;
  c.add("x^m = a", pow(x(), m) == A);
  c.add("y^m = b", pow(y(), m) == B);
  FieldVector zyx = mul(y(), x());
  for (auto& v : zyx) v = v * zeta_;
  c.add("xy = zeta yx", mul(x(), y()) == zyx);
  bool primitive = zeta_.pow(m_).is_one();
  for (int k = 1; k < m_; ++k) primitive = primitive && !zpow_[static_cast<std::size_t>(k)].is_one();
  c.add("zeta primitive", primitive);
  auto st = structure();
  c.append(st.check_associative(dim() <= 16 ? 0 : 2000));
  return c;
}

StructureAlgebra SymbolAlgebra::structure() const {
  const std::size_t d = dim(), m = static_cast<std::size_t>(m_);
  std::vector<std::string> names;
  for (std::size_t s = 0; s < d; ++s) {
    std::size_t i = s % m, j = s / m;
    std::string n;
    if (i) n += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j) n += j == 1 ? "y" : "y^" + std::to_string(j);
    names.push_back(n.empty() ? "1" : n);
  }
  std::vector<std::vector<FieldVector>> table(d, std::vector<FieldVector>(d));
  FieldVector e(d, FieldElement(F_, Rat(0)));
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) {
      FieldVector es = e, et = e;
      es[s] = FieldElement(F_, Rat(1));
      et[t] = FieldElement(F_, Rat(1));
      table[s][t] = mul(es, et);
    }
  return StructureAlgebra(F_, names, table, one(), m);
}

SymbolAlgebra symbol_algebra(const FieldPtr& F, const FieldElement& a, const FieldElement& b, int m) {
  return SymbolAlgebra(F, a, b, m);
}

}  // namespace brauerlab
