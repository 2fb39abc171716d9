#include "brauerlab/crossed.hpp"

#include <stdexcept>

#include "brauerlab/rng.hpp"

namespace brauerlab {

CrossedAlgebra::CrossedAlgebra(KummerPtr K, KummerField::Elem u, KummerField::Elem b1, KummerField::Elem b2)
    : K_(std::move(K)), u_(std::move(u)), b1_(std::move(b1)), b2_(std::move(b2)) {
  if (K_->is_zero(u_) || K_->is_zero(b1_) || K_->is_zero(b2_)) throw std::invalid_argument("zero parameter");
  const int m = K_->m();
  const std::size_t n = group_order();
  KummerField::Elem uinv = K_->inverse(u_);
  // N_k(v) = v sigma1(v) ... sigma1^(k-1)(v)
  std::vector<KummerField::Elem> norms{K_->one()};
  for (int k = 1; k < m; ++k) norms.push_back(K_->mul(norms.back(), K_->sigma(uinv, k - 1, 0)));
  std::vector<KummerField::Elem> b2conj;
  for (int j = 0; j < m; ++j) b2conj.push_back(K_->sigma(b2_, j, 0));
  c_.assign(n * n, K_->one());
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t wp = 0; wp < n; ++wp) {
      int k = static_cast<int>(w) % m, l = static_cast<int>(w) / m;
      int kp = static_cast<int>(wp) % m, lp = static_cast<int>(wp) / m;
      KummerField::Elem c = K_->one();
      // z2 z1^k' = N_k'(u^-1) z1^k' z2
      if (l == 1 && kp > 0) c = K_->sigma(norms[static_cast<std::size_t>(kp)], k, 0);
      if (k + kp >= m) c = K_->mul(c, b1_);
      if (l + lp == 2) c = K_->mul(c, b2conj[static_cast<std::size_t>((k + kp) % m)]);
      c_[w * n + wp] = std::move(c);
    }
}

std::size_t CrossedAlgebra::compose(std::size_t w, std::size_t wp) const {
  const std::size_t m = static_cast<std::size_t>(K_->m());
  return (w % m + wp % m) % m + m * ((w / m + wp / m) % 2);
}

CrossedAlgebra::Element CrossedAlgebra::zero() const { return Element(group_order(), K_->zero()); }

CrossedAlgebra::Element CrossedAlgebra::one() const { return from_k(K_->one()); }

CrossedAlgebra::Element CrossedAlgebra::from_k(const KummerField::Elem& x) const {
  Element e = zero();
  e[0] = x;
  return e;
}

CrossedAlgebra::Element CrossedAlgebra::from_base(const FieldElement& c) const { return from_k(K_->from_base(c)); }

CrossedAlgebra::Element CrossedAlgebra::monomial(const KummerField::Elem& x, int k, int l) const {
  const int m = K_->m();
  Element e = zero();
  e[static_cast<std::size_t>(((k % m) + m) % m + m * (((l % 2) + 2) % 2))] = x;
  return e;
}

CrossedAlgebra::Element CrossedAlgebra::add(const Element& x, const Element& y) const {
  Element r(x);
  for (std::size_t w = 0; w < group_order(); ++w) r[w] = K_->add(r[w], y[w]);
  return r;
}

CrossedAlgebra::Element CrossedAlgebra::sub(const Element& x, const Element& y) const {
  Element r(x);
  for (std::size_t w = 0; w < group_order(); ++w) r[w] = K_->sub(r[w], y[w]);
  return r;
}

CrossedAlgebra::Element CrossedAlgebra::scale(const Element& x, const FieldElement& c) const {
  Element r(x);
  for (auto& v : r) v = K_->scale(v, c);
  return r;
}

CrossedAlgebra::Element CrossedAlgebra::mul(const Element& x, const Element& y) const {
  const int m = K_->m();
  Element r = zero();
  for (std::size_t w = 0; w < group_order(); ++w) {
    if (K_->is_zero(x[w])) continue;
    int k = static_cast<int>(w) % m, l = static_cast<int>(w) / m;
    for (std::size_t wp = 0; wp < group_order(); ++wp) {
      if (K_->is_zero(y[wp])) continue;
      // x z^w y z^w' = x sigma_w(y) c(w, w') z^(ww')
      auto t = K_->mul(K_->mul(x[w], K_->sigma(y[wp], k, l)), cocycle(w, wp));
      auto& slot = r[compose(w, wp)];
      slot = K_->add(slot, t);
    }
  }
  return r;
}

CrossedAlgebra::Element CrossedAlgebra::pow(const Element& x, unsigned k) const {
  Element r = one();
  for (unsigned i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

bool CrossedAlgebra::equal(const Element& x, const Element& y) const {
  for (std::size_t w = 0; w < group_order(); ++w)
    if (!K_->equal(x[w], y[w])) return false;
  return true;
}

bool CrossedAlgebra::is_zero(const Element& x) const {
  for (const auto& v : x)
    if (!K_->is_zero(v)) return false;
  return true;
}

std::optional<FieldElement> CrossedAlgebra::as_scalar(const Element& x) const {
  for (std::size_t w = 1; w < group_order(); ++w)
    if (!K_->is_zero(x[w])) return std::nullopt;
  return K_->as_base(x[0]);
}

FieldElement CrossedAlgebra::reduced_trace(const Element& x) const {
  return x[0][0] * Rat(static_cast<long>(group_order()));
}

FieldVector CrossedAlgebra::flatten(const Element& x) const {
  FieldVector v;
  v.reserve(dim());
  for (const auto& kx : x)
    for (const auto& c : kx) v.push_back(c);
  return v;
}

CrossedAlgebra::Element CrossedAlgebra::unflatten(const FieldVector& v) const {
  const std::size_t n = group_order();
  Element e = zero();
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t i = 0; i < n; ++i) e[w][i] = v[i + n * w];
  return e;
}

StructureAlgebra CrossedAlgebra::structure() const {
  const std::size_t n = group_order(), d = dim();
  const int m = K_->m();
  std::vector<std::string> names;
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t i = 0; i < n; ++i) {
      int a = static_cast<int>(i) % m, b = static_cast<int>(i) / m;
      int k = static_cast<int>(w) % m, l = static_cast<int>(w) / m;
      std::string s;
      auto part = [&](const std::string& g, int e) {
        if (!e) return;
        if (!s.empty()) s += "*";
        s += g + (e > 1 ? "^" + std::to_string(e) : "");
      };
      part("alpha1", a);
      part("alpha2", b);
      part("z1", k);
      part("z2", l);
      names.push_back(s.empty() ? "1" : s);
    }
  auto basis = [&](std::size_t idx) {
    FieldVector v(d, FieldElement(base(), Rat(0)));
    v[idx] = FieldElement(base(), Rat(1));
    return unflatten(v);
  };
  std::vector<Element> elems;
  for (std::size_t i = 0; i < d; ++i) elems.push_back(basis(i));
  std::vector<std::vector<FieldVector>> table(d, std::vector<FieldVector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) table[i][j] = flatten(mul(elems[i], elems[j]));
  return StructureAlgebra(base(), names, table, flatten(one()), n);
}

std::string CrossedAlgebra::to_string(const Element& x) const {
  const int m = K_->m();
  std::string s;
  for (std::size_t w = 0; w < group_order(); ++w) {
    if (K_->is_zero(x[w])) continue;
    int k = static_cast<int>(w) % m, l = static_cast<int>(w) / m;
    std::string z;
    if (k) z += k == 1 ? "z1" : "z1^" + std::to_string(k);
    if (l) z += std::string(z.empty() ? "" : "*") + "z2";
    if (!s.empty()) s += " + ";
    s += z.empty() ? K_->to_string(x[w]) : "(" + K_->to_string(x[w]) + ")*" + z;
  }
  return s.empty() ? "0" : s;
}

Certificate CrossedAlgebra::check_cocycle() const {
  Certificate c;
  const std::size_t n = group_order();
  const int m = K_->m();
  std::string bad;
  for (std::size_t w = 0; w < n && bad.empty(); ++w)
    for (std::size_t wp = 0; wp < n && bad.empty(); ++wp)
      for (std::size_t wpp = 0; wpp < n && bad.empty(); ++wpp) {
        auto lhs = K_->mul(cocycle(w, wp), cocycle(compose(w, wp), wpp));
        auto rhs = K_->mul(K_->sigma(cocycle(wp, wpp), static_cast<int>(w) % m, static_cast<int>(w) / m),
                           cocycle(w, compose(wp, wpp)));
        if (!K_->equal(lhs, rhs))
          bad = "w=(" + std::to_string(w % m) + "," + std::to_string(w / m) + ") w'=(" + std::to_string(wp % m) +
                "," + std::to_string(wp / m) + ") w''=(" + std::to_string(wpp % m) + "," + std::to_string(wpp / m) +
                ")";
      }
  c.add("two-cocycle identity", bad.empty(), bad);
  return c;
}

Certificate CrossedAlgebra::check_basis_associativity(std::size_t sample, std::uint64_t seed) const {
  Certificate c;
  const std::size_t n = group_order(), d = dim();
  auto basis = [&](std::size_t idx) {
    Element e = zero();
    e[idx / n][idx % n] = FieldElement(base(), Rat(1));
    return e;
  };
  std::vector<Element> elems;
  for (std::size_t i = 0; i < d; ++i) elems.push_back(basis(i));
  std::string bad;
  auto test = [&](std::size_t i, std::size_t j, std::size_t k) {
    if (!equal(mul(mul(elems[i], elems[j]), elems[k]), mul(elems[i], mul(elems[j], elems[k]))))
      bad = "basis triple (" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
  };
  if (sample == 0) {
    for (std::size_t i = 0; i < d && bad.empty(); ++i)
      for (std::size_t j = 0; j < d && bad.empty(); ++j)
        for (std::size_t k = 0; k < d && bad.empty(); ++k) test(i, j, k);
  } else {
    Rng rng(seed);
    for (std::size_t s = 0; s < sample && bad.empty(); ++s) test(rng.index(d), rng.index(d), rng.index(d));
  }
  c.add(sample ? "associativity on " + std::to_string(sample) + " sampled basis triples"
               : "associativity on all basis triples",
        bad.empty(), bad);
  return c;
}

Certificate CrossedAlgebra::check_relations() const {
  Certificate c;
  const int m = K_->m();
  std::string bad1, bad2;
  for (std::size_t i = 0; i < K_->dim(); ++i) {
    KummerField::Elem a = K_->zero();
    a[i] = FieldElement(base(), Rat(1));
    if (!equal(mul(z1(), from_k(a)), mul(from_k(K_->sigma(a, 1, 0)), z1())) && bad1.empty())
      bad1 = "basis element " + K_->to_string(a);
    if (!equal(mul(z2(), from_k(a)), mul(from_k(K_->sigma(a, 0, 1)), z2())) && bad2.empty())
      bad2 = "basis element " + K_->to_string(a);
  }
  c.add("z1 x z1^-1 = sigma1(x)", bad1.empty(), bad1);
  c.add("z2 x z2^-1 = sigma2(x)", bad2.empty(), bad2);
  c.add("z1^m = b1", equal(pow(z1(), static_cast<unsigned>(m)), from_k(b1_)));
  c.add("z2^2 = b2", equal(pow(z2(), 2), from_k(b2_)));
  c.add("z1 z2 = u z2 z1", equal(mul(z1(), z2()), mul(from_k(u_), mul(z2(), z1()))));
  bool unit = true;
  for (const auto& e : {z1(), z2(), alpha1(), alpha2()})
    unit = unit && equal(mul(one(), e), e) && equal(mul(e, one()), e);
  c.add("unit", unit);
  return c;
}

CrossedAlgebra crossed_from_data(const KummerPtr& K, const KummerField::Elem& u, const KummerField::Elem& b1,
                                 const KummerField::Elem& b2, bool literal) {
  if (K->is_zero(u) || K->is_zero(b1) || K->is_zero(b2)) throw std::invalid_argument("zero parameter");
  if (!K->in_fixed_sigma1(b1)) throw std::invalid_argument("b1 must lie in F(alpha2)");
  if (!K->in_fixed_sigma2(b2)) throw std::invalid_argument("b2 must lie in F(alpha1)");
  CrossedAlgebra A(K, u, b1, b2);
  Certificate c = A.check_cocycle();
  if (c.ok() && literal) c.append(A.check_basis_associativity(K->m() <= 3 ? 0 : 10000));
  if (!c.ok()) throw std::invalid_argument("associativity violated: incompatible (u, b1, b2) at " + c.failure());
  return A;
}

CrossedAlgebra twist(const CrossedAlgebra& A, const KummerField::Elem& k, const KummerField::Elem& l) {
  const auto& K = A.kummer();
  auto b1 = K->mul(K->norm_sigma1(k), A.b1());
  auto b2 = K->mul(K->norm_sigma2(l), A.b2());
  auto u = K->mul(A.u(), K->mul(K->mul(k, K->sigma(l, 1, 0)), K->inverse(K->mul(K->sigma(k, 0, 1), l))));
  return CrossedAlgebra(K, u, b1, b2);
}

CrossedAlgebra twisted_crossed(const KummerPtr& K, const KummerField::Elem& k, const KummerField::Elem& l,
                               const FieldElement& beta, const FieldElement& delta) {
  if (beta.is_zero() || delta.is_zero()) throw std::invalid_argument("zero parameter");
  return twist(CrossedAlgebra(K, K->one(), K->from_base(beta), K->from_base(delta)), k, l);
}

CrossedAlgebra tensor_brauer(const CrossedAlgebra& a, const CrossedAlgebra& b) {
  const auto& Ka = a.kummer();
  const auto& Kb = b.kummer();
  if (Ka != Kb && (Ka->m() != Kb->m() || Ka->base() != Kb->base() || Ka->a1() != Kb->a1() || Ka->a2() != Kb->a2()))
    throw std::invalid_argument("mismatched K-data");
  return CrossedAlgebra(Ka, Ka->mul(a.u(), b.u()), Ka->mul(a.b1(), b.b1()), Ka->mul(a.b2(), b.b2()));
}

Certificate bergman_power(const CrossedAlgebra& A) {
  Certificate c;
  const auto& K = A.kummer();
  auto gamma = A.add(A.z1(), A.alpha1());
  auto power = A.pow(gamma, static_cast<unsigned>(A.m()));
  auto expect = A.from_k(K->add(A.b1(), K->from_base(K->a1())));
  std::string detail;
  if (!A.equal(power, expect)) detail = "got " + A.to_string(power);
  c.add("(z1 + alpha1)^m = b1 + a1", detail.empty(), detail);
  return c;
}

nlohmann::json to_json(const CrossedAlgebra& A) {
  const auto& K = A.kummer();
  return {{"m", A.m()},
          {"a1", K->a1().to_string()},
          {"a2", K->a2().to_string()},
          {"u", K->to_string(A.u())},
          {"b1", K->to_string(A.b1())},
          {"b2", K->to_string(A.b2())},
          {"dimension", A.dim()}};
}

}  // namespace brauerlab
