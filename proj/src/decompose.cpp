#include "brauerlab/decompose.hpp"

#include <stdexcept>

namespace brauerlab {

namespace {

using Element = CrossedAlgebra::Element;

Element basis_element(const CrossedAlgebra& A, std::size_t idx) {
  FieldVector v(A.dim(), FieldElement(A.base(), Rat(0)));
  v[idx] = FieldElement(A.base(), Rat(1));
  return A.unflatten(v);
}

std::size_t element_rank(const CrossedAlgebra& A, const std::vector<Element>& elems) {
  FieldMatrix m = field_zero(A.base(), A.dim(), elems.size());
  for (std::size_t j = 0; j < elems.size(); ++j) m.set_column(j, A.flatten(elems[j]));
  return rank(m);
}

std::vector<Element> powers(const CrossedAlgebra& A, const Element& g, std::size_t n) {
  std::vector<Element> out{A.one()};
  for (std::size_t i = 1; i < n; ++i) out.push_back(A.mul(out.back(), g));
  return out;
}

/// Nonzero scalar value of x^k, if any.
std::optional<FieldElement> scalar_power(const CrossedAlgebra& A, const Element& x, unsigned k) {
  auto s = A.as_scalar(A.pow(x, k));
  if (s && s->is_zero()) return std::nullopt;
  return s;
}

bool commute(const CrossedAlgebra& A, const Element& x, const Element& y) {
  return A.equal(A.mul(x, y), A.mul(y, x));
}

CrossedAlgebra unit_twist(const KummerPtr& K, const FieldElement& f) {
  return CrossedAlgebra(K, K->one(), K->from_base(f), K->one());
}

void add_cyclic_checks(Certificate& c, const CrossedAlgebra& A, const Element& gamma,
                       const std::optional<Element>& delta, const std::optional<FieldElement>& d,
                       const std::string& prefix) {
  const unsigned n = static_cast<unsigned>(2 * A.m());
  c.add(prefix + "1, gamma, ..., gamma^(2m-1) linearly independent",
        element_rank(A, powers(A, gamma, n)) == n);
  if (!delta) return;
  FieldElement z = root_of_unity(A.base(), static_cast<int>(n));
  c.add(prefix + "delta gamma = zeta_2m gamma delta",
        A.equal(A.mul(*delta, gamma), A.scale(A.mul(gamma, *delta), z)));
  auto dp = A.as_scalar(A.pow(*delta, n));
  c.add(prefix + "delta^2m = d in F*", dp && d && !dp->is_zero() && *dp == *d);
}

}  // namespace

int crossed_conductor(int m) { return 2 * m; }

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::generic: return "generic";
    case Branch::f1_zero: return "f1=0 cyclic";
    case Branch::f2_zero: return "f2=0 split-off quaternion";
  }
  return "";
}

CyclicSymbol cyclic_to_symbol(const CrossedAlgebra& A, const Element& gamma) {
  const unsigned n = static_cast<unsigned>(2 * A.m());
  auto c = scalar_power(A, gamma, n);
  if (!c) throw std::invalid_argument("gamma^2m is not a nonzero scalar");
  FieldElement z = root_of_unity(A.base(), static_cast<int>(n));
  const std::size_t d = A.dim();
  FieldMatrix sys = field_zero(A.base(), d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Element e = basis_element(A, j);
    sys.set_column(j, A.flatten(A.sub(A.mul(e, gamma), A.scale(A.mul(gamma, e), z))));
  }
  auto ker = kernel(sys);
  for (const auto& v : ker) {
    Element delta = A.unflatten(v);
    if (auto dd = scalar_power(A, delta, n)) {
      CyclicSymbol r{gamma, delta, *c, *dd, ker.size(), {}};
      r.checks.add("gamma^2m = c in F*", true, c->to_string());
      add_cyclic_checks(r.checks, A, gamma, delta, dd, "");
      return r;
    }
  }
  throw std::runtime_error("no invertible solution found (kernel dimension " + std::to_string(ker.size()) + ")");
}

Certificate verify_decomposition(const CrossedAlgebra& A, const DecompositionCertificate& cert) {
  Certificate c;
  const auto& K = A.kummer();
  const int m = A.m();
  c.add("b1 = f1 + f2 alpha2", K->equal(A.b1(), K->in_alpha2(cert.f1, cert.f2)));
  switch (cert.branch) {
    case Branch::generic: {
      const FieldElement& a1 = K->a1();
      bool have = cert.f && cert.c && cert.twisted;
      c.add("generic witnesses present", have);
      if (!have) break;
      c.add("f1 f2 != 0", !cert.f1.is_zero() && !cert.f2.is_zero());
      c.add("f = -a1/f1", *cert.f == -(a1 / cert.f1));
      c.add("c = -a1 f2/f1", *cert.c == -(a1 * cert.f2 / cert.f1));
      CrossedAlgebra U = unit_twist(K, *cert.f);
      bool cyc = A.equal(U.pow(U.z1(), static_cast<unsigned>(m)), U.from_base(*cert.f)) &&
                 A.equal(U.mul(U.z1(), U.alpha1()), U.scale(U.mul(U.alpha1(), U.z1()), K->zeta())) &&
                 commute(U, U.z2(), U.z1()) && commute(U, U.z2(), U.alpha1()) &&
                 commute(U, U.alpha2(), U.z1()) && A.equal(U.pow(U.z2(), 2), U.one()) &&
                 A.equal(U.mul(U.z2(), U.alpha2()), U.scale(U.mul(U.alpha2(), U.z2()), FieldElement(A.base(), Rat(-1))));
      c.add("(K,G,1,f,1) = (f, a1)_m tensor (a2, 1)_2 on commuting generators", cyc);
      const CrossedAlgebra& Af = *cert.twisted;
      auto prod = tensor_brauer(A, U);
      c.add("A_f = A tensor (K,G,1,f,1) on cocycle parameters",
            K->equal(prod.u(), Af.u()) && K->equal(prod.b1(), Af.b1()) && K->equal(prod.b2(), Af.b2()) &&
                K->equal(Af.b1(), K->scale(A.b1(), *cert.f)));
      c.append(Af.check_cocycle(), "A_f ");
      c.add("gamma = z1 + alpha1", Af.equal(cert.gamma, Af.add(Af.z1(), Af.alpha1())));
      auto gm = Af.pow(cert.gamma, static_cast<unsigned>(m));
      c.add("gamma^m = c alpha2", Af.equal(gm, Af.scale(Af.alpha2(), *cert.c)));
      c.add("gamma^m not in F", !Af.as_scalar(gm).has_value());
      auto g2 = Af.as_scalar(Af.mul(gm, gm));
      FieldElement c2a2 = *cert.c * *cert.c * K->a2();
      c.add("gamma^2m = c^2 a2 in F*", g2 && *g2 == c2a2 && !c2a2.is_zero());
      add_cyclic_checks(c, Af, cert.gamma, cert.delta, cert.d, "");
      break;
    }
    case Branch::f1_zero: {
      c.add("f1 = 0", cert.f1.is_zero());
      c.add("gamma = z1", A.equal(cert.gamma, A.z1()));
      auto zm = A.pow(A.z1(), static_cast<unsigned>(m));
      c.add("z1^m = f2 alpha2 not in F", A.equal(zm, A.scale(A.alpha2(), cert.f2)) && !A.as_scalar(zm));
      auto z2m = A.as_scalar(A.mul(zm, zm));
      FieldElement v = cert.f2 * cert.f2 * K->a2();
      c.add("z1^2m = f2^2 a2 in F*", z2m && *z2m == v && !v.is_zero(), v.to_string());
      add_cyclic_checks(c, A, cert.gamma, cert.delta, cert.d, "");
      break;
    }
    case Branch::f2_zero: {
      c.add("f2 = 0", cert.f2.is_zero());
      c.add("z1^m = b1 in F*", !cert.f1.is_zero() && A.equal(A.pow(A.z1(), static_cast<unsigned>(m)), A.from_base(cert.f1)));
      c.add("z1 alpha1 = zeta_m alpha1 z1", A.equal(A.mul(A.z1(), A.alpha1()), A.scale(A.mul(A.alpha1(), A.z1()), K->zeta())));
      if (!cert.y || !cert.d) {
        c.add("quaternion generator present", false);
        break;
      }
      const Element& y = *cert.y;
      c.add("alpha2, y commute with z1 and alpha1",
            commute(A, A.alpha2(), A.z1()) && commute(A, A.alpha2(), A.alpha1()) && commute(A, y, A.z1()) &&
                commute(A, y, A.alpha1()));
      c.add("y alpha2 = -alpha2 y", A.equal(A.mul(y, A.alpha2()), A.scale(A.mul(A.alpha2(), y), FieldElement(A.base(), Rat(-1)))));
      auto y2 = A.as_scalar(A.mul(y, y));
      c.add("y^2 = d in F*", y2 && *y2 == *cert.d && !cert.d->is_zero());
      std::vector<Element> mons;
      auto zp = powers(A, A.z1(), static_cast<std::size_t>(m));
      auto ap = powers(A, A.alpha1(), static_cast<std::size_t>(m));
      std::vector<Element> q{A.one(), A.alpha2(), y, A.mul(A.alpha2(), y)};
      for (const auto& zi : zp)
        for (const auto& aj : ap) {
          auto za = A.mul(zi, aj);
          for (const auto& qk : q) mons.push_back(A.mul(za, qk));
        }
      c.add("dim (b1, a1)_m * dim (a2, d)_2 = dim A and products span", element_rank(A, mons) == A.dim());
      break;
    }
  }
  return c;
}

DecompositionCertificate decompose(const CrossedAlgebra& A, const DecomposeOptions& opt) {
  const auto& K = A.kummer();
  const int m = A.m();
  if (!K->in_fixed_sigma1(A.b1())) throw std::invalid_argument("b1 must lie in F(alpha2)");
  DecompositionCertificate cert;
  cert.f1 = A.b1()[KummerField::index(0, 0, m)];
  cert.f2 = A.b1()[KummerField::index(0, 1, m)];
  if (cert.f1.is_zero() && cert.f2.is_zero())
    throw std::invalid_argument("f1 = f2 = 0 simultaneously impossible for division input: both zero rejected");
  if (cert.f1.is_zero()) {
    cert.branch = Branch::f1_zero;
    cert.gamma = A.z1();
    if (opt.symbol) {
      auto cs = cyclic_to_symbol(A, cert.gamma);
      cert.delta = cs.delta;
      cert.d = cs.d;
      cert.symbols.push_back({cs.d, cs.c, 2 * m});
    }
  } else if (cert.f2.is_zero()) {
    cert.branch = Branch::f2_zero;
    cert.gamma = A.z1();
    // centralizer of <z1, alpha1>, then y in it with y alpha2 = -alpha2 y
    const std::size_t d = A.dim();
    FieldMatrix cm = field_zero(A.base(), 2 * d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Element e = basis_element(A, j);
      auto r1 = A.flatten(A.sub(A.mul(e, A.z1()), A.mul(A.z1(), e)));
      auto r2 = A.flatten(A.sub(A.mul(e, A.alpha1()), A.mul(A.alpha1(), e)));
      for (std::size_t i = 0; i < d; ++i) {
        cm(i, j) = r1[i];
        cm(d + i, j) = r2[i];
      }
    }
    std::vector<Element> cent;
    for (const auto& v : kernel(cm)) cent.push_back(A.unflatten(v));
    FieldMatrix am = field_zero(A.base(), d, cent.size());
    for (std::size_t j = 0; j < cent.size(); ++j)
      am.set_column(j, A.flatten(A.add(A.mul(cent[j], A.alpha2()), A.mul(A.alpha2(), cent[j]))));
    for (const auto& v : kernel(am)) {
      Element y = A.zero();
      for (std::size_t j = 0; j < cent.size(); ++j)
        if (!v[j].is_zero()) y = A.add(y, A.scale(cent[j], v[j]));
      if (auto y2 = scalar_power(A, y, 2)) {
        cert.y = y;
        cert.d = *y2;
        break;
      }
    }
    if (!cert.y)
      throw std::runtime_error("no quaternion generator found (centralizer dimension " + std::to_string(cent.size()) + ")");
    cert.symbols.push_back({cert.f1, K->a1(), m});
    cert.symbols.push_back({K->a2(), *cert.d, 2});
  } else {
    cert.branch = Branch::generic;
    cert.f = -(K->a1() / cert.f1);
    cert.c = -(K->a1() * cert.f2 / cert.f1);
    cert.twisted = tensor_brauer(A, unit_twist(K, *cert.f));
    const CrossedAlgebra& Af = *cert.twisted;
    cert.gamma = Af.add(Af.z1(), Af.alpha1());
    cert.symbols.push_back({K->a1(), *cert.f, m});
    if (opt.symbol) {
      auto cs = cyclic_to_symbol(Af, cert.gamma);
      cert.delta = cs.delta;
      cert.d = cs.d;
      cert.symbols.push_back({cs.d, cs.c, 2 * m});
    }
  }
  cert.checks = verify_decomposition(A, cert);
  return cert;
}

namespace {

nlohmann::json elem_json(const FieldVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

FieldVector parse_vec(const FieldPtr& F, const nlohmann::json& a) {
  FieldVector v;
  for (const auto& s : a) v.push_back(parse_field_element(F, s.get<std::string>()));
  return v;
}

nlohmann::json checks_json(const Certificate& c) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& ch : c.checks) {
    nlohmann::json e{{"name", ch.name}, {"passed", ch.passed}};
    if (!ch.detail.empty()) e["detail"] = ch.detail;
    a.push_back(e);
  }
  return a;
}

}  // namespace

nlohmann::json to_json(const DecompositionCertificate& cert, const CrossedAlgebra& A) {
  const auto& K = A.kummer();
  nlohmann::json j;
  j["input"] = {{"conductor", A.base()->conductor()},
                {"variables", A.base()->vars()},
                {"m", A.m()},
                {"a1", K->a1().to_string()},
                {"a2", K->a2().to_string()},
                {"u", elem_json(A.u())},
                {"b1", elem_json(A.b1())},
                {"b2", elem_json(A.b2())}};
  j["branch"] = branch_name(cert.branch);
  nlohmann::json w{{"f1", cert.f1.to_string()}, {"f2", cert.f2.to_string()}};
  if (cert.f) w["f"] = cert.f->to_string();
  if (cert.c) w["c"] = cert.c->to_string();
  if (cert.d) w["d"] = cert.d->to_string();
  const CrossedAlgebra& host = cert.twisted ? *cert.twisted : A;
  w["gamma"] = elem_json(host.flatten(cert.gamma));
  if (cert.delta) w["delta"] = elem_json(host.flatten(*cert.delta));
  if (cert.y) w["y"] = elem_json(A.flatten(*cert.y));
  j["witnesses"] = w;
  nlohmann::json syms = nlohmann::json::array();
  for (const auto& s : cert.symbols) syms.push_back({{"a", s.a.to_string()}, {"b", s.b.to_string()}, {"m", s.m}});
  j["brauer_relation"] = syms;
  j["checks"] = checks_json(cert.checks);
  j["status"] = cert.checks.ok() ? "pass" : "fail";
  return j;
}

Certificate reverify_decomposition(const nlohmann::json& j) {
  const auto& in = j.at("input");
  auto F = make_field(in.at("conductor").get<int>(), in.at("variables").get<std::vector<std::string>>());
  int m = in.at("m").get<int>();
  auto K = std::make_shared<const KummerField>(F, m, parse_field_element(F, in.at("a1")),
                                               parse_field_element(F, in.at("a2")));
  CrossedAlgebra A(K, parse_vec(F, in.at("u")), parse_vec(F, in.at("b1")), parse_vec(F, in.at("b2")));
  DecompositionCertificate cert;
  std::string br = j.at("branch").get<std::string>();
  if (br == branch_name(Branch::generic)) cert.branch = Branch::generic;
  else if (br == branch_name(Branch::f1_zero)) cert.branch = Branch::f1_zero;
  else if (br == branch_name(Branch::f2_zero)) cert.branch = Branch::f2_zero;
  else throw std::invalid_argument("unknown branch: " + br);
  const auto& w = j.at("witnesses");
  auto get = [&](const char* k) -> std::optional<FieldElement> {
    if (!w.contains(k)) return std::nullopt;
    return parse_field_element(F, w.at(k).get<std::string>());
  };
  cert.f1 = *get("f1");
  cert.f2 = *get("f2");
  cert.f = get("f");
  cert.c = get("c");
  cert.d = get("d");
  if (cert.branch == Branch::generic && cert.f) cert.twisted = tensor_brauer(A, unit_twist(K, *cert.f));
  const CrossedAlgebra& host = cert.twisted ? *cert.twisted : A;
  cert.gamma = host.unflatten(parse_vec(F, w.at("gamma")));
  if (w.contains("delta")) cert.delta = host.unflatten(parse_vec(F, w.at("delta")));
  if (w.contains("y")) cert.y = A.unflatten(parse_vec(F, w.at("y")));
  Certificate c = verify_decomposition(A, cert);
  // stored verdicts must match the recomputed ones
  bool same = j.contains("checks") && j.at("checks").size() == c.checks.size();
  for (std::size_t i = 0; same && i < c.checks.size(); ++i)
    same = j["checks"][i].at("name") == c.checks[i].name && j["checks"][i].at("passed") == c.checks[i].passed;
  c.add("stored check results agree", same);
  return c;
}

namespace {

KummerField::Elem random_k(const KummerPtr& K, Rng& rng) {
  KummerField::Elem x = K->zero();
  const int m = K->m();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j) {
      x[KummerField::index(i, j, m)] = FieldElement(K->base(), Rat(rng.uniform(-5, 5)));
    }
  return x;
}

FieldElement random_nonzero(const FieldPtr& F, Rng& rng, int lo, int hi) {
  long v = 0;
  while (v == 0) v = rng.uniform(lo, hi);
  return FieldElement(F, Rat(v));
}

}  // namespace

CrossedAlgebra random_crossed_instance(int m, Rng& rng, std::optional<Branch> force) {
  auto F = make_field(crossed_conductor(m), {});
  const Branch want = force.value_or(Branch::generic);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    FieldElement a1 = random_nonzero(F, rng, -30, 30), a2 = random_nonzero(F, rng, -30, 30);
    if (is_square(a1) || is_square(a2) || is_square(a1 * a2)) continue;
    auto K = std::make_shared<const KummerField>(F, m, a1, a2);
    FieldElement beta = random_nonzero(F, rng, -9, 9), delta = random_nonzero(F, rng, -9, 9);
    // k in F(alpha1) keeps N_sigma1(k) in F, so the seed's f1 = 0 or f2 = 0 survives the twist
    KummerField::Elem k = random_k(K, rng), l = random_k(K, rng);
    if (want != Branch::generic)
      for (int i = 0; i < m; ++i) k[KummerField::index(i, 1, m)] = FieldElement(F, Rat(0));
    if (K->norm(k).is_zero() || K->norm(l).is_zero()) continue;
    CrossedAlgebra seed(K, K->one(), K->from_base(beta), K->from_base(delta));
    if (want == Branch::f1_zero) {
      // z1^m = beta alpha2, z2^2 = delta alpha1, z1 z2 = zeta_2m z2 z1
      seed = CrossedAlgebra(K, K->from_base(root_of_unity(F, 2 * m)), K->scale(K->alpha2(), beta),
                            K->scale(K->alpha1(), delta));
    }
    CrossedAlgebra A = twist(seed, k, l);
    FieldElement f1 = A.b1()[0], f2 = A.b1()[KummerField::index(0, 1, m)];
    if ((want == Branch::f1_zero) != f1.is_zero() || (want == Branch::f2_zero) != f2.is_zero()) continue;
    return A;
  }
  throw std::runtime_error("no random crossed instance found");
}

CrossedAlgebra symbolic_crossed_family(int m) {
  auto F = make_field(crossed_conductor(m), {"a1", "a2", "k0", "k1", "k2", "beta", "delta"});
  auto v = [&](const char* s) { return FieldElement::variable(F, s); };
  auto K = std::make_shared<const KummerField>(F, m, v("a1"), v("a2"));
  KummerField::Elem k = K->zero();
  k[KummerField::index(0, 0, m)] = v("k0");
  k[KummerField::index(1, 0, m)] = v("k1");
  k[KummerField::index(0, 1, m)] = v("k2");
  return twisted_crossed(K, k, K->one(), v("beta"), v("delta"));
}

SpecializedSymbols specialize_decomposition(const StructureAlgebra& B, const std::string& t,
                                            const std::vector<SymbolGenerators>& gens,
                                            const std::vector<FieldElement>& avoid, Rng& rng) {
  const FieldPtr& F = B.field();
  auto ti = F->var_index(t);
  if (!ti) throw std::invalid_argument("undeclared variable " + t);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Rat t0(rng.uniform(-20, 20));
    std::map<std::size_t, FieldElement> img{{*ti, FieldElement(F, t0)}};
    SpecializedSymbols out;
    out.t0 = t0;
    bool ok = true;
    try {
      for (const auto& a : avoid)
        if (a.substitute(img).is_zero()) ok = false;
      for (const auto& g : gens) {
        if (!ok) break;
        FieldVector x, y;
        for (const auto& e : g.x) x.push_back(e.substitute(img));
        for (const auto& e : g.y) y.push_back(e.substitute(img));
        if (B.is_zero(x) || B.is_zero(y)) ok = false;
        out.x.push_back(std::move(x));
        out.y.push_back(std::move(y));
      }
    } catch (const std::domain_error&) {
      ok = false;
    }
    if (!ok) continue;
    Certificate& c = out.checks;
    c.add("t0 avoids poles and declared zeros", true, t0.get_str());
    std::size_t prod_dim = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int mi = gens[i].m;
      const auto& x = out.x[i];
      const auto& y = out.y[i];
      std::string tag = "factor " + std::to_string(i + 1) + ": ";
      auto a = B.as_scalar(B.pow(x, static_cast<unsigned>(mi)));
      auto b = B.as_scalar(B.pow(y, static_cast<unsigned>(mi)));
      c.add(tag + "x^m in F*", a && !a->is_zero());
      c.add(tag + "y^m in F*", b && !b->is_zero());
      FieldElement z = root_of_unity(F, mi);
      auto xy = B.mul(x, y), yx = B.mul(y, x);
      c.add(tag + "xy = zeta_m yx", B.is_zero(B.add(xy, B.scale(yx, -z))));
      out.symbols.push_back({a ? *a : FieldElement(F, Rat(0)), b ? *b : FieldElement(F, Rat(0)), mi});
      prod_dim *= static_cast<std::size_t>(mi * mi);
    }
    bool commuting = true;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        for (const auto* p : {&out.x[i], &out.y[i]})
          for (const auto* q : {&out.x[j], &out.y[j]})
            commuting = commuting && B.is_zero(B.add(B.mul(*p, *q), B.scale(B.mul(*q, *p), FieldElement(F, Rat(-1)))));
    c.add("factors pairwise commute", commuting);
    c.add("product of factor dimensions = dim B", prod_dim == B.dim(),
          std::to_string(prod_dim) + " vs " + std::to_string(B.dim()));
    // monomials x_1^i y_1^j ... x_r^i y_r^j span B
    std::vector<FieldVector> mons{B.unit()};
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<FieldVector> local;
      FieldVector xp = B.unit();
      for (int p = 0; p < gens[i].m; ++p) {
        FieldVector yq = xp;
        for (int q = 0; q < gens[i].m; ++q) {
          local.push_back(yq);
          yq = B.mul(yq, out.y[i]);
        }
        xp = B.mul(xp, out.x[i]);
      }
      std::vector<FieldVector> next;
      for (const auto& a : mons)
        for (const auto& b : local) next.push_back(B.mul(a, b));
      mons = std::move(next);
    }
    FieldMatrix M = field_zero(F, B.dim(), mons.size());
    for (std::size_t j = 0; j < mons.size(); ++j) M.set_column(j, mons[j]);
    c.add("monomials in the factors span B", rank(M) == B.dim());
    return out;
  }
  throw std::runtime_error("no admissible t0 in sample box");
}

RationalizedSymbols rationalize_symbol_params(const FieldPtr& F, const std::vector<SymbolFactor>& symbols) {
  RationalizedSymbols r;
  std::vector<std::string> vars = F->vars();
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    vars.push_back("lambda" + std::to_string(i + 1));
    vars.push_back("mu" + std::to_string(i + 1));
  }
  r.field = symbols.empty() ? F : make_field(F->conductor(), vars);
  r.jacobian = FieldElement(r.field, Rat(1));
  if (symbols.empty()) {
    r.independent = true;
    return r;
  }
  std::vector<FieldElement> gens;
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const auto& s = symbols[i];
    auto lam = FieldElement::variable(r.field, "lambda" + std::to_string(i + 1));
    auto mu = FieldElement::variable(r.field, "mu" + std::to_string(i + 1));
    SymbolFactor t{s.a.embed(r.field) * lam.pow(s.m), s.b.embed(r.field) * mu.pow(s.m), s.m};
    gens.push_back(t.a);
    gens.push_back(t.b);
    cols.push_back(*r.field->var_index("lambda" + std::to_string(i + 1)));
    cols.push_back(*r.field->var_index("mu" + std::to_string(i + 1)));
    r.generators.push_back(t.a.to_string());
    r.generators.push_back(t.b.to_string());
    r.symbols.push_back(std::move(t));
  }
  FieldMatrix J = field_zero(r.field, gens.size(), cols.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) J(i, j) = gens[i].derivative(cols[j]);
  r.jacobian = determinant(J);
  r.independent = !r.jacobian.is_zero();
  return r;
}

}  // namespace brauerlab
