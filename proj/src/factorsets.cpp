#include "brauerlab/factorsets.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace brauerlab {

FactorSetMonomial::FactorSetMonomial(int n) : n_(n), exps_(static_cast<std::size_t>(n * n + n), 0) {}

bool FactorSetMonomial::is_one() const {
  for (long e : exps_)
    if (e != 0) return false;
  return true;
}

bool FactorSetMonomial::has_diagonal_prime() const {
  for (int i = 0; i < n_; ++i)
    if (zeta_diag(i) != 0) return true;
  return false;
}

FactorSetMonomial FactorSetMonomial::operator*(const FactorSetMonomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("FactorSetMonomial: size mismatch");
  FactorSetMonomial r(*this);
  for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] += o.exps_[k];
  return r;
}

FactorSetMonomial FactorSetMonomial::inverse() const { return pow(-1); }

FactorSetMonomial FactorSetMonomial::pow(long k) const {
  FactorSetMonomial r(*this);
  for (long& e : r.exps_) e *= k;
  return r;
}

FactorSetMonomial FactorSetMonomial::apply(const Perm& s) const {
  if (static_cast<int>(s.size()) != n_) throw std::invalid_argument("FactorSetMonomial: permutation degree");
  FactorSetMonomial r(n_);
  for (int i = 0; i < n_; ++i) {
    r.zeta_diag(s[i]) = zeta_diag(i);
    for (int j = 0; j < n_; ++j) r.zeta(s[i], s[j]) = zeta(i, j);
  }
  return r;
}

std::string FactorSetMonomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const std::string& var, long e) {
    if (e == 0) return;
    if (!first) os << ' ';
    first = false;
    os << var;
    if (e != 1) os << '^' << e;
  };
  for (int i = 0; i < n_; ++i) term("z'" + std::to_string(i + 1) + std::to_string(i + 1), zeta_diag(i));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      std::string var = "z" + std::to_string(i + 1) + (n_ > 9 ? "," : "") + std::to_string(j + 1);
      term(var, zeta(i, j));
    }
  return first ? "1" : os.str();
}

FactorSetMonomial zeta_monomial(int n, int i, int j) {
  FactorSetMonomial m(n);
  m.zeta(i, j) = 1;
  return m;
}

FactorSet::FactorSet(int n, std::string name)
    : n_(n), name_(std::move(name)), entries_(static_cast<std::size_t>(n * n * n), FactorSetMonomial(n)) {}

FactorSet udn_factor_set(int n) {
  if (n < 2) throw std::invalid_argument("udn_factor_set: n must be at least 2");
  FactorSet fs(n, "c");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int h = 0; h < n; ++h) {
        auto& c = fs.at(i, j, h);
        c.zeta(i, j) += 1;
        c.zeta(j, h) += 1;
        c.zeta(i, h) -= 1;
      }
  return fs;
}

FactorSet normalized_factor_set(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("normalized_factor_set: n must be odd");
  FactorSet c = udn_factor_set(n);
  FactorSet fs(n, "c'");
  const long k = (n + 1) / 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int h = 0; h < n; ++h) fs.at(i, j, h) = (c.at(i, j, h) * c.at(h, j, i).inverse()).pow(k);
  return fs;
}

namespace {

std::string triple(int i, int j, int h) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(h + 1) + ")";
}

constexpr int kMaxListed = 10;

struct FailureList {
  std::size_t count = 0;
  std::string detail;
  void add(const std::string& where) {
    if (count++ < kMaxListed) detail += (detail.empty() ? "" : "; ") + where;
  }
  std::string summary(const std::string& ok) const {
    if (count == 0) return ok;
    return std::to_string(count) + " violation(s): " + detail + (count > kMaxListed ? "; ..." : "");
  }
};

}  // namespace

Certificate check_equivariance(const FactorSet& fs) {
  const int n = fs.n();
  std::vector<std::pair<std::string, Perm>> gens;
  Perm t = perm_identity(n);
  std::swap(t[0], t[1]);
  gens.emplace_back("(1 2)", t);
  if (n > 2) {
    Perm c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.emplace_back(format_cycles(c), c);
  }
  Certificate cert;
  for (const auto& [name, s] : gens) {
    FailureList bad;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int h = 0; h < n; ++h)
          if (fs.at(i, j, h).apply(s) != fs.at(s[i], s[j], s[h])) bad.add("sigma " + name + " at " + triple(i, j, h));
    cert.add("equivariance under " + name, bad.count == 0,
             bad.summary("all " + std::to_string(n * n * n) + " triples"));
  }
  return cert;
}

Certificate check_cocycle(const FactorSet& fs) {
  const int n = fs.n();
  FailureList bad;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int h = 0; h < n; ++h)
        for (int l = 0; l < n; ++l)
          if (fs.at(i, j, h) * fs.at(i, h, l) != fs.at(i, j, l) * fs.at(j, h, l))
            bad.add(triple(i, j, h) + " l=" + std::to_string(l + 1));
  Certificate cert;
  cert.add("cocycle c_ijh c_ihl = c_ijl c_jhl", bad.count == 0,
           bad.summary("all " + std::to_string(n * n * n * n) + " quadruples"));
  return cert;
}

Certificate check_cocycle_literal(const FactorSet& fs) {
  const int n = fs.n();
  FailureList bad;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int h = 0; h < n; ++h)
        for (int l = 0; l < n; ++l) {
          auto p = fs.at(i, j, l) * fs.at(j, h, l).inverse() * fs.at(i, h, l) * fs.at(i, j, h).inverse();
          if (!p.is_one()) bad.add(triple(i, j, h) + " l=" + std::to_string(l + 1) + " gives " + p.to_string());
        }
  Certificate cert;
  cert.add("quadruple identity c_ijl c_jhl^-1 c_ihl c_ijh^-1 = 1", bad.count == 0,
           bad.summary("all " + std::to_string(n * n * n * n) + " quadruples"));
  return cert;
}

Certificate check_reduced(const FactorSet& fs) {
  const int n = fs.n();
  FailureList bad;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!fs.at(i, i, j).is_one()) bad.add("c" + triple(i, i, j) + " = " + fs.at(i, i, j).to_string());
      if (!fs.at(i, j, j).is_one()) bad.add("c" + triple(i, j, j) + " = " + fs.at(i, j, j).to_string());
    }
  Certificate cert;
  cert.add("reduced: c_iij = c_ijj = 1", bad.count == 0, bad.summary("all pairs"));
  return cert;
}

Certificate check_normalized(const FactorSet& fs) {
  Certificate cert = check_reduced(fs);
  const int n = fs.n();
  FailureList bad;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int h = 0; h < n; ++h)
        if (!(fs.at(i, j, h) * fs.at(h, j, i)).is_one()) bad.add(triple(i, j, h));
  cert.add("normalized: c_ijh c_hji = 1", bad.count == 0, bad.summary("all triples"));
  return cert;
}

namespace {

// columns are (u_i - u_0)^(u_l - u_0), 1 <= i < l < n, as n*n exponent tensors
IntMatrix wedge_basis(int n) {
  std::vector<IntVector> cols;
  for (int i = 1; i < n; ++i)
    for (int l = i + 1; l < n; ++l) {
      IntVector a(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(n), 0);
      a[i] = 1;
      a[0] = -1;
      b[l] = 1;
      b[0] = -1;
      IntVector t(static_cast<std::size_t>(n * n), 0);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) t[static_cast<std::size_t>(p * n + q)] = a[p] * b[q] - b[p] * a[q];
      cols.push_back(std::move(t));
    }
  return from_columns(static_cast<std::size_t>(n * n), cols);
}

const IntegerSolver& wedge_solver(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<IntegerSolver>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<IntegerSolver>(wedge_basis(n));
  return *slot;
}

}  // namespace

std::optional<IntVector> wedge_membership(const FactorSetMonomial& m) {
  if (m.has_diagonal_prime()) throw std::invalid_argument("wedge_membership: diagonal variables present");
  const int n = m.n();
  if (n < 3) {
    if (m.is_one()) return IntVector{};
    return std::nullopt;
  }
  IntVector target(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) target[static_cast<std::size_t>(i * n + j)] = m.zeta(i, j);
  return wedge_solver(n).solve(target);
}

FactorSetMonomial wedge_element(int n, const IntVector& coords) {
  FactorSetMonomial m(n);
  if (n < 3) return m;
  IntVector t = wedge_basis(n) * coords;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.zeta(i, j) = t[static_cast<std::size_t>(i * n + j)].get_si();
  return m;
}

Certificate check_wedge_entries(const FactorSet& fs) {
  const int n = fs.n();
  FailureList bad;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int h = 0; h < n; ++h) {
        const auto& c = fs.at(i, j, h);
        if (c.has_diagonal_prime()) {
          bad.add(triple(i, j, h) + " has diagonal variables");
          continue;
        }
        auto x = wedge_membership(c);
        if (!x || wedge_element(n, *x) != c) bad.add(triple(i, j, h));
      }
  Certificate cert;
  cert.add("entries lie in wedge^2 A_{n-1}", bad.count == 0, bad.summary("all triples"));
  return cert;
}

YGenerators y_generators(const CosetSpace& cs) {
  const std::size_t n = cs.index();
  if (n < 2) throw std::invalid_argument("y_generators: index must be at least 2");
  const std::size_t r = n - 1;
  YGenerators out;
  auto omega = augmentation_kernel(cs).first;
  out.lattice = tensor(omega, omega);

  auto diff = [&](std::size_t a, std::size_t b) {
    IntVector v(r, 0);
    if (a != 0) v[a - 1] += 1;
    if (b != 0) v[b - 1] -= 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t h = 0; h < n; ++h) {
        IntVector a = diff(i, j), b = diff(j, h), y(r * r);
        for (std::size_t p = 0; p < r; ++p)
          for (std::size_t q = 0; q < r; ++q) y[p * r + q] = a[p] * b[q];
        out.labels.emplace_back(i, j, h);
        out.elements.push_back(std::move(y));
      }

  // the y_{i,0,h} = -e_i(x)e_h already form a basis; the full set is tried only if they fail
  auto span_check = [&](bool subset) {
    std::vector<IntVector> cols;
    for (std::size_t k = 0; k < out.elements.size(); ++k)
      if (!subset || std::get<1>(out.labels[k]) == 0) cols.push_back(out.elements[k]);
    return elementary_divisors(from_columns(r * r, cols));
  };
  bool subset = true;
  auto divisors = span_check(true);
  auto unit_full = [&](const std::vector<Int>& d) {
    if (d.size() != r * r) return false;
    for (const auto& x : d)
      if (x != 1) return false;
    return true;
  };
  if (!unit_full(divisors)) {
    subset = false;
    divisors = span_check(false);
  }
  out.span_rank = divisors.size();
  bool unit = unit_full(divisors);
  out.certificate.add("y elements span omega(x)omega", unit,
                      "rank " + std::to_string(out.span_rank) + " of " + std::to_string(r * r) +
                          (unit ? ", all elementary divisors 1" : ", not unimodular") +
                          (subset ? " (witness subset y_{i,1,h})" : ""));

  // g(g_i - g_j) = g_{gi} - g_{gj} in omega gives g.y_ijh = y_{gi,gj,gh}
  const auto& g = *cs.group();
  bool equivariant = true;
  for (std::size_t x : g.generators())
    for (std::size_t i = 0; i < n && equivariant; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (omega->action(x) * diff(i, j) != diff(cs.act(x, i), cs.act(x, j))) {
          equivariant = false;
          break;
        }
  out.certificate.add("g y_ijh = y_{gi,gj,gh}", equivariant, "via g(g_i - g_j) = g_{gi} - g_{gj} on generators");
  return out;
}

namespace {

// f: U + U(x)U -> A_{n-1}, (u_i, u_j(x)u_h) -> u_j - u_h, in the basis u_i - u_0 of A
IntMatrix formanek_map(int n) {
  IntMatrix f = int_zero(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n + n * n));
  for (int j = 0; j < n; ++j)
    for (int h = 0; h < n; ++h) {
      std::size_t col = static_cast<std::size_t>(n + j * n + h);
      if (j != 0) f(static_cast<std::size_t>(j - 1), col) += 1;
      if (h != 0) f(static_cast<std::size_t>(h - 1), col) -= 1;
    }
  return f;
}

}  // namespace

FieldOfDefinitionReport field_of_definition_report(int n, bool character_certificate) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("field_of_definition_report: n must be odd >= 5");
  FieldOfDefinitionReport rep;
  rep.n = n;
  rep.trdeg = static_cast<long long>(n - 1) * (n - 2) / 2;
  rep.m = static_cast<long long>(n) * (n + 1) / 2 + 1;
  rep.t_count = n - 1;

  auto sn = symmetric_group(n);
  auto u = point_lattice(sn);
  auto a = augmentation_sublattice(u, "A" + std::to_string(n - 1)).first;
  auto [w, w_to_t] = wedge2(a);
  auto [s, t_to_s] = sym2(a);
  auto q = direct_sum({s, u, trivial_lattice(sn)});
  rep.wedge_rank = w->rank();
  rep.q_rank = q->rank();
  IntMatrix f = formanek_map(n);
  rep.kernel_rank = f.cols() - integer_rank(f);

  auto& c = rep.certificate;
  c.add("trdeg F0 = rank wedge^2 A", static_cast<long long>(rep.wedge_rank) == rep.trdeg,
        std::to_string(rep.wedge_rank) + " vs (n-1)(n-2)/2 = " + std::to_string(rep.trdeg));
  c.add("rank Q = m", static_cast<long long>(rep.q_rank) == rep.m,
        std::to_string(rep.q_rank) + " vs n(n+1)/2 + 1 = " + std::to_string(rep.m));
  c.add("rank(A(x)A + U + Z) = rank wedge + rank Q",
        static_cast<std::size_t>((n - 1) * (n - 1) + n + 1) == rep.wedge_rank + rep.q_rank,
        std::to_string((n - 1) * (n - 1) + n + 1));
  c.add("rank Ker f = trdeg F0 + m + (n-1)",
        static_cast<long long>(rep.kernel_rank) == rep.trdeg + rep.m + rep.t_count,
        "rank Ker f = " + std::to_string(rep.kernel_rank) + " = n^2 + 1");
  c.add("wedge^2 A faithful", is_faithful(*w), w->label());
  c.add("wedge^2 A -> A(x)A -> Sym^2 A exact", is_exact({w_to_t, t_to_s}).ok(), "canonical sequence");

  if (character_certificate) {
    std::vector<std::string> gens = {"(1 2)"};
    std::string rest = "(3";
    for (int i = 4; i <= n; ++i) rest += " " + std::to_string(i);
    gens.push_back(rest + ")");
    gens.push_back("(3 4)");
    std::vector<Subgroup> cands = {Subgroup::generated_by(sn, gens, "S2xS" + std::to_string(n - 2)),
                                   last_point_stabilizer(sn), Subgroup::whole(sn)};
    rep.q_character = perm_character_decomposition(*q, cands);
    bool ok = rep.q_character && *rep.q_character == std::vector<std::size_t>{1, 1, 1};
    c.add("character of Q is a permutation character", ok,
          ok ? "chi_Q = chi(S_n/(S_2xS_{n-2})) + chi(S_n/S_{n-1}) + chi(S_n/S_n)" : "no decomposition found");
  }
  return rep;
}

nlohmann::json to_json(const FactorSetMonomial& m) {
  nlohmann::json z = nlohmann::json::array();
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (m.zeta(i, j) != 0) z.push_back({i + 1, j + 1, m.zeta(i, j)});
  nlohmann::json d = nlohmann::json::array();
  for (int i = 0; i < m.n(); ++i)
    if (m.zeta_diag(i) != 0) d.push_back({i + 1, m.zeta_diag(i)});
  return {{"text", m.to_string()}, {"zeta", z}, {"zeta_prime", d}};
}

nlohmann::json to_json(const FactorSet& fs) {
  nlohmann::json entries = nlohmann::json::array();
  const int n = fs.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int h = 0; h < n; ++h) {
        const auto& c = fs.at(i, j, h);
        if (c.is_one()) continue;
        entries.push_back({{"ijh", {i + 1, j + 1, h + 1}}, {"zeta", to_json(c)["zeta"]},
                           {"zeta_prime", to_json(c)["zeta_prime"]}});
      }
  return {{"n", n},
          {"name", fs.name()},
          {"encoding", "entries list non-trivial c_ijh as [i, j, exponent] for zeta_ij and [i, exponent] for zeta'_ii"},
          {"entries", entries}};
}

nlohmann::json to_json(const FieldOfDefinitionReport& r) {
  nlohmann::json j = {{"n", r.n},
                      {"trdeg_F0", r.trdeg},
                      {"wedge_rank", r.wedge_rank},
                      {"q_rank", r.q_rank},
                      {"m", r.m},
                      {"t_count", r.t_count},
                      {"kernel_rank", r.kernel_rank}};
  j["q_character"] = r.q_character ? nlohmann::json(*r.q_character) : nlohmann::json(nullptr);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.certificate.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  return j;
}

}  // namespace brauerlab
