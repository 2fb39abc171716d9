#include "brauerlab/lattices.hpp"

#include <functional>
#include <stdexcept>

#include "brauerlab/rng.hpp"

namespace brauerlab {

GLattice::GLattice(GroupPtr group, std::size_t rank, std::vector<IntMatrix> actions, std::string label)
    : group_(std::move(group)), rank_(rank), actions_(std::move(actions)), label_(std::move(label)) {
  if (actions_.size() != group_->order()) throw std::invalid_argument("GLattice: one action matrix per element required");
  for (const auto& a : actions_)
    if (a.rows() != rank_ || a.cols() != rank_) throw std::invalid_argument("GLattice: action matrix has wrong shape");
}

Certificate validate_lattice(const GLattice& l, std::size_t samples, unsigned long long seed) {
  Certificate cert;
  const auto& g = *l.group();
  bool unimodular = true;
  std::string bad;
  for (std::size_t x = 0; x < g.order() && unimodular; ++x) {
    Int d = determinant(l.action(x));
    if (d != 1 && d != -1) {
      unimodular = false;
      bad = format_cycles(g.element(x));
    }
  }
  cert.add("unimodular", unimodular, bad);
  cert.add("identity acts trivially", is_identity(l.action(g.identity())));
  bool mult = true;
  auto check_pair = [&](std::size_t a, std::size_t b) {
    if (l.action(a) * l.action(b) != l.action(g.mul(a, b))) {
      mult = false;
      bad = format_cycles(g.element(a)) + " * " + format_cycles(g.element(b));
    }
  };
  for (std::size_t a : g.generators())
    for (std::size_t b : g.generators()) check_pair(a, b);
  Rng rng(seed);
  for (std::size_t k = 0; k < samples && mult; ++k) check_pair(rng.index(g.order()), rng.index(g.order()));
  cert.add("multiplicative", mult, mult ? "" : bad);
  return cert;
}

bool is_equivariant(const LatticeMap& f) {
  const auto& g = *f.source->group();
  for (std::size_t s : g.generators())
    if (f.matrix * f.source->action(s) != f.target->action(s) * f.matrix) return false;
  return true;
}

LatticeMap compose(const LatticeMap& second, const LatticeMap& first) {
  if (first.target->rank() != second.source->rank()) throw std::invalid_argument("compose: rank mismatch");
  return {first.source, second.target, second.matrix * first.matrix};
}

LatticePtr trivial_lattice(GroupPtr g) {
  std::vector<IntMatrix> acts(g->order(), int_identity(1));
  return std::make_shared<const GLattice>(g, 1, std::move(acts), "Z");
}

namespace {

IntMatrix permutation_matrix(const std::vector<std::size_t>& images) {
  IntMatrix m = int_zero(images.size(), images.size());
  for (std::size_t i = 0; i < images.size(); ++i) m(images[i], i) = 1;
  return m;
}

}  // namespace

LatticePtr perm_lattice(const CosetSpace& cosets) {
  const auto& g = cosets.group();
  const std::size_t n = cosets.index();
  std::vector<IntMatrix> acts;
  acts.reserve(g->order());
  for (std::size_t x = 0; x < g->order(); ++x) {
    std::vector<std::size_t> img(n);
    for (std::size_t c = 0; c < n; ++c) img[c] = cosets.act(x, c);
    acts.push_back(permutation_matrix(img));
  }
  return std::make_shared<const GLattice>(g, n, std::move(acts),
                                          "Z[" + g->name() + "/" + cosets.subgroup().name() + "]");
}

LatticePtr point_lattice(GroupPtr g) {
  const std::size_t n = static_cast<std::size_t>(g->degree());
  std::vector<IntMatrix> acts;
  acts.reserve(g->order());
  for (std::size_t x = 0; x < g->order(); ++x) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::size_t>(g->element(x)[i]);
    acts.push_back(permutation_matrix(img));
  }
  std::string label = "U" + std::to_string(n);
  return std::make_shared<const GLattice>(std::move(g), n, std::move(acts), label);
}

std::pair<LatticePtr, LatticeMap> sublattice(LatticePtr ambient, const IntMatrix& basis, std::string label) {
  const auto& g = ambient->group();
  const std::size_t k = basis.cols();
  if (basis.rows() != ambient->rank()) throw std::invalid_argument("sublattice: basis has wrong length");
  std::vector<IntMatrix> acts;
  acts.reserve(g->order());
  if (k == 0) {
    acts.assign(g->order(), IntMatrix(0, 0));
  } else {
    auto left = left_inverse(basis);
    if (!left) throw std::invalid_argument("sublattice: basis is not saturated of full rank");
    for (std::size_t x = 0; x < g->order(); ++x) {
      IntMatrix moved = ambient->action(x) * basis;
      IntMatrix coords = *left * moved;
      if (basis * coords != moved) throw std::invalid_argument("sublattice: span is not G-stable");
      acts.push_back(std::move(coords));
    }
  }
  auto sub = std::make_shared<const GLattice>(g, k, std::move(acts), std::move(label));
  LatticeMap incl{sub, ambient, basis};
  return {sub, incl};
}

std::pair<LatticePtr, LatticeMap> kernel_lattice(const LatticeMap& f, std::string label) {
  return sublattice(f.source, integer_kernel(f.matrix), std::move(label));
}

std::pair<LatticePtr, LatticeMap> augmentation_sublattice(LatticePtr perm, std::string label) {
  const std::size_t n = perm->rank();
  IntMatrix basis = int_zero(n, n == 0 ? 0 : n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    basis(i, i - 1) = 1;
    basis(0, i - 1) = -1;
  }
  return sublattice(std::move(perm), basis, std::move(label));
}

std::pair<LatticePtr, LatticeMap> augmentation_kernel(const CosetSpace& cosets) {
  auto p = perm_lattice(cosets);
  std::string label = "omega(" + cosets.group()->name() + "/" + cosets.subgroup().name() + ")";
  return augmentation_sublattice(p, label);
}

LatticePtr tensor(const LatticePtr& a, const LatticePtr& b) {
  if (a->group() != b->group()) throw std::invalid_argument("tensor: lattices over different groups");
  const auto& g = a->group();
  std::vector<IntMatrix> acts;
  acts.reserve(g->order());
  for (std::size_t x = 0; x < g->order(); ++x) acts.push_back(kronecker(a->action(x), b->action(x)));
  return std::make_shared<const GLattice>(g, a->rank() * b->rank(), std::move(acts),
                                          "(" + a->label() + ")(x)(" + b->label() + ")");
}

std::pair<LatticePtr, LatticeMap> wedge2(const LatticePtr& l) {
  const std::size_t r = l->rank();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) pairs.emplace_back(i, j);
  const auto& g = l->group();
  std::vector<IntMatrix> acts;
  acts.reserve(g->order());
  for (std::size_t x = 0; x < g->order(); ++x) {
    const IntMatrix& a = l->action(x);
    IntMatrix w(pairs.size(), pairs.size());
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      auto [i, j] = pairs[c];
      for (std::size_t rr = 0; rr < pairs.size(); ++rr) {
        auto [p, q] = pairs[rr];
        w(rr, c) = a(p, i) * a(q, j) - a(q, i) * a(p, j);
      }
    }
    acts.push_back(std::move(w));
  }
  auto w = std::make_shared<const GLattice>(g, pairs.size(), std::move(acts), "wedge2(" + l->label() + ")");
  auto t = tensor(l, l);
  IntMatrix m = int_zero(r * r, pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    auto [i, j] = pairs[c];
    m(i * r + j, c) = 1;
    m(j * r + i, c) = -1;
  }
  return {w, LatticeMap{w, t, m}};
}

std::pair<LatticePtr, LatticeMap> sym2(const LatticePtr& l) {
  const std::size_t r = l->rank();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> index(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      index[i * r + j] = index[j * r + i] = pairs.size();
      pairs.emplace_back(i, j);
    }
  const auto& g = l->group();
  std::vector<IntMatrix> acts;
  acts.reserve(g->order());
  for (std::size_t x = 0; x < g->order(); ++x) {
    const IntMatrix& a = l->action(x);
    IntMatrix s(pairs.size(), pairs.size());
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      auto [i, j] = pairs[c];
      for (std::size_t rr = 0; rr < pairs.size(); ++rr) {
        auto [p, q] = pairs[rr];
        if (p == q)
          s(rr, c) = a(p, i) * a(p, j);
        else
          s(rr, c) = a(p, i) * a(q, j) + a(q, i) * a(p, j);
      }
    }
    acts.push_back(std::move(s));
  }
  auto s = std::make_shared<const GLattice>(g, pairs.size(), std::move(acts), "sym2(" + l->label() + ")");
  auto t = tensor(l, l);
  IntMatrix m = int_zero(pairs.size(), r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(index[i * r + j], i * r + j) = 1;
  return {s, LatticeMap{t, s, m}};
}

LatticePtr direct_sum(const std::vector<LatticePtr>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: empty list");
  const auto& g = parts.front()->group();
  std::size_t rank = 0;
  std::string label;
  for (const auto& p : parts) {
    if (p->group() != g) throw std::invalid_argument("direct_sum: lattices over different groups");
    rank += p->rank();
    label += (label.empty() ? "" : " (+) ") + p->label();
  }
  std::vector<IntMatrix> acts;
  acts.reserve(g->order());
  for (std::size_t x = 0; x < g->order(); ++x) {
    std::vector<IntMatrix> blocks;
    for (const auto& p : parts) blocks.push_back(p->action(x));
    acts.push_back(block_diagonal(blocks));
  }
  return std::make_shared<const GLattice>(g, rank, std::move(acts), label);
}

LatticeSequence freepres_sequence(const CosetSpace& cosets, const std::vector<std::size_t>& g_list) {
  const auto& g = cosets.group();
  const Subgroup& h = cosets.subgroup();
  std::vector<std::size_t> gens = h.generators();
  gens.insert(gens.end(), g_list.begin(), g_list.end());
  auto flags = closure(*g, gens);
  for (char f : flags)
    if (!f) throw std::invalid_argument("does not generate");

  const std::size_t r = g_list.size();
  const std::size_t order = g->order();
  const std::size_t n = cosets.index();
  auto regular = perm_lattice(CosetSpace(g, Subgroup::trivial(g)));
  auto free = direct_sum(std::vector<LatticePtr>(r, regular));
  auto omega = augmentation_kernel(cosets).first;

  IntMatrix f = int_zero(n - 1, r * order);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t x = 0; x < order; ++x) {
      std::size_t col = k * order + x;
      std::size_t plus = cosets.coset_of(g->mul(x, g_list[k]));
      std::size_t minus = cosets.coset_of(x);
      if (plus != 0) f(plus - 1, col) += 1;
      if (minus != 0) f(minus - 1, col) -= 1;
    }
  LatticeMap outer{free, omega, f};
  auto [m, incl] = kernel_lattice(outer, "M(" + g->name() + "/" + h.name() + ", r=" + std::to_string(r) + ")");
  return {incl, outer};
}

std::size_t seq2_pair_index(std::size_t n, std::size_t a, std::size_t b) {
  // pairs (a, b), a != b, in lexicographic order
  return a * (n - 1) + (b < a ? b : b - 1);
}

namespace {

LatticePtr pair_lattice(const CosetSpace& cosets) {
  const auto& g = cosets.group();
  const std::size_t n = cosets.index();
  std::vector<IntMatrix> acts;
  acts.reserve(g->order());
  for (std::size_t x = 0; x < g->order(); ++x) {
    std::vector<std::size_t> img(n * (n - 1));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b) img[seq2_pair_index(n, a, b)] = seq2_pair_index(n, cosets.act(x, a), cosets.act(x, b));
    acts.push_back(permutation_matrix(img));
  }
  return std::make_shared<const GLattice>(g, n * (n - 1), std::move(acts),
                                          "P(" + g->name() + "/" + cosets.subgroup().name() + ")");
}

}  // namespace

LatticeMap seq2_m_map(const CosetSpace& cosets) {
  const std::size_t n = cosets.index();
  if (n < 2) throw std::invalid_argument("seq2: index must be at least 2");
  auto omega = augmentation_kernel(cosets).first;
  auto src = tensor(omega, perm_lattice(cosets));
  auto p = pair_lattice(cosets);
  IntMatrix m = int_zero(n * (n - 1), (n - 1) * n);
  // omega_i = e_i - e_0 for i >= 1; omega_i (x) e_j -> [i != j] (i, j) - [j != 0] (0, j)
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t col = (i - 1) * n + j;
      if (i != j) m(seq2_pair_index(n, i, j), col) += 1;
      if (j != 0) m(seq2_pair_index(n, 0, j), col) -= 1;
    }
  return {src, p, m};
}

IntVector seq2_m_basis_vector(const CosetSpace& cosets, std::size_t a, std::size_t b) {
  const std::size_t n = cosets.index();
  IntVector v(n * (n - 1));
  if (a != 0) v[(a - 1) * n + b] += 1;
  if (b != 0) v[(b - 1) * n + b] -= 1;
  return v;
}

LatticeSequence seq2_sequence(const CosetSpace& cosets) {
  const std::size_t n = cosets.index();
  if (n < 2) throw std::invalid_argument("seq2: index must be at least 2");
  auto [omega, embed] = augmentation_kernel(cosets);
  LatticeMap m = seq2_m_map(cosets);
  auto src = tensor(omega, omega);
  // omega (x) omega -> omega (x) Z[G/H] is id (x) embedding
  LatticeMap incl{src, m.source, kronecker(int_identity(n - 1), embed.matrix)};
  LatticeMap inner = compose(m, incl);
  IntMatrix pi = int_zero(n - 1, n * (n - 1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      std::size_t col = seq2_pair_index(n, a, b);
      if (a != 0) pi(a - 1, col) += 1;
      if (b != 0) pi(b - 1, col) -= 1;
    }
  LatticeMap outer{m.target, omega, pi};
  return {inner, outer};
}

FormanekData formanek_sequence(int n) {
  if (n < 2) throw std::invalid_argument("formanek_sequence: n must be at least 2");
  auto g = symmetric_group(n);
  auto u = point_lattice(g);
  auto [a, a_incl] = augmentation_sublattice(u, "A" + std::to_string(n - 1));
  auto uu = tensor(u, u);
  auto src = direct_sum({u, uu});
  const std::size_t N = static_cast<std::size_t>(n);
  IntMatrix f = int_zero(N - 1, N + N * N);
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t h = 0; h < N; ++h) {
      std::size_t col = N + j * N + h;
      if (j != 0) f(j - 1, col) += 1;
      if (h != 0) f(h - 1, col) -= 1;
    }
  LatticeMap outer{src, a, f};
  auto [ker, incl] = kernel_lattice(outer, "Ker(f)");

  auto target = direct_sum({u, u, tensor(a, a)});
  IntMatrix b = int_zero(N + N * N, target->rank());
  for (std::size_t i = 0; i < N; ++i) {
    b(i, i) = 1;
    b(N + i * N + i, N + i) = 1;
  }
  for (std::size_t i = 1; i < N; ++i)
    for (std::size_t l = 1; l < N; ++l) {
      std::size_t col = 2 * N + (i - 1) * (N - 1) + (l - 1);
      // (u_i - u_0) (x) (u_l - u_0)
      b(N + i * N + l, col) += 1;
      b(N + i * N + 0, col) -= 1;
      b(N + 0 * N + l, col) -= 1;
      b(N + 0, col) += 1;
    }
  auto left = left_inverse(incl.matrix);
  if (!left) throw std::logic_error("formanek_sequence: kernel basis not saturated");
  IntMatrix coords = *left * b;
  if (incl.matrix * coords != b) throw std::logic_error("formanek_sequence: decomposition basis not in kernel");
  FormanekData out;
  out.sequence = {incl, outer};
  out.decomposition = {target, ker, coords};
  out.u = u;
  out.a = a;
  return out;
}

Certificate is_exact(const LatticeSequence& seq) {
  Certificate cert;
  const IntMatrix& iota = seq.inner.matrix;
  const IntMatrix& pi = seq.outer.matrix;
  const std::size_t ra = seq.inner.source->rank();
  const std::size_t rb = seq.inner.target->rank();
  const std::size_t rc = seq.outer.target->rank();
  if (seq.outer.source->rank() != rb) {
    cert.add("composable", false, "inner target rank differs from outer source rank");
    return cert;
  }
  cert.add("inner equivariant", is_equivariant(seq.inner));
  cert.add("outer equivariant", is_equivariant(seq.outer));
  bool comp_zero = (ra == 0 || rc == 0) ? true : is_zero(pi * iota);
  cert.add("pi o iota = 0", comp_zero);

  auto iota_div = elementary_divisors(iota);
  bool inj = iota_div.size() == ra;
  cert.add("iota injective", inj, "rank " + std::to_string(iota_div.size()) + " of " + std::to_string(ra));
  bool sat = true;
  for (const auto& d : iota_div) sat = sat && d == 1;
  cert.add("iota image saturated", sat);

  auto pi_div = elementary_divisors(pi);
  bool surj = pi_div.size() == rc;
  for (const auto& d : pi_div) surj = surj && d == 1;
  cert.add("pi surjective", surj);
  cert.add("rank additivity", rb == ra + rc,
           std::to_string(rb) + " = " + std::to_string(ra) + " + " + std::to_string(rc));

  bool contained = true;
  if (rb > 0) {
    IntMatrix k = integer_kernel(pi);
    if (k.cols() > 0) {
      if (ra == 0) {
        contained = false;
      } else {
        IntegerSolver solver(iota);
        for (std::size_t j = 0; j < k.cols() && contained; ++j) contained = solver.solve(k.column(j)).has_value();
      }
    }
  }
  cert.add("ker pi = im iota", contained && comp_zero);
  return cert;
}

bool is_faithful(const GLattice& l) {
  const auto& g = *l.group();
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    if (is_identity(l.action(x))) return false;
  }
  return true;
}

bool faithful_predicate_freepres(const Subgroup& h, std::size_t r) { return r >= 2 || !h.is_trivial(); }

bool faithful_predicate_seq2(const Subgroup& h) { return normal_core(h).is_trivial() && h.index() >= 3; }

std::vector<Int> character(const GLattice& l) {
  std::vector<Int> chi(l.group()->order());
  for (std::size_t x = 0; x < chi.size(); ++x)
    for (std::size_t i = 0; i < l.rank(); ++i) chi[x] += l.action(x)(i, i);
  return chi;
}

std::vector<Int> perm_character(const CosetSpace& cosets) {
  std::vector<Int> chi(cosets.group()->order());
  for (std::size_t x = 0; x < chi.size(); ++x)
    for (std::size_t c = 0; c < cosets.index(); ++c)
      if (cosets.act(x, c) == c) chi[x] += 1;
  return chi;
}

std::optional<std::vector<std::size_t>> perm_character_decomposition(const GLattice& l,
                                                                      const std::vector<Subgroup>& subgroups) {
  const auto& g = l.group();
  std::vector<Int> target = character(l);
  std::vector<std::vector<Int>> chis;
  for (const auto& h : subgroups) chis.push_back(perm_character(CosetSpace(g, h)));
  std::vector<std::size_t> coeff(subgroups.size(), 0);
  std::function<bool(std::size_t, std::vector<Int>&)> search = [&](std::size_t i, std::vector<Int>& rest) -> bool {
    if (i == chis.size()) {
      for (const auto& v : rest)
        if (sgn(v) != 0) return false;
      return true;
    }
    const Int& deg = chis[i][g->identity()];
    std::size_t max_c = 0;
    if (sgn(rest[g->identity()]) > 0) max_c = Int(rest[g->identity()] / deg).get_ui();
    for (std::size_t c = 0;; ++c) {
      coeff[i] = c;
      if (search(i + 1, rest)) return true;
      if (c == max_c) break;
      for (std::size_t x = 0; x < rest.size(); ++x) rest[x] -= chis[i][x];
    }
    for (std::size_t x = 0; x < rest.size(); ++x) rest[x] += Int(max_c) * chis[i][x];
    coeff[i] = 0;
    return false;
  };
  if (search(0, target)) return coeff;
  return std::nullopt;
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).fits_slong_p())
        row.push_back(m(i, j).get_si());
      else
        row.push_back(m(i, j).get_str());
    }
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json lattice_to_json(const GLattice& l) {
  const auto& g = *l.group();
  nlohmann::json gens = nlohmann::json::array();
  nlohmann::json acts = nlohmann::json::array();
  for (std::size_t s : g.generators()) {
    gens.push_back(format_cycles(g.element(s)));
    acts.push_back(matrix_to_json(l.action(s)));
  }
  return {{"rank", l.rank()},
          {"group", {{"name", g.name()}, {"degree", g.degree()}, {"order", g.order()}, {"generators", gens}}},
          {"generator_actions", acts},
          {"label", l.label()}};
}

}  // namespace brauerlab
