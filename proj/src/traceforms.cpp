#include "brauerlab/traceforms.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace brauerlab {

namespace {

const char* kDegenerate = "degenerate: some t_i = 0 or n_i - t_i^2 = 0";

}  // namespace

TraceData trace_data(const CrossedAlgebra& A) {
  if (A.m() != 2) throw std::invalid_argument("trace data needs degree 4 (m = 2)");
  const auto& K = *A.kummer();
  const FieldPtr& F = A.base();
  TraceData td;
  td.field = F;
  td.a1 = K.a1();
  td.a2 = K.a2();

  auto zz = A.mul(A.z1(), A.z2());
  auto sq = A.mul(zz, zz);
  bool in_k = true;
  for (std::size_t w = 1; w < sq.size(); ++w) in_k = in_k && K.is_zero(sq[w]);
  td.checks.add("(z1 z2)^2 lies in K", in_k);
  if (!in_k) throw std::logic_error("(z1 z2)^2 not in K");
  const KummerField::Elem b3 = K.inverse(sq[0]);

  const std::array<KummerField::Elem, 3> b{A.b1(), A.b2(), b3};
  // sigma_i fixes b_i; the other generator of the quotient computes trace and norm
  const std::array<std::pair<int, int>, 3> fix{{{1, 0}, {0, 1}, {1, 1}}};
  const std::array<std::pair<int, int>, 3> other{{{0, 1}, {1, 0}, {1, 0}}};
  const std::array<const char*, 3> names{"b1 fixed by sigma1", "b2 fixed by sigma2", "b3 = ((z1 z2)^-1)^2 fixed by sigma3"};
  for (int i = 0; i < 3; ++i) {
    bool fixed = K.equal(K.sigma(b[i], fix[i].first, fix[i].second), b[i]);
    td.checks.add(names[i], fixed);
    if (!fixed) throw std::logic_error(std::string(names[i]) + " fails");
    auto conj = K.sigma(b[i], other[i].first, other[i].second);
    auto tr = K.as_base(K.add(b[i], conj));
    auto nm = K.as_base(K.mul(b[i], conj));
    if (!tr || !nm) throw std::logic_error("trace or norm outside F");
    td.t[i] = *tr * Rat(1, 2);
    td.n[i] = *nm;
  }
  td.f1 = A.b1()[KummerField::index(0, 0, 2)];
  td.f2 = A.b1()[KummerField::index(0, 1, 2)];
  const FieldElement f2sq_a2 = td.f2 * td.f2 * td.a2;
  td.checks.add("t1 = f1", td.t[0] == td.f1);
  td.checks.add("n1 - t1^2 = f2^2 a2", td.n[0] - td.t[0] * td.t[0] == f2sq_a2,
                "n1 - t1^2 = " + (td.n[0] - td.t[0] * td.t[0]).to_string());
  td.checks.add("t1^2 - n1 = f2^2 a2", td.t[0] * td.t[0] - td.n[0] == f2sq_a2);
  for (int i = 0; i < 3; ++i)
    if (td.t[i].is_zero() || (td.n[i] - td.t[i] * td.t[i]).is_zero()) throw std::domain_error(kDegenerate);
  return td;
}

TraceData generic_trace_data() {
  TraceData td;
  td.field = make_field(4, {"t1", "t2", "t3", "n1", "n2", "n3"});
  for (std::size_t i = 0; i < 3; ++i) {
    td.t[i] = FieldElement::variable(td.field, i);
    td.n[i] = FieldElement::variable(td.field, 3 + i);
  }
  return td;
}

std::string reading_name(SerreReading r) {
  return r == SerreReading::printed ? "printed (q4 slot t1 - n1^2)" : "corrected (q4 slot n1 - t1^2)";
}

QuadraticForm serre_form(const TraceData& td, SerreReading reading) {
  const auto& t = td.t;
  const auto& n = td.n;
  for (int i = 0; i < 3; ++i) {
    if (t[i].is_zero()) throw std::domain_error("hypothesis violated");
    auto h = reading == SerreReading::printed ? n[i] * n[i] - t[i] : n[i] - t[i] * t[i];
    if (h.is_zero()) throw std::domain_error("hypothesis violated");
  }
  FieldElement x = n[0] - t[0] * t[0];
  FieldElement slot = reading == SerreReading::printed ? t[0] - n[0] * n[0] : x;
  try {
    auto q2 = pfister(td.field, {x, n[1]});
    auto q4 = pfister(td.field, {slot, (n[1] - t[1] * t[1]) * n[1], t[0] * t[1], t[1] * t[2]});
    return orthogonal_sum(q2, q4);
  } catch (const std::invalid_argument&) {
    throw std::domain_error("hypothesis violated");
  }
}

namespace {

ExprPtr node(Expr::Op op, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr gen(std::size_t i) {
  auto e = std::make_shared<Expr>();
  e->op = Expr::Op::generator;
  e->generator = i;
  return e;
}

ExprPtr cst(const Rat& q) {
  auto e = std::make_shared<Expr>();
  e->value = q;
  return e;
}

ExprPtr mul(ExprPtr a, ExprPtr b) { return node(Expr::Op::mul, std::move(a), std::move(b)); }

/// Leaves are generators with index < count, or constants.
bool leaves_ok(const ExprPtr& e, std::size_t count) {
  switch (e->op) {
    case Expr::Op::generator: return e->generator < count;
    case Expr::Op::constant: return true;
    default: return e->lhs && e->rhs && leaves_ok(e->lhs, count) && leaves_ok(e->rhs, count);
  }
}

}  // namespace

std::string expr_to_string(const ExprPtr& e, const std::vector<std::string>& names) {
  switch (e->op) {
    case Expr::Op::generator: return "(" + names.at(e->generator) + ")";
    case Expr::Op::constant: return e->value.get_str();
    case Expr::Op::add: return "(" + expr_to_string(e->lhs, names) + " + " + expr_to_string(e->rhs, names) + ")";
    case Expr::Op::sub: return "(" + expr_to_string(e->lhs, names) + " - " + expr_to_string(e->rhs, names) + ")";
    case Expr::Op::mul: return expr_to_string(e->lhs, names) + "*" + expr_to_string(e->rhs, names);
  }
  return "";
}

FieldElement expr_evaluate(const ExprPtr& e, const std::vector<FieldElement>& g) {
  switch (e->op) {
    case Expr::Op::generator: return g.at(e->generator);
    case Expr::Op::constant: return FieldElement(g.at(0).context(), e->value);
    case Expr::Op::add: return expr_evaluate(e->lhs, g) + expr_evaluate(e->rhs, g);
    case Expr::Op::sub: return expr_evaluate(e->lhs, g) - expr_evaluate(e->rhs, g);
    case Expr::Op::mul: return expr_evaluate(e->lhs, g) * expr_evaluate(e->rhs, g);
  }
  throw std::logic_error("bad expression");
}

EquivForm equiv_form(const TraceData& td) {
  const auto& t = td.t;
  const auto& n = td.n;
  if (t[0].is_zero() || t[1].is_zero()) throw std::domain_error("zero denominator");
  std::vector<FieldElement> g{n[0] / (t[0] * t[0]), n[1] / (t[1] * t[1]), t[0] * t[1], t[1] * t[2]};
  std::vector<std::string> names{"n1/t1^2", "n2/t2^2", "t1*t2", "t2*t3"};

  auto one = cst(1);
  auto g2 = gen(1);
  std::vector<ExprPtr> slots{mul(node(Expr::Op::sub, one, g2), g2), gen(2), gen(3)};
  std::vector<ExprPtr> inner{g2};
  for (std::size_t mask = 1; mask < 8; ++mask) {
    ExprPtr p;
    for (std::size_t i = 0; i < 3; ++i)
      if (mask >> i & 1) p = p ? mul(p, slots[i]) : slots[i];
    inner.push_back(p);
  }
  auto outer = node(Expr::Op::sub, one, gen(0));
  std::vector<ExprPtr> entries = inner;
  for (const auto& e : inner) entries.push_back(mul(outer, e));

  std::vector<FieldElement> values;
  for (const auto& e : entries) values.push_back(expr_evaluate(e, g));
  EquivForm r{diagonal(td.field, values), names, g, entries, {}};

  bool leaves = true;
  for (const auto& e : entries) leaves = leaves && leaves_ok(e, 4);
  r.audit.add("entries use only n1/t1^2, n2/t2^2, t1*t2, t2*t3 and rationals", leaves);
  bool reproduces = true;
  for (std::size_t i = 0; i < entries.size(); ++i) reproduces = reproduces && r.form.gram()(i, i) == values[i];
  r.audit.add("expressions evaluate to the diagonal", reproduces && r.form.is_diagonal());
  r.audit.add("dimension 16", r.form.dim() == 16, std::to_string(r.form.dim()));
  r.audit.add("F0 generated by 4 elements, so trdeg F0 <= 4", leaves && g.size() == 4);
  return r;
}

std::string target_name(WittTarget t) {
  return t == WittTarget::equiv ? "equiv_form" : "<1, t1^2 - n1> + equiv_form";
}

std::vector<FieldElement> witt_target_entries(const TraceData& td, WittTarget target) {
  std::vector<FieldElement> e;
  if (target == WittTarget::split_plus_equiv) {
    e.push_back(FieldElement(td.field, Rat(1)));
    e.push_back(td.t[0] * td.t[0] - td.n[0]);
  }
  for (const auto& x : equiv_form(td).form.entries()) e.push_back(x);
  return e;
}

const WittCertificate& generic_witt_certificate(SerreReading reading, WittTarget target) {
  static std::map<std::pair<int, int>, WittCertificate> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(reading), static_cast<int>(target));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto td = generic_trace_data();
  WittCertificate c{reading, target, derive_witt_moves(serre_form(td, reading).entries(), witt_target_entries(td, target)), ""};
  if (c.moves) {
    c.detail = std::to_string(c.moves->size()) + " moves on generic t_i, n_i";
  } else if (target == WittTarget::split_plus_equiv && generic_witt_certificate(reading, WittTarget::equiv).moves) {
    c.detail = "no chain: serre_form is Witt-equivalent to equiv_form, so this target differs from it by "
               "<1, t1^2 - n1>, which is not hyperbolic (t1^2 - n1 = f2^2 a2 is not a square up to sign)";
  } else {
    c.detail = "no chain: unmatched entries do not cancel in hyperbolic pairs";
  }
  return cache.emplace(key, std::move(c)).first->second;
}

WittReplay witt_derive_equivalence(const TraceData& td, SerreReading reading, WittTarget target) {
  WittReplay r;
  const auto& cert = generic_witt_certificate(reading, target);
  if (!cert.moves) {
    r.detail = cert.detail;
    return r;
  }
  if (td.field->conductor() % 4 != 0) {
    r.detail = "needs sqrt(-1) in the scalars";
    return r;
  }
  std::map<std::size_t, FieldElement> images;
  for (std::size_t i = 0; i < 3; ++i) {
    images[i] = td.t[i];
    images[3 + i] = td.n[i];
  }
  try {
    for (auto mv : *cert.moves) {
      if (mv.witness.context()) mv.witness = mv.witness.substitute(images);
      r.moves.push_back(mv);
    }
    auto start = serre_form(td, reading);
    r.final_state = witt_apply({start.entries(), {}}, r.moves);
  } catch (const std::exception& e) {
    r.detail = e.what();
    return r;
  }
  auto want = witt_target_entries(td, target);
  r.ok = r.final_state.entries.size() == want.size();
  for (std::size_t i = 0; r.ok && i < want.size(); ++i) r.ok = r.final_state.entries[i] == want[i];
  r.detail = r.ok ? std::to_string(r.moves.size()) + " moves replayed" : "replay does not reach the target";
  return r;
}

std::optional<std::vector<Rat>> rational_diagonal(const std::vector<FieldElement>& entries) {
  std::vector<Rat> r;
  for (const auto& e : entries) {
    auto q = e.rational();
    if (!q) return std::nullopt;
    r.push_back(*q);
  }
  return r;
}

}  // namespace brauerlab
