#include "brauerlab/quadforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace brauerlab {

QuadraticForm::QuadraticForm(FieldPtr F, FieldMatrix gram) : F_(std::move(F)), gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("Gram matrix must be square");
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (gram_(i, j) != gram_(j, i)) throw std::invalid_argument("Gram matrix must be symmetric");
}

bool QuadraticForm::is_diagonal() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (i != j && !gram_(i, j).is_zero()) return false;
  return true;
}

std::vector<FieldElement> QuadraticForm::entries() const {
  std::vector<FieldElement> e;
  for (std::size_t i = 0; i < dim(); ++i) e.push_back(gram_(i, i));
  return e;
}

bool QuadraticForm::degenerate() const { return determinant(gram_).is_zero(); }

std::string QuadraticForm::to_string() const {
  std::string s;
  if (is_diagonal()) {
    s = "<";
    for (std::size_t i = 0; i < dim(); ++i) s += (i ? ", " : "") + gram_(i, i).to_string();
    return s + ">";
  }
  s = "[";
  for (std::size_t i = 0; i < dim(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < dim(); ++j) s += (j ? ", " : "") + gram_(i, j).to_string();
  }
  return s + "]";
}

QuadraticForm diagonal(const FieldPtr& F, const std::vector<FieldElement>& entries) {
  FieldMatrix g = field_zero(F, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].is_zero()) throw std::invalid_argument("zero entry");
    g(i, i) = entries[i];
  }
  return QuadraticForm(F, std::move(g));
}

namespace {

std::vector<FieldElement> pfister_entries(const FieldPtr& F, const std::vector<FieldElement>& slots) {
  for (const auto& s : slots)
    if (s.is_zero()) throw std::invalid_argument("zero entry");
  std::vector<FieldElement> e;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    FieldElement p(F, Rat(1));
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) p *= slots[i];
    e.push_back(p);
  }
  return e;
}

}  // namespace

QuadraticForm pfister(const FieldPtr& F, const std::vector<FieldElement>& slots) {
  return diagonal(F, pfister_entries(F, slots));
}

QuadraticForm pfister0(const FieldPtr& F, const std::vector<FieldElement>& slots) {
  auto e = pfister_entries(F, slots);
  e.erase(e.begin());
  return diagonal(F, e);
}

QuadraticForm orthogonal_sum(const QuadraticForm& a, const QuadraticForm& b) {
  const std::size_t n = a.dim() + b.dim();
  FieldMatrix g = field_zero(a.field(), n, n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) g(a.dim() + i, a.dim() + j) = b.gram()(i, j);
  return QuadraticForm(a.field(), std::move(g));
}

QuadraticForm tensor(const QuadraticForm& a, const QuadraticForm& b) {
  const std::size_t n = a.dim() * b.dim();
  FieldMatrix g = field_zero(a.field(), n, n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a.gram()(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l) g(i * b.dim() + k, j * b.dim() + l) = a.gram()(i, j) * b.gram()(k, l);
    }
  return QuadraticForm(a.field(), std::move(g));
}

Diagonalization diagonalize(const QuadraticForm& q) {
  const FieldPtr& F = q.field();
  const std::size_t n = q.dim();
  FieldMatrix G = q.gram();
  FieldMatrix P = field_identity(F, n);
  // column ops on P mirror the congruence G -> E^T G E
  auto add_multiple = [&](std::size_t dst, std::size_t src, const FieldElement& c) {
    // e_dst += c e_src
    for (std::size_t i = 0; i < n; ++i) P(i, dst) += c * P(i, src);
    for (std::size_t i = 0; i < n; ++i) G(i, dst) += c * G(i, src);
    for (std::size_t j = 0; j < n; ++j) G(dst, j) += c * G(src, j);
  };
  auto swap = [&](std::size_t a, std::size_t b) {
    P.swap_cols(a, b);
    G.swap_cols(a, b);
    G.swap_rows(a, b);
  };
  bool degenerate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i)
      if (!G(i, i).is_zero()) piv = i;
    if (piv == n) {
      for (std::size_t i = k; i < n && piv == n; ++i)
        for (std::size_t j = i + 1; j < n && piv == n; ++j)
          if (!G(i, j).is_zero()) {
            add_multiple(i, j, FieldElement(F, Rat(1)));
            piv = i;
          }
    }
    if (piv == n) {
      degenerate = true;
      break;
    }
    swap(k, piv);
    FieldElement inv = G(k, k).inverse();
    for (std::size_t j = k + 1; j < n; ++j)
      if (!G(k, j).is_zero()) add_multiple(j, k, -(G(k, j) * inv));
  }
  return {QuadraticForm(F, G), P, degenerate};
}

namespace {

std::vector<FieldElement> basis_traces(const StructureAlgebra& A) {
  std::vector<FieldElement> t;
  for (std::size_t k = 0; k < A.dim(); ++k) t.push_back(A.reduced_trace(A.basis_vector(k)));
  return t;
}

}  // namespace

QuadraticForm trace_form(const StructureAlgebra& A) {
  const auto& F = A.field();
  const std::size_t d = A.dim();
  auto tr = basis_traces(A);
  if (A.reduced_trace(A.unit()) != FieldElement(F, Rat(static_cast<long>(A.degree()))))
    throw std::logic_error("reduced trace of 1 differs from the degree");
  FieldMatrix g = field_zero(F, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      auto p = A.mul(A.basis_vector(i), A.basis_vector(j));
      FieldElement s(F, Rat(0));
      for (std::size_t k = 0; k < d; ++k)
        if (!p[k].is_zero() && !tr[k].is_zero()) s += p[k] * tr[k];
      g(i, j) = s;
      g(j, i) = s;
    }
  return QuadraticForm(F, std::move(g));
}

QuadraticForm trace_form(const CrossedAlgebra& A) {
  const auto& F = A.base();
  const std::size_t d = A.dim();
  if (A.reduced_trace(A.one()) != FieldElement(F, Rat(static_cast<long>(A.group_order()))))
    throw std::logic_error("reduced trace of 1 differs from the degree");
  std::vector<CrossedAlgebra::Element> basis;
  for (std::size_t i = 0; i < d; ++i) {
    FieldVector v(d, FieldElement(F, Rat(0)));
    v[i] = FieldElement(F, Rat(1));
    basis.push_back(A.unflatten(v));
  }
  FieldMatrix g = field_zero(F, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      g(i, j) = A.reduced_trace(A.mul(basis[i], basis[j]));
      g(j, i) = g(i, j);
    }
  return QuadraticForm(F, std::move(g));
}

QuadraticForm trace_form(const SymbolAlgebra& A) { return trace_form(A.structure()); }

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> hyperbolic_sufficient(const QuadraticForm& q) {
  if (q.field()->conductor() % 4 != 0) throw std::invalid_argument("hyperbolic_sufficient needs sqrt(-1) in the scalars");
  if (q.dim() % 2) return std::nullopt;
  auto d = diagonalize(q);
  if (d.degenerate) return std::nullopt;
  auto e = d.form.entries();
  std::vector<bool> used(e.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (used[i]) continue;
    bool found = false;
    for (std::size_t j = i + 1; j < e.size() && !found; ++j) {
      if (used[j] || !is_square(e[j] / e[i])) continue;
      used[i] = used[j] = found = true;
      pairs.emplace_back(i, j);
    }
    if (!found) return std::nullopt;
  }
  return pairs;
}

std::string kind_name(WittMove::Kind k) {
  switch (k) {
    case WittMove::Kind::scale: return "scale-entry-by-square";
    case WittMove::Kind::negate: return "negate-entry";
    case WittMove::Kind::permute: return "permute";
    case WittMove::Kind::cancel_hyperbolic_pair: return "cancel-hyperbolic-pair";
    case WittMove::Kind::split_off: return "split-off-subform";
  }
  return "";
}

std::string WittMove::describe() const {
  std::string s = kind_name(kind) + " [";
  for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
  s += "]";
  if (kind == Kind::scale || kind == Kind::negate) s += " witness " + witness.to_string();
  return s;
}

WittState witt_apply(const WittState& start, const std::vector<WittMove>& moves) {
  WittState st = start;
  for (const auto& mv : moves) {
    auto fail = [&]() { throw std::runtime_error("witness fails: " + mv.describe()); };
    auto in_range = [&](std::size_t i) {
      if (i >= st.entries.size()) fail();
    };
    switch (mv.kind) {
      case WittMove::Kind::scale:
        if (mv.indices.size() != 1 || mv.witness.is_zero()) fail();
        in_range(mv.indices[0]);
        st.entries[mv.indices[0]] = st.entries[mv.indices[0]] * mv.witness * mv.witness;
        break;
      case WittMove::Kind::negate: {
        if (mv.indices.size() != 1 || !mv.witness.context()) fail();
        in_range(mv.indices[0]);
        if (mv.witness * mv.witness != FieldElement(mv.witness.context(), Rat(-1))) fail();
        st.entries[mv.indices[0]] = -st.entries[mv.indices[0]];
        break;
      }
      case WittMove::Kind::permute: {
        if (mv.indices.size() != st.entries.size()) fail();
        std::set<std::size_t> seen(mv.indices.begin(), mv.indices.end());
        if (seen.size() != mv.indices.size() || *seen.rbegin() >= st.entries.size()) fail();
        std::vector<FieldElement> next;
        for (auto i : mv.indices) next.push_back(st.entries[i]);
        st.entries = std::move(next);
        break;
      }
      case WittMove::Kind::cancel_hyperbolic_pair: {
        if (mv.indices.size() != 2 || mv.indices[0] == mv.indices[1]) fail();
        in_range(mv.indices[0]);
        in_range(mv.indices[1]);
        if (!(st.entries[mv.indices[0]] + st.entries[mv.indices[1]]).is_zero()) fail();
        auto hi = std::max(mv.indices[0], mv.indices[1]), lo = std::min(mv.indices[0], mv.indices[1]);
        st.entries.erase(st.entries.begin() + static_cast<long>(hi));
        st.entries.erase(st.entries.begin() + static_cast<long>(lo));
        break;
      }
      case WittMove::Kind::split_off: {
        std::set<std::size_t> idx(mv.indices.begin(), mv.indices.end());
        if (idx.size() != mv.indices.size()) fail();
        for (auto i : mv.indices) {
          in_range(i);
          st.split.push_back(st.entries[i]);
        }
        std::vector<FieldElement> rest;
        for (std::size_t i = 0; i < st.entries.size(); ++i)
          if (!idx.count(i)) rest.push_back(st.entries[i]);
        st.entries = std::move(rest);
        break;
      }
    }
  }
  return st;
}

nlohmann::json to_json(const WittMove& m) {
  nlohmann::json j{{"kind", kind_name(m.kind)}, {"indices", m.indices}};
  if (m.kind == WittMove::Kind::scale || m.kind == WittMove::Kind::negate) j["witness"] = m.witness.to_string();
  return j;
}

WittMove witt_move_from_json(const FieldPtr& F, const nlohmann::json& j) {
  WittMove m;
  std::string k = j.at("kind").get<std::string>();
  bool found = false;
  for (auto kind : {WittMove::Kind::scale, WittMove::Kind::negate, WittMove::Kind::permute,
                    WittMove::Kind::cancel_hyperbolic_pair, WittMove::Kind::split_off})
    if (kind_name(kind) == k) {
      m.kind = kind;
      found = true;
    }
  if (!found) throw std::invalid_argument("unknown move kind: " + k);
  m.indices = j.at("indices").get<std::vector<std::size_t>>();
  if (j.contains("witness")) m.witness = parse_field_element(F, j.at("witness").get<std::string>());
  return m;
}

namespace {

/// Moves turning entry `a` into `b`: scale when b/a is a square, negate + scale when -b/a is.
std::optional<std::vector<WittMove>> match_entry(const FieldElement& a, const FieldElement& b, std::size_t idx,
                                                 const std::optional<FieldElement>& i_unit) {
  FieldElement r = b / a;
  if (auto w = is_square(r)) {
    if (w->is_one()) return std::vector<WittMove>{};
    return std::vector<WittMove>{{WittMove::Kind::scale, {idx}, *w}};
  }
  if (!i_unit) return std::nullopt;
  if (auto w = is_square(-r)) {
    std::vector<WittMove> mv{{WittMove::Kind::negate, {idx}, *i_unit}};
    if (!w->is_one()) mv.push_back({WittMove::Kind::scale, {idx}, *w});
    return mv;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<WittMove>> derive_witt_moves(const std::vector<FieldElement>& from,
                                                       const std::vector<FieldElement>& to) {
  if (from.empty()) return to.empty() ? std::optional<std::vector<WittMove>>(std::vector<WittMove>{}) : std::nullopt;
  const FieldPtr& F = from[0].context();
  std::optional<FieldElement> i_unit;
  if (F->conductor() % 4 == 0) i_unit = root_of_unity(F, 4);
  std::vector<WittMove> moves;
  std::vector<bool> used(from.size(), false);
  std::vector<std::size_t> order;
  for (const auto& target : to) {
    bool found = false;
    for (std::size_t i = 0; i < from.size() && !found; ++i) {
      if (used[i]) continue;
      if (auto mv = match_entry(from[i], target, i, i_unit)) {
        used[i] = found = true;
        order.push_back(i);
        moves.insert(moves.end(), mv->begin(), mv->end());
      }
    }
    if (!found) return std::nullopt;
  }
  // leftovers must cancel in pairs: make the partner exactly the negative
  std::vector<std::size_t> left;
  for (std::size_t i = 0; i < from.size(); ++i)
    if (!used[i]) left.push_back(i);
  std::vector<bool> paired(left.size(), false);
  std::vector<std::size_t> tail;
  for (std::size_t a = 0; a < left.size(); ++a) {
    if (paired[a]) continue;
    bool found = false;
    for (std::size_t b = a + 1; b < left.size() && !found; ++b) {
      if (paired[b]) continue;
      if (auto mv = match_entry(from[left[b]], -from[left[a]], left[b], i_unit)) {
        paired[a] = paired[b] = found = true;
        tail.push_back(left[a]);
        tail.push_back(left[b]);
        moves.insert(moves.end(), mv->begin(), mv->end());
      }
    }
    if (!found) return std::nullopt;
  }
  WittMove perm{WittMove::Kind::permute, order, {}};
  perm.indices.insert(perm.indices.end(), tail.begin(), tail.end());
  bool identity = true;
  for (std::size_t k = 0; k < perm.indices.size(); ++k) identity = identity && perm.indices[k] == k;
  if (!identity) moves.push_back(perm);
  for (std::size_t p = 0; p < tail.size() / 2; ++p)
    moves.push_back({WittMove::Kind::cancel_hyperbolic_pair, {to.size(), to.size() + 1}, {}});
  return moves;
}

ScalingDescent scaling_descent(const QuadraticForm& diag) {
  if (!diag.is_diagonal()) throw std::invalid_argument("scaling_descent needs a diagonal form");
  const FieldPtr& F = diag.field();
  auto vars = F->vars();
  std::vector<std::string> added;
  for (std::size_t i = 0; i < diag.dim(); ++i) {
    std::string name = "t" + std::to_string(i + 1);
    while (std::find(vars.begin(), vars.end(), name) != vars.end()) name = "s" + name;
    vars.push_back(name);
    added.push_back(name);
  }
  ScalingDescent r;
  r.field = make_field(F->conductor(), vars);
  auto e = diag.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    auto t = FieldElement::variable(r.field, added[i]);
    r.entries.push_back(e[i].embed(r.field) * t * t);
    r.generators.push_back(r.entries.back().to_string());
  }
  FieldMatrix J = field_zero(r.field, r.entries.size(), r.field->nvars());
  for (std::size_t i = 0; i < r.entries.size(); ++i)
    for (std::size_t j = 0; j < r.field->nvars(); ++j) J(i, j) = r.entries[i].derivative(j);
  r.independent = rank(J) == r.entries.size();
  return r;
}

TauFormBound tau_form_bound(const QuadraticForm& diag) {
  if (!diag.is_diagonal()) throw std::invalid_argument("tau_form_bound needs a diagonal form");
  TauFormBound b;
  b.bound = diag.dim();
  b.citation = "Reichstein: tau(q) <= n for an n-dimensional form, with equality for <a_1, ..., a_n> in independent variables";
  std::set<std::size_t> seen;
  bool generic = true;
  for (const auto& e : diag.entries()) {
    const auto& terms = e.numerator().terms();
    if (!e.denominator().empty() || terms.size() != 1 || terms[0].first.degree() != 1 ||
        !terms[0].second.is_one()) {
      generic = false;
      break;
    }
    std::size_t v = 0;
    while (terms[0].first[v] == 0) ++v;
    generic = seen.insert(v).second;
    if (!generic) break;
  }
  b.equality = generic;
  return b;
}

}  // namespace brauerlab
