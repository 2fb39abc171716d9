#include "brauerlab/semilinear.hpp"

#include <deque>
#include <stdexcept>

namespace brauerlab {

FieldElement FieldAutomorphism::apply(const FieldElement& f) const {
  if (images.empty() && zeta_power == 1) return f;
  return f.substitute(images, zeta_power);
}

FieldMatrix FieldAutomorphism::apply(const FieldMatrix& m) const {
  FieldMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = apply(m(i, j));
  return r;
}

FieldVector FieldAutomorphism::apply(const FieldVector& v) const {
  FieldVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(apply(x));
  return r;
}

SemilinearAction::SemilinearAction(GroupPtr group, FieldPtr field, std::vector<std::string> basis,
                                   std::vector<FieldAutomorphism> generator_automorphisms,
                                   std::vector<FieldMatrix> generator_matrices)
    : group_(std::move(group)),
      field_(std::move(field)),
      basis_(std::move(basis)),
      autos_(std::move(generator_automorphisms)),
      mats_(std::move(generator_matrices)) {
  const auto& gens = group_->generators();
  if (autos_.size() != gens.size() || mats_.size() != gens.size())
    throw std::invalid_argument("SemilinearAction: one automorphism and one matrix per generator required");
  for (const auto& m : mats_)
    if (m.rows() != basis_.size() || m.cols() != basis_.size())
      throw std::invalid_argument("SemilinearAction: matrix size differs from the module dimension");
  words_.assign(group_->order(), {});
  std::vector<char> seen(group_->order(), 0);
  seen[group_->identity()] = 1;
  std::deque<std::size_t> queue{group_->identity()};
  while (!queue.empty()) {
    std::size_t g = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::size_t h = group_->mul(gens[k], g);
      if (seen[h]) continue;
      seen[h] = 1;
      words_[h] = words_[g];
      words_[h].push_back(k);
      queue.push_back(h);
    }
  }
}

FieldVector SemilinearAction::basis_vector(std::size_t j) const {
  FieldVector v(dim(), FieldElement(field_, Rat(0)));
  v[j] = FieldElement(field_, Rat(1));
  return v;
}

FieldVector SemilinearAction::apply_generator(std::size_t k, const FieldVector& v) const {
  return mats_[k] * autos_[k].apply(v);
}

FieldVector SemilinearAction::apply(std::size_t g, const FieldVector& v) const {
  FieldVector r = v;
  for (auto k : words_[g]) r = apply_generator(k, r);
  return r;
}

FieldElement SemilinearAction::apply_scalar(std::size_t g, const FieldElement& f) const {
  FieldElement r = f;
  for (auto k : words_[g]) r = autos_[k].apply(r);
  return r;
}

FieldVector SemilinearAction::average(const FieldVector& v) const {
  FieldVector sum(dim(), FieldElement(field_, Rat(0)));
  for (std::size_t g = 0; g < group_->order(); ++g) {
    auto w = apply(g, v);
    for (std::size_t i = 0; i < dim(); ++i) sum[i] += w[i];
  }
  return sum;
}

Certificate SemilinearAction::check_action() const {
  Certificate c;
  const auto& gens = group_->generators();
  std::string bad;
  for (std::size_t g = 0; g < group_->order() && bad.empty(); ++g)
    for (std::size_t k = 0; k < gens.size() && bad.empty(); ++k) {
      std::size_t h = group_->mul(gens[k], g);
      for (std::size_t j = 0; j < dim() && bad.empty(); ++j)
        if (apply_generator(k, apply(g, basis_vector(j))) != apply(h, basis_vector(j)))
          bad = "basis vector " + basis_[j];
      for (std::size_t i = 0; i <= field_->nvars() && bad.empty(); ++i) {
        FieldElement x = i < field_->nvars() ? FieldElement::variable(field_, i) : FieldElement::zeta(field_);
        if (autos_[k].apply(apply_scalar(g, x)) != apply_scalar(h, x))
          bad = "scalar " + (i < field_->nvars() ? field_->vars()[i] : std::string("zeta"));
      }
      if (!bad.empty()) bad += " at element " + format_cycles(group_->element(g)) + ", generator " + std::to_string(k);
    }
  c.add("group action", bad.empty(), bad);
  return c;
}

bool SemilinearAction::scalar_action_faithful() const {
  for (std::size_t g = 0; g < group_->order(); ++g) {
    if (g == group_->identity()) continue;
    bool moves = FieldElement::zeta(field_) != apply_scalar(g, FieldElement::zeta(field_));
    for (std::size_t i = 0; i < field_->nvars() && !moves; ++i) {
      auto x = FieldElement::variable(field_, i);
      moves = apply_scalar(g, x) != x;
    }
    if (!moves) return false;
  }
  return true;
}

namespace {

// divide by a rational so that the first nonzero coordinate has leading rational coefficient 1
void normalize(FieldVector& v) {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    const auto& coeffs = x.numerator().leading().second.coeffs();
    for (const auto& q : coeffs)
      if (sgn(q) != 0) {
        Rat inv = 1 / q;
        for (auto& y : v) y = y * inv;
        return;
      }
  }
}

}  // namespace

std::vector<FieldVector> invariant_basis_average(const SemilinearAction& act, std::optional<FieldElement> primitive) {
  const auto& F = act.field();
  if (!act.scalar_action_faithful()) throw std::invalid_argument("action not faithful");
  FieldElement w;
  if (primitive) {
    w = *primitive;
  } else {
    w = FieldElement(F, Rat(0));
    for (std::size_t i = 0; i < F->nvars(); ++i) w += FieldElement::variable(F, i) * Rat(static_cast<long>(i + 1));
    if (F->conductor() > 2) w += FieldElement::zeta(F);
  }
  std::vector<FieldVector> found;
  const std::size_t d = act.dim();
  FieldElement mult(F, Rat(1));
  for (std::size_t k = 0; k < act.group()->order() && found.size() < d; ++k) {
    for (std::size_t j = 0; j < d && found.size() < d; ++j) {
      FieldVector v = act.basis_vector(j);
      v[j] = mult;
      FieldVector t = act.average(v);
      bool zero = true;
      for (const auto& x : t) zero = zero && x.is_zero();
      if (zero) continue;
      FieldMatrix m(d, found.size() + 1);
      for (std::size_t c = 0; c < found.size(); ++c)
        for (std::size_t i = 0; i < d; ++i) m(i, c) = found[c][i];
      for (std::size_t i = 0; i < d; ++i) m(i, found.size()) = t[i];
      if (rank(m) == found.size() + 1) {
        normalize(t);
        found.push_back(std::move(t));
      }
    }
    mult = mult * w;
  }
  if (found.size() < d) throw std::runtime_error("averaging degenerate");
  return found;
}

}  // namespace brauerlab
