#include "brauerlab/snf.hpp"

#include <algorithm>

namespace brauerlab {

std::vector<Int> SNFResult::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// row_i -= q * row_t, restricted to columns >= from
void row_submul(IntMatrix& m, std::size_t i, std::size_t t, const Int& q, std::size_t from = 0) {
  for (std::size_t j = from; j < m.cols(); ++j)
    if (sgn(m(t, j)) != 0) m(i, j) -= q * m(t, j);
}

void col_submul(IntMatrix& m, std::size_t j, std::size_t t, const Int& q, std::size_t from = 0) {
  for (std::size_t i = from; i < m.rows(); ++i)
    if (sgn(m(i, t)) != 0) m(i, j) -= q * m(i, t);
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a, SNFOptions opts) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SNFResult r;
  r.D = a;
  if (opts.want_u) r.U = int_identity(m);
  if (opts.want_v) r.V = int_identity(n);
  IntMatrix& D = r.D;

  std::size_t t = 0;
  const std::size_t lim = std::min(m, n);
  Int q;
  for (; t < lim; ++t) {
    bool exhausted = false;
    while (true) {
      bool found = false;
      std::size_t pi = t, pj = t;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (sgn(D(i, j)) == 0) continue;
          if (!found || mpz_cmpabs(D(i, j).get_mpz_t(), D(pi, pj).get_mpz_t()) < 0) {
            found = true;
            pi = i;
            pj = j;
          }
        }
      if (!found) {
        exhausted = true;
        break;
      }
      D.swap_rows(t, pi);
      if (opts.want_u) r.U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      if (opts.want_v) r.V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(D(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        if (sgn(q) != 0) {
          row_submul(D, i, t, q, t);
          if (opts.want_u) row_submul(r.U, i, t, q);
        }
        if (sgn(D(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(D(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        if (sgn(q) != 0) {
          col_submul(D, j, t, q, t);
          if (opts.want_v) col_submul(r.V, j, t, q);
        }
        if (sgn(D(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // enforce d_t | every remaining entry
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(D(i, j)) != 0 && !mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            for (std::size_t c = t; c < n; ++c) D(t, c) += D(i, c);
            if (opts.want_u)
              for (std::size_t c = 0; c < m; ++c) r.U(t, c) += r.U(i, c);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (exhausted) break;
    if (sgn(D(t, t)) < 0) {
      D(t, t) = -D(t, t);
      if (opts.want_u)
        for (std::size_t c = 0; c < m; ++c) r.U(t, c) = -r.U(t, c);
    }
  }
  r.rank = t;
  return r;
}

std::size_t integer_rank(const IntMatrix& a) {
  return smith_normal_form(a, {false, false}).rank;
}

std::vector<Int> elementary_divisors(const IntMatrix& a) {
  auto r = smith_normal_form(a, {false, false});
  std::vector<Int> d;
  for (std::size_t i = 0; i < r.rank; ++i) d.push_back(r.D(i, i));
  return d;
}

bool has_unit_divisors(const IntMatrix& a) {
  for (const auto& d : elementary_divisors(a))
    if (d != 1) return false;
  return true;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  auto r = smith_normal_form(a, {false, true});
  const std::size_t n = a.cols();
  IntMatrix k(n, n - r.rank);
  for (std::size_t j = r.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j - r.rank) = r.V(i, j);
  return k;
}

std::optional<IntMatrix> left_inverse(const IntMatrix& b) {
  auto r = smith_normal_form(b, {true, true});
  const std::size_t k = b.cols();
  if (r.rank != k) return std::nullopt;
  for (std::size_t i = 0; i < k; ++i)
    if (r.D(i, i) != 1) return std::nullopt;
  IntMatrix top(k, b.rows());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) top(i, j) = r.U(i, j);
  return r.V * top;
}

IntegerSolver::IntegerSolver(const IntMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), snf_(smith_normal_form(a)) {}

std::optional<IntVector> IntegerSolver::solve(const IntVector& b) const {
  if (b.size() != rows_) throw std::invalid_argument("IntegerSolver: right-hand side has wrong length");
  IntVector ub = snf_.U * b;
  IntVector y(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < snf_.rank) {
      const Int& d = snf_.D(i, i);
      if (!mpz_divisible_p(ub[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), d.get_mpz_t());
    } else if (sgn(ub[i]) != 0) {
      return std::nullopt;
    }
  }
  return snf_.V * y;
}

std::optional<IntVector> solve_membership(const IntVector& target,
                                          const std::vector<IntVector>& spanning) {
  if (spanning.empty()) {
    for (const auto& x : target)
      if (sgn(x) != 0) return std::nullopt;
    return IntVector{};
  }
  IntegerSolver s(from_columns(target.size(), spanning));
  return s.solve(target);
}

}  // namespace brauerlab
