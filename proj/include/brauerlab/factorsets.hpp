#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "brauerlab/certificate.hpp"
#include "brauerlab/lattices.hpp"
#include "json.hpp"

namespace brauerlab {

/// Laurent monomial in zeta_ij (entries of Y) and zeta'_ii (diagonal of X); indices 0-based internally.
class FactorSetMonomial {
 public:
  FactorSetMonomial() = default;
  explicit FactorSetMonomial(int n);

  int n() const { return n_; }
  long& zeta(int i, int j) { return exps_[static_cast<std::size_t>(i * n_ + j)]; }
  long zeta(int i, int j) const { return exps_[static_cast<std::size_t>(i * n_ + j)]; }
  long& zeta_diag(int i) { return exps_[static_cast<std::size_t>(n_ * n_ + i)]; }
  long zeta_diag(int i) const { return exps_[static_cast<std::size_t>(n_ * n_ + i)]; }
  const std::vector<long>& exponents() const { return exps_; }

  bool is_one() const;
  bool has_diagonal_prime() const;
  FactorSetMonomial operator*(const FactorSetMonomial& o) const;
  FactorSetMonomial inverse() const;
  FactorSetMonomial pow(long k) const;
  /// sigma(zeta_ij) = zeta_{sigma(i) sigma(j)}.
  FactorSetMonomial apply(const Perm& sigma) const;
  bool operator==(const FactorSetMonomial& o) const { return n_ == o.n_ && exps_ == o.exps_; }
  bool operator!=(const FactorSetMonomial& o) const { return !(*this == o); }
  /// 1-based text such as "z12 z23 z13^-1"; "1" for the empty monomial.
  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<long> exps_;
};

FactorSetMonomial zeta_monomial(int n, int i, int j);

class FactorSet {
 public:
  FactorSet() = default;
  FactorSet(int n, std::string name);

  int n() const { return n_; }
  const std::string& name() const { return name_; }
  FactorSetMonomial& at(int i, int j, int h) { return entries_[index(i, j, h)]; }
  const FactorSetMonomial& at(int i, int j, int h) const { return entries_[index(i, j, h)]; }

 private:
  std::size_t index(int i, int j, int h) const {
    return static_cast<std::size_t>((i * n_ + j) * n_ + h);
  }
  int n_ = 0;
  std::string name_;
  std::vector<FactorSetMonomial> entries_;
};

/// c_ijh = zeta_ij zeta_jh zeta_ih^-1.
FactorSet udn_factor_set(int n);
/// c'_ijh = (c_ijh / c_hji)^((n+1)/2), n odd.
FactorSet normalized_factor_set(int n);

/// sigma(c_ijh) = c_{sigma(i) sigma(j) sigma(h)} for sigma in {(1 2), (1 2 ... n)}.
Certificate check_equivariance(const FactorSet& fs);
/// c_ijh c_ihl = c_ijl c_jhl for all quadruples.
Certificate check_cocycle(const FactorSet& fs);
/// The variant c_ijl c_jhl^-1 c_ihl c_ijh^-1 = 1; fails for c_ijh, kept as a negative control.
Certificate check_cocycle_literal(const FactorSet& fs);
/// Reduced: c_iij = c_ijj = 1.
Certificate check_reduced(const FactorSet& fs);
/// Normalized: reduced and c_ijh c_hji = 1.
Certificate check_normalized(const FactorSet& fs);
/// Every entry lies in the wedge square of A_{n-1}.
Certificate check_wedge_entries(const FactorSet& fs);

/// Integer coordinates of the zeta exponent tensor in the basis (u_i - u_1)^(u_l - u_1), 2 <= i < l <= n.
std::optional<IntVector> wedge_membership(const FactorSetMonomial& m);
/// Exponent tensor sum_ij c_ij u_i(x)u_j rebuilt from wedge coordinates.
FactorSetMonomial wedge_element(int n, const IntVector& coords);

struct YGenerators {
  LatticePtr lattice;  // omega(G/H) (x) omega(G/H)
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> labels;
  std::vector<IntVector> elements;
  std::size_t span_rank = 0;
  Certificate certificate;
};
/// y_ijh = (g_i - g_j)(x)(g_j - g_h) for all coset triples, with a spanning certificate.
YGenerators y_generators(const CosetSpace& cosets);

struct FieldOfDefinitionReport {
  int n = 0;
  long long trdeg = 0;          // (n-1)(n-2)/2
  std::size_t wedge_rank = 0;   // computed
  std::size_t q_rank = 0;       // Sym2 A + U + Z, computed
  long long m = 0;              // n(n+1)/2 + 1
  long long t_count = 0;        // n - 1
  std::size_t kernel_rank = 0;  // Ker f, computed
  std::optional<std::vector<std::size_t>> q_character;  // over S2xS_{n-2}, S_{n-1}, S_n
  Certificate certificate;
};
FieldOfDefinitionReport field_of_definition_report(int n, bool character_certificate = true);

nlohmann::json to_json(const FactorSetMonomial& m);
/// Compressed table listing only the non-trivial entries.
nlohmann::json to_json(const FactorSet& fs);
nlohmann::json to_json(const FieldOfDefinitionReport& r);

}  // namespace brauerlab
