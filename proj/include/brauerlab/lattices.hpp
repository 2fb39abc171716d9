#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "brauerlab/certificate.hpp"
#include "brauerlab/groups.hpp"
#include "brauerlab/matrix.hpp"
#include "brauerlab/snf.hpp"
#include "json.hpp"

namespace brauerlab {

/// Free Z-module of finite rank with an integer action matrix for every group element.
class GLattice {
 public:
  GLattice(GroupPtr group, std::size_t rank, std::vector<IntMatrix> actions, std::string label);

  std::size_t rank() const { return rank_; }
  const GroupPtr& group() const { return group_; }
  const IntMatrix& action(std::size_t g) const { return actions_[g]; }
  const std::vector<IntMatrix>& actions() const { return actions_; }
  const std::string& label() const { return label_; }

 private:
  GroupPtr group_;
  std::size_t rank_;
  std::vector<IntMatrix> actions_;
  std::string label_;
};

using LatticePtr = std::shared_ptr<const GLattice>;

/// Linear map source -> target given by a target.rank x source.rank matrix.
struct LatticeMap {
  LatticePtr source;
  LatticePtr target;
  IntMatrix matrix;
};

/// inner: A -> B, outer: B -> C.
struct LatticeSequence {
  LatticeMap inner;
  LatticeMap outer;
};

/// Unimodular and multiplicative action: all generator pairs plus `samples` random pairs.
Certificate validate_lattice(const GLattice& l, std::size_t samples = 1000, unsigned long long seed = 1);
bool is_equivariant(const LatticeMap& f);
LatticeMap compose(const LatticeMap& second, const LatticeMap& first);

LatticePtr trivial_lattice(GroupPtr g);
LatticePtr perm_lattice(const CosetSpace& cosets);
/// Natural permutation lattice on the points the group acts on (U_n for S_n).
LatticePtr point_lattice(GroupPtr g);

/// Restriction of the action to the span of a saturated, G-stable basis; returns the inclusion.
std::pair<LatticePtr, LatticeMap> sublattice(LatticePtr ambient, const IntMatrix& basis, std::string label);
/// Saturated kernel of a map, with its inclusion into the source.
std::pair<LatticePtr, LatticeMap> kernel_lattice(const LatticeMap& f, std::string label);

/// Span of e_i - e_0 inside a permutation lattice, with the inclusion.
std::pair<LatticePtr, LatticeMap> augmentation_sublattice(LatticePtr perm, std::string label);
std::pair<LatticePtr, LatticeMap> augmentation_kernel(const CosetSpace& cosets);

LatticePtr tensor(const LatticePtr& a, const LatticePtr& b);
/// Wedge square with basis e_i^e_j (i<j) and the map e_i^e_j -> e_i(x)e_j - e_j(x)e_i.
std::pair<LatticePtr, LatticeMap> wedge2(const LatticePtr& l);
/// Symmetric square with basis e_i e_j (i<=j) and the quotient map from the tensor square.
std::pair<LatticePtr, LatticeMap> sym2(const LatticePtr& l);
LatticePtr direct_sum(const std::vector<LatticePtr>& parts);

/// Z[G]^r -> omega(G/H), alpha_k -> alpha_k (g_k - 1), with its saturated kernel.
LatticeSequence freepres_sequence(const CosetSpace& cosets, const std::vector<std::size_t>& g_list);
/// omega^(x)2 -> P -> omega with P on ordered pairs of distinct cosets.
LatticeSequence seq2_sequence(const CosetSpace& cosets);
/// The isomorphism omega (x) Z[G/H] -> P, (g1 - g2)(x)g2 -> g1(x)g2.
LatticeMap seq2_m_map(const CosetSpace& cosets);
/// Coordinates of (e_a - e_b)(x)e_b in omega (x) Z[G/H].
IntVector seq2_m_basis_vector(const CosetSpace& cosets, std::size_t a, std::size_t b);
/// Index of the pair (a, b), a != b, in the basis of P.
std::size_t seq2_pair_index(std::size_t n, std::size_t a, std::size_t b);

struct FormanekData {
  LatticeSequence sequence;   // Ker f -> U (+) U(x)U -> A
  LatticeMap decomposition;   // U (+) U (+) A(x)A -> Ker f
  LatticePtr u;
  LatticePtr a;
};
FormanekData formanek_sequence(int n);

Certificate is_exact(const LatticeSequence& seq);
bool is_faithful(const GLattice& l);
bool faithful_predicate_freepres(const Subgroup& h, std::size_t r);
bool faithful_predicate_seq2(const Subgroup& h);

std::vector<Int> character(const GLattice& l);
std::vector<Int> perm_character(const CosetSpace& cosets);
/// Nonnegative c with chi_L = sum c_i chi_{Z[G/H_i]}, by bounded search; none when infeasible.
std::optional<std::vector<std::size_t>> perm_character_decomposition(const GLattice& l,
                                                                      const std::vector<Subgroup>& subgroups);

nlohmann::json lattice_to_json(const GLattice& l);
nlohmann::json matrix_to_json(const IntMatrix& m);

}  // namespace brauerlab
