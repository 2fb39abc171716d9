#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauerlab/crossed.hpp"
#include "json.hpp"

namespace brauerlab {

/// Symmetric bilinear form given by its Gram matrix; q(v) = b(v, v).
class QuadraticForm {
 public:
  QuadraticForm(FieldPtr F, FieldMatrix gram);

  const FieldPtr& field() const { return F_; }
  const FieldMatrix& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }
  bool is_diagonal() const;
  /// Diagonal of the Gram matrix.
  std::vector<FieldElement> entries() const;
  bool degenerate() const;
  std::string to_string() const;

 private:
  FieldPtr F_;
  FieldMatrix gram_;
};

/// Throws "zero entry".
QuadraticForm diagonal(const FieldPtr& F, const std::vector<FieldElement>& entries);
/// <1, l1> (x) ... (x) <1, lr>; entry for the subset S (bit i = l_i) is prod_{i in S} l_i.
QuadraticForm pfister(const FieldPtr& F, const std::vector<FieldElement>& slots);
/// pfister without the leading <1>.
QuadraticForm pfister0(const FieldPtr& F, const std::vector<FieldElement>& slots);
QuadraticForm orthogonal_sum(const QuadraticForm& a, const QuadraticForm& b);
/// Kronecker product of Gram matrices.
QuadraticForm tensor(const QuadraticForm& a, const QuadraticForm& b);

struct Diagonalization {
  QuadraticForm form;  // diagonal
  FieldMatrix P;       // P^T G P = form
  bool degenerate = false;
};

/// Pivot: first nonzero diagonal entry; else e_i += e_j for the first nonzero off-diagonal (i, j).
Diagonalization diagonalize(const QuadraticForm& q);

/// Gram(i, j) = Trd(e_i e_j), Trd = regular trace / degree.
QuadraticForm trace_form(const StructureAlgebra& A);
/// Same, with Trd read off the identity component (2m times its constant coordinate).
QuadraticForm trace_form(const CrossedAlgebra& A);
QuadraticForm trace_form(const SymbolAlgebra& A);

/// Needs -1 to be a square in the scalars. Diagonalizes and greedily pairs entries whose ratio is a square
/// (<a, a> = <a, -a> is hyperbolic). None means inconclusive.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> hyperbolic_sufficient(const QuadraticForm& q);

/// A step in a Witt-equivalence chain on a diagonal entry list.
struct WittMove {
  enum class Kind { scale, negate, permute, cancel_hyperbolic_pair, split_off };
  Kind kind = Kind::scale;
  std::vector<std::size_t> indices;  // scale/negate: {i}; cancel: {i, j}; permute: new[k] = old[indices[k]]; split_off: entries
  FieldElement witness;              // scale: w (entry *= w^2); negate: s with s^2 = -1
  std::string describe() const;
};

std::string kind_name(WittMove::Kind k);

struct WittState {
  std::vector<FieldElement> entries;
  std::vector<FieldElement> split;  // entries split off so far, in order
};

/// Replays the moves, re-verifying each witness; throws "witness fails: <move>".
WittState witt_apply(const WittState& start, const std::vector<WittMove>& moves);

nlohmann::json to_json(const WittMove& m);
WittMove witt_move_from_json(const FieldPtr& F, const nlohmann::json& j);

/// Moves taking `from` to `to` (entry lists over the same field): each target entry gets a distinct source
/// entry with square or minus-square ratio; unmatched source entries must cancel in pairs a, -a (after a
/// negation when -1 is a square). None when no such chain is found.
std::optional<std::vector<WittMove>> derive_witt_moves(const std::vector<FieldElement>& from,
                                                       const std::vector<FieldElement>& to);

struct ScalingDescent {
  FieldPtr field;                   // with the scaling variables adjoined
  std::vector<FieldElement> entries;  // t_i^2 a_i
  std::vector<std::string> generators;
  bool independent = false;         // Jacobian of the entries has full rank
};

/// <a_1, ..., a_n> -> <t_1^2 a_1, ..., t_n^2 a_n> over F(t_1, ..., t_n), generators of F_0 = k(a').
ScalingDescent scaling_descent(const QuadraticForm& diag);

struct TauFormBound {
  std::size_t bound = 0;
  bool equality = false;  // entries are distinct independent variables
  std::string citation;
};

TauFormBound tau_form_bound(const QuadraticForm& diag);

}  // namespace brauerlab
