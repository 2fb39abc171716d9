#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "brauerlab/hilbert.hpp"
#include "brauerlab/quadforms.hpp"

namespace brauerlab {

/// Degree-4 invariants: b_i = z_i^2 with z3 = (z1 z2)^-1, t_i = 1/2 Tr(b_i), n_i = N(b_i) over the
/// quadratic subfield fixed by sigma_i (sigma3 = sigma1 sigma2).
struct TraceData {
  FieldPtr field;
  std::array<FieldElement, 3> t, n;
  FieldElement f1, f2, a1, a2;  // b1 = f1 + f2 alpha2
  Certificate checks;
};

/// m = 2 only. Throws "degenerate: some t_i = 0 or n_i - t_i^2 = 0".
TraceData trace_data(const CrossedAlgebra& A);
/// t_i, n_i as independent variables over Q(zeta_4); f1, f2, a1, a2 left empty.
TraceData generic_trace_data();

/// Which first slot q4 uses: the printed t1 - n1^2 (hypothesis n_i^2 - t_i != 0) or n1 - t1^2
/// (hypothesis n_i - t_i^2 != 0, the slot shared with q2).
enum class SerreReading { printed, corrected };
std::string reading_name(SerreReading r);

/// q2 + q4 with q2 = <<n1 - t1^2, n2>>, q4 = <<slot, (n2 - t2^2) n2, t1 t2, t2 t3>>; 20-dimensional, diagonal.
/// Throws "hypothesis violated".
QuadraticForm serre_form(const TraceData& td, SerreReading reading = SerreReading::corrected);

/// Expression over the generators g1 = n1/t1^2, g2 = n2/t2^2, g3 = t1 t2, g4 = t2 t3 and rationals.
struct Expr {
  enum class Op { generator, constant, add, sub, mul };
  Op op = Op::constant;
  std::size_t generator = 0;
  Rat value;
  std::shared_ptr<const Expr> lhs, rhs;
};
using ExprPtr = std::shared_ptr<const Expr>;

std::string expr_to_string(const ExprPtr& e, const std::vector<std::string>& names);
FieldElement expr_evaluate(const ExprPtr& e, const std::vector<FieldElement>& generators);

struct EquivForm {
  QuadraticForm form;
  std::vector<std::string> generator_names;  // n1/t1^2, n2/t2^2, t1*t2, t2*t3
  std::vector<FieldElement> generators;
  std::vector<ExprPtr> entries;
  Certificate audit;  // leaves are generators or rationals; evaluation reproduces the form
};

/// <1, 1 - g1> (x) (<g2> + <<(1 - g2) g2, g3, g4>>_0), 16-dimensional. Throws "zero denominator".
EquivForm equiv_form(const TraceData& td);

/// Target of a Witt chain from serre_form: equiv_form alone, or <1, t1^2 - n1> + equiv_form.
enum class WittTarget { equiv, split_plus_equiv };
std::string target_name(WittTarget t);
std::vector<FieldElement> witt_target_entries(const TraceData& td, WittTarget target);

/// Move list derived once on generic_trace_data(); nullopt when no chain is found.
struct WittCertificate {
  SerreReading reading;
  WittTarget target;
  std::optional<std::vector<WittMove>> moves;  // over the generic field
  std::string detail;
};
const WittCertificate& generic_witt_certificate(SerreReading reading, WittTarget target);

struct WittReplay {
  bool ok = false;
  std::vector<WittMove> moves;  // instantiated
  WittState final_state;
  std::string detail;
};

/// Instantiates the generic certificate at td (t_i, n_i substituted) and replays it on serre_form(td).
WittReplay witt_derive_equivalence(const TraceData& td, SerreReading reading = SerreReading::corrected,
                                   WittTarget target = WittTarget::equiv);

/// Rational entries of a diagonal form over a field without variables; nullopt if any entry is not rational.
std::optional<std::vector<Rat>> rational_diagonal(const std::vector<FieldElement>& entries);

}  // namespace brauerlab
