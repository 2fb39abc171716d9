#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauerlab/crossed.hpp"
#include "brauerlab/rng.hpp"

namespace brauerlab {

/// (a, b)_m with x^m = a, y^m = b, xy = zeta_m yx.
struct SymbolFactor {
  FieldElement a, b;
  int m = 0;
};

/// delta with delta gamma = zeta_2m gamma delta; the algebra is (d, c)_2m via x = delta, y = gamma.
struct CyclicSymbol {
  CrossedAlgebra::Element gamma, delta;
  FieldElement c;  // gamma^2m
  FieldElement d;  // delta^2m
  std::size_t kernel_dim = 0;
  Certificate checks;
};

/// Needs gamma^2m in F* and 1, gamma, ..., gamma^(2m-1) independent. Scans the kernel of
/// delta -> delta gamma - zeta_2m gamma delta in echelon order; a kernel vector is accepted when
/// delta^2m is a nonzero scalar (then delta is a unit). Throws "no invertible solution found".
CyclicSymbol cyclic_to_symbol(const CrossedAlgebra& A, const CrossedAlgebra::Element& gamma);

enum class Branch { generic, f1_zero, f2_zero };
std::string branch_name(Branch b);

struct DecompositionCertificate {
  Branch branch = Branch::generic;
  FieldElement f1, f2;
  std::optional<FieldElement> f, c;               // generic: f = -a1/f1, c = -a1 f2/f1
  std::optional<CrossedAlgebra> twisted;          // generic: A_f
  CrossedAlgebra::Element gamma;                  // cyclic generator (in A_f, or z1 in A)
  std::optional<CrossedAlgebra::Element> delta;   // from cyclic_to_symbol
  std::optional<CrossedAlgebra::Element> y;       // f2 = 0: anticommutes with alpha2 in the centralizer
  std::optional<FieldElement> d;
  std::vector<SymbolFactor> symbols;              // A ~ tensor product of these
  Certificate checks;
};

struct DecomposeOptions {
  /// Run cyclic_to_symbol on the cyclic piece.
  bool symbol = true;
};

/// Reads b1 = f1 + f2 alpha2 and follows the matching branch. Throws when f1 = f2 = 0.
DecompositionCertificate decompose(const CrossedAlgebra& A, const DecomposeOptions& opt = {});

/// Recomputes every identity from the stored witnesses.
Certificate verify_decomposition(const CrossedAlgebra& A, const DecompositionCertificate& cert);

nlohmann::json to_json(const DecompositionCertificate& cert, const CrossedAlgebra& A);
/// Rebuilds the algebra and witnesses from JSON and re-verifies them.
Certificate reverify_decomposition(const nlohmann::json& j);

/// Conductor of the scalars for degree m: 2m, which contains zeta_m and zeta_2m.
int crossed_conductor(int m);

/// Twisted instance with random rational data over Q(zeta_2m) (no variables) landing in the requested
/// branch (generic: f1 f2 != 0). The f1 = 0 seed is z1^m = beta alpha2, z2^2 = delta alpha1, u = zeta_2m.
CrossedAlgebra random_crossed_instance(int m, Rng& rng, std::optional<Branch> force = std::nullopt);

/// Twisted symbolic family over Q(zeta_2m)(a1, a2, k0, k1, k2, beta, delta): k = k0 + k1 alpha1 + k2 alpha2,
/// l = 1. For m = 2, f1 = beta(k0^2 + k2^2 a2 - a1 k1^2) and f2 = 2 beta k0 k2.
CrossedAlgebra symbolic_crossed_family(int m);

/// Generators of the symbol factors of B(t) with coordinates in F containing t.
struct SymbolGenerators {
  FieldVector x, y;
  int m = 0;
};

struct SpecializedSymbols {
  Rat t0;
  std::vector<SymbolFactor> symbols;
  std::vector<FieldVector> x, y;
  Certificate checks;
};

/// Picks t0 in [-20, 20] avoiding poles, zeros of `avoid`, and vanishing generators; then checks
/// x_i^m_i, y_i^m_i scalar, x_i y_i = zeta y_i x_i, commuting factors and that the monomials span B.
/// Throws "no admissible t0 in sample box" after 100 draws.
SpecializedSymbols specialize_decomposition(const StructureAlgebra& B, const std::string& t,
                                            const std::vector<SymbolGenerators>& gens,
                                            const std::vector<FieldElement>& avoid, Rng& rng);

struct RationalizedSymbols {
  FieldPtr field;                   // original variables plus lambda_i, mu_i
  std::vector<SymbolFactor> symbols;  // (a_i lambda_i^n_i, b_i mu_i^n_i)_n_i
  std::vector<std::string> generators;
  FieldElement jacobian;            // det d(a', b') / d(lambda, mu)
  bool independent = false;
};

/// a_i' = a_i lambda_i^n_i, b_i' = b_i mu_i^n_i over F(lambda, mu); the new generators are algebraically
/// independent since their Jacobian in (lambda, mu) is a nonzero diagonal product.
RationalizedSymbols rationalize_symbol_params(const FieldPtr& F, const std::vector<SymbolFactor>& symbols);

}  // namespace brauerlab
