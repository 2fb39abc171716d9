#pragma once

#include <string>
#include <vector>

#include "brauerlab/lattices.hpp"
#include "json.hpp"

namespace brauerlab {

struct BoundProvenance {
  std::string direction;  // "lower" or "upper"
  std::string formula;
  std::string citation;
  long long value = 0;
};

struct BoundReport {
  std::string quantity;
  long long lower = 0;
  std::string lower_citation;
  long long upper = 0;
  std::string upper_citation;
  std::vector<std::string> assumptions;
  std::vector<BoundProvenance> provenance;
  std::vector<std::string> notes;
};

struct BoundAssumptions {
  /// The base field contains a primitive n-th root of unity.
  bool roots_of_unity = false;
};

/// Lower and upper bounds for d(n) from every applicable published inequality.
BoundReport d_bounds(long long n, BoundAssumptions assumptions = {});
/// r|G| - [G:H] + 1 with r = d(G/H), raised to 2 when H is trivial.
BoundReport tau_bound_crossed(const Subgroup& h);
/// (r-1)n + 1 for an algebra generated by r elements, r >= 2.
long long tau_bound_generated(long long n, long long r);
/// (floor(log2 n) - 1)n + 1 for n >= 4.
long long tau_bound_log(long long n);
/// rank(M) for a faithful kernel lattice M.
long long tau_rank_bound(const GLattice& m);

nlohmann::json to_json(const BoundReport& r);

}  // namespace brauerlab
