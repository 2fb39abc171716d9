#include "brauerlab/bounds.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace brauerlab {

namespace {

constexpr long long kMaxN = 1000000;

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> f;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

struct Candidate {
  long long value;
  std::string formula;
  std::string citation;
};

bool cyclic_base_case(long long n) { return n == 2 || n == 3 || n == 6; }

std::vector<Candidate> direct_upper(long long n, const BoundAssumptions& a) {
  std::vector<Candidate> c;
  // exact values first so ties cite them
  if (n == 4) c.push_back({5, "d(4) = 5", "Rost: d(4) = 5"});
  if (a.roots_of_unity && cyclic_base_case(n))
    c.push_back({2, "d(n) = 2", "UD(n) is cyclic for n = 2, 3, 6 given a primitive n-th root of unity"});
  c.push_back({n * n, "n^2", "Procesi: d(n) <= n^2"});
  if (n >= 4) c.push_back({n * n - 3 * n + 1, "n^2 - 3n + 1", "Lemire: d(n) <= n^2 - 3n + 1 for n >= 4"});
  if (n % 2 == 1 && n >= 3)
    c.push_back({(n - 1) * (n - 2) / 2 + n, "(n-1)(n-2)/2 + n", "Rowen: d(n) <= (n-1)(n-2)/2 + n for odd n"});
  if (n % 2 == 1 && n >= 5)
    c.push_back({(n - 1) * (n - 2) / 2, "(n-1)(n-2)/2",
                 "wedge-square descent: d(n) <= (n-1)(n-2)/2 for odd n >= 5"});
  return c;
}

// largest r with n = m^r
std::pair<long long, int> perfect_power(long long n) {
  auto f = factorize(n);
  int r = 0;
  for (const auto& [p, e] : f) r = std::gcd(r, e);
  long long m = 1;
  for (const auto& [p, e] : f)
    for (int i = 0; i < e / r; ++i) m *= p;
  return {m, r};
}

std::vector<Candidate> direct_lower(long long n, const BoundAssumptions& a) {
  std::vector<Candidate> c;
  c.push_back({2, "2", "Reichstein: d(m^r) >= 2r with m = n, r = 1"});
  auto [m, r] = perfect_power(n);
  if (r >= 2)
    c.push_back({2LL * r, "2r for n = m^r",
                 "Reichstein: d(m^r) >= 2r with m = " + std::to_string(m) + ", r = " + std::to_string(r)});
  if (n == 4) c.push_back({5, "d(4) = 5", "Rost: d(4) = 5"});
  if (a.roots_of_unity && cyclic_base_case(n))
    c.push_back({2, "d(n) = 2", "UD(n) is cyclic for n = 2, 3, 6 given a primitive n-th root of unity"});
  return c;
}

struct Best {
  long long value;
  std::string citation;
};

class Recursion {
 public:
  explicit Recursion(BoundAssumptions a) : a_(a) {}

  Best upper(long long n) {
    if (auto it = up_.find(n); it != up_.end()) return it->second;
    Best best{-1, ""};
    for (const auto& c : direct_upper(n, a_))
      if (best.value < 0 || c.value < best.value) best = {c.value, c.citation};
    for (long long x = 2; x * x <= n; ++x) {
      if (n % x || std::gcd(x, n / x) != 1) continue;
      Best l = upper(x), r = upper(n / x);
      if (l.value + r.value < best.value)
        best = {l.value + r.value, "coprime recursion: d(" + std::to_string(x) + ") + d(" + std::to_string(n / x) +
                                       ") <= " + std::to_string(l.value) + " + " + std::to_string(r.value)};
    }
    return up_[n] = best;
  }

  Best lower(long long n) {
    if (auto it = low_.find(n); it != low_.end()) return it->second;
    Best best{-1, ""};
    for (const auto& c : direct_lower(n, a_))
      if (c.value > best.value) best = {c.value, c.citation};
    for (long long x = 2; x * x <= n; ++x) {
      if (n % x || std::gcd(x, n / x) != 1) continue;
      for (long long y : {x, n / x}) {
        Best l = lower(y);
        if (l.value > best.value)
          best = {l.value, "monotonicity: d(" + std::to_string(y) + ") <= d(" + std::to_string(n) +
                               ") for a coprime factorization"};
      }
    }
    return low_[n] = best;
  }

 private:
  BoundAssumptions a_;
  std::map<long long, Best> up_;
  std::map<long long, Best> low_;
};

}  // namespace

BoundReport d_bounds(long long n, BoundAssumptions assumptions) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("d_bounds: n must satisfy 2 <= n <= 1000000");
  BoundReport r;
  r.quantity = "d(" + std::to_string(n) + ")";
  if (assumptions.roots_of_unity) r.assumptions.push_back("k contains a primitive n-th root of unity");
  for (const auto& c : direct_upper(n, assumptions)) r.provenance.push_back({"upper", c.formula, c.citation, c.value});
  for (const auto& c : direct_lower(n, assumptions)) r.provenance.push_back({"lower", c.formula, c.citation, c.value});
  Recursion rec(assumptions);
  Best up = rec.upper(n), low = rec.lower(n);
  for (long long x = 2; x * x <= n; ++x) {
    if (n % x || std::gcd(x, n / x) != 1) continue;
    long long v = rec.upper(x).value + rec.upper(n / x).value;
    r.provenance.push_back({"upper", "d(" + std::to_string(x) + ") + d(" + std::to_string(n / x) + ")",
                            "coprime recursion: d(ab) <= d(a) + d(b) for gcd(a, b) = 1", v});
  }
  r.upper = up.value;
  r.upper_citation = up.citation;
  r.lower = low.value;
  r.lower_citation = low.citation;
  if (cyclic_base_case(n) && !assumptions.roots_of_unity)
    r.notes.push_back("exact value of d(" + std::to_string(n) +
                      ") is unknown without a primitive n-th root of unity in k");
  for (long long x = 2; x * x <= n; ++x)
    if (n % x == 0 && std::gcd(x, n / x) == 1 && !assumptions.roots_of_unity &&
        (cyclic_base_case(x) || cyclic_base_case(n / x)))
      r.notes.push_back("coprime factors include a cyclic base case whose value needs roots of unity");
  if (r.lower > r.upper) throw std::logic_error("d_bounds: lower bound exceeds upper bound");
  return r;
}

BoundReport tau_bound_crossed(const Subgroup& h) {
  const auto& g = *h.parent();
  long long r = static_cast<long long>(min_generators_rel(h));
  BoundReport rep;
  rep.quantity = "tau(crossed product for " + g.name() + "/" + h.name() + ")";
  std::string rnote = "r = d(G/H) = " + std::to_string(r);
  if (h.is_trivial() && r < 2) {
    r = 2;
    rnote += ", raised to 2 because H is trivial";
  }
  long long value = r * static_cast<long long>(g.order()) - static_cast<long long>(h.index()) + 1;
  rep.upper = value;
  rep.upper_citation = "generic crossed product bound: tau(A) <= r|G| - [G:H] + 1 (" + rnote + ")";
  rep.lower = 0;
  rep.lower_citation = "transcendence degree is nonnegative";
  rep.assumptions.push_back("upper bound uses d(G/H) >= d_G(omega(G/H))");
  rep.provenance.push_back({"upper", "r|G| - [G:H] + 1", rep.upper_citation, value});
  rep.provenance.push_back({"lower", "0", rep.lower_citation, 0});
  rep.notes.push_back("the presentation gap pr(G/H) is unknown");
  return rep;
}

long long tau_bound_generated(long long n, long long r) {
  if (r < 2) throw std::invalid_argument("tau_bound_generated: r must be at least 2");
  if (n < 1) throw std::invalid_argument("tau_bound_generated: n must be positive");
  return (r - 1) * n + 1;
}

long long tau_bound_log(long long n) {
  if (n < 4) throw std::invalid_argument("tau_bound_log: n must be at least 4");
  long long lg = 0;
  while ((1LL << (lg + 1)) <= n) ++lg;
  return (lg - 1) * n + 1;
}

long long tau_rank_bound(const GLattice& m) {
  if (!is_faithful(m)) throw std::invalid_argument("lattice not faithful: the rank bound is inapplicable");
  return static_cast<long long>(m.rank());
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json prov = nlohmann::json::array();
  for (const auto& p : r.provenance)
    prov.push_back({{"direction", p.direction}, {"formula", p.formula}, {"citation", p.citation}, {"value", p.value}});
  return {{"quantity", r.quantity},
          {"lower", {{"value", r.lower}, {"citation", r.lower_citation}}},
          {"upper", {{"value", r.upper}, {"citation", r.upper_citation}}},
          {"assumptions", r.assumptions},
          {"provenance", prov},
          {"notes", r.notes}};
}

}  // namespace brauerlab
