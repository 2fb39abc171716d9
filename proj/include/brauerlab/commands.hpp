#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "brauerlab/crossed.hpp"
#include "brauerlab/envelope.hpp"

namespace brauerlab {

/// Raised for malformed user input; maps to exit code 2.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

CertificateEnvelope cmd_bounds(long long n, bool roots_of_unity);
CertificateEnvelope cmd_udn_factorset(int n, const std::string& check);
/// sequence: freepres (needs r), seq2, or formanek (needs n; group ignored).
CertificateEnvelope cmd_lattice(const std::string& group, const std::string& subgroup, const std::string& sequence,
                                std::size_t r, int n);
/// "a1=..,a2=..,f1=..,f2=..,u=..[,b2=..]": a1, a2, f1, f2 over Q(zeta_2m); u and b2 in alpha1, alpha2.
CrossedAlgebra crossed_from_params(int m, const std::string& params);
CertificateEnvelope cmd_crossed_decompose(int m, const std::optional<std::string>& params, std::size_t random,
                                          std::uint64_t seed, unsigned jobs);
CertificateEnvelope cmd_traceform(int m, std::size_t random, std::uint64_t seed, unsigned jobs);
/// criterion 0 runs all of 1..9.
CertificateEnvelope cmd_selftest(std::uint64_t seed, unsigned jobs, int criterion = 0);

/// Full command line; writes the envelope to `out` (or --out FILE) and diagnostics to `err`.
/// Exit codes: 0 all checks pass, 1 a check failed, 2 invalid input.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace brauerlab
