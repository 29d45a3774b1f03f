#ifndef CONJFORGE_CLI_AUDIT_HPP
#define CONJFORGE_CLI_AUDIT_HPP

#include <cstdint>
#include <random>
#include <string>

#include "conjforge/cli/group.hpp"
#include "conjforge/outcome.hpp"

namespace conjforge::cli {

struct AuditConfig
{
  GroupContext ctx;
  uint64_t samples = 100;
  uint64_t seed = 0;
  int64_t max_len = 12;
  Exec exec = Exec::Parallel;
};

struct AuditResult
{
  json report;
  uint64_t violations = 0;
  std::string summary;
};

/**
 * Samples u and gamma, sets v = gamma^-1 u gamma and solves (u, v).
 *
 * Lamplighter samples are checked against |gamma'| <= 3(|u| + |v|) with exact
 * lengths. The other families report ratios of estimates and check the
 * solver's internal inequalities. Sample i draws from its own stream seeded by
 * (seed, i), so the report does not depend on `exec`.
 */
AuditResult run_audit(AuditConfig const &cfg);

/// SplitMix64 finaliser of seed and index.
uint64_t sample_seed(uint64_t seed, uint64_t index);

/// Shift uniform in [-L, L]; up to L support points uniform in [-L, L] with nonzero coefficients.
lamplighter::LLElement sample_ll(std::mt19937_64 &rng, uint32_t q, int64_t max_len);

/// Shift uniform in [-L, L]; a / q^k with |a| <= 2^min(L,62), |k| <= L.
bs::BSElement sample_bs(std::mt19937_64 &rng, uint32_t q, int64_t max_len);

/// Coordinates of a uniform in [-2^ceil(L/2), 2^ceil(L/2)]; b uniform in [-ceil(L/2), ceil(L/2)].
polycyclic::PCElement sample_pc(std::mt19937_64 &rng, polycyclic::PCGroupSpec const &spec,
                                int64_t max_len);

} // namespace conjforge::cli

#endif
