#ifndef CONJFORGE_OUTCOME_HPP
#define CONJFORGE_OUTCOME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conjforge {

/// Exact identities evaluated while accepting a witness.
struct Certificate
{
  bool verified = false;
  std::vector<std::string> checks;
};

struct SearchStats
{
  uint64_t candidates = 0;
  std::string window;
};

/// Length figures are exact word lengths for the lamplighter and metric
/// estimates for the other families.
struct LengthStats
{
  double u = 0;
  double v = 0;
  double witness = 0;
};

template <class Element>
struct ConjugacyOutcome
{
  bool conjugate = false;
  std::optional<Element> witness;
  Certificate certificate;
  LengthStats lengths;
  SearchStats stats;
};

/// Execution policy for kernels that have an OpenMP path and a serial reference.
enum class Exec { Serial, Parallel };

} // namespace conjforge

#endif
