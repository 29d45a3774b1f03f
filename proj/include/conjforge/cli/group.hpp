#ifndef CONJFORGE_CLI_GROUP_HPP
#define CONJFORGE_CLI_GROUP_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "conjforge/bs/element.hpp"
#include "conjforge/lamplighter/element.hpp"
#include "conjforge/polycyclic/spec.hpp"
#include "conjforge/polycyclic/element.hpp"

namespace conjforge::cli {

using json = nlohmann::ordered_json;

enum class ExitCode : int { Ok = 0, Failed = 1, Usage = 2, Domain = 3, Io = 4 };

/// Error carrying the process exit code it maps to.
class CliError : public std::runtime_error
{
public:
  CliError(ExitCode code, std::string const &what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

private:
  ExitCode code_;
};

enum class Family { Lamplighter, BaumslagSolitar, Polycyclic };

Family parse_family(std::string const &tag);
std::string family_tag(Family f);

using AnyElement = std::variant<lamplighter::LLElement, bs::BSElement, polycyclic::PCElement>;

struct GroupContext
{
  Family family = Family::Lamplighter;
  uint32_t q = 2;
  std::shared_ptr<polycyclic::PCGroupSpec const> spec;

  /// {"family": ..} plus q or the spec matrices.
  json descriptor() const;
};

/// --group / --q / --spec resolved into a context. Spec problems map to exit 2 (file) or 3 (invalid).
GroupContext make_context(std::string const &family, uint32_t q, std::string const &spec_path);

polycyclic::PCGroupSpec spec_from_json(json const &j);

/// Element in its text grammar, optionally prefixed by "ll:", "bs:" or "pc:".
/// A prefix naming another family is a mixed-group error (exit 2).
AnyElement parse_element(std::string const &text, GroupContext const &ctx);

json to_json(AnyElement const &g);
AnyElement element_from_json(json const &j, GroupContext const &ctx);

std::string to_text(AnyElement const &g);

} // namespace conjforge::cli

#endif
