#ifndef CONJFORGE_CLI_APP_HPP
#define CONJFORGE_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace conjforge::cli {

/// conj-forge eval|conj|audit. args excludes the program name; returns the exit code.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace conjforge::cli

#endif
