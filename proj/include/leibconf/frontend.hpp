#pragma once

#include <iosfwd>
#include <vector>

#include "leibconf/dsl.hpp"

namespace leibconf {

// One CLI invocation: a JSON report goes to json_out, a human-readable
// summary to human_out. Returns the exit code: 0 pass, 1 fail, 2 usage or
// parse error.
int dispatch(const std::vector<std::string>& args, std::ostream& json_out,
             std::ostream& human_out);

std::string version_string();

// built-in zoo, name (without extension) -> canonical file text
std::vector<std::pair<std::string, std::string>> fixture_files();

// formula and description for a checked identity id; empty if unknown
std::string explain_identity(const std::string& id);

}  // namespace leibconf
