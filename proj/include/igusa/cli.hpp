#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace igusa {

/* Exit codes: 0 all pass, 1 mismatch, 2 usage or configuration error,
 * 3 enumeration budget exceeded. */
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace igusa
