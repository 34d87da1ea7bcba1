#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcl {

// Batch front end. args excludes the program name. Writes a JSON report to
// out for every command that gets far enough to produce one.
//
// Exit codes: 0 when every pass criterion in the report holds, 1 when a
// verification step fails (the report is still written), 2 on malformed
// input or usage errors (message on err, no report).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcl
