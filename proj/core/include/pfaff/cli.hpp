#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pfaff {

/// Exit codes: 0 success, 1 analysis error or catalog mismatch, 2 usage or parse error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

} // namespace pfaff
