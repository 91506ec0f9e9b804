#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prodtw {

/// Entry point behind the prodtw binary; also driven directly by tests.
/// args excludes the program name. Exit codes: 0 success/valid certificate,
/// 1 invalid certificate, 2 usage or parse error, 3 resource ceiling.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace prodtw
