#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3count::cli {

// Full command-line interface against explicit argument and stream
// bindings; returns the process exit status. The binary's main() is a
// one-line wrapper, so tests drive the exact production code path.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace k3count::cli
