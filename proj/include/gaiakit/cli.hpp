#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gaiakit::cli {

// Dispatch one command line (without argv[0]). Writes one JSON document to
// `out`. Returns 0 on success, 1 on domain failures (unsolvable lifting under
// --expect-solution, non-contractive maps, failed numeric checks), 2 on bad
// input (unknown flags, parse errors, invalid files).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gaiakit::cli
