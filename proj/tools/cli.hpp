#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slicetorus::cli {

/// Runs one command line (without the program name). Writes a single line of JSON to
/// `out`; `err` only receives the optional --human summary and help text.
///
/// Exit codes: 0 success, 1 computation or input error (JSON {"error", "step"?}),
/// 2 usage error such as an unknown verb.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace slicetorus::cli
