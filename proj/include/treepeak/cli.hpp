#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treepeak::cli {

/// Dispatches one command-line invocation. Exit status: 0 success, 1
/// negative answer (not single-peaked / no tree of the requested class),
/// 2 usage or input error, 3 guard refusal.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace treepeak::cli
