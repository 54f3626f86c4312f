#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mosaickit::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 domain error (invalid mosaic, input not in cap form, ...), 2 usage or
/// parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mosaickit::cli
