#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace efpoly::cli {

/**
 * Runs one command line (program name excluded). Reports go to `out` as
 * "key: value" lines, diagnostics to `err`.
 * Exit codes: 0 claim holds or operation succeeded, 1 claim fails,
 * 2 usage or input error.
 */
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lower-case hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace efpoly::cli
