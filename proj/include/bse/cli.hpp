#pragma once

#include <stdexcept>
#include <string>

namespace bse::cli {

/// Exit codes: 0 success, 1 check failure, 2 usage error, 3 I/O error.
int run(int argc, const char* const* argv);

/// Parse an angle given as a decimal ("4.712") or as an exact multiple of pi
/// ("pi", "pi/2", "3pi/2", "-pi/4", "3*pi/2", "2pi"). MES conditions sit at
/// exact quarter turns, so the symbolic forms avoid truncated decimals.
double parse_angle(const std::string& text);

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bse::cli
