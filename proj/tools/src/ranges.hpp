#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dcli {

// Raised for malformed range strings; main maps it to exit code 2.
struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "a,b,c" -> those values; "lo:hi:count" -> count points linearly spaced
// over [lo, hi] inclusive (count >= 1; count == 1 takes lo).
std::vector<double> parse_double_range(const std::string& text);

// "a,b,c" -> those values; "lo:hi" -> every integer from lo to hi inclusive.
std::vector<long long> parse_int_range(const std::string& text);

} // namespace dcli
