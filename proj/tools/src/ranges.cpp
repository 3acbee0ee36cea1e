#include "ranges.hpp"

#include <charconv>
#include <cstdlib>

namespace dcli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double to_double(const std::string& s) {
    if (s.empty())
        throw RangeError("empty value in range");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw RangeError("not a number: '" + s + "'");
    return v;
}

long long to_int(const std::string& s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw RangeError("not an integer: '" + s + "'");
    return v;
}

} // namespace

std::vector<double> parse_double_range(const std::string& text) {
    if (text.empty())
        throw RangeError("empty range");
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3)
            throw RangeError("expected lo:hi:count, got '" + text + "'");
        const double lo = to_double(parts[0]);
        const double hi = to_double(parts[1]);
        const long long count = to_int(parts[2]);
        if (count < 1)
            throw RangeError("range count must be >= 1");
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(count));
        if (count == 1) {
            out.push_back(lo);
            return out;
        }
        const double step = (hi - lo) / static_cast<double>(count - 1);
        for (long long i = 0; i < count; ++i)
            out.push_back(i + 1 == count ? hi : lo + step * i);
        return out;
    }
    std::vector<double> out;
    for (const auto& part : split(text, ','))
        out.push_back(to_double(part));
    return out;
}

std::vector<long long> parse_int_range(const std::string& text) {
    if (text.empty())
        throw RangeError("empty range");
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 2)
            throw RangeError("expected lo:hi, got '" + text + "'");
        const long long lo = to_int(parts[0]);
        const long long hi = to_int(parts[1]);
        if (hi < lo)
            throw RangeError("descending integer range '" + text + "'");
        std::vector<long long> out;
        for (long long v = lo; v <= hi; ++v)
            out.push_back(v);
        return out;
    }
    std::vector<long long> out;
    for (const auto& part : split(text, ','))
        out.push_back(to_int(part));
    return out;
}

} // namespace dcli
