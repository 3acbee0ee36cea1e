#include "format.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "json.hpp"

namespace dcli {

std::string float_str(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (v == 0.0)
        return "0"; // fold away the sign of zero
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec; // 64 bytes always suffice for a double
    return std::string(buf, end);
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_text(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c))
        return "";
    if (const double* d = std::get_if<double>(&c))
        return float_str(*d);
    if (const long long* i = std::get_if<long long>(&c))
        return std::to_string(*i);
    return csv_escape(std::get<std::string>(c));
}

} // namespace

void write_csv(std::ostream& os, const Metadata& meta,
               const std::vector<std::string>& columns,
               const std::vector<Row>& rows) {
    for (const auto& [k, v] : meta)
        os << "# " << k << "=" << v << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const Row& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << cell_text(row[i]);
        os << "\n";
    }
}

void write_json(std::ostream& os, const std::vector<std::string>& columns,
                const std::vector<Row>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Row& row : rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size() && i < columns.size(); ++i) {
            const Cell& c = row[i];
            if (std::holds_alternative<std::monostate>(c))
                obj[columns[i]] = nullptr;
            else if (const double* d = std::get_if<double>(&c)) {
                if (std::isfinite(*d))
                    obj[columns[i]] = *d;
                else
                    obj[columns[i]] = float_str(*d); // JSON has no nan/inf
            } else if (const long long* n = std::get_if<long long>(&c))
                obj[columns[i]] = *n;
            else
                obj[columns[i]] = std::get<std::string>(c);
        }
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << "\n";
}

} // namespace dcli
