#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dcli {

// One table cell: empty, a float, an integer, or verbatim text.
using Cell = std::variant<std::monostate, double, long long, std::string>;
using Row = std::vector<Cell>;
using Metadata = std::vector<std::pair<std::string, std::string>>;

// Shortest decimal string that round-trips the value. No locale, ever.
std::string float_str(double v);

// CSV: "# key=value" metadata lines, then the header, then the rows.
// Text cells are quoted only when RFC 4180 requires it.
void write_csv(std::ostream& os, const Metadata& meta,
               const std::vector<std::string>& columns,
               const std::vector<Row>& rows);

// JSON: a single top-level array of objects, fields in column order.
// Empty cells become null.
void write_json(std::ostream& os, const std::vector<std::string>& columns,
                const std::vector<Row>& rows);

} // namespace dcli
