#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace casimir::cli
{

struct RunConfig;

/// Fixed formatting: 9 significant digits in scientific notation.
std::string format_number(double v);
std::string format_number(std::optional<double> v);
inline std::string format_bool(bool b) { return b ? "true" : "false"; }

class CsvWriter
{
public:
    /// Writes the `#` metadata block (tool version, command, config hash,
    /// constant set) followed by the column header.
    CsvWriter(std::ostream& out, const RunConfig& cfg, const std::vector<std::string_view>& columns);

    void row(const std::vector<std::string>& fields);
    void comment(std::string_view text);

private:
    std::ostream& out_;
    std::size_t columns_;
};

} // namespace casimir::cli
