#include "cli/csv.hpp"

#include "cli/run_config.hpp"

#include "casimir/constants.hpp"

#include <fmt/format.h>

#include <cassert>
#include <cmath>

namespace casimir::cli
{

std::string format_number(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return fmt::format("{:.8e}", v);
}

std::string format_number(std::optional<double> v)
{
    return v ? format_number(*v) : std::string("nan");
}

CsvWriter::CsvWriter(std::ostream& out, const RunConfig& cfg,
                     const std::vector<std::string_view>& columns)
    : out_(out), columns_(columns.size())
{
    out_ << "# casimir " << CASIMIR_VERSION << '\n'
         << "# command=" << to_string(cfg.command) << '\n'
         << "# config_hash=" << cfg.hash() << '\n'
         << "# constants=" << constant_set_id << '\n';
    bool first = true;
    for (auto c : columns) {
        out_ << (first ? "" : ",") << c;
        first = false;
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& fields)
{
    assert(fields.size() == columns_);
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out_ << (i == 0 ? "" : ",") << fields[i];
    }
    out_ << '\n';
}

void CsvWriter::comment(std::string_view text)
{
    out_ << "# " << text << '\n';
}

} // namespace casimir::cli
