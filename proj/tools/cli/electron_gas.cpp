#include "cli/electron_gas.hpp"

#include "casimir/errors.hpp"

#include <fmt/format.h>

#include <fstream>
#include <sstream>

namespace casimir::cli
{

ElectronGasTable parse_electron_gas_table(std::istream& in)
{
    ElectronGasTable table;
    bool header_seen = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!header_seen) {
            if (line.rfind("element,", 0) != 0) {
                throw ParseError(fmt::format("line {}: expected header", line_no), line_no);
            }
            header_seen = true;
            continue;
        }
        std::istringstream row(line);
        std::string element;
        std::string field;
        double values[3];
        std::getline(row, element, ',');
        for (double& v : values) {
            if (!std::getline(row, field, ',')) {
                throw ParseError(fmt::format("line {}: expected 4 fields", line_no), line_no);
            }
            try {
                std::size_t used = 0;
                v = std::stod(field, &used);
            } catch (const std::exception&) {
                throw ParseError(fmt::format("line {}: malformed number", line_no), line_no);
            }
        }
        try {
            table.insert_or_assign(element,
                                   ElectronGasParams::from_lattice(values[0], values[1], values[2]));
        } catch (const InvalidInput& e) {
            throw ParseError(fmt::format("line {}: {}", line_no, e.what()), line_no);
        }
    }
    return table;
}

ElectronGasTable load_electron_gas_table(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput(fmt::format("cannot open electron-gas table '{}'", path.string()));
    }
    return parse_electron_gas_table(in);
}

} // namespace casimir::cli
