#pragma once

#include "casimir/dielectric.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

namespace casimir::cli
{

/// Element symbol -> free-electron parameters. CSV with header
/// `element,lattice_constant_m,atoms_per_cell,valence_per_atom`.
using ElectronGasTable = std::map<std::string, ElectronGasParams>;

ElectronGasTable parse_electron_gas_table(std::istream& in);
ElectronGasTable load_electron_gas_table(const std::filesystem::path& path);

} // namespace casimir::cli
