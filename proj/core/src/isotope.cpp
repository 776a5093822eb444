#include "casimir/isotope.hpp"

#include "casimir/dielectric.hpp"
#include "casimir/errors.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <string_view>
#include <tuple>

namespace casimir
{

AnharmonicLattice::AnharmonicLattice(double x0, double k_spring, double b_anharm, double mass)
    : x0_(x0), k_spring_(k_spring), b_anharm_(b_anharm), mass_(mass)
{
    if (!(x0 > 0.0) || !(k_spring > 0.0) || !(mass > 0.0) || !std::isfinite(b_anharm)) {
        throw InvalidInput("lattice requires x0, k, M > 0 and finite b");
    }
    if (std::isfinite(mass) && !(std::abs(b_anharm) * zero_point_amplitude() < k_spring)) {
        throw InvalidInput(fmt::format("anharmonicity not perturbative: |b| u_zp / k = {:.3g}",
                                       std::abs(b_anharm) * zero_point_amplitude() / k_spring));
    }
}

double AnharmonicLattice::omega() const
{
    return std::sqrt(k_spring_ / mass_);
}

double AnharmonicLattice::zero_point_amplitude() const
{
    return std::sqrt(constants::hbar / (2.0 * mass_ * omega()));
}

double lattice_constant_thermal(const AnharmonicLattice& lat, Temperature T)
{
    const double k = lat.k_spring();
    return lat.x0() + lat.b_anharm() / (2.0 * k * k) * constants::k_B * T.kelvin();
}

double lattice_constant_zero_point(const AnharmonicLattice& lat)
{
    const double k = lat.k_spring();
    return lat.x0() + lat.b_anharm() / (4.0 * k * k) * constants::hbar * lat.omega();
}

double zero_point_coefficient(const AnharmonicLattice& lat)
{
    const double k = lat.k_spring();
    return lat.b_anharm() * constants::hbar / (4.0 * k * std::sqrt(k));
}

IsotopeShift delta_a_between_isotopes(const AnharmonicLattice& lat, double m1, double m2)
{
    if (!(m1 > 0.0) || !(m2 > 0.0)) {
        throw InvalidInput("isotope masses must be > 0");
    }
    const double delta = zero_point_coefficient(lat) * (1.0 / std::sqrt(m2) - 1.0 / std::sqrt(m1));
    return {delta, delta / lattice_constant_zero_point(lat.with_mass(m1))};
}

AnharmonicLattice calibrate_anharmonicity(double x0, double k_spring, double m1, double m2,
                                          double target_delta_a_over_a)
{
    if (!(m1 > 0.0) || !(m2 > 0.0) || m1 == m2) {
        throw InvalidInput("calibration needs two distinct positive masses");
    }
    // C (m2^-1/2 - m1^-1/2) = t (x0 + C m1^-1/2), C = b hbar / (4 k^3/2).
    const double g = 1.0 / std::sqrt(m2) - 1.0 / std::sqrt(m1);
    const double h = 1.0 / std::sqrt(m1);
    const double coefficient = target_delta_a_over_a * x0 / (g - target_delta_a_over_a * h);
    const double b = 4.0 * k_spring * std::sqrt(k_spring) * coefficient / constants::hbar;
    return {x0, k_spring, b, m1};
}

RelativeForceDifference relative_force_difference(double d, double omega_p,
                                                  double delta_a_over_a, Temperature T)
{
    const auto validity = check_validity(d, omega_p, T);
    return {-(8.0 * constants::c / (omega_p * d)) * delta_a_over_a, validity};
}

double relative_force_difference_from_plasma_shift(double d, double omega_p,
                                                   double delta_omega_over_omega)
{
    return (16.0 / 3.0) * (constants::c / (omega_p * d)) * delta_omega_over_omega;
}

ForceDifference force_difference_full(const PlateSystem& sys, double delta_a_over_a,
                                      const QuadratureConfig& qcfg, const MatsubaraConfig& mcfg)
{
    const auto& model = sys.model();
    if (!model.is_plasma()) {
        throw InvalidInput("force_difference_full requires plasma-model plates");
    }
    auto force = [&](const PlateSystem& s) {
        return mcfg.field_temperature.is_zero() ? casimir_force_zero_temperature(s, qcfg)
                                                : casimir_force_finite_temperature(s, mcfg, qcfg);
    };
    const auto f1 = force(sys);
    if (delta_a_over_a == 0.0) {
        return {0.0, 0.0, f1.force, f1.force, 0.0};
    }
    const auto shift = plasma_shift_from_lattice(model.plasma_frequency(), delta_a_over_a);
    const auto f2 =
        force(sys.with_model(DielectricModel::plasma(shift.omega_p, model.material_temperature())));
    const double delta = f2.force - f1.force;
    return {delta, delta / f1.force, f1.force, f2.force, f1.abs_error + f2.abs_error};
}

void IsotopeRecord::validate() const
{
    if (element.empty()) {
        throw InvalidInput("isotope record needs an element symbol");
    }
    if (mass_number_1 == mass_number_2) {
        throw InvalidInput("isotope record compares an isotope with itself");
    }
    if (!(std::abs(delta_a_over_a) < 1e-2)) {
        throw InvalidInput("|delta a / a| must be < 1e-2");
    }
}

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T>
bool parse_number(std::string_view text, T& out)
{
    text = trim(text);
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return !text.empty() && ec == std::errc{} && ptr == end;
}

constexpr std::string_view expected_header = "element,A1,A2,delta_a_over_a,T_K,source";

} // namespace

std::vector<IsotopeRecord> parse_isotope_table(std::istream& in)
{
    std::vector<IsotopeRecord> records;
    std::set<std::tuple<std::string, int, int, double>> seen;
    bool header_seen = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view row = trim(line);
        if (row.empty()) {
            continue;
        }
        if (row.front() == '#') {
            constexpr std::string_view tag = "schema=";
            if (const auto pos = row.find(tag); pos != std::string_view::npos) {
                int schema = 0;
                if (!parse_number(row.substr(pos + tag.size()), schema)
                    || schema != isotope_table_schema) {
                    throw ParseError(fmt::format("line {}: unsupported isotope table schema",
                                                 line_no),
                                     line_no);
                }
            }
            continue;
        }
        if (!header_seen) {
            if (row != expected_header) {
                throw ParseError(fmt::format("line {}: expected header `{}`", line_no,
                                             expected_header),
                                 line_no);
            }
            header_seen = true;
            continue;
        }

        std::string_view fields[6];
        std::string_view rest = row;
        for (int i = 0; i < 5; ++i) {
            const auto comma = rest.find(',');
            if (comma == std::string_view::npos) {
                throw ParseError(fmt::format("line {}: expected 6 comma-separated fields",
                                             line_no),
                                 line_no);
            }
            fields[i] = trim(rest.substr(0, comma));
            rest = rest.substr(comma + 1);
        }
        fields[5] = trim(rest); // source may itself contain commas

        IsotopeRecord rec{std::string(fields[0]), 0, 0, 0.0, Temperature::zero(),
                          std::string(fields[5])};
        double kelvin = 0.0;
        if (!parse_number(fields[1], rec.mass_number_1)
            || !parse_number(fields[2], rec.mass_number_2)
            || !parse_number(fields[3], rec.delta_a_over_a) || !parse_number(fields[4], kelvin)) {
            throw ParseError(fmt::format("line {}: malformed numeric field", line_no), line_no);
        }
        try {
            rec.temperature = Temperature{kelvin};
            rec.validate();
        } catch (const InvalidInput& e) {
            throw ParseError(fmt::format("line {}: {}", line_no, e.what()), line_no);
        }
        if (!seen.emplace(rec.element, rec.mass_number_1, rec.mass_number_2, kelvin).second) {
            throw ParseError(fmt::format("line {}: duplicate record {} {}/{} at {} K", line_no,
                                         rec.element, rec.mass_number_1, rec.mass_number_2,
                                         kelvin),
                             line_no);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<IsotopeRecord> load_isotope_table(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput(fmt::format("cannot open isotope table '{}'", path.string()));
    }
    return parse_isotope_table(in);
}

} // namespace casimir
