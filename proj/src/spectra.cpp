#include "ptosc/spectra.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ptosc/errors.hpp"

namespace ptosc {

namespace {

void require_level(long n) {
    if (n < 1) throw InvalidParameter("quantum number must be >= 1, got " + std::to_string(n));
}

Regime classify(double eta) {
    if (eta <= kHODominatedBelow) return Regime::HODominated;
    if (eta >= kFPDominatedAbove) return Regime::FPDominated;
    return Regime::Crossover;
}

} // namespace

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::FPDominated: return "FP-dominated";
        case Regime::HODominated: return "HO-dominated";
        case Regime::Crossover: return "crossover";
    }
    return "unknown";
}

EnergyLevel energy_level(const DerivedScales& s, long n) {
    require_level(n);
    const auto nd = static_cast<double>(n);
    EnergyLevel e;
    e.fp = s.kineticScale * nd * nd;
    e.ho = s.oscillatorQuantum * (nd - 0.5);
    e.total = e.fp + e.ho;
    return e;
}

PressureLevel pressure_level(const DerivedScales& s, double halfWidth, long n) {
    const EnergyLevel e = energy_level(s, n);
    const auto nd = static_cast<double>(n);
    PressureLevel p;
    p.fp = 2.0 / halfWidth * e.fp;
    p.ho = 2.0 / halfWidth * e.ho - s.kineticScale * s.psiFactor * (nd - 0.5) / halfWidth;
    p.total = p.fp + p.ho;
    return p;
}

RegimeRatio regime_ratio(const DerivedScales& s, long n) {
    require_level(n);
    RegimeRatio r;
    if (s.lambdaExact == 0.0) {
        r.eta = std::numeric_limits<double>::infinity();
        r.label = Regime::FPDominated;
        return r;
    }
    const auto nd = static_cast<double>(n);
    r.eta = nd * nd / (s.lambdaExact * (nd - 0.5));
    r.label = classify(r.eta);
    return r;
}

EnergyLevel energy_level(const PTParameters& params, long n) {
    return energy_level(derive_scales(params), n);
}

PressureLevel pressure_level(const PTParameters& params, long n) {
    return pressure_level(derive_scales(params), params.halfWidth, n);
}

RegimeRatio regime_ratio(const PTParameters& params, long n) {
    return regime_ratio(derive_scales(params), n);
}

SpectrumTable spectrum_table(const PTParameters& params, long nMax) {
    if (nMax < 1 || nMax > kMaxTableLevels)
        throw InvalidParameter("n-max must lie in [1, " + std::to_string(kMaxTableLevels) + "], got " +
                               std::to_string(nMax));
    SpectrumTable table;
    table.params = params;
    table.scales = derive_scales(params);
    table.rows.reserve(static_cast<std::size_t>(nMax));
    for (long n = 1; n <= nMax; ++n) {
        const EnergyLevel e = energy_level(table.scales, n);
        const PressureLevel p = pressure_level(table.scales, params.halfWidth, n);
        const RegimeRatio r = regime_ratio(table.scales, n);
        SpectrumRow row;
        row.n = n;
        row.energyFP = e.fp;
        row.energyHO = e.ho;
        row.energyTotal = e.total;
        row.pressureFP = p.fp;
        row.pressureHO = p.ho;
        row.pressureTotal = p.total;
        row.regimeRatio = r.eta;
        row.approximateRatio = static_cast<double>(n) * table.scales.lambdaExact;
        row.regimeLabel = r.label;
        table.rows.push_back(row);
    }
    return table;
}

double effective_exponent(const PTParameters& params, long n) {
    // P_n L formed without dividing by L, so the box case returns exactly 2.
    const DerivedScales s = derive_scales(params);
    const EnergyLevel e = energy_level(s, n);
    const double pressureTimesWidth =
        2.0 * e.total - s.kineticScale * s.psiFactor * (static_cast<double>(n) - 0.5);
    return pressureTimesWidth / e.total;
}

} // namespace ptosc
