#pragma once

#include <string_view>
#include <vector>

#include "ptosc/parameters.hpp"

namespace ptosc {

/// Energy of level n split into its free-particle (T n^2) and oscillator (hbar omega (n - 1/2)) parts.
struct EnergyLevel {
    double fp = 0.0;
    double ho = 0.0;
    double total = 0.0;
};

/// Diagonal pressure element P_n = -dE_n/dL with the same split.
struct PressureLevel {
    double fp = 0.0;
    double ho = 0.0;
    double total = 0.0;
};

enum class Regime { FPDominated, HODominated, Crossover };

[[nodiscard]] std::string_view to_string(Regime r);

struct RegimeRatio {
    double eta = 0.0;  ///< E_fp / E_ho = n^2 / (lambda (n - 1/2)); +inf at V0 = 0
    Regime label = Regime::FPDominated;
};

/// Levels with eta at or below this are oscillator-like.
inline constexpr double kHODominatedBelow = 0.5;
/// Levels with eta at or above this are box-like.
inline constexpr double kFPDominatedAbove = 2.0;

struct SpectrumRow {
    long n = 1;
    double energyFP = 0.0;
    double energyHO = 0.0;
    double energyTotal = 0.0;
    double pressureFP = 0.0;
    double pressureHO = 0.0;
    double pressureTotal = 0.0;
    double regimeRatio = 0.0;
    double approximateRatio = 0.0;  ///< n / n_cr, the simplified ratio
    Regime regimeLabel = Regime::FPDominated;
};

struct SpectrumTable {
    PTParameters params;
    DerivedScales scales;
    std::vector<SpectrumRow> rows;
};

inline constexpr long kMaxTableLevels = 1'000'000;

[[nodiscard]] EnergyLevel energy_level(const PTParameters& params, long n);
[[nodiscard]] PressureLevel pressure_level(const PTParameters& params, long n);
[[nodiscard]] RegimeRatio regime_ratio(const PTParameters& params, long n);
[[nodiscard]] SpectrumTable spectrum_table(const PTParameters& params, long nMax);

// Variants that reuse precomputed scales.
[[nodiscard]] EnergyLevel energy_level(const DerivedScales& s, long n);
[[nodiscard]] PressureLevel pressure_level(const DerivedScales& s, double halfWidth, long n);
[[nodiscard]] RegimeRatio regime_ratio(const DerivedScales& s, long n);

/// Effective equation-of-state exponent P_n L / E_n.
[[nodiscard]] double effective_exponent(const PTParameters& params, long n);

} // namespace ptosc
