#pragma once

#include <array>

#include "ptosc/parameters.hpp"

namespace ptosc {

/// Taylor coefficients of tan^2(y) = sum_k c_k y^(2k), k = 1..3.
inline constexpr std::array<double, 3> kTanSquaredSeries = {1.0, 2.0 / 3.0, 17.0 / 45.0};

/// V0 * sum_{k <= kMax} c_k (alpha x)^(2k). Throws DomainError for |alpha x| >= pi/2.
[[nodiscard]] double potential_series_eval(const PTParameters& params, double x, int kMax);

/// First-order shift of oscillator level m (m = 0, 1, ...) under b x^4:
/// (3b/2) (hbar / (mass omega))^2 (m^2 + m + 1/2).
[[nodiscard]] double quartic_first_order_shift(double quarticCoefficient, double mass, double omega,
                                               double hbar, long oscillatorLevel);

struct PerturbedEnergy {
    double harmonicPart = 0.0;       ///< hbar omega~ (n - 1/2)
    double quarticCorrection = 0.0;  ///< T (n^2 - n + 1/2) after the n -> n - 1 shift
    double total = 0.0;
};

/// Harmonic level plus the first-order (alpha x)^4 correction, indexed n = 1, 2, ...
///
/// With literalBracket the unshifted bracket T (n^2 + n + 1/2) is used instead, as it appears
/// in the original derivation before reindexing. Only useful for comparison.
[[nodiscard]] PerturbedEnergy perturbed_energy(const PTParameters& params, long n,
                                               bool literalBracket = false);

} // namespace ptosc
