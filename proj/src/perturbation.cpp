#include "ptosc/perturbation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ptosc/errors.hpp"

namespace ptosc {

double potential_series_eval(const PTParameters& params, double x, int kMax) {
    const DerivedScales s = derive_scales(params);
    if (kMax < 1 || kMax > static_cast<int>(kTanSquaredSeries.size()))
        throw InvalidParameter("series truncation order must be 1, 2 or 3");
    const double y = s.alpha * x;
    if (!(std::abs(y) < std::numbers::pi / 2.0)) throw DomainError("|alpha x| must be below pi/2");

    const double y2 = y * y;
    double sum = 0.0;
    double power = y2;
    for (int k = 0; k < kMax; ++k) {
        sum += kTanSquaredSeries[static_cast<std::size_t>(k)] * power;
        power *= y2;
    }
    return params.wellDepth * sum;
}

double quartic_first_order_shift(double quarticCoefficient, double mass, double omega, double hbar,
                                 long oscillatorLevel) {
    if (oscillatorLevel < 0) throw InvalidParameter("oscillator level must be >= 0");
    if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0))
        throw InvalidParameter("mass, omega and hbar must be positive");
    const double lengthSq = hbar / (mass * omega);
    const auto m = static_cast<double>(oscillatorLevel);
    return 1.5 * quarticCoefficient * lengthSq * lengthSq * (m * m + m + 0.5);
}

PerturbedEnergy perturbed_energy(const PTParameters& params, long n, bool literalBracket) {
    if (n < 1) throw InvalidParameter("quantum number must be >= 1, got " + std::to_string(n));
    const DerivedScales s = derive_scales(params);
    if (!(params.wellDepth > 0.0)) throw DomainError("perturbation theory needs a nonzero well depth");

    // omega~ from V0 alpha^2 x^2 = (1/2) m omega~^2 x^2, and b from the (2/3)(alpha x)^4 term.
    const double omegaTilde = s.alpha * std::sqrt(2.0 * params.wellDepth / params.mass);
    const double hbarOmegaTilde = params.actionQuantum * omegaTilde;
    const double quartic = params.wellDepth * kTanSquaredSeries[1] * std::pow(s.alpha, 4);
    const long level = literalBracket ? n : n - 1;

    PerturbedEnergy e;
    e.harmonicPart = hbarOmegaTilde * (static_cast<double>(n) - 0.5);
    e.quarticCorrection =
        quartic_first_order_shift(quartic, params.mass, omegaTilde, params.actionQuantum, level);
    e.total = e.harmonicPart + e.quarticCorrection;
    return e;
}

} // namespace ptosc
