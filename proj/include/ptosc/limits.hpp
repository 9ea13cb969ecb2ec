#pragma once

#include <string>

#include "ptosc/parameters.hpp"

namespace ptosc {

enum class LimitRegime { FP, HO };

/// Truncated series for lambda, hbar omega and E_n in one of the two limiting regimes.
///
/// FP side (4 V0 / T small): lambda ~ x/2 (order 1), (x/2)(1 - x/4) (order 2), with x = 4 V0 / T.
/// The energy keeps the exact T n^2 term and uses the truncated hbar omega for the rest.
///
/// HO side (4 V0 / T large): with lambda~ = 2 sqrt(V0 / T),
/// lambda ~ lambda~ (order 1), lambda~ - 1 (order 2), lambda~ - 1 + 1 / (2 lambda~) (order 3).
/// At order 1 the energy is the pure oscillator hbar omega~ (n - 1/2); higher orders add T n^2,
/// which is of the same order in alpha as the -T correction.
struct LimitExpansion {
    LimitRegime regime = LimitRegime::FP;
    int orderKept = 1;
    long n = 1;
    double lambdaApprox = 0.0;
    double oscillatorQuantumApprox = 0.0;
    double energyApprox = 0.0;
};

/// Side-by-side comparison of an exact value and its approximation.
struct ApproximationReport {
    double exact = 0.0;
    double approx = 0.0;
    double absoluteError = 0.0;
    double relativeError = 0.0;
    std::string expectedOrder;  ///< leading neglected term, e.g. "O((4V0/T)^2)"
};

[[nodiscard]] ApproximationReport make_report(double exact, double approx, std::string expectedOrder);

/// Largest V0 / T accepted by the FP expansion (radius of convergence of sqrt(1 + x) in x = 4 V0 / T).
inline constexpr double kFPMaxDepthRatio = 0.25;
/// Smallest V0 / T accepted by the HO expansion.
inline constexpr double kHOMinDepthRatio = 4.0;

/// Throws DomainError if V0 / T >= 1/4 or order is not 1 or 2.
[[nodiscard]] LimitExpansion fp_limit_expansion(const PTParameters& params, int order, long n = 1);

/// Throws DomainError if V0 / T <= 4 or order is not in 1..3.
[[nodiscard]] LimitExpansion ho_limit_expansion(const PTParameters& params, int order, long n = 1);

/// lambda~ = 2 sqrt(V0 / T), the leading large-coupling value of lambda.
[[nodiscard]] double lambda_tilde(const DerivedScales& s);

/// Compares s_eff = P_n L / E_n against s = 2 (FP) or s = 1 (HO).
[[nodiscard]] ApproximationReport limit_equation_of_state(const PTParameters& params, long n,
                                                          LimitRegime regime);

/// Exact E_n against the truncated-series energy of the given regime and order.
[[nodiscard]] ApproximationReport limit_energy_report(const PTParameters& params, long n,
                                                      LimitRegime regime, int order);

} // namespace ptosc
