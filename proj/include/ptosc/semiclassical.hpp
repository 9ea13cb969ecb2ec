#pragma once

#include "ptosc/parameters.hpp"

namespace ptosc {

/// Closed-orbit action at one energy, evaluated by quadrature.
struct ActionEvaluation {
    double energy = 0.0;
    double turningPoint = 0.0;  ///< x0(E), in (0, L]; L only for the bare box
    double action = 0.0;        ///< 2 * integral of p(x, E) over [-x0, x0]
    double quadratureError = 0.0;
};

/// Relative accuracy demanded of the action quadrature.
inline constexpr double kActionRelativeTolerance = 1e-10;

/// p(x, E) = sqrt(2m (E - V0 tan^2(alpha x))). Throws DomainError when |x| >= L or E < V(x).
[[nodiscard]] double classical_momentum(const PTParameters& params, double x, double energy);

/// x0(E) = arctan(sqrt(E / V0)) / alpha; the wall L when V0 = 0.
[[nodiscard]] double turning_point(const PTParameters& params, double energy);

/// Throws ConvergenceError if the quadrature cannot reach kActionRelativeTolerance.
[[nodiscard]] ActionEvaluation action(const PTParameters& params, double energy);

/// Action from the analytic integral: (2 pi / alpha) sqrt(2m) [sqrt(E + V0) - sqrt(V0)].
[[nodiscard]] double action_closed(const PTParameters& params, double energy);

/// Bohr–Sommerfeld level T (n - 1/2)^2 + 2 sqrt(V0 T) (n - 1/2).
[[nodiscard]] double qc_energy_closed(const PTParameters& params, long n);

/// Solves action(E) = 2 pi hbar (n - 1/2) by bracketed root finding on the quadrature.
[[nodiscard]] double qc_energy_numeric(const PTParameters& params, long n);

} // namespace ptosc
