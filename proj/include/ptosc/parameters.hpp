#pragma once

#include <limits>

namespace ptosc {

/// Physical inputs of the trigonometric Pöschl–Teller well V(x) = V0 tan^2(alpha x) on (-L, L).
///
/// Defaults are reduced units (hbar = m = 1). All four constants stay explicit so
/// SI inputs work unchanged.
struct PTParameters {
    double mass = 1.0;
    double wellDepth = 0.0;  ///< V0, energy units; zero gives the pure box
    double halfWidth = 1.0;  ///< L, confinement parameter
    double actionQuantum = 1.0;  ///< hbar

    /// Throws InvalidParameter unless mass, halfWidth, hbar > 0, wellDepth >= 0, all finite.
    void validate() const;

    /// Copy with a different half-width.
    [[nodiscard]] PTParameters withHalfWidth(double L) const {
        PTParameters p = *this;
        p.halfWidth = L;
        return p;
    }
    [[nodiscard]] PTParameters withWellDepth(double v0) const {
        PTParameters p = *this;
        p.wellDepth = v0;
        return p;
    }
};

/// Every scale quantity the spectrum and pressure formulas consume.
struct DerivedScales {
    double alpha = 0.0;              ///< pi / (2L)
    double kineticScale = 0.0;       ///< T = hbar^2 alpha^2 / (2m), ground level of the bare box
    double zetaSquared = 0.0;        ///< T / (pi^2 V0); +inf when V0 = 0
    double lambdaExact = 0.0;        ///< sqrt(1 + 4 V0 / T) - 1
    double oscillatorQuantum = 0.0;  ///< hbar omega = T lambda
    double psiFactor = 0.0;          ///< lambda (lambda + 2) / (lambda + 1)
    double nCritical = std::numeric_limits<double>::infinity();  ///< 1 / lambda
    double coupling = 0.0;           ///< 4 V0 / T, equal to (2 / (pi zeta))^2
};

[[nodiscard]] DerivedScales derive_scales(const PTParameters& params);

/// lambda from x = 4 V0 / T in the rationalized form x / (1 + sqrt(1 + x)).
[[nodiscard]] double lambda_from_coupling(double coupling);

/// lambda from x exactly as written: sqrt(1 + x) - 1. Loses digits for small x; kept for comparison.
[[nodiscard]] double lambda_from_coupling_literal(double coupling);

/// psi in the form (lambda + 1)[1 - (lambda + 1)^-2].
[[nodiscard]] double psi_factor_literal(double lambda);

} // namespace ptosc
