#include "ptosc/parameters.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ptosc/errors.hpp"

namespace ptosc {

void PTParameters::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw InvalidParameter(what);
    };
    require(std::isfinite(mass) && mass > 0.0, "mass must be positive and finite");
    require(std::isfinite(wellDepth) && wellDepth >= 0.0, "well depth must be non-negative and finite");
    require(std::isfinite(halfWidth) && halfWidth > 0.0, "half-width must be positive and finite");
    require(std::isfinite(actionQuantum) && actionQuantum > 0.0, "hbar must be positive and finite");
}

double lambda_from_coupling(double coupling) {
    return coupling / (1.0 + std::sqrt(1.0 + coupling));
}

double lambda_from_coupling_literal(double coupling) {
    return std::sqrt(1.0 + coupling) - 1.0;
}

double psi_factor_literal(double lambda) {
    const double q = lambda + 1.0;
    return q * (1.0 - 1.0 / (q * q));
}

DerivedScales derive_scales(const PTParameters& params) {
    params.validate();

    DerivedScales s;
    s.alpha = std::numbers::pi / (2.0 * params.halfWidth);
    const double hbarAlpha = params.actionQuantum * s.alpha;
    s.kineticScale = hbarAlpha * hbarAlpha / (2.0 * params.mass);
    if (!(s.kineticScale > 0.0) || !std::isfinite(s.kineticScale))
        throw InvalidParameter("kinetic scale underflows or overflows for these parameters");

    s.coupling = 4.0 * params.wellDepth / s.kineticScale;
    if (!std::isfinite(s.coupling))
        throw InvalidParameter("well depth to kinetic scale ratio overflows");

    s.zetaSquared = params.wellDepth > 0.0
                        ? s.kineticScale / (std::numbers::pi * std::numbers::pi * params.wellDepth)
                        : std::numeric_limits<double>::infinity();
    s.lambdaExact = lambda_from_coupling(s.coupling);
    s.oscillatorQuantum = s.kineticScale * s.lambdaExact;
    s.psiFactor = s.lambdaExact * (s.lambdaExact + 2.0) / (s.lambdaExact + 1.0);
    s.nCritical = s.lambdaExact > 0.0 ? 1.0 / s.lambdaExact : std::numeric_limits<double>::infinity();
    return s;
}

} // namespace ptosc
