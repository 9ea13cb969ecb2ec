#include "ptosc/semiclassical.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "ptosc/errors.hpp"

namespace ptosc {

namespace {

void require_positive_energy(double energy) {
    if (!(energy > 0.0) || !std::isfinite(energy))
        throw InvalidParameter("energy must be positive and finite");
}

void require_level(long n) {
    if (n < 1) throw InvalidParameter("quantum number must be >= 1, got " + std::to_string(n));
}

} // namespace

double classical_momentum(const PTParameters& params, double x, double energy) {
    const DerivedScales s = derive_scales(params);
    require_positive_energy(energy);
    if (!(std::abs(x) < params.halfWidth)) throw DomainError("|x| must be below the half-width");

    const double t = std::tan(s.alpha * x);
    const double potential = params.wellDepth * t * t;
    double kinetic = energy - potential;
    if (kinetic < 0.0) {
        // Rounding at the turning point itself is not a forbidden region.
        if (-kinetic > 1e-12 * energy) throw DomainError("classically forbidden: E < V(x)");
        kinetic = 0.0;
    }
    return std::sqrt(2.0 * params.mass * kinetic);
}

double turning_point(const PTParameters& params, double energy) {
    const DerivedScales s = derive_scales(params);
    require_positive_energy(energy);
    if (params.wellDepth == 0.0) return params.halfWidth;
    return std::atan(std::sqrt(energy / params.wellDepth)) / s.alpha;
}

double action_closed(const PTParameters& params, double energy) {
    const DerivedScales s = derive_scales(params);
    require_positive_energy(energy);
    const double v0 = params.wellDepth;
    // sqrt(E + V0) - sqrt(V0), rationalized.
    const double rootGap = energy / (std::sqrt(energy + v0) + std::sqrt(v0));
    return 2.0 * std::numbers::pi / s.alpha * std::sqrt(2.0 * params.mass) * rootGap;
}

ActionEvaluation action(const PTParameters& params, double energy) {
    const DerivedScales s = derive_scales(params);
    require_positive_energy(energy);

    ActionEvaluation out;
    out.energy = energy;
    out.turningPoint = turning_point(params, energy);
    const double twoM = 2.0 * params.mass;

    if (params.wellDepth == 0.0) {
        out.action = 4.0 * params.halfWidth * std::sqrt(twoM * energy);
        out.quadratureError = 0.0;
        return out;
    }

    // x = x0 sin(theta) turns the sqrt(x0 - x) endpoint into a smooth zero. In y = alpha x,
    // E - V0 tan^2 y = V0 sin(y0 - y) (tan y0 + tan y) / (cos y0 cos y), free of cancellation.
    const double v0 = params.wellDepth;
    const double y0 = s.alpha * out.turningPoint;
    const double tanY0 = std::sqrt(energy / v0);
    const double cosY0 = std::sqrt(v0 / (v0 + energy));

    auto integrand = [&](double theta) {
        const double sinT = std::sin(theta);
        const double cosT = std::cos(theta);
        const double y = y0 * sinT;
        const double gap = y0 * cosT * cosT / (1.0 + sinT);  // y0 - y
        const double kinetic =
            v0 * std::sin(gap) * (tanY0 + std::tan(y)) / (cosY0 * std::cos(y));
        return std::sqrt(twoM * std::max(kinetic, 0.0)) * cosT;
    };

    double error = 0.0;
    const double half = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(
        integrand, 0.0, std::numbers::pi / 2.0, 20, 1e-14, &error);

    const double scale = 4.0 * out.turningPoint;
    out.action = scale * half;
    out.quadratureError = scale * error;
    if (!std::isfinite(out.action) || out.quadratureError > kActionRelativeTolerance * out.action)
        throw ConvergenceError("action quadrature did not reach tolerance at E = " + std::to_string(energy));
    return out;
}

double qc_energy_closed(const PTParameters& params, long n) {
    require_level(n);
    const DerivedScales s = derive_scales(params);
    const double k = static_cast<double>(n) - 0.5;
    return s.kineticScale * k * k + 2.0 * std::sqrt(params.wellDepth * s.kineticScale) * k;
}

double qc_energy_numeric(const PTParameters& params, long n) {
    require_level(n);
    const double target = 2.0 * std::numbers::pi * params.actionQuantum * (static_cast<double>(n) - 0.5);
    const double guess = qc_energy_closed(params, n);

    auto residual = [&](double e) { return action(params, e).action - target; };

    double lo = 0.5 * guess;
    double hi = 1.5 * guess;
    double fLo = residual(lo);
    double fHi = residual(hi);
    if (!(fLo < 0.0 && fHi > 0.0))
        throw ConvergenceError("Bohr-Sommerfeld root not bracketed for n = " + std::to_string(n));

    std::uintmax_t iterations = 200;
    const auto bracket = boost::math::tools::toms748_solve(
        residual, lo, hi, fLo, fHi, boost::math::tools::eps_tolerance<double>(50), iterations);
    if (iterations >= 200) throw ConvergenceError("Bohr-Sommerfeld root finding did not converge");
    return 0.5 * (bracket.first + bracket.second);
}

} // namespace ptosc
