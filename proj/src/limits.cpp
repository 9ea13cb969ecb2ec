#include "ptosc/limits.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ptosc/errors.hpp"
#include "ptosc/spectra.hpp"

namespace ptosc {

namespace {

double depth_ratio(const PTParameters& params, const DerivedScales& s) {
    return params.wellDepth / s.kineticScale;
}

void require_fp_domain(const PTParameters& params, const DerivedScales& s) {
    if (!(depth_ratio(params, s) < kFPMaxDepthRatio))
        throw DomainError("FP-limit expansion needs V0/T < 0.25, got V0/T = " +
                          std::to_string(depth_ratio(params, s)));
}

void require_ho_domain(const PTParameters& params, const DerivedScales& s) {
    if (!(depth_ratio(params, s) > kHOMinDepthRatio))
        throw DomainError("HO-limit expansion needs V0/T > 4, got V0/T = " +
                          std::to_string(depth_ratio(params, s)));
}

} // namespace

ApproximationReport make_report(double exact, double approx, std::string expectedOrder) {
    ApproximationReport r;
    r.exact = exact;
    r.approx = approx;
    r.absoluteError = std::abs(exact - approx);
    r.relativeError = exact != 0.0 ? r.absoluteError / std::abs(exact) : r.absoluteError;
    r.expectedOrder = std::move(expectedOrder);
    return r;
}

double lambda_tilde(const DerivedScales& s) { return std::sqrt(s.coupling); }

LimitExpansion fp_limit_expansion(const PTParameters& params, int order, long n) {
    const DerivedScales s = derive_scales(params);
    require_fp_domain(params, s);
    if (order < 1 || order > 2) throw DomainError("FP-limit order must be 1 or 2");
    if (n < 1) throw InvalidParameter("quantum number must be >= 1");

    const double x = s.coupling;
    LimitExpansion e;
    e.regime = LimitRegime::FP;
    e.orderKept = order;
    e.n = n;
    e.lambdaApprox = order == 1 ? 0.5 * x : 0.5 * x * (1.0 - 0.25 * x);
    e.oscillatorQuantumApprox = s.kineticScale * e.lambdaApprox;
    const auto nd = static_cast<double>(n);
    e.energyApprox = s.kineticScale * nd * nd + e.oscillatorQuantumApprox * (nd - 0.5);
    return e;
}

LimitExpansion ho_limit_expansion(const PTParameters& params, int order, long n) {
    const DerivedScales s = derive_scales(params);
    require_ho_domain(params, s);
    if (order < 1 || order > 3) throw DomainError("HO-limit order must be 1, 2 or 3");
    if (n < 1) throw InvalidParameter("quantum number must be >= 1");

    const double lt = lambda_tilde(s);
    LimitExpansion e;
    e.regime = LimitRegime::HO;
    e.orderKept = order;
    e.n = n;
    switch (order) {
        case 1: e.lambdaApprox = lt; break;
        case 2: e.lambdaApprox = lt - 1.0; break;
        default: e.lambdaApprox = lt - 1.0 + 0.5 / lt; break;
    }
    e.oscillatorQuantumApprox = s.kineticScale * e.lambdaApprox;
    const auto nd = static_cast<double>(n);
    e.energyApprox = e.oscillatorQuantumApprox * (nd - 0.5);
    if (order > 1) e.energyApprox += s.kineticScale * nd * nd;
    return e;
}

ApproximationReport limit_equation_of_state(const PTParameters& params, long n, LimitRegime regime) {
    const DerivedScales s = derive_scales(params);
    if (regime == LimitRegime::FP) {
        require_fp_domain(params, s);
        return make_report(effective_exponent(params, n), 2.0, "O(4V0/T)");
    }
    require_ho_domain(params, s);
    return make_report(effective_exponent(params, n), 1.0, "O(T/hbar_omega_tilde)");
}

ApproximationReport limit_energy_report(const PTParameters& params, long n, LimitRegime regime,
                                        int order) {
    static const char* const fpOrders[] = {"", "O((4V0/T)^2)", "O((4V0/T)^3)"};
    static const char* const hoOrders[] = {"", "O(alpha^2)", "O(alpha^3)", "O(alpha^5)"};
    const double exact = energy_level(params, n).total;
    if (regime == LimitRegime::FP) {
        const LimitExpansion e = fp_limit_expansion(params, order, n);
        return make_report(exact, e.energyApprox, fpOrders[order]);
    }
    const LimitExpansion e = ho_limit_expansion(params, order, n);
    return make_report(exact, e.energyApprox, hoOrders[order]);
}

} // namespace ptosc
