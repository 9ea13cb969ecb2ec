#include "ptosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ptosc/errors.hpp"
#include "ptosc/spectra.hpp"

namespace ptosc {

void GridSpec::validate() const {
    if (interiorPoints < kMinInteriorPoints)
        throw InvalidParameter("grid needs at least " + std::to_string(kMinInteriorPoints) +
                               " interior points, got " + std::to_string(interiorPoints));
    if (richardsonLevels < 1 || richardsonLevels > 3)
        throw InvalidParameter("Richardson levels must be 1, 2 or 3");
    if (levelCount < 1) throw InvalidParameter("level count must be >= 1");
    if (levelCount > interiorPoints) throw InvalidParameter("more levels requested than grid points");
}

namespace {

// Sturm recurrence and bisection are carried in extended precision: the low eigenvalues of the
// finite-difference Laplacian are small differences of entries of order 1/h^2.
using Wide = long double;

template <typename Real>
long sturm_count_impl(std::span<const Real> diag, Wide offDiag, Wide shift) {
    const Wide e2 = offDiag * offDiag;
    const Wide tiny = std::numeric_limits<Wide>::min() / std::numeric_limits<Wide>::epsilon();
    long count = 0;
    Wide q = 1.0L;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        q = (static_cast<Wide>(diag[i]) - shift) - (i == 0 ? 0.0L : e2 / q);
        if (q == 0.0L) q = -tiny;
        if (q < 0.0L) ++count;
    }
    return count;
}

template <typename Real>
std::vector<double> lowest_eigenvalues_impl(std::span<const Real> diag, Wide offDiag, int count) {
    if (count < 1 || static_cast<std::size_t>(count) > diag.size())
        throw InvalidParameter("eigenvalue count out of range");

    // Gershgorin enclosure of the whole spectrum.
    Wide lower = std::numeric_limits<Wide>::infinity();
    Wide upper = -std::numeric_limits<Wide>::infinity();
    const Wide radius = 2.0L * std::abs(offDiag);
    for (Real d : diag) {
        lower = std::min(lower, static_cast<Wide>(d) - radius);
        upper = std::max(upper, static_cast<Wide>(d) + radius);
    }

    constexpr int kMaxIterations = 400;
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(count));
    Wide floor = lower;
    for (int j = 0; j < count; ++j) {
        // Smallest shift with more than j eigenvalues below it.
        Wide lo = floor;
        Wide hi = upper;
        int it = 0;
        for (; it < kMaxIterations; ++it) {
            const Wide mid = 0.5L * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (sturm_count_impl(diag, offDiag, mid) > j)
                hi = mid;
            else
                lo = mid;
        }
        if (it == kMaxIterations) throw ConvergenceError("Sturm bisection did not converge");
        values.push_back(static_cast<double>(0.5L * (lo + hi)));
        floor = lo;
    }
    return values;
}

} // namespace

long sturm_count(std::span<const double> diag, double offDiag, double shift) {
    return sturm_count_impl(diag, offDiag, shift);
}

std::vector<double> tridiagonal_lowest_eigenvalues(std::span<const double> diag, double offDiag,
                                                   int count) {
    return lowest_eigenvalues_impl(diag, offDiag, count);
}

std::vector<double> finite_difference_eigenvalues(const PTParameters& params, long interiorPoints,
                                                  int count) {
    params.validate();
    if (interiorPoints < kMinInteriorPoints)
        throw InvalidParameter("grid needs at least " + std::to_string(kMinInteriorPoints) + " points");
    if (interiorPoints > kMaxInteriorPoints)
        throw ResourceError("grid of " + std::to_string(interiorPoints) + " points exceeds the maximum " +
                            std::to_string(kMaxInteriorPoints));

    const Wide L = params.halfWidth;
    const Wide h = 2.0L * L / static_cast<Wide>(interiorPoints + 1);
    const Wide hbar = params.actionQuantum;
    const Wide kinetic = hbar * hbar / (static_cast<Wide>(params.mass) * h * h);

    // Nodes are placed by index from the nearer wall so near-wall tan^2 keeps full precision.
    std::vector<Wide> diag(static_cast<std::size_t>(interiorPoints));
    const Wide angularStep = std::numbers::pi_v<Wide> / static_cast<Wide>(interiorPoints + 1);
    for (long i = 0; i < interiorPoints; ++i) {
        const long fromWall = std::min(i + 1, interiorPoints - i);
        // alpha x = +-(pi/2 - fromWall * alpha h), so tan^2(alpha x) = cot^2(fromWall * alpha h).
        const Wide t = 1.0L / std::tan(static_cast<Wide>(fromWall) * angularStep);
        diag[static_cast<std::size_t>(i)] = kinetic + static_cast<Wide>(params.wellDepth) * t * t;
    }
    return lowest_eigenvalues_impl(std::span<const Wide>(diag), -0.5L * kinetic, count);
}

std::vector<double> richardson_exponents(const PTParameters& params, int count) {
    params.validate();
    // The first pass always removes h^2; later passes take the next terms in size order.
    std::vector<double> later = {4.0, 6.0};
    if (params.wellDepth > 0.0) {
        // Near a wall psi ~ d^s with s (s - 1) = V0 / T, which leaves an h^(2s - 1) term.
        const double wall = std::sqrt(1.0 + derive_scales(params).coupling);
        for (double w : {wall, wall + 2.0}) {
            const bool even = std::abs(w - 2.0 * std::round(0.5 * w)) < 0.05;
            if (!even) later.push_back(w);
        }
    }
    std::sort(later.begin(), later.end());
    std::vector<double> exponents = {2.0};
    exponents.insert(exponents.end(), later.begin(), later.end());
    exponents.resize(static_cast<std::size_t>(std::max(count, 0)));
    return exponents;
}

NumericalSpectrum solve_eigenvalues(const PTParameters& params, const GridSpec& grid) {
    grid.validate();
    params.validate();

    // One extra grid beyond the requested levels feeds the error estimate.
    const int grids = std::max(grid.richardsonLevels, 2);
    const long finest = (grid.interiorPoints + 1) * (1L << (grids - 1)) - 1;
    if (finest > kMaxInteriorPoints)
        throw ResourceError("Richardson grid of " + std::to_string(finest) +
                            " points exceeds the maximum " + std::to_string(kMaxInteriorPoints));

    const auto k = static_cast<std::size_t>(grid.levelCount);
    const std::vector<double> exponents = richardson_exponents(params, grids - 1);
    // table[g][r]: r-th Richardson column on grid g.
    std::vector<std::vector<std::vector<double>>> table(static_cast<std::size_t>(grids));
    for (int g = 0; g < grids; ++g) {
        const long points = (grid.interiorPoints + 1) * (1L << g) - 1;
        auto& row = table[static_cast<std::size_t>(g)];
        row.push_back(finite_difference_eigenvalues(params, points, grid.levelCount));
        for (int r = 1; r <= g; ++r) {
            const double factor = std::pow(2.0, exponents[static_cast<std::size_t>(r - 1)]) - 1.0;
            const auto& fine = row[static_cast<std::size_t>(r - 1)];
            const auto& coarse = table[static_cast<std::size_t>(g - 1)][static_cast<std::size_t>(r - 1)];
            std::vector<double> col(k);
            for (std::size_t j = 0; j < k; ++j) col[j] = fine[j] + (fine[j] - coarse[j]) / factor;
            row.push_back(std::move(col));
        }
    }

    NumericalSpectrum out;
    out.gridUsed = grid;
    out.eigenvalues.resize(k);
    out.errorEstimates.resize(k);
    const int used = grid.richardsonLevels - 1;
    const auto& best = table[static_cast<std::size_t>(used)][static_cast<std::size_t>(used)];
    for (std::size_t j = 0; j < k; ++j) {
        out.eigenvalues[j] = best[j];
        if (grid.richardsonLevels == 1) {
            out.errorEstimates[j] = std::abs(table[1][1][j] - best[j]);
        } else {
            const auto& previous = table[static_cast<std::size_t>(used)][static_cast<std::size_t>(used - 1)];
            out.errorEstimates[j] = std::abs(best[j] - previous[j]);
        }
    }

    for (std::size_t j = 0; j < k; ++j) {
        if (!(out.eigenvalues[j] > 0.0))
            throw ConvergenceError("non-positive eigenvalue at level " + std::to_string(j + 1));
        if (j > 0 && !(out.eigenvalues[j] > out.eigenvalues[j - 1]))
            throw ConvergenceError("eigenvalues are not simple at level " + std::to_string(j + 1));
    }
    return out;
}

std::vector<double> numerical_pressure_levels(const PTParameters& params, int count, double relativeStep,
                                              EnergySource source, const GridSpec& grid) {
    params.validate();
    if (count < 1) throw InvalidParameter("quantum number must be >= 1");
    if (!(relativeStep >= 1e-7 && relativeStep <= 1e-2))
        throw InvalidParameter("relative step must lie in [1e-7, 1e-2]");

    GridSpec g = grid;
    g.levelCount = std::max(g.levelCount, count);
    const auto k = static_cast<std::size_t>(count);

    auto energies = [&](double L) {
        const PTParameters p = params.withHalfWidth(L);
        if (source == EnergySource::Eigenvalues) {
            auto values = solve_eigenvalues(p, g).eigenvalues;
            values.resize(k);
            return values;
        }
        const DerivedScales s = derive_scales(p);
        std::vector<double> values(k);
        for (std::size_t j = 0; j < k; ++j) values[j] = energy_level(s, static_cast<long>(j + 1)).total;
        return values;
    };

    const double L = params.halfWidth;
    auto central = [&](double delta) {
        const auto up = energies(L * (1.0 + delta));
        const auto down = energies(L * (1.0 - delta));
        std::vector<double> d(k);
        for (std::size_t j = 0; j < k; ++j) d[j] = -(up[j] - down[j]) / (2.0 * L * delta);
        return d;
    };
    const auto coarse = central(relativeStep);
    const auto fine = central(0.5 * relativeStep);
    std::vector<double> out(k);
    for (std::size_t j = 0; j < k; ++j) out[j] = fine[j] + (fine[j] - coarse[j]) / 3.0;
    return out;
}

double numerical_pressure(const PTParameters& params, long n, double relativeStep, EnergySource source,
                          const GridSpec& grid) {
    if (n < 1) throw InvalidParameter("quantum number must be >= 1");
    if (source == EnergySource::ClosedForm) {
        params.validate();
        if (!(relativeStep >= 1e-7 && relativeStep <= 1e-2))
            throw InvalidParameter("relative step must lie in [1e-7, 1e-2]");
        const double L = params.halfWidth;
        auto energy = [&](double width) { return energy_level(params.withHalfWidth(width), n).total; };
        auto central = [&](double delta) {
            return -(energy(L * (1.0 + delta)) - energy(L * (1.0 - delta))) / (2.0 * L * delta);
        };
        const double coarse = central(relativeStep);
        const double fine = central(0.5 * relativeStep);
        return fine + (fine - coarse) / 3.0;
    }
    return numerical_pressure_levels(params, static_cast<int>(n), relativeStep, source, grid).back();
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw InvalidParameter("slope needs >= 2 paired points");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const auto m = static_cast<double>(x.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

ConvergenceReport convergence_study(const PTParameters& params, std::span<const long> gridSizes,
                                    int levels) {
    if (gridSizes.size() < 2) throw InvalidParameter("convergence study needs at least two grid sizes");
    for (long size : gridSizes)
        if (size < kMinInteriorPoints)
            throw InvalidParameter("grid sizes must be >= " + std::to_string(kMinInteriorPoints));
    if (levels < 1) throw InvalidParameter("level count must be >= 1");

    const DerivedScales s = derive_scales(params);
    ConvergenceReport report;
    report.gridSizes.assign(gridSizes.begin(), gridSizes.end());
    report.errors.assign(static_cast<std::size_t>(levels), {});
    for (long size : gridSizes) {
        report.spacings.push_back(2.0 * params.halfWidth / static_cast<double>(size + 1));
        const auto values = finite_difference_eigenvalues(params, size, levels);
        for (int j = 0; j < levels; ++j) {
            const double exact = energy_level(s, j + 1).total;
            report.errors[static_cast<std::size_t>(j)].push_back(
                std::abs(values[static_cast<std::size_t>(j)] - exact));
        }
    }
    for (const auto& errs : report.errors) report.slopes.push_back(log_log_slope(report.spacings, errs));
    return report;
}

} // namespace ptosc
