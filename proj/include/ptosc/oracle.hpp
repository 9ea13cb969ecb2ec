#pragma once

#include <span>
#include <vector>

#include "ptosc/parameters.hpp"

namespace ptosc {

/// Discretization controls for the finite-difference eigensolver.
///
/// The grid is uniform on (-L, L) with both walls excluded, spacing h = 2L / (N + 1).
/// Richardson level r uses grids N, 2N + 1, 4N + 3, ... (each halving h) and removes the
/// h^2, h^4, ... error terms in turn.
struct GridSpec {
    long interiorPoints = 4000;
    int richardsonLevels = 2;
    int levelCount = 5;

    void validate() const;
    [[nodiscard]] double spacing(double halfWidth) const {
        return 2.0 * halfWidth / static_cast<double>(interiorPoints + 1);
    }
};

inline constexpr long kMinInteriorPoints = 64;
inline constexpr long kMaxInteriorPoints = 1L << 23;

struct NumericalSpectrum {
    std::vector<double> eigenvalues;     ///< ascending
    std::vector<double> errorEstimates;  ///< absolute, per level
    GridSpec gridUsed;
};

/// Lowest eigenvalues of the symmetric tridiagonal matrix with diagonal `diag` and constant
/// off-diagonal `offDiag`, by Sturm-sequence bisection.
[[nodiscard]] std::vector<double> tridiagonal_lowest_eigenvalues(std::span<const double> diag,
                                                                 double offDiag, int count);

/// Number of eigenvalues strictly below `shift` (Sturm count).
[[nodiscard]] long sturm_count(std::span<const double> diag, double offDiag, double shift);

/// Raw second-order finite-difference eigenvalues on a single grid of `interiorPoints` nodes.
[[nodiscard]] std::vector<double> finite_difference_eigenvalues(const PTParameters& params,
                                                                long interiorPoints, int count);

/// Error exponents removed by successive Richardson passes, first `count` of them. The first pass
/// removes h^2. Later passes take 4, 6 and the wall exponents sqrt(1 + 4 V0 / T) and that plus 2,
/// in increasing order. Wall terms that land on an even power are dropped.
[[nodiscard]] std::vector<double> richardson_exponents(const PTParameters& params, int count);

/// Throws ResourceError when the finest Richardson grid exceeds kMaxInteriorPoints and
/// ConvergenceError when bisection fails or the levels are not simple and positive.
[[nodiscard]] NumericalSpectrum solve_eigenvalues(const PTParameters& params, const GridSpec& grid);

enum class EnergySource { ClosedForm, Eigenvalues };

inline constexpr double kDefaultRelativeStep = 1e-4;

/// -dE_n/dL by central differences at L(1 +- delta), with one Richardson pass over delta, delta/2.
///
/// EnergySource::Eigenvalues differentiates solve_eigenvalues(params, grid) instead of the
/// closed-form level; grid.levelCount is raised to n if needed.
[[nodiscard]] double numerical_pressure(const PTParameters& params, long n,
                                        double relativeStep = kDefaultRelativeStep,
                                        EnergySource source = EnergySource::ClosedForm,
                                        const GridSpec& grid = {});

/// numerical_pressure for n = 1..count, sharing the four shifted energy evaluations.
[[nodiscard]] std::vector<double> numerical_pressure_levels(const PTParameters& params, int count,
                                                            double relativeStep = kDefaultRelativeStep,
                                                            EnergySource source = EnergySource::ClosedForm,
                                                            const GridSpec& grid = {});

struct ConvergenceReport {
    std::vector<long> gridSizes;
    std::vector<double> spacings;
    std::vector<std::vector<double>> errors;  ///< errors[level][grid], |E_numeric - E_closed|
    std::vector<double> slopes;               ///< least-squares d log(error) / d log(h), per level
};

/// Needs at least two grid sizes, each >= kMinInteriorPoints.
[[nodiscard]] ConvergenceReport convergence_study(const PTParameters& params,
                                                  std::span<const long> gridSizes, int levels);

/// Least-squares slope of log(y) against log(x).
[[nodiscard]] double log_log_slope(std::span<const double> x, std::span<const double> y);

} // namespace ptosc
