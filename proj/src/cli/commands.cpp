#include <cmath>
#include <fstream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "options.hpp"
#include "output.hpp"
#include "ptosc/cli.hpp"
#include "ptosc/errors.hpp"
#include "ptosc/limits.hpp"
#include "ptosc/oracle.hpp"
#include "ptosc/perturbation.hpp"
#include "ptosc/semiclassical.hpp"
#include "ptosc/spectra.hpp"

namespace ptosc::cli {

namespace {

using nlohmann::json;

struct CommandResult {
    std::string text;
    int status = kSuccess;
    std::string diagnostic;
};

CommandResult emit(std::string text) { return {std::move(text), kSuccess, {}}; }

json scales_json(const DerivedScales& s) {
    return {{"alpha", s.alpha},          {"T", s.kineticScale},   {"zeta2", s.zetaSquared},
            {"lambda", s.lambdaExact},   {"hbar_omega", s.oscillatorQuantum},
            {"psi", s.psiFactor},        {"n_cr", s.nCritical}};
}

CommandResult cmd_spectrum(const RunConfig& cfg) {
    const SpectrumTable table = spectrum_table(cfg.parameters, cfg.nMax);
    if (cfg.format == OutputFormat::Json) {
        json rows = json::array();
        for (const auto& r : table.rows)
            rows.push_back({{"n", r.n},
                            {"E_fp", r.energyFP},
                            {"E_ho", r.energyHO},
                            {"E_total", r.energyTotal},
                            {"P_fp", r.pressureFP},
                            {"P_ho", r.pressureHO},
                            {"P_total", r.pressureTotal},
                            {"eta", r.regimeRatio},
                            {"eta_approx", r.approximateRatio},
                            {"regime", std::string(to_string(r.regimeLabel))}});
        return emit(to_canonical_json({{"scales", scales_json(table.scales)}, {"rows", rows}}));
    }
    CsvTable csv({"n", "E_fp", "E_ho", "E_total", "P_fp", "P_ho", "P_total", "eta", "regime"});
    for (const auto& r : table.rows) {
        CsvTable::Row row;
        row.add(r.n)
            .add(r.energyFP)
            .add(r.energyHO)
            .add(r.energyTotal)
            .add(r.pressureFP)
            .add(r.pressureHO)
            .add(r.pressureTotal)
            .add(r.regimeRatio)
            .add(to_string(r.regimeLabel));
        csv.push(std::move(row));
    }
    return emit(csv.str());
}

CommandResult cmd_sweep(const RunConfig& cfg) {
    if (cfg.steps < 2) throw InvalidParameter("sweep needs --steps >= 2");
    if (!(cfg.from < cfg.to)) throw InvalidParameter("sweep needs --from < --to");
    if (cfg.n < 1) throw InvalidParameter("quantum number must be >= 1");

    const bool overWidth = cfg.sweepVar == "half-width";
    CsvTable csv({"param_value", "lambda", "hbar_omega", "E_n", "P_n", "s_eff", "n_cr"});
    json rows = json::array();
    for (long i = 0; i < cfg.steps; ++i) {
        const double value = i == cfg.steps - 1
                                 ? cfg.to
                                 : cfg.from + (cfg.to - cfg.from) * static_cast<double>(i) /
                                                  static_cast<double>(cfg.steps - 1);
        const PTParameters p =
            overWidth ? cfg.parameters.withHalfWidth(value) : cfg.parameters.withWellDepth(value);
        const DerivedScales s = derive_scales(p);
        const double energy = energy_level(s, cfg.n).total;
        const double pressure = pressure_level(s, p.halfWidth, cfg.n).total;
        const double sEff = effective_exponent(p, cfg.n);
        if (cfg.format == OutputFormat::Json) {
            rows.push_back({{"param_value", value},
                            {"lambda", s.lambdaExact},
                            {"hbar_omega", s.oscillatorQuantum},
                            {"E_n", energy},
                            {"P_n", pressure},
                            {"s_eff", sEff},
                            {"n_cr", s.nCritical}});
        } else {
            CsvTable::Row row;
            row.add(value).add(s.lambdaExact).add(s.oscillatorQuantum).add(energy).add(pressure).add(sEff).add(
                s.nCritical);
            csv.push(std::move(row));
        }
    }
    if (cfg.format == OutputFormat::Json)
        return emit(to_canonical_json({{"sweep_var", cfg.sweepVar}, {"n", cfg.n}, {"rows", rows}}));
    return emit(csv.str());
}

CommandResult cmd_compare(const RunConfig& cfg) {
    if (cfg.nMax < 1) throw InvalidParameter("n-max must be >= 1");
    const bool semiclassical = cfg.method == "semiclassical";

    std::vector<std::string> header = {"n", "E_exact", "E_approx", "abs_err", "rel_err"};
    if (semiclassical) header.emplace_back("E_qc_numeric");
    CsvTable csv(header);
    json rows = json::array();

    for (long n = 1; n <= cfg.nMax; ++n) {
        ApproximationReport report;
        double numeric = 0.0;
        if (cfg.method == "fp-limit") {
            report = limit_energy_report(cfg.parameters, n, LimitRegime::FP, cfg.order ? cfg.order : 2);
        } else if (cfg.method == "ho-limit") {
            report = limit_energy_report(cfg.parameters, n, LimitRegime::HO, cfg.order ? cfg.order : 3);
        } else if (semiclassical) {
            report = make_report(energy_level(cfg.parameters, n).total, qc_energy_closed(cfg.parameters, n),
                                 "O(T n)");
            numeric = qc_energy_numeric(cfg.parameters, n);
        } else {
            report = make_report(energy_level(cfg.parameters, n).total,
                                 perturbed_energy(cfg.parameters, n).total, "O(T^2/hbar_omega_tilde)");
        }

        if (cfg.format == OutputFormat::Json) {
            json row = {{"n", n},
                        {"E_exact", report.exact},
                        {"E_approx", report.approx},
                        {"abs_err", report.absoluteError},
                        {"rel_err", report.relativeError}};
            if (semiclassical) row["E_qc_numeric"] = numeric;
            rows.push_back(std::move(row));
        } else {
            CsvTable::Row row;
            row.add(n).add(report.exact).add(report.approx).add(report.absoluteError).add(report.relativeError);
            if (semiclassical) row.add(numeric);
            csv.push(std::move(row));
        }
    }
    if (cfg.format == OutputFormat::Json)
        return emit(to_canonical_json({{"method", cfg.method}, {"rows", rows}}));
    return emit(csv.str());
}

CommandResult cmd_validate(const RunConfig& cfg) {
    GridSpec grid;
    grid.interiorPoints = cfg.gridN;
    grid.richardsonLevels = cfg.richardson;
    grid.levelCount = cfg.levels;
    grid.validate();

    const NumericalSpectrum numeric = solve_eigenvalues(cfg.parameters, grid);
    const DerivedScales s = derive_scales(cfg.parameters);
    const auto fdPressure =
        numerical_pressure_levels(cfg.parameters, cfg.levels, kDefaultRelativeStep, EnergySource::ClosedForm);
    const auto eigenPressure =
        numerical_pressure_levels(cfg.parameters, cfg.levels, kDefaultRelativeStep, EnergySource::Eigenvalues, grid);

    auto relative = [](double exact, double approx) {
        return exact != 0.0 ? std::abs(approx - exact) / std::abs(exact) : std::abs(approx - exact);
    };

    CsvTable csv({"n", "E_closed", "E_numeric", "E_rel_err", "E_err_estimate", "P_closed", "P_fd", "P_fd_rel_err",
                  "P_eigen", "P_eigen_rel_err", "pass"});
    json rows = json::array();
    bool allPassed = true;
    std::string firstBreach;
    for (int j = 0; j < cfg.levels; ++j) {
        const long n = j + 1;
        const auto idx = static_cast<std::size_t>(j);
        const double eClosed = energy_level(s, n).total;
        const double pClosed = pressure_level(s, cfg.parameters.halfWidth, n).total;
        const double eErr = relative(eClosed, numeric.eigenvalues[idx]);
        const double pErr = relative(pClosed, fdPressure[idx]);
        const double pEigenErr = relative(pClosed, eigenPressure[idx]);
        const bool pass =
            eErr <= cfg.tolerance && pErr <= cfg.pressureTolerance && pEigenErr <= cfg.eigenPressureTolerance;
        if (!pass && allPassed) firstBreach = "level " + std::to_string(n);
        allPassed = allPassed && pass;

        if (cfg.format == OutputFormat::Json) {
            rows.push_back({{"n", n},
                            {"E_closed", eClosed},
                            {"E_numeric", numeric.eigenvalues[idx]},
                            {"E_rel_err", eErr},
                            {"E_err_estimate", numeric.errorEstimates[idx]},
                            {"P_closed", pClosed},
                            {"P_fd", fdPressure[idx]},
                            {"P_fd_rel_err", pErr},
                            {"P_eigen", eigenPressure[idx]},
                            {"P_eigen_rel_err", pEigenErr},
                            {"pass", pass}});
        } else {
            CsvTable::Row row;
            row.add(n)
                .add(eClosed)
                .add(numeric.eigenvalues[idx])
                .add(eErr)
                .add(numeric.errorEstimates[idx])
                .add(pClosed)
                .add(fdPressure[idx])
                .add(pErr)
                .add(eigenPressure[idx])
                .add(pEigenErr)
                .add(pass);
            csv.push(std::move(row));
        }
    }

    CommandResult result;
    if (cfg.format == OutputFormat::Json) {
        json doc = {{"grid", {{"interior_points", grid.interiorPoints},
                              {"richardson_levels", grid.richardsonLevels},
                              {"levels", grid.levelCount}}},
                    {"tolerances", {{"energy", cfg.tolerance},
                                    {"pressure_fd", cfg.pressureTolerance},
                                    {"pressure_eigen", cfg.eigenPressureTolerance}}},
                    {"passed", allPassed},
                    {"rows", rows}};
        result.text = to_canonical_json(doc);
    } else {
        result.text = csv.str();
    }
    if (!allPassed) {
        result.status = kValidationBreach;
        result.diagnostic = "validation tolerance exceeded at " + firstBreach;
    }
    return result;
}

CommandResult dispatch(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::Spectrum: return cmd_spectrum(cfg);
        case Command::Sweep: return cmd_sweep(cfg);
        case Command::Compare: return cmd_compare(cfg);
        case Command::Validate: return cmd_validate(cfg);
    }
    return {};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const ParseOutcome parsed = parse_arguments(args, out, err);
    if (!parsed.config) return parsed.exitStatus;
    const RunConfig& cfg = *parsed.config;

    CommandResult result;
    try {
        if (cfg.command != Command::Sweep || cfg.sweepVar != "well-depth" || cfg.hasWellDepth)
            cfg.parameters.validate();
        result = dispatch(cfg);
    } catch (const InvalidParameter& e) {
        err << "ptosc: " << e.what() << "\n";
        return kDomain;
    } catch (const DomainError& e) {
        err << "ptosc: " << e.what() << "\n";
        return kDomain;
    } catch (const Error& e) {
        err << "ptosc: " << e.what() << "\n";
        return kFailure;
    }

    if (cfg.outputPath.empty()) {
        out << result.text;
    } else {
        std::ofstream file(cfg.outputPath, std::ios::binary);
        file << result.text;
        if (!file) {
            err << "ptosc: cannot write " << cfg.outputPath << "\n";
            return kFailure;
        }
    }
    if (!result.diagnostic.empty()) err << "ptosc: " << result.diagnostic << "\n";
    return result.status;
}

} // namespace ptosc::cli
