#include "options.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "ptosc/cli.hpp"

namespace ptosc::cli {

ParseOutcome parse_arguments(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Energy and pressure spectra of the confined Poschl-Teller oscillator", "ptosc"};
    app.set_config("--config", "", "Key-value file mirroring the long flags (flags win)");
    app.require_subcommand(1);

    auto& p = cfg.parameters;
    app.add_option("--mass", p.mass, "Particle mass")->capture_default_str();
    auto* wellDepth = app.add_option("--well-depth", p.wellDepth, "Potential intensity V0");
    auto* halfWidth = app.add_option("--half-width", p.halfWidth, "Confinement half-width L");
    app.add_option("--hbar", p.actionQuantum, "Quantum of action")->capture_default_str();
    app.add_option("--n-max", cfg.nMax, "Highest quantum number (spectrum, compare)")->capture_default_str();
    app.add_option("--n", cfg.n, "Quantum number followed by sweep")->capture_default_str();

    std::string format = "csv";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", cfg.outputPath, "Write to PATH instead of standard output");

    app.add_option("--sweep-var", cfg.sweepVar, "Swept parameter")
        ->check(CLI::IsMember({"half-width", "well-depth"}));
    app.add_option("--from", cfg.from, "Sweep start");
    app.add_option("--to", cfg.to, "Sweep end");
    app.add_option("--steps", cfg.steps, "Number of sweep points");

    app.add_option("--method", cfg.method, "Approximation to compare")
        ->check(CLI::IsMember({"fp-limit", "ho-limit", "semiclassical", "perturbation"}));
    app.add_option("--order", cfg.order, "Series order for fp-limit (1-2) or ho-limit (1-3)");

    app.add_option("--grid-n", cfg.gridN, "Interior grid points of the eigensolver")->capture_default_str();
    app.add_option("--levels", cfg.levels, "Number of lowest levels to validate")->capture_default_str();
    app.add_option("--richardson", cfg.richardson, "Richardson levels (1-3)")->capture_default_str();
    app.add_option("--tolerance", cfg.tolerance, "Relative energy tolerance")->capture_default_str();
    app.add_option("--pressure-tolerance", cfg.pressureTolerance,
                   "Relative tolerance of the closed-form pressure check")
        ->capture_default_str();
    app.add_option("--eigen-pressure-tolerance", cfg.eigenPressureTolerance,
                   "Relative tolerance of the eigenvalue-derivative pressure check")
        ->capture_default_str();

    struct Sub {
        const char* name;
        const char* help;
        Command command;
    };
    const Sub subs[] = {
        {"spectrum", "Exact energy and pressure table for n = 1..n-max", Command::Spectrum},
        {"sweep", "Level n across a range of half-width or well depth", Command::Sweep},
        {"compare", "Exact levels against a limiting or approximate spectrum", Command::Compare},
        {"validate", "Closed forms against the finite-difference eigensolver", Command::Validate},
    };
    for (const auto& s : subs) app.add_subcommand(s.name, s.help)->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return {std::nullopt, kSuccess};
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return {std::nullopt, kSuccess};
    } catch (const CLI::ParseError& e) {
        err << "ptosc: " << e.what() << "\n";
        return {std::nullopt, kUsage};
    }

    for (const auto& s : subs)
        if (app.got_subcommand(s.name)) cfg.command = s.command;
    cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    cfg.hasWellDepth = wellDepth->count() > 0;
    cfg.hasHalfWidth = halfWidth->count() > 0;

    auto usage = [&err](const std::string& message) {
        err << "ptosc: " << message << "\n";
        return ParseOutcome{std::nullopt, kUsage};
    };
    const bool sweeping = cfg.command == Command::Sweep;
    if (!cfg.hasHalfWidth && !(sweeping && cfg.sweepVar == "half-width"))
        return usage("--half-width is required");
    if (!cfg.hasWellDepth && !(sweeping && cfg.sweepVar == "well-depth"))
        return usage("--well-depth is required");
    if (sweeping && cfg.sweepVar.empty()) return usage("sweep needs --sweep-var");
    if (sweeping && cfg.steps == 0) return usage("sweep needs --steps");
    if (cfg.command == Command::Compare && cfg.method.empty()) return usage("compare needs --method");

    return {std::move(cfg), kSuccess};
}

} // namespace ptosc::cli
