// radialis: radial calculus of the harmonic model geometries from the
// command line. Subcommands: list, eigencheck, green, ledger, classify,
// table. Exit codes: 0 success, 1 tolerance/classification failure,
// 2 usage or validation error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "radialis/io.hpp"
#include "radialis/radialis.hpp"

namespace {

using namespace radialis;

std::string fmt(double v, const char* spec = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int steps) {
    if (steps < 1 || !(lo < hi)) {
        throw ValidationError("grid needs at least 1 step and r-min < r-max");
    }
    std::vector<double> grid(steps);
    if (steps == 1) {
        grid[0] = lo;
        return grid;
    }
    for (int i = 0; i < steps; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    return grid;
}

SpaceFamily parse_family(const std::string& id) {
    const auto f = family_from_id(id);
    if (!f) {
        throw ValidationError("unknown space '" + id
                              + "' (expected euclidean|sphere|hyperbolic|chn|qhn)");
    }
    return *f;
}

// Tolerance resolution: explicit flag > RADIALIS_TOL env var > built-in default.
double resolve_tol(double builtin, const std::optional<double>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("RADIALIS_TOL")) {
        try {
            std::size_t used = 0;
            const std::string s(env);
            const double v = std::stod(s, &used);
            if (used != s.size() || !(v > 0.0)) throw std::invalid_argument("bad");
            return v;
        } catch (const std::exception&) {
            throw ValidationError(std::string("RADIALIS_TOL is not a positive number: '")
                                  + env + "'");
        }
    }
    return builtin;
}

// Default radial grid bounds for a space: clear of 0 and of the antipode.
std::pair<double, double> default_bounds(const ModelSpace& space) {
    const double hi = space.compact() ? std::min(3.0, space.r_max - 0.05) : 3.0;
    return {0.05, hi};
}

int cmd_list(std::optional<int> dim, bool as_json) {
    std::vector<ModelSpace> spaces;
    if (dim) {
        spaces = candidates_for_dimension(*dim);
    } else {
        // One representative per family, at the smallest admissible parameter.
        for (SpaceFamily f : kFamilyOrder) {
            const bool rank_one = f == SpaceFamily::ComplexHyperbolic
                               || f == SpaceFamily::QuaternionicHyperbolic;
            spaces.push_back(ModelSpace::make(f, rank_one ? 1 : 2));
        }
    }
    if (as_json) {
        std::cout << nlohmann::json(spaces).dump(2) << "\n";
        return 0;
    }
    for (const auto& s : spaces) {
        std::cout << family_id(s.family) << " n=" << s.n << " (" << s.name() << ")"
                  << " dim=" << s.dim << " spectrum=";
        for (std::size_t i = 0; i < s.spectrum.entries.size(); ++i) {
            const auto& e = s.spectrum.entries[i];
            std::cout << (i ? " " : "") << "(K=" << fmt(e.curvature)
                      << ", mult=" << e.multiplicity << ")";
        }
        std::cout << " r_max=" << (s.compact() ? "pi" : "inf")
                  << " einstein=" << fmt(s.einstein_constant) << "\n";
    }
    if (!dim) {
        std::cout << "# spectra shown at the smallest parameter; use --dim to list the"
                     " candidates of a fixed dimension\n";
    }
    return 0;
}

int cmd_eigencheck(const std::string& space_id, int n, const std::string& claim_id,
                   std::optional<double> r_min, std::optional<double> r_max, int steps,
                   std::optional<double> tol_flag, bool table, bool as_json) {
    const ModelSpace space = ModelSpace::make(parse_family(space_id), n);
    const EigenClaim claim = make_claim(space, claim_id);
    const double tol = resolve_tol(1e-9, tol_flag);
    // Grid starts at 0.2 by default: closer to the center the claims' second
    // derivatives grow like r^{-d}, and the roundoff floor |f''| eps would
    // swamp a 1e-9 gate for no mathematical reason.
    const double lo = r_min.value_or(0.2);
    const double hi = r_max.value_or(default_bounds(space).second);
    if (!(lo > 0.0) || !(hi < space.r_max)) {
        throw ValidationError("grid [" + fmt(lo) + ", " + fmt(hi)
                              + "] outside the radial domain of " + space.name());
    }
    const std::vector<double> grid = linspace(lo, hi, steps);
    const double residual = eigen_residual(claim, grid);
    const bool pass = residual <= tol;

    if (as_json) {
        nlohmann::json j{{"space", family_id(space.family)}, {"n", n},
                         {"claim", claim.id},   {"lambda", claim.lambda},
                         {"constant", claim.constant}, {"residual", residual},
                         {"tol", tol},          {"pass", pass}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << space.name() << " claim '" << claim.id << "': Delta f = "
                  << fmt(claim.lambda) << " * f"
                  << (claim.constant != 0.0 ? " + " + fmt(claim.constant) : std::string())
                  << "\n";
        if (table) {
            std::cout << "r,laplacian,expected,residual\n";
            for (double r : grid) {
                const Jet2 j = claim.f(r);
                const double lap = j.d2 + mean_curvature(space, r) * j.d1;
                const double expect = claim.lambda * j.value + claim.constant;
                std::cout << fmt(r, "%.17g") << "," << fmt(lap, "%.17g") << ","
                          << fmt(expect, "%.17g") << "," << fmt(lap - expect, "%.17g") << "\n";
            }
        }
        std::cout << "max residual " << fmt(residual) << " over " << grid.size()
                  << " radii in [" << fmt(lo) << ", " << fmt(hi) << "], tol " << fmt(tol)
                  << ": " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int cmd_green(const std::string& space_id, int n, std::optional<double> r_min,
              std::optional<double> r_max, int steps, std::optional<double> tol_flag,
              bool table, bool as_json) {
    const ModelSpace space = ModelSpace::make(parse_family(space_id), n);
    const double tol = resolve_tol(1e-10, tol_flag);
    const double flux_tol = 1e-12;
    const auto [lo_def, hi_def] = default_bounds(space);
    const std::vector<double> grid = linspace(r_min.value_or(lo_def),
                                              r_max.value_or(hi_def), steps);
    // At small radii in high dimension G'' grows like r^{1-d}, so the
    // meaningful gate is the residual relative to the terms that cancel;
    // the absolute residual is reported alongside.
    const auto scaled_residual = [&space](double r) {
        const Jet2 gp = green_derivative_jet(space, r);
        const double advection = mean_curvature(space, r) * gp.value;
        const double scale = std::max({1.0, std::abs(gp.d1), std::abs(advection)});
        return std::abs(gp.d1 + advection) / scale;
    };
    double worst_flux = 0.0, worst_harm = 0.0, worst_scaled = 0.0;
    for (double r : grid) {
        worst_flux = std::max(worst_flux, std::abs(flux(space, r) - 1.0));
        worst_harm = std::max(worst_harm, green_harmonicity_residual(space, r));
        worst_scaled = std::max(worst_scaled, scaled_residual(r));
    }
    const bool pass = worst_flux <= flux_tol && worst_scaled <= tol;
    if (as_json) {
        nlohmann::json j{{"space", family_id(space.family)},
                         {"n", n},
                         {"max_flux_deviation", worst_flux},
                         {"flux_tol", flux_tol},
                         {"max_harmonicity_residual", worst_harm},
                         {"max_harmonicity_scaled", worst_scaled},
                         {"tol", tol},
                         {"pass", pass}};
        std::cout << j.dump(2) << "\n";
    } else {
        if (table) {
            std::cout << "r,flux,harmonicity_residual\n";
            for (double r : grid) {
                std::cout << fmt(r, "%.17g") << "," << fmt(flux(space, r), "%.17g") << ","
                          << fmt(green_harmonicity_residual(space, r), "%.17g") << "\n";
            }
        }
        std::cout << space.name() << ": max |flux - 1| = " << fmt(worst_flux)
                  << " (tol " << fmt(flux_tol) << "), max |G'' + H G'| = " << fmt(worst_harm)
                  << " absolute, " << fmt(worst_scaled) << " scaled (tol " << fmt(tol)
                  << "): " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int cmd_ledger(const std::string& space_id, int n, std::optional<double> tol_flag,
               bool as_json) {
    const ModelSpace space = ModelSpace::make(parse_family(space_id), n);
    const double tol = resolve_tol(1e-5, tol_flag);
    const double ledger = ledger_ricci(space);
    const auto [lo, hi] = default_bounds(space);
    const std::vector<double> grid = linspace(std::max(lo, 0.2), hi, 12);
    double riccati_lo = std::numeric_limits<double>::infinity();
    double riccati_hi = -riccati_lo;
    for (double r : grid) {
        const double v = riccati_ricci(space, r);
        riccati_lo = std::min(riccati_lo, v);
        riccati_hi = std::max(riccati_hi, v);
    }
    const double riccati = riccati_ricci(space, grid[grid.size() / 2]);
    const double gap = std::max(std::abs(ledger - riccati_lo), std::abs(ledger - riccati_hi));
    const bool pass = gap <= tol;
    if (as_json) {
        nlohmann::json j{{"space", family_id(space.family)},
                         {"n", n},
                         {"ledger", ledger},
                         {"riccati", riccati},
                         {"riccati_spread", riccati_hi - riccati_lo},
                         {"einstein", space.einstein_constant},
                         {"gap", gap},
                         {"tol", tol},
                         {"pass", pass}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << space.name() << ": Ric = " << fmt(ledger) << " (Ledger, -3 omega''(0))"
                  << " vs " << fmt(riccati) << " (Riccati trace), catalog einstein "
                  << fmt(space.einstein_constant) << ", gap " << fmt(gap) << " (tol "
                  << fmt(tol) << "): " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int cmd_classify(const std::string& csv_path, int dim, const std::string& quantity_name,
                 std::optional<double> threshold_flag) {
    const auto quantity = quantity_from_id(quantity_name);
    if (!quantity) {
        throw ValidationError("unknown quantity '" + quantity_name
                              + "' (expected H|mean_curvature|density|omega)");
    }
    std::ifstream in(csv_path);
    if (!in) {
        throw ValidationError("cannot open '" + csv_path + "'");
    }
    const ObservedProfile obs = read_profile_csv(in, *quantity, dim, csv_path);
    const double threshold = resolve_tol(1e-6, threshold_flag);
    const ClassificationResult result = classify_profile(obs, threshold);
    std::cout << nlohmann::json(result).dump(2) << "\n";
    return result.best ? 0 : 1;
}

int cmd_table(const std::string& space_id, int n, double r_min, std::optional<double> r_max,
              int steps) {
    const ModelSpace space = ModelSpace::make(parse_family(space_id), n);
    const double hi_def = default_bounds(space).second;
    const std::vector<double> grid = linspace(r_min, r_max.value_or(hi_def), steps);
    std::cout << "r,theta,omega,H,Gprime\n";
    for (double r : grid) {
        std::cout << fmt(r, "%.17g") << "," << fmt(space.density(r).value, "%.17g") << ","
                  << fmt(space.omega(r).value, "%.17g") << ","
                  << fmt(mean_curvature(space, r), "%.17g") << ","
                  << fmt(green_derivative(space, r), "%.17g") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radial calculus of the harmonic model geometries"};
    app.require_subcommand(1);

    // list
    auto* list = app.add_subcommand("list", "print the model-space catalog");
    std::optional<int> list_dim;
    bool list_json = false;
    list->add_option("--dim", list_dim, "list the candidates of this real dimension");
    list->add_flag("--json", list_json, "machine-readable output");

    // shared space arguments
    struct SpaceArgs {
        std::string space;
        int n = 0;
    };
    auto add_space_args = [](CLI::App* cmd, SpaceArgs& args) {
        cmd->add_option("space", args.space, "euclidean|sphere|hyperbolic|chn|qhn")
            ->required();
        cmd->add_option("--n", args.n, "family parameter n")->required();
    };

    // eigencheck
    auto* eig = app.add_subcommand("eigencheck", "residual of an eigenfunction claim");
    SpaceArgs eig_space;
    add_space_args(eig, eig_space);
    std::string eig_claim;
    std::optional<double> eig_rmin, eig_rmax, eig_tol;
    int eig_steps = 200;
    bool eig_table = false, eig_json = false;
    eig->add_option("--claim", eig_claim, "r2|r2mn|cos|cosh|sinh2")->required();
    eig->add_option("--r-min", eig_rmin, "grid start (default 0.2)");
    eig->add_option("--r-max", eig_rmax, "grid end (default 3, inside the domain)");
    eig->add_option("--steps", eig_steps, "grid size (default 200)");
    eig->add_option("--tol", eig_tol, "pass tolerance (default 1e-9)");
    eig->add_flag("--table", eig_table, "print the per-radius table");
    eig->add_flag("--json", eig_json, "machine-readable output");

    // green
    auto* grn = app.add_subcommand("green", "flux and harmonicity of the Green's function");
    SpaceArgs grn_space;
    add_space_args(grn, grn_space);
    std::optional<double> grn_rmin, grn_rmax, grn_tol;
    int grn_steps = 100;
    bool grn_table = false, grn_json = false;
    grn->add_option("--r-min", grn_rmin, "grid start (default 0.05)");
    grn->add_option("--r-max", grn_rmax, "grid end (default 3, inside the domain)");
    grn->add_option("--steps", grn_steps, "grid size (default 100)");
    grn->add_option("--tol", grn_tol, "harmonicity tolerance (default 1e-10)");
    grn->add_flag("--table", grn_table, "print the per-radius table");
    grn->add_flag("--json", grn_json, "machine-readable output");

    // ledger
    auto* led = app.add_subcommand("ledger", "Ricci curvature two ways: Ledger vs Riccati");
    SpaceArgs led_space;
    add_space_args(led, led_space);
    std::optional<double> led_tol;
    bool led_json = false;
    led->add_option("--tol", led_tol, "agreement tolerance (default 1e-5)");
    led->add_flag("--json", led_json, "machine-readable output");

    // classify
    auto* cls = app.add_subcommand("classify", "match a sampled profile against the catalog");
    std::string cls_csv, cls_quantity;
    int cls_dim = 0;
    std::optional<double> cls_threshold;
    cls->add_option("csv", cls_csv, "CSV file with header 'r,value'")->required();
    cls->add_option("--dim", cls_dim, "real dimension of the profile")->required();
    cls->add_option("--quantity", cls_quantity, "H|mean_curvature|density|omega")->required();
    cls->add_option("--threshold", cls_threshold, "match threshold (default 1e-6)");

    // table
    auto* tab = app.add_subcommand("table", "emit r,theta,omega,H,Gprime as CSV");
    SpaceArgs tab_space;
    add_space_args(tab, tab_space);
    double tab_rmin = 0.01;
    std::optional<double> tab_rmax;
    int tab_steps = 300;
    tab->add_option("--r-min", tab_rmin, "grid start (default 0.01)");
    tab->add_option("--r-max", tab_rmax, "grid end (default 3, inside the domain)");
    tab->add_option("--steps", tab_steps, "row count (default 300)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(list)) return cmd_list(list_dim, list_json);
        if (app.got_subcommand(eig)) {
            return cmd_eigencheck(eig_space.space, eig_space.n, eig_claim, eig_rmin, eig_rmax,
                                  eig_steps, eig_tol, eig_table, eig_json);
        }
        if (app.got_subcommand(grn)) {
            return cmd_green(grn_space.space, grn_space.n, grn_rmin, grn_rmax, grn_steps,
                             grn_tol, grn_table, grn_json);
        }
        if (app.got_subcommand(led)) {
            return cmd_ledger(led_space.space, led_space.n, led_tol, led_json);
        }
        if (app.got_subcommand(cls)) {
            return cmd_classify(cls_csv, cls_dim, cls_quantity, cls_threshold);
        }
        if (app.got_subcommand(tab)) {
            return cmd_table(tab_space.space, tab_space.n, tab_rmin, tab_rmax, tab_steps);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
