// Command-line front end: constructions, verifications, certificates
// (JSON) and spectra (CSV).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypinvol/acceptance.hpp"
#include "hypinvol/construct.hpp"
#include "hypinvol/fricke.hpp"
#include "hypinvol/genus2.hpp"
#include "hypinvol/halfplane.hpp"

namespace {

using namespace hypinvol;

struct Options {
    double tol = -1.0;  // certificate tolerance override when positive
    int words = 8;
    int samples = 64;
    double cutoff = 3.2;
    double safety = 0.99;
    double k = 5.0;
    int gtilde = 1;
    double a1 = 0.4;
    bool describe = false;
    std::string surface = "smax";
    std::string flavor = "reversing";
    std::string out;
    std::string format;
    std::string sides;
    std::string svg;
};

void write_artifact(const Options& opt, const std::string& payload) {
    if (opt.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw DomainError("cannot open output path: " + opt.out);
    f << payload;
}

int finish_certificate(const Options& opt, const Certificate& cert_in,
                       const std::string& text_summary) {
    Certificate cert = cert_in;
    if (opt.tol > 0.0) cert.tolerance = opt.tol;
    const std::string fmt = opt.format.empty() ? "json" : opt.format;
    if (fmt == "json") {
        write_artifact(opt, cert.to_json() + "\n");
    } else if (fmt == "text") {
        write_artifact(opt, text_summary);
    } else {
        throw DomainError("unsupported format for certificates: " + fmt);
    }
    return cert.pass() ? 0 : 1;
}

genus2::Genus2Surface named_surface(const std::string& name) {
    if (name == "smax") return genus2::smax().first;
    if (name == "bolza" || name == "bolza-aligned") return genus2::bolza().first;
    throw DomainError("unknown surface: " + name + " (use smax, bolza, bolza-aligned)");
}

std::vector<halfplane::Isometry> named_spectrum_gens(const std::string& name) {
    if (name == "bolza") {
        // The systole-maximal curve itself (quarter-period twist).
        const auto g = genus2::bolza_curve_generators();
        return {g.begin(), g.end()};
    }
    const auto g = genus2::generators(named_surface(name));
    return {g.begin(), g.end()};
}

int cmd_extremal(const Options& opt) {
    const fricke::Extremal11 ext = fricke::extremal_11();
    std::ostringstream os;
    os << "sigma = " << format_real(ext.sigma) << "\n";
    os << "beta  = " << format_real(ext.beta) << "\n";
    os << "h     = " << format_real(ext.h) << "\n";
    for (const char* key : {"linear_relation", "quadratic_relation", "pentagon_relation",
                            "cubic_minus_variant"}) {
        os << "residual " << key << " = " << format_real(ext.certificate.residuals.at(key))
           << "\n";
    }
    const std::string fmt = opt.format.empty() ? "text" : opt.format;
    if (fmt == "json") {
        write_artifact(opt, ext.certificate.to_json() + "\n");
    } else {
        write_artifact(opt, os.str());
    }
    return ext.certificate.pass() ? 0 : 1;
}

int cmd_smax(const Options& opt) {
    const auto [s, cert] = genus2::smax();
    std::ostringstream os;
    os << "displacement = " << format_real(cert.values.at("displacement")) << "\n"
       << "systole = " << format_real(cert.values.at("systole")) << " (count "
       << format_real(cert.values.at("systole_count")) << ")\n"
       << "comparison sqrt(4 pi) = " << format_real(cert.values.at("comparison_bound_c1"))
       << "\n";
    return finish_certificate(opt, cert, os.str());
}

int cmd_bolza(const Options& opt) {
    const auto [s, cert] = genus2::bolza();
    std::ostringstream os;
    os << "systole = " << format_real(cert.values.at("systole")) << " (count "
       << format_real(cert.values.at("systole_count")) << ")\n"
       << "beta = " << format_real(cert.values.at("beta")) << "\n"
       << "displacement of the aligned double = "
       << format_real(cert.values.at("displacement_aligned_double")) << "\n";
    return finish_certificate(opt, cert, os.str());
}

int cmd_displacement(const Options& opt) {
    const genus2::Genus2Surface s = named_surface(opt.surface);
    const double aligned = genus2::displacement_aligned(s);
    const genus2::SampledDisplacement sampled =
        genus2::displacement_sampled(s, opt.samples, opt.words);

    Certificate cert;
    cert.claim_id = "displacement-" + opt.surface;
    cert.tolerance = 1e-6;
    cert.values = {
        {"aligned", aligned},
        {"sampled", sampled.value},
        {"slack", sampled.slack},
        {"beta", s.beta},
    };
    cert.residuals = {
        {"sampled_not_below_aligned", std::max(0.0, aligned - sampled.value)},
    };
    if (opt.surface == "bolza" || opt.surface == "bolza-aligned")
        cert.caveats = {"displacement refers to the height-aligned double, the "
                        "gluing carrying the fixed-point-free involution"};
    std::ostringstream os;
    os << "aligned = " << format_real(aligned) << "\n"
       << "sampled = " << format_real(sampled.value) << " (slack "
       << format_real(sampled.slack) << ")\n";
    return finish_certificate(opt, cert, os.str());
}

int cmd_spectrum(const Options& opt) {
    const auto gens = named_spectrum_gens(opt.surface);
    const halfplane::SpectrumResult spec =
        halfplane::length_spectrum(gens, opt.cutoff, opt.words);
    const std::string fmt = opt.format.empty() ? "csv" : opt.format;
    if (fmt == "csv") {
        std::string csv = halfplane::spectrum_to_csv(spec);
        if (spec.cutoff_warning) csv += "# warning: word ball may be too small\n";
        write_artifact(opt, csv);
    } else if (fmt == "text") {
        std::ostringstream os;
        for (const auto& e : spec.entries)
            os << format_real(e.length) << "  x" << e.multiplicity << "\n";
        write_artifact(opt, os.str());
    } else {
        throw DomainError("unsupported format for spectra: " + fmt);
    }
    return 0;
}

int cmd_odd_genus(const Options& opt) {
    construct::Flavor flavor;
    if (opt.flavor == "preserving") {
        flavor = construct::Flavor::preserving;
    } else if (opt.flavor == "reversing") {
        flavor = construct::Flavor::reversing;
    } else {
        throw DomainError("unknown flavor: " + opt.flavor);
    }
    const double x = construct::solve_x_for_k(opt.k, opt.safety);
    const construct::OddGenusSurface s = construct::build_odd_genus(opt.gtilde, x, flavor);
    if (opt.describe) {
        write_artifact(opt, s.to_json() + "\n");
        return 0;
    }
    const Certificate cert = construct::certify_displacement(s, opt.k);
    std::ostringstream os;
    os << "genus = " << s.genus << "\n"
       << "x = " << format_real(x) << "\n"
       << "collar bound = " << format_real(cert.values.at("collar_bound")) << " (k = "
       << format_real(opt.k) << ")\n";
    return finish_certificate(opt, cert, os.str());
}

int cmd_polygon(const Options& opt) {
    std::vector<std::optional<double>> sides;
    std::stringstream ss(opt.sides);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "?" || item == "x" || item.empty()) {
            sides.push_back(std::nullopt);
        } else {
            sides.push_back(std::stod(item));
        }
    }
    const construct::PolygonSpec poly = construct::solve_right_angled_polygon(sides);
    if (!opt.svg.empty()) {
        std::ofstream f(opt.svg, std::ios::binary);
        if (!f) throw DomainError("cannot open svg path: " + opt.svg);
        f << construct::polygon_to_svg(poly);
    }
    std::ostringstream os;
    os << "sides =";
    for (double s : poly.sides) os << " " << format_real(s);
    os << "\nclosure_residual = " << format_real(poly.closure_residual)
       << "\nmax_angle_residual = " << format_real(poly.max_angle_residual) << "\n";
    write_artifact(opt, os.str());
    return 0;
}

int cmd_hyperelliptic(const Options& opt) {
    const construct::HyperellipticExample ex =
        construct::build_hyperelliptic_example(opt.gtilde, opt.a1);
    const std::string fmt = opt.format.empty() ? "json" : opt.format;
    if (fmt == "json") {
        write_artifact(opt, ex.to_json() + "\n");
    } else {
        std::ostringstream os;
        os << "genus = " << ex.preserving.genus << "\n"
           << "a1 curves: " << ex.a1_curve_count << " of length "
           << format_real(ex.a1_curve_length) << "\n"
           << "hyperelliptic fixed vertices: " << ex.hyperelliptic_fixed_vertices << "\n";
        write_artifact(opt, os.str());
    }
    return ex.certificate.pass() ? 0 : 1;
}

int cmd_verify_all() {
    const auto results = acceptance::run_all(std::cout);
    return acceptance::all_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperbolic genus-2 involution displacement toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol", opt.tol, "residual tolerance");
        cmd->add_option("--out", opt.out, "output path (default stdout)");
        cmd->add_option("--format", opt.format, "json | csv | text");
    };

    CLI::App* extremal = app.add_subcommand("extremal-genus2",
                                            "solve the extremal one-holed torus");
    add_common(extremal);

    CLI::App* smax = app.add_subcommand("smax", "displacement-maximal genus-2 surface");
    add_common(smax);

    CLI::App* bolza = app.add_subcommand("bolza", "systole-maximal genus-2 surface");
    add_common(bolza);

    CLI::App* displacement =
        app.add_subcommand("displacement", "aligned and sampled displacement");
    add_common(displacement);
    displacement->add_option("--surface", opt.surface, "smax | bolza");
    displacement->add_option("--samples", opt.samples, "sample count");
    displacement->add_option("--words", opt.words, "orbit word cutoff");

    CLI::App* spectrum = app.add_subcommand("spectrum", "length spectrum as CSV");
    add_common(spectrum);
    spectrum->add_option("--surface", opt.surface, "smax | bolza | bolza-aligned");
    spectrum->add_option("--cutoff", opt.cutoff, "length cutoff");
    spectrum->add_option("--words", opt.words, "word cutoff");

    CLI::App* odd = app.add_subcommand("odd-genus",
                                       "odd-genus double with certified displacement");
    add_common(odd);
    odd->add_option("--k", opt.k, "required displacement");
    odd->add_option("--flavor", opt.flavor, "preserving | reversing");
    odd->add_option("--gtilde", opt.gtilde, "piece genus");
    odd->add_option("--safety", opt.safety, "safety factor in (0,1)");
    odd->add_flag("--describe", opt.describe, "emit the gluing description instead");

    CLI::App* polygon = app.add_subcommand("polygon", "solve a right-angled polygon");
    add_common(polygon);
    polygon->add_option("--sides", opt.sides,
                        "comma list, '?' for unknown (exactly three)")
        ->required();
    polygon->add_option("--svg", opt.svg, "write an SVG figure here");

    CLI::App* hyper = app.add_subcommand("hyperelliptic-example",
                                         "eight-polygon odd-genus example");
    add_common(hyper);
    hyper->add_option("--gtilde", opt.gtilde, "piece genus");
    hyper->add_option("--a1", opt.a1, "short polygon side");

    app.add_subcommand("verify-all", "run every acceptance criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (extremal->parsed()) return cmd_extremal(opt);
        if (smax->parsed()) return cmd_smax(opt);
        if (bolza->parsed()) return cmd_bolza(opt);
        if (displacement->parsed()) return cmd_displacement(opt);
        if (spectrum->parsed()) return cmd_spectrum(opt);
        if (odd->parsed()) return cmd_odd_genus(opt);
        if (polygon->parsed()) return cmd_polygon(opt);
        if (hyper->parsed()) return cmd_hyperelliptic(opt);
        return cmd_verify_all();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
