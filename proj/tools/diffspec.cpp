// diffspec.cpp
//
// Command-line front end. One result document goes to stdout, diagnostics to
// stderr. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "diffspec/emit.hpp"
#include "diffspec/formulas.hpp"
#include "diffspec/linmaps.hpp"
#include "diffspec/spectra.hpp"
#include "diffspec/verify.hpp"

namespace {

using namespace diffspec;

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_usage = 2;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SpectrumFamily parse_family(const std::string& s) {
    if (s == "x7") return SpectrumFamily::x7;
    if (s == "n-2") return SpectrumFamily::n_minus_2;
    if (s == "half") return SpectrumFamily::half;
    if (s == "half+1") return SpectrumFamily::half_plus_1;
    if (s == "inverse") return SpectrumFamily::inverse;
    throw Usage("--family must be one of x7|n-2|half|half+1|inverse");
}

FieldSpec field_for(int n, const std::string& modulus_hex) {
    if (modulus_hex.empty()) return make_field(n);
    return make_field(n, poly_from_hex(modulus_hex));
}

int run_spectrum(int n, std::optional<std::uint64_t> d, std::optional<int> t,
                 const std::string& family_name, std::string method,
                 const std::string& modulus_hex, Format fmt, int jobs) {
    const int selectors = int(d.has_value()) + int(t.has_value()) +
                          int(!family_name.empty());
    if (selectors != 1)
        throw Usage("exactly one of --d, --t, --family must be given");

    std::optional<SpectrumFamily> family;
    if (!family_name.empty()) family = parse_family(family_name);

    if (method.empty())
        method = d ? "brute" : (t ? "kernel" : "formula");
    if (method != "brute" && method != "kernel" && method != "formula")
        throw Usage("--method must be one of brute|kernel|formula");

    if (family && !t) t = family_t(n, *family);

    DifferentialSpectrum sp;
    if (method == "formula") {
        if (!family) throw Usage("--method formula requires --family");
        if (!modulus_hex.empty()) field_for(n, modulus_hex); // validate only
        sp = closed_form_spectrum(n, *family);
        if (!modulus_hex.empty()) sp.modulus_hex = field_for(n, modulus_hex).modulus_hex();
    } else if (method == "kernel") {
        if (!t) throw Usage("--method kernel requires --t or --family");
        sp = spectrum_kernel(field_for(n, modulus_hex), *t, jobs);
    } else {
        const std::uint64_t exponent = d ? *d : (std::uint64_t(1) << *t) - 1;
        sp = spectrum_bruteforce(field_for(n, modulus_hex), exponent, jobs);
    }
    std::cout << emit(sp, fmt);
    return exit_ok;
}

int main_impl(int argc, char** argv) {
    CLI::App app{"differential spectra of power functions x^d over F_2^n"};
    app.require_subcommand(1);
    app.fallthrough(false);

    // spectrum
    auto* sp_cmd = app.add_subcommand("spectrum", "compute one differential spectrum");
    int sp_n = 0;
    std::optional<std::uint64_t> sp_d;
    std::optional<int> sp_t;
    std::string sp_family, sp_method, sp_modulus, sp_format = "json";
    int sp_jobs = 1;
    sp_cmd->add_option("--n", sp_n, "field degree")->required();
    sp_cmd->add_option("--d", sp_d, "exponent d");
    sp_cmd->add_option("--t", sp_t, "exponent selector d = 2^t - 1");
    sp_cmd->add_option("--family", sp_family, "x7|n-2|half|half+1|inverse");
    sp_cmd->add_option("--method", sp_method, "brute|kernel|formula");
    sp_cmd->add_option("--modulus", sp_modulus, "irreducible modulus, hex");
    sp_cmd->add_option("--format", sp_format, "json|csv|table");
    sp_cmd->add_option("--jobs", sp_jobs, "parallelism degree");

    // verify
    auto* vf_cmd = app.add_subcommand("verify", "run the theorem-verification suite");
    int vf_min = 4, vf_max = 14, vf_jobs = 1;
    std::string vf_format = "table";
    vf_cmd->add_option("--n-min", vf_min, "smallest field degree");
    vf_cmd->add_option("--n-max", vf_max, "largest field degree");
    vf_cmd->add_option("--format", vf_format, "json|csv|table");
    vf_cmd->add_option("--jobs", vf_jobs, "parallelism degree");

    // scan
    auto* sc_cmd = app.add_subcommand("scan", "sweep delta(x^(2^t-1)) for APN exponents");
    int sc_min = 4, sc_max = 14, sc_jobs = 1;
    std::string sc_format = "csv";
    sc_cmd->add_option("--n-min", sc_min, "smallest field degree");
    sc_cmd->add_option("--n-max", sc_max, "largest field degree");
    sc_cmd->add_option("--format", sc_format, "json|csv|table");
    sc_cmd->add_option("--jobs", sc_jobs, "parallelism degree");

    // kloosterman
    auto* kl_cmd = app.add_subcommand("kloosterman", "evaluate the Kloosterman sum K(1)");
    int kl_n = 0;
    std::string kl_method = "formula", kl_modulus, kl_format = "json";
    kl_cmd->add_option("--n", kl_n, "field degree")->required();
    kl_cmd->add_option("--method", kl_method, "brute (direct sum) | formula (Carlitz)");
    kl_cmd->add_option("--modulus", kl_modulus, "irreducible modulus, hex");
    kl_cmd->add_option("--format", kl_format, "json|csv|table");

    // codes
    auto* co_cmd = app.add_subcommand("codes", "weight-3/4 counts of the {1,7} cyclic code");
    int co_n = 0;
    std::string co_format = "json";
    co_cmd->add_option("--n", co_n, "field degree")->required();
    co_cmd->add_option("--format", co_format, "json|csv|table");

    // profile
    auto* pr_cmd = app.add_subcommand("profile", "kernel-dimension histogram of P_{t,b}");
    int pr_n = 0, pr_t = 0, pr_jobs = 1;
    std::string pr_modulus, pr_format = "json";
    pr_cmd->add_option("--n", pr_n, "field degree")->required();
    pr_cmd->add_option("--t", pr_t, "exponent selector")->required();
    pr_cmd->add_option("--modulus", pr_modulus, "irreducible modulus, hex");
    pr_cmd->add_option("--format", pr_format, "json|csv|table");
    pr_cmd->add_option("--jobs", pr_jobs, "parallelism degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    }

    if (sp_cmd->parsed())
        return run_spectrum(sp_n, sp_d, sp_t, sp_family, sp_method, sp_modulus,
                            parse_format(sp_format), sp_jobs);

    if (vf_cmd->parsed()) {
        VerifyOptions options;
        options.jobs = vf_jobs;
        const VerificationReport report = run_all(vf_min, vf_max, options);
        std::cout << emit(report, parse_format(vf_format));
        return report.all_passed ? exit_ok : exit_verification_failure;
    }

    if (sc_cmd->parsed()) {
        const auto findings = conjecture_scan(sc_min, sc_max, sc_jobs);
        for (const auto& sf : conjecture_counterexamples(findings))
            std::cerr << "CONJECTURE_COUNTEREXAMPLE: n=" << sf.n << " t=" << sf.t
                      << "\n";
        std::cout << emit(findings, parse_format(sc_format));
        return exit_ok;
    }

    if (kl_cmd->parsed()) {
        KloostermanMethod method;
        if (kl_method == "brute") method = KloostermanMethod::direct;
        else if (kl_method == "formula") method = KloostermanMethod::carlitz;
        else throw Usage("--method must be brute or formula");
        const KloostermanValue kv =
            method == KloostermanMethod::carlitz && kl_modulus.empty()
                ? kloosterman_carlitz(kl_n)
                : kloosterman(field_for(kl_n, kl_modulus), method);
        std::cout << emit(kv, method, parse_format(kl_format));
        return exit_ok;
    }

    if (co_cmd->parsed()) {
        std::cout << emit(code_weights(co_n), parse_format(co_format));
        return exit_ok;
    }

    if (pr_cmd->parsed()) {
        const auto prof = kernel_profile(field_for(pr_n, pr_modulus), pr_t, pr_jobs);
        std::cout << emit(prof, parse_format(pr_format));
        return exit_ok;
    }

    return exit_usage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return main_impl(argc, argv);
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const diffspec::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_verification_failure;
    }
}
