// verify.cpp

#include "diffspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "diffspec/formulas.hpp"
#include "diffspec/linmaps.hpp"
#include "diffspec/spectra.hpp"

namespace diffspec {

namespace {

std::string hex_str(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

bool fault_matches(const FaultInjection* fault, int n, int t, FieldElement b) {
    return fault && fault->n == n && fault->t == t && fault->b == b;
}

// P_{t,b} as a map object, with the injected bit flip when (n, t, b) matches.
LinearizedMap build_p_poly(const FieldSpec& f, int t, FieldElement b,
                           const FaultInjection* fault) {
    LinearizedMap m = p_poly(f, t, b);
    if (fault_matches(fault, f.degree(), t, b)) m.flip_matrix_bit(fault->row, fault->col);
    return m;
}

CheckResult make_result(std::string name, const FieldSpec& f, int t,
                        std::string witness) {
    CheckResult r;
    r.name = std::move(name);
    r.n = f.degree();
    r.t = t;
    r.pass = witness.empty();
    r.counterexample = std::move(witness);
    return r;
}

CheckResult check_adjoint_duality_impl(const FieldSpec& f, int t,
                                       const FaultInjection* fault) {
    const int n = f.degree();
    const std::uint64_t size = f.order() + 1;
    PPolySweeper sweeper(f, t);
    const int s = n - t + 1;

    // Adjoint columns: (x^j)^(2^s) + (b+1)^2 (x^j)^2 + b x^j.
    const std::size_t cols_count = std::size_t(n);
    std::vector<FieldElement> frob_s(cols_count);
    std::vector<FieldElement> sq(cols_count);
    for (int j = 0; j < n; ++j) {
        const FieldElement e = std::uint64_t(1) << j;
        frob_s[std::size_t(j)] = f.frobenius(e, s);
        sq[std::size_t(j)] = f.sqr(e);
    }

    std::string witness;
    std::vector<FieldElement> cols(cols_count);
    for (std::uint64_t b = 0; b < size && witness.empty(); ++b) {
        const int dim_p = fault_matches(fault, n, t, b)
                              ? build_p_poly(f, t, b, fault).kernel_dim()
                              : sweeper.dim_for(b);
        const FieldElement c = f.sqr(b ^ 1);
        for (int j = 0; j < n; ++j) {
            const FieldElement e = std::uint64_t(1) << j;
            cols[std::size_t(j)] = frob_s[std::size_t(j)] ^
                                   f.mul(c, sq[std::size_t(j)]) ^ f.mul(b, e);
        }
        const int dim_star = n - gf2_rank(cols);
        if (dim_p != dim_star)
            witness = "b=" + hex_str(b) + " dim(P)=" + std::to_string(dim_p) +
                      " dim(P*)=" + std::to_string(dim_star);
    }
    return make_result("adjoint_duality", f, t, witness);
}

CheckResult check_matrix_consistency_impl(const FieldSpec& f, int t,
                                          const FaultInjection* fault) {
    const int n = f.degree();
    const std::uint64_t size = f.order() + 1;
    std::string witness;
    for (std::uint64_t b = 0; b < size && witness.empty(); ++b) {
        const LinearizedMap m = build_p_poly(f, t, b, fault);
        for (int j = 0; j < n && witness.empty(); ++j) {
            const FieldElement e = std::uint64_t(1) << j;
            const FieldElement direct =
                f.frobenius(e, t) ^ f.mul(b, f.sqr(e)) ^ f.mul(b ^ 1, e);
            if (m.apply(e) != direct)
                witness = "b=" + hex_str(b) + " column=" + std::to_string(j);
        }
    }
    return make_result("matrix_consistency", f, t, witness);
}

} // namespace

CheckResult check_identity_u1(const FieldSpec& f, int t) {
    const std::uint64_t d = (std::uint64_t(1) << t) - 1;
    const std::uint64_t size = f.order() + 1;
    std::string witness;
    for (std::uint64_t x = 2; x < size; ++x) {
        const FieldElement lhs =
            f.mul(f.sqr(x) ^ x, f.pow(x ^ 1, d) ^ f.pow(x, d) ^ 1);
        const FieldElement rhs = f.sqr(f.frobenius(x, t - 1) ^ x);
        if (lhs != rhs) {
            witness = "x=" + hex_str(x);
            break;
        }
    }
    return make_result("identity_u1", f, t, witness);
}

CheckResult check_system_equivalence(const FieldSpec& f, int t) {
    const int n = f.degree();
    const std::uint64_t size = f.order() + 1;
    std::vector<std::uint32_t> count_n(size, 0), count_m(size, 0);

    for (std::uint64_t x = 2; x < size; ++x) {
        // E_b(x) = 0 for x outside F_2 iff b = (x^(2^t) + x) / (x^2 + x).
        const FieldElement b =
            f.mul(f.frobenius(x, t) ^ x, f.inv(f.sqr(x) ^ x));
        ++count_n[b];
    }
    for (std::uint64_t y = 1; y < size; ++y) {
        if (f.trace(y) != 0) continue;
        FieldElement acc = 0, p = y;
        for (int i = 1; i < t; ++i) {
            p = f.sqr(p);
            acc ^= p; // sum of y^(2^i), i = 1 .. t-1
        }
        const FieldElement b = f.mul(acc, f.inv(y)) ^ 1;
        ++count_m[b];
    }

    std::string witness;
    for (std::uint64_t b = 0; b < size; ++b) {
        if (count_n[b] != 2 * count_m[b]) {
            witness = "b=" + hex_str(b) + " N=" + std::to_string(count_n[b]) +
                      " M=" + std::to_string(count_m[b]);
            break;
        }
    }
    if (witness.empty()) {
        const std::uint64_t delta1 = std::uint64_t(1) << std::gcd(t - 1, n);
        if (count_m[1] != delta1 / 2 - 1)
            witness = "M_1=" + std::to_string(count_m[1]) +
                      " delta(1)/2-1=" + std::to_string(delta1 / 2 - 1);
    }
    return make_result("system_equivalence", f, t, witness);
}

CheckResult check_adjoint_duality(const FieldSpec& f, int t) {
    return check_adjoint_duality_impl(f, t, nullptr);
}

CheckResult check_matrix_consistency(const FieldSpec& f, int t) {
    return check_matrix_consistency_impl(f, t, nullptr);
}

CheckResult check_symmetry(const FieldSpec& f, int t) {
    const int n = f.degree();
    const int s = n - t + 1;

    struct Side {
        std::map<int, std::uint64_t> profile;
        std::map<std::uint64_t, std::uint64_t> restricted;
        std::uint64_t delta0 = 0, delta1 = 0;
    };
    auto sweep = [&](int nu) {
        Side side;
        PPolySweeper sweeper(f, nu);
        const std::uint64_t size = f.order() + 1;
        for (std::uint64_t b = 0; b < size; ++b) {
            const int dim = sweeper.dim_for(b);
            ++side.profile[dim];
            const std::uint64_t delta = (b == 1) ? (std::uint64_t(1) << dim)
                                                 : (std::uint64_t(1) << dim) - 2;
            if (b == 0) side.delta0 = delta;
            else if (b == 1) side.delta1 = delta;
            else ++side.restricted[delta];
        }
        return side;
    };

    const Side side_t = sweep(t);
    const Side side_s = sweep(s);
    std::string witness;
    if (side_t.profile != side_s.profile)
        witness = "kernel profiles differ";
    else if (side_t.restricted != side_s.restricted)
        witness = "restricted multisets differ";
    else if (side_s.delta0 != side_t.delta1 - 2)
        witness = "delta_s(0)=" + std::to_string(side_s.delta0) +
                  " delta_t(1)=" + std::to_string(side_t.delta1);
    else if (side_s.delta1 != side_t.delta0 + 2)
        witness = "delta_s(1)=" + std::to_string(side_s.delta1) +
                  " delta_t(0)=" + std::to_string(side_t.delta0);
    return make_result("symmetry", f, t, witness);
}

FaultInjection fault_from_seed(std::uint64_t seed, int n_min, int n_max,
                               const VerifyOptions& options) {
    std::mt19937_64 rng(seed);
    FaultInjection fi;
    const int hi = std::min(n_max, options.max_n_matrix);
    const int lo = std::min(n_min, hi);
    fi.n = lo + int(rng() % std::uint64_t(hi - lo + 1));
    fi.t = 2 + int(rng() % std::uint64_t(fi.n - 2));
    fi.b = rng() & ((std::uint64_t(1) << fi.n) - 1);
    fi.row = int(rng() % std::uint64_t(fi.n));
    fi.col = int(rng() % std::uint64_t(fi.n));
    return fi;
}

namespace {

// Per-n oracle equivalences from the formulas module.
void append_formula_checks(std::vector<CheckResult>& out, const FieldSpec& f,
                           const VerifyOptions& opt) {
    const int n = f.degree();
    auto add = [&](const char* name, bool applicable, auto&& body) {
        if (!applicable) return;
        CheckResult r;
        r.name = name;
        r.n = n;
        r.t = -1;
        try {
            std::string witness = body();
            r.pass = witness.empty();
            r.counterexample = std::move(witness);
        } catch (const std::exception& e) {
            r.pass = false;
            r.counterexample = e.what();
        }
        out.push_back(std::move(r));
    };

    add("kloosterman", n >= 4 && n <= opt.max_n_kloosterman, [&]() -> std::string {
        const auto direct = kloosterman(f, KloostermanMethod::direct);
        const auto carlitz = kloosterman(f, KloostermanMethod::carlitz);
        if (direct.value != carlitz.value)
            return "direct=" + std::to_string(direct.value) +
                   " carlitz=" + std::to_string(carlitz.value);
        const double bound = std::exp2(n / 2.0 + 1);
        if (!(-bound + 1 <= double(direct.value) && double(direct.value) <= bound + 1))
            return "outside Weil interval";
        return "";
    });

    add("x7_spectrum", n >= 4 && n <= opt.max_n_x7, [&]() -> std::string {
        const auto closed = closed_form_spectrum(n, SpectrumFamily::x7);
        const auto brute = spectrum_bruteforce(f, 7, opt.jobs);
        return closed == brute ? "" : "closed form != brute force";
    });

    add("nminus2_spectrum", n >= 6 && n <= opt.max_n_nminus2, [&]() -> std::string {
        const auto closed = closed_form_spectrum(n, SpectrumFamily::n_minus_2);
        const auto brute =
            spectrum_bruteforce(f, (std::uint64_t(1) << (n - 2)) - 1, opt.jobs);
        return closed == brute ? "" : "closed form != brute force";
    });

    add("half_spectrum", n >= 6 && n % 2 == 0 && n <= opt.max_n_half,
        [&]() -> std::string {
            const auto closed = closed_form_spectrum(n, SpectrumFamily::half);
            const auto brute =
                spectrum_bruteforce(f, (std::uint64_t(1) << (n / 2)) - 1, opt.jobs);
            return closed == brute ? "" : "closed form != brute force";
        });

    add("half_plus1_spectrum", n >= 6 && n % 2 == 0 && n <= opt.max_n_half,
        [&]() -> std::string {
            const auto closed = closed_form_spectrum(n, SpectrumFamily::half_plus_1);
            const auto brute = spectrum_bruteforce(
                f, (std::uint64_t(1) << (n / 2 + 1)) - 1, opt.jobs);
            return closed == brute ? "" : "closed form != brute force";
        });

    add("half_odd_valueset", n >= 5 && n % 2 == 1 && n <= opt.max_n_half,
        [&]() -> std::string {
            const auto rep = half_odd_valueset(f);
            return rep.value_set_ok ? "" : "value set outside {0,2,6} or bad boundary";
        });

    add("nu0", n >= 4 && n <= opt.max_n_nu0, [&]() -> std::string {
        const auto formula = nu0(f);
        const auto exhaustive = nu0_exhaustive(f);
        if (formula != exhaustive)
            return "formula=" + std::to_string(formula) +
                   " exhaustive=" + std::to_string(exhaustive);
        return "";
    });

    add("cubic_census", n <= opt.max_n_cubic, [&]() -> std::string {
        const auto closed = cubic_census(f);
        const auto exhaustive = cubic_census_exhaustive(f);
        return closed == exhaustive ? "" : "closed form != exhaustive";
    });

    add("code_weights", n >= 4 && n <= opt.max_n_codes, [&]() -> std::string {
        const auto closed = code_weights(n);
        const auto enumerated = code_weights_enumerated(f);
        if (!(closed == enumerated)) return "closed form != enumeration";
        const bigint b3_expected = (n % 2) ? bigint(0) : ((bigint(1) << n) - 1) / 3;
        if (closed.b3 != b3_expected) return "B_3 form violated";
        return "";
    });

    add("four_root_criterion", n >= 6 && n % 2 == 0 && n <= opt.max_n_four_root,
        [&]() -> std::string {
            const int t = n / 2;
            PPolySweeper sweeper(f, t);
            const std::uint64_t size = f.order() + 1;
            for (std::uint64_t b = 2; b < size; ++b) {
                const bool four = sweeper.dim_for(b) == 2;
                if (four_root_criterion(f, b) != four)
                    return "b=" + hex_str(b);
            }
            return "";
        });

    add("uniformity_window", n >= 5 && n <= opt.max_n_window, [&]() -> std::string {
        const auto w = uniformity_window(n);
        for (int t = 3; t <= n - 2; ++t) {
            const auto table = delta_table_kernel(f, t, opt.jobs);
            const std::uint64_t delta = *std::max_element(table.begin(), table.end());
            if (delta <= 4 && !(w.t_lo <= double(t) && double(t) <= w.t_hi))
                return "t=" + std::to_string(t) + " delta=" + std::to_string(delta);
        }
        return "";
    });
}

} // namespace

VerificationReport run_all(int n_min, int n_max, const VerifyOptions& options) {
    VerificationReport report;
    report.n_min = n_min;
    report.n_max = n_max;
    if (n_min > n_max) return report; // vacuously true

    if (n_min < 4)
        throw error(errc::unsupported_params, "run_all needs n_min >= 4");
    if (n_max > FieldSpec::max_exhaustive_degree)
        throw error(errc::field_too_large, "run_all limited to n <= 24");

    std::optional<FaultInjection> fault = options.fault;
    if (!fault && options.fault_seed)
        fault = fault_from_seed(*options.fault_seed, n_min, n_max, options);
    const FaultInjection* fp = fault ? &*fault : nullptr;

    for (int n = n_min; n <= n_max; ++n) {
        const FieldSpec f(n);
        append_formula_checks(report.checks, f, options);
        for (int t = 2; t <= n - 1; ++t) {
            if (n <= options.max_n_adjoint)
                report.checks.push_back(check_adjoint_duality_impl(f, t, fp));
            if (n <= options.max_n_identity)
                report.checks.push_back(check_identity_u1(f, t));
            if (n <= options.max_n_matrix)
                report.checks.push_back(check_matrix_consistency_impl(f, t, fp));
            if (n <= options.max_n_symmetry)
                report.checks.push_back(check_symmetry(f, t));
            if (n <= options.max_n_system)
                report.checks.push_back(check_system_equivalence(f, t));
        }
    }

    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& a, const CheckResult& b) {
                  if (a.n != b.n) return a.n < b.n;
                  if (a.t != b.t) return a.t < b.t;
                  return a.name < b.name;
              });
    report.all_passed = std::all_of(report.checks.begin(), report.checks.end(),
                                    [](const CheckResult& c) { return c.pass; });
    return report;
}

} // namespace diffspec
