// formulas.cpp

#include "diffspec/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "diffspec/linmaps.hpp"

namespace diffspec {

namespace {

bigint pow2(int e) { return bigint(1) << e; }

std::uint64_t to_u64(const bigint& v, const char* what) {
    if (v < 0 || v > bigint(~std::uint64_t(0)))
        throw error(errc::non_integer_result, std::string(what) + " out of range");
    return v.convert_to<std::uint64_t>();
}

bigint exact_div(const bigint& num, const bigint& den, const char* what) {
    if (den == 0 || num % den != 0)
        throw error(errc::non_integer_result, std::string(what) + " is not divisible");
    return num / den;
}

// omega_6 of the x^7 spectrum over F_{2^n}:
//   odd n:  (2^(n-2)+1)/6 - K(1)/8
//   even n: (2^(n-2)-4)/6 + K(1)/8
bigint x7_omega6(int n) {
    const bigint k = kloosterman_carlitz(n).value;
    bigint num = (n % 2) ? 4 * (pow2(n - 2) + 1) - 3 * k
                         : 4 * (pow2(n - 2) - 4) + 3 * k;
    return exact_div(num, 24, "omega_6 of x^7");
}

// Finalizes a closed-form spectrum: delta_max, moment identities and the
// locally-APN flag derived from the multiset with delta(0), delta(1) removed.
DifferentialSpectrum finish_closed_form(int n, std::uint64_t d,
                                        std::map<std::uint64_t, std::uint64_t> omega,
                                        std::uint64_t delta0, std::uint64_t delta1) {
    DifferentialSpectrum sp;
    sp.n = n;
    sp.modulus_hex = poly_to_hex(default_modulus(n));
    sp.d = d;
    for (auto it = omega.begin(); it != omega.end();) {
        it = it->second == 0 ? omega.erase(it) : std::next(it);
    }
    sp.omega = std::move(omega);
    sp.delta0 = delta0;
    sp.delta1 = delta1;
    sp.delta_max = sp.omega.rbegin()->first;

    unsigned __int128 total = 0, weighted = 0;
    for (const auto& [i, w] : sp.omega) {
        total += w;
        weighted += (unsigned __int128)(i) * w;
    }
    const unsigned __int128 size = (unsigned __int128)(1) << n;
    if (total != size || weighted != size)
        throw error(errc::non_integer_result, "closed-form spectrum fails the moment identities");

    // Restricted maximum: remove one occurrence each of delta(0) and delta(1).
    auto rest = sp.omega;
    for (std::uint64_t v : {delta0, delta1}) {
        auto it = rest.find(v);
        if (it == rest.end() || it->second == 0)
            throw error(errc::non_integer_result, "boundary value missing from spectrum");
        if (--it->second == 0) rest.erase(it);
    }
    sp.locally_apn = rest.empty() || rest.rbegin()->first <= 2;
    return sp;
}

} // namespace

KloostermanValue kloosterman_carlitz(int n) {
    if (n < 2 || n > FieldSpec::max_degree)
        throw error(errc::unsupported_params, "Kloosterman formula needs 2 <= n <= 64");
    bigint sum = 0;
    bigint binom = 1; // C(n, 2i), updated incrementally
    bigint seven = 1; // 7^i
    for (int i = 0; 2 * i <= n; ++i) {
        if (i > 0) {
            // C(n, 2i) = C(n, 2i-2) * (n-2i+2)(n-2i+1) / ((2i-1)(2i))
            binom = exact_div(binom * (n - 2 * i + 2) * (n - 2 * i + 1),
                              bigint(2 * i - 1) * (2 * i), "binomial update");
            seven *= 7;
        }
        sum += (i % 2 ? -binom : binom) * seven;
    }
    if (n % 2 == 0) sum = -sum; // (-1)^(n-1)
    const bigint value = 1 + exact_div(sum, pow2(n - 1), "Carlitz sum");
    KloostermanValue kv;
    kv.n = n;
    kv.value = value.convert_to<std::int64_t>();
    return kv;
}

KloostermanValue kloosterman(const FieldSpec& f, KloostermanMethod method) {
    if (method == KloostermanMethod::carlitz) return kloosterman_carlitz(f.degree());
    if (f.degree() > FieldSpec::max_exhaustive_degree)
        throw error(errc::field_too_large, "direct Kloosterman sum limited to n <= 24");
    std::int64_t sum = 1; // x = 0 contributes +1 by convention
    const std::uint64_t order = f.order();
    for (std::uint64_t x = 1; x <= order; ++x) {
        const int bit = f.trace(f.inv(x) ^ x);
        sum += bit ? -1 : 1;
    }
    KloostermanValue kv;
    kv.n = f.degree();
    kv.value = sum;
    return kv;
}

std::vector<FieldElement> cubic_roots(const FieldSpec& f, FieldElement a,
                                      FieldElement b) {
    if (b == 0) throw error(errc::zero_constant, "cubic solver requires b != 0");
    if (f.degree() > FieldSpec::max_exhaustive_degree)
        throw error(errc::field_too_large, "cubic root scan limited to n <= 24");
    std::vector<FieldElement> roots;
    const std::uint64_t size = f.order() + 1;
    for (std::uint64_t x = 0; x < size; ++x) {
        if ((f.mul(f.sqr(x), x) ^ f.mul(a, x) ^ b) == 0) roots.push_back(x);
    }
    return roots;
}

CubicCensus cubic_census_exhaustive(const FieldSpec& f) {
    if (f.degree() > FieldSpec::max_exhaustive_degree)
        throw error(errc::field_too_large, "cubic census scan limited to n <= 24");
    const std::uint64_t size = f.order() + 1;
    // x is a root of x^3 + x + a exactly when a = x^3 + x.
    std::vector<std::uint8_t> roots(size, 0);
    for (std::uint64_t x = 0; x < size; ++x) ++roots[f.mul(f.sqr(x), x) ^ x];
    CubicCensus c;
    c.n = f.degree();
    for (std::uint64_t a = 1; a < size; ++a) {
        if (roots[a] == 0) ++c.m0;
        else if (roots[a] == 1) ++c.m1;
        else ++c.m3;
    }
    return c;
}

CubicCensus cubic_census(const FieldSpec& f) {
    const int n = f.degree();
    CubicCensus c;
    c.n = n;
    if (n % 2) {
        c.m0 = to_u64(exact_div(pow2(n) + 1, 3, "M_0"), "M_0");
        c.m1 = to_u64(pow2(n - 1) - 1, "M_1");
        c.m3 = to_u64(exact_div(pow2(n - 1) - 1, 3, "M_3"), "M_3");
    } else {
        c.m0 = to_u64(exact_div(pow2(n) - 1, 3, "M_0"), "M_0");
        c.m1 = to_u64(pow2(n - 1), "M_1");
        c.m3 = to_u64(exact_div(pow2(n - 1) - 2, 3, "M_3"), "M_3");
    }
    if (n <= 16 && !(cubic_census_exhaustive(f) == c))
        throw std::logic_error("cubic census closed form disagrees with exhaustive count");
    return c;
}

std::uint64_t nu0(const FieldSpec& f) {
    const int n = f.degree();
    if (n < 4) throw error(errc::unsupported_params, "nu0 needs n >= 4");
    const bigint k = kloosterman_carlitz(n).value;
    const bigint sign = (n % 2) ? -1 : 1;
    // (2^n - sign)/3 + 2^(n-2) + sign*K/4, over the common denominator 12.
    const bigint num = 4 * (pow2(n) - sign) + 12 * pow2(n - 2) + 3 * sign * k;
    return to_u64(exact_div(num, 12, "nu0"), "nu0");
}

std::uint64_t nu0_exhaustive(const FieldSpec& f) {
    if (f.degree() < 4) throw error(errc::unsupported_params, "nu0 needs n >= 4");
    if (f.degree() > FieldSpec::max_exhaustive_degree)
        throw error(errc::field_too_large, "exhaustive nu0 limited to n <= 24");
    const std::uint64_t size = f.order() + 1;
    std::vector<std::uint8_t> has_root(size, 0);
    for (std::uint64_t x = 2; x < size; ++x) {
        // P_b(x) = 0 with x outside F_2 iff b = (x^8 + x) / (x^2 + x).
        const FieldElement num = f.frobenius(x, 3) ^ x;
        const FieldElement den = f.sqr(x) ^ x;
        has_root[f.mul(num, f.inv(den))] = 1;
    }
    std::uint64_t count = 0;
    for (std::uint64_t b = 0; b < size; ++b)
        if (b != 1 && !has_root[b]) ++count;
    return count;
}

int family_t(int n, SpectrumFamily family) {
    switch (family) {
        case SpectrumFamily::x7:          return 3;
        case SpectrumFamily::n_minus_2:   return n - 2;
        case SpectrumFamily::half:        return n / 2;
        case SpectrumFamily::half_plus_1: return n / 2 + 1;
        case SpectrumFamily::inverse:     return n - 1;
    }
    throw error(errc::unsupported_params, "unknown family");
}

DifferentialSpectrum closed_form_spectrum(int n, SpectrumFamily family) {
    if (n > FieldSpec::max_degree)
        throw error(errc::unsupported_params, "closed forms evaluated for n <= 64");
    std::map<std::uint64_t, std::uint64_t> omega;
    std::uint64_t delta0 = 0, delta1 = 0;

    switch (family) {
        case SpectrumFamily::x7: {
            if (n < 4) throw error(errc::unsupported_params, "x7 spectrum needs n >= 4");
            const std::uint64_t w6 = to_u64(x7_omega6(n), "omega_6");
            const std::uint64_t w4 = (n % 2) ? 0 : 1;
            omega[6] = w6;
            omega[4] = w4;
            omega[2] = to_u64(pow2(n - 1) - 3 * bigint(w6) - 2 * w4, "omega_2");
            omega[0] = to_u64(pow2(n - 1) + 2 * bigint(w6) + w4, "omega_0");
            delta0 = (n % 3 == 0) ? 6 : 0;
            delta1 = (n % 2) ? 2 : 4;
            break;
        }
        case SpectrumFamily::n_minus_2: {
            if (n < 6) throw error(errc::unsupported_params, "2^(n-2)-1 spectrum needs n >= 6");
            const bigint k = kloosterman_carlitz(n).value;
            if (n % 3 != 0) {
                const std::uint64_t w6 = to_u64(x7_omega6(n), "omega_6");
                omega[6] = w6;
                omega[2] = to_u64(pow2(n - 1) - 3 * bigint(w6), "omega_2");
                omega[0] = to_u64(pow2(n - 1) + 2 * bigint(w6), "omega_0");
                delta0 = (n % 2) ? 0 : 2;
                delta1 = 2;
            } else {
                const bigint num = (n % 2) ? 4 * (pow2(n - 2) - 5) - 3 * k
                                           : 4 * (pow2(n - 2) - 10) + 3 * k;
                const std::uint64_t w6 = to_u64(exact_div(num, 24, "omega_6"), "omega_6");
                omega[8] = 1;
                omega[6] = w6;
                omega[2] = to_u64(pow2(n - 1) - 3 * bigint(w6) - 4, "omega_2");
                omega[0] = to_u64(pow2(n - 1) + 2 * bigint(w6) + 3, "omega_0");
                delta0 = (n % 2) ? 0 : 2;
                delta1 = 8;
            }
            break;
        }
        case SpectrumFamily::half: {
            if (n <= 4 || n % 2)
                throw error(errc::unsupported_params, "half exponent needs even n > 4");
            const int t = n / 2;
            const std::uint64_t big = (std::uint64_t(1) << t) - 2;
            if (n % 4 == 0) {
                omega[big] = 1;
                omega[2] = to_u64(pow2(n - 1) - pow2(t - 1) + 1, "omega_2");
                omega[0] = to_u64(pow2(n - 1) + pow2(t - 1) - 2, "omega_0");
                delta1 = 2;
            } else {
                omega[big] = 1;
                omega[4] = 1;
                omega[2] = to_u64(pow2(n - 1) - pow2(t - 1) - 1, "omega_2");
                omega[0] = to_u64(pow2(n - 1) + pow2(t - 1) - 1, "omega_0");
                delta1 = 4;
            }
            delta0 = big;
            break;
        }
        case SpectrumFamily::half_plus_1: {
            if (n <= 4 || n % 2)
                throw error(errc::unsupported_params, "half+1 exponent needs even n > 4");
            const int t = n / 2;
            omega[std::uint64_t(1) << t] = 1;
            omega[2] = to_u64(pow2(n - 1) - pow2(t - 1), "omega_2");
            omega[0] = to_u64(pow2(n - 1) + pow2(t - 1) - 1, "omega_0");
            delta0 = (n % 4 == 0) ? 0 : 2;
            delta1 = std::uint64_t(1) << t;
            break;
        }
        case SpectrumFamily::inverse: {
            if (n < 3) throw error(errc::unsupported_params, "inverse spectrum needs n >= 3");
            if (n % 2) {
                omega[2] = std::uint64_t(1) << (n - 1);
                omega[0] = std::uint64_t(1) << (n - 1);
                delta1 = 2;
            } else {
                omega[4] = 1;
                omega[2] = (std::uint64_t(1) << (n - 1)) - 2;
                omega[0] = (std::uint64_t(1) << (n - 1)) + 1;
                delta1 = 4;
            }
            delta0 = 0;
            break;
        }
    }

    const int t = family_t(n, family); // t <= n-1 <= 63 in every family
    const std::uint64_t exponent = (std::uint64_t(1) << t) - 1;
    return finish_closed_form(n, exponent, std::move(omega), delta0, delta1);
}

HalfOddReport half_odd_valueset(const FieldSpec& f) {
    const int n = f.degree();
    if (n % 2 == 0 || n <= 3)
        throw error(errc::unsupported_params, "odd-half exponent needs odd n > 3");
    const int t = (n - 1) / 2;
    const auto table = delta_table_kernel(f, t);

    HalfOddReport rep;
    rep.n = n;
    rep.t = t;
    rep.spectrum = spectrum_from_table(f, (std::uint64_t(1) << t) - 1, table);
    rep.value_set_ok = true;
    for (std::uint64_t b = 2; b < table.size(); ++b) {
        ++rep.restricted[table[b]];
        if (table[b] != 0 && table[b] != 2 && table[b] != 6) rep.value_set_ok = false;
    }
    const std::uint64_t expected_delta1 = (n % 3 == 0) ? 8 : 2;
    if (rep.spectrum.delta0 != 0 || rep.spectrum.delta1 != expected_delta1)
        rep.value_set_ok = false;
    return rep;
}

bool four_root_criterion(const FieldSpec& f, FieldElement b) {
    const int n = f.degree();
    if (n % 2) throw error(errc::unsupported_params, "criterion needs n = 2t even");
    if (b == 0 || b == 1)
        throw error(errc::unsupported_params, "criterion applies to b outside F_2");
    const int t = n / 2;
    const std::uint64_t e = (std::uint64_t(1) << t) + 1;
    const FieldElement norm = f.pow(b, e); // lies in F_{2^t}
    const bool in_subgroup = f.pow(b ^ 1, e) == 1; // b+1 of order dividing 2^t+1
    return f.subfield_trace(f.inv(norm), t) == 1 && !in_subgroup;
}

CodeWeightCounts code_weights(int n) {
    if (n < 4) throw error(errc::unsupported_params, "code weights need n >= 4");
    if (n > FieldSpec::max_degree)
        throw error(errc::unsupported_params, "code weights evaluated for n <= 64");
    CodeWeightCounts cw;
    cw.n = n;
    cw.b3 = (n % 2) ? 0 : exact_div(pow2(n) - 1, 3, "B_3");
    cw.b4 = (pow2(n) - 1) * x7_omega6(n);
    if (n <= 10) {
        const FieldSpec f(n);
        if (!(code_weights_enumerated(f) == cw))
            throw std::logic_error("code weight closed form disagrees with enumeration");
    }
    return cw;
}

CodeWeightCounts code_weights_enumerated(const FieldSpec& f) {
    const int n = f.degree();
    if (n > 16)
        throw error(errc::field_too_large, "codeword enumeration limited to n <= 16");
    const std::uint64_t size = f.order() + 1;
    std::vector<FieldElement> p7(size);
    for (std::uint64_t x = 0; x < size; ++x) p7[x] = f.pow(x, 7);

    // A weight-w codeword is a w-subset of distinct nonzero field elements
    // whose sum and whose seventh-power sum both vanish. Supports are
    // enumerated once each by forcing the free element to be the largest.
    std::uint64_t b3 = 0, b4 = 0;
    for (std::uint64_t x = 1; x < size; ++x) {
        for (std::uint64_t y = x + 1; y < size; ++y) {
            const std::uint64_t z = x ^ y;
            if (z > y && (p7[x] ^ p7[y] ^ p7[z]) == 0) ++b3;
        }
    }
    for (std::uint64_t x = 1; x < size; ++x) {
        for (std::uint64_t y = x + 1; y < size; ++y) {
            const FieldElement pxy = p7[x] ^ p7[y];
            const std::uint64_t xy = x ^ y;
            for (std::uint64_t z = y + 1; z < size; ++z) {
                const std::uint64_t w = xy ^ z;
                if (w > z && (pxy ^ p7[z] ^ p7[w]) == 0) ++b4;
            }
        }
    }
    CodeWeightCounts cw;
    cw.n = n;
    cw.b3 = b3;
    cw.b4 = b4;
    return cw;
}

UniformityWindow uniformity_window(int n) {
    if (n < 4) throw error(errc::unsupported_params, "window needs n >= 4");
    UniformityWindow w;
    w.n = n;
    w.t_lo = std::log2(std::exp2(n / 4.0) + 5.6);
    w.t_hi = double(n) + 1.0 - w.t_lo;
    return w;
}

bool conjecture_allows(int n, int t) {
    if (t == 2) return true;
    if (n % 2 == 0) return false;
    return t == (n + 1) / 2 || t == n - 1;
}

std::vector<ScanFinding> conjecture_scan(int n_min, int n_max, int jobs) {
    if (n_min > n_max || n_min < 4)
        throw error(errc::unsupported_params, "need 4 <= n_min <= n_max");
    if (n_max > 20)
        throw error(errc::field_too_large, "scan limited to n <= 20");
    std::vector<ScanFinding> out;
    for (int n = n_min; n <= n_max; ++n) {
        const FieldSpec f(n);
        for (int t = 2; t <= n - 1; ++t) {
            const auto table = delta_table_kernel(f, t, jobs);
            ScanFinding sf;
            sf.n = n;
            sf.t = t;
            sf.delta = *std::max_element(table.begin(), table.end());
            sf.apn = sf.delta == 2;
            out.push_back(sf);
        }
    }
    return out;
}

std::vector<ScanFinding> conjecture_counterexamples(const std::vector<ScanFinding>& findings) {
    std::vector<ScanFinding> out;
    for (const auto& sf : findings)
        if (sf.apn && !conjecture_allows(sf.n, sf.t)) out.push_back(sf);
    return out;
}

DifferentialSpectrum apn_consequence_spectrum(int n, int t) {
    const FieldSpec f(n);
    if (t < 2 || t > n - 1) throw error(errc::t_out_of_range, "need 2 <= t <= n-1");
    const auto table = delta_table_kernel(f, t);
    const std::uint64_t delta_t = *std::max_element(table.begin(), table.end());
    const int s = n - t + 1;
    const std::uint64_t d = (std::uint64_t(1) << s) - 1;
    std::map<std::uint64_t, std::uint64_t> omega;

    if (delta_t == 2) {
        if (n % 2) {
            // Both G_t and G_s are APN permutations.
            omega[0] = std::uint64_t(1) << (n - 1);
            omega[2] = std::uint64_t(1) << (n - 1);
            return finish_closed_form(n, d, std::move(omega), 0, 2);
        }
        // Even n: G_s is a differentially 4-uniform permutation.
        omega[4] = 1;
        omega[2] = (std::uint64_t(1) << (n - 1)) - 2;
        omega[0] = (std::uint64_t(1) << (n - 1)) + 1;
        return finish_closed_form(n, d, std::move(omega), 0, 4);
    }
    if (delta_t == 4) {
        if (n % 2)
            throw error(errc::precondition_not_met,
                        "delta(G_t) = 4 cannot occur for odd n");
        // G_s is APN with delta_s(0) = delta_s(1) = 2.
        omega[0] = std::uint64_t(1) << (n - 1);
        omega[2] = std::uint64_t(1) << (n - 1);
        return finish_closed_form(n, d, std::move(omega), 2, 2);
    }
    throw error(errc::precondition_not_met,
                "G_t is neither APN nor differentially 4-uniform");
}

} // namespace diffspec
