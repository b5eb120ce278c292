// Differential spectrum tests. Derived expected values are frozen from the
// brute-force oracle itself where tagged, and from direct recomputation in
// this file where an independent route exists.

#include <doctest.h>

#include <cstdint>
#include <numeric>

#include "diffspec/spectra.hpp"

using namespace diffspec;

namespace {

// Moment identities: sum w_k = 2^n, sum k w_k = 2^n, w_k = 0 for odd k.
void check_moments(const DifferentialSpectrum& sp) {
    unsigned __int128 total = 0, weighted = 0;
    for (const auto& [k, w] : sp.omega) {
        REQUIRE(k % 2 == 0);
        total += w;
        weighted += (unsigned __int128)(k)*w;
    }
    const unsigned __int128 size = (unsigned __int128)(1) << sp.n;
    REQUIRE(total == size);
    REQUIRE(weighted == size);
    REQUIRE(sp.delta_max == sp.omega.rbegin()->first);
}

std::uint64_t mod_inverse(std::uint64_t d, std::uint64_t m) {
    std::int64_t r0 = std::int64_t(m), r1 = std::int64_t(d);
    std::int64_t s0 = 0, s1 = 1;
    while (r1) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    REQUIRE(r0 == 1);
    return std::uint64_t((s0 % std::int64_t(m) + std::int64_t(m)) % std::int64_t(m));
}

} // namespace

TEST_CASE("delta_point") {
    SUBCASE("cube is APN: all delta in {0, 2}") {
        for (int n : {5, 7}) {
            const FieldSpec f(n);
            for (std::uint64_t b = 0; b <= f.order(); ++b) {
                const auto v = delta_point(f, 3, b);
                REQUIRE((v == 0 || v == 2));
            }
        }
    }
    SUBCASE("x^7 over F_16 at b = 1") {
        const FieldSpec f(4);
        CHECK(delta_point(f, 7, 1) == 4); // 2^gcd(2,4)
    }
    SUBCASE("delta(0) matches the gcd formula") {
        for (int n : {4, 5, 6}) {
            const FieldSpec f(n);
            for (std::uint64_t d = 1; d < 40; ++d)
                REQUIRE(delta_point(f, d, 0) == delta_zero(f, d));
        }
        CHECK(delta_point(FieldSpec(6), 7, 0) == 6);
    }
    SUBCASE("always even") {
        const FieldSpec f(6);
        for (std::uint64_t b = 0; b < 64; ++b) CHECK(delta_point(f, 13, b) % 2 == 0);
    }
}

TEST_CASE("delta_zero") {
    CHECK(delta_zero(FieldSpec(4), 3) == 2);
    CHECK(delta_zero(FieldSpec(6), 3) == 2);
    CHECK(delta_zero(FieldSpec(8), 5) == 4);
    CHECK(delta_zero(FieldSpec(7), 6) == 0);  // gcd(6, 127) = 1
    CHECK(delta_zero(FieldSpec(6), 7) == 6);  // 7 | 63
    CHECK_THROWS_AS(delta_zero(FieldSpec(6), 0), error);
}

TEST_CASE("brute-force spectra of x^7") {
    const auto s4 = spectrum_bruteforce(FieldSpec(4), 7);
    CHECK(s4.omega == std::map<std::uint64_t, std::uint64_t>{{0, 9}, {2, 6}, {4, 1}});
    CHECK(s4.delta0 == 0);
    CHECK(s4.delta1 == 4);
    CHECK(s4.locally_apn); // x^7 over F_16 is the inverse function

    const auto s5 = spectrum_bruteforce(FieldSpec(5), 7);
    CHECK(s5.omega == std::map<std::uint64_t, std::uint64_t>{{0, 16}, {2, 16}});
    CHECK(s5.delta_max == 2); // APN

    const auto s6 = spectrum_bruteforce(FieldSpec(6), 7);
    CHECK(s6.omega ==
          std::map<std::uint64_t, std::uint64_t>{{0, 35}, {2, 27}, {4, 1}, {6, 1}});
    check_moments(s4);
    check_moments(s5);
    check_moments(s6);
}

TEST_CASE("moment identities hold for every computed spectrum") {
    for (int n = 2; n <= 8; ++n) {
        const FieldSpec f(n);
        for (std::uint64_t d = 1; d <= f.order(); d += (n <= 6 ? 1 : 7))
            check_moments(spectrum_bruteforce(f, d));
    }
}

TEST_CASE("kernel path equals brute force for d = 2^t - 1") {
    for (int n = 4; n <= 10; ++n) {
        const FieldSpec f(n);
        for (int t = 2; t <= n - 1; ++t) {
            const auto kernel = spectrum_kernel(f, t);
            const auto brute = spectrum_bruteforce(f, (std::uint64_t(1) << t) - 1);
            REQUIRE(kernel == brute);
            REQUIRE(kernel.delta0 ==
                    (std::uint64_t(1) << std::gcd(t, n)) - 2);
            REQUIRE(kernel.delta1 == std::uint64_t(1) << std::gcd(t - 1, n));
        }
    }
}

TEST_CASE("inverse exponent spectrum for even n") {
    for (int n : {4, 6, 8}) {
        const auto sp = spectrum_kernel(FieldSpec(n), n - 1);
        CHECK(sp.omega_at(4) == 1);
        CHECK(sp.omega_at(2) == (std::uint64_t(1) << (n - 1)) - 2);
        CHECK(sp.omega_at(0) == (std::uint64_t(1) << (n - 1)) + 1);
    }
}

TEST_CASE("modulus independence") {
    const FieldSpec f1(8, 0x11b), f2(8, 0x11d);
    for (std::uint64_t d : {3u, 7u, 29u, 127u, 254u}) {
        const auto a = spectrum_bruteforce(f1, d);
        const auto b = spectrum_bruteforce(f2, d);
        CHECK(a.omega == b.omega);
        CHECK(a.delta0 == b.delta0);
        CHECK(a.delta1 == b.delta1);
        CHECK(a.delta_max == b.delta_max);
        CHECK(a.locally_apn == b.locally_apn);
    }
}

TEST_CASE("cyclotomic and inverse equivalence preserve the spectrum") {
    for (int n = 3; n <= 10; ++n) {
        const FieldSpec f(n);
        const std::uint64_t m = f.order();
        for (std::uint64_t d = 1; d < m; ++d) {
            const auto sd = spectrum_bruteforce(f, d);
            const auto s2d = spectrum_bruteforce(f, (2 * d) % m);
            REQUIRE(sd.omega == s2d.omega);
            if (std::gcd(d, m) == 1) {
                const auto sinv = spectrum_bruteforce(f, mod_inverse(d, m));
                REQUIRE(sd.omega == sinv.omega);
            }
        }
    }
}

TEST_CASE("exponent reduction for reporting") {
    const FieldSpec f(4);
    CHECK(spectrum_bruteforce(f, 7 + 15).d == 7);
    CHECK(spectrum_bruteforce(f, 15).d == 15);
    CHECK(spectrum_bruteforce(f, 30).d == 15);
    // Unreduced evaluation agrees with the reduced exponent.
    CHECK(spectrum_bruteforce(f, 7 + 15).omega == spectrum_bruteforce(f, 7).omega);
}

TEST_CASE("is_locally_apn") {
    // Inverse exponent, any n.
    for (int n = 3; n <= 10; ++n)
        CHECK(is_locally_apn(FieldSpec(n), (std::uint64_t(1) << n) - 2));
    // Half exponent for even n > 4.
    for (int n : {6, 8, 10})
        CHECK(is_locally_apn(FieldSpec(n), (std::uint64_t(1) << (n / 2)) - 1));
    // d = 7, n = 6: the unique delta = 6 sits at b = 0, which lies in F_2,
    // so the function is locally-APN (the half-exponent theorem at t = 3).
    CHECK(is_locally_apn(FieldSpec(6), 7));
    // Gold exponent d = 9 over F_64 is not: delta(b) = 8 occurs off F_2.
    CHECK_FALSE(is_locally_apn(FieldSpec(6), 9));
}

TEST_CASE("restricted multiset") {
    SUBCASE("mass and symmetry across (t, n-t+1)") {
        for (int n = 4; n <= 10; ++n) {
            const FieldSpec f(n);
            for (int t = 2; t <= n - 1; ++t) {
                const auto mt = restricted_multiset(f, (std::uint64_t(1) << t) - 1);
                const auto ms = restricted_multiset(
                    f, (std::uint64_t(1) << (n - t + 1)) - 1);
                REQUIRE(mt.values == ms.values);
                std::uint64_t mass = 0;
                for (const auto& [v, c] : mt.values) mass += c;
                REQUIRE(mass == f.order() - 1);
            }
        }
    }
    SUBCASE("d = 7, n = 6: restricted values stay within {0, 2}") {
        const auto rm = restricted_multiset(FieldSpec(6), 7);
        CHECK(rm.values ==
              std::map<std::uint64_t, std::uint64_t>{{0, 35}, {2, 27}});
    }
}

TEST_CASE("differential uniformity shape (either 2^r - 2 or 2^r with multiplicity 1)") {
    for (int n = 4; n <= 10; ++n) {
        const FieldSpec f(n);
        for (int t = 2; t <= n - 1; ++t) {
            const auto sp = spectrum_kernel(f, t);
            const std::uint64_t dm = sp.delta_max;
            const bool is_pow2_minus2 = ((dm + 2) & (dm + 1)) == 0;
            const bool is_pow2 = dm != 0 && (dm & (dm - 1)) == 0;
            REQUIRE((is_pow2_minus2 || is_pow2));
            if (!is_pow2_minus2) {
                // delta(G_t) = 2^r appears once, at b = 1.
                REQUIRE(sp.omega_at(dm) == 1);
                REQUIRE(dm == sp.delta1);
                REQUIRE(dm == std::uint64_t(1) << std::gcd(t - 1, n));
            }
        }
    }
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(spectrum_bruteforce(FieldSpec(26), 7), error);
    CHECK_THROWS_AS(spectrum_bruteforce(FieldSpec(6), 0), error);
    CHECK_THROWS_AS(delta_table_kernel(FieldSpec(6), 1), error);
    try {
        spectrum_bruteforce(FieldSpec(26), 7);
        FAIL("expected error");
    } catch (const error& e) {
        CHECK(e.code() == errc::field_too_large);
    }
}

TEST_CASE("parallel brute force merges deterministically") {
    const FieldSpec f(9);
    CHECK(spectrum_bruteforce(f, 73, 1) == spectrum_bruteforce(f, 73, 4));
    CHECK(delta_table_kernel(f, 4, 1) == delta_table_kernel(f, 4, 3));
}
