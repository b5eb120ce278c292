// spectra.hpp
//
// Differential spectra of power functions x -> x^d over F_{2^n}. For a power
// function everything is determined by the input difference a = 1, so
// delta(b) counts solutions of (x+1)^d + x^d = b. Two routes are provided:
// exhaustive enumeration for any d, and the kernel route for d = 2^t - 1,
// where delta(b) = 2^dim Ker(P_{t,b}) - 2 for b != 1 and delta(1) =
// 2^gcd(t-1,n).

#ifndef DIFFSPEC_SPECTRA_HPP
#define DIFFSPEC_SPECTRA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "diffspec/gf2n.hpp"

namespace diffspec {

struct DifferentialSpectrum {
    int n = 0;
    std::uint64_t d = 0; // reduced mod 2^n - 1 for reporting
    std::string modulus_hex;
    std::map<std::uint64_t, std::uint64_t> omega; // i -> omega_i, nonzero entries
    std::uint64_t delta_max = 0;
    std::uint64_t delta0 = 0;
    std::uint64_t delta1 = 0;
    bool locally_apn = false; // delta(b) <= 2 for all b outside F_2

    std::uint64_t omega_at(std::uint64_t i) const {
        auto it = omega.find(i);
        return it == omega.end() ? 0 : it->second;
    }
    bool operator==(const DifferentialSpectrum&) const = default;
};

struct RestrictedMultiset {
    int n = 0;
    std::uint64_t d = 0;
    std::map<std::uint64_t, std::uint64_t> values; // delta(b) histogram, b outside F_2
    bool operator==(const RestrictedMultiset&) const = default;
};

// Canonical exponent for reporting: d mod (2^n - 1), with the convention that
// a nonzero multiple of 2^n - 1 reports as 2^n - 1.
std::uint64_t reduce_exponent(const FieldSpec& f, std::uint64_t d);

// delta(b) for one b, by enumeration over all x.
std::uint64_t delta_point(const FieldSpec& f, std::uint64_t d, FieldElement b);

// delta(0) = gcd(d, 2^n - 1) - 1, no enumeration.
std::uint64_t delta_zero(const FieldSpec& f, std::uint64_t d);

// delta(b) for every b in one pass over x; index = b.
std::vector<std::uint64_t> delta_table_bruteforce(const FieldSpec& f,
                                                  std::uint64_t d, int jobs = 1);

// Same table via kernel dimensions, for d = 2^t - 1.
std::vector<std::uint64_t> delta_table_kernel(const FieldSpec& f, int t,
                                              int jobs = 1);

DifferentialSpectrum spectrum_bruteforce(const FieldSpec& f, std::uint64_t d,
                                         int jobs = 1);
DifferentialSpectrum spectrum_kernel(const FieldSpec& f, int t, int jobs = 1);

bool is_locally_apn(const FieldSpec& f, std::uint64_t d);

RestrictedMultiset restricted_multiset(const FieldSpec& f, std::uint64_t d);

// Assembles a DifferentialSpectrum from a full delta(b) table.
DifferentialSpectrum spectrum_from_table(const FieldSpec& f, std::uint64_t d,
                                         const std::vector<std::uint64_t>& table);

} // namespace diffspec

#endif
