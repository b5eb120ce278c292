// formulas.hpp
//
// Closed-form evaluators around the x^(2^t-1) family: the Kloosterman sum
// K(1) (direct sum and the Carlitz binomial formula), cubic-equation root
// machinery, the complete x^7 spectrum and its relatives (exponents
// 2^(n-2)-1, 2^(n/2)-1, 2^(n/2+1)-1, inverse), weight-3/4 counts of the
// cyclic code with defining set {1,7}, the Aubry-Rodier exponent window,
// and the APN conjecture scan.
//
// Formula arithmetic runs in exact big integers (boost cpp_int); every
// division by 3, 6, 8, 24, 2^(n-1) is checked exact and an inexact division
// throws NON_INTEGER_RESULT.

#ifndef DIFFSPEC_FORMULAS_HPP
#define DIFFSPEC_FORMULAS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "diffspec/gf2n.hpp"
#include "diffspec/spectra.hpp"

namespace diffspec {

using bigint = boost::multiprecision::cpp_int;

enum class KloostermanMethod { direct, carlitz };

struct KloostermanValue {
    int n = 0;
    std::int64_t value = 0;
    bool operator==(const KloostermanValue&) const = default;
};

// K(1) = sum over x of (-1)^Tr(x^-1 + x), the x = 0 term taken as +1.
// direct: exhaustive sum, n <= 24. carlitz: binomial formula, any n <= 64.
KloostermanValue kloosterman(const FieldSpec& f, KloostermanMethod method);
KloostermanValue kloosterman_carlitz(int n);

// All roots of x^3 + a x + b over F_{2^n}, ascending; b != 0.
std::vector<FieldElement> cubic_roots(const FieldSpec& f, FieldElement a,
                                      FieldElement b);

struct CubicCensus {
    int n = 0;
    std::uint64_t m0 = 0, m1 = 0, m3 = 0; // #a != 0 with 0 / 1 / 3 roots of x^3+x+a
    bool operator==(const CubicCensus&) const = default;
};

// Closed-form census; cross-checked against exhaustive root counting for
// n <= 16 before returning.
CubicCensus cubic_census(const FieldSpec& f);
CubicCensus cubic_census_exhaustive(const FieldSpec& f);

// #{b != 1 : x^8 + b x^2 + (b+1) x has no roots outside {0,1}}, which is
// omega_0 of the x^7 spectrum.
std::uint64_t nu0(const FieldSpec& f);
std::uint64_t nu0_exhaustive(const FieldSpec& f);

enum class SpectrumFamily { x7, n_minus_2, half, half_plus_1, inverse };

// Exact closed-form spectrum of the family member over F_{2^n}; the returned
// object satisfies the moment identities sum w = 2^n, sum k*w_k = 2^n.
DifferentialSpectrum closed_form_spectrum(int n, SpectrumFamily family);

// Exponent of the family member for a given n (d = 2^t - 1 in every case).
int family_t(int n, SpectrumFamily family);

struct HalfOddReport {
    int n = 0;
    int t = 0; // (n-1)/2
    DifferentialSpectrum spectrum;
    std::map<std::uint64_t, std::uint64_t> restricted; // delta(b) histogram, b outside F_2
    bool value_set_ok = false; // restricted values all in {0, 2, 6}
};

// Odd-half exponent t = (n-1)/2, odd n > 3: delta(0) = 0,
// delta(1) = 8 when 3 | n and 2 otherwise, everything else in {0, 2, 6}.
// The omega counts are empirical (no closed form exists for them).
HalfOddReport half_odd_valueset(const FieldSpec& f);

// Four-root test for x^(2^t) + b x^2 + (b+1) x with n = 2t, b outside F_2:
// true iff Tr_t(b^-(2^t+1)) = 1 and (b+1)^(2^t+1) != 1.
bool four_root_criterion(const FieldSpec& f, FieldElement b);

struct CodeWeightCounts {
    int n = 0;
    bigint b3, b4; // codewords of weight 3 / 4, cyclic code with defining set {1,7}
    bool operator==(const CodeWeightCounts&) const = default;
};

// Closed forms B_3 = 0 (odd n) or (2^n-1)/3 (even n), B_4 = (2^n-1) * omega_6
// of x^7; cross-checked against direct support enumeration for n <= 10.
CodeWeightCounts code_weights(int n);
CodeWeightCounts code_weights_enumerated(const FieldSpec& f);

struct UniformityWindow {
    int n = 0;
    double t_lo = 0, t_hi = 0;
};

// Exponent window log2(2^(n/4) + 5.6) <= t <= n+1 - log2(2^(n/4) + 5.6)
// that must contain every 3 <= t <= n-2 with delta(G_t) <= 4.
UniformityWindow uniformity_window(int n);

struct ScanFinding {
    int n = 0;
    int t = 0;
    std::uint64_t delta = 0;
    bool apn = false;
    bool operator==(const ScanFinding&) const = default;
};

// The conjectured APN parameter set: t = 2, plus t in {(n+1)/2, n-1} for odd n.
bool conjecture_allows(int n, int t);

// Kernel-path sweep of delta(G_t) for every n in [n_min, n_max] and every
// 2 <= t <= n-1. One finding per (n, t).
std::vector<ScanFinding> conjecture_scan(int n_min, int n_max, int jobs = 1);

// Findings that are APN outside the conjectured set.
std::vector<ScanFinding> conjecture_counterexamples(const std::vector<ScanFinding>& findings);

// Forced spectrum of G_s, s = n-t+1, given that G_t is APN (either parity)
// or differentially 4-uniform (even n); PRECONDITION_NOT_MET otherwise.
DifferentialSpectrum apn_consequence_spectrum(int n, int t);

} // namespace diffspec

#endif
