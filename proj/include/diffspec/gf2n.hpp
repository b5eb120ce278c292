// gf2n.hpp
//
// Exact arithmetic in F_{2^n}, polynomial basis. Elements are n-bit values in
// a uint64_t, least significant bit = constant coefficient. The modulus is a
// degree-n irreducible polynomial; its (n+1)-bit encoding is kept in an
// unsigned __int128 so that n = 64 works.

#ifndef DIFFSPEC_GF2N_HPP
#define DIFFSPEC_GF2N_HPP

#include <cstdint>
#include <string>

#include "diffspec/errors.hpp"

namespace diffspec {

using FieldElement = std::uint64_t;
using poly128 = unsigned __int128;

// Irreducibility of a degree-n polynomial over F_2, tested via
// gcd(x^(2^k) - x, f) = 1 for all 1 <= k <= n/2.
bool is_irreducible(poly128 poly, int n);

// Lexicographically smallest irreducible polynomial of degree n
// (smallest integer encoding with degree-n and constant bits set).
poly128 default_modulus(int n);

std::string poly_to_hex(poly128 p);
poly128 poly_from_hex(const std::string& s); // accepts optional 0x prefix

class FieldSpec {
public:
    static constexpr int max_degree = 64;            // formula-only paths
    static constexpr int max_exhaustive_degree = 24; // full 2^n sweeps

    explicit FieldSpec(int n);          // default modulus
    FieldSpec(int n, poly128 modulus);  // validated: degree n, irreducible

    int degree() const noexcept { return n_; }
    poly128 modulus() const noexcept { return modulus_; }
    std::string modulus_hex() const { return poly_to_hex(modulus_); }
    FieldElement element_mask() const noexcept { return mask_; }

    // 2^n - 1, the multiplicative group order (fits uint64_t for n <= 64).
    std::uint64_t order() const noexcept { return mask_; }

    bool is_element(FieldElement x) const noexcept { return (x & ~mask_) == 0; }

    FieldElement mul(FieldElement x, FieldElement y) const noexcept;
    FieldElement sqr(FieldElement x) const noexcept { return mul(x, x); }
    FieldElement pow(FieldElement x, std::uint64_t e) const noexcept;
    FieldElement frobenius(FieldElement x, int k) const noexcept; // x^(2^k)
    FieldElement inv(FieldElement x) const;                       // x != 0

    int trace(FieldElement x) const noexcept; // absolute trace, in {0,1}
    int subfield_trace(FieldElement x, int m) const; // Tr_m on F_{2^m}

    bool operator==(const FieldSpec& o) const noexcept {
        return n_ == o.n_ && modulus_ == o.modulus_;
    }

private:
    void init();

    int n_;
    poly128 modulus_;
    FieldElement modulus_low_; // modulus with the degree-n bit cleared
    FieldElement mask_;        // n low bits
    FieldElement top_;         // bit n-1
    FieldElement trace_mask_;  // bit j set iff Tr(x^j) = 1
};

// Spec-facing constructor: validates degree and irreducibility.
FieldSpec make_field(int n);
FieldSpec make_field(int n, poly128 modulus);

} // namespace diffspec

#endif
