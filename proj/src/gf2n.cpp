// gf2n.cpp

#include "diffspec/gf2n.hpp"

#include <bit>

namespace diffspec {

const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::reducible_modulus:   return "REDUCIBLE_MODULUS";
        case errc::degree_mismatch:     return "DEGREE_MISMATCH";
        case errc::not_in_subfield:     return "NOT_IN_SUBFIELD";
        case errc::t_out_of_range:      return "T_OUT_OF_RANGE";
        case errc::zero_input:          return "ZERO_INPUT";
        case errc::field_too_large:     return "FIELD_TOO_LARGE";
        case errc::non_integer_result:  return "NON_INTEGER_RESULT";
        case errc::unsupported_params:  return "UNSUPPORTED_PARAMS";
        case errc::zero_constant:       return "ZERO_CONSTANT";
        case errc::precondition_not_met:return "PRECONDITION_NOT_MET";
    }
    return "UNKNOWN";
}

namespace {

int poly_degree(poly128 p) {
    int d = -1; // degree of the zero polynomial, by convention here
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

poly128 poly_mod(poly128 a, poly128 m) {
    const int dm = poly_degree(m);
    int da = poly_degree(a);
    while (da >= dm) {
        a ^= m << (da - dm);
        da = poly_degree(a);
    }
    return a;
}

poly128 poly_gcd(poly128 a, poly128 b) {
    while (b) {
        poly128 r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

// (a * b) mod m for polynomial degrees < 64; the shifted accumulator is
// reduced eagerly so nothing outgrows 128 bits.
poly128 poly_mulmod(poly128 a, poly128 b, poly128 m) {
    const int dm = poly_degree(m);
    poly128 r = 0;
    a = poly_mod(a, m);
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> dm) & 1) a ^= m;
    }
    return r;
}

} // namespace

bool is_irreducible(poly128 poly, int n) {
    if (n < 1 || poly_degree(poly) != n) return false;
    if ((poly & 1) == 0) return n == 1 && poly == 2; // x itself
    // f has a factor of degree d <= n/2 iff gcd(x^(2^d) - x, f) != 1.
    poly128 x = 2;
    poly128 xq = x;
    for (int k = 1; k <= n / 2; ++k) {
        xq = poly_mulmod(xq, xq, poly);
        if (poly_gcd(xq ^ x, poly) != 1) return false;
    }
    return true;
}

poly128 default_modulus(int n) {
    const poly128 lo = poly128(1) << n;
    for (poly128 p = lo | 1; p < (lo << 1); p += 2) {
        if (is_irreducible(p, n)) return p;
    }
    // Unreachable: an irreducible polynomial exists for every degree.
    throw error(errc::reducible_modulus, "no irreducible polynomial found");
}

std::string poly_to_hex(poly128 p) {
    static const char digits[] = "0123456789abcdef";
    std::string s;
    do {
        s.insert(s.begin(), digits[unsigned(p & 0xf)]);
        p >>= 4;
    } while (p);
    return "0x" + s;
}

poly128 poly_from_hex(const std::string& s) {
    std::size_t i = 0;
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) i = 2;
    if (i >= s.size()) throw error(errc::degree_mismatch, "empty modulus string");
    poly128 p = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw error(errc::degree_mismatch, "bad hex digit in modulus");
        if (p >> 124) throw error(errc::degree_mismatch, "modulus too large");
        p = (p << 4) | poly128(v);
    }
    return p;
}

FieldSpec::FieldSpec(int n) : FieldSpec(n, default_modulus(n)) {}

FieldSpec::FieldSpec(int n, poly128 modulus) : n_(n), modulus_(modulus) {
    if (n < 2 || n > max_degree)
        throw error(errc::degree_mismatch, "field degree must be in [2, 64]");
    if (poly_degree(modulus) != n)
        throw error(errc::degree_mismatch, "modulus degree != n");
    if ((modulus & 1) == 0)
        throw error(errc::reducible_modulus, "constant term of modulus is zero");
    if (!is_irreducible(modulus, n))
        throw error(errc::reducible_modulus, "modulus factors over F_2");
    init();
}

void FieldSpec::init() {
    mask_ = (n_ == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n_) - 1);
    top_ = std::uint64_t(1) << (n_ - 1);
    modulus_low_ = FieldElement(modulus_) & mask_;
    trace_mask_ = 0;
    for (int j = 0; j < n_; ++j) {
        FieldElement basis = std::uint64_t(1) << j;
        // Tr(x^j) by direct summation of Frobenius powers.
        FieldElement acc = 0, y = basis;
        for (int i = 0; i < n_; ++i) {
            acc ^= y;
            y = mul(y, y);
        }
        if (acc & 1) trace_mask_ |= basis;
    }
}

FieldElement FieldSpec::mul(FieldElement x, FieldElement y) const noexcept {
    // Shift-and-add with reduction folded into the multiply-by-x step.
    FieldElement r = 0;
    while (y) {
        if (y & 1) r ^= x;
        y >>= 1;
        const bool carry = (x & top_) != 0;
        x = (x << 1) & mask_;
        if (carry) x ^= modulus_low_;
    }
    return r;
}

FieldElement FieldSpec::pow(FieldElement x, std::uint64_t e) const noexcept {
    FieldElement r = 1;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

FieldElement FieldSpec::frobenius(FieldElement x, int k) const noexcept {
    for (int i = 0; i < k; ++i) x = mul(x, x);
    return x;
}

FieldElement FieldSpec::inv(FieldElement x) const {
    if (x == 0) throw error(errc::zero_input, "inverse of zero");
    return pow(x, order() - 1); // x^(2^n - 2)
}

int FieldSpec::trace(FieldElement x) const noexcept {
    return std::popcount(x & trace_mask_) & 1;
}

int FieldSpec::subfield_trace(FieldElement x, int m) const {
    if (m < 1 || n_ % m != 0)
        throw error(errc::not_in_subfield, "m does not divide n");
    if (frobenius(x, m) != x)
        throw error(errc::not_in_subfield, "element not in F_{2^m}");
    FieldElement acc = 0, y = x;
    for (int i = 0; i < m; ++i) {
        acc ^= y;
        y = mul(y, y);
    }
    return int(acc & 1); // acc lies in F_2 when x is in F_{2^m}
}

FieldSpec make_field(int n) { return FieldSpec(n); }
FieldSpec make_field(int n, poly128 modulus) { return FieldSpec(n, modulus); }

} // namespace diffspec
