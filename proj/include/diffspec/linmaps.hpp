// linmaps.hpp
//
// F_2-linear endomorphisms of F_{2^n} given by linearized polynomials
// sum c_i X^(2^i). A map is materialized as its n x n bit-matrix, stored as
// one word per column: cols[j] = image of the basis element x^j. Kernel
// dimension is n - rank, rank by word-packed Gaussian elimination.
//
// The family of interest is P_{t,b}(x) = x^(2^t) + b x^2 + (b+1) x and its
// adjoint P*_{t,b}(x) = x^(2^s) + (b+1)^2 x^2 + b x with s = n - t + 1,
// which satisfies Tr(a * P(x)) = Tr(x^2 * P*(a)) and shares P's kernel
// dimension.

#ifndef DIFFSPEC_LINMAPS_HPP
#define DIFFSPEC_LINMAPS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "diffspec/gf2n.hpp"

namespace diffspec {

class LinearizedMap {
public:
    // coeffs[i] is the coefficient of X^(2^i).
    LinearizedMap(const FieldSpec& f, const std::vector<FieldElement>& coeffs,
                  std::string label);

    FieldElement apply(FieldElement x) const noexcept;
    int kernel_dim() const noexcept;

    const FieldSpec& field() const noexcept { return *field_; }
    const std::string& label() const noexcept { return label_; }
    const std::vector<FieldElement>& columns() const noexcept { return cols_; }

    // Fault injection for the verification harness: flips matrix entry
    // (row, col), i.e. bit `row` of the image of basis element x^col.
    void flip_matrix_bit(int row, int col);

private:
    const FieldSpec* field_;
    std::vector<FieldElement> cols_;
    std::string label_;
};

// Rank over F_2 of a set of column words.
int gf2_rank(const std::vector<FieldElement>& cols);

LinearizedMap p_poly(const FieldSpec& f, int t, FieldElement b);
LinearizedMap adjoint(const FieldSpec& f, int t, FieldElement b);

// Kernel dimensions without materializing LinearizedMap objects; these are
// the hot paths behind kernel_profile and the kernel-based spectrum.
int p_poly_kernel_dim(const FieldSpec& f, int t, FieldElement b);
int adjoint_kernel_dim(const FieldSpec& f, int t, FieldElement b);

// pi(a, b) = (a^(2^s), a*b / a^(2^s) + 1), a permutation of F*_{2^n} x F_{2^n}
// carrying P*_{t,b} roots to P*_{s,beta} roots for t = n - s + 1.
std::pair<FieldElement, FieldElement> pi_map(const FieldSpec& f, int s,
                                             FieldElement a, FieldElement b);
std::pair<FieldElement, FieldElement> pi_inverse(const FieldSpec& f, int s,
                                                 FieldElement alpha,
                                                 FieldElement beta);

struct KernelProfile {
    int n = 0;
    int t = 0;
    std::map<int, std::uint64_t> counts; // i -> #{b : dim Ker(P_{t,b}) = i}, nonzero entries
};

KernelProfile kernel_profile(const FieldSpec& f, int t, int jobs = 1);

// Precomputed per-(f, t) data for sweeping b. dim_for(b) writes nothing
// observable besides its result, so one sweeper may be shared across threads.
class PPolySweeper {
public:
    PPolySweeper(const FieldSpec& f, int t);
    int dim_for(FieldElement b) const noexcept;

private:
    const FieldSpec* field_;
    int n_;
    std::vector<FieldElement> frob_; // (x^j)^(2^t)
    std::vector<FieldElement> quad_; // (x^j)^2 + x^j
};

} // namespace diffspec

#endif
