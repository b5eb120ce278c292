// linmaps.cpp

#include "diffspec/linmaps.hpp"

#include <array>
#include <bit>
#include <sstream>
#include <thread>

namespace diffspec {

namespace {

void require_t_in_range(const FieldSpec& f, int t) {
    if (t < 2 || t > f.degree() - 1)
        throw error(errc::t_out_of_range, "need 2 <= t <= n-1");
}

} // namespace

LinearizedMap::LinearizedMap(const FieldSpec& f,
                             const std::vector<FieldElement>& coeffs,
                             std::string label)
    : field_(&f), cols_(f.degree(), 0), label_(std::move(label)) {
    const int n = f.degree();
    for (int j = 0; j < n; ++j) {
        FieldElement basis = std::uint64_t(1) << j;
        FieldElement image = 0;
        FieldElement power = basis; // basis^(2^i)
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i]) image ^= f.mul(coeffs[i], power);
            power = f.mul(power, power);
        }
        cols_[j] = image;
    }
}

FieldElement LinearizedMap::apply(FieldElement x) const noexcept {
    FieldElement y = 0;
    while (x) {
        int j = std::countr_zero(x);
        y ^= cols_[std::size_t(j)];
        x &= x - 1;
    }
    return y;
}

int gf2_rank(const std::vector<FieldElement>& cols) {
    std::array<FieldElement, 64> pivot{};
    int rank = 0;
    for (FieldElement v : cols) {
        while (v) {
            int bit = 63 - std::countl_zero(v);
            if (pivot[std::size_t(bit)] == 0) {
                pivot[std::size_t(bit)] = v;
                ++rank;
                break;
            }
            v ^= pivot[std::size_t(bit)];
        }
    }
    return rank;
}

int LinearizedMap::kernel_dim() const noexcept {
    return field_->degree() - gf2_rank(cols_);
}

void LinearizedMap::flip_matrix_bit(int row, int col) {
    const int n = field_->degree();
    if (row < 0 || row >= n || col < 0 || col >= n)
        throw error(errc::unsupported_params, "matrix bit out of range");
    cols_[std::size_t(col)] ^= std::uint64_t(1) << row;
}

LinearizedMap p_poly(const FieldSpec& f, int t, FieldElement b) {
    require_t_in_range(f, t);
    std::vector<FieldElement> coeffs(std::size_t(t) + 1, 0);
    coeffs[0] = b ^ 1; // (b+1) x
    coeffs[1] = b;     // b x^2
    coeffs[std::size_t(t)] ^= 1;
    std::ostringstream label;
    label << "P(" << t << ",0x" << std::hex << b << ")";
    return LinearizedMap(f, coeffs, label.str());
}

LinearizedMap adjoint(const FieldSpec& f, int t, FieldElement b) {
    require_t_in_range(f, t);
    const int s = f.degree() - t + 1;
    std::vector<FieldElement> coeffs(std::size_t(s) + 1, 0);
    coeffs[0] = b;
    coeffs[1] = f.mul(b ^ 1, b ^ 1); // (b+1)^2 x^2
    coeffs[std::size_t(s)] ^= 1;
    std::ostringstream label;
    label << "P*(" << t << ",0x" << std::hex << b << ")";
    return LinearizedMap(f, coeffs, label.str());
}

PPolySweeper::PPolySweeper(const FieldSpec& f, int t)
    : field_(&f), n_(f.degree()), frob_(std::size_t(n_)), quad_(std::size_t(n_)) {
    require_t_in_range(f, t);
    for (int j = 0; j < n_; ++j) {
        FieldElement basis = std::uint64_t(1) << j;
        frob_[std::size_t(j)] = f.frobenius(basis, t) ^ basis;
        quad_[std::size_t(j)] = f.sqr(basis) ^ basis;
    }
}

int PPolySweeper::dim_for(FieldElement b) const noexcept {
    // Column j of P_{t,b} is (x^j)^(2^t) + x^j + b ((x^j)^2 + x^j); rank is
    // eliminated in place on the stack.
    std::array<FieldElement, 64> pivot{};
    int rank = 0;
    for (int j = 0; j < n_; ++j) {
        FieldElement v = frob_[std::size_t(j)] ^ field_->mul(b, quad_[std::size_t(j)]);
        while (v) {
            int bit = 63 - std::countl_zero(v);
            if (pivot[std::size_t(bit)] == 0) {
                pivot[std::size_t(bit)] = v;
                ++rank;
                break;
            }
            v ^= pivot[std::size_t(bit)];
        }
    }
    return n_ - rank;
}

int p_poly_kernel_dim(const FieldSpec& f, int t, FieldElement b) {
    return PPolySweeper(f, t).dim_for(b);
}

int adjoint_kernel_dim(const FieldSpec& f, int t, FieldElement b) {
    return adjoint(f, t, b).kernel_dim();
}

std::pair<FieldElement, FieldElement> pi_map(const FieldSpec& f, int s,
                                             FieldElement a, FieldElement b) {
    if (a == 0) throw error(errc::zero_input, "pi is defined on a != 0");
    FieldElement alpha = f.frobenius(a, s);
    FieldElement beta = f.mul(f.mul(a, b), f.inv(alpha)) ^ 1;
    return {alpha, beta};
}

std::pair<FieldElement, FieldElement> pi_inverse(const FieldSpec& f, int s,
                                                 FieldElement alpha,
                                                 FieldElement beta) {
    if (alpha == 0) throw error(errc::zero_input, "pi^-1 is defined on alpha != 0");
    FieldElement a = f.frobenius(alpha, f.degree() - s);
    FieldElement b = f.mul(f.mul(alpha, beta ^ 1), f.inv(a));
    return {a, b};
}

namespace {

// Deterministic partitioned merge: each job handles a contiguous b-range and
// the per-range histograms are added in range order.
template <typename Fn>
void sweep_b_ranges(std::uint64_t count, int jobs, Fn per_range) {
    if (jobs < 1) jobs = 1;
    if (std::uint64_t(jobs) > count) jobs = int(count);
    std::vector<std::thread> threads;
    std::uint64_t chunk = count / std::uint64_t(jobs);
    std::uint64_t rem = count % std::uint64_t(jobs);
    std::uint64_t begin = 0;
    for (int j = 0; j < jobs; ++j) {
        std::uint64_t end = begin + chunk + (std::uint64_t(j) < rem ? 1 : 0);
        threads.emplace_back([=] { per_range(j, begin, end); });
        begin = end;
    }
    for (auto& th : threads) th.join();
}

} // namespace

KernelProfile kernel_profile(const FieldSpec& f, int t, int jobs) {
    require_t_in_range(f, t);
    if (f.degree() > FieldSpec::max_exhaustive_degree)
        throw error(errc::field_too_large, "kernel profile sweeps all 2^n values of b");

    const int n = f.degree();
    const std::uint64_t count = std::uint64_t(1) << n;
    PPolySweeper sweeper(f, t);

    if (jobs < 1) jobs = 1;
    std::vector<std::array<std::uint64_t, 65>> partial{std::size_t(jobs)};
    for (auto& h : partial) h.fill(0);

    sweep_b_ranges(count, jobs, [&](int job, std::uint64_t lo, std::uint64_t hi) {
        auto& hist = partial[std::size_t(job)];
        for (std::uint64_t b = lo; b < hi; ++b)
            ++hist[std::size_t(sweeper.dim_for(b))];
    });

    KernelProfile prof;
    prof.n = n;
    prof.t = t;
    std::array<std::uint64_t, 65> total{};
    for (const auto& h : partial)
        for (int i = 0; i <= 64; ++i) total[std::size_t(i)] += h[std::size_t(i)];
    // {0,1} lies in every kernel of P_{t,b}, so dimension 0 never occurs.
    if (total[0] != 0)
        throw std::logic_error("kernel_profile: trivial kernel for some b");
    for (int i = 1; i <= 64; ++i)
        if (total[std::size_t(i)]) prof.counts[i] = total[std::size_t(i)];
    return prof;
}

} // namespace diffspec
