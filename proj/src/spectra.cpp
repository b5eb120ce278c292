// spectra.cpp

#include "diffspec/spectra.hpp"

#include <numeric>
#include <thread>

#include "diffspec/linmaps.hpp"

namespace diffspec {

namespace {

void require_exhaustive(const FieldSpec& f) {
    if (f.degree() > FieldSpec::max_exhaustive_degree)
        throw error(errc::field_too_large,
                    "exhaustive sweep limited to n <= 24");
}

void require_positive(std::uint64_t d) {
    if (d == 0)
        throw error(errc::unsupported_params, "exponent d must be >= 1");
}

} // namespace

std::uint64_t reduce_exponent(const FieldSpec& f, std::uint64_t d) {
    const std::uint64_t m = f.order();
    std::uint64_t r = d % m;
    if (r == 0 && d != 0) r = m;
    return r;
}

std::uint64_t delta_point(const FieldSpec& f, std::uint64_t d, FieldElement b) {
    require_positive(d);
    require_exhaustive(f);
    std::uint64_t count = 0;
    const std::uint64_t size = f.order() + 1;
    for (std::uint64_t x = 0; x < size; ++x)
        if ((f.pow(x ^ 1, d) ^ f.pow(x, d)) == b) ++count;
    return count;
}

std::uint64_t delta_zero(const FieldSpec& f, std::uint64_t d) {
    require_positive(d);
    return std::gcd(d, f.order()) - 1;
}

std::vector<std::uint64_t> delta_table_bruteforce(const FieldSpec& f,
                                                  std::uint64_t d, int jobs) {
    require_positive(d);
    require_exhaustive(f);
    const std::uint64_t size = f.order() + 1;
    if (jobs < 1) jobs = 1;
    if (std::uint64_t(jobs) > size) jobs = int(size);

    // Partitioned over x ranges; histograms merge additively, so the result
    // is independent of the partition.
    std::vector<std::vector<std::uint64_t>> partial(
        std::size_t(jobs), std::vector<std::uint64_t>(size, 0));
    std::vector<std::thread> threads;
    const std::uint64_t chunk = size / std::uint64_t(jobs);
    const std::uint64_t rem = size % std::uint64_t(jobs);
    std::uint64_t begin = 0;
    for (int j = 0; j < jobs; ++j) {
        const std::uint64_t lo = begin;
        const std::uint64_t hi = lo + chunk + (std::uint64_t(j) < rem ? 1 : 0);
        begin = hi;
        threads.emplace_back([&, j, lo, hi] {
            auto& hist = partial[std::size_t(j)];
            for (std::uint64_t x = lo; x < hi; ++x)
                ++hist[f.pow(x ^ 1, d) ^ f.pow(x, d)];
        });
    }
    for (auto& th : threads) th.join();

    std::vector<std::uint64_t> table(size, 0);
    for (const auto& hist : partial)
        for (std::uint64_t b = 0; b < size; ++b) table[b] += hist[b];
    return table;
}

std::vector<std::uint64_t> delta_table_kernel(const FieldSpec& f, int t,
                                              int jobs) {
    if (t < 2 || t > f.degree() - 1)
        throw error(errc::t_out_of_range, "need 2 <= t <= n-1");
    require_exhaustive(f);
    const int n = f.degree();
    const std::uint64_t size = std::uint64_t(1) << n;
    PPolySweeper sweeper(f, t);

    std::vector<std::uint64_t> table(size, 0);
    if (jobs < 1) jobs = 1;
    if (std::uint64_t(jobs) > size) jobs = int(size);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = size / std::uint64_t(jobs);
    const std::uint64_t rem = size % std::uint64_t(jobs);
    std::uint64_t begin = 0;
    for (int j = 0; j < jobs; ++j) {
        const std::uint64_t lo = begin;
        const std::uint64_t hi = lo + chunk + (std::uint64_t(j) < rem ? 1 : 0);
        begin = hi;
        threads.emplace_back([&, lo, hi] {
            for (std::uint64_t b = lo; b < hi; ++b) {
                const int dim = sweeper.dim_for(b);
                // Roots 0 and 1 of P_{t,b} are not solutions of the
                // derivative equation unless b = 1, where they are counted.
                table[b] = (b == 1) ? (std::uint64_t(1) << dim)
                                    : (std::uint64_t(1) << dim) - 2;
            }
        });
    }
    for (auto& th : threads) th.join();
    return table;
}

DifferentialSpectrum spectrum_from_table(const FieldSpec& f, std::uint64_t d,
                                         const std::vector<std::uint64_t>& table) {
    DifferentialSpectrum sp;
    sp.n = f.degree();
    sp.d = reduce_exponent(f, d);
    sp.modulus_hex = f.modulus_hex();
    sp.delta0 = table[0];
    sp.delta1 = table[1];
    std::uint64_t restricted_max = 0;
    for (std::uint64_t b = 0; b < table.size(); ++b) {
        ++sp.omega[table[b]];
        if (table[b] > sp.delta_max) sp.delta_max = table[b];
        if (b >= 2 && table[b] > restricted_max) restricted_max = table[b];
    }
    sp.locally_apn = restricted_max <= 2;
    return sp;
}

DifferentialSpectrum spectrum_bruteforce(const FieldSpec& f, std::uint64_t d,
                                         int jobs) {
    return spectrum_from_table(f, d, delta_table_bruteforce(f, d, jobs));
}

DifferentialSpectrum spectrum_kernel(const FieldSpec& f, int t, int jobs) {
    const std::uint64_t d = (std::uint64_t(1) << t) - 1;
    return spectrum_from_table(f, d, delta_table_kernel(f, t, jobs));
}

bool is_locally_apn(const FieldSpec& f, std::uint64_t d) {
    const auto table = delta_table_bruteforce(f, d);
    for (std::uint64_t b = 2; b < table.size(); ++b)
        if (table[b] > 2) return false;
    return true;
}

RestrictedMultiset restricted_multiset(const FieldSpec& f, std::uint64_t d) {
    const auto table = delta_table_bruteforce(f, d);
    RestrictedMultiset rm;
    rm.n = f.degree();
    rm.d = reduce_exponent(f, d);
    for (std::uint64_t b = 2; b < table.size(); ++b) ++rm.values[table[b]];
    return rm;
}

} // namespace diffspec
