// verify.hpp
//
// Exhaustive verification harness for the identities of the x^(2^t-1)
// theory: the derivative identity, the N_b = 2 M_b system equivalence, the
// adjoint kernel duality, the (t, n-t+1) symmetry, plus every closed-form /
// exhaustive oracle equivalence from the formulas module. run_all sweeps a
// range of field degrees and aggregates a machine-readable report.
//
// A fault-injection mode flips one matrix bit of one P_{t,b} instance; the
// matrix-consistency check then fails, demonstrating the harness is not
// vacuous.

#ifndef DIFFSPEC_VERIFY_HPP
#define DIFFSPEC_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffspec/gf2n.hpp"

namespace diffspec {

struct CheckResult {
    std::string name;
    int n = 0;
    int t = -1; // -1 for per-n checks
    bool pass = false;
    std::string counterexample; // first failing witness, empty when passing
};

struct FaultInjection {
    int n = 0;
    int t = 0;
    FieldElement b = 0;
    int row = 0;
    int col = 0;
};

struct VerifyOptions {
    // Per-check degree caps; a check is skipped for n beyond its cap.
    int max_n_identity = 14;
    int max_n_system = 14;
    int max_n_adjoint = 14;
    int max_n_symmetry = 14;
    int max_n_matrix = 14;
    int max_n_kloosterman = 18;
    int max_n_x7 = 14;
    int max_n_nminus2 = 14;
    int max_n_half = 14;
    int max_n_nu0 = 14;
    int max_n_cubic = 16;
    int max_n_codes = 10;
    int max_n_four_root = 12;
    int max_n_window = 14;

    int jobs = 1;
    std::optional<FaultInjection> fault;
    std::optional<std::uint64_t> fault_seed; // derives a FaultInjection in range
};

struct VerificationReport {
    int n_min = 0;
    int n_max = 0;
    std::vector<CheckResult> checks; // ordered by (n, t, name)
    bool all_passed = true;
};

// Theorem checks over one field; pass iff no violation over the full sweep.
CheckResult check_identity_u1(const FieldSpec& f, int t);
CheckResult check_system_equivalence(const FieldSpec& f, int t);
CheckResult check_adjoint_duality(const FieldSpec& f, int t);
CheckResult check_symmetry(const FieldSpec& f, int t);
CheckResult check_matrix_consistency(const FieldSpec& f, int t);

VerificationReport run_all(int n_min, int n_max, const VerifyOptions& options = {});

// The fault a seed denotes for the given range (clamped to the matrix-check
// cap so the faulted instance is guaranteed to be visited).
FaultInjection fault_from_seed(std::uint64_t seed, int n_min, int n_max,
                               const VerifyOptions& options = {});

} // namespace diffspec

#endif
