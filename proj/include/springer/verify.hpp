#pragma once

#include <string>
#include <vector>

namespace springer {

struct CheckResult {
    std::string name;
    bool pass = true;
    long long cases = 0;        // inputs examined
    std::string counterexample{}; // first failing input, empty when pass
    double seconds = 0.0;
};

// Exhaustive property sweeps. Each check caps its range at the relevant
// configured bound, so a generous max_n is safe.

// commutant oracle == sum of squared conjugate parts, all shapes of n <= max_n
CheckResult check_stabilizer_formula(int max_n, int jobs);

// fiber dimension formula on the known closed-form families
CheckResult check_dimension_anchors();

// flag stabilizer oracle == |a_set|, all patterns
CheckResult check_flag_stabilizer(int max_n, int jobs);

// orbit dense iff crossing-free and nesting-respecting; orbit_dim <= fiber dim
CheckResult check_density(int max_n, int jobs);

// |a_set| drop when removing n: inequality, equality iff no witness, and the
// two dimension deltas
CheckResult check_inductive_step(int max_n, int jobs);

// oracle jordan chain == shape chain of the attached tableau
CheckResult check_jordan_chains(int max_n, int jobs);

// component tableaux of conjugate compositions transpose onto each other,
// and the dual tableau construction matches
CheckResult check_duality(int max_n);

// bundle base entries sum to the fiber dimension; two-row shapes carry
// exactly lambda_2 ones
CheckResult check_bundle_bases(int max_n);

// singularity criterion closure: reversal invariance, part removal, last
// part decrement (equivalence when the last part is maximal)
CheckResult check_singularity_closure(int max_part, int max_len);

// evacuation of the pattern tableau matches the mirrored pattern's tableau;
// crossing_free_only restricts to the crossing-free nesting-respecting class
// where this is a theorem (it fails on the full pattern set)
CheckResult check_evacuation_mirror(int max_n, bool crossing_free_only);

CheckResult check_evacuation_involution(int max_n);

// frozen worked examples: composition tableau, pattern tableau, transpose,
// row-wise sum
CheckResult check_tableau_fixtures();

// singular component counts for shapes (2,2,1,1) and (3,2,2)
CheckResult check_singular_counts();

// shape-level singularity agrees with the per-composition criterion and the
// smooth-shape list; dominating shapes force all components singular
CheckResult check_smoothness_equivalence(int max_n);

// suite in {dims, orbits, duality, evacuation, all}
std::vector<CheckResult> run_suite(const std::string& suite, int max_n, int jobs);

std::string format_result(const CheckResult& r);

} // namespace springer
