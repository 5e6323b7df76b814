#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "springer/link_pattern.hpp"
#include "springer/partition.hpp"

namespace springer {

// Pairs (i, j) such that the pred chain of i stays entrywise <= the pred
// chain of max(block j), with exhausted chains reading 0. |a_set| is the
// dimension of the stabilizer of the base flag inside the centralizer.
std::vector<std::pair<int, int>> a_set(const LinkPattern& pi);

struct OrbitAnalysis {
    LinkPattern pattern;
    dim_t stab_dim = 0;     // |a_set|
    dim_t orbit_dim = 0;    // stabilizer_dim(type) - stab_dim
    dim_t springer_dim = 0; // springer_fiber_dim(type)
    bool dense = false;     // orbit_dim == springer_dim
};

OrbitAnalysis analyze_orbit(const LinkPattern& pi);

struct InductiveWitness {
    int block;   // index j > j0 in the reordered block list
    int element; // i in block j
    int power;   // l with pred^{l+1}(i) < pred^{l+1}(n) < pred^l(i) < pred^l(n)
};

// Report on dropping the top element n. j0 is the index of the block
// containing n once that block is placed last within its size class; the
// drop obeys |a_set(pi)| >= |a_set(pi')| + j0 with equality exactly when no
// witness exists, and the two dimension deltas below are identities.
struct InductiveReport {
    int j0 = 0;
    dim_t a_full = 0;    // |a_set(pi)|
    dim_t a_removed = 0; // |a_set(remove_last(pi))|
    bool equality = false;
    std::optional<InductiveWitness> witness;
    dim_t stab_dim_full = 0;        // sum of squared conjugate parts, both shapes
    dim_t stab_dim_removed = 0;     // = stab_dim_full - 2*j0 + 1
    dim_t springer_dim_full = 0;    // fiber dimensions, both shapes
    dim_t springer_dim_removed = 0; // = springer_dim_full - j0 + 1
};

InductiveReport inductive_report(const LinkPattern& pi);

} // namespace springer
