#pragma once

#include <optional>
#include <string>
#include <vector>

#include "springer/link_pattern.hpp"
#include "springer/partition.hpp"
#include "springer/tableau.hpp"

namespace springer {

enum class Verdict { singular, smooth, unknown };

const char* verdict_name(Verdict v);

struct SingularityWitness {
    std::vector<int> forbidden; // (1,2,2,1) or (2,3,2)
    std::vector<int> indices;   // 1-based positions in the composition
};

struct SingularityReport {
    Verdict verdict = Verdict::unknown;
    std::string reason; // which criterion decided
    std::optional<SingularityWitness> witness;
};

// Singularity test for the component of a composition: singular exactly when
// the composition dominates (1,2,2,1) or (2,3,2) in the containment order.
SingularityReport bc_is_singular(const Composition& pi);

// Every distinct rearrangement of the parts gives a singular component.
bool all_bc_singular(const Partition& la);

struct ComponentReport {
    StandardTableau tableau;
    Partition shape;
    dim_t dim = 0;
    bool bala_carter = false;
    std::optional<Composition> bc_composition;
    bool richardson = false;
    bool generalized_bc = false;
    std::optional<LinkPattern> dense_pattern; // witness for generalized_bc
    bool generalized_richardson = false;
    SingularityReport singular;
    std::optional<std::vector<int>> bundle_base; // set when generalized_richardson
};

// The composition whose interval pattern reproduces T, if any (unique).
std::optional<Composition> bala_carter_composition(const StandardTableau& t);

// A crossing-free, nesting-respecting pattern whose tableau is T, if any
// (unique). Backtracks over block assignments with the columns pinned by T.
std::optional<LinkPattern> dense_jordan_pattern(const StandardTableau& t);
std::optional<LinkPattern> dense_jordan_pattern(const StandardTableau& t, int max_n);

ComponentReport classify_tableau(const StandardTableau& t);
ComponentReport classify_tableau(const StandardTableau& t, int max_n);

// Base list of the iterated projective-space bundle carried by a component
// whose transpose has a dense Jordan orbit: 1..c-1 for each column length c
// of shape(t). Throws precondition_error when t is not such a component.
std::vector<int> fiber_bundle_base(const StandardTableau& t);

struct ShapeSummary {
    int components = 0;
    int bala_carter = 0;
    int richardson = 0;
    int generalized_bc = 0;
    int generalized_richardson = 0;
    int singular = 0;
    int smooth = 0;
    int unknown = 0;
    bool exists_singular = false; // shape-level criterion
};

struct ShapeAtlas {
    Partition shape;
    std::vector<ComponentReport> reports; // enumeration order
    ShapeSummary summary;
};

ShapeAtlas classify_shape(const Partition& la, int jobs = 1);
ShapeAtlas classify_shape(const Partition& la, int jobs, int max_n);

// Dimension of the row-wise sum of two components; checks that it equals the
// sum of the operand dimensions.
dim_t sum_component_dims(const StandardTableau& t1, const StandardTableau& t2);

} // namespace springer
