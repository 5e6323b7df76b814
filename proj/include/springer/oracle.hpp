#pragma once

#include <vector>

#include "springer/link_pattern.hpp"
#include "springer/partition.hpp"

namespace springer {

// Nilpotent matrix built from a link pattern: column i carries a single 1 in
// row pred(i) (no entry when i is a block minimum). Its Jordan type is the
// block-size partition.
struct NilpotentRealization {
    int n = 0;
    std::vector<std::vector<int>> matrix; // n x n, 0/1
    LinkPattern pattern;

    static NilpotentRealization from_pattern(const LinkPattern& pi);
};

// Rank of an integer matrix, computed by fraction-free elimination over
// arbitrary-precision integers.
int exact_rank(const std::vector<std::vector<long long>>& m);

// Dimension of the commutant algebra {x : xu = ux} for a nilpotent u of the
// given Jordan type, via the nullspace of the n^2-variable linear system.
dim_t commutant_dim(const Partition& la);
dim_t commutant_dim(const Partition& la, int max_n);

// Same system restricted to x preserving the coordinate flag of the pattern
// basis (x e_i in span(e_1..e_i)).
dim_t flag_stabilizer_dim(const LinkPattern& pi);
dim_t flag_stabilizer_dim(const LinkPattern& pi, int max_n);

// Jordan type of the matrix restricted to the leading i coordinates, for
// i = 1..n, recovered from exact ranks of matrix powers.
std::vector<Partition> jordan_type_chain(const LinkPattern& pi);
std::vector<Partition> jordan_type_chain(const LinkPattern& pi, int max_n);

} // namespace springer
