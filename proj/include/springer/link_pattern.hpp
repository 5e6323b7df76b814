#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "springer/partition.hpp"
#include "springer/tableau.hpp"

namespace springer {

// Set partition of {1..n}. Blocks are kept in canonical order (size
// decreasing, then minimum increasing) with ascending elements; arcs join
// consecutive elements of a block. pred(i) is the arc predecessor of i
// within its block, 0 when i is the block minimum.
class LinkPattern {
public:
    LinkPattern() = default;

    static LinkPattern from_blocks(std::vector<std::vector<int>> blocks, int n);

    // Blocks separated by '|', elements by spaces: "1 2 5 | 3 8 | 6 7 | 4".
    // n is the total number of elements.
    static LinkPattern parse(std::string_view text);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int j) const { return blocks_[static_cast<size_t>(j - 1)]; } // 1-based

    int pred(int i) const { return pred_[static_cast<size_t>(i)]; } // 0 = none
    int block_index_of(int i) const { return block_of_[static_cast<size_t>(i)]; } // 1-based

    Partition jordan_type() const; // block sizes, sorted decreasing

    std::string str() const;

    friend bool operator==(const LinkPattern&, const LinkPattern&) = default;
    friend auto operator<=>(const LinkPattern&, const LinkPattern&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> pred_;     // index 0 unused
    std::vector<int> block_of_; // index 0 unused

    void rebuild();
};

// 1-based offset of i within its block; equals the column of i in the
// attached tableau.
int column_index(const LinkPattern& pi, int i);

// The unique standard tableau whose column for each entry i is
// column_index(pi, i): columns are the sorted column classes.
StandardTableau tableau_of_pattern(const LinkPattern& pi);

// Pairs (i, j) with 0 < pred(j) < pred(i) < j < i, sorted.
std::vector<std::pair<int, int>> crossings(const LinkPattern& pi);

// Canonical block index pairs (j, k) where block j lies strictly inside the
// span of block k but is smaller, sorted.
std::vector<std::pair<int, int>> nesting_violations(const LinkPattern& pi);

// No crossings and no nesting violations.
bool in_pi1(const LinkPattern& pi);

// Every block is an interval of consecutive integers.
bool is_standard(const LinkPattern& pi);

// Interval pattern of a composition: consecutive blocks of sizes pi_1, ...
LinkPattern composition_to_pattern(const Composition& pi);

// Relabel i -> n - i + 1.
LinkPattern mirror(const LinkPattern& pi);

// Drop element n (n >= 2); empty block disappears.
LinkPattern remove_last(const LinkPattern& pi);

// Drop element 1 and shift the rest down (n >= 2).
LinkPattern remove_first(const LinkPattern& pi);

// Drop the given block (1-based canonical index) and relabel the remaining
// elements, preserving order.
LinkPattern remove_block(const LinkPattern& pi, int block_index);

enum class PatternFilter { all, standard_only, pi1_only };

// All set partitions of {1..n} with block sizes la, sorted by canonical
// block listing. Throws bound_error past the cap.
std::vector<LinkPattern> enumerate_patterns(const Partition& la,
                                            PatternFilter filter = PatternFilter::all);
std::vector<LinkPattern> enumerate_patterns(const Partition& la, PatternFilter filter, int max_n);

} // namespace springer
