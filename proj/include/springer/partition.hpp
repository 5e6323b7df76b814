#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace springer {

using dim_t = std::int64_t;

// Weakly decreasing sequence of positive parts. The empty partition (n = 0)
// is a valid value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Accepts comma- or space-separated positive integers, e.g. "3,2,2,1".
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int n() const { return n_; }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; } // 0-based

    Partition conjugate() const;

    std::string str() const; // "3,2,2,1"

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Ordered sequence of positive parts, no monotonicity requirement.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    static Composition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int n() const { return n_; }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }

    Partition sorted() const; // parts in weakly decreasing order

    std::string str() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Dimension of the fiber over a nilpotent of Jordan type la:
// sum over conjugate parts m of m(m-1)/2.
dim_t springer_fiber_dim(const Partition& la);

// Dimension of the full centralizer of the nilpotent: sum of squared
// conjugate parts.
dim_t stabilizer_dim(const Partition& la);

// Containment order on integer sequences: pi >= rho when pi has a strictly
// increasing index subsequence dominating rho entrywise. Returns the
// lexicographically first witness as 1-based indices, or nullopt.
std::optional<std::vector<int>> pattern_witness(const std::vector<int>& pi,
                                                const std::vector<int>& rho);
bool contains_pattern(const std::vector<int>& pi, const std::vector<int>& rho);

// True when every component over this Jordan type is smooth: hook shapes,
// at most two rows, three rows with the third equal to 1, and (2,2,2).
bool all_components_smooth(const Partition& la);

// True when the fiber has at least one singular component; equivalent to
// la >= (2,2,1,1) or la >= (3,2,2) in the containment order.
bool has_singular_component(const Partition& la);

// All partitions of n, in lexicographically decreasing order of part lists.
std::vector<Partition> partitions_of(int n);

// All distinct rearrangements of the parts, in lexicographic order.
std::vector<Composition> distinct_permutations(const Partition& la);

} // namespace springer
