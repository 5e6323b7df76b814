#include "springer/partition.hpp"

#include <algorithm>
#include <sstream>

#include "springer/bounds.hpp"
#include "springer/errors.hpp"

namespace springer {

static std::vector<int> parse_int_list(std::string_view text, const char* what) {
    std::string buf(text);
    for (char& c : buf)
        if (c == ',') c = ' ';
    std::istringstream in(buf);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v <= 0)
                throw parse_error(std::string(what) + ": bad part '" + tok + "'");
            out.push_back(v);
        } catch (const parse_error&) {
            throw;
        } catch (...) {
            throw parse_error(std::string(what) + ": bad part '" + tok + "'");
        }
    }
    if (out.empty())
        throw parse_error(std::string(what) + ": empty input");
    long long total = 0;
    for (int v : out) total += v;
    if (total > bounds().parse_n)
        throw bound_error(std::string(what) + ": n = " + std::to_string(total) +
                          " exceeds limit " + std::to_string(bounds().parse_n));
    return out;
}

static std::string join_parts(const std::vector<int>& parts) {
    std::ostringstream out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ',';
        out << parts[i];
    }
    return out.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw parse_error("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1])
            throw parse_error("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    return Partition(parse_int_list(text, "partition"));
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return Partition();
    out.reserve(static_cast<size_t>(parts_[0]));
    for (int j = 1; j <= parts_[0]; ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

std::string Partition::str() const { return join_parts(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0)
            throw parse_error("composition parts must be positive");
        n_ += p;
    }
}

Composition Composition::parse(std::string_view text) {
    return Composition(parse_int_list(text, "composition"));
}

Partition Composition::sorted() const {
    std::vector<int> v = parts_;
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

std::string Composition::str() const { return join_parts(parts_); }

dim_t springer_fiber_dim(const Partition& la) {
    const Partition conj = la.conjugate();
    dim_t d = 0;
    for (int m : conj.parts())
        d += static_cast<dim_t>(m) * (m - 1) / 2;
    return d;
}

dim_t stabilizer_dim(const Partition& la) {
    const Partition conj = la.conjugate();
    dim_t d = 0;
    for (int m : conj.parts())
        d += static_cast<dim_t>(m) * m;
    return d;
}

std::optional<std::vector<int>> pattern_witness(const std::vector<int>& pi,
                                                const std::vector<int>& rho) {
    // Greedy left-to-right matching; earliest feasible index at each step is
    // optimal for this order, so the result is the lexicographically first
    // witness when one exists.
    std::vector<int> idx;
    idx.reserve(rho.size());
    size_t i = 0;
    for (size_t l = 0; l < rho.size(); ++l) {
        while (i < pi.size() && pi[i] < rho[l]) ++i;
        if (i == pi.size()) return std::nullopt;
        idx.push_back(static_cast<int>(i) + 1);
        ++i;
    }
    return idx;
}

bool contains_pattern(const std::vector<int>& pi, const std::vector<int>& rho) {
    return pattern_witness(pi, rho).has_value();
}

bool all_components_smooth(const Partition& la) {
    const auto& p = la.parts();
    if (p.size() <= 2) return true;
    int big = 0;
    for (int v : p)
        if (v >= 2) ++big;
    if (big <= 1) return true; // hook
    if (p.size() == 3 && p[2] == 1) return true;
    if (p == std::vector<int>{2, 2, 2}) return true;
    return false;
}

bool has_singular_component(const Partition& la) {
    return contains_pattern(la.parts(), {2, 2, 1, 1}) ||
           contains_pattern(la.parts(), {3, 2, 2});
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw precondition_error("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

std::vector<Composition> distinct_permutations(const Partition& la) {
    std::vector<int> v = la.parts();
    std::sort(v.begin(), v.end());
    std::vector<Composition> out;
    if (v.empty()) return out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace springer
