#include "springer/link_pattern.hpp"

#include <algorithm>
#include <sstream>

#include "springer/bounds.hpp"
#include "springer/errors.hpp"

namespace springer {

void LinkPattern::rebuild() {
    for (auto& b : blocks_) std::sort(b.begin(), b.end());
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    pred_.assign(static_cast<size_t>(n_) + 1, 0);
    block_of_.assign(static_cast<size_t>(n_) + 1, 0);
    for (size_t j = 0; j < blocks_.size(); ++j) {
        const auto& b = blocks_[j];
        for (size_t m = 0; m < b.size(); ++m) {
            block_of_[static_cast<size_t>(b[m])] = static_cast<int>(j) + 1;
            if (m) pred_[static_cast<size_t>(b[m])] = b[m - 1];
        }
    }
}

LinkPattern LinkPattern::from_blocks(std::vector<std::vector<int>> blocks, int n) {
    if (n < 0) throw parse_error("link pattern: n must be >= 0");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    int count = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw parse_error("link pattern: empty block");
        for (int v : b) {
            if (v < 1 || v > n)
                throw parse_error("link pattern: element " + std::to_string(v) + " out of range");
            if (seen[static_cast<size_t>(v)])
                throw parse_error("link pattern: duplicate element " + std::to_string(v));
            seen[static_cast<size_t>(v)] = 1;
            ++count;
        }
    }
    if (count != n)
        throw parse_error("link pattern: blocks do not cover {1..n}");
    LinkPattern p;
    p.n_ = n;
    p.blocks_ = std::move(blocks);
    p.rebuild();
    return p;
}

LinkPattern LinkPattern::parse(std::string_view text) {
    std::vector<std::vector<int>> blocks(1);
    std::string buf(text);
    std::istringstream in(buf);
    std::string tok;
    long long total = 0;
    while (in >> tok) {
        if (tok == "|") {
            blocks.emplace_back();
            continue;
        }
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v <= 0)
                throw parse_error("link pattern: bad element '" + tok + "'");
            blocks.back().push_back(v);
            ++total;
        } catch (const parse_error&) {
            throw;
        } catch (...) {
            throw parse_error("link pattern: bad element '" + tok + "'");
        }
    }
    if (blocks.size() == 1 && blocks[0].empty())
        throw parse_error("link pattern: empty input");
    if (total > bounds().parse_n)
        throw bound_error("link pattern: n exceeds limit " + std::to_string(bounds().parse_n));
    return from_blocks(std::move(blocks), static_cast<int>(total));
}

Partition LinkPattern::jordan_type() const {
    std::vector<int> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
    return Partition(std::move(sizes)); // canonical order is size-decreasing
}

std::string LinkPattern::str() const {
    std::ostringstream out;
    for (size_t j = 0; j < blocks_.size(); ++j) {
        if (j) out << " | ";
        for (size_t m = 0; m < blocks_[j].size(); ++m) {
            if (m) out << ' ';
            out << blocks_[j][m];
        }
    }
    return out.str();
}

int column_index(const LinkPattern& pi, int i) {
    if (i < 1 || i > pi.n())
        throw precondition_error("column_index: element out of range");
    int c = 0;
    while (i) {
        i = pi.pred(i);
        ++c;
    }
    return c;
}

StandardTableau tableau_of_pattern(const LinkPattern& pi) {
    std::vector<std::vector<int>> cols;
    for (int i = 1; i <= pi.n(); ++i) {
        size_t c = static_cast<size_t>(column_index(pi, i)) - 1;
        if (cols.size() <= c) cols.resize(c + 1);
        cols[c].push_back(i);
    }
    std::vector<std::vector<int>> rows;
    for (auto& col : cols) {
        std::sort(col.begin(), col.end());
        for (size_t r = 0; r < col.size(); ++r) {
            if (rows.size() <= r) rows.emplace_back();
            rows[r].push_back(col[r]);
        }
    }
    return StandardTableau::from_rows(std::move(rows));
}

std::vector<std::pair<int, int>> crossings(const LinkPattern& pi) {
    std::vector<std::pair<int, int>> out;
    for (int i = 2; i <= pi.n(); ++i) {
        int pi_i = pi.pred(i);
        if (!pi_i) continue;
        for (int j = 2; j < i; ++j) {
            int pi_j = pi.pred(j);
            if (pi_j > 0 && pi_j < pi_i && pi_i < j)
                out.emplace_back(i, j);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> nesting_violations(const LinkPattern& pi) {
    std::vector<std::pair<int, int>> out;
    const auto& blocks = pi.blocks();
    for (size_t j = 0; j < blocks.size(); ++j) {
        for (size_t k = 0; k < blocks.size(); ++k) {
            if (j == k) continue;
            if (blocks[j].size() >= blocks[k].size()) continue;
            if (blocks[j].front() > blocks[k].front() && blocks[j].back() < blocks[k].back())
                out.emplace_back(static_cast<int>(j) + 1, static_cast<int>(k) + 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_pi1(const LinkPattern& pi) {
    return crossings(pi).empty() && nesting_violations(pi).empty();
}

bool is_standard(const LinkPattern& pi) {
    for (const auto& b : pi.blocks())
        if (b.back() - b.front() + 1 != static_cast<int>(b.size()))
            return false;
    return true;
}

LinkPattern composition_to_pattern(const Composition& pi) {
    std::vector<std::vector<int>> blocks;
    int next = 1;
    for (int p : pi.parts()) {
        std::vector<int> b(static_cast<size_t>(p));
        for (int m = 0; m < p; ++m) b[static_cast<size_t>(m)] = next++;
        blocks.push_back(std::move(b));
    }
    return LinkPattern::from_blocks(std::move(blocks), pi.n());
}

LinkPattern mirror(const LinkPattern& pi) {
    const int n = pi.n();
    std::vector<std::vector<int>> blocks;
    blocks.reserve(pi.blocks().size());
    for (const auto& b : pi.blocks()) {
        std::vector<int> m;
        m.reserve(b.size());
        for (int v : b) m.push_back(n - v + 1);
        blocks.push_back(std::move(m));
    }
    return LinkPattern::from_blocks(std::move(blocks), n);
}

LinkPattern remove_last(const LinkPattern& pi) {
    if (pi.n() < 2) throw precondition_error("remove_last: need n >= 2");
    const int n = pi.n();
    std::vector<std::vector<int>> blocks;
    for (const auto& b : pi.blocks()) {
        std::vector<int> keep;
        for (int v : b)
            if (v != n) keep.push_back(v);
        if (!keep.empty()) blocks.push_back(std::move(keep));
    }
    return LinkPattern::from_blocks(std::move(blocks), n - 1);
}

LinkPattern remove_first(const LinkPattern& pi) {
    if (pi.n() < 2) throw precondition_error("remove_first: need n >= 2");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : pi.blocks()) {
        std::vector<int> keep;
        for (int v : b)
            if (v != 1) keep.push_back(v - 1);
        if (!keep.empty()) blocks.push_back(std::move(keep));
    }
    return LinkPattern::from_blocks(std::move(blocks), pi.n() - 1);
}

LinkPattern remove_block(const LinkPattern& pi, int block_index) {
    if (block_index < 1 || block_index > pi.block_count())
        throw precondition_error("remove_block: index out of range");
    const auto& gone = pi.block(block_index);
    // order-preserving relabeling of the survivors
    std::vector<int> newlabel(static_cast<size_t>(pi.n()) + 1, 0);
    int next = 1;
    for (int v = 1; v <= pi.n(); ++v)
        if (!std::binary_search(gone.begin(), gone.end(), v))
            newlabel[static_cast<size_t>(v)] = next++;
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j <= pi.block_count(); ++j) {
        if (j == block_index) continue;
        std::vector<int> b;
        b.reserve(pi.block(j).size());
        for (int v : pi.block(j)) b.push_back(newlabel[static_cast<size_t>(v)]);
        blocks.push_back(std::move(b));
    }
    return LinkPattern::from_blocks(std::move(blocks), next - 1);
}

std::vector<LinkPattern> enumerate_patterns(const Partition& la, PatternFilter filter) {
    return enumerate_patterns(la, filter, bounds().pattern_enum);
}

std::vector<LinkPattern> enumerate_patterns(const Partition& la, PatternFilter filter, int max_n) {
    if (la.n() > max_n)
        throw bound_error("enumerate_patterns: n = " + std::to_string(la.n()) +
                          " exceeds bound " + std::to_string(max_n));
    const int n = la.n();
    std::vector<LinkPattern> out;
    if (n == 0) {
        LinkPattern empty;
        out.push_back(empty);
        return out;
    }

    // Anchor each new block at the smallest unassigned element; this yields
    // every block-set exactly once.
    std::vector<int> sizes = la.parts();
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    std::vector<std::vector<int>> blocks;

    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            auto p = LinkPattern::from_blocks(blocks, n);
            bool keep = true;
            if (filter == PatternFilter::standard_only) keep = is_standard(p);
            if (filter == PatternFilter::pi1_only) keep = in_pi1(p);
            if (keep) out.push_back(std::move(p));
            return;
        }
        int anchor = 1;
        while (used[static_cast<size_t>(anchor)]) ++anchor;
        used[static_cast<size_t>(anchor)] = 1;
        int last_size = 0;
        for (size_t s = 0; s < sizes.size(); ++s) {
            if (sizes[s] == 0 || sizes[s] == last_size) continue;
            last_size = sizes[s];
            int size = sizes[s];
            sizes[s] = 0;
            std::vector<int> members{anchor};
            auto extend = [&](auto&& grow, int have, int from) -> void {
                if (have == size) {
                    blocks.push_back(members);
                    self(self, remaining - size);
                    blocks.pop_back();
                    return;
                }
                for (int v = from; v <= n; ++v) {
                    if (used[static_cast<size_t>(v)]) continue;
                    used[static_cast<size_t>(v)] = 1;
                    members.push_back(v);
                    grow(grow, have + 1, v + 1);
                    members.pop_back();
                    used[static_cast<size_t>(v)] = 0;
                }
            };
            extend(extend, 1, anchor + 1);
            sizes[s] = size;
        }
        used[static_cast<size_t>(anchor)] = 0;
    };
    rec(rec, n);

    std::sort(out.begin(), out.end(), [](const LinkPattern& a, const LinkPattern& b) {
        return a.blocks() < b.blocks();
    });
    return out;
}

} // namespace springer
