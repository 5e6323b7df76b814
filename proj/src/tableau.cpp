#include "springer/tableau.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "springer/bounds.hpp"
#include "springer/errors.hpp"

namespace springer {

StandardTableau StandardTableau::from_rows(std::vector<std::vector<int>> rows) {
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    StandardTableau t;
    t.rows_ = std::move(rows);
    int n = 0;
    for (const auto& r : t.rows_) n += static_cast<int>(r.size());
    t.n_ = n;

    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (size_t r = 0; r < t.rows_.size(); ++r) {
        const auto& row = t.rows_[r];
        if (row.empty())
            throw parse_error("tableau: empty row");
        if (r && row.size() > t.rows_[r - 1].size())
            throw parse_error("tableau: row lengths must weakly decrease");
        for (size_t c = 0; c < row.size(); ++c) {
            int v = row[c];
            if (v < 1 || v > n)
                throw parse_error("tableau: entry " + std::to_string(v) + " out of range");
            if (seen[static_cast<size_t>(v)])
                throw parse_error("tableau: duplicate entry " + std::to_string(v));
            seen[static_cast<size_t>(v)] = 1;
            if (c && row[c] <= row[c - 1])
                throw parse_error("tableau: rows must strictly increase");
            if (r && t.rows_[r - 1][c] >= v)
                throw parse_error("tableau: columns must strictly increase");
        }
    }
    return t;
}

StandardTableau StandardTableau::parse(std::string_view text) {
    std::vector<std::vector<int>> rows(1);
    std::string buf(text);
    std::istringstream in(buf);
    std::string tok;
    long long total = 0;
    while (in >> tok) {
        if (tok == "/") {
            rows.emplace_back();
            continue;
        }
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v <= 0)
                throw parse_error("tableau: bad entry '" + tok + "'");
            rows.back().push_back(v);
            ++total;
        } catch (const parse_error&) {
            throw;
        } catch (...) {
            throw parse_error("tableau: bad entry '" + tok + "'");
        }
    }
    if (rows.size() == 1 && rows[0].empty())
        throw parse_error("tableau: empty input");
    if (total > bounds().parse_n)
        throw bound_error("tableau: n exceeds limit " + std::to_string(bounds().parse_n));
    return from_rows(std::move(rows));
}

Partition StandardTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

int StandardTableau::row_of(int entry) const {
    for (size_t r = 0; r < rows_.size(); ++r)
        for (int v : rows_[r])
            if (v == entry) return static_cast<int>(r);
    throw precondition_error("tableau: entry not present");
}

int StandardTableau::column_of(int entry) const {
    for (const auto& row : rows_)
        for (size_t c = 0; c < row.size(); ++c)
            if (row[c] == entry) return static_cast<int>(c) + 1;
    throw precondition_error("tableau: entry not present");
}

std::string StandardTableau::str() const {
    std::ostringstream out;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) out << " / ";
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) out << ' ';
            out << rows_[r][c];
        }
    }
    return out.str();
}

std::vector<StandardTableau> enumerate_standard(const Partition& shape) {
    return enumerate_standard(shape, bounds().tableau_enum);
}

std::vector<StandardTableau> enumerate_standard(const Partition& shape, int max_n) {
    if (shape.n() > max_n)
        throw bound_error("enumerate_standard: n = " + std::to_string(shape.n()) +
                          " exceeds bound " + std::to_string(max_n));
    std::vector<StandardTableau> out;
    if (shape.empty()) {
        out.emplace_back();
        return out;
    }
    const auto& target = shape.parts();
    std::vector<std::vector<int>> rows(target.size());
    auto rec = [&](auto&& self, int next) -> void {
        if (next > shape.n()) {
            out.push_back(StandardTableau::from_rows(rows));
            return;
        }
        for (size_t r = 0; r < target.size(); ++r) {
            if (static_cast<int>(rows[r].size()) >= target[r]) continue;
            if (r && rows[r].size() >= rows[r - 1].size()) continue;
            rows[r].push_back(next);
            self(self, next + 1);
            rows[r].pop_back();
        }
    };
    rec(rec, 1);
    auto word = [](const StandardTableau& t) {
        std::vector<int> w;
        for (const auto& r : t.rows())
            w.insert(w.end(), r.begin(), r.end());
        return w;
    };
    std::sort(out.begin(), out.end(), [&](const StandardTableau& a, const StandardTableau& b) {
        return word(a) < word(b);
    });
    return out;
}

StandardTableau transpose(const StandardTableau& t) {
    if (t.empty()) return {};
    std::vector<std::vector<int>> cols(static_cast<size_t>(t.rows()[0].size()));
    for (const auto& row : t.rows())
        for (size_t c = 0; c < row.size(); ++c)
            cols[c].push_back(row[c]);
    return StandardTableau::from_rows(std::move(cols));
}

StandardTableau tableau_from_composition(const Composition& pi) {
    // column index of entry i = offset of i within its group
    std::vector<std::vector<int>> cols;
    int entry = 1;
    for (int p : pi.parts()) {
        for (int c = 0; c < p; ++c, ++entry) {
            if (static_cast<size_t>(c) >= cols.size()) cols.emplace_back();
            cols[static_cast<size_t>(c)].push_back(entry);
        }
    }
    std::vector<std::vector<int>> rows;
    for (size_t c = 0; c < cols.size(); ++c) {
        std::sort(cols[c].begin(), cols[c].end());
        for (size_t r = 0; r < cols[c].size(); ++r) {
            if (rows.size() <= r) rows.emplace_back();
            rows[r].push_back(cols[c][r]);
        }
    }
    return StandardTableau::from_rows(std::move(rows));
}

StandardTableau tableau_from_cocomposition(const Composition& pi) {
    std::vector<std::vector<int>> rows;
    int entry = 1;
    for (int p : pi.parts()) {
        for (int m = 0; m < p; ++m, ++entry) {
            if (static_cast<size_t>(m) >= rows.size()) rows.emplace_back();
            rows[static_cast<size_t>(m)].push_back(entry);
        }
    }
    return StandardTableau::from_rows(std::move(rows));
}

std::vector<Partition> shape_chain(const StandardTableau& t) {
    std::vector<Partition> chain;
    chain.reserve(static_cast<size_t>(t.n()));
    std::vector<int> lens(static_cast<size_t>(t.rows().size()), 0);
    std::vector<int> row_of(static_cast<size_t>(t.n()) + 1, 0);
    for (size_t r = 0; r < t.rows().size(); ++r)
        for (int v : t.rows()[r]) row_of[static_cast<size_t>(v)] = static_cast<int>(r);
    for (int i = 1; i <= t.n(); ++i) {
        ++lens[static_cast<size_t>(row_of[static_cast<size_t>(i)])];
        std::vector<int> parts;
        for (int len : lens)
            if (len) parts.push_back(len);
        chain.emplace_back(std::move(parts));
    }
    return chain;
}

StandardTableau tableau_sum(const StandardTableau& t1, const StandardTableau& t2) {
    const int shift = t1.n();
    size_t nrows = std::max(t1.rows().size(), t2.rows().size());
    std::vector<std::vector<int>> rows(nrows);
    for (size_t r = 0; r < nrows; ++r) {
        if (r < t1.rows().size()) rows[r] = t1.rows()[r];
        if (r < t2.rows().size())
            for (int v : t2.rows()[r]) rows[r].push_back(v + shift);
        if (r && rows[r].size() > rows[r - 1].size())
            throw parse_error("tableau_sum: combined row lengths are not a partition");
    }
    return StandardTableau::from_rows(std::move(rows));
}

StandardTableau evacuation(const StandardTableau& t) {
    const int n = t.n();
    std::vector<std::vector<int>> grid = t.rows();
    std::vector<std::vector<int>> result = grid;
    constexpr int inf = std::numeric_limits<int>::max();
    for (int k = 1; k <= n; ++k) {
        // delete the minimum at (0,0), slide the hole to a corner
        size_t r = 0, c = 0;
        for (;;) {
            int right = (c + 1 < grid[r].size()) ? grid[r][c + 1] : inf;
            int below = (r + 1 < grid.size() && c < grid[r + 1].size()) ? grid[r + 1][c] : inf;
            if (right == inf && below == inf) break;
            if (right < below) {
                grid[r][c] = right;
                ++c;
            } else {
                grid[r][c] = below;
                ++r;
            }
        }
        result[r][c] = n + 1 - k;
        grid[r].pop_back();
        if (grid[r].empty()) grid.pop_back();
    }
    return StandardTableau::from_rows(std::move(result));
}

} // namespace springer
