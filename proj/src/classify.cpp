#include "springer/classify.hpp"

#include <algorithm>

#include "springer/bounds.hpp"
#include "springer/errors.hpp"
#include "springer/sweep.hpp"

namespace springer {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::singular: return "singular";
        case Verdict::smooth: return "smooth";
        default: return "unknown";
    }
}

SingularityReport bc_is_singular(const Composition& pi) {
    static const std::vector<std::vector<int>> forbidden = {{1, 2, 2, 1}, {2, 3, 2}};
    for (const auto& f : forbidden) {
        if (auto w = pattern_witness(pi.parts(), f)) {
            SingularityReport r;
            r.verdict = Verdict::singular;
            r.reason = "contains forbidden subsequence";
            r.witness = SingularityWitness{f, *w};
            return r;
        }
    }
    SingularityReport r;
    r.verdict = Verdict::smooth;
    r.reason = "avoids both forbidden subsequences";
    return r;
}

bool all_bc_singular(const Partition& la) {
    for (const auto& pi : distinct_permutations(la))
        if (bc_is_singular(pi).verdict != Verdict::singular) return false;
    return true;
}

std::optional<Composition> bala_carter_composition(const StandardTableau& t) {
    if (t.empty()) return std::nullopt;
    // Interval blocks force the column sequence 1,2,...,p_1,1,2,...,p_2,...;
    // read off the candidate run lengths and verify.
    std::vector<int> parts;
    for (int i = 1; i <= t.n(); ++i) {
        int c = t.column_of(i);
        if (c == 1)
            parts.push_back(1);
        else if (!parts.empty() && c == parts.back() + 1)
            ++parts.back();
        else
            return std::nullopt;
    }
    Composition candidate(parts);
    if (tableau_from_composition(candidate) == t) return candidate;
    return std::nullopt;
}

std::optional<LinkPattern> dense_jordan_pattern(const StandardTableau& t) {
    return dense_jordan_pattern(t, bounds().pattern_enum);
}

std::optional<LinkPattern> dense_jordan_pattern(const StandardTableau& t, int max_n) {
    if (t.n() > max_n)
        throw bound_error("dense_jordan_pattern: n = " + std::to_string(t.n()) +
                          " exceeds bound " + std::to_string(max_n));
    const int n = t.n();
    if (n == 0) return LinkPattern();

    // Entry i must sit at offset column_of(i) in its block, so blocks grow as
    // chains: an entry in column 1 opens a chain, an entry in column c
    // extends some chain of current length c-1. Crossing-free pruning: a new
    // arc (tail, i) may not jump over an existing arc (a, b) with
    // a < tail < b. Nesting is checked on the finished pattern.
    std::vector<int> col(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) col[static_cast<size_t>(i)] = t.column_of(i);

    std::vector<std::vector<int>> chains;
    std::vector<std::pair<int, int>> arcs;
    std::optional<LinkPattern> found;

    auto crosses = [&](int tail, int head) {
        for (const auto& [a, b] : arcs)
            if (a < tail && tail < b && b < head) return true;
        return false;
    };

    auto rec = [&](auto&& self, int i) -> void {
        if (found) return;
        if (i > n) {
            auto p = LinkPattern::from_blocks(chains, n);
            if (in_pi1(p) && tableau_of_pattern(p) == t) found = p;
            return;
        }
        const int c = col[static_cast<size_t>(i)];
        if (c == 1) {
            chains.emplace_back(1, i);
            self(self, i + 1);
            chains.pop_back();
            return;
        }
        for (size_t k = 0; k < chains.size() && !found; ++k) {
            if (static_cast<int>(chains[k].size()) != c - 1) continue;
            int tail = chains[k].back();
            if (crosses(tail, i)) continue;
            chains[k].push_back(i);
            arcs.emplace_back(tail, i);
            self(self, i + 1);
            arcs.pop_back();
            chains[k].pop_back();
        }
    };
    rec(rec, 1);
    return found;
}

static std::vector<int> bundle_base_of_shape(const Partition& shape) {
    const Partition conj = shape.conjugate();
    std::vector<int> base;
    for (int c : conj.parts())
        for (int j = 1; j < c; ++j) base.push_back(j);
    return base;
}

std::vector<int> fiber_bundle_base(const StandardTableau& t) {
    // interval patterns need no search and no size cap
    if (!bala_carter_composition(transpose(t)) && !dense_jordan_pattern(transpose(t)))
        throw precondition_error("fiber_bundle_base: transpose has no dense Jordan orbit");
    return bundle_base_of_shape(t.shape());
}

ComponentReport classify_tableau(const StandardTableau& t) {
    return classify_tableau(t, bounds().pattern_enum);
}

ComponentReport classify_tableau(const StandardTableau& t, int max_n) {
    ComponentReport r;
    r.tableau = t;
    r.shape = t.shape();
    r.dim = springer_fiber_dim(r.shape);

    r.bc_composition = bala_carter_composition(t);
    r.bala_carter = r.bc_composition.has_value();
    r.richardson = bala_carter_composition(transpose(t)).has_value();
    r.dense_pattern = dense_jordan_pattern(t, max_n);
    r.generalized_bc = r.dense_pattern.has_value();
    r.generalized_richardson = dense_jordan_pattern(transpose(t), max_n).has_value();

    if (r.bala_carter) {
        r.singular = bc_is_singular(*r.bc_composition);
    } else if (r.richardson) {
        r.singular.verdict = Verdict::smooth;
        r.singular.reason = "richardson";
    } else if (all_components_smooth(r.shape)) {
        r.singular.verdict = Verdict::smooth;
        r.singular.reason = "smooth shape";
    } else if (r.generalized_richardson) {
        r.singular.verdict = Verdict::smooth;
        r.singular.reason = "iterated bundle";
    } else {
        r.singular.verdict = Verdict::unknown;
        r.singular.reason = "no criterion applies";
    }

    if (r.generalized_richardson) r.bundle_base = bundle_base_of_shape(r.shape);
    return r;
}

ShapeAtlas classify_shape(const Partition& la, int jobs) {
    return classify_shape(la, jobs, bounds().tableau_enum);
}

ShapeAtlas classify_shape(const Partition& la, int jobs, int max_n) {
    if (la.n() > max_n)
        throw bound_error("classify_shape: n = " + std::to_string(la.n()) +
                          " exceeds bound " + std::to_string(max_n));
    ShapeAtlas atlas;
    atlas.shape = la;
    auto tableaux = enumerate_standard(la, max_n);
    atlas.reports = parallel_map(tableaux, jobs, [&](const StandardTableau& t) {
        return classify_tableau(t, std::max(max_n, la.n()));
    });
    auto& s = atlas.summary;
    s.components = static_cast<int>(atlas.reports.size());
    for (const auto& r : atlas.reports) {
        s.bala_carter += r.bala_carter;
        s.richardson += r.richardson;
        s.generalized_bc += r.generalized_bc;
        s.generalized_richardson += r.generalized_richardson;
        s.singular += r.singular.verdict == Verdict::singular;
        s.smooth += r.singular.verdict == Verdict::smooth;
        s.unknown += r.singular.verdict == Verdict::unknown;
    }
    s.exists_singular = has_singular_component(la);
    return atlas;
}

dim_t sum_component_dims(const StandardTableau& t1, const StandardTableau& t2) {
    StandardTableau s = tableau_sum(t1, t2);
    dim_t total = springer_fiber_dim(s.shape());
    if (total != springer_fiber_dim(t1.shape()) + springer_fiber_dim(t2.shape()))
        throw precondition_error("sum_component_dims: dimension bookkeeping failed");
    return total;
}

} // namespace springer
