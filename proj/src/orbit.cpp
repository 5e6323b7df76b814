#include "springer/orbit.hpp"

#include <algorithm>

#include "springer/errors.hpp"

namespace springer {

// pred iterated l times; chains[l][i], with chains[l][0] = 0 and every chain
// reaching 0 within n steps.
static std::vector<std::vector<int>> pred_chains(const LinkPattern& pi) {
    const int n = pi.n();
    std::vector<std::vector<int>> chains(static_cast<size_t>(n) + 1,
                                         std::vector<int>(static_cast<size_t>(n) + 1, 0));
    for (int i = 0; i <= n; ++i) chains[0][static_cast<size_t>(i)] = i;
    for (int l = 1; l <= n; ++l)
        for (int i = 1; i <= n; ++i) {
            int prev = chains[static_cast<size_t>(l) - 1][static_cast<size_t>(i)];
            chains[static_cast<size_t>(l)][static_cast<size_t>(i)] = prev ? pi.pred(prev) : 0;
        }
    return chains;
}

std::vector<std::pair<int, int>> a_set(const LinkPattern& pi) {
    const int n = pi.n();
    auto chains = pred_chains(pi);
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= pi.block_count(); ++j) {
        const int kj = pi.block(j).back();
        for (int i = 1; i <= n; ++i) {
            bool ok = true;
            for (int l = 0; l <= n && ok; ++l)
                ok = chains[static_cast<size_t>(l)][static_cast<size_t>(i)] <=
                     chains[static_cast<size_t>(l)][static_cast<size_t>(kj)];
            if (ok) out.emplace_back(i, j);
        }
    }
    return out;
}

OrbitAnalysis analyze_orbit(const LinkPattern& pi) {
    OrbitAnalysis r;
    r.pattern = pi;
    r.stab_dim = static_cast<dim_t>(a_set(pi).size());
    Partition type = pi.jordan_type();
    r.springer_dim = springer_fiber_dim(type);
    r.orbit_dim = stabilizer_dim(type) - r.stab_dim;
    r.dense = (r.orbit_dim == r.springer_dim);
    return r;
}

InductiveReport inductive_report(const LinkPattern& pi) {
    const int n = pi.n();
    if (n < 2) throw precondition_error("inductive_report: need n >= 2");

    // Reorder so that the block containing n comes last within its size
    // class; j0 and the witness hunt below use this listing.
    std::vector<int> order(static_cast<size_t>(pi.block_count()));
    for (size_t j = 0; j < order.size(); ++j) order[j] = static_cast<int>(j) + 1;
    const int host = pi.block_index_of(n);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto key = [&](int j) {
            return std::pair<size_t, int>(pi.block(j).size(), j == host ? 1 : 0);
        };
        const auto ka = key(a), kb = key(b);
        if (ka.first != kb.first) return ka.first > kb.first;
        return ka.second < kb.second;
    });

    InductiveReport rep;
    for (size_t j = 0; j < order.size(); ++j)
        if (order[j] == host) rep.j0 = static_cast<int>(j) + 1;

    LinkPattern removed = remove_last(pi);
    rep.a_full = static_cast<dim_t>(a_set(pi).size());
    rep.a_removed = static_cast<dim_t>(a_set(removed).size());
    rep.equality = (rep.a_full == rep.a_removed + rep.j0);

    auto chains = pred_chains(pi);
    auto at = [&](int l, int i) { return chains[static_cast<size_t>(l)][static_cast<size_t>(i)]; };
    for (size_t jj = static_cast<size_t>(rep.j0); jj < order.size() && !rep.witness; ++jj) {
        for (int i : pi.block(order[jj])) {
            for (int l = 0; l < n; ++l) {
                if (at(l + 1, i) < at(l + 1, n) && at(l + 1, n) < at(l, i) && at(l, i) < at(l, n)) {
                    rep.witness = InductiveWitness{static_cast<int>(jj) + 1, i, l};
                    break;
                }
            }
            if (rep.witness) break;
        }
    }

    Partition full_type = pi.jordan_type();
    Partition removed_type = removed.jordan_type();
    rep.stab_dim_full = stabilizer_dim(full_type);
    rep.stab_dim_removed = stabilizer_dim(removed_type);
    rep.springer_dim_full = springer_fiber_dim(full_type);
    rep.springer_dim_removed = springer_fiber_dim(removed_type);
    return rep;
}

} // namespace springer
