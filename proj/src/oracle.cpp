#include "springer/oracle.hpp"

#include <gmpxx.h>

#include "springer/bounds.hpp"
#include "springer/errors.hpp"

namespace springer {

NilpotentRealization NilpotentRealization::from_pattern(const LinkPattern& pi) {
    NilpotentRealization r;
    r.n = pi.n();
    r.pattern = pi;
    r.matrix.assign(static_cast<size_t>(r.n), std::vector<int>(static_cast<size_t>(r.n), 0));
    for (int i = 1; i <= r.n; ++i) {
        int p = pi.pred(i);
        if (p) r.matrix[static_cast<size_t>(p) - 1][static_cast<size_t>(i) - 1] = 1;
    }
    return r;
}

// Bareiss elimination. The systems below are tiny and sparse, but the
// pivots of a general integer matrix can grow, so work in mpz throughout.
static int exact_rank_mpz(std::vector<std::vector<mpz_class>> a) {
    const size_t rows = a.size();
    if (rows == 0) return 0;
    const size_t cols = a[0].size();
    mpz_class prev = 1;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c)
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

int exact_rank(const std::vector<std::vector<long long>>& m) {
    std::vector<std::vector<mpz_class>> a(m.size());
    for (size_t r = 0; r < m.size(); ++r) {
        a[r].reserve(m[r].size());
        for (long long v : m[r]) a[r].emplace_back(static_cast<long>(v));
    }
    return exact_rank_mpz(std::move(a));
}

// Rows of the commutation system xu = ux over the chosen unknowns. In the
// pattern basis u e_i = e_{pred(i)}, so the (m, i) coefficient equation is
// x_{m, pred(i)} - x_{succ(m), i} = 0 with absent terms dropped. "unknown"
// maps a matrix position to its variable index, or -1 for positions pinned
// to zero.
static dim_t commutation_nullity(const LinkPattern& pi,
                                 const std::vector<std::vector<int>>& unknown,
                                 int n_unknowns) {
    const int n = pi.n();
    std::vector<int> succ(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i)
        if (pi.pred(i)) succ[static_cast<size_t>(pi.pred(i))] = i;

    std::vector<std::vector<mpz_class>> sys;
    for (int m = 1; m <= n; ++m) {
        for (int i = 1; i <= n; ++i) {
            int lhs = -1, rhs = -1;
            if (pi.pred(i)) lhs = unknown[static_cast<size_t>(m) - 1][static_cast<size_t>(pi.pred(i)) - 1];
            if (succ[static_cast<size_t>(m)])
                rhs = unknown[static_cast<size_t>(succ[static_cast<size_t>(m)]) - 1][static_cast<size_t>(i) - 1];
            if (lhs < 0 && rhs < 0) continue;
            std::vector<mpz_class> row(static_cast<size_t>(n_unknowns), 0);
            if (lhs >= 0) row[static_cast<size_t>(lhs)] += 1;
            if (rhs >= 0) row[static_cast<size_t>(rhs)] -= 1;
            sys.push_back(std::move(row));
        }
    }
    return n_unknowns - exact_rank_mpz(std::move(sys));
}

dim_t commutant_dim(const Partition& la) { return commutant_dim(la, bounds().oracle_commutant); }

dim_t commutant_dim(const Partition& la, int max_n) {
    if (la.n() > max_n)
        throw bound_error("commutant_dim: n = " + std::to_string(la.n()) +
                          " exceeds bound " + std::to_string(max_n));
    const int n = la.n();
    if (n == 0) return 0;
    LinkPattern pi = composition_to_pattern(Composition(la.parts()));
    std::vector<std::vector<int>> unknown(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    int count = 0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) unknown[static_cast<size_t>(r)][static_cast<size_t>(c)] = count++;
    return commutation_nullity(pi, unknown, count);
}

dim_t flag_stabilizer_dim(const LinkPattern& pi) {
    return flag_stabilizer_dim(pi, bounds().oracle_flag);
}

dim_t flag_stabilizer_dim(const LinkPattern& pi, int max_n) {
    if (pi.n() > max_n)
        throw bound_error("flag_stabilizer_dim: n = " + std::to_string(pi.n()) +
                          " exceeds bound " + std::to_string(max_n));
    const int n = pi.n();
    if (n == 0) return 0;
    // x e_i in span(e_1..e_i): only entries with row <= column are free.
    std::vector<std::vector<int>> unknown(static_cast<size_t>(n),
                                          std::vector<int>(static_cast<size_t>(n), -1));
    int count = 0;
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) unknown[static_cast<size_t>(r)][static_cast<size_t>(c)] = count++;
    return commutation_nullity(pi, unknown, count);
}

static std::vector<std::vector<long long>> mat_mul(const std::vector<std::vector<long long>>& a,
                                                   const std::vector<std::vector<long long>>& b) {
    const size_t n = a.size();
    std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (!a[i][k]) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

std::vector<Partition> jordan_type_chain(const LinkPattern& pi) {
    return jordan_type_chain(pi, bounds().oracle_flag);
}

std::vector<Partition> jordan_type_chain(const LinkPattern& pi, int max_n) {
    if (pi.n() > max_n)
        throw bound_error("jordan_type_chain: n = " + std::to_string(pi.n()) +
                          " exceeds bound " + std::to_string(max_n));
    const int n = pi.n();
    auto base = NilpotentRealization::from_pattern(pi);
    std::vector<std::vector<long long>> u(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) u[static_cast<size_t>(r)][static_cast<size_t>(c)] = base.matrix[static_cast<size_t>(r)][static_cast<size_t>(c)];

    // powers[k] = u^k
    std::vector<std::vector<std::vector<long long>>> powers;
    std::vector<std::vector<long long>> ident(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) ident[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    powers.push_back(ident);
    for (int k = 1; k <= n; ++k) powers.push_back(mat_mul(powers.back(), u));

    std::vector<Partition> chain;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> colcounts; // conjugate parts of the restricted type
        int prev_rank = i;          // rank of the identity block
        for (int k = 1; k <= i; ++k) {
            std::vector<std::vector<long long>> block(static_cast<size_t>(i),
                                                      std::vector<long long>(static_cast<size_t>(i)));
            for (int r = 0; r < i; ++r)
                for (int c = 0; c < i; ++c)
                    block[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                        powers[static_cast<size_t>(k)][static_cast<size_t>(r)][static_cast<size_t>(c)];
            int rank = exact_rank(block);
            if (prev_rank - rank > 0) colcounts.push_back(prev_rank - rank);
            prev_rank = rank;
            if (rank == 0) break;
        }
        std::vector<int> parts;
        for (int j = 1; !colcounts.empty(); ++j) {
            int cnt = 0;
            for (int m : colcounts)
                if (m >= j) ++cnt;
            if (!cnt) break;
            parts.push_back(cnt);
        }
        chain.emplace_back(std::move(parts));
    }
    return chain;
}

} // namespace springer
