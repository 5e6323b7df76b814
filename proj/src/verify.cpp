#include "springer/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "springer/bounds.hpp"
#include "springer/classify.hpp"
#include "springer/errors.hpp"
#include "springer/link_pattern.hpp"
#include "springer/oracle.hpp"
#include "springer/orbit.hpp"
#include "springer/partition.hpp"
#include "springer/sweep.hpp"
#include "springer/tableau.hpp"

namespace springer {

namespace {

using clock_t_ = std::chrono::steady_clock;

struct Timer {
    clock_t_::time_point start = clock_t_::now();
    double elapsed() const {
        return std::chrono::duration<double>(clock_t_::now() - start).count();
    }
};

// Run fn over items (parallel when jobs > 1); fn returns an empty string on
// success. Records the first failure in item order.
template <class T, class F>
void sweep_items(CheckResult& r, const std::vector<T>& items, int jobs, F&& fn) {
    if (items.empty()) return;
    auto errors = parallel_map(items, jobs, fn);
    r.cases += static_cast<long long>(items.size());
    for (const auto& e : errors) {
        if (!e.empty()) {
            r.pass = false;
            if (r.counterexample.empty()) r.counterexample = e;
            break;
        }
    }
}

std::vector<LinkPattern> all_patterns_of_n(int n, PatternFilter filter) {
    std::vector<LinkPattern> out;
    for (const auto& la : partitions_of(n)) {
        auto ps = enumerate_patterns(la, filter, n);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::string join_ints(const std::vector<int>& v, char sep = ',') {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << sep;
        out << v[i];
    }
    return out.str();
}

} // namespace

CheckResult check_stabilizer_formula(int max_n, int jobs) {
    CheckResult r{"stabilizer formula (oracle vs conjugate-square sum)"};
    Timer t;
    const int cap = std::min(max_n, bounds().oracle_commutant);
    for (int n = 1; n <= cap && r.pass; ++n) {
        sweep_items(r, partitions_of(n), jobs, [](const Partition& la) -> std::string {
            dim_t oracle = commutant_dim(la);
            dim_t formula = stabilizer_dim(la);
            if (oracle != formula) {
                std::ostringstream out;
                out << "shape " << la.str() << ": oracle " << oracle << ", formula " << formula;
                return out.str();
            }
            return {};
        });
    }
    r.seconds = t.elapsed();
    return r;
}

CheckResult check_dimension_anchors() {
    CheckResult r{"fiber dimension anchors"};
    Timer t;
    auto expect = [&](const Partition& la, dim_t want) {
        ++r.cases;
        dim_t got = springer_fiber_dim(la);
        if (got != want && r.pass) {
            r.pass = false;
            std::ostringstream out;
            out << "shape " << la.str() << ": dim " << got << ", expected " << want;
            r.counterexample = out.str();
        }
    };
    for (int p = 2; p <= 6; ++p)
        for (int q = 2; q <= p; ++q)
            expect(Partition({p, q, 1, 1}), q + 5);
    for (int p = 3; p <= 6; ++p)
        expect(Partition({p, 2, 2}), 6);
    for (int p = 1; p <= 4; ++p)
        for (int m = 0; m <= 3; ++m) {
            std::vector<int> parts{p, p};
            parts.insert(parts.end(), static_cast<size_t>(2 * m), 1);
            expect(Partition(parts), 2 * m * m + 3 * m + p);
        }
    r.seconds = t.elapsed();
    return r;
}

CheckResult check_flag_stabilizer(int max_n, int jobs) {
    CheckResult r{"flag stabilizer oracle vs a_set"};
    Timer t;
    const int cap = std::min(max_n, bounds().oracle_flag);
    for (int n = 1; n <= cap && r.pass; ++n) {
        sweep_items(r, all_patterns_of_n(n, PatternFilter::all), jobs,
                    [](const LinkPattern& pi) -> std::string {
                        dim_t oracle = flag_stabilizer_dim(pi);
                        dim_t count = static_cast<dim_t>(a_set(pi).size());
                        if (oracle != count) {
                            std::ostringstream out;
                            out << "pattern " << pi.str() << ": oracle " << oracle
                                << ", |a_set| " << count;
                            return out.str();
                        }
                        return {};
                    });
    }
    r.seconds = t.elapsed();
    return r;
}

CheckResult check_density(int max_n, int jobs) {
    CheckResult r{"dense orbit criterion"};
    Timer t;
    const int cap = std::min(max_n, bounds().pattern_enum);
    for (int n = 1; n <= cap && r.pass; ++n) {
        sweep_items(r, all_patterns_of_n(n, PatternFilter::all), jobs,
                    [](const LinkPattern& pi) -> std::string {
                        OrbitAnalysis a = analyze_orbit(pi);
                        if (a.orbit_dim > a.springer_dim) {
                            std::ostringstream out;
                            out << "pattern " << pi.str() << ": orbit dim " << a.orbit_dim
                                << " exceeds fiber dim " << a.springer_dim;
                            return out.str();
                        }
                        if (a.dense != in_pi1(pi)) {
                            std::ostringstream out;
                            out << "pattern " << pi.str() << ": dense=" << a.dense
                                << " but crossing/nesting class says " << in_pi1(pi);
                            return out.str();
                        }
                        return {};
                    });
    }
    r.seconds = t.elapsed();
    return r;
}

CheckResult check_inductive_step(int max_n, int jobs) {
    CheckResult r{"top element removal"};
    Timer t;
    const int cap = std::min(max_n, bounds().pattern_enum);
    for (int n = 2; n <= cap && r.pass; ++n) {
        sweep_items(r, all_patterns_of_n(n, PatternFilter::all), jobs,
                    [](const LinkPattern& pi) -> std::string {
                        InductiveReport rep = inductive_report(pi);
                        std::ostringstream out;
                        if (rep.a_full < rep.a_removed + rep.j0) {
                            out << "pattern " << pi.str() << ": |a_set| " << rep.a_full
                                << " < " << rep.a_removed << " + j0 " << rep.j0;
                            return out.str();
                        }
                        if (rep.equality == rep.witness.has_value()) {
                            out << "pattern " << pi.str() << ": equality=" << rep.equality
                                << " yet witness " << (rep.witness ? "present" : "absent");
                            return out.str();
                        }
                        if (rep.stab_dim_removed != rep.stab_dim_full - 2 * rep.j0 + 1) {
                            out << "pattern " << pi.str() << ": centralizer delta wrong";
                            return out.str();
                        }
                        if (rep.springer_dim_removed != rep.springer_dim_full - rep.j0 + 1) {
                            out << "pattern " << pi.str() << ": fiber dim delta wrong";
                            return out.str();
                        }
                        // codimension of the orbit may only shrink
                        OrbitAnalysis full = analyze_orbit(pi);
                        OrbitAnalysis rem = analyze_orbit(remove_last(pi));
                        dim_t codim_full = full.springer_dim - full.orbit_dim;
                        dim_t codim_rem = rem.springer_dim - rem.orbit_dim;
                        if (codim_full < codim_rem) {
                            out << "pattern " << pi.str() << ": codim " << codim_full
                                << " < " << codim_rem << " after removal";
                            return out.str();
                        }
                        if (codim_full - codim_rem != rep.a_full - rep.a_removed - rep.j0) {
                            out << "pattern " << pi.str() << ": codim delta mismatch";
                            return out.str();
                        }
                        return {};
                    });
    }
    r.seconds = t.elapsed();
    return r;
}

CheckResult check_jordan_chains(int max_n, int jobs) {
    CheckResult r{"jordan chain oracle vs shape chain"};
    Timer t;
    const int cap = std::min(max_n, bounds().oracle_flag);
    for (int n = 1; n <= cap && r.pass; ++n) {
        sweep_items(r, all_patterns_of_n(n, PatternFilter::all), jobs,
                    [](const LinkPattern& pi) -> std::string {
                        auto oracle = jordan_type_chain(pi);
                        auto combinatorial = shape_chain(tableau_of_pattern(pi));
                        if (oracle != combinatorial) {
                            std::ostringstream out;
                            out << "pattern " << pi.str() << ": matrix route disagrees at some step";
                            return out.str();
                        }
                        return {};
                    });
    }
    r.seconds = t.elapsed();
    return r;
}

CheckResult check_duality(int max_n) {
    CheckResult r{"transpose duality"};
    Timer t;
    const int cap = std::min(max_n, bounds().tableau_enum);
    for (int n = 1; n <= cap && r.pass; ++n) {
        for (const auto& la : partitions_of(n)) {
            if (!r.pass) break;
            const Partition conj = la.conjugate();

            // dual construction agrees with transposition, composition by
            // composition
            for (const auto& pi : distinct_permutations(la)) {
                ++r.cases;
                if (tableau_from_cocomposition(pi) != transpose(tableau_from_composition(pi))) {
                    r.pass = false;
                    r.counterexample = "composition " + pi.str() + ": dual tableau is not the transpose";
                    break;
                }
            }
            if (!r.pass) break;

            // the transposes of the interval-pattern tableaux of the
            // conjugate shape are exactly the tableaux whose transpose has an
            // interval pattern
            std::set<StandardTableau> route_a;
            for (const auto& t2 : enumerate_standard(la, cap))
                if (bala_carter_composition(transpose(t2))) route_a.insert(t2);
            std::set<StandardTableau> route_b;
            for (const auto& pi : distinct_permutations(conj))
                route_b.insert(transpose(tableau_from_composition(pi)));
            ++r.cases;
            if (route_a != route_b) {
                r.pass = false;
                r.counterexample = "shape " + la.str() + ": transpose-duality sets differ";
            }
        }
    }
    r.seconds = t.elapsed();
    return r;
}

CheckResult check_bundle_bases(int max_n) {
    CheckResult r{"iterated bundle bases"};
    Timer t;
    const int cap = std::min({max_n, bounds().tableau_enum, bounds().pattern_enum});
    for (int n = 1; n <= cap && r.pass; ++n) {
        for (const auto& la : partitions_of(n)) {
            if (!r.pass) break;
            const bool two_row = la.rows() <= 2;
            for (const auto& tab : enumerate_standard(la, cap)) {
                ++r.cases;
                const bool gen_r = dense_jordan_pattern(transpose(tab), cap).has_value();
                if (!gen_r) {
                    if (two_row) {
                        r.pass = false;
                        r.counterexample = "tableau " + tab.str() + ": two-row component without bundle";
                        break;
                    }
                    continue;
                }
                auto base = fiber_bundle_base(tab);
                dim_t total = 0;
                for (int v : base) total += v;
                if (total != springer_fiber_dim(la)) {
                    r.pass = false;
                    r.counterexample = "tableau " + tab.str() + ": base sums to " +
                                       std::to_string(total) + ", fiber dim " +
                                       std::to_string(springer_fiber_dim(la));
                    break;
                }
                if (two_row) {
                    int ones = static_cast<int>(std::count(base.begin(), base.end(), 1));
                    int expected = la.rows() == 2 ? la.part(1) : 0;
                    if (ones != expected) {
                        r.pass = false;
                        r.counterexample = "tableau " + tab.str() + ": " + std::to_string(ones) +
                                           " ones in base, expected " + std::to_string(expected);
                        break;
                    }
                }
            }
        }
    }
    r.seconds = t.elapsed();
    return r;
}

CheckResult check_singularity_closure(int max_part, int max_len) {
    CheckResult r{"singularity criterion closure"};
    Timer t;
    std::vector<std::vector<int>> all;
    // all compositions with parts in 1..max_part and length 1..max_len
    auto rec = [&](auto&& self, std::vector<int>& cur) -> void {
        if (!cur.empty()) all.push_back(cur);
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int p = 1; p <= max_part; ++p) {
            cur.push_back(p);
            self(self, cur);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    rec(rec, cur);

    auto singular = [](const std::vector<int>& parts) {
        return bc_is_singular(Composition(parts)).verdict == Verdict::singular;
    };
    for (const auto& parts : all) {
        if (!r.pass) break;
        ++r.cases;
        const bool sing = singular(parts);

        std::vector<int> rev(parts.rbegin(), parts.rend());
        if (singular(rev) != sing) {
            r.pass = false;
            r.counterexample = "composition " + join_ints(parts) + ": reversal changes the verdict";
            break;
        }
        for (size_t d = 0; d < parts.size() && r.pass; ++d) {
            std::vector<int> shorter = parts;
            shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(d));
            if (!shorter.empty() && singular(shorter) && !sing) {
                r.pass = false;
                r.counterexample = "composition " + join_ints(parts) +
                                   ": dropping part " + std::to_string(d + 1) +
                                   " creates a singularity";
            }
        }
        if (!r.pass) break;
        std::vector<int> dec = parts;
        if (dec.back() == 1)
            dec.pop_back();
        else
            --dec.back();
        if (!dec.empty()) {
            const bool dec_sing = singular(dec);
            if (dec_sing && !sing) {
                r.pass = false;
                r.counterexample = "composition " + join_ints(parts) +
                                   ": decrementing the last part creates a singularity";
                break;
            }
            const int maxp = *std::max_element(parts.begin(), parts.end());
            if (parts.back() == maxp && dec_sing != sing) {
                r.pass = false;
                r.counterexample = "composition " + join_ints(parts) +
                                   ": maximal last part decrement changes the verdict";
                break;
            }
        }
    }
    r.seconds = t.elapsed();
    return r;
}

CheckResult check_evacuation_mirror(int max_n, bool crossing_free_only) {
    CheckResult r{crossing_free_only ? "evacuation mirror symmetry (crossing-free patterns)"
                                     : "evacuation mirror symmetry (all patterns)"};
    Timer t;
    const int cap = std::min(max_n, bounds().pattern_enum);
    const PatternFilter filter =
        crossing_free_only ? PatternFilter::pi1_only : PatternFilter::all;
    for (int n = 1; n <= cap && r.pass; ++n) {
        for (const auto& pi : all_patterns_of_n(n, filter)) {
            ++r.cases;
            if (evacuation(tableau_of_pattern(pi)) != tableau_of_pattern(mirror(pi))) {
                r.pass = false;
                r.counterexample = "pattern " + pi.str() + ": evacuation does not match the mirror";
                break;
            }
        }
    }
    r.seconds = t.elapsed();
    return r;
}

CheckResult check_evacuation_involution(int max_n) {
    CheckResult r{"evacuation involution"};
    Timer t;
    const int cap = std::min(max_n, bounds().tableau_enum);
    for (int n = 1; n <= cap && r.pass; ++n) {
        for (const auto& la : partitions_of(n)) {
            if (!r.pass) break;
            for (const auto& tab : enumerate_standard(la, cap)) {
                ++r.cases;
                if (evacuation(evacuation(tab)) != tab) {
                    r.pass = false;
                    r.counterexample = "tableau " + tab.str() + ": double evacuation differs";
                    break;
                }
            }
        }
    }
    r.seconds = t.elapsed();
    return r;
}

CheckResult check_tableau_fixtures() {
    CheckResult r{"worked example fixtures"};
    Timer t;
    auto expect = [&](const std::string& label, const std::string& got, const std::string& want) {
        ++r.cases;
        if (got != want && r.pass) {
            r.pass = false;
            r.counterexample = label + ": got '" + got + "', expected '" + want + "'";
        }
    };
    expect("composition 2,3,1,2",
           tableau_from_composition(Composition::parse("2,3,1,2")).str(),
           "1 2 5 / 3 4 / 6 8 / 7");
    expect("pattern 1 2 5 | 3 8 | 6 7 | 4",
           tableau_of_pattern(LinkPattern::parse("1 2 5 | 3 8 | 6 7 | 4")).str(),
           "1 2 5 / 3 7 / 4 8 / 6");
    expect("transpose of 1 3 8 / 2 5 / 4 6 / 7",
           transpose(StandardTableau::parse("1 3 8 / 2 5 / 4 6 / 7")).str(),
           "1 2 4 7 / 3 5 6 / 8");
    expect("sum of 1 2 / 3 / 4 / 5 and 1 3 / 2 4",
           tableau_sum(StandardTableau::parse("1 2 / 3 / 4 / 5"),
                       StandardTableau::parse("1 3 / 2 4"))
               .str(),
           "1 2 6 8 / 3 7 9 / 4 / 5");
    r.seconds = t.elapsed();
    return r;
}

CheckResult check_singular_counts() {
    CheckResult r{"singular component counts"};
    Timer t;
    auto run = [&](const std::string& shape, int want_total, int want_singular,
                   const std::string& want_witness) {
        ++r.cases;
        const Partition la = Partition::parse(shape);
        int singular = 0, total = 0;
        std::string witness;
        for (const auto& pi : distinct_permutations(la)) {
            ++total;
            if (bc_is_singular(pi).verdict == Verdict::singular) {
                ++singular;
                witness = pi.str();
            }
        }
        if ((total != want_total || singular != want_singular || witness != want_witness) &&
            r.pass) {
            r.pass = false;
            std::ostringstream out;
            out << "shape " << shape << ": " << singular << "/" << total
                << " singular (witness " << witness << "), expected " << want_singular << "/"
                << want_total << " (" << want_witness << ")";
            r.counterexample = out.str();
        }
    };
    run("2,2,1,1", 6, 1, "1,2,2,1");
    run("3,2,2", 3, 1, "2,3,2");
    r.seconds = t.elapsed();
    return r;
}

CheckResult check_smoothness_equivalence(int max_n) {
    CheckResult r{"shape-level singularity equivalences"};
    Timer t;
    for (int n = 1; n <= max_n && r.pass; ++n) {
        for (const auto& la : partitions_of(n)) {
            ++r.cases;
            const bool shape_crit = has_singular_component(la);
            bool some_bc_singular = false;
            for (const auto& pi : distinct_permutations(la))
                if (bc_is_singular(pi).verdict == Verdict::singular) {
                    some_bc_singular = true;
                    break;
                }
            const bool smooth_list = all_components_smooth(la);
            if (shape_crit != some_bc_singular || shape_crit == smooth_list) {
                r.pass = false;
                r.counterexample = "shape " + la.str() + ": criteria disagree";
                break;
            }
            const bool dominates = contains_pattern(la.parts(), {2, 2, 2, 2}) ||
                                   contains_pattern(la.parts(), {3, 3, 3});
            if (dominates && !all_bc_singular(la)) {
                r.pass = false;
                r.counterexample = "shape " + la.str() + ": dominating shape with a smooth component";
                break;
            }
        }
    }
    r.seconds = t.elapsed();
    return r;
}

std::vector<CheckResult> run_suite(const std::string& suite, int max_n, int jobs) {
    std::vector<CheckResult> out;
    const bool all = suite == "all";
    if (!all && suite != "dims" && suite != "orbits" && suite != "duality" &&
        suite != "evacuation")
        throw parse_error("unknown suite '" + suite + "'");
    if (all || suite == "dims") {
        out.push_back(check_stabilizer_formula(max_n, jobs));
        out.push_back(check_dimension_anchors());
        out.push_back(check_smoothness_equivalence(std::min(max_n, 8)));
    }
    if (all || suite == "orbits") {
        out.push_back(check_flag_stabilizer(max_n, jobs));
        out.push_back(check_density(max_n, jobs));
        out.push_back(check_inductive_step(max_n, jobs));
        out.push_back(check_jordan_chains(max_n, jobs));
    }
    if (all || suite == "duality") {
        out.push_back(check_duality(max_n));
        out.push_back(check_bundle_bases(max_n));
        out.push_back(check_singularity_closure(4, 5));
    }
    if (all || suite == "evacuation") {
        out.push_back(check_evacuation_mirror(max_n, /*crossing_free_only=*/true));
        out.push_back(check_evacuation_involution(max_n));
    }
    return out;
}

std::string format_result(const CheckResult& r) {
    std::ostringstream out;
    out << (r.pass ? "[pass] " : "[FAIL] ") << r.name << " (" << r.cases << " cases, ";
    out.setf(std::ios::fixed);
    out.precision(2);
    out << r.seconds << "s)";
    if (!r.pass) out << "\n       first counterexample: " << r.counterexample;
    return out.str();
}

} // namespace springer
