// Acceptance gate: one line per criterion, [PASS]/[FAIL] plus timing against
// a pinned budget.  Each check recomputes its expectations independently of
// the code under test (hand-frozen values, naive linear algebra, Burnside
// counts), so a green run certifies the library against fixed ground truth,
// not against itself.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eocalc/bigint.hpp"
#include "eocalc/cyclic2.hpp"
#include "eocalc/errors.hpp"
#include "eocalc/f2poly.hpp"
#include "eocalc/hilbert.hpp"
#include "eocalc/koszul.hpp"
#include "eocalc/kzero.hpp"
#include "eocalc/moore.hpp"
#include "eocalc/relation_file.hpp"
#include "eocalc/steenrod.hpp"

using eocalc::BigInt;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

#define EXPECT(cond, message)                         \
    do {                                              \
        if (!(cond)) return Outcome{false, message};  \
    } while (0)

std::string data_path(const std::string& name) {
    return std::string(EOCALC_DATA_DIR) + "/" + name;
}

// ---------------------------------------------------------------------------
// 1. Dimension triple agreement: exact series division, the Gaussian-binomial
//    product, and the Groebner staircase of the finite presentation must all
//    say 3 for (n=2, m=1) and 35 for (n=2, m=2).
Outcome criterion_dimension_triple() {
    const long long expected[2] = {3, 35};
    for (int m = 1; m <= 2; ++m) {
        eocalc::hilbert::HeightContext ctx(2, m);
        BigInt by_series = eocalc::hilbert::poincare_series(ctx).sum();
        BigInt by_product = eocalc::hilbert::gaussian_product(ctx);
        auto staircase = eocalc::f2poly::quotient_dim(eocalc::f2poly::c4_mod2_presentation(m));
        EXPECT(staircase.finite, "presentation quotient came back infinite");
        long long want = expected[m - 1];
        EXPECT(by_series == want, "series sum disagrees at m=" + std::to_string(m));
        EXPECT(by_product == want, "gaussian product disagrees at m=" + std::to_string(m));
        EXPECT(staircase.value == want, "staircase disagrees at m=" + std::to_string(m));
    }
    return {};
}

// ---------------------------------------------------------------------------
// 2. Oddness sweep: every dimension in 1 <= n <= 4, 0 <= m <= 4 and every
//    Gaussian binomial with 0 <= M <= N <= 12 is odd.
Outcome criterion_oddness() {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 0; m <= 4; ++m) {
            BigInt d = eocalc::hilbert::dimension(eocalc::hilbert::HeightContext(n, m));
            EXPECT(eocalc::is_odd(d),
                   "even dimension at n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
    }
    for (long long N = 0; N <= 12; ++N) {
        for (long long M = 0; M <= N; ++M) {
            EXPECT(eocalc::is_odd(eocalc::hilbert::gaussian_binomial(N, M)),
                   "even binomial at N=" + std::to_string(N) + " M=" + std::to_string(M));
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// 3. Series exactness for all n <= 4, m <= 4.  In-cap shapes are divided out
//    in full (any nonzero remainder throws); the two shapes whose numerator
//    exceeds the materialization cap are certified exact by the cyclotomic
//    multiplicity count instead.  n = 1 must give the constant series 1.
Outcome criterion_series_exact() {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 0; m <= 4; ++m) {
            eocalc::hilbert::HeightContext ctx(n, m);
            EXPECT(eocalc::hilbert::series_division_exact(ctx),
                   "certificate failed at n=" + std::to_string(n) + " m=" + std::to_string(m));
            bool in_cap = !(n == 4 && m >= 3);
            if (in_cap) {
                eocalc::hilbert::IntPolynomial p = eocalc::hilbert::poincare_series(ctx);
                EXPECT(p.sum() == eocalc::hilbert::dimension_closed_form(ctx),
                       "series sum mismatch at n=" + std::to_string(n) +
                           " m=" + std::to_string(m));
                if (n == 1) {
                    EXPECT(p.degree() == 0 && p.coeffs[0] == 1,
                           "full truncation at m=" + std::to_string(m) +
                               " is not the constant 1");
                }
            } else {
                bool threw = false;
                try {
                    eocalc::hilbert::poincare_series(ctx);
                } catch (const eocalc::ResourceLimitError&) {
                    threw = true;
                }
                EXPECT(threw, "expected the out-of-cap shape to refuse materialization");
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// 4. Filtration goldens: the order-4 table has 3 layers and the order-8 table
//    has 5 gradings with 6 summands, two of them in grading 2; orbit counts
//    match an independent Burnside recomputation up to n = 5.
Outcome criterion_filtration() {
    using namespace eocalc::koszul;
    LayerTable c4 = associated_graded(2, 1);
    EXPECT(c4.size() == 3, "order-4 table should have 3 gradings");
    EXPECT(layer_report(c4, 2) ==
               "gr 0: M/(C4.x)\n"
               "gr 1: Ind[C2] S[rho(C2)] M/(x)\n"
               "gr 2: S[rho(C4)] M\n",
           "order-4 layer display drifted");

    LayerTable c8 = associated_graded(3, 1);
    EXPECT(c8.size() == 5, "order-8 table should have 5 gradings");
    std::size_t summands = 0;
    for (const auto& [grading, layer] : c8) summands += layer.size();
    EXPECT(summands == 6, "order-8 table should have 6 summands");
    EXPECT(c8.at(2).size() == 2, "grading 2 should carry two summands");
    EXPECT(layer_report(c8, 3) ==
               "gr 0: M/(C8.x)\n"
               "gr 1: Ind[C2] S[rho(C2)] M/(x, gx, g2x)\n"
               "gr 2: Ind[C4] S[rho(C4)] M/(C4.x) (+) Ind[C2] S[2rho(C2)] M/(x, gx)\n"
               "gr 3: Ind[C2] S[3rho(C2)] M/(x)\n"
               "gr 4: S[rho(C8)] M\n",
           "order-8 layer display drifted");

    long long frozen[3] = {2, 3, 6};
    for (int n = 1; n <= 5; ++n) {
        eocalc::cyclic2::CyclicGroup g(n);
        long long L = g.coset_count();
        long long burnside = 0;
        for (long long r = 0; r < L; ++r) burnside += 1LL << std::gcd(r, L);
        burnside /= L;
        long long counted =
            static_cast<long long>(eocalc::cyclic2::orbit_decompose(g).size());
        EXPECT(counted == burnside, "orbit count disagrees with Burnside at n=" +
                                        std::to_string(n));
        if (n <= 3) EXPECT(counted == frozen[n - 1], "frozen orbit count drifted");
    }
    return {};
}

// ---------------------------------------------------------------------------
// 5. K0 goldens: the order-4 relation verbatim; the order-8 relation up to
//    conjugation normal form; the normalized raw cell sum equals the
//    parity-case closed form for n <= 4, m <= 6; the height-drop ladder gives
//    2^k [M^{C_{2^k}}] = [M^e] mod torsion for k <= 3.
Outcome criterion_kzero() {
    using namespace eocalc::kzero;

    K0Relation c4 = quotient_relation(2, 1);
    EXPECT(to_string(c4) == "2[M^C4] = [M/(x)^e] + [M^C2] - [M/(x)^C2] + [M/(C4.x)^C4]",
           "order-4 relation drifted");
    EXPECT(replay_matches(c4), "order-4 trace does not replay");
    EXPECT(rank_conserved(c4), "order-4 relation breaks rank accounting");

    K0Relation c8 = quotient_relation(3, 1);
    EXPECT(to_string(c8) ==
               "2[M^C8] = [M/(x)^e] + [M/(x, gx, g2x)^e] - [M/(x)^C2] + [M/(x, gx)^C2]"
               " - [M/(x, gx, g2x)^C2] + [M/(x, g2x)^C2] + [M^C4] - [M/(C4.x)^C4]"
               " + [M/(C8.x)^C8]",
           "order-8 relation drifted");
    EXPECT(c8.rhs.terms.size() == 9, "order-8 relation should have nine terms");
    EXPECT(replay_matches(c8), "order-8 trace does not replay");
    EXPECT(rank_conserved(c8), "order-8 relation breaks rank accounting");

    for (int n = 0; n <= 4; ++n) {
        for (long long t = 0; t <= 6; ++t) {
            K0Expression closed;
            K0Atom base;
            base.fixed_exponent = n;
            if (n == 0) {
                add_term(closed, base, t % 2 == 0 ? 1 : -1);
            } else if (t % 2 == 0) {
                add_term(closed, base, 1);
            } else {
                K0Atom lower;
                lower.fixed_exponent = n - 1;
                add_term(closed, lower, 1);
                add_term(closed, base, -1);
            }
            NormalizeResult norm = normalize(raw_suspension_sum(n, t), n);
            EXPECT(!norm.flagged, "raw sum normalization flagged a stuck atom");
            EXPECT(norm.expression == closed,
                   "raw cell sum disagrees with the closed form at n=" + std::to_string(n) +
                       " t=" + std::to_string(t));
        }
    }

    auto drops = derive_height_drop(3);
    EXPECT(drops.size() == 3, "expected three height-drop relations");
    for (int k = 1; k <= 3; ++k) {
        const K0Relation& rel = drops[static_cast<std::size_t>(k - 1)];
        EXPECT(rel.mod_torsion, "height drop must be a mod-torsion relation");
        EXPECT(rel.lhs.terms.size() == 1 && rel.rhs.terms.size() == 1,
               "height drop should be a single-atom identity on both sides");
        K0Atom fixed;
        fixed.fixed_exponent = k;
        K0Atom bottom;
        auto lhs = *rel.lhs.terms.begin();
        auto rhs = *rel.rhs.terms.begin();
        EXPECT(lhs.first == fixed && lhs.second == eocalc::pow2(k),
               "height-drop left side drifted at k=" + std::to_string(k));
        EXPECT(rhs.first == bottom && rhs.second == 1,
               "height-drop right side drifted at k=" + std::to_string(k));
        EXPECT(replay_matches(rel), "height-drop trace does not replay");
    }
    return {};
}

// ---------------------------------------------------------------------------
// 6. Moore gate goldens.
Outcome criterion_moore() {
    using namespace eocalc::moore;
    EXPECT(moore_gate(MooreShape({1, 1})).status == Status::RuledOut, "(1,1) must be ruled out");
    EXPECT(moore_gate(MooreShape({1, 2})).status == Status::NotRuledOut,
           "(1,2) must stay open");
    Verdict all_ones = moore_gate(MooreShape({1, 1, 1, 1, 1}));
    EXPECT(all_ones.status == Status::RuledOut, "the all-ones height-4 shape must be ruled out");
    EXPECT(all_ones.bound == 8, "height-4 bound should be 8");
    for (const auto& shape :
         {MooreShape({1, 4}), MooreShape({1, 4, 32}), MooreShape({3, 8, 32})}) {
        EXPECT(moore_gate(shape).status == Status::NotRuledOut,
               "a known-existing shape was ruled out");
    }
    return {};
}

// ---------------------------------------------------------------------------
// 7. Nilpotence and regularity on the bundled relation files.
Outcome criterion_relation_files() {
    for (int m = 1; m <= 3; ++m) {
        auto file = eocalc::f2poly::load_relation_file(
            data_path("c2_m" + std::to_string(m) + ".json"));
        for (int i = 1; i <= m; ++i) {
            EXPECT(eocalc::f2poly::generator_nilpotent(file, "t" + std::to_string(i)),
                   "t" + std::to_string(i) + " not nilpotent at m=" + std::to_string(m));
        }
        eocalc::hilbert::HeightContext ctx(1, m);
        EXPECT(eocalc::f2poly::verify_regularity(ctx, file).ok(),
               "order-2 regularity failed at m=" + std::to_string(m));
    }
    for (int m = 1; m <= 2; ++m) {
        auto file = eocalc::f2poly::load_relation_file(
            data_path("c4_m" + std::to_string(m) + ".json"));
        eocalc::hilbert::HeightContext ctx(2, m);
        EXPECT(eocalc::f2poly::verify_regularity(ctx, file).ok(),
               "order-4 regularity failed at m=" + std::to_string(m));
    }
    return {};
}

// ---------------------------------------------------------------------------
// 8. Groebner engine properties on random instances: the reduced basis is
//    invariant under generator shuffling, and the staircase count equals a
//    brute-force linear-algebra dimension whenever the quotient is small.
//    The brute force works in the monomial box under the pure-power caps each
//    instance is built around: multiples at or above a cap vanish under the
//    projection, so the ideal's intersection with the box is spanned by
//    projected multiples of the generators by box monomials.
long long f2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols) {
    long long rank = 0;
    std::size_t words = (cols + 63) / 64;
    for (auto& row : rows) row.resize(words, 0);
    std::size_t pivot = 0;
    for (std::size_t c = 0; c < cols && pivot < rows.size(); ++c) {
        std::size_t w = c / 64, b = c % 64;
        std::size_t found = pivot;
        while (found < rows.size() && !((rows[found][w] >> b) & 1)) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[pivot], rows[found]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != pivot && ((rows[r][w] >> b) & 1)) {
                for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[pivot][k];
            }
        }
        ++pivot;
        ++rank;
    }
    return rank;
}

Outcome criterion_groebner_properties() {
    using namespace eocalc::f2poly;
    std::mt19937 rng(20240819);

    for (int instance = 0; instance < 100; ++instance) {
        std::uniform_int_distribution<int> arity_dist(2, 3);
        std::size_t arity = static_cast<std::size_t>(arity_dist(rng));
        GeneratorTable table;
        std::vector<unsigned> caps;
        long long box_size = 1;
        for (std::size_t i = 0; i < arity; ++i) {
            table.names.push_back("x" + std::to_string(i + 1));
            table.degrees.push_back(1);
            std::uniform_int_distribution<unsigned> cap_dist(1, 4);
            caps.push_back(cap_dist(rng));
            box_size *= caps.back();
        }
        MonomialOrder ord = default_order(table);

        IdealSpec ideal{table, {}, ord};
        for (std::size_t i = 0; i < arity; ++i) {
            Exponents e(arity, 0u);
            e[i] = caps[i];
            ideal.generators.push_back(make_poly(ord, {e}));
        }
        std::uniform_int_distribution<int> extra_dist(0, 3), term_dist(1, 3);
        for (int extra = extra_dist(rng); extra > 0; --extra) {
            std::vector<Exponents> terms;
            for (int k = term_dist(rng); k > 0; --k) {
                Exponents e(arity);
                for (std::size_t i = 0; i < arity; ++i) {
                    std::uniform_int_distribution<unsigned> ed(0, caps[i] - 1);
                    e[i] = ed(rng);
                }
                terms.push_back(e);
            }
            Polynomial p = make_poly(ord, terms);
            if (!p.is_zero()) ideal.generators.push_back(p);
        }

        std::vector<Polynomial> reference = groebner(ideal);
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            IdealSpec mixed = ideal;
            std::shuffle(mixed.generators.begin(), mixed.generators.end(), rng);
            if (groebner(mixed) != reference) {
                return {false, "reduced basis changed under shuffling, instance " +
                                   std::to_string(instance)};
            }
        }

        QuotientDimension qd = quotient_dim(ideal);
        EXPECT(qd.finite, "a capped instance must have a finite quotient");
        EXPECT(qd.value <= box_size, "staircase exceeded the box bound");

        // brute force in the cap box
        std::vector<Exponents> box;
        Exponents cur(arity, 0u);
        for (;;) {
            box.push_back(cur);
            std::size_t i = 0;
            while (i < arity && cur[i] + 1 >= caps[i]) cur[i++] = 0;
            if (i == arity) break;
            ++cur[i];
        }
        std::map<Exponents, std::size_t> column;
        for (std::size_t i = 0; i < box.size(); ++i) column[box[i]] = i;
        std::vector<std::vector<std::uint64_t>> rows;
        std::size_t words = (box.size() + 63) / 64;
        for (const auto& mono : box) {
            for (const auto& g : ideal.generators) {
                std::vector<std::uint64_t> row(words, 0);
                bool nonzero = false;
                for (const auto& term : g.terms) {
                    auto it = column.find(monomial_mul(mono, term));
                    if (it != column.end()) {
                        row[it->second / 64] ^= 1ull << (it->second % 64);
                        nonzero = true;
                    }
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        long long brute = static_cast<long long>(box.size()) - f2_rank(std::move(rows), box.size());
        if (qd.value != brute) {
            return {false, "staircase " + std::to_string(qd.value) + " vs brute force " +
                               std::to_string(brute) + " on instance " + std::to_string(instance)};
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// 9. Euler formula consistency on random shapes for every n <= 3, m <= 2.
Outcome criterion_euler_consistency() {
    std::mt19937 rng(6174);
    for (int n = 1; n <= 3; ++n) {
        for (int m = 0; m <= 2; ++m) {
            eocalc::hilbert::HeightContext ctx(n, m);
            BigInt dim = eocalc::hilbert::dimension(ctx);
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<long long> exponents;
                std::uniform_int_distribution<long long> e(1, 64);
                for (long long i = 0; i <= ctx.h(); ++i) exponents.push_back(e(rng));
                eocalc::moore::MooreShape shape(exponents);
                BigInt chi_eo = eocalc::moore::chi_eo(ctx, shape);
                BigInt chi_bp = eocalc::moore::chi_bp(shape);
                EXPECT(chi_eo == dim * chi_bp, "chi_eo is not dimension times chi_bp");
                EXPECT(eocalc::nu2(chi_eo) == eocalc::nu2(chi_bp),
                       "2-adic valuations of the two Euler characteristics differ");
            }
        }
    }
    return {};
}

struct Criterion {
    int number;
    const char* label;
    double budget_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "dimension triple agreement (3 and 35 by three routes)", 10.0,
         criterion_dimension_triple},
        {2, "oddness sweep (dimensions and Gaussian binomials)", 5.0, criterion_oddness},
        {3, "series exactness across the grid", 5.0, criterion_series_exact},
        {4, "filtration layer tables and Burnside orbit counts", 1.0, criterion_filtration},
        {5, "K0 relations, raw cell sums, height drops", 1.0, criterion_kzero},
        {6, "Moore gate verdicts", 1.0, criterion_moore},
        {7, "nilpotence and regularity on bundled relation files", 30.0,
         criterion_relation_files},
        {8, "Groebner determinism and brute-force dimensions", 60.0,
         criterion_groebner_properties},
        {9, "Euler characteristic formula consistency", 5.0, criterion_euler_consistency},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("unexpected exception: ") + e.what()};
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = elapsed < c.budget_seconds;
        bool pass = outcome.ok && in_budget;
        if (!pass) ++failures;
        std::printf("[%s] %d. %s (%.2fs, budget %.0fs)%s%s\n", pass ? "PASS" : "FAIL", c.number,
                    c.label, elapsed, c.budget_seconds,
                    outcome.ok ? "" : (" -- " + outcome.detail).c_str(),
                    (outcome.ok && !in_budget) ? " -- over budget" : "");
    }
    if (failures > 0) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
