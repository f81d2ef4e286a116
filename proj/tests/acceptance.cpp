// Acceptance gate: every numbered criterion below re-derives a closed-form
// count through an independent exhaustive path and demands exact agreement.
// One PASS/FAIL line is printed per criterion; the exit code is zero only
// when all of them pass.

#include <algorithm>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "lcdc/census.hpp"

using namespace lcdc;

namespace {

struct Gate {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) why << what;
        ok = false;
    }
};

struct Cell {
    std::int64_t q;
    int t;
    std::int64_t n;
    FormKind delta;
    BigInt expect;
};

PrimePower pp(std::int64_t q) {
    std::int64_t p = q;
    for (std::int64_t c = 2; c * c <= q; ++c)
        if (q % c == 0) {
            p = c;
            break;
        }
    int e = 0;
    for (std::int64_t rest = q; rest > 1; rest /= p) ++e;
    return make_prime_power(p, e);
}

const std::vector<Cell>& oracle_cells() {
    static const std::vector<Cell> cells = {
        {2, 2, 1, FormKind::Ordinary, 4},    {2, 2, 3, FormKind::Ordinary, 16},
        {2, 2, 5, FormKind::Ordinary, 56},   {2, 2, 7, FormKind::Ordinary, 296},
        {3, 2, 1, FormKind::Ordinary, 4},    {3, 2, 2, FormKind::Ordinary, 16},
        {3, 2, 4, FormKind::Ordinary, 128},  {3, 2, 5, FormKind::Ordinary, 296},
        {2, 3, 1, FormKind::Ordinary, 10},   {2, 3, 3, FormKind::Ordinary, 260},
        {3, 3, 1, FormKind::Ordinary, 20},   {3, 3, 2, FormKind::Ordinary, 400},
        {2, 2, 1, FormKind::Star, 2},        {2, 2, 3, FormKind::Star, 8},
        {2, 2, 5, FormKind::Star, 28},       {2, 2, 7, FormKind::Star, 148},
        {3, 2, 1, FormKind::Star, 6},        {3, 2, 2, FormKind::Star, 36},
        {3, 2, 4, FormKind::Star, 288},      {3, 3, 1, FormKind::Star, 20},
        {3, 3, 2, FormKind::Star, 400},      {2, 2, 1, FormKind::Hermitian, 2},
        {2, 2, 3, FormKind::Hermitian, 8},   {2, 2, 5, FormKind::Hermitian, 28},
        {2, 2, 7, FormKind::Hermitian, 148}, {3, 2, 1, FormKind::Hermitian, 2},
        {3, 2, 2, FormKind::Hermitian, 4},   {3, 2, 4, FormKind::Hermitian, 32},
    };
    return cells;
}

std::string cell_name(const Cell& c) {
    std::ostringstream s;
    s << "(q=" << c.q << ", t=" << c.t << ", n=" << c.n << ", " << form_name(c.delta) << ")";
    return s.str();
}

// 1. The closed-form census equals exhaustive enumeration on every oracle
//    cell, and both equal the recorded value.
bool criterion_1() {
    Gate g;
    for (const Cell& c : oracle_cells()) {
        const CensusRequest req{pp(c.q), c.t, c.n, c.delta};
        const BigInt closed = census(req).total;
        const BigInt brute = enumerate_lcd_count(req);
        g.expect(closed == brute && closed == c.expect,
                 cell_name(c) + ": closed " + to_decimal(closed) + ", enumerated " +
                     to_decimal(brute) + ", expected " + to_decimal(c.expect));
        if (!g.ok) break;
    }
    if (!g.ok) std::cerr << "  criterion 1: " << g.why.str() << "\n";
    return g.ok;
}

void match_breakdown(Gate& g, const FormedSpace& S, int t, const KBreakdown& expect,
                     const std::string& what) {
    for (int k = 0; k <= t; ++k) {
        const BigInt got = count_nondeg_subspaces(S, k);
        g.expect(got == expect.per_k[static_cast<std::size_t>(k)],
                 what + " k=" + std::to_string(k) + ": counted " + to_decimal(got) + ", formula " +
                     to_decimal(expect.per_k[static_cast<std::size_t>(k)]));
        if (!g.ok) return;
    }
}

// 2. Per-dimension nondegenerate subspace counts match brute force for the
//    unitary, symplectic, orthogonal and even-q trace geometries.
bool criterion_2() {
    Gate g;
    for (std::int64_t q : {2, 3})
        for (int t = 1; t <= 4 && g.ok; ++t) {
            FieldPtr big = build_field(q, 2);
            match_breakdown(g, standard_hermitian(big, t), t, n_unitary(t, 2, q),
                            "unitary t=" + std::to_string(t) + " q=" + std::to_string(q));
        }

    for (std::int64_t q : {2, 3, 4})
        for (int t : {2, 4}) {
            if (!g.ok) break;
            const PrimePower qq = pp(q);
            FieldPtr F = build_field(qq.p, qq.e);
            match_breakdown(g, standard_symplectic(F, t), t, n_symplectic(t, q),
                            "symplectic t=" + std::to_string(t) + " q=" + std::to_string(q));
        }

    for (std::int64_t q : {3, 5, 7})
        for (int t : {2, 3, 4}) {
            if (!g.ok) break;
            const TraceBlock b = trace_gram_block(pp(q), t, FormKind::Ordinary);
            match_breakdown(g, make_formed(b.base, b.gram), t, n_orthogonal_odd_q(t, q),
                            "orthogonal t=" + std::to_string(t) + " q=" + std::to_string(q));
        }

    for (std::int64_t q : {2, 4})
        for (int t : {2, 3, 4}) {
            if (!g.ok) break;
            const TraceBlock b = trace_gram_block(pp(q), t, FormKind::Ordinary);
            match_breakdown(g, make_formed(b.base, b.gram), t, n_ordinary_even_q(t, q),
                            "even-q trace t=" + std::to_string(t) + " q=" + std::to_string(q));
        }

    if (!g.ok) std::cerr << "  criterion 2: " << g.why.str() << "\n";
    return g.ok;
}

// 3. Pair-coset counts: the module-pair closed form and the isotropic and
//    hyperbolic element formulas match exhaustive counting.
bool criterion_3() {
    Gate g;
    for (std::int64_t q : {2, 3})
        for (int d : {1, 2})
            for (int t : {2, 3}) {
                if (!g.ok) break;
                const PrimePower qq = pp(q);
                const KBreakdown expect = n_pair(t, d, q);
                for (int k = 0; k <= t; ++k) {
                    const BigInt got = count_nondeg_module_pairs(t, d, qq, k);
                    g.expect(got == expect.per_k[static_cast<std::size_t>(k)],
                             "pairs t=" + std::to_string(t) + " d=" + std::to_string(d) +
                                 " q=" + std::to_string(q) + " k=" + std::to_string(k) +
                                 ": counted " + to_decimal(got));
                    if (!g.ok) break;
                }

                const PairedIsoHyp counted = count_paired_isotropic_hyperbolic(t, d, qq);
                g.expect(counted.nontrivial_isotropic == i_r_count(t, d, q),
                         "isotropic t=" + std::to_string(t) + " d=" + std::to_string(d) +
                             " q=" + std::to_string(q));
                g.expect(counted.hyperbolic_pairs == h_r_count(t, d, q),
                         "hyperbolic t=" + std::to_string(t) + " d=" + std::to_string(d) +
                             " q=" + std::to_string(q));
            }
    if (!g.ok) std::cerr << "  criterion 3: " << g.why.str() << "\n";
    return g.ok;
}

// 4. The closed-form Witt index of the ordinary trace space agrees with
//    exhaustive search for totally isotropic subspaces.
bool criterion_4() {
    Gate g;
    for (std::int64_t q : {3, 5, 7})
        for (int t : {2, 3, 4}) {
            if (!g.ok) break;
            const TraceBlock b = trace_gram_block(pp(q), t, FormKind::Ordinary);
            const int brute = witt_index_bruteforce(make_formed(b.base, b.gram));
            g.expect(brute == witt_index_closed(t, q),
                     "t=" + std::to_string(t) + " q=" + std::to_string(q) + ": searched " +
                         std::to_string(brute) + ", formula " +
                         std::to_string(witt_index_closed(t, q)));
        }
    if (!g.ok) std::cerr << "  criterion 4: " << g.why.str() << "\n";
    return g.ok;
}

// 5. Anchor values, with the length-7 ordinary cell checked through both the
//    closed form and the enumeration.
bool criterion_5() {
    Gate g;
    const PrimePower q2 = pp(2);
    g.expect(total_count(q2, 2, 1, FormKind::Ordinary) == 4, "(2,2,1,ordinary) != 4");
    g.expect(total_count(q2, 2, 1, FormKind::Star) == 2, "(2,2,1,star) != 2");
    g.expect(total_count(q2, 2, 1, FormKind::Hermitian) == 2, "(2,2,1,hermitian) != 2");
    g.expect(total_count(q2, 3, 1, FormKind::Ordinary) == 10, "(2,3,1,ordinary) != 10");
    const CensusRequest req{q2, 2, 7, FormKind::Ordinary};
    g.expect(census(req).total == 296, "(2,2,7,ordinary) closed form != 296");
    g.expect(enumerate_lcd_count(req) == 296, "(2,2,7,ordinary) enumeration != 296");
    if (!g.ok) std::cerr << "  criterion 5: " << g.why.str() << "\n";
    return g.ok;
}

void gaussian_identities(Gate& g) {
    for (const BigInt& Q : {BigInt(2), BigInt(3), BigInt(4), BigInt(5), BigInt(8), BigInt(9)})
        for (int a = 1; a <= 8 && g.ok; ++a)
            for (int b = 0; b <= a; ++b) {
                const BigInt v = gauss_binom(a, b, Q);
                g.expect(v > 0, "gaussian positivity");
                g.expect(v == gauss_binom(a, a - b, Q), "gaussian symmetry");
                if (b >= 1)
                    g.expect(v == gauss_binom(a - 1, b - 1, Q) +
                                      big_pow(Q, static_cast<unsigned>(b)) * gauss_binom(a - 1, b, Q),
                             "gaussian recurrence");
            }
}

void closed_forms_divide_exactly(Gate& g) {
    try {
        for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
            const PrimePower qq = pp(q);
            for (int t = 1; t <= 6; ++t) {
                for (int d : {2, 4}) n_unitary(t, d, q);
                for (int d : {1, 2, 3}) n_pair(t, d, q);
                if (t % 2 == 0) n_symplectic(t, q);
                if (q % 2 == 0) {
                    n_ordinary_even_q(t, q);
                } else {
                    n_orthogonal_odd_q(t, q);
                    for (int k = 2; k < t; k += 2) {
                        orth_k_by_witt(t, q, k, k / 2);
                        orth_k_by_witt(t, q, k, k / 2 - 1);
                    }
                    if (t % 2 == 1) lk_mk(t, q);
                }
                if (t >= 2)
                    for (int d : {1, 2}) {
                        i_r_count(t, d, q);
                        h_r_count(t, d, q);
                    }
                for (FormKind delta : {FormKind::Star, FormKind::Ordinary, FormKind::Hermitian}) {
                    if (t < 2 || !form_admissible(delta, t, qq.p)) continue;
                    r_factor(delta, t, qq);
                    for (std::int64_t n = 1; n <= 20; ++n)
                        if (std::gcd(n, qq.p) == 1) total_count(qq, t, n, delta);
                }
            }
        }
    } catch (const std::exception& e) {
        g.expect(false, std::string("closed-form sweep threw: ") + e.what());
    }
}

void divisibility_corollary(Gate& g) {
    for (std::int64_t qi : {3, 5, 7}) {
        const BigInt q = qi;
        for (int lam = 1; lam <= 4 && g.ok; ++lam)
            for (int mu = 1; mu <= lam; ++mu) {
                const BigInt binom = gauss_binom(lam, mu, q * q);
                const BigInt pm = big_pow(q, static_cast<unsigned>(mu)) + 1;
                const BigInt mm = big_pow(q, static_cast<unsigned>(mu)) - 1;
                const BigInt pl = big_pow(q, static_cast<unsigned>(lam - mu)) + 1;
                const BigInt ml = big_pow(q, static_cast<unsigned>(lam - mu)) - 1;
                try {
                    if (qi % 4 == 3 && lam % 2 == 1) {
                        const BigInt den = 2 * (big_pow(q, static_cast<unsigned>(lam)) + 1);
                        exact_div(pm * pl * binom, den);
                        exact_div(mm * ml * binom, den);
                    } else {
                        const BigInt den = 2 * (big_pow(q, static_cast<unsigned>(lam)) - 1);
                        exact_div(pm * ml * binom, den);
                        exact_div(mm * pl * binom, den);
                    }
                } catch (const std::exception&) {
                    g.expect(false, "divisibility fails at q=" + std::to_string(qi) +
                                        " lambda=" + std::to_string(lam) +
                                        " mu=" + std::to_string(mu));
                }
            }
    }
}

void nonsingular_vector_classes(Gate& g) {
    for (std::int64_t q : {3, 5, 7})
        for (int k : {1, 3, 5}) {
            const auto [l, m] = lk_mk(k, q);
            g.expect(l + m == big_pow(BigInt(q), static_cast<unsigned>(k)) -
                                  big_pow(BigInt(q), static_cast<unsigned>(k - 1)),
                     "L+M identity k=" + std::to_string(k) + " q=" + std::to_string(q));
        }
    for (std::int64_t q : {3, 5}) {
        FieldPtr F = build_field(q, 1);
        const Elem z = F->zero(), o = F->one();
        FormedSpace S = make_formed(F, Mat{{o, z, z}, {z, z, o}, {z, o, z}});
        g.expect(count_isometric_nonsingular(S, {o, z, z}) == lk_mk(3, q),
                 "vector classes vs count at q=" + std::to_string(q));
    }
}

void coset_invariants(Gate& g) {
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const PrimePower qq = pp(q);
        for (int t : {2, 3})
            for (std::int64_t n = 1; n <= 64 && g.ok; ++n) {
                if (std::gcd(n, qq.p) != 1) continue;
                const CosetTable tab = cosets(qq, n, t);
                const MuClassification cls = classify(tab);
                const std::string at = " at q=" + std::to_string(q) + " n=" + std::to_string(n);

                std::set<std::int64_t> seen;
                for (std::size_t i = 0; i < tab.reps.size(); ++i) {
                    const auto& cs = tab.cosets[i];
                    g.expect(!cs.empty() && tab.reps[i] == *std::min_element(cs.begin(), cs.end()),
                             "representative is not the minimum" + at);
                    g.expect(static_cast<int>(cs.size()) == tab.d[i] &&
                                 tab.g[i] == std::gcd(tab.d[i], t) &&
                                 tab.D[i] == tab.d[i] / tab.g[i],
                             "coset degree bookkeeping" + at);
                    for (std::int64_t x : cs) {
                        seen.insert(x);
                        const std::int64_t next =
                            static_cast<std::int64_t>((BigInt(x) * qq.q % n).convert_to<std::int64_t>());
                        g.expect(std::find(cs.begin(), cs.end(), next) != cs.end(),
                                 "coset not closed under multiplication by q" + at);
                    }
                    const std::int64_t neg = ((n - tab.reps[i]) % n + n) % n;
                    const auto& img = tab.cosets[static_cast<std::size_t>(cls.mu[i])];
                    g.expect(std::find(img.begin(), img.end(), neg) != img.end(),
                             "mu does not track negation" + at);
                    g.expect(cls.mu[static_cast<std::size_t>(cls.mu[i])] == static_cast<int>(i),
                             "mu is not an involution" + at);
                }
                g.expect(static_cast<std::int64_t>(seen.size()) == n, "cosets do not partition" + at);
                g.expect(tab.reps[0] == 0, "zero coset missing" + at);

                g.expect(cls.i_sharp.has_value() == (n % 2 == 0), "i_sharp parity" + at);
                if (cls.i_sharp)
                    g.expect(tab.cosets[static_cast<std::size_t>(*cls.i_sharp)] ==
                                 std::vector<std::int64_t>{n / 2},
                             "i_sharp coset is not {n/2}" + at);
                g.expect(static_cast<int>(cls.special.size()) == (n % 2 == 0 ? 2 : 1),
                         "special set size" + at);
                for (int i : cls.fixed)
                    g.expect(tab.d[static_cast<std::size_t>(i)] % 2 == 0,
                             "fixed coset with odd size" + at);
                for (int i : cls.paired)
                    g.expect(cls.mu[static_cast<std::size_t>(i)] > i, "pair index ordering" + at);
                g.expect(cls.special.size() + cls.fixed.size() + 2 * cls.paired.size() ==
                             tab.reps.size(),
                         "classification does not partition the cosets" + at);
            }
    }
}

void dual_dimensions(Gate& g) {
    for (const Cell& c : oracle_cells()) {
        if (!g.ok) return;
        try {
            g.expect(dual_dimension_check({pp(c.q), c.t, c.n, c.delta}),
                     "dual dimension mismatch at " + cell_name(c));
        } catch (const std::exception& e) {
            g.expect(false, "dual check threw at " + cell_name(c) + ": " + e.what());
        }
    }
}

// 6. Structural identities: Gaussian coefficients, exact divisibility of
//    every closed form, the split-term divisibility corollary, nonsingular
//    vector classes, dual dimensions, and cyclotomic coset invariants.
bool criterion_6() {
    Gate g;
    gaussian_identities(g);
    closed_forms_divide_exactly(g);
    divisibility_corollary(g);
    nonsingular_vector_classes(g);
    dual_dimensions(g);
    coset_invariants(g);
    if (!g.ok) std::cerr << "  criterion 6: " << g.why.str() << "\n";
    return g.ok;
}

// 7. The flat enumeration over all shift-invariant subspaces agrees with the
//    component-decomposition enumeration.
bool criterion_7() {
    Gate g;
    for (std::int64_t n : {1, 3})
        for (FormKind delta : {FormKind::Star, FormKind::Ordinary, FormKind::Hermitian}) {
            if (!g.ok) break;
            const CensusRequest req{pp(2), 2, n, delta};
            const BigInt flat = enumerate_lcd_count_flat(req);
            const BigInt comp = enumerate_lcd_count(req);
            g.expect(flat == comp, "flat " + to_decimal(flat) + " vs decomposed " +
                                       to_decimal(comp) + " at n=" + std::to_string(n) + " " +
                                       form_name(delta));
        }
    if (!g.ok) std::cerr << "  criterion 7: " << g.why.str() << "\n";
    return g.ok;
}

}  // namespace

int main() {
    bool all = true;
    const std::vector<std::pair<int, bool (*)()>> criteria = {
        {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4},
        {5, criterion_5}, {6, criterion_6}, {7, criterion_7},
    };
    for (const auto& [num, fn] : criteria) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            std::cerr << "  criterion " << num << " threw: " << e.what() << "\n";
        }
        std::cout << "criterion " << num << ": " << (ok ? "PASS" : "FAIL") << std::endl;
        all = all && ok;
    }
    return all ? 0 : 1;
}
