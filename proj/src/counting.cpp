#include "lcdc/counting.hpp"

#include <numeric>

#include "lcdc/errors.hpp"

namespace lcdc {

namespace {

BigInt qpow(const BigInt& q, long long e) {
    if (e < 0) throw Error("negative exponent");
    return big_pow(q, static_cast<unsigned long long>(e));
}

}  // namespace

std::string form_name(FormKind delta) {
    switch (delta) {
        case FormKind::Star: return "star";
        case FormKind::Ordinary: return "ordinary";
        case FormKind::Hermitian: return "hermitian";
    }
    throw Error("unknown form");
}

std::optional<FormKind> parse_form(const std::string& name) {
    if (name == "star") return FormKind::Star;
    if (name == "ordinary") return FormKind::Ordinary;
    if (name == "hermitian") return FormKind::Hermitian;
    return std::nullopt;
}

bool form_admissible(FormKind delta, int t, std::int64_t p) {
    if (t < 2) return false;
    switch (delta) {
        case FormKind::Star: return t % p != 1;
        case FormKind::Ordinary: return true;
        case FormKind::Hermitian: return t % 2 == 0;
    }
    return false;
}

void require_admissible(FormKind delta, int t, std::int64_t p) {
    if (form_admissible(delta, t, p)) return;
    std::string why = "t must be at least 2";
    if (t >= 2 && delta == FormKind::Star) why = "t = 1 (mod p) makes the star form degenerate";
    if (t >= 2 && delta == FormKind::Hermitian) why = "t must be even";
    throw FormInadmissible("form " + form_name(delta) + " is not admissible for t = " +
                           std::to_string(t) + ", p = " + std::to_string(p) + ": " + why);
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("division by zero");
    BigInt quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0)
        throw Error("non-exact division: " + num.str() + " / " + den.str());
    return quot;
}

BigInt gauss_binom(int a, int b, const BigInt& Q) {
    if (b < 0 || b > a) return 0;
    if (b == 0) return 1;
    BigInt num = 1, den = 1;
    for (int i = 0; i < b; ++i) {
        num *= qpow(Q, a) - qpow(Q, i);
        den *= qpow(Q, b) - qpow(Q, i);
    }
    return exact_div(num, den);
}

KBreakdown n_unitary(int t, int d, const BigInt& q) {
    if (d < 2 || d % 2 != 0) throw OddD("n_unitary requires even d, got " + std::to_string(d));
    if (t < 1) throw Error("n_unitary requires t >= 1");
    KBreakdown out;
    out.per_k.assign(static_cast<std::size_t>(t) + 1, 0);
    out.per_k[0] = 1;
    out.per_k[static_cast<std::size_t>(t)] = 1;
    const long long dh = d / 2;
    for (int k = 1; k < t; ++k) {
        BigInt num = 1, den = 1;
        for (int j = 0; j < k; ++j) {
            const int se = ((t - j) % 2 == 0) ? 1 : -1;
            const int sk = ((k - j) % 2 == 0) ? 1 : -1;
            num *= qpow(q, static_cast<long long>(t - j) * dh) - se;
            den *= qpow(q, static_cast<long long>(k - j) * dh) - sk;
        }
        out.per_k[static_cast<std::size_t>(k)] =
            qpow(q, static_cast<long long>(k) * (t - k) * dh) * exact_div(num, den);
    }
    out.total = 0;
    for (const auto& v : out.per_k) out.total += v;
    return out;
}

KBreakdown n_symplectic(int t, const BigInt& q) {
    if (t < 2 || t % 2 != 0) throw OddT("n_symplectic requires even t, got " + std::to_string(t));
    KBreakdown out;
    out.per_k.assign(static_cast<std::size_t>(t) + 1, 0);
    const BigInt q2 = q * q;
    for (int k = 0; k <= t; k += 2)
        out.per_k[static_cast<std::size_t>(k)] =
            qpow(q, static_cast<long long>(k) * (t - k) / 2) * gauss_binom(t / 2, k / 2, q2);
    out.total = 0;
    for (const auto& v : out.per_k) out.total += v;
    return out;
}

int witt_index_closed(int t, const BigInt& q) {
    if (q % 2 == 0) throw EvenQ("witt_index_closed requires odd q");
    if (t < 1) throw Error("witt_index_closed requires t >= 1");
    if (t % 2 == 1) return (t - 1) / 2;
    if (q % 4 == 1) return (t - 2) / 2;
    return (t % 4 == 0) ? (t - 2) / 2 : t / 2;
}

int star_witt_index(int t, const PrimePower& q) {
    if (q.p == 2) throw EvenQ("star_witt_index requires odd q");
    require_admissible(FormKind::Star, t, q.p);
    if (t % 2 == 1) return (t - 1) / 2;
    const int w0 = witt_index_closed(t, q.q);
    // 1 - t reduced into the prime field; nonzero since t = 1 (mod p) is
    // inadmissible for the star form.
    const std::int64_t c = ((1 - t) % q.p + q.p) % q.p;
    const BigInt euler = boost::multiprecision::powm(BigInt(c), (q.q - 1) / 2, BigInt(q.p));
    if (euler == 1) return w0;  // 1 - t is a square in GF(q); same isometry class
    return (w0 == t / 2) ? (t - 2) / 2 : t / 2;
}

namespace {

// Per-dimension nondegenerate subspace counts of a t-dimensional symmetric
// space over GF(q), q odd, with ambient Witt index w. Only even t consults
// w: the odd-k terms carry a unit q^(t/2) -/+ 1 that distinguishes the
// hyperbolic space (w = t/2) from the defective one (w = t/2 - 1).
KBreakdown orthogonal_breakdown_by_witt(int t, const BigInt& q, int w) {
    const BigInt q2 = q * q;
    KBreakdown out;
    out.per_k.assign(static_cast<std::size_t>(t) + 1, 0);
    for (int k = 0; k <= t; ++k) {
        BigInt v;
        if (k % 2 == 0) {
            if (t % 2 == 1)
                v = qpow(q, static_cast<long long>(k) * (t - k + 1) / 2) *
                    gauss_binom((t - 1) / 2, k / 2, q2);
            else
                v = qpow(q, static_cast<long long>(k) * (t - k) / 2) *
                    gauss_binom(t / 2, k / 2, q2);
        } else {
            if (t % 2 == 1) {
                v = qpow(q, static_cast<long long>(t - k) * (k + 1) / 2) *
                    gauss_binom((t - 1) / 2, (k - 1) / 2, q2);
            } else {
                const BigInt unit = (w == t / 2) ? qpow(q, t / 2) - 1 : qpow(q, t / 2) + 1;
                v = qpow(q, (static_cast<long long>(t) * k - static_cast<long long>(k) * k - 1) / 2) *
                    unit * gauss_binom((t - 2) / 2, (k - 1) / 2, q2);
            }
        }
        out.per_k[static_cast<std::size_t>(k)] = v;
    }
    out.total = 0;
    for (const auto& v : out.per_k) out.total += v;
    return out;
}

}  // namespace

KBreakdown n_orthogonal_odd_q(int t, const BigInt& q) {
    if (q % 2 == 0) throw EvenQ("n_orthogonal_odd_q requires odd q");
    if (t < 1) throw Error("n_orthogonal_odd_q requires t >= 1");
    return orthogonal_breakdown_by_witt(t, q, witt_index_closed(t, q));
}

BigInt orth_k_by_witt(int t, const BigInt& q, int k, int m_k) {
    if (q % 2 == 0) throw EvenQ("orth_k_by_witt requires odd q");
    if (k < 0 || k % 2 != 0)
        throw BadWittIndex("orth_k_by_witt is defined for even k >= 0, got k = " + std::to_string(k));
    if (m_k != k / 2 && m_k != k / 2 - 1)
        throw BadWittIndex("restricted Witt index must be k/2 or k/2 - 1, got " + std::to_string(m_k));
    if (m_k < 0) throw BadWittIndex("restricted Witt index must be non-negative");
    const int w = witt_index_closed(t, q);
    const BigInt q2 = q * q;
    const BigInt front = qpow(q, static_cast<long long>(k) * (t - k) / 2);
    const BigInt half_k = qpow(q, k / 2);
    const bool defect = (m_k == k / 2 - 1);  // restricted form has the smaller Witt index
    const BigInt kfac = defect ? BigInt(half_k - 1) : BigInt(half_k + 1);
    if (t % 2 == 1)
        return exact_div(front * kfac * gauss_binom((t - 1) / 2, k / 2, q2), 2);
    const BigInt half_tk = qpow(q, (t - k) / 2);
    const BigInt half_t = qpow(q, t / 2);
    if (w == t / 2) {
        const BigInt other = defect ? BigInt(half_tk - 1) : BigInt(half_tk + 1);
        return exact_div(front * kfac * other * gauss_binom(t / 2, k / 2, q2), 2 * (half_t + 1));
    }
    const BigInt other = defect ? BigInt(half_tk + 1) : BigInt(half_tk - 1);
    return exact_div(front * kfac * other * gauss_binom(t / 2, k / 2, q2), 2 * (half_t - 1));
}

std::pair<BigInt, BigInt> lk_mk(int k, const BigInt& q) {
    if (k < 1 || k % 2 == 0) throw EvenK("lk_mk requires odd k, got " + std::to_string(k));
    if (q % 2 == 0) throw EvenQ("lk_mk requires odd q");
    const BigInt a = qpow(q, (k - 1) / 2);
    const BigInt l = exact_div(a * (q - 1) * (a + 1), 2);
    const BigInt m = exact_div(a * (q - 1) * (a - 1), 2);
    return {l, m};
}

KBreakdown n_ordinary_even_q(int t, const BigInt& q) {
    if (q % 2 != 0) throw OddQ("n_ordinary_even_q requires even q");
    if (t < 1) throw Error("n_ordinary_even_q requires t >= 1");
    const BigInt q2 = q * q;
    KBreakdown out;
    out.per_k.assign(static_cast<std::size_t>(t) + 1, 0);
    for (int k = 0; k <= t; ++k) {
        BigInt v;
        if (k == 0 || k == t) {
            v = 1;
        } else if (t % 2 == 1) {
            if (k % 2 == 0)
                v = qpow(q, static_cast<long long>(k) * (t - k + 1) / 2) *
                    gauss_binom((t - 1) / 2, k / 2, q2);
            else
                v = qpow(q, static_cast<long long>(t - k) * (k + 1) / 2) *
                    gauss_binom((t - 1) / 2, (k - 1) / 2, q2);
        } else {
            const long long kk = static_cast<long long>(t) * k - static_cast<long long>(k) * k;
            if (k % 2 == 0) {
                BigInt inner = (qpow(q, k) + q - 1) * gauss_binom((t - 2) / 2, k / 2, q2) +
                               (qpow(q, t - k + 1) - qpow(q, t - k) + 1) *
                                   gauss_binom((t - 2) / 2, (k - 2) / 2, q2);
                v = qpow(q, (kk - 2) / 2) * inner;
            } else {
                v = qpow(q, (kk + t - 1) / 2) * gauss_binom((t - 2) / 2, (k - 1) / 2, q2);
            }
        }
        out.per_k[static_cast<std::size_t>(k)] = v;
    }
    out.total = 0;
    for (const auto& v : out.per_k) out.total += v;
    return out;
}

KBreakdown n_pair(int t, int d, const BigInt& q) {
    if (t < 1) throw Error("n_pair requires t >= 1");
    if (d < 1) throw Error("n_pair requires d >= 1");
    const BigInt qd = qpow(q, d);
    KBreakdown out;
    out.per_k.assign(static_cast<std::size_t>(t) + 1, 0);
    for (int k = 0; k <= t; ++k)
        out.per_k[static_cast<std::size_t>(k)] =
            qpow(q, static_cast<long long>(k) * d * (t - k)) * gauss_binom(t, k, qd);
    out.total = 0;
    for (const auto& v : out.per_k) out.total += v;
    return out;
}

BigInt i_r_count(int r, int d, const BigInt& q) {
    if (r < 2) throw RankTooSmall("i_r_count requires r >= 2, got " + std::to_string(r));
    return (qpow(q, static_cast<long long>(r - 1) * d) - 1) * (qpow(q, static_cast<long long>(r) * d) - 1);
}

BigInt h_r_count(int r, int d, const BigInt& q) {
    if (r < 2) throw RankTooSmall("h_r_count requires r >= 2, got " + std::to_string(r));
    return qpow(q, static_cast<long long>(d) * (2 * r - 3)) * i_r_count(r, d, q);
}

namespace {

// Literal per-dimension closed forms for the self-paired factor, one per
// dispatch case. Case numbering follows the dispatch order in r_factor.
std::vector<BigInt> bullet_per_k(int bullet, int t, const BigInt& q) {
    const BigInt q2 = q * q;
    std::vector<BigInt> per(static_cast<std::size_t>(t) + 1, 0);
    for (int k = 0; k <= t; ++k) {
        BigInt v = 0;
        const long long kk = static_cast<long long>(t) * k - static_cast<long long>(k) * k;
        switch (bullet) {
            case 1:
                if (k % 2 == 0) v = qpow(q, kk / 2) * gauss_binom(t / 2, k / 2, q2);
                break;
            case 2:
            case 5:
                if (k % 2 == 0)
                    v = qpow(q, static_cast<long long>(k) * (t - k + 1) / 2) *
                        gauss_binom((t - 1) / 2, k / 2, q2);
                else
                    v = qpow(q, static_cast<long long>(t - k) * (k + 1) / 2) *
                        gauss_binom((t - 1) / 2, (k - 1) / 2, q2);
                break;
            case 3:
            case 4: {
                if (k % 2 == 0) {
                    v = qpow(q, kk / 2) * gauss_binom(t / 2, k / 2, q2);
                } else {
                    const BigInt unit = qpow(q, t / 2) + (bullet == 3 ? 1 : -1);
                    v = qpow(q, (kk - 1) / 2) * unit * gauss_binom((t - 2) / 2, (k - 1) / 2, q2);
                }
                break;
            }
            case 6:
                if (k == 0 || k == t) {
                    v = 1;
                } else if (k % 2 == 0) {
                    BigInt inner = (qpow(q, k) + q - 1) * gauss_binom((t - 2) / 2, k / 2, q2) +
                                   (qpow(q, t - k + 1) - qpow(q, t - k) + 1) *
                                       gauss_binom((t - 2) / 2, (k - 2) / 2, q2);
                    v = qpow(q, (kk - 2) / 2) * inner;
                } else {
                    v = qpow(q, (kk + t - 1) / 2) * gauss_binom((t - 2) / 2, (k - 1) / 2, q2);
                }
                break;
            default:
                throw Error("unknown bullet");
        }
        per[static_cast<std::size_t>(k)] = v;
    }
    return per;
}

}  // namespace

KBreakdown r_factor(FormKind delta, int t, const PrimePower& q) {
    require_admissible(delta, t, q.p);
    const bool q_even = (q.p == 2);

    int bullet = 0;
    KBreakdown kb;
    if (delta == FormKind::Hermitian || (delta == FormKind::Star && q_even)) {
        // Both give an alternating form; star at even q forces even t via
        // admissibility.
        if (t % 2 != 0) throw NoBulletMatches("alternating case needs even t");
        bullet = 1;
        kb = n_symplectic(t, q.q);
    } else if (!q_even && (delta == FormKind::Star || delta == FormKind::Ordinary)) {
        // Both forms are symmetric for odd q but need not be isometric: the
        // star Gram matrix is a rank-one update of the ordinary one with
        // determinant ratio (-1)^t (1 - t), so for even t their Witt indices
        // disagree exactly when 1 - t is a non-square in GF(q).
        const int w = (delta == FormKind::Star) ? star_witt_index(t, q)
                                                : witt_index_closed(t, q.q);
        if (t % 2 == 1) {
            bullet = 2;
        } else {
            bullet = (w == t / 2) ? 4 : 3;
        }
        kb = (delta == FormKind::Ordinary) ? n_orthogonal_odd_q(t, q.q)
                                           : orthogonal_breakdown_by_witt(t, q.q, w);
    } else if (delta == FormKind::Ordinary && q_even) {
        bullet = (t % 2 == 1) ? 5 : 6;
        kb = n_ordinary_even_q(t, q.q);
    } else {
        throw NoBulletMatches("no closed form matches form " + form_name(delta) + ", t = " +
                              std::to_string(t) + ", q = " + q.q.str());
    }

    // The dispatched count must coincide dimension by dimension with the
    // literal closed form for this case.
    const auto literal = bullet_per_k(bullet, t, q.q);
    if (literal != kb.per_k) throw Error("per-dimension mismatch against literal closed form");
    return kb;
}

BigInt total_count(const PrimePower& q, int t, std::int64_t n, FormKind delta) {
    require_admissible(delta, t, q.p);
    CosetTable table = cosets(q, n, t);
    MuClassification cls = classify(table);

    const auto r = r_factor(delta, t, q);
    BigInt result = (n % 2 == 0) ? r.total * r.total : r.total;
    for (int i : cls.fixed)
        result *= n_unitary(t, table.d[static_cast<std::size_t>(i)], q.q).total;
    for (int h : cls.paired)
        result *= n_pair(t, table.d[static_cast<std::size_t>(h)], q.q).total;
    return result;
}

}  // namespace lcdc
