#include "lcdc/formed.hpp"

#include <algorithm>

namespace lcdc {

namespace {

// Inverse exponent modulo the multiplicative order m, normalized into
// [1, m] so that x^result is well defined at x = 0 too.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        const std::int64_t qu = r / new_r;
        const std::int64_t tmp_t = t - qu * new_t;
        t = new_t;
        new_t = tmp_t;
        const std::int64_t tmp_r = r - qu * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw Error("exponent not invertible");
    std::int64_t out = t % static_cast<std::int64_t>(m);
    if (out <= 0) out += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(out);
}

// x^pow must be a field automorphism, i.e. pow is a power of the
// characteristic modulo the multiplicative order.
void require_automorphism_power(const FieldCtx& F, std::uint64_t pow) {
    const std::uint64_t m = F.size() - 1;
    std::uint64_t v = 1 % m;
    for (int j = 0; j < F.degree(); ++j) {
        if (pow % m == v || (pow == 1 && m == 1)) return;
        v = (v * static_cast<std::uint64_t>(F.characteristic())) % m;
    }
    throw Error("exponent " + std::to_string(pow) + " is not a Frobenius power");
}

std::vector<Row> all_vectors(const FieldCtx& F, int dim) {
    std::vector<Row> out;
    const std::uint64_t qs = F.size();
    Row v(static_cast<std::size_t>(dim), F.zero());
    while (true) {
        out.push_back(v);
        int i = 0;
        while (i < dim) {
            std::uint64_t next = static_cast<std::uint64_t>(v[static_cast<std::size_t>(i)]) + 1;
            if (next < qs) {
                v[static_cast<std::size_t>(i)] = static_cast<Elem>(next);
                break;
            }
            v[static_cast<std::size_t>(i)] = F.zero();
            ++i;
        }
        if (i == dim) break;
    }
    return out;
}

// All elements of the row space of basis, zero vector included.
std::vector<Row> span_elements(const FieldCtx& F, const Mat& basis, std::size_t width) {
    std::vector<Row> out{Row(width, F.zero())};
    for (const Row& b : basis) {
        std::vector<Row> next;
        next.reserve(out.size() * F.size());
        for (const Row& s : out)
            for (std::uint64_t c = 0; c < F.size(); ++c) {
                Row v = s;
                for (std::size_t j = 0; j < width; ++j)
                    v[j] = F.add(v[j], F.mul(static_cast<Elem>(c), b[j]));
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

FormedSpace make_formed(FieldPtr field, Mat gram, std::uint64_t conj_pow) {
    FormedSpace s;
    s.dim = static_cast<int>(gram.size());
    for (const Row& r : gram)
        if (static_cast<int>(r.size()) != s.dim) throw Error("gram matrix must be square");
    require_automorphism_power(*field, conj_pow);
    s.field = std::move(field);
    s.gram = std::move(gram);
    s.conj_pow = conj_pow;
    return s;
}

FormedSpace standard_hermitian(FieldPtr field, int dim) {
    std::uint64_t root = 1;
    while (root * root < field->size()) ++root;
    if (root * root != field->size()) throw Error("hermitian space needs a square field order");
    Mat gram(static_cast<std::size_t>(dim), Row(static_cast<std::size_t>(dim), field->zero()));
    for (int i = 0; i < dim; ++i) gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = field->one();
    return make_formed(std::move(field), std::move(gram), root);
}

FormedSpace standard_symplectic(FieldPtr field, int dim) {
    if (dim % 2 != 0) throw Error("symplectic space needs even dimension");
    Mat gram(static_cast<std::size_t>(dim), Row(static_cast<std::size_t>(dim), field->zero()));
    for (int i = 0; i < dim; i += 2) {
        gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = field->one();
        gram[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = field->neg(field->one());
    }
    return make_formed(std::move(field), std::move(gram), 1);
}

Elem fs_conj(const FormedSpace& S, Elem x) { return S.field->pow(x, S.conj_pow); }

Elem fs_eval(const FormedSpace& S, const Row& u, const Row& v) {
    const FieldCtx& F = *S.field;
    Elem acc = F.zero();
    for (int i = 0; i < S.dim; ++i) {
        if (u[static_cast<std::size_t>(i)] == F.zero()) continue;
        Elem rowdot = F.zero();
        for (int j = 0; j < S.dim; ++j)
            rowdot = F.add(rowdot, F.mul(S.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                         fs_conj(S, v[static_cast<std::size_t>(j)])));
        acc = F.add(acc, F.mul(u[static_cast<std::size_t>(i)], rowdot));
    }
    return acc;
}

Mat fs_restrict_gram(const FormedSpace& S, const Mat& basis) {
    Mat r(basis.size(), Row(basis.size(), S.field->zero()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) r[i][j] = fs_eval(S, basis[i], basis[j]);
    return r;
}

BigInt count_nondeg_subspaces(const FormedSpace& S, int k, const BigInt& work_bound) {
    const BigInt estimate = subspace_count(BigInt(S.field->size()), S.dim, k);
    if (estimate > work_bound) throw WorkBoundExceeded(estimate, work_bound);
    BigInt count = 0;
    for_each_subspace(*S.field, S.dim, k, [&](const Mat& basis) {
        if (rank_of(*S.field, fs_restrict_gram(S, basis)) == k) ++count;
    });
    return count;
}

int witt_index_bruteforce(const FormedSpace& S, const BigInt& work_bound) {
    const FieldCtx& F = *S.field;
    BigInt budget = 0;
    int w = 0;
    for (int k = 1; k <= S.dim; ++k) {
        budget += subspace_count(BigInt(F.size()), S.dim, k);
        if (budget > work_bound) throw WorkBoundExceeded(budget, work_bound);
        bool found = for_each_subspace_until(F, S.dim, k, [&](const Mat& basis) {
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = 0; j < basis.size(); ++j)
                    if (fs_eval(S, basis[i], basis[j]) != F.zero()) return true;  // keep looking
            return false;  // totally isotropic subspace found
        });
        if (!found) break;
        w = k;
    }
    return w;
}

std::pair<BigInt, BigInt> count_isotropic_and_hyperbolic(const FormedSpace& S, const BigInt& work_bound) {
    const FieldCtx& F = *S.field;
    const BigInt nvec = big_pow(BigInt(F.size()), static_cast<unsigned long long>(S.dim));
    if (nvec + nvec * nvec > work_bound) throw WorkBoundExceeded(nvec + nvec * nvec, work_bound);

    std::vector<Row> iso;
    for (const Row& v : all_vectors(F, S.dim)) {
        if (is_zero_row(v)) continue;
        if (fs_eval(S, v, v) == F.zero()) iso.push_back(v);
    }

    // Cache G * conj(b)^T per isotropic b so the pair scan is a dot product.
    std::vector<Row> transformed;
    transformed.reserve(iso.size());
    for (const Row& b : iso) {
        Row w(static_cast<std::size_t>(S.dim), F.zero());
        for (int i = 0; i < S.dim; ++i)
            for (int j = 0; j < S.dim; ++j)
                w[static_cast<std::size_t>(i)] =
                    F.add(w[static_cast<std::size_t>(i)],
                          F.mul(S.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                fs_conj(S, b[static_cast<std::size_t>(j)])));
        transformed.push_back(std::move(w));
    }

    BigInt hyp = 0;
    for (const Row& a : iso)
        for (const Row& w : transformed) {
            Elem val = F.zero();
            for (int i = 0; i < S.dim; ++i)
                val = F.add(val, F.mul(a[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]));
            if (val == F.one()) ++hyp;
        }
    return {BigInt(iso.size()), hyp};
}

std::pair<BigInt, BigInt> count_isometric_nonsingular(const FormedSpace& S, const Row& r,
                                                      const BigInt& work_bound) {
    const FieldCtx& F = *S.field;
    if (F.characteristic() == 2) throw EvenQ("requires odd characteristic");
    const Elem rr = fs_eval(S, r, r);
    if (rr == F.zero()) throw SingularReference("reference vector is singular");
    const BigInt nvec = big_pow(BigInt(F.size()), static_cast<unsigned long long>(S.dim));
    if (nvec > work_bound) throw WorkBoundExceeded(nvec, work_bound);

    const std::uint64_t half = (F.size() - 1) / 2;
    BigInt l = 0, m = 0;
    for (const Row& u : all_vectors(F, S.dim)) {
        Elem uu = fs_eval(S, u, u);
        if (uu == F.zero()) continue;
        Elem theta = F.mul(uu, F.inv(rr));
        if (F.pow(theta, half) == F.one())
            ++l;
        else
            ++m;
    }
    return {l, m};
}

TraceBlock trace_gram_block(const PrimePower& q, int t, FormKind delta) {
    require_admissible(delta, t, q.p);
    TraceBlock tb;
    tb.base = build_field(q.p, q.e);
    tb.big = build_field(q.p, q.e * t);
    tb.basis = make_subfield_basis(tb.big, tb.base);
    const Embedding& emb = tb.basis.embedding();

    Elem gamma = 0;
    if (delta == FormKind::Hermitian) gamma = find_gamma(*tb.big, q, t);

    tb.gram.assign(static_cast<std::size_t>(t), Row(static_cast<std::size_t>(t), tb.base->zero()));
    for (int u = 0; u < t; ++u)
        for (int v = 0; v < t; ++v) {
            const Elem bu = tb.basis.beta[static_cast<std::size_t>(u)];
            const Elem bv = tb.basis.beta[static_cast<std::size_t>(v)];
            Elem prod;
            switch (delta) {
                case FormKind::Ordinary:
                    prod = tb.big->mul(bu, bv);
                    break;
                case FormKind::Star:
                    prod = tb.big->mul(bu, phi_map(*tb.big, bv, q, t));
                    break;
                case FormKind::Hermitian:
                    prod = tb.big->mul(gamma, tb.big->mul(bu, frobenius_iterate(*tb.big, bv, q, t / 2)));
                    break;
                default:
                    throw Error("unknown form");
            }
            Elem tr = rel_trace(*tb.big, prod, q, t);
            auto pre = emb.preimage(tr);
            if (!pre) throw Error("trace value outside the base field");
            tb.gram[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = *pre;
        }
    return tb;
}

TraceKernelSpaces trace_kernel_spaces(const PrimePower& q, int t) {
    if (q.p != 2) throw OddQ("trace_kernel_spaces requires even q");
    if (t < 1) throw Error("t must be positive");
    TraceKernelSpaces out;
    FieldPtr base = build_field(q.p, q.e);
    out.big = build_field(q.p, q.e * t);
    SubfieldBasis sb = make_subfield_basis(out.big, base);
    const Embedding& emb = sb.embedding();

    auto trace_row = [&](Elem mult) {
        Row row(static_cast<std::size_t>(t));
        for (int u = 0; u < t; ++u) {
            Elem tr = rel_trace(*out.big, out.big->mul(mult, sb.beta[static_cast<std::size_t>(u)]), q, t);
            auto pre = emb.preimage(tr);
            if (!pre) throw Error("trace value outside the base field");
            row[static_cast<std::size_t>(u)] = *pre;
        }
        return row;
    };

    auto lift_all = [&](const Mat& coord_rows) {
        std::vector<Elem> elems;
        elems.reserve(coord_rows.size());
        for (const Row& r : coord_rows) elems.push_back(sb.lift(r));
        return elems;
    };

    const Row tr0 = trace_row(out.big->one());
    out.v0 = lift_all(nullspace_of(*base, Mat{tr0}, t));
    if (static_cast<int>(out.v0.size()) != t - 1) throw Error("trace kernel has wrong dimension");

    if (t % 2 == 0) {
        for (std::uint64_t x = 0; x < out.big->size(); ++x) {
            if (rel_trace(*out.big, static_cast<Elem>(x), q, t) == out.big->one()) {
                out.alpha = static_cast<Elem>(x);
                break;
            }
        }
        if (!out.alpha) throw Error("no element of trace one");
        out.v1 = lift_all(nullspace_of(*base, Mat{tr0, trace_row(*out.alpha)}, t));
        if (static_cast<int>(out.v1.size()) != t - 2) throw Error("V1 has wrong dimension");

        // GF(q^t) = V1 + <1> + <alpha> must be a direct sum, so 1 is not
        // inside V1.
        Mat coords;
        for (Elem e : out.v1) coords.push_back(sb.coords[e]);
        Mat with_one = coords;
        with_one.push_back(sb.coords[out.big->one()]);
        if (rank_of(*base, with_one) != static_cast<int>(out.v1.size()) + 1)
            throw Error("1 lies in V1");
        with_one.push_back(sb.coords[*out.alpha]);
        if (rank_of(*base, with_one) != t) throw Error("V1 + <1> + <alpha> does not fill the field");
    }
    return out;
}

PairedModuleSpace make_paired(FieldPtr K, int t, Mat pairing, std::uint64_t tau_pow) {
    PairedModuleSpace s;
    s.t = t;
    if (pairing.empty()) {
        pairing.assign(static_cast<std::size_t>(t), Row(static_cast<std::size_t>(t), K->zero()));
        for (int i = 0; i < t; ++i) pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = K->one();
    }
    if (static_cast<int>(pairing.size()) != t) throw DegenerateInput("pairing must be t x t");
    for (const Row& r : pairing)
        if (static_cast<int>(r.size()) != t) throw DegenerateInput("pairing must be t x t");
    if (rank_of(*K, pairing) != t) throw DegenerateInput("pairing matrix is singular");
    require_automorphism_power(*K, tau_pow);
    s.K = std::move(K);
    s.pairing = std::move(pairing);
    s.tau_pow = tau_pow;
    return s;
}

Elem pm_eval(const PairedModuleSpace& S, const Row& a, const Row& c) {
    const FieldCtx& F = *S.K;
    Elem acc = F.zero();
    for (int i = 0; i < S.t; ++i) {
        if (a[static_cast<std::size_t>(i)] == F.zero()) continue;
        Elem rowdot = F.zero();
        for (int j = 0; j < S.t; ++j)
            rowdot = F.add(rowdot, F.mul(S.pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                         F.pow(c[static_cast<std::size_t>(j)], S.tau_pow)));
        acc = F.add(acc, F.mul(a[static_cast<std::size_t>(i)], rowdot));
    }
    return acc;
}

namespace {

Mat apply_pow_rows(const FieldCtx& F, const Mat& m, std::uint64_t pow) {
    Mat out = m;
    for (Row& r : out)
        for (Elem& x : r) x = F.pow(x, pow);
    return out;
}

// Right annihilator {y : B(a, y) = 0 for all rows a} of the row space of A.
Mat right_annihilator(const PairedModuleSpace& S, const Mat& a_basis) {
    const FieldCtx& F = *S.K;
    if (a_basis.empty()) {
        Mat id(static_cast<std::size_t>(S.t), Row(static_cast<std::size_t>(S.t), F.zero()));
        for (int i = 0; i < S.t; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = F.one();
        return id;
    }
    Mat ap = mat_mul(F, a_basis, S.pairing);
    Mat tau_kernel = nullspace_of(F, ap, S.t);
    const std::uint64_t inv = inverse_mod(S.tau_pow, F.size() - 1);
    return apply_pow_rows(F, tau_kernel, inv);
}

// Left annihilator {x : B(x, b) = 0 for all rows b} of the row space of B.
Mat left_annihilator(const PairedModuleSpace& S, const Mat& b_basis) {
    const FieldCtx& F = *S.K;
    if (b_basis.empty()) {
        Mat id(static_cast<std::size_t>(S.t), Row(static_cast<std::size_t>(S.t), F.zero()));
        for (int i = 0; i < S.t; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = F.one();
        return id;
    }
    Mat m = mat_mul(F, apply_pow_rows(F, b_basis, S.tau_pow), transpose(S.pairing));
    return nullspace_of(F, m, S.t);
}

bool pair_is_nondeg(const PairedModuleSpace& S, const Mat& a_basis, const Mat& b_basis,
                    const Mat& a_perp, const Mat& b_perp) {
    const FieldCtx& F = *S.K;
    return intersection_dim(F, a_basis, b_perp) == 0 && intersection_dim(F, b_basis, a_perp) == 0;
}

}  // namespace

BigInt count_nondeg_module_pairs_in(const PairedModuleSpace& S, int k, const BigInt& work_bound,
                                    bool check_mixed_dims) {
    const FieldCtx& F = *S.K;
    const BigInt Q(F.size());

    BigInt total_spaces = 0;
    for (int kk = 0; kk <= S.t; ++kk)
        if (kk == k || check_mixed_dims) total_spaces += subspace_count(Q, S.t, kk);
    if (total_spaces * total_spaces > work_bound)
        throw WorkBoundExceeded(total_spaces * total_spaces, work_bound);

    struct Side {
        Mat basis;
        Mat right_perp;  // annihilator of this subspace on the other side
        Mat left_perp;
        int dim;
    };
    std::vector<Side> spaces;
    for (int kk = 0; kk <= S.t; ++kk) {
        if (kk != k && !check_mixed_dims) continue;
        for_each_subspace(F, S.t, kk, [&](const Mat& basis) {
            spaces.push_back({basis, right_annihilator(S, basis), left_annihilator(S, basis), kk});
        });
    }

    BigInt count = 0;
    for (const Side& a : spaces)
        for (const Side& b : spaces) {
            if (!pair_is_nondeg(S, a.basis, b.basis, a.right_perp, b.left_perp)) continue;
            if (a.dim != b.dim)
                throw Error("non-degenerate pair with unequal dimensions " +
                            std::to_string(a.dim) + " and " + std::to_string(b.dim));
            if (a.dim == k) ++count;
        }
    return count;
}

BigInt count_nondeg_module_pairs(int t, int d, const PrimePower& q, int k, const BigInt& work_bound) {
    FieldPtr K = build_field(q.p, q.e * d);
    return count_nondeg_module_pairs_in(make_paired(std::move(K), t), k, work_bound, true);
}

PairedIsoHyp count_paired_isotropic_hyperbolic(int t, int d, const PrimePower& q,
                                               const BigInt& work_bound) {
    FieldPtr K = build_field(q.p, q.e * d);
    PairedModuleSpace S = make_paired(K, t);
    const FieldCtx& F = *K;

    const BigInt nvec_big = big_pow(BigInt(F.size()), static_cast<unsigned long long>(t));
    if (nvec_big * nvec_big > work_bound) throw WorkBoundExceeded(nvec_big * nvec_big, work_bound);
    const std::size_t nvec = nvec_big.convert_to<std::size_t>();

    const std::vector<Row> vecs = all_vectors(F, t);

    // Pairing value table over all (left, right) vector pairs.
    std::vector<std::vector<Elem>> val(nvec, std::vector<Elem>(nvec));
    for (std::size_t i = 0; i < nvec; ++i)
        for (std::size_t j = 0; j < nvec; ++j) val[i][j] = pm_eval(S, vecs[i], vecs[j]);

    PairedIsoHyp out{0, 0, 0};
    std::vector<std::pair<std::size_t, std::size_t>> nontrivial;
    for (std::size_t i = 0; i < nvec; ++i)
        for (std::size_t j = 0; j < nvec; ++j) {
            const bool zi = (i == 0), zj = (j == 0);
            if (zi && zj) continue;
            if (zi || zj) {
                ++out.trivial_isotropic;  // one component zero, always isotropic
            } else if (val[i][j] == F.zero()) {
                ++out.nontrivial_isotropic;
                nontrivial.emplace_back(i, j);
            }
        }

    // completions[b][dv] = #{c : B(c,b) = 1 and B(c,dv) = 0}; every (c,b,dv)
    // triple is visited once.
    std::vector<std::vector<std::uint32_t>> completions(nvec, std::vector<std::uint32_t>(nvec, 0));
    for (std::size_t c = 0; c < nvec; ++c) {
        const auto& row = val[c];
        for (std::size_t b = 0; b < nvec; ++b) {
            if (row[b] != F.one()) continue;
            auto& comp = completions[b];
            for (std::size_t dv = 0; dv < nvec; ++dv)
                if (row[dv] == F.zero()) ++comp[dv];
        }
    }

    for (auto [a, b] : nontrivial) {
        const auto& arow = val[a];
        const auto& comp = completions[b];
        for (std::size_t dv = 0; dv < nvec; ++dv)
            if (arow[dv] == F.one()) out.hyperbolic_pairs += comp[dv];
    }
    return out;
}

WittPairTranscript find_witt_decomposition_pair(const PairedModuleSpace& S, const Mat& a_basis,
                                                const Mat& b_basis) {
    const FieldCtx& F = *S.K;
    Mat a_cur = rref_of(F, a_basis);
    Mat b_cur = rref_of(F, b_basis);
    if (a_cur.size() != b_cur.size())
        throw DegenerateInput("subspace pair has unequal dimensions");
    if (!pair_is_nondeg(S, a_cur, b_cur, right_annihilator(S, a_cur), left_annihilator(S, b_cur)))
        throw DegenerateInput("subspace pair is degenerate");
    const int r = static_cast<int>(a_cur.size());

    WittPairTranscript out;
    while (static_cast<int>(a_cur.size()) >= 2) {
        // First non-trivial isotropic element (a, b) in scan order.
        std::vector<Row> a_span = span_elements(F, a_cur, static_cast<std::size_t>(S.t));
        std::vector<Row> b_span = span_elements(F, b_cur, static_cast<std::size_t>(S.t));
        Row xa, xb;
        bool found = false;
        for (const Row& a : a_span) {
            if (is_zero_row(a)) continue;
            for (const Row& b : b_span) {
                if (is_zero_row(b)) continue;
                if (pm_eval(S, a, b) == F.zero()) {
                    xa = a;
                    xb = b;
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) throw Error("no isotropic element in a rank >= 2 pair");

        // Completion (c, d) with B(xa,d) = 1, B(c,xb) = 1, B(c,d) = 0.
        Row yc, yd;
        found = false;
        for (const Row& c : a_span) {
            if (is_zero_row(c) || pm_eval(S, c, xb) != F.one()) continue;
            for (const Row& dv : b_span) {
                if (is_zero_row(dv)) continue;
                if (pm_eval(S, xa, dv) == F.one() && pm_eval(S, c, dv) == F.zero()) {
                    yc = c;
                    yd = dv;
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) throw Error("isotropic element admits no hyperbolic completion");
        out.hyperbolic.push_back({xa, xb, yc, yd});

        // Restrict to the orthogonal complement of the extracted pair.
        auto shrink = [&](const Mat& cur, const Row& u, const Row& v, bool left_side) {
            Mat cond;  // two linear conditions on coefficients lambda
            for (const Row& base : cur) {
                Row row(2);
                if (left_side) {
                    row[0] = pm_eval(S, base, u);
                    row[1] = pm_eval(S, base, v);
                } else {
                    row[0] = pm_eval(S, u, base);
                    row[1] = pm_eval(S, v, base);
                }
                cond.push_back(std::move(row));
            }
            Mat lambdas = nullspace_of(F, transpose(cond), static_cast<int>(cur.size()));
            return rref_of(F, mat_mul(F, lambdas, cur));
        };
        a_cur = shrink(a_cur, xb, yd, true);
        b_cur = shrink(b_cur, xa, yc, false);
    }

    if (a_cur.size() == 1) {
        if (b_cur.size() != 1) throw Error("rank mismatch in final step");
        Row za = a_cur[0], zb = b_cur[0];
        if (pm_eval(S, za, zb) == F.zero()) throw Error("final rank-1 pair is isotropic");
        out.anisotropic = {za, zb};
    }

    // Transcript verification: block Gram values, cross-block orthogonality,
    // and span recovery.
    auto orthogonal = [&](const Row& ua, const Row& ub, const Row& va, const Row& vb) {
        return pm_eval(S, ua, vb) == F.zero() && pm_eval(S, va, ub) == F.zero();
    };
    for (std::size_t i = 0; i < out.hyperbolic.size(); ++i) {
        const auto& [a, b, c, dv] = out.hyperbolic[i];
        if (pm_eval(S, a, b) != F.zero() || pm_eval(S, c, dv) != F.zero() ||
            pm_eval(S, a, dv) != F.one() || pm_eval(S, c, b) != F.one())
            throw Error("hyperbolic block has wrong Gram matrix");
        for (std::size_t j = i + 1; j < out.hyperbolic.size(); ++j) {
            const auto& [a2, b2, c2, d2] = out.hyperbolic[j];
            for (const auto& [ua, ub] : {std::pair<Row, Row>{a, b}, {c, dv}})
                for (const auto& [va, vb] : {std::pair<Row, Row>{a2, b2}, {c2, d2}})
                    if (!orthogonal(ua, ub, va, vb)) throw Error("blocks are not orthogonal");
        }
        if (out.anisotropic) {
            const auto& [za, zb] = *out.anisotropic;
            for (const auto& [ua, ub] : {std::pair<Row, Row>{a, b}, {c, dv}})
                if (!orthogonal(ua, ub, za, zb)) throw Error("anisotropic part not orthogonal");
        }
    }
    Mat a_parts, b_parts;
    for (const auto& [a, b, c, dv] : out.hyperbolic) {
        a_parts.push_back(a);
        a_parts.push_back(c);
        b_parts.push_back(b);
        b_parts.push_back(dv);
    }
    if (out.anisotropic) {
        a_parts.push_back((*out.anisotropic)[0]);
        b_parts.push_back((*out.anisotropic)[1]);
    }
    Mat a_all = a_parts, b_all = b_parts;
    a_all.insert(a_all.end(), a_basis.begin(), a_basis.end());
    b_all.insert(b_all.end(), b_basis.begin(), b_basis.end());
    if (rank_of(F, a_parts) != r || rank_of(F, a_all) != r ||
        rank_of(F, b_parts) != r || rank_of(F, b_all) != r)
        throw Error("transcript does not span the input pair");
    return out;
}

}  // namespace lcdc
