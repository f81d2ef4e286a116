#include "lcdc/census.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "lcdc/errors.hpp"

namespace lcdc {
namespace {

// Dense polynomials over one field, constant term first, no trailing zeros.
using FPoly = std::vector<Elem>;

FPoly fp_trim(FPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

FPoly fp_mul(const FieldCtx& F, const FPoly& a, const FPoly& b) {
    if (a.empty() || b.empty()) return {};
    FPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return fp_trim(std::move(out));
}

std::pair<FPoly, FPoly> fp_divmod(const FieldCtx& F, FPoly num, const FPoly& den) {
    if (den.empty()) throw Error("polynomial division by zero");
    num = fp_trim(std::move(num));
    FPoly quo(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    const Elem lead_inv = F.inv(den.back());
    while (num.size() >= den.size()) {
        const std::size_t shift = num.size() - den.size();
        const Elem c = F.mul(num.back(), lead_inv);
        quo[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[shift + i] = F.sub(num[shift + i], F.mul(c, den[i]));
        num = fp_trim(std::move(num));
    }
    return {fp_trim(std::move(quo)), std::move(num)};
}

FPoly xn_minus_1(const FieldCtx& F, std::int64_t n) {
    FPoly f(static_cast<std::size_t>(n) + 1, 0);
    f[0] = F.neg(F.one());
    f.back() = F.one();
    return f;
}

int multiplicative_order(const BigInt& q, std::int64_t n) {
    if (n == 1) return 1;
    const std::int64_t r = (q % n).convert_to<std::int64_t>();
    std::int64_t acc = r;
    int m = 1;
    while (acc != 1) {
        if (m > n) throw Error("multiplicative order loop failed to close");
        acc = acc * r % n;
        ++m;
    }
    return m;
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Product a*b in F[X]/(X^n - 1), both inputs of length n.
PolyVec cyc_mul(const FieldCtx& F, const PolyVec& a, const PolyVec& b, std::int64_t n) {
    PolyVec out(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const std::size_t pos = (i + j) % static_cast<std::size_t>(n);
            out[pos] = F.add(out[pos], F.mul(a[i], b[j]));
        }
    }
    return out;
}

PolyVec embed_poly(const Embedding& emb, const FPoly& f, std::int64_t n) {
    PolyVec out(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = emb.map(f[i]);
    return out;
}

void require_length(const PolyRing& R, const PolyVec& a) {
    if (a.size() != static_cast<std::size_t>(R.n))
        throw Error("ring element has the wrong coefficient count");
}

}  // namespace

FactorTable factor_xn_minus_1(const PrimePower& q, std::int64_t n, std::uint64_t field_bound) {
    FactorTable ft;
    ft.table = cosets(q, n, 1);
    ft.m = multiplicative_order(q.q, n);
    ft.base = build_field(q.p, q.e, field_bound);
    ft.splitting = ft.m == 1 ? ft.base : build_field(q.p, q.e * ft.m, field_bound);
    ft.emb = std::make_shared<Embedding>(ft.base, ft.splitting);
    const FieldCtx& S = *ft.splitting;
    ft.zeta = S.generator();

    const std::uint64_t group = S.size() - 1;
    if (group % static_cast<std::uint64_t>(n) != 0)
        throw Error("splitting field misses the requested root of unity");
    ft.eta = S.pow(ft.zeta, group / static_cast<std::uint64_t>(n));
    if (S.pow(ft.eta, static_cast<std::uint64_t>(n)) != S.one())
        throw Error("root of unity has wrong order");
    for (std::int64_t r : distinct_prime_factors(n))
        if (S.pow(ft.eta, static_cast<std::uint64_t>(n / r)) == S.one())
            throw Error("root of unity has wrong order");

    FPoly product{ft.base->one()};
    for (std::size_t i = 0; i < ft.table.cosets.size(); ++i) {
        FPoly f{S.one()};
        for (std::int64_t k : ft.table.cosets[i]) {
            const Elem root = S.pow(ft.eta, static_cast<std::uint64_t>(k));
            f = fp_mul(S, f, FPoly{S.neg(root), S.one()});
        }
        if (static_cast<int>(f.size()) - 1 != ft.table.d[i])
            throw Error("irreducible factor has the wrong degree");
        FPoly pulled(f.size());
        for (std::size_t j = 0; j < f.size(); ++j) {
            const auto pre = ft.emb->preimage(f[j]);
            if (!pre) throw Error("factor coefficient escapes the base field");
            pulled[j] = *pre;
        }
        product = fp_mul(*ft.base, product, pulled);
        ft.factors.push_back(std::move(pulled));
    }
    if (product != xn_minus_1(*ft.base, n))
        throw Error("factor product does not recover X^n - 1");
    return ft;
}

GramData trace_form_gram(const PrimePower& q, int t, std::int64_t n, FormKind delta) {
    if (n < 1) throw ValidationError("length must be positive");
    GramData gd;
    gd.block = trace_gram_block(q, t, delta);
    const std::size_t tn = static_cast<std::size_t>(t) * static_cast<std::size_t>(n);
    gd.gram.assign(tn, Row(tn, 0));
    for (std::int64_t j = 0; j < n; ++j)
        for (int u = 0; u < t; ++u)
            for (int v = 0; v < t; ++v)
                gd.gram[static_cast<std::size_t>(j * t + u)][static_cast<std::size_t>(j * t + v)] =
                    gd.block.gram[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    if (rank_of(*gd.block.base, gd.gram) != static_cast<int>(tn))
        throw Error("trace form Gram matrix is singular");
    return gd;
}

PolyRing make_poly_ring(const PrimePower& q, int t, std::int64_t n) {
    if (n < 1) throw ValidationError("length must be positive");
    PolyRing R;
    R.q = q;
    R.t = t;
    R.n = n;
    R.base = build_field(q.p, q.e);
    R.big = build_field(q.p, q.e * t);
    R.emb = std::make_shared<Embedding>(R.base, R.big);
    return R;
}

PolyVec poly_add_ring(const PolyRing& R, const PolyVec& a, const PolyVec& b) {
    require_length(R, a);
    require_length(R, b);
    PolyVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = R.big->add(a[i], b[i]);
    return out;
}

PolyVec poly_mul_ring(const PolyRing& R, const PolyVec& a, const PolyVec& b) {
    require_length(R, a);
    require_length(R, b);
    return cyc_mul(*R.big, a, b, R.n);
}

PolyVec poly_tau(const PolyRing& R, const PolyVec& a, int u, std::int64_t v) {
    require_length(R, a);
    const std::int64_t n = R.n;
    const std::int64_t vv = (v % n + n) % n;
    PolyVec out(a.size(), 0);
    for (std::int64_t i = 0; i < n; ++i) {
        const std::size_t pos = static_cast<std::size_t>(vv * i % n);
        const Elem img = frobenius_iterate(*R.big, a[static_cast<std::size_t>(i)], R.q, u);
        out[pos] = R.big->add(out[pos], img);
    }
    return out;
}

PolyVec poly_form(const PolyRing& R, const PolyVec& a, const PolyVec& b, FormKind delta) {
    require_admissible(delta, R.t, R.q.p);
    require_length(R, a);
    require_length(R, b);
    PolyVec core(static_cast<std::size_t>(R.n), 0);
    switch (delta) {
        case FormKind::Ordinary:
            core = poly_mul_ring(R, a, poly_tau(R, b, 0, -1));
            break;
        case FormKind::Hermitian: {
            core = poly_mul_ring(R, a, poly_tau(R, b, R.t / 2, -1));
            const Elem gamma = find_gamma(*R.big, R.q, R.t);
            for (Elem& c : core) c = R.big->mul(gamma, c);
            break;
        }
        case FormKind::Star: {
            PolyVec inner(static_cast<std::size_t>(R.n), 0);
            for (int w = 1; w < R.t; ++w) inner = poly_add_ring(R, inner, poly_tau(R, b, w, -1));
            core = poly_mul_ring(R, a, inner);
            break;
        }
    }
    PolyVec out(static_cast<std::size_t>(R.n), 0);
    for (int w = 0; w < R.t; ++w) out = poly_add_ring(R, out, poly_tau(R, core, w, 1));
    for (Elem c : out)
        if (!R.emb->preimage(c)) throw Error("form value escapes the base field");
    return out;
}

Row CyclicCodeEnum::coords_of(const PolyVec& a) const {
    const SubfieldBasis& sb = gram.block.basis;
    Row out;
    out.reserve(static_cast<std::size_t>(ring.t) * a.size());
    for (Elem c : a)
        for (Elem x : sb.coords[c]) out.push_back(x);
    return out;
}

namespace {

// All GF(q)-linear combinations of the rows of basis (a base-field matrix of
// ring coefficient vectors), in odometer order starting from zero.
std::vector<PolyVec> base_span_elements(const FieldCtx& B, const Mat& basis, std::int64_t n) {
    std::vector<PolyVec> out;
    std::vector<Elem> scal(basis.size(), 0);
    while (true) {
        PolyVec v(static_cast<std::size_t>(n), 0);
        for (std::size_t m = 0; m < basis.size(); ++m) {
            if (scal[m] == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = B.add(v[j], B.mul(scal[m], basis[m][j]));
        }
        out.push_back(std::move(v));
        std::size_t d = 0;
        while (d < scal.size()) {
            if (++scal[d] < B.size()) break;
            scal[d] = 0;
            ++d;
        }
        if (d == scal.size()) break;
    }
    return out;
}

void append_choices(CyclicCodeEnum& E, CyclicCodeEnum::Component& C) {
    const FieldCtx& B = *E.ring.base;
    const FieldCtx& G = *E.ring.big;
    const std::int64_t n = E.ring.n;
    const int t = E.ring.t;
    const BigInt qd = big_pow(E.ring.q.q, static_cast<unsigned long long>(C.d));

    for (int k = 0; k <= t; ++k) {
        BigInt produced = 0;
        if (k == 0) {
            C.choices.push_back({0, Mat{}});
            produced = 1;
        } else {
            std::vector<int> piv(static_cast<std::size_t>(k));
            std::iota(piv.begin(), piv.end(), 0);
            while (true) {
                std::vector<char> is_piv(static_cast<std::size_t>(t), 0);
                for (int c : piv) is_piv[static_cast<std::size_t>(c)] = 1;
                std::vector<std::pair<int, int>> free_pos;
                for (int r = 0; r < k; ++r)
                    for (int c = piv[static_cast<std::size_t>(r)] + 1; c < t; ++c)
                        if (!is_piv[static_cast<std::size_t>(c)]) free_pos.emplace_back(r, c);

                std::vector<std::size_t> odo(free_pos.size(), 0);
                while (true) {
                    std::vector<PolyVec> rows;
                    for (int r = 0; r < k; ++r)
                        rows.push_back(C.j_basis[static_cast<std::size_t>(piv[static_cast<std::size_t>(r)])]);
                    for (std::size_t f = 0; f < free_pos.size(); ++f) {
                        if (odo[f] == 0) continue;
                        const auto [r, c] = free_pos[f];
                        const PolyVec scaled =
                            cyc_mul(G, C.k_elements[odo[f]], C.j_basis[static_cast<std::size_t>(c)], n);
                        PolyVec& row = rows[static_cast<std::size_t>(r)];
                        for (std::size_t j = 0; j < row.size(); ++j) row[j] = G.add(row[j], scaled[j]);
                    }

                    Mat coords;
                    for (const PolyVec& row : rows)
                        for (const PolyVec& kb : C.k_basis)
                            coords.push_back(E.coords_of(cyc_mul(G, kb, row, n)));
                    coords = rref_of(B, std::move(coords));
                    if (static_cast<int>(coords.size()) != k * C.d)
                        throw Error("subspace coordinate basis has the wrong rank");
                    C.choices.push_back({k, std::move(coords)});
                    ++produced;

                    std::size_t d = 0;
                    while (d < odo.size()) {
                        if (++odo[d] < C.k_elements.size()) break;
                        odo[d] = 0;
                        ++d;
                    }
                    if (d == odo.size()) break;
                }

                int r = k - 1;
                while (r >= 0 && piv[static_cast<std::size_t>(r)] == t - k + r) --r;
                if (r < 0) break;
                ++piv[static_cast<std::size_t>(r)];
                for (int j = r + 1; j < k; ++j)
                    piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        if (produced != gauss_binom(t, k, qd))
            throw Error("subspace enumeration count disagrees with the Gaussian binomial");
    }
}

template <typename Fn>
void for_each_code_combo(const CyclicCodeEnum& E, Fn&& fn) {
    std::vector<std::size_t> idx(E.comps.size(), 0);
    while (true) {
        fn(idx);
        std::size_t pos = 0;
        while (pos < idx.size()) {
            if (++idx[pos] < E.comps[pos].choices.size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == idx.size()) break;
    }
}

Mat stacked_code_basis(const CyclicCodeEnum& E, const std::vector<std::size_t>& idx) {
    Mat b;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const Mat& part = E.comps[i].choices[idx[i]].coords;
        b.insert(b.end(), part.begin(), part.end());
    }
    return b;
}

Mat dual_basis_of(const FieldCtx& F, const Mat& code, const Mat& gram, int tn) {
    if (code.empty()) {
        Mat full(static_cast<std::size_t>(tn), Row(static_cast<std::size_t>(tn), 0));
        for (int i = 0; i < tn; ++i) full[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = F.one();
        return full;
    }
    return nullspace_of(F, mat_mul(F, code, gram), tn);
}

bool trivially_intersecting(const FieldCtx& F, const Mat& code, const Mat& dual, int tn) {
    Mat stacked = code;
    stacked.insert(stacked.end(), dual.begin(), dual.end());
    return rank_of(F, stacked) == tn;
}

BigInt subspace_choice_estimate(const CosetTable& table) {
    BigInt estimate = 1;
    for (std::size_t i = 0; i < table.d.size(); ++i) {
        const BigInt qd = big_pow(table.q.q, static_cast<unsigned long long>(table.d[i]));
        BigInt per_component = 0;
        for (int k = 0; k <= table.t; ++k) per_component += gauss_binom(table.t, k, qd);
        estimate *= per_component;
    }
    return estimate;
}

}  // namespace

CyclicCodeEnum build_code_enum(const CensusRequest& req, const BigInt& work_bound) {
    require_admissible(req.delta, req.t, req.q.p);
    CyclicCodeEnum E;
    E.req = req;

    const CosetTable pre = cosets(req.q, req.n, req.t);
    const BigInt estimate = subspace_choice_estimate(pre);
    if (estimate > work_bound) throw WorkBoundExceeded(estimate, work_bound);

    E.ft = factor_xn_minus_1(req.q, req.n);
    E.cls = classify(E.ft.table);
    E.ring = make_poly_ring(req.q, req.t, req.n);
    E.gram = trace_form_gram(req.q, req.t, req.n, req.delta);

    const FieldCtx& B = *E.ring.base;
    const FieldCtx& G = *E.ring.big;
    const Embedding& emb = *E.ring.emb;
    const SubfieldBasis& sb = E.gram.block.basis;
    const std::int64_t n = req.n;
    const int t = req.t;
    const FPoly xn1 = xn_minus_1(B, n);

    for (std::size_t i = 0; i < E.ft.factors.size(); ++i) {
        CyclicCodeEnum::Component C;
        C.d = E.ft.table.d[i];

        auto [ghat, rem] = fp_divmod(B, xn1, E.ft.factors[i]);
        if (!rem.empty()) throw Error("cofactor division left a remainder");
        PolyVec ghat_vec(static_cast<std::size_t>(n), 0);
        std::copy(ghat.begin(), ghat.end(), ghat_vec.begin());

        // GF(q)-basis of the ideal K_i generated by the cofactor.
        Mat shifts;
        for (std::int64_t j = 0; j < n; ++j) {
            PolyVec s(static_cast<std::size_t>(n), 0);
            for (std::int64_t c = 0; c < n; ++c)
                s[static_cast<std::size_t>((c + j) % n)] = ghat_vec[static_cast<std::size_t>(c)];
            shifts.push_back(std::move(s));
        }
        const Mat kb_base = rref_of(B, std::move(shifts));
        if (static_cast<int>(kb_base.size()) != C.d)
            throw Error("minimal ideal has the wrong dimension");

        // Multiplicative identity of K_i, solved from e * ghat = ghat.
        Mat prods;
        for (const Row& kb : kb_base) prods.push_back(cyc_mul(B, kb, ghat_vec, n));
        const auto lambda = coordinates_in_rowspace(B, prods, ghat_vec);
        if (!lambda) throw Error("component identity solve failed");
        PolyVec e_base(static_cast<std::size_t>(n), 0);
        for (std::size_t m = 0; m < kb_base.size(); ++m) {
            if ((*lambda)[m] == 0) continue;
            for (std::size_t j = 0; j < e_base.size(); ++j)
                e_base[j] = B.add(e_base[j], B.mul((*lambda)[m], kb_base[m][j]));
        }
        C.k_identity = embed_poly(emb, e_base, n);
        for (const Row& kb : kb_base) C.k_basis.push_back(embed_poly(emb, kb, n));
        for (const PolyVec& kb : C.k_basis)
            if (cyc_mul(G, C.k_identity, kb, n) != kb)
                throw Error("component identity fails on its own ideal");

        C.k_elements = [&] {
            std::vector<PolyVec> elems;
            for (const PolyVec& v : base_span_elements(B, kb_base, n)) elems.push_back(embed_poly(emb, v, n));
            return elems;
        }();

        // K_i-basis of the component J_i of the big ring, grown greedily from
        // the generators beta_u X^j ghat.
        const PolyVec ghat_big = embed_poly(emb, ghat_vec, n);
        Mat span;
        std::vector<int> span_piv;
        for (std::int64_t j = 0; j < n; ++j) {
            for (int u = 0; u < t; ++u) {
                PolyVec cand(static_cast<std::size_t>(n), 0);
                for (std::int64_t c = 0; c < n; ++c)
                    cand[static_cast<std::size_t>((c + j) % n)] =
                        G.mul(sb.beta[static_cast<std::size_t>(u)], ghat_big[static_cast<std::size_t>(c)]);
                if (is_zero_row(reduce_row(B, span, span_piv, E.coords_of(cand)))) continue;
                C.j_basis.push_back(cand);
                for (const PolyVec& kb : C.k_basis)
                    span.push_back(E.coords_of(cyc_mul(G, kb, cand, n)));
                span = rref_of(B, std::move(span), &span_piv);
            }
        }
        if (static_cast<int>(C.j_basis.size()) != t)
            throw Error("component module basis has the wrong rank");
        if (static_cast<int>(span.size()) != t * C.d)
            throw Error("component module has the wrong dimension");
        C.j_coords = std::move(span);
        for (const PolyVec& jb : C.j_basis)
            if (cyc_mul(G, C.k_identity, jb, n) != jb)
                throw Error("component identity fails on its module");

        append_choices(E, C);
        E.comps.push_back(std::move(C));
    }
    return E;
}

BigInt enumerate_lcd_count(const CensusRequest& req, const BigInt& work_bound) {
    const CyclicCodeEnum E = build_code_enum(req, work_bound);
    const FieldCtx& F = *E.ring.base;
    const int tn = req.t * static_cast<int>(req.n);
    BigInt lcd = 0;
    for_each_code_combo(E, [&](const std::vector<std::size_t>& idx) {
        const Mat code = stacked_code_basis(E, idx);
        const Mat dual = dual_basis_of(F, code, E.gram.gram, tn);
        if (static_cast<int>(code.size() + dual.size()) != tn)
            throw Error("code and dual dimensions do not fill the space");
        if (trivially_intersecting(F, code, dual, tn)) ++lcd;
    });
    return lcd;
}

BigInt enumerate_lcd_count_flat(const CensusRequest& req, const BigInt& work_bound) {
    require_admissible(req.delta, req.t, req.q.p);
    cosets(req.q, req.n, req.t);
    const GramData gd = trace_form_gram(req.q, req.t, req.n, req.delta);
    const FieldCtx& F = *gd.block.base;
    const int t = req.t;
    const std::int64_t n = req.n;
    const int tn = t * static_cast<int>(n);

    BigInt estimate = 0;
    for (int k = 0; k <= tn; ++k) estimate += gauss_binom(tn, k, BigInt(F.size()));
    if (estimate > work_bound) throw WorkBoundExceeded(estimate, work_bound);

    std::vector<std::size_t> shift(static_cast<std::size_t>(tn));
    for (std::int64_t j = 0; j < n; ++j)
        for (int u = 0; u < t; ++u)
            shift[static_cast<std::size_t>(j * t + u)] = static_cast<std::size_t>((j + 1) % n * t + u);

    BigInt lcd = 0;
    for (int k = 0; k <= tn; ++k) {
        for_each_subspace(F, tn, k, [&](const Mat& basis) {
            Mat ext = basis;
            for (const Row& r : basis) {
                Row s(static_cast<std::size_t>(tn), 0);
                for (std::size_t c = 0; c < r.size(); ++c) s[shift[c]] = r[c];
                ext.push_back(std::move(s));
            }
            if (rank_of(F, ext) != k) return;
            const Mat dual = dual_basis_of(F, basis, gd.gram, tn);
            if (static_cast<int>(basis.size() + dual.size()) != tn)
                throw Error("code and dual dimensions do not fill the space");
            if (trivially_intersecting(F, basis, dual, tn)) ++lcd;
        });
    }
    return lcd;
}

bool dual_dimension_check(const CensusRequest& req, const BigInt& work_bound) {
    const CyclicCodeEnum E = build_code_enum(req, work_bound);
    const FieldCtx& F = *E.ring.base;
    const int tn = req.t * static_cast<int>(req.n);
    bool ok = true;
    for_each_code_combo(E, [&](const std::vector<std::size_t>& idx) {
        if (!ok) return;
        const Mat code = stacked_code_basis(E, idx);
        const Mat dual = dual_basis_of(F, code, E.gram.gram, tn);
        if (static_cast<int>(code.size() + dual.size()) != tn) {
            ok = false;
            return;
        }
        for (std::size_t i = 0; i < E.comps.size(); ++i) {
            const int k_i = E.comps[i].choices[idx[i]].k_dim;
            const std::size_t mi = static_cast<std::size_t>(E.cls.mu[i]);
            const int expected = (req.t - k_i) * E.comps[mi].d;
            if (intersection_dim(F, dual, E.comps[mi].j_coords) != expected) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

CountReport census(const CensusRequest& req) {
    require_admissible(req.delta, req.t, req.q.p);
    CountReport rep;
    rep.request = req;
    rep.table = cosets(req.q, req.n, req.t);
    rep.cls = classify(rep.table);
    rep.r = r_factor(req.delta, req.t, req.q);
    rep.r_exponent = req.n % 2 == 0 ? 2 : 1;

    BigInt total = rep.r.total;
    if (rep.r_exponent == 2) total *= rep.r.total;
    for (int i : rep.cls.fixed) {
        FactorSummary fs;
        fs.index = i;
        fs.is_pair = false;
        fs.d = rep.table.d[static_cast<std::size_t>(i)];
        fs.breakdown = n_unitary(req.t, fs.d, req.q.q);
        total *= fs.breakdown.total;
        rep.factors.push_back(std::move(fs));
    }
    for (int h : rep.cls.paired) {
        FactorSummary fs;
        fs.index = h;
        fs.is_pair = true;
        fs.d = rep.table.d[static_cast<std::size_t>(h)];
        fs.breakdown = n_pair(req.t, fs.d, req.q.q);
        total *= fs.breakdown.total;
        rep.factors.push_back(std::move(fs));
    }
    std::sort(rep.factors.begin(), rep.factors.end(),
              [](const FactorSummary& a, const FactorSummary& b) { return a.index < b.index; });
    rep.total = total;
    if (rep.total != total_count(req.q, req.t, req.n, req.delta))
        throw Error("assembled census total disagrees with the closed form");
    return rep;
}

}  // namespace lcdc
