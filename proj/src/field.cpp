#include "lcdc/field.hpp"

#include <algorithm>
#include <unordered_map>

namespace lcdc {

namespace {

using Poly = std::vector<std::int64_t>;  // coefficients, constant term first

std::int64_t mod_p(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod_p(r[i + j] + a[i] * b[j], p);
    }
    poly_trim(r);
    return r;
}

// Remainder of f modulo the monic polynomial m.
Poly poly_rem(Poly f, const Poly& m, std::int64_t p) {
    const std::size_t dm = m.size() - 1;
    while (f.size() > dm) {
        std::int64_t lead = f.back();
        std::size_t shift = f.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i < dm; ++i)
                f[shift + i] = mod_p(f[shift + i] - lead * m[i], p);
        }
        f.pop_back();
        poly_trim(f);
        if (f.size() <= dm) break;
    }
    poly_trim(f);
    return f;
}

Poly poly_powmod_x(const BigInt& n, const Poly& m, std::int64_t p) {
    Poly result{1};
    if (n == 0) return result;
    Poly base{0, 1};  // X
    base = poly_rem(base, m, p);
    const unsigned bits = boost::multiprecision::msb(n) + 1;
    for (unsigned i = bits; i-- > 0;) {
        result = poly_rem(poly_mul(result, result, p), m, p);
        if (boost::multiprecision::bit_test(n, i))
            result = poly_rem(poly_mul(result, base, p), m, p);
    }
    return result;
}

Poly poly_sub(Poly a, const Poly& b, std::int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_p(a[i] - b[i], p);
    poly_trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    while (!b.empty()) {
        // Make b monic before using it as a divisor.
        std::int64_t lead = b.back();
        if (lead != 1) {
            std::int64_t inv = 1;
            for (std::int64_t x = 1; x < p; ++x)
                if (mod_p(lead * x, p) == 1) { inv = x; break; }
            for (auto& c : b) c = mod_p(c * inv, p);
        }
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool poly_irreducible(const Poly& f, std::int64_t p) {
    const int e = static_cast<int>(f.size()) - 1;
    if (e < 1) return false;
    if (e == 1) return true;
    // x^(p^e) == x mod f, and gcd(x^(p^(e/r)) - x, f) == 1 for prime r | e.
    Poly xq = poly_powmod_x(big_pow(p, static_cast<unsigned long long>(e)), f, p);
    if (poly_sub(xq, Poly{0, 1}, p) != Poly{}) return false;
    std::vector<int> rs;
    int rem = e;
    for (int r = 2; r * r <= rem; ++r) {
        if (rem % r) continue;
        rs.push_back(r);
        while (rem % r == 0) rem /= r;
    }
    if (rem > 1) rs.push_back(rem);
    for (int r : rs) {
        Poly xr = poly_powmod_x(big_pow(p, static_cast<unsigned long long>(e / r)), f, p);
        Poly g = poly_gcd(f, poly_sub(xr, Poly{0, 1}, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PrimePower make_prime_power(std::int64_t p, int e) {
    if (!is_prime(p)) throw NotPrime("not a prime: " + std::to_string(p));
    if (e < 1) throw Error("prime power exponent must be positive, got " + std::to_string(e));
    PrimePower pp;
    pp.p = p;
    pp.e = e;
    pp.q = big_pow(p, static_cast<unsigned long long>(e));
    return pp;
}

std::vector<std::int64_t> FieldCtx::to_poly(Elem a) const {
    std::vector<std::int64_t> c(static_cast<std::size_t>(order_.e));
    std::uint64_t v = a;
    for (int i = 0; i < order_.e; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(order_.p));
        v /= static_cast<std::uint64_t>(order_.p);
    }
    return c;
}

Elem FieldCtx::from_poly(const std::vector<std::int64_t>& f) const {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;)
        v = v * static_cast<std::uint64_t>(order_.p) + static_cast<std::uint64_t>(mod_p(f[i], order_.p));
    return static_cast<Elem>(v);
}

Elem FieldCtx::add(Elem a, Elem b) const {
    if (order_.p == 2) return a ^ b;
    std::uint64_t va = a, vb = b, out = 0, mult = 1;
    const auto p = static_cast<std::uint64_t>(order_.p);
    for (int i = 0; i < order_.e; ++i) {
        out += mult * ((va % p + vb % p) % p);
        va /= p;
        vb /= p;
        mult *= p;
    }
    return static_cast<Elem>(out);
}

Elem FieldCtx::neg(Elem a) const {
    if (order_.p == 2) return a;
    std::uint64_t va = a, out = 0, mult = 1;
    const auto p = static_cast<std::uint64_t>(order_.p);
    for (int i = 0; i < order_.e; ++i) {
        std::uint64_t d = va % p;
        out += mult * (d ? p - d : 0);
        va /= p;
        mult *= p;
    }
    return static_cast<Elem>(out);
}

Elem FieldCtx::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldCtx::mul_poly(Elem a, Elem b) const {
    Poly fa = to_poly(a), fb = to_poly(b);
    poly_trim(fa);
    poly_trim(fb);
    return from_poly(poly_rem(poly_mul(fa, fb, order_.p), modulus_, order_.p));
}

Elem FieldCtx::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables_) {
        const std::uint64_t m = size_ - 1;
        return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % m];
    }
    return mul_poly(a, b);
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw Error("inverse of zero");
    if (has_tables_) {
        const std::uint64_t m = size_ - 1;
        return exp_[(m - log_[a]) % m];
    }
    return pow(a, size_ - 2);
}

Elem FieldCtx::pow(Elem a, std::uint64_t k) const {
    if (a == 0) return k == 0 ? one_ : 0;
    if (has_tables_) {
        const std::uint64_t m = size_ - 1;
        return exp_[(static_cast<std::uint64_t>(log_[a]) * (k % m)) % m];
    }
    Elem r = one_, b = a;
    while (k) {
        if (k & 1ULL) r = mul_poly(r, b);
        b = mul_poly(b, b);
        k >>= 1ULL;
    }
    return r;
}

Elem FieldCtx::from_int(std::int64_t c) const { return static_cast<Elem>(mod_p(c, order_.p)); }

std::vector<std::int64_t> FieldCtx::coeffs(Elem a) const { return to_poly(a); }

Elem FieldCtx::from_coeffs(const std::vector<std::int64_t>& c) const {
    if (static_cast<int>(c.size()) > order_.e) {
        for (std::size_t i = static_cast<std::size_t>(order_.e); i < c.size(); ++i)
            if (mod_p(c[i], order_.p) != 0) throw Error("coefficient vector too long");
    }
    std::vector<std::int64_t> cc(c.begin(), c.begin() + std::min<std::size_t>(c.size(), static_cast<std::size_t>(order_.e)));
    return from_poly(cc);
}

Elem FieldCtx::frobenius_q(Elem a, std::uint64_t q_small, int u) const {
    Elem r = a;
    for (int i = 0; i < u; ++i) r = pow(r, q_small);
    return r;
}

FieldPtr build_field(std::int64_t p, int e, std::uint64_t max_size) {
    if (!is_prime(p)) throw NotPrime("not a prime: " + std::to_string(p));
    if (e < 1) throw Error("field degree must be positive, got " + std::to_string(e));
    BigInt size_big = big_pow(p, static_cast<unsigned long long>(e));
    if (size_big > max_size)
        throw SizeExceeded("field size " + size_big.str() + " exceeds limit " + std::to_string(max_size));
    const auto size = size_big.convert_to<std::uint64_t>();

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->order_ = make_prime_power(p, e);
    ctx->size_ = size;

    // Scan monic degree-e candidates in lexicographic order of the
    // coefficient vector (constant term compared first) for the first
    // irreducible one.
    Poly modulus;
    std::vector<std::int64_t> digits(static_cast<std::size_t>(e), 0);
    for (std::uint64_t m = 0; m < size; ++m) {
        std::uint64_t v = m;
        for (int i = e; i-- > 0;) {
            digits[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(p));
            v /= static_cast<std::uint64_t>(p);
        }
        Poly cand(digits);
        cand.push_back(1);
        if (poly_irreducible(cand, p)) {
            modulus = std::move(cand);
            break;
        }
    }
    if (modulus.empty()) throw Error("no irreducible modulus found");
    ctx->modulus_ = modulus;
    ctx->one_ = 1;

    // Smallest-index multiplicative generator.
    const std::uint64_t m1 = size - 1;
    auto pf = prime_factors(m1);
    auto order_is_full = [&](Elem g) {
        for (auto r : pf) {
            Elem t = ctx->one_;
            Elem b = g;
            std::uint64_t k = m1 / r;
            while (k) {
                if (k & 1ULL) t = ctx->mul_poly(t, b);
                b = ctx->mul_poly(b, b);
                k >>= 1ULL;
            }
            if (t == ctx->one_) return false;
        }
        return true;
    };
    for (Elem g = 1; g < size; ++g) {
        if (order_is_full(g)) {
            ctx->generator_ = g;
            break;
        }
    }

    if (size <= (1ULL << 16)) {
        ctx->exp_.resize(m1);
        ctx->log_.assign(size, 0);
        Elem cur = ctx->one_;
        for (std::uint64_t i = 0; i < m1; ++i) {
            ctx->exp_[i] = cur;
            ctx->log_[cur] = static_cast<std::uint32_t>(i);
            cur = ctx->mul_poly(cur, ctx->generator_);
        }
        if (cur != ctx->one_) throw Error("generator order mismatch");
        ctx->has_tables_ = true;
    }
    return ctx;
}

Embedding::Embedding(FieldPtr small, FieldPtr big) : small_(std::move(small)), big_(std::move(big)) {
    if (small_->characteristic() != big_->characteristic())
        throw FieldMismatch("characteristic mismatch");
    if (big_->degree() % small_->degree() != 0)
        throw FieldMismatch("degree " + std::to_string(small_->degree()) + " does not divide " +
                            std::to_string(big_->degree()));

    // Root of the small modulus in the big field with the smallest index.
    const auto& mod = small_->modulus();
    Elem root = 0;
    bool found = false;
    for (std::uint64_t x = 0; x < big_->size(); ++x) {
        Elem acc = big_->zero();
        for (std::size_t i = mod.size(); i-- > 0;) {
            acc = big_->mul(acc, static_cast<Elem>(x));
            acc = big_->add(acc, big_->from_int(mod[i]));
        }
        if (acc == big_->zero()) {
            root = static_cast<Elem>(x);
            found = true;
            break;
        }
    }
    if (!found) throw FieldMismatch("small modulus has no root in big field");

    fwd_.resize(small_->size());
    for (std::uint64_t x = 0; x < small_->size(); ++x) {
        auto c = small_->coeffs(static_cast<Elem>(x));
        Elem acc = big_->zero();
        for (std::size_t i = c.size(); i-- > 0;) {
            acc = big_->mul(acc, root);
            acc = big_->add(acc, big_->from_int(c[i]));
        }
        fwd_[x] = acc;
    }
}

std::optional<Elem> Embedding::preimage(Elem x_big) const {
    for (std::uint64_t x = 0; x < small_->size(); ++x)
        if (fwd_[x] == x_big) return static_cast<Elem>(x);
    return std::nullopt;
}

namespace {

std::uint64_t q_as_u64(const FieldCtx& field, const PrimePower& q, int t, const char* what) {
    if (field.characteristic() != q.p)
        throw FieldMismatch(std::string(what) + ": characteristic mismatch");
    if (t < 1 || big_pow(q.q, static_cast<unsigned long long>(t)) != field.size())
        throw FieldMismatch(std::string(what) + ": field order is not q^t");
    return q.q.convert_to<std::uint64_t>();
}

}  // namespace

Elem rel_trace(const FieldCtx& field, Elem x, const PrimePower& q, int t) {
    const std::uint64_t qs = q_as_u64(field, q, t, "rel_trace");
    Elem acc = x;
    Elem cur = x;
    for (int j = 1; j < t; ++j) {
        cur = field.pow(cur, qs);
        acc = field.add(acc, cur);
    }
    if (field.pow(acc, qs) != acc) throw Error("trace value not fixed by Frobenius");
    return acc;
}

Elem phi_map(const FieldCtx& field, Elem x, const PrimePower& q, int t) {
    if (t < 2) throw FormInadmissible("phi_map requires t >= 2");
    if (mod_p(t, q.p) == 1)
        throw FormInadmissible("phi_map undefined: t = " + std::to_string(t) +
                               " is congruent to 1 mod " + std::to_string(q.p));
    const std::uint64_t qs = q_as_u64(field, q, t, "phi_map");
    Elem acc = field.zero();
    Elem cur = x;
    for (int j = 1; j < t; ++j) {
        cur = field.pow(cur, qs);
        acc = field.add(acc, cur);
    }
    return acc;
}

Elem find_gamma(const FieldCtx& field, const PrimePower& q, int t) {
    if (t < 2 || t % 2 != 0) throw FormInadmissible("find_gamma requires even t >= 2");
    q_as_u64(field, q, t, "find_gamma");
    int a = 0;
    int tt = t;
    while (tt % 2 == 0) {
        tt /= 2;
        ++a;
    }
    const int half = 1 << (a - 1);
    for (std::uint64_t x = 1; x < field.size(); ++x) {
        Elem g = static_cast<Elem>(x);
        if (frobenius_iterate(field, g, q, 2 * half) != g) continue;  // g must lie in GF(q^(2^a))
        if (field.add(g, frobenius_iterate(field, g, q, half)) == field.zero()) return g;
    }
    throw Error("no gamma found");
}

Elem frobenius_iterate(const FieldCtx& field, Elem x, const PrimePower& q, int u) {
    if (field.characteristic() != q.p) throw FieldMismatch("frobenius_iterate: characteristic mismatch");
    return field.frobenius_q(x, q.q.convert_to<std::uint64_t>(), u);
}

SubfieldBasis make_subfield_basis(FieldPtr big, FieldPtr small) {
    if (big->size() > (1ULL << 16))
        throw SizeExceeded("subfield coordinate table too large for field of size " +
                           std::to_string(big->size()));
    SubfieldBasis sb;
    sb.big = big;
    sb.small = small;
    sb.t = big->degree() / small->degree();
    if (small->degree() * sb.t != big->degree())
        throw FieldMismatch("subfield degree does not divide");
    sb.emb_ = std::make_shared<Embedding>(small, big);

    const std::uint64_t qs = small->size();
    sb.coords.assign(big->size(), {});
    std::vector<Elem> span{big->zero()};
    sb.coords[big->zero()] = {};
    std::vector<char> in_span(big->size(), 0);
    in_span[big->zero()] = 1;
    for (std::uint64_t cand = 1; cand < big->size() && sb.beta.size() < static_cast<std::size_t>(sb.t); ++cand) {
        if (in_span[cand]) continue;
        sb.beta.push_back(static_cast<Elem>(cand));
        std::vector<Elem> next;
        next.reserve(span.size() * qs);
        for (Elem s : span) {
            const auto base_coord = sb.coords[s];
            for (std::uint64_t c = 0; c < qs; ++c) {
                Elem v = big->add(s, big->mul(sb.emb_->map(static_cast<Elem>(c)), static_cast<Elem>(cand)));
                auto coord = base_coord;
                coord.push_back(static_cast<Elem>(c));
                sb.coords[v] = std::move(coord);
                in_span[v] = 1;
                next.push_back(v);
            }
        }
        span = std::move(next);
    }
    if (sb.beta.size() != static_cast<std::size_t>(sb.t) || span.size() != big->size())
        throw Error("subfield basis construction failed");
    return sb;
}

Elem SubfieldBasis::lift(const std::vector<Elem>& coordinate_vec) const {
    Elem acc = big->zero();
    for (std::size_t i = 0; i < coordinate_vec.size() && i < beta.size(); ++i)
        acc = big->add(acc, big->mul(emb_->map(coordinate_vec[i]), beta[i]));
    return acc;
}

}  // namespace lcdc
