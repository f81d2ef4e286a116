#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "lcdc/field.hpp"

using namespace lcdc;

TEST_CASE("prime power validation") {
    CHECK(is_prime(2));
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(6));
    CHECK_THROWS_AS(make_prime_power(6, 1), NotPrime);
    CHECK_THROWS_AS(make_prime_power(2, 0), Error);
    const PrimePower q = make_prime_power(3, 2);
    CHECK(q.p == 3);
    CHECK(q.e == 2);
    CHECK(q.q == 9);
}

TEST_CASE("canonical modulus selection") {
    // GF(4) has a unique irreducible quadratic, X^2 + X + 1.
    CHECK(build_field(2, 2)->modulus() == std::vector<std::int64_t>{1, 1, 1});
    // Over GF(3) the constant-term-first scan reaches X^2 + 1 first.
    CHECK(build_field(3, 2)->modulus() == std::vector<std::int64_t>{1, 0, 1});
    CHECK(build_field(2, 1)->modulus().size() == 2);
    CHECK_THROWS_AS(build_field(2, 25), SizeExceeded);
    CHECK_THROWS_AS(build_field(9, 1), NotPrime);
}

TEST_CASE("field arithmetic basics") {
    FieldPtr f4 = build_field(2, 2);
    const Elem w = 2;  // the modulus root X
    CHECK(f4->mul(w, w) == f4->add(w, f4->one()));  // X^2 = X + 1
    CHECK(f4->mul(w, f4->inv(w)) == f4->one());
    CHECK(f4->pow(w, 3) == f4->one());
    CHECK(f4->generator() == w);

    FieldPtr f9 = build_field(3, 2);
    for (Elem a = 0; a < 9; ++a) {
        CHECK(f9->add(a, f9->neg(a)) == f9->zero());
        if (a != 0) CHECK(f9->mul(a, f9->inv(a)) == f9->one());
        CHECK(f9->from_coeffs(f9->coeffs(a)) == a);
    }
    CHECK(f9->from_int(-1) == f9->neg(f9->one()));
}

TEST_CASE("determinism across rebuilds") {
    for (auto [p, e] : {std::pair<std::int64_t, int>{2, 4}, {3, 3}, {5, 2}}) {
        FieldPtr a = build_field(p, e);
        FieldPtr b = build_field(p, e);
        CHECK(a->modulus() == b->modulus());
        CHECK(a->generator() == b->generator());
    }
}

TEST_CASE("relative trace") {
    FieldPtr f4 = build_field(2, 2);
    const PrimePower q2 = make_prime_power(2, 1);
    CHECK(rel_trace(*f4, f4->one(), q2, 2) == f4->zero());
    CHECK(rel_trace(*f4, 2, q2, 2) == f4->one());  // Tr(w) = w + w^2 = 1
    CHECK(rel_trace(*f4, 3, q2, 2) == f4->one());

    FieldPtr f8 = build_field(2, 3);
    CHECK(rel_trace(*f8, f8->one(), q2, 3) == f8->one());

    CHECK_THROWS_AS(rel_trace(*f4, 1, q2, 3), FieldMismatch);
}

TEST_CASE("trace is linear with the expected kernel size") {
    for (auto [p, e, t] : {std::tuple<std::int64_t, int, int>{2, 1, 2},
                           {2, 1, 3},
                           {2, 2, 2},
                           {3, 1, 2},
                           {3, 1, 3},
                           {5, 1, 2}}) {
        const PrimePower q = make_prime_power(p, e);
        FieldPtr big = build_field(p, e * t);
        FieldPtr small = build_field(p, e);
        Embedding emb(small, big);

        std::uint64_t kernel = 0;
        for (std::uint64_t x = 0; x < big->size(); ++x) {
            Elem tr = rel_trace(*big, static_cast<Elem>(x), q, t);
            CHECK(emb.preimage(tr).has_value());
            if (tr == big->zero()) ++kernel;
        }
        std::uint64_t expected = 1;
        for (int i = 0; i < t - 1; ++i) expected *= small->size();
        CHECK(kernel == expected);

        // additivity on a full scan of small fields, sampled otherwise
        const std::uint64_t limit = big->size() <= 64 ? big->size() : 16;
        for (std::uint64_t x = 0; x < limit; ++x)
            for (std::uint64_t y = 0; y < limit; ++y) {
                Elem lhs = rel_trace(*big, big->add(static_cast<Elem>(x), static_cast<Elem>(y)), q, t);
                Elem rhs = big->add(rel_trace(*big, static_cast<Elem>(x), q, t),
                                    rel_trace(*big, static_cast<Elem>(y), q, t));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("phi map") {
    const PrimePower q2 = make_prime_power(2, 1);
    FieldPtr f4 = build_field(2, 2);
    for (Elem x = 0; x < 4; ++x) CHECK(phi_map(*f4, x, q2, 2) == f4->mul(x, x));
    CHECK(phi_map(*f4, f4->zero(), q2, 2) == f4->zero());

    // t = 3 is congruent to 1 mod 2, where phi drops rank
    FieldPtr f8 = build_field(2, 3);
    CHECK_THROWS_AS(phi_map(*f8, 1, q2, 3), FormInadmissible);
}

TEST_CASE("phi is a bijection whenever admissible") {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13})
        for (int e = 1; e <= 4; ++e) {
            BigInt qv = 1;
            for (int i = 0; i < e; ++i) qv *= p;
            for (int t = 2; t <= 12; ++t) {
                if (t % p == 1) continue;
                BigInt sz = 1;
                for (int i = 0; i < t; ++i) sz *= qv;
                if (sz > 4096) break;
                const PrimePower q = make_prime_power(p, e);
                FieldPtr big = build_field(p, e * t);
                std::set<Elem> image;
                for (std::uint64_t x = 0; x < big->size(); ++x)
                    image.insert(phi_map(*big, static_cast<Elem>(x), q, t));
                CHECK(image.size() == big->size());
            }
        }
}

TEST_CASE("gamma for the hermitian form") {
    FieldPtr f4 = build_field(2, 2);
    CHECK(find_gamma(*f4, make_prime_power(2, 1), 2) == f4->one());

    FieldPtr f9 = build_field(3, 2);
    const Elem g = find_gamma(*f9, make_prime_power(3, 1), 2);
    CHECK(f9->mul(g, g) == f9->neg(f9->one()));
    // smallest of the two square roots of -1 by element index
    for (Elem c = 1; c < g; ++c) CHECK(f9->mul(c, c) != f9->neg(f9->one()));

    FieldPtr f64 = build_field(2, 6);
    CHECK_THROWS_AS(find_gamma(*f64, make_prime_power(2, 1), 3), FormInadmissible);

    // t = 4 = 2^2: gamma lives in GF(q^4) and satisfies gamma + gamma^(q^2) = 0
    FieldPtr f16 = build_field(2, 4);
    const PrimePower q2 = make_prime_power(2, 1);
    const Elem g4 = find_gamma(*f16, q2, 4);
    CHECK(g4 != f16->zero());
    CHECK(f16->add(g4, frobenius_iterate(*f16, g4, q2, 2)) == f16->zero());
}

TEST_CASE("frobenius iterate") {
    const PrimePower q2 = make_prime_power(2, 1);
    FieldPtr f4 = build_field(2, 2);
    CHECK(frobenius_iterate(*f4, 2, q2, 0) == 2);
    CHECK(frobenius_iterate(*f4, 2, q2, 1) == f4->mul(2, 2));

    const PrimePower q3 = make_prime_power(3, 1);
    FieldPtr f9 = build_field(3, 2);
    for (Elem x = 0; x < 9; ++x) CHECK(frobenius_iterate(*f9, x, q3, 2) == x);

    // Frobenius is additive and multiplicative
    for (Elem x = 0; x < 9; ++x)
        for (Elem y = 0; y < 9; ++y) {
            CHECK(frobenius_iterate(*f9, f9->add(x, y), q3, 1) ==
                  f9->add(frobenius_iterate(*f9, x, q3, 1), frobenius_iterate(*f9, y, q3, 1)));
            CHECK(frobenius_iterate(*f9, f9->mul(x, y), q3, 1) ==
                  f9->mul(frobenius_iterate(*f9, x, q3, 1), frobenius_iterate(*f9, y, q3, 1)));
        }
}

TEST_CASE("embeddings are ring homomorphisms") {
    FieldPtr f4 = build_field(2, 2);
    FieldPtr f16 = build_field(2, 4);
    Embedding emb(f4, f16);
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) {
            CHECK(emb.map(f4->add(a, b)) == f16->add(emb.map(a), emb.map(b)));
            CHECK(emb.map(f4->mul(a, b)) == f16->mul(emb.map(a), emb.map(b)));
        }
    CHECK(emb.map(f4->one()) == f16->one());
    CHECK(emb.preimage(emb.map(3)) == 3);
    CHECK_THROWS_AS(Embedding(build_field(2, 3), f16), FieldMismatch);
}

TEST_CASE("subfield basis round trip") {
    FieldPtr f16 = build_field(2, 4);
    FieldPtr f4 = build_field(2, 2);
    SubfieldBasis sb = make_subfield_basis(f16, f4);
    CHECK(sb.t == 2);
    CHECK(sb.beta[0] == f16->one());
    for (Elem x = 0; x < 16; ++x) CHECK(sb.lift(sb.coords[x]) == x);

    // coordinates are GF(4)-linear
    const Embedding& emb = sb.embedding();
    for (Elem x = 0; x < 16; ++x)
        for (Elem lam = 0; lam < 4; ++lam) {
            Elem scaled = f16->mul(emb.map(lam), x);
            for (int u = 0; u < sb.t; ++u)
                CHECK(sb.coords[scaled][static_cast<std::size_t>(u)] ==
                      f4->mul(lam, sb.coords[x][static_cast<std::size_t>(u)]));
        }
}
