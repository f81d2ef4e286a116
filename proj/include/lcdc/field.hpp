#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lcdc/bigint.hpp"
#include "lcdc/errors.hpp"

namespace lcdc {

// A prime power q = p^e with the value kept exact.
struct PrimePower {
    std::int64_t p = 0;
    int e = 0;
    BigInt q;
};

bool is_prime(std::int64_t p);

// Validates p prime and e >= 1, then packages p^e.
PrimePower make_prime_power(std::int64_t p, int e);

// A field element is an index into the coefficient-vector enumeration of
// GF(p^e): the element with coefficients (a_0, ..., a_{e-1}) over GF(p) has
// index sum a_i * p^i. Index 0 is zero and index 1 is one.
using Elem = std::uint32_t;

// Concrete GF(p^e) arithmetic. Instances are immutable after construction
// and safe to share across threads. Fields up to 2^16 elements get
// discrete-log tables for multiplication; larger ones fall back to
// polynomial arithmetic.
class FieldCtx {
  public:
    const PrimePower& order() const { return order_; }
    std::uint64_t size() const { return size_; }
    std::int64_t characteristic() const { return order_.p; }
    int degree() const { return order_.e; }

    // Modulus coefficients c[0..e], constant term first, c[e] == 1.
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return one_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // a must be nonzero
    Elem pow(Elem a, std::uint64_t k) const;

    // Embeds an integer via reduction mod p.
    Elem from_int(std::int64_t c) const;

    // Coefficient vector of length e over GF(p), constant term first.
    std::vector<std::int64_t> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<std::int64_t>& c) const;

    // Multiplicative generator with the smallest element index.
    Elem generator() const { return generator_; }

    // x -> x^q where q is the full field order (the absolute Frobenius
    // composed e times), iterated u times. Equals x -> x^(q^u).
    Elem frobenius_q(Elem a, std::uint64_t q_small, int u) const;

  private:
    friend std::shared_ptr<const FieldCtx> build_field(std::int64_t, int, std::uint64_t);

    PrimePower order_;
    std::uint64_t size_ = 0;
    Elem one_ = 1;
    std::vector<std::int64_t> modulus_;
    Elem generator_ = 0;

    // Discrete-log tables, present when size_ <= 1 << 16.
    bool has_tables_ = false;
    std::vector<Elem> exp_;            // exp_[i] = g^i, length size_-1
    std::vector<std::uint32_t> log_;   // log_[x] for x != 0

    std::vector<std::int64_t> to_poly(Elem a) const;
    Elem from_poly(const std::vector<std::int64_t>& f) const;
    Elem mul_poly(Elem a, Elem b) const;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

inline constexpr std::uint64_t kDefaultFieldBound = 1ULL << 20;

// Builds GF(p^e) with the canonical modulus: the lexicographically smallest
// monic irreducible polynomial of degree e over GF(p), comparing coefficient
// vectors constant term first. Throws NotPrime for composite p and
// SizeExceeded when p^e > max_size.
FieldPtr build_field(std::int64_t p, int e, std::uint64_t max_size = kDefaultFieldBound);

// Ring embedding GF(p^a) -> GF(p^b) for a | b, determined by mapping the
// small field's generator-of-construction x to the root of the small modulus
// in the big field with the smallest element index.
class Embedding {
  public:
    Embedding(FieldPtr small, FieldPtr big);  // FieldMismatch if incompatible

    const FieldPtr& small() const { return small_; }
    const FieldPtr& big() const { return big_; }

    Elem map(Elem x_small) const { return fwd_[x_small]; }
    std::optional<Elem> preimage(Elem x_big) const;

  private:
    FieldPtr small_;
    FieldPtr big_;
    std::vector<Elem> fwd_;
};

// Relative trace from GF(q^t) down to GF(q): x -> sum of x^(q^j), j < t.
// The result is always fixed by x -> x^q. Throws FieldMismatch when the
// field order is not q^t.
Elem rel_trace(const FieldCtx& field, Elem x, const PrimePower& q, int t);

// The trace complement map x -> x^q + x^(q^2) + ... + x^(q^(t-1)). Requires
// t >= 2 and t not congruent to 1 mod p (otherwise the associated form is
// degenerate); throws FormInadmissible.
Elem phi_map(const FieldCtx& field, Elem x, const PrimePower& q, int t);

// For even t = 2^a * m (m odd), the element gamma of the subfield
// GF(q^(2^a)) with the smallest index among nonzero solutions of
// gamma + gamma^(q^(2^(a-1))) = 0. Throws FormInadmissible for odd t.
Elem find_gamma(const FieldCtx& field, const PrimePower& q, int t);

// x -> x^(q^u) inside the given field.
Elem frobenius_iterate(const FieldCtx& field, Elem x, const PrimePower& q, int u);

// Basis and coordinate tables for GF(q^t) viewed as a GF(q)-vector space.
// beta[0] is always 1; the rest are picked greedily in element-index order.
struct SubfieldBasis {
    FieldPtr big;
    FieldPtr small;
    std::vector<Elem> beta;                  // length t, elements of big
    std::vector<std::vector<Elem>> coords;   // coords[x] has length t over small
    int t = 0;

    const Embedding& embedding() const { return *emb_; }
    Elem lift(const std::vector<Elem>& coordinate_vec) const;

  private:
    friend SubfieldBasis make_subfield_basis(FieldPtr big, FieldPtr small);
    std::shared_ptr<const Embedding> emb_;
};

SubfieldBasis make_subfield_basis(FieldPtr big, FieldPtr small);

}  // namespace lcdc
