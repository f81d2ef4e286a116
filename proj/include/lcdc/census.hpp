#pragma once

#include <memory>
#include <vector>

#include "lcdc/cosets.hpp"
#include "lcdc/counting.hpp"
#include "lcdc/formed.hpp"
#include "lcdc/linalg.hpp"

namespace lcdc {

struct CensusRequest {
    PrimePower q;
    int t = 0;
    std::int64_t n = 0;
    FormKind delta = FormKind::Ordinary;
};

// One multiplicand of the closed-form product: a self-paired coset
// contributes a unitary-type factor, a coset pair contributes a pair-type
// factor.
struct FactorSummary {
    int index = 0;
    bool is_pair = false;
    int d = 0;
    KBreakdown breakdown;
};

struct CountReport {
    CensusRequest request;
    CosetTable table;
    MuClassification cls;
    KBreakdown r;      // self-paired factor, with per-dimension breakdown
    int r_exponent;    // gcd(n, 2)
    std::vector<FactorSummary> factors;
    BigInt total;
};

// Closed-form census. Throws NotCoprime / FormInadmissible.
CountReport census(const CensusRequest& req);

// Factorization of X^n - 1 over GF(q) through the splitting field GF(q^m),
// m the multiplicative order of q mod n. Factors are indexed like the
// cyclotomic cosets (ascending representative). eta = zeta^((q^m-1)/n) for
// the smallest-index generator zeta.
struct FactorTable {
    FieldPtr base;
    FieldPtr splitting;
    std::shared_ptr<const Embedding> emb;  // base -> splitting
    int m = 0;
    Elem zeta = 0;
    Elem eta = 0;
    CosetTable table;
    std::vector<std::vector<Elem>> factors;  // over base, constant term first
};

FactorTable factor_xn_minus_1(const PrimePower& q, std::int64_t n,
                              std::uint64_t field_bound = kDefaultFieldBound);

// Gram matrix of the delta trace form on GF(q^t)^n over the GF(q)-basis
// {coordinate j, basis element u} (index j*t + u): block diagonal with n
// copies of the t x t trace block. Throws FormInadmissible.
struct GramData {
    TraceBlock block;
    Mat gram;  // tn x tn over block.base
};

GramData trace_form_gram(const PrimePower& q, int t, std::int64_t n, FormKind delta);

// The ambient polynomial ring R_n over GF(q^t) together with the embedded
// copy of GF(q). Ring elements are coefficient vectors of length n over the
// big field, constant term first.
struct PolyRing {
    PrimePower q;
    int t = 0;
    std::int64_t n = 0;
    FieldPtr big;
    FieldPtr base;
    std::shared_ptr<const Embedding> emb;  // base -> big
};

using PolyVec = std::vector<Elem>;

PolyRing make_poly_ring(const PrimePower& q, int t, std::int64_t n);

PolyVec poly_add_ring(const PolyRing& R, const PolyVec& a, const PolyVec& b);
PolyVec poly_mul_ring(const PolyRing& R, const PolyVec& a, const PolyVec& b);

// tau_{q^u, v}: coefficientwise x -> x^(q^u) combined with the index map
// i -> v*i mod n.
PolyVec poly_tau(const PolyRing& R, const PolyVec& a, int u, std::int64_t v);

// The ring-valued form [a, b]_delta. The result always has coefficients in
// the embedded GF(q); this is asserted. Throws FormInadmissible.
PolyVec poly_form(const PolyRing& R, const PolyVec& a, const PolyVec& b, FormKind delta);

// Code-level oracle state: for each coset index, the minimal ideal K_i of
// R_n over GF(q) (with its multiplicative identity), a K_i-basis of the
// component J_i of R_n over GF(q^t), and the enumerated K_i-subspaces of
// J_i as GF(q)-coordinate bases.
struct CyclicCodeEnum {
    CensusRequest req;
    PolyRing ring;
    GramData gram;
    FactorTable ft;
    MuClassification cls;

    struct Component {
        int d = 0;
        std::vector<PolyVec> k_basis;     // GF(q)-basis of K_i, embedded in the big ring
        PolyVec k_identity;               // e_i
        std::vector<PolyVec> k_elements;  // all q^d elements of K_i, element 0 first
        std::vector<PolyVec> j_basis;     // K_i-basis of J_i, t entries
        Mat j_coords;                     // GF(q)-coordinate basis of J_i (t*d rows)
        struct Choice {
            int k_dim = 0;
            Mat coords;  // GF(q)-coordinate RREF basis, k_dim*d rows
        };
        std::vector<Choice> choices;      // all K_i-subspaces of J_i
    };
    std::vector<Component> comps;

    // GF(q)-coordinates (length t*n) of a ring element.
    Row coords_of(const PolyVec& a) const;
};

CyclicCodeEnum build_code_enum(const CensusRequest& req,
                               const BigInt& work_bound = kDefaultWorkBound);

// Number of delta-complementary-dual cyclic codes by exhaustive enumeration
// of component subspace choices; the dual is computed as the Gram-matrix
// nullspace and the trivial-intersection test as a stacked rank. Throws
// WorkBoundExceeded.
BigInt enumerate_lcd_count(const CensusRequest& req, const BigInt& work_bound = kDefaultWorkBound);

// Independent slow path: enumerates every shift-invariant GF(q)-subspace of
// GF(q^t)^n directly, no ideal decomposition. Intended for t*n <= 8.
BigInt enumerate_lcd_count_flat(const CensusRequest& req,
                                const BigInt& work_bound = kDefaultWorkBound);

// For every enumerated code: dim C + dim dual = t*n, and the dual meets each
// component J_{mu(i)} in K-dimension t - k_i. Throws WorkBoundExceeded.
bool dual_dimension_check(const CensusRequest& req, const BigInt& work_bound = kDefaultWorkBound);

}  // namespace lcdc
