#pragma once

#include <array>
#include <optional>
#include <utility>

#include "lcdc/counting.hpp"
#include "lcdc/linalg.hpp"

namespace lcdc {

inline const BigInt kDefaultWorkBound = 10'000'000;

// A finite vector space carrying a sesquilinear form [u,v] = u G sigma(v)^T
// with sigma(x) = x^conj_pow. conj_pow == 1 gives a plain bilinear form.
struct FormedSpace {
    FieldPtr field;
    int dim = 0;
    Mat gram;
    std::uint64_t conj_pow = 1;
};

FormedSpace make_formed(FieldPtr field, Mat gram, std::uint64_t conj_pow = 1);

// Standard non-degenerate Hermitian space: identity Gram over a field of
// square order Q with sigma(x) = x^sqrt(Q).
FormedSpace standard_hermitian(FieldPtr field, int dim);

// Standard symplectic space of even dimension: antidiagonal unit blocks.
FormedSpace standard_symplectic(FieldPtr field, int dim);

Elem fs_conj(const FormedSpace& S, Elem x);
Elem fs_eval(const FormedSpace& S, const Row& u, const Row& v);

// Gram matrix of the form restricted to the rows of basis.
Mat fs_restrict_gram(const FormedSpace& S, const Mat& basis);

// Number of k-dimensional subspaces on which the restricted form is
// non-degenerate. Enumerates canonical RREF representatives; throws
// WorkBoundExceeded when the subspace count passes the bound.
BigInt count_nondeg_subspaces(const FormedSpace& S, int k,
                              const BigInt& work_bound = kDefaultWorkBound);

// Largest dimension of a totally isotropic subspace, by exhaustive search.
int witt_index_bruteforce(const FormedSpace& S, const BigInt& work_bound = kDefaultWorkBound);

// (#nonzero isotropic vectors, #ordered pairs (a,b) of isotropic vectors
// with [a,b] = 1).
std::pair<BigInt, BigInt> count_isotropic_and_hyperbolic(const FormedSpace& S,
                                                         const BigInt& work_bound = kDefaultWorkBound);

// For an odd-characteristic quadratic space and a non-singular reference
// vector r: L = #{u non-singular : [u,u] = theta [r,r], theta a nonzero
// square}, M = remaining non-singular vectors. Throws SingularReference.
std::pair<BigInt, BigInt> count_isometric_nonsingular(const FormedSpace& S, const Row& r,
                                                      const BigInt& work_bound = kDefaultWorkBound);

// The trace-form Gram block of size t x t over GF(q) on the basis of
// GF(q^t) chosen by make_subfield_basis:
//   ordinary:  Tr(b_u b_v)
//   star:      Tr(b_u phi(b_v))
//   hermitian: Tr(gamma b_u b_v^(q^(t/2)))
// The block is the single-coordinate building block of the length-n code
// Gram matrix.
struct TraceBlock {
    FieldPtr base;  // GF(q)
    FieldPtr big;   // GF(q^t)
    SubfieldBasis basis;
    Mat gram;       // t x t over base
};

TraceBlock trace_gram_block(const PrimePower& q, int t, FormKind delta);

// Kernel filtration of the trace map for even q (throws OddQ): V0 is the
// trace kernel (dimension t-1); for even t, alpha is the smallest element
// with Tr(alpha) = 1 and V1 = {x in V0 : alpha x in V0} (dimension t-2,
// excluding 1, with GF(q^t) = V1 + <1> + <alpha> as a direct sum).
struct TraceKernelSpaces {
    FieldPtr big;
    std::vector<Elem> v0;
    std::optional<Elem> alpha;
    std::vector<Elem> v1;
};

TraceKernelSpaces trace_kernel_spaces(const PrimePower& q, int t);

// Two copies of K^t joined by a non-degenerate tau-sesquilinear pairing
// B(a, c) = a P tau(c)^T with tau(x) = x^tau_pow. An element of the paired
// module is (a, b) with a in the left copy and b in the right; such an
// element is isotropic when B(a, b) = 0.
struct PairedModuleSpace {
    FieldPtr K;
    int t = 0;
    Mat pairing;
    std::uint64_t tau_pow = 1;
};

// Empty pairing selects the identity matrix. Throws DegenerateInput when the
// pairing is singular.
PairedModuleSpace make_paired(FieldPtr K, int t, Mat pairing = {}, std::uint64_t tau_pow = 1);

Elem pm_eval(const PairedModuleSpace& S, const Row& a, const Row& c);

// Ordered pairs (A, B) of k-dimensional subspaces of the two copies with
// A meeting the left-annihilator of B trivially and B meeting the right-
// annihilator of A trivially. Also asserts that no mixed-dimension pair
// (dim A != dim B) satisfies the same conditions.
BigInt count_nondeg_module_pairs(int t, int d, const PrimePower& q, int k,
                                 const BigInt& work_bound = kDefaultWorkBound);

// Same count against an explicitly given pairing space.
BigInt count_nondeg_module_pairs_in(const PairedModuleSpace& S, int k,
                                    const BigInt& work_bound = kDefaultWorkBound,
                                    bool check_mixed_dims = true);

struct PairedIsoHyp {
    BigInt trivial_isotropic;     // exactly one component zero
    BigInt nontrivial_isotropic;  // both components nonzero, B(a,b) = 0
    BigInt hyperbolic_pairs;      // ordered (x, y) completing such an x
};

// Exhaustive counts over the full rank-t paired module for K = GF(q^d).
PairedIsoHyp count_paired_isotropic_hyperbolic(int t, int d, const PrimePower& q,
                                               const BigInt& work_bound = kDefaultWorkBound);

// Greedy orthogonal decomposition of a non-degenerate subspace pair (A, B)
// of equal dimension r: extract hyperbolic pairs until rank <= 1, then one
// anisotropic element if r is odd. The transcript is verified internally
// (block Gram values, cross-block orthogonality, spans) before returning.
// Throws DegenerateInput when dims differ or the pair is degenerate.
struct WittPairTranscript {
    // x = (a, b), y = (c, d) per extracted hyperbolic pair
    std::vector<std::array<Row, 4>> hyperbolic;
    std::optional<std::array<Row, 2>> anisotropic;
};

WittPairTranscript find_witt_decomposition_pair(const PairedModuleSpace& S,
                                                const Mat& a_basis, const Mat& b_basis);

}  // namespace lcdc
