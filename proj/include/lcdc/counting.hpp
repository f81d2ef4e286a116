#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcdc/bigint.hpp"
#include "lcdc/cosets.hpp"
#include "lcdc/field.hpp"

namespace lcdc {

enum class FormKind { Star, Ordinary, Hermitian };

std::string form_name(FormKind delta);
std::optional<FormKind> parse_form(const std::string& name);

// Admissibility of the form over GF(q^t) / GF(q), q = p^e:
//   star:      t >= 2 and t not congruent to 1 mod p
//   ordinary:  t >= 2
//   hermitian: t >= 2 and t even
bool form_admissible(FormKind delta, int t, std::int64_t p);
void require_admissible(FormKind delta, int t, std::int64_t p);  // FormInadmissible

// A count split by dimension: per_k[k] for k = 0..t, and the total.
struct KBreakdown {
    BigInt total;
    std::vector<BigInt> per_k;
};

// Gaussian binomial coefficient with parameter Q: the number of b-dimensional
// subspaces of an a-dimensional space over a field with Q elements. Returns 1
// for b == 0 and 0 for b > a or b < 0.
BigInt gauss_binom(int a, int b, const BigInt& Q);

// Counts of nondegenerate k-dimensional subspaces of the standard
// t-dimensional Hermitian space over GF(q^d), d even (throws OddD otherwise).
KBreakdown n_unitary(int t, int d, const BigInt& q);

// Same for the symplectic space of even dimension t over GF(q); throws OddT.
KBreakdown n_symplectic(int t, const BigInt& q);

// Witt index of the t-dimensional quadratic space attached to the trace form
// for odd q (throws EvenQ):
//   t odd                                     -> (t-1)/2
//   t even, q = 1 mod 4                       -> (t-2)/2
//   t = 0 mod 4, q = 3 mod 4                  -> (t-2)/2
//   t = 2 mod 4, q = 3 mod 4                  -> t/2
int witt_index_closed(int t, const BigInt& q);

// Witt index of the quadratic space attached to the star form for odd q
// (throws EvenQ / FormInadmissible). On a basis b_1..b_t the star Gram
// matrix is v v^T - G with v_u = Tr(b_u) and G the ordinary trace Gram, so
// by the matrix determinant lemma det = (-1)^t (1 - t) det(G). For odd t
// the Witt index is (t-1)/2 as usual; for even t it flips relative to
// witt_index_closed exactly when 1 - t is a non-square in GF(q).
int star_witt_index(int t, const PrimePower& q);

// Nondegenerate k-subspace counts for the orthogonal space above (odd q;
// throws EvenQ).
KBreakdown n_orthogonal_odd_q(int t, const BigInt& q);

// For even k, the number of nondegenerate k-subspaces of the orthogonal
// space whose restricted form has Witt index m_k, where m_k must be k/2 - 1
// or k/2 (throws BadWittIndex; throws EvenQ for even q).
BigInt orth_k_by_witt(int t, const BigInt& q, int k, int m_k);

// For odd k and odd q: the pair (L_k, M_k) counting nonsingular vectors of a
// k-dimensional orthogonal space split as reference-line plus hyperbolic
// planes, by square class of the value relative to the reference vector.
// Throws EvenK.
std::pair<BigInt, BigInt> lk_mk(int k, const BigInt& q);

// Nondegenerate k-subspace counts for the ordinary trace form at even q
// (throws OddQ for odd q).
KBreakdown n_ordinary_even_q(int t, const BigInt& q);

// Counts of nondegenerate rank-k module pairs for a split pair of conjugate
// ideals with residue field GF(q^d): per_k[k] = q^(k d (t-k)) * [t choose k]
// with parameter q^d.
KBreakdown n_pair(int t, int d, const BigInt& q);

// Number of non-trivial isotropic elements of the free rank-r pairing module
// over GF(q^d) x GF(q^d); defined for r >= 2 (throws RankTooSmall).
BigInt i_r_count(int r, int d, const BigInt& q);

// Total number of ordered hyperbolic pairs of the same module, rank r >= 2
// (throws RankTooSmall).
BigInt h_r_count(int r, int d, const BigInt& q);

// The self-paired factor R for the form delta over GF(q^t)/GF(q): dimension
// breakdown of nondegenerate subspace counts of the t-dimensional formed
// space at the trivial coset. Dispatches on (delta, parity of q, parity of
// t) and cross-checks the matching closed form; throws FormInadmissible or
// NoBulletMatches.
KBreakdown r_factor(FormKind delta, int t, const PrimePower& q);

// Closed-form count of delta-complementary-dual cyclic codes of length n:
//   R^gcd(n,2) * prod over self-paired cosets of n_unitary(t, d_i, q).total
//              * prod over coset pairs      of n_pair(t, d_h, q).total
// Throws NotCoprime and FormInadmissible.
BigInt total_count(const PrimePower& q, int t, std::int64_t n, FormKind delta);

// num / den, throwing if the division is not exact. The closed forms above
// only ever divide exactly; a remainder indicates a formula transcription
// bug.
BigInt exact_div(const BigInt& num, const BigInt& den);

}  // namespace lcdc
