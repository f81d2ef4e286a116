#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcdc/field.hpp"

namespace lcdc {

// q-cyclotomic cosets modulo n, listed by ascending representative.
// reps[0] == 0 always. d[i] is the coset size, g[i] = gcd(d[i], t) and
// D[i] = d[i] / g[i] for the extension degree t carried along.
struct CosetTable {
    PrimePower q;
    std::int64_t n = 0;
    int t = 0;
    std::vector<std::int64_t> reps;
    std::vector<std::vector<std::int64_t>> cosets;
    std::vector<int> d;
    std::vector<int> g;
    std::vector<int> D;
};

// Throws NotCoprime unless gcd(n, q) == 1.
CosetTable cosets(const PrimePower& q, std::int64_t n, int t);

// The negation involution i -> index of -reps[i] mod n, together with the
// partition of indices it induces:
//   special: index 0, plus the index of {n/2} for even n (i_sharp)
//   fixed:   remaining mu-fixed indices (these always have even coset size)
//   paired:  the smaller index of each two-cycle of mu
struct MuClassification {
    std::vector<int> mu;
    std::optional<int> i_sharp;
    std::vector<int> special;
    std::vector<int> fixed;
    std::vector<int> paired;
};

MuClassification classify(const CosetTable& table);

}  // namespace lcdc
