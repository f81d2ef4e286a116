#include "lcdc/cosets.hpp"

#include <algorithm>
#include <numeric>

#include "lcdc/errors.hpp"

namespace lcdc {

CosetTable cosets(const PrimePower& q, std::int64_t n, int t) {
    if (n < 1) throw Error("n must be positive, got " + std::to_string(n));
    if (t < 1) throw Error("t must be positive, got " + std::to_string(t));
    const std::int64_t qr = (q.q % n).convert_to<std::int64_t>();
    if (std::gcd(n, qr == 0 ? n : qr) != 1 && n > 1)
        throw NotCoprime("gcd(n, q) != 1 for n = " + std::to_string(n) + ", q = " + q.q.str());

    CosetTable table;
    table.q = q;
    table.n = n;
    table.t = t;

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (std::int64_t r = 0; r < n; ++r) {
        if (seen[static_cast<std::size_t>(r)]) continue;
        std::vector<std::int64_t> orbit;
        std::int64_t x = r;
        do {
            orbit.push_back(x);
            seen[static_cast<std::size_t>(x)] = 1;
            x = (x * qr) % n;
        } while (x != r);
        std::sort(orbit.begin(), orbit.end());
        table.reps.push_back(r);
        table.d.push_back(static_cast<int>(orbit.size()));
        table.g.push_back(static_cast<int>(std::gcd<std::int64_t>(static_cast<std::int64_t>(orbit.size()), t)));
        table.D.push_back(static_cast<int>(orbit.size()) / table.g.back());
        table.cosets.push_back(std::move(orbit));
    }
    return table;
}

MuClassification classify(const CosetTable& table) {
    const std::int64_t n = table.n;
    const int s = static_cast<int>(table.reps.size());

    // Map each residue to its coset index.
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < s; ++i)
        for (std::int64_t x : table.cosets[static_cast<std::size_t>(i)])
            owner[static_cast<std::size_t>(x)] = i;

    MuClassification out;
    out.mu.resize(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        std::int64_t neg = (n - table.reps[static_cast<std::size_t>(i)]) % n;
        out.mu[static_cast<std::size_t>(i)] = owner[static_cast<std::size_t>(neg)];
    }
    for (int i = 0; i < s; ++i) {
        int j = out.mu[static_cast<std::size_t>(i)];
        if (out.mu[static_cast<std::size_t>(j)] != i) throw Error("mu is not an involution");
        if (table.d[static_cast<std::size_t>(j)] != table.d[static_cast<std::size_t>(i)])
            throw Error("paired cosets differ in size");
    }

    out.special.push_back(0);
    if (n % 2 == 0) {
        int idx = owner[static_cast<std::size_t>(n / 2)];
        if (table.cosets[static_cast<std::size_t>(idx)].size() != 1)
            throw Error("coset of n/2 is not a singleton");
        out.i_sharp = idx;
        out.special.push_back(idx);
    }

    for (int i = 0; i < s; ++i) {
        if (std::find(out.special.begin(), out.special.end(), i) != out.special.end()) continue;
        if (out.mu[static_cast<std::size_t>(i)] == i) {
            if (table.d[static_cast<std::size_t>(i)] % 2 != 0)
                throw Error("self-paired coset has odd size");
            out.fixed.push_back(i);
        } else if (out.mu[static_cast<std::size_t>(i)] > i) {
            out.paired.push_back(i);
        }
    }
    return out;
}

}  // namespace lcdc
