#include "lcdc/linalg.hpp"

#include <algorithm>

namespace lcdc {

Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat out(m[0].size(), Row(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
    return out;
}

Mat mat_mul(const FieldCtx& F, const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), m = b[0].size();
    Mat out(n, Row(m, F.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            Elem v = a[i][l];
            if (v == F.zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                out[i][j] = F.add(out[i][j], F.mul(v, b[l][j]));
        }
    return out;
}

Mat rref_of(const FieldCtx& F, Mat m, std::vector<int>* pivots) {
    if (pivots) pivots->clear();
    if (m.empty()) return m;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][c] == F.zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        Elem inv = F.inv(m[r][c]);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = F.mul(m[r][j], inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == F.zero()) continue;
            Elem f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
        }
        if (pivots) pivots->push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return m;
}

int rank_of(const FieldCtx& F, const Mat& m) {
    return static_cast<int>(rref_of(F, m).size());
}

Mat nullspace_of(const FieldCtx& F, const Mat& m, int n_cols) {
    std::vector<int> pivots;
    Mat r = rref_of(F, m, &pivots);
    std::vector<char> is_pivot(static_cast<std::size_t>(n_cols), 0);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
    Mat basis;
    for (int f = 0; f < n_cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Row v(static_cast<std::size_t>(n_cols), F.zero());
        v[static_cast<std::size_t>(f)] = F.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<std::size_t>(pivots[i])] = F.neg(r[i][static_cast<std::size_t>(f)]);
        basis.push_back(std::move(v));
    }
    return basis;
}

Row reduce_row(const FieldCtx& F, const Mat& rref, const std::vector<int>& pivots, Row v) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Elem c = v[static_cast<std::size_t>(pivots[i])];
        if (c == F.zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = F.sub(v[j], F.mul(c, rref[i][j]));
    }
    return v;
}

bool is_zero_row(const Row& v) {
    return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

std::optional<Row> coordinates_in_rowspace(const FieldCtx& F, const Mat& basis, const Row& target) {
    if (basis.empty()) return is_zero_row(target) ? std::optional<Row>(Row{}) : std::nullopt;
    const std::size_t n = target.size(), r = basis.size();
    // Solve basis^T * lambda = target^T via an augmented RREF.
    Mat aug(n, Row(r + 1, F.zero()));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < r; ++i) aug[j][i] = basis[i][j];
        aug[j][r] = target[j];
    }
    std::vector<int> pivots;
    Mat red = rref_of(F, std::move(aug), &pivots);
    Row lambda(r, F.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == static_cast<int>(r)) return std::nullopt;  // inconsistent
        lambda[static_cast<std::size_t>(pivots[i])] = red[i][r];
    }
    return lambda;
}

int intersection_dim(const FieldCtx& F, const Mat& a, const Mat& b) {
    Mat stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    return rank_of(F, a) + rank_of(F, b) - rank_of(F, stacked);
}

BigInt subspace_count(const BigInt& Q, int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= big_pow(Q, static_cast<unsigned long long>(n)) - big_pow(Q, static_cast<unsigned long long>(i));
        den *= big_pow(Q, static_cast<unsigned long long>(k)) - big_pow(Q, static_cast<unsigned long long>(i));
    }
    BigInt quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) throw Error("subspace_count: non-exact division");
    return quot;
}

bool for_each_subspace_until(const FieldCtx& F, int n, int k,
                             const std::function<bool(const Mat&)>& fn) {
    if (k < 0 || k > n) return false;
    if (k == 0) return !fn(Mat{});
    std::vector<int> piv(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;

    const std::uint64_t qs = F.size();
    while (true) {
        // Free positions: (row i, col j) with j > piv[i] and j not a pivot.
        std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
        for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = 1;
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < k; ++i)
            for (int j = piv[static_cast<std::size_t>(i)] + 1; j < n; ++j)
                if (!is_pivot[static_cast<std::size_t>(j)]) free_pos.emplace_back(i, j);

        Mat m(static_cast<std::size_t>(k), Row(static_cast<std::size_t>(n), F.zero()));
        for (int i = 0; i < k; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = F.one();

        std::vector<std::uint64_t> odo(free_pos.size(), 0);
        while (true) {
            if (!fn(m)) return true;
            std::size_t d = 0;
            while (d < odo.size()) {
                if (++odo[d] < qs) break;
                odo[d] = 0;
                ++d;
            }
            if (d == odo.size()) break;
            for (std::size_t i = 0; i <= d && i < odo.size(); ++i) {
                auto [ri, cj] = free_pos[i];
                m[static_cast<std::size_t>(ri)][static_cast<std::size_t>(cj)] = static_cast<Elem>(odo[i]);
            }
        }

        // Next pivot combination in lexicographic order.
        int i = k - 1;
        while (i >= 0 && piv[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++piv[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
    }
    return false;
}

void for_each_subspace(const FieldCtx& F, int n, int k,
                       const std::function<void(const Mat&)>& fn) {
    for_each_subspace_until(F, n, k, [&](const Mat& m) {
        fn(m);
        return true;
    });
}

}  // namespace lcdc
