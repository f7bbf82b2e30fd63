#include "platbook/snf.hpp"

#include <algorithm>
#include <utility>

namespace platbook {

namespace {

// Work matrix plus the two transforms, kept in sync: every row operation on d
// is mirrored into left, every column operation into right, so
// left * original * right == d stays true after each step.
struct Work {
    IntMatrix d, left, right;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < left.cols; ++c) std::swap(left.at(i, c), left.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < right.rows; ++r) std::swap(right.at(r, i), right.at(r, j));
    }
    // row dst += q * row src
    void add_row(int dst, int src, long long q) {
        for (int c = 0; c < d.cols; ++c)
            d.at(dst, c) = checked_add(d.at(dst, c), checked_mul(q, d.at(src, c)));
        for (int c = 0; c < left.cols; ++c)
            left.at(dst, c) = checked_add(left.at(dst, c), checked_mul(q, left.at(src, c)));
    }
    // col dst += q * col src
    void add_col(int dst, int src, long long q) {
        for (int r = 0; r < d.rows; ++r)
            d.at(r, dst) = checked_add(d.at(r, dst), checked_mul(q, d.at(r, src)));
        for (int r = 0; r < right.rows; ++r)
            right.at(r, dst) = checked_add(right.at(r, dst), checked_mul(q, right.at(r, src)));
    }
    void negate_row(int i) {
        for (int c = 0; c < d.cols; ++c) d.at(i, c) = checked_neg(d.at(i, c));
        for (int c = 0; c < left.cols; ++c) left.at(i, c) = checked_neg(left.at(i, c));
    }
};

} // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    Work w{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
    const int lim = std::min(m.rows, m.cols);

    for (int t = 0; t < lim; ++t) {
        // smallest nonzero entry of the trailing submatrix becomes the pivot
        int pi = -1, pj = -1;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j)
                if (w.d.at(i, j) != 0 &&
                    (pi < 0 || checked_abs(w.d.at(i, j)) < checked_abs(w.d.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break; // trailing submatrix is zero; done
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        // Euclid until the pivot clears its row and column and divides the
        // rest of the submatrix.  Every restart swaps a strictly smaller
        // remainder into the pivot slot, so this terminates.
        for (;;) {
            bool restart = false;
            for (int i = t + 1; i < m.rows && !restart; ++i) {
                if (w.d.at(i, t) == 0) continue;
                const long long q = w.d.at(i, t) / w.d.at(t, t);
                if (q != 0) w.add_row(i, t, checked_neg(q));
                if (w.d.at(i, t) != 0) {
                    w.swap_rows(t, i);
                    restart = true;
                }
            }
            if (restart) continue;
            for (int j = t + 1; j < m.cols && !restart; ++j) {
                if (w.d.at(t, j) == 0) continue;
                const long long q = w.d.at(t, j) / w.d.at(t, t);
                if (q != 0) w.add_col(j, t, checked_neg(q));
                if (w.d.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    restart = true;
                }
            }
            if (restart) continue;
            int bi = -1;
            for (int i = t + 1; i < m.rows && bi < 0; ++i)
                for (int j = t + 1; j < m.cols; ++j)
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            // fold the offending row into row t; the next Euclid pass shrinks
            // the pivot below the non-divisible entry
            w.add_row(t, bi, 1);
        }
        if (w.d.at(t, t) < 0) w.negate_row(t);
    }
    return SnfResult{std::move(w.d), std::move(w.left), std::move(w.right)};
}

std::vector<long long> SnfResult::factors() const {
    const int k = std::min(diagonal.rows, diagonal.cols);
    std::vector<long long> f;
    f.reserve(k);
    for (int i = 0; i < k; ++i) f.push_back(diagonal.at(i, i));
    return f;
}

bool certificate_ok(const IntMatrix& original, const SnfResult& r) {
    if (r.left.rows != original.rows || r.left.cols != original.rows) return false;
    if (r.right.rows != original.cols || r.right.cols != original.cols) return false;
    if (r.diagonal.rows != original.rows || r.diagonal.cols != original.cols) return false;
    if (!(r.left.multiply(original).multiply(r.right) == r.diagonal)) return false;
    if (checked_abs(bareiss_determinant(r.left)) != 1) return false;
    if (checked_abs(bareiss_determinant(r.right)) != 1) return false;
    for (int i = 0; i < r.diagonal.rows; ++i)
        for (int j = 0; j < r.diagonal.cols; ++j)
            if (i != j && r.diagonal.at(i, j) != 0) return false;
    const int k = std::min(r.diagonal.rows, r.diagonal.cols);
    for (int i = 0; i < k; ++i) {
        const long long di = r.diagonal.at(i, i);
        if (di < 0) return false;
        if (i + 1 < k) {
            const long long dn = r.diagonal.at(i + 1, i + 1);
            if (di == 0 && dn != 0) return false;
            if (di != 0 && dn % di != 0) return false;
        }
    }
    return true;
}

} // namespace platbook
