#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#include "platbook/errors.hpp"

namespace platbook {

// Exact 64-bit arithmetic: anything that would wrap raises errc::overflow
// instead.  All framing and matrix bookkeeping goes through these.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in addition");
    return r;
}
inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in subtraction");
    return r;
}
inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in multiplication");
    return r;
}
inline long long checked_neg(long long a) { return checked_sub(0, a); }
inline long long checked_abs(long long a) { return a < 0 ? checked_neg(a) : a; }

// Dense row-major integer matrix.  Sized for linking matrices and their
// unimodular transforms: tens of rows, small entries.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    static IntMatrix identity(int k) {
        IntMatrix m(k, k);
        for (int i = 0; i < k; ++i) m.at(i, i) = 1;
        return m;
    }

    long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    IntMatrix multiply(const IntMatrix& o) const {
        if (cols != o.rows) fail(errc::overflow, "matrix shape mismatch in multiply");
        IntMatrix out(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                long long v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols; ++j)
                    out.at(i, j) = checked_add(out.at(i, j), checked_mul(v, o.at(k, j)));
            }
        return out;
    }

    IntMatrix transposed() const {
        IntMatrix out(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < rows; ++i) {
            s += i == 0 ? "[" : " ";
            for (int j = 0; j < cols; ++j) {
                s += std::to_string(at(i, j));
                if (j + 1 < cols) s += " ";
            }
            s += i + 1 < rows ? "\n" : "]";
        }
        return s;
    }
};

// Fraction-free elimination (Bareiss): exact integer determinant, every
// intermediate value a minor of the input, all products overflow-checked.
inline long long bareiss_determinant(IntMatrix m) {
    if (m.rows != m.cols) fail(errc::overflow, "determinant of non-square matrix");
    const int n = m.rows;
    if (n == 0) return 1;
    long long sign = 1;
    long long prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int sw = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    sw = i;
                    break;
                }
            if (sw < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(sw, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = checked_sub(checked_mul(m.at(i, j), m.at(k, k)),
                                         checked_mul(m.at(i, k), m.at(k, j))) /
                             prev;
        prev = m.at(k, k);
    }
    return checked_mul(sign, m.at(n - 1, n - 1));
}

} // namespace platbook
