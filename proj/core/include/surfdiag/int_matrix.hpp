#pragma once
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace surfdiag {

/// Overflow-checked 64-bit integer arithmetic; all invariants are algebraic
/// identities, so a silent wrap is never acceptable.
struct OverflowError : std::overflow_error {
    OverflowError() : std::overflow_error("integer overflow in exact arithmetic") {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}

struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> a;

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static IntegerMatrix identity(int n) {
        IntegerMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntegerMatrix operator*(const IntegerMatrix& o) const {
        if (cols != o.rows) throw std::invalid_argument("matrix dimension mismatch");
        IntegerMatrix r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                std::int64_t aik = at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < o.cols; ++j)
                    r.at(i, j) = checked_add(r.at(i, j), checked_mul(aik, o.at(k, j)));
            }
        return r;
    }

    bool operator==(const IntegerMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

struct SmithResult {
    IntegerMatrix s;  // diagonal, divisibility chain, nonnegative
    IntegerMatrix u;  // unimodular row transform
    IntegerMatrix v;  // unimodular column transform: u * m * v == s
};

/// Diagonalizes m by unimodular row and column operations.
SmithResult smith_normal_form(const IntegerMatrix& m);

/// Fraction-free determinant (Bareiss); used to verify unimodularity.
std::int64_t determinant(const IntegerMatrix& m);

}  // namespace surfdiag
