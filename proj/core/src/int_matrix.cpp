#include "surfdiag/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace surfdiag {

namespace {

void swap_rows(IntegerMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntegerMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row[a] -= q * row[b]
void row_sub(IntegerMatrix& m, int a, int b, std::int64_t q) {
    if (q == 0) return;
    for (int j = 0; j < m.cols; ++j)
        m.at(a, j) = checked_sub(m.at(a, j), checked_mul(q, m.at(b, j)));
}
void col_sub(IntegerMatrix& m, int a, int b, std::int64_t q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows; ++i)
        m.at(i, a) = checked_sub(m.at(i, a), checked_mul(q, m.at(i, b)));
}
void negate_row(IntegerMatrix& m, int a) {
    for (int j = 0; j < m.cols; ++j) m.at(a, j) = checked_sub(0, m.at(a, j));
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m) {
    SmithResult res{m, IntegerMatrix::identity(m.rows), IntegerMatrix::identity(m.cols)};
    IntegerMatrix& s = res.s;
    const int n = std::min(m.rows, m.cols);

    for (int t = 0; t < n; ++t) {
        // find the smallest nonzero entry in the lower-right block
        int pr = -1, pc = -1;
        for (int i = t; i < s.rows; ++i)
            for (int j = t; j < s.cols; ++j) {
                if (s.at(i, j) == 0) continue;
                if (pr < 0 || std::llabs(s.at(i, j)) < std::llabs(s.at(pr, pc))) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        swap_rows(s, t, pr);
        swap_rows(res.u, t, pr);
        swap_cols(s, t, pc);
        swap_cols(res.v, t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < s.rows; ++i) {
                if (s.at(i, t) == 0) continue;
                std::int64_t q = s.at(i, t) / s.at(t, t);
                row_sub(s, i, t, q);
                row_sub(res.u, i, t, q);
                if (s.at(i, t) != 0) {  // remainder smaller than the pivot
                    swap_rows(s, t, i);
                    swap_rows(res.u, t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < s.cols; ++j) {
                if (s.at(t, j) == 0) continue;
                std::int64_t q = s.at(t, j) / s.at(t, t);
                col_sub(s, j, t, q);
                col_sub(res.v, j, t, q);
                if (s.at(t, j) != 0) {
                    swap_cols(s, t, j);
                    swap_cols(res.v, t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // enforce divisibility of the remaining block by the pivot
            for (int i = t + 1; i < s.rows && clean; ++i)
                for (int j = t + 1; j < s.cols && clean; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        // fold the offending row into row t and restart
                        row_sub(s, t, i, -1);
                        row_sub(res.u, t, i, -1);
                        clean = false;
                    }
        }
        if (s.at(t, t) < 0) {
            negate_row(s, t);
            negate_row(res.u, t);
        }
    }
    return res;
}

std::int64_t determinant(const IntegerMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of a nonsquare matrix");
    const int n = m.rows;
    if (n == 0) return 1;
    IntegerMatrix a = m;
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (a.at(t, t) == 0) {
            int p = -1;
            for (int i = t + 1; i < n; ++i)
                if (a.at(i, t) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            swap_rows(a, t, p);
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j) {
                std::int64_t num = checked_sub(checked_mul(a.at(i, j), a.at(t, t)),
                                               checked_mul(a.at(i, t), a.at(t, j)));
                a.at(i, j) = num / prev;  // Bareiss: division is exact
            }
        prev = a.at(t, t);
    }
    return checked_mul(sign, a.at(n - 1, n - 1));
}

}  // namespace surfdiag
