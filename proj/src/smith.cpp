#include "rbd/smith.hpp"

namespace rbd {

namespace {

struct Grid {
    std::size_t rows, cols;
    std::vector<Integer> a;

    Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }

    void swap_rows(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
    }
    void swap_cols(std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, j), at(i, k));
    }
    // row i -= q * row k
    void row_sub(std::size_t i, std::size_t k, const Integer& q) {
        for (std::size_t j = 0; j < cols; ++j) at(i, j) -= q * at(k, j);
    }
    void col_sub(std::size_t j, std::size_t k, const Integer& q) {
        for (std::size_t i = 0; i < rows; ++i) at(i, j) -= q * at(i, k);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols; ++j) at(i, j) = -at(i, j);
    }
};

ExactMatrix to_matrix(const Grid& g) {
    ExactMatrix m(g.rows, g.cols);
    for (std::size_t i = 0; i < g.rows; ++i)
        for (std::size_t j = 0; j < g.cols; ++j) m.at(i, j) = g.a[i * g.cols + j];
    return m;
}

}  // namespace

ExactMatrix SmithDecomposition::diagonal(std::size_t rows, std::size_t cols) const {
    ExactMatrix d(rows, cols);
    for (std::size_t i = 0; i < invariant_factors.size(); ++i)
        d.at(i, i) = invariant_factors[i];
    return d;
}

SmithDecomposition smith_normal_form(const ExactMatrix& m) {
    if (!m.is_integer()) throw InputError("Smith normal form requires integer entries");
    const std::size_t r = m.rows(), c = m.cols();

    Grid a{r, c, std::vector<Integer>(r * c)};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a.at(i, j) = m.at(i, j).to_integer();
    Grid left{r, r, std::vector<Integer>(r * r)};
    Grid right{c, c, std::vector<Integer>(c * c)};
    for (std::size_t i = 0; i < r; ++i) left.at(i, i) = 1;
    for (std::size_t j = 0; j < c; ++j) right.at(j, j) = 1;

    const std::size_t steps = std::min(r, c);
    std::size_t s = 0;
    for (; s < steps; ++s) {
        // Pivot: smallest nonzero absolute value in the trailing block,
        // row-major tie break.
        std::size_t pi = s, pj = s;
        Integer best = 0;
        for (std::size_t i = s; i < r; ++i)
            for (std::size_t j = s; j < c; ++j) {
                const Integer& x = a.at(i, j);
                if (sgn(x) == 0) continue;
                Integer ax = ::abs(x);
                if (sgn(best) == 0 || ax < best) {
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        if (sgn(best) == 0) break;

        for (;;) {
            if (pi != s) { a.swap_rows(s, pi); left.swap_rows(s, pi); }
            if (pj != s) { a.swap_cols(s, pj); right.swap_cols(s, pj); }

            bool rerun = false;
            for (std::size_t i = s + 1; i < r; ++i) {
                if (sgn(a.at(i, s)) == 0) continue;
                Integer q = a.at(i, s) / a.at(s, s);  // truncated
                a.row_sub(i, s, q);
                left.row_sub(i, s, q);
                if (sgn(a.at(i, s)) != 0) rerun = true;
            }
            for (std::size_t j = s + 1; j < c; ++j) {
                if (sgn(a.at(s, j)) == 0) continue;
                Integer q = a.at(s, j) / a.at(s, s);
                a.col_sub(j, s, q);
                right.col_sub(j, s, q);
                if (sgn(a.at(s, j)) != 0) rerun = true;
            }
            if (rerun) {
                // Remainders became new, strictly smaller candidates.
                pi = s;
                pj = s;
                Integer b2 = 0;
                for (std::size_t i = s; i < r; ++i)
                    for (std::size_t j = s; j < c; ++j) {
                        const Integer& x = a.at(i, j);
                        if (sgn(x) == 0) continue;
                        Integer ax = ::abs(x);
                        if (sgn(b2) == 0 || ax < b2) { b2 = ax; pi = i; pj = j; }
                    }
                continue;
            }

            // Divisibility of the trailing block by the pivot.
            bool fixed = false;
            for (std::size_t i = s + 1; i < r && !fixed; ++i)
                for (std::size_t j = s + 1; j < c && !fixed; ++j)
                    if (sgn(a.at(i, j) % a.at(s, s)) != 0) {
                        // Fold row i into row s and restart the reduction.
                        for (std::size_t k = 0; k < c; ++k) a.at(s, k) += a.at(i, k);
                        for (std::size_t k = 0; k < r; ++k) left.at(s, k) += left.at(i, k);
                        fixed = true;
                    }
            if (!fixed) break;
            pi = s;
            pj = s;
        }

        if (sgn(a.at(s, s)) < 0) {
            a.negate_row(s);
            left.negate_row(s);
        }
    }

    SmithDecomposition d;
    for (std::size_t i = 0; i < s; ++i) d.invariant_factors.push_back(a.at(i, i));
    d.free_rank = r - d.invariant_factors.size();
    d.left = to_matrix(left);
    d.right = to_matrix(right);
    return d;
}

}  // namespace rbd
