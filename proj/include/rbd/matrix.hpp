#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "rbd/rational.hpp"

namespace rbd {

// Dense matrix over the exact rationals. Integer matrices are the special
// case where every entry has denominator 1.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix diagonal(const std::vector<Rational>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_integer() const;
    bool is_symmetric() const;
    bool is_zero() const;

    ExactMatrix transpose() const;
    ExactMatrix operator-() const;
    ExactMatrix direct_sum(const ExactMatrix& other) const;

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const Rational& s, const ExactMatrix& m);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

    // Exact determinant: Bareiss fraction-free elimination when all entries
    // are integers, plain rational elimination otherwise.
    Rational determinant() const;

    // Exact inverse; throws InputError on non-square or singular input.
    ExactMatrix inverse() const;

    std::string str() const;

    // JSON wire format: array of arrays whose entries are integers or
    // strings "p/q". Named built-ins are resolved by the CLI, not here.
    static ExactMatrix from_json_text(const std::string& text);
    std::string to_json_text() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

}  // namespace rbd
