#pragma once

#include <string>
#include <vector>

#include "rbd/matrix.hpp"

namespace rbd::h2 {

// Second homology of CP^2 # n CP^2-bar in the basis {h, e_1..e_n}.
// Classes carry their ambient n explicitly; operations on classes from
// different ambients are rejected rather than silently lifted.
class H2Class {
public:
    H2Class() : h_(0) {}  // zero class of the unblown ambient
    explicit H2Class(std::size_t ambient);
    H2Class(std::size_t ambient, Rational h_coeff, std::vector<Rational> e_coeffs);

    // Literal grammar: `3h - e1 - 2e10`, range sugar `12h - 4(e1..e9)`,
    // rational coefficients like `1/2 h` allowed.
    static H2Class parse(const std::string& text, std::size_t ambient);

    std::size_t ambient() const { return e_.size(); }
    const Rational& h() const { return h_; }
    const Rational& e(std::size_t i) const;  // 1-based, matching e_i

    bool is_integral() const;
    bool is_zero() const;

    H2Class operator-() const;
    friend H2Class operator+(const H2Class& a, const H2Class& b);
    friend H2Class operator-(const H2Class& a, const H2Class& b);
    friend H2Class operator*(const Rational& s, const H2Class& x);
    friend bool operator==(const H2Class& a, const H2Class& b);

    std::string str() const;

private:
    Rational h_;
    std::vector<Rational> e_;
};

// x . y = x_h y_h - sum_i x_i y_i
Rational pair(const H2Class& x, const H2Class& y);

// Same class in ambient n+1, new e-coefficient 0; preserves all pairings.
H2Class blow_up(const H2Class& x);

// x - m * e_new, where e_new is the latest exceptional class.
H2Class proper_transform(const H2Class& x, long multiplicity);

ExactMatrix gram(const std::vector<H2Class>& classes);

// K^2 = 3 sigma + 2 chi
bool wu_check(const H2Class& K, long sigma, long chi);

// -3h + e_1 + ... + e_n
H2Class canonical_class(std::size_t n);
// 3h - e_1 - ... - e_9 in ambient n >= 9
H2Class fiber_class(std::size_t n);

H2Class basis_h(std::size_t n);
H2Class basis_e(std::size_t n, std::size_t i);

}  // namespace rbd::h2
