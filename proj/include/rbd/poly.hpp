#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbd/rational.hpp"

namespace rbd {

// Monomial: variable -> exponent, zero exponents never stored.
using Monomial = std::map<char, unsigned>;

// Lexicographic order on exponent tuples over 'a'..'z', highest term first.
struct MonoLexDesc {
    bool operator()(const Monomial& x, const Monomial& y) const;
};

// Sparse multivariate polynomial over the exact rationals.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonoLexDesc>;

    MPoly() = default;
    explicit MPoly(const Rational& c);
    static MPoly constant(const Rational& c) { return MPoly(c); }
    static MPoly variable(char v);

    // Expression grammar: + - * / ^ with parentheses; variables a..z;
    // rational number literals; '/' requires a nonzero constant divisor;
    // exponents are non-negative integers. Errors carry the position.
    static MPoly parse(const std::string& text);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;

    std::vector<char> variables() const;
    long degree(char v) const;       // -1 for the zero polynomial
    long total_degree() const;       // -1 for the zero polynomial
    bool is_homogeneous() const;
    // True when at most one variable occurs; reports it via out (0 if none).
    bool is_univariate(char* var_out = nullptr) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const Rational& s, const MPoly& p);
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    MPoly pow(unsigned n) const;
    MPoly derivative(char v) const;
    MPoly substitute(char v, const MPoly& value) const;
    Rational evaluate(const std::map<char, Rational>& point) const;

    // Coefficients of v^0, v^1, ... as polynomials in the other variables.
    std::vector<MPoly> coefficients_in(char v) const;
    // Dense coefficient list for a univariate polynomial in v.
    std::vector<Rational> univariate_coeffs(char v) const;
    // Sum of the terms of total degree d.
    MPoly homogeneous_component(long d) const;

    const TermMap& terms() const { return terms_; }
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    TermMap terms_;
};

// Sylvester resultant eliminating var. Inputs must be nonzero; if neither
// input involves var the call is rejected.
MPoly resultant(const MPoly& f, const MPoly& g, char var);

// Exact division; nullopt when g does not divide f.
std::optional<MPoly> try_divide(const MPoly& f, const MPoly& g);

// Univariate gcd over Q, returned with primitive integer coefficients and a
// positive leading coefficient.
MPoly gcd_univariate(const MPoly& f, const MPoly& g, char v);

// Product of the distinct irreducible factors of a univariate polynomial,
// normalized like gcd_univariate. Degree = number of distinct complex roots.
MPoly squarefree_part(const MPoly& f);

// All rational roots, ascending, verified by exact substitution.
std::vector<Rational> rational_roots(const MPoly& f);

}  // namespace rbd
