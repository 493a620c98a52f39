#include "rbd/rational.hpp"

#include <ostream>

namespace rbd {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (sgn(den) == 0) throw InputError("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw InputError("bad rational literal: " + text);
    }
}

Integer Rational::to_integer() const {
    if (!is_integer()) throw InputError("non-integer rational: " + str());
    return num();
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.sign() < 0) r.v_ = -r.v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace rbd
