#include "rbd/h2.hpp"

#include <cctype>
#include <sstream>

namespace rbd::h2 {

H2Class::H2Class(std::size_t ambient) : h_(0), e_(ambient, Rational(0)) {}

H2Class::H2Class(std::size_t ambient, Rational h_coeff, std::vector<Rational> e_coeffs)
    : h_(std::move(h_coeff)), e_(std::move(e_coeffs)) {
    if (e_.size() != ambient) throw InputError("e-coefficient count does not match ambient");
}

const Rational& H2Class::e(std::size_t i) const {
    if (i == 0 || i > e_.size()) throw InputError("exceptional index out of range");
    return e_[i - 1];
}

bool H2Class::is_integral() const {
    if (!h_.is_integer()) return false;
    for (const auto& c : e_)
        if (!c.is_integer()) return false;
    return true;
}

bool H2Class::is_zero() const {
    if (!h_.is_zero()) return false;
    for (const auto& c : e_)
        if (!c.is_zero()) return false;
    return true;
}

H2Class H2Class::operator-() const {
    H2Class r = *this;
    r.h_ = -r.h_;
    for (auto& c : r.e_) c = -c;
    return r;
}

namespace {
void require_same_ambient(const H2Class& a, const H2Class& b) {
    if (a.ambient() != b.ambient())
        throw InputError("ambient mismatch: n=" + std::to_string(a.ambient()) +
                         " vs n=" + std::to_string(b.ambient()));
}
}  // namespace

H2Class operator+(const H2Class& a, const H2Class& b) {
    require_same_ambient(a, b);
    H2Class r = a;
    r.h_ += b.h_;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

H2Class operator-(const H2Class& a, const H2Class& b) {
    require_same_ambient(a, b);
    H2Class r = a;
    r.h_ -= b.h_;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
}

H2Class operator*(const Rational& s, const H2Class& x) {
    H2Class r = x;
    r.h_ *= s;
    for (auto& c : r.e_) c *= s;
    return r;
}

bool operator==(const H2Class& a, const H2Class& b) {
    return a.ambient() == b.ambient() && a.h_ == b.h_ && a.e_ == b.e_;
}

std::string H2Class::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, const std::string& sym) {
        if (c.is_zero()) return;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        if (a != Rational(1)) os << a.str();
        os << sym;
        first = false;
    };
    emit(h_, "h");
    for (std::size_t i = 0; i < e_.size(); ++i) emit(e_[i], "e" + std::to_string(i + 1));
    if (first) os << "0";
    return os.str();
}

H2Class H2Class::parse(const std::string& text, std::size_t ambient) {
    H2Class out(ambient);
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw InputError("class syntax error at position " + std::to_string(pos) + ": " + what);
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_uint = [&]() -> unsigned long {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a number");
        unsigned long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + static_cast<unsigned long>(text[pos++] - '0');
        return v;
    };

    skip_ws();
    if (pos == text.size()) fail("empty class literal");
    bool any = false;
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (any) {
            fail("expected '+' or '-'");
        }
        // optional coefficient
        Rational coeff(1);
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            unsigned long num = read_uint();
            Integer n(std::to_string(num));
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                unsigned long den = read_uint();
                coeff = Rational(n, Integer(std::to_string(den)));
            } else {
                coeff = Rational(n);
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') { ++pos; skip_ws(); }
        }
        if (sign < 0) coeff = -coeff;

        if (pos < text.size() && text[pos] == 'h') {
            ++pos;
            out.h_ += coeff;
        } else if (pos < text.size() && text[pos] == 'e') {
            ++pos;
            unsigned long i = read_uint();
            if (i == 0 || i > ambient) fail("exceptional index e" + std::to_string(i) +
                                            " outside ambient n=" + std::to_string(ambient));
            out.e_[i - 1] += coeff;
        } else if (pos < text.size() && text[pos] == '(') {
            // range sugar: (eI..eJ)
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != 'e') fail("expected 'e' in range");
            ++pos;
            unsigned long lo = read_uint();
            skip_ws();
            if (text.compare(pos, 2, "..") != 0) fail("expected '..' in range");
            pos += 2;
            skip_ws();
            if (pos >= text.size() || text[pos] != 'e') fail("expected 'e' in range");
            ++pos;
            unsigned long hi = read_uint();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
            ++pos;
            if (lo == 0 || hi < lo || hi > ambient) fail("bad range bounds");
            for (unsigned long i = lo; i <= hi; ++i) out.e_[i - 1] += coeff;
        } else {
            fail("expected h, eN or a range");
        }
        any = true;
    }
    if (!any) fail("empty class literal");
    return out;
}

Rational pair(const H2Class& x, const H2Class& y) {
    require_same_ambient(x, y);
    Rational total = x.h() * y.h();
    for (std::size_t i = 1; i <= x.ambient(); ++i) total -= x.e(i) * y.e(i);
    return total;
}

H2Class blow_up(const H2Class& x) {
    std::vector<Rational> e;
    e.reserve(x.ambient() + 1);
    for (std::size_t i = 1; i <= x.ambient(); ++i) e.push_back(x.e(i));
    e.push_back(Rational(0));
    return H2Class(x.ambient() + 1, x.h(), std::move(e));
}

H2Class proper_transform(const H2Class& x, long multiplicity) {
    if (multiplicity < 0) throw InputError("negative multiplicity");
    if (x.ambient() == 0) throw InputError("no exceptional class available; blow up first");
    std::vector<Rational> e;
    e.reserve(x.ambient());
    for (std::size_t i = 1; i <= x.ambient(); ++i) e.push_back(x.e(i));
    e.back() -= Rational(multiplicity);
    return H2Class(x.ambient(), x.h(), std::move(e));
}

ExactMatrix gram(const std::vector<H2Class>& classes) {
    ExactMatrix g(classes.size(), classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i; j < classes.size(); ++j) {
            g.at(i, j) = pair(classes[i], classes[j]);
            g.at(j, i) = g.at(i, j);
        }
    return g;
}

bool wu_check(const H2Class& K, long sigma, long chi) {
    return pair(K, K) == Rational(3 * sigma + 2 * chi);
}

H2Class canonical_class(std::size_t n) {
    H2Class k(n, Rational(-3), std::vector<Rational>(n, Rational(1)));
    return k;
}

H2Class fiber_class(std::size_t n) {
    if (n < 9) throw InputError("fiber class needs ambient n >= 9");
    std::vector<Rational> e(n, Rational(0));
    for (std::size_t i = 0; i < 9; ++i) e[i] = Rational(-1);
    return H2Class(n, Rational(3), std::move(e));
}

H2Class basis_h(std::size_t n) { return H2Class(n, Rational(1), std::vector<Rational>(n, Rational(0))); }

H2Class basis_e(std::size_t n, std::size_t i) {
    if (i == 0 || i > n) throw InputError("exceptional index out of range");
    std::vector<Rational> e(n, Rational(0));
    e[i - 1] = Rational(1);
    return H2Class(n, Rational(0), std::move(e));
}

}  // namespace rbd::h2
