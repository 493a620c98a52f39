#include "rbd/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace rbd {

bool MonoLexDesc::operator()(const Monomial& x, const Monomial& y) const {
    for (char v = 'a'; v <= 'z'; ++v) {
        auto ix = x.find(v), iy = y.find(v);
        unsigned ex = ix == x.end() ? 0 : ix->second;
        unsigned ey = iy == y.end() ? 0 : iy->second;
        if (ex != ey) return ex > ey;
    }
    return false;
}

MPoly::MPoly(const Rational& c) {
    if (!c.is_zero()) terms_[Monomial{}] = c;
}

MPoly MPoly::variable(char v) {
    MPoly p;
    p.terms_[Monomial{{v, 1}}] = Rational(1);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw InputError("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

std::vector<char> MPoly::variables() const {
    std::set<char> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) vs.insert(v);
    return {vs.begin(), vs.end()};
}

long MPoly::degree(char v) const {
    long d = -1;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(v);
        long e = it == m.end() ? 0 : static_cast<long>(it->second);
        d = std::max(d, e);
    }
    return d;
}

long MPoly::total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) {
        long e = 0;
        for (const auto& [v, ex] : m) e += ex;
        d = std::max(d, e);
    }
    return d;
}

bool MPoly::is_homogeneous() const {
    long d = -1;
    for (const auto& [m, c] : terms_) {
        long e = 0;
        for (const auto& [v, ex] : m) e += ex;
        if (d == -1) d = e;
        else if (d != e) return false;
    }
    return true;
}

bool MPoly::is_univariate(char* var_out) const {
    auto vs = variables();
    if (var_out) *var_out = vs.empty() ? 0 : vs.front();
    return vs.size() <= 1;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            r.add_term(m, ca * cb);
        }
    return r;
}

MPoly operator*(const Rational& s, const MPoly& p) {
    if (s.is_zero()) return MPoly();
    MPoly r = p;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
}

MPoly MPoly::pow(unsigned n) const {
    MPoly r(Rational(1));
    MPoly base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

MPoly MPoly::derivative(char v) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(v);
        if (it == m.end()) continue;
        unsigned e = it->second;
        Monomial dm = m;
        if (e == 1) dm.erase(v);
        else dm[v] = e - 1;
        r.add_term(dm, c * Rational(static_cast<long>(e)));
    }
    return r;
}

MPoly MPoly::substitute(char v, const MPoly& value) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(v);
        if (it == m.end()) {
            r.add_term(m, c);
            continue;
        }
        Monomial rest = m;
        rest.erase(v);
        MPoly part;
        part.add_term(rest, c);
        r += part * value.pow(it->second);
    }
    return r;
}

Rational MPoly::evaluate(const std::map<char, Rational>& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m) {
            auto it = point.find(v);
            if (it == point.end()) throw InputError(std::string("unbound variable ") + v);
            for (unsigned k = 0; k < e; ++k) t *= it->second;
        }
        total += t;
    }
    return total;
}

std::vector<MPoly> MPoly::coefficients_in(char v) const {
    long d = degree(v);
    std::vector<MPoly> out(static_cast<std::size_t>(d + 1));
    for (const auto& [m, c] : terms_) {
        auto it = m.find(v);
        unsigned e = it == m.end() ? 0 : it->second;
        Monomial rest = m;
        rest.erase(v);
        out[e].add_term(rest, c);
    }
    return out;
}

std::vector<Rational> MPoly::univariate_coeffs(char v) const {
    char actual = 0;
    if (!is_univariate(&actual) || (actual != 0 && actual != v))
        throw InputError("polynomial is not univariate in the requested variable");
    auto cs = coefficients_in(v);
    std::vector<Rational> out;
    out.reserve(cs.size());
    for (auto& p : cs) out.push_back(p.constant_value());
    return out;
}

MPoly MPoly::homogeneous_component(long d) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
        long e = 0;
        for (const auto& [v, ex] : m) e += ex;
        if (e == d) r.add_term(m, c);
    }
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        bool coeff_shown = m.empty() || a != Rational(1);
        if (coeff_shown) os << a.str();
        bool need_star = coeff_shown;
        for (const auto& [v, e] : m) {
            if (need_star) os << "*";
            os << v;
            if (e > 1) os << "^" << e;
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

// --- parser ---------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    MPoly run() {
        MPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("polynomial syntax error at position " + std::to_string(pos_) +
                         ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    MPoly expr() {
        MPoly p = term();
        for (;;) {
            if (eat('+')) p += term();
            else if (eat('-')) p -= term();
            else return p;
        }
    }

    MPoly term() {
        MPoly p = unary();
        for (;;) {
            if (eat('*')) {
                p = p * unary();
            } else if (eat('/')) {
                MPoly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("divisor must be a nonzero constant");
                p = (Rational(1) / d.constant_value()) * p;
            } else {
                return p;
            }
        }
    }

    MPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    MPoly power() {
        MPoly base = primary();
        while (eat('^')) {
            skip_ws();
            bool neg = false;
            if (pos_ < s_.size() && s_[pos_] == '-') { neg = true; ++pos_; }
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected exponent");
            unsigned long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                e = e * 10 + static_cast<unsigned long>(s_[pos_++] - '0');
            if (neg) fail("negative exponents are not polynomial");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    MPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return MPoly::constant(Rational(Integer(digits)));
        }
        if (c >= 'a' && c <= 'z') {
            ++pos_;
            return MPoly::variable(c);
        }
        fail(pos_ >= s_.size() ? "unexpected end of input" : "unexpected character");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

MPoly MPoly::parse(const std::string& text) { return Parser(text).run(); }

// --- resultant and univariate machinery ------------------------------------

std::optional<MPoly> try_divide(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) return std::nullopt;
    MPoly rem = f, q;
    const auto& glead = *g.terms().begin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().begin();
        // leading-term division in the global lex order
        Monomial qm;
        bool divides = true;
        Monomial rm = rlead.first;
        for (const auto& [v, e] : glead.first) {
            auto it = rm.find(v);
            if (it == rm.end() || it->second < e) { divides = false; break; }
        }
        if (!divides) return std::nullopt;
        qm = rlead.first;
        for (const auto& [v, e] : glead.first) {
            qm[v] -= e;
            if (qm[v] == 0) qm.erase(v);
        }
        MPoly qt;
        qt += Rational(rlead.second / glead.second) * [&] {
            MPoly mono(Rational(1));
            for (const auto& [v, e] : qm) mono = mono * MPoly::variable(v).pow(e);
            return mono;
        }();
        q += qt;
        rem -= qt * g;
    }
    return q;
}

namespace {

// Bareiss determinant over the polynomial ring; divisions are exact.
MPoly poly_determinant(std::vector<std::vector<MPoly>> a) {
    const std::size_t n = a.size();
    if (n == 0) return MPoly(Rational(1));
    MPoly prev(Rational(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return MPoly();
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto d = try_divide(num, prev);
                if (!d) throw Error("internal: Bareiss division not exact");
                a[i][j] = *d;
            }
            a[i][k] = MPoly();
        }
        prev = a[k][k];
    }
    MPoly det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Primitive integer normalization with positive leading coefficient in v.
MPoly normalize_primitive(const MPoly& f, char v) {
    if (f.is_zero()) return f;
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& [m, c] : f.terms()) {
        den_lcm = lcm(den_lcm, c.den());
        num_gcd = gcd(num_gcd, c.num());
    }
    MPoly out = Rational(den_lcm, num_gcd) * f;
    long d = out.degree(v);
    auto cs = out.coefficients_in(v);
    if (d >= 0 && cs[static_cast<std::size_t>(d)].constant_value().sign() < 0) out = -out;
    return out;
}

}  // namespace

MPoly resultant(const MPoly& f, const MPoly& g, char var) {
    if (f.is_zero() || g.is_zero()) throw InputError("resultant of zero polynomial");
    long n = f.degree(var), m = g.degree(var);
    if (n < 0 || m < 0) throw InputError("resultant variable out of range");
    if (n == 0 && m == 0)
        throw InputError(std::string("neither input involves variable ") + var);
    if (n == 0) return f.pow(static_cast<unsigned>(m));
    if (m == 0) return g.pow(static_cast<unsigned>(n));

    auto fc = f.coefficients_in(var);
    auto gc = g.coefficients_in(var);
    const std::size_t size = static_cast<std::size_t>(n + m);
    std::vector<std::vector<MPoly>> syl(size, std::vector<MPoly>(size));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j)
            syl[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
                fc[static_cast<std::size_t>(n - j)];
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j)
            syl[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(i + j)] =
                gc[static_cast<std::size_t>(m - j)];
    return poly_determinant(std::move(syl));
}

MPoly gcd_univariate(const MPoly& f, const MPoly& g, char v) {
    char vf = 0, vg = 0;
    if (!f.is_univariate(&vf) || !g.is_univariate(&vg) || (vf && vf != v) || (vg && vg != v))
        throw InputError("gcd requires univariate inputs in the same variable");
    MPoly a = f, b = g;
    while (!b.is_zero()) {
        // monic Euclid step
        auto bc = b.univariate_coeffs(v);
        Rational lead = bc.back();
        MPoly bm = (Rational(1) / lead) * b;
        MPoly r = a;
        for (;;) {
            long dr = r.degree(v), db = bm.degree(v);
            if (r.is_zero() || dr < db) break;
            auto rc = r.univariate_coeffs(v);
            MPoly shift = MPoly::variable(v).pow(static_cast<unsigned>(dr - db));
            r -= rc.back() * (shift * bm);
        }
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return normalize_primitive(a, v);
}

MPoly squarefree_part(const MPoly& f) {
    char v = 0;
    if (!f.is_univariate(&v)) throw InputError("squarefree_part requires a univariate polynomial");
    if (f.is_zero()) throw InputError("squarefree_part of the zero polynomial");
    if (v == 0) return MPoly(Rational(1));  // nonzero constant: no roots
    MPoly g = gcd_univariate(f, f.derivative(v), v);
    auto q = try_divide(f, g);
    if (!q) throw Error("internal: gcd does not divide");
    return normalize_primitive(*q, v);
}

namespace {

// Trial factorization up to the bound; the unfactored cofactor is returned.
std::pair<std::vector<std::pair<Integer, unsigned>>, Integer> trial_factor(Integer n,
                                                                           unsigned long bound) {
    std::vector<std::pair<Integer, unsigned>> primes;
    n = ::abs(n);
    for (Integer d = 2; d <= bound && d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) { n /= d; ++e; }
        primes.emplace_back(d, e);
    }
    return {std::move(primes), n};
}

std::vector<Integer> divisors_from(const std::vector<std::pair<Integer, unsigned>>& primes) {
    std::vector<Integer> ds{Integer(1)};
    for (const auto& [p, e] : primes) {
        std::size_t base = ds.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    return ds;
}

long mod_reduce(const Integer& x, long p) {
    Integer r = x % p;
    long v = static_cast<long>(r.get_si());
    return v < 0 ? v + p : v;
}

long mod_pow(long b, long e, long p) {
    long r = 1 % p;
    while (e) {
        if (e & 1) r = static_cast<long>((static_cast<__int128>(r) * b) % p);
        b = static_cast<long>((static_cast<__int128>(b) * b) % p);
        e >>= 1;
    }
    return r;
}

std::vector<long> gfp_trim(std::vector<long> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<long> gfp_rem(std::vector<long> a, const std::vector<long>& b, long p) {
    long inv_lead = mod_pow(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        long f = static_cast<long>((static_cast<__int128>(a.back()) * inv_lead) % p);
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            __int128 t = a[off + i] - static_cast<__int128>(f) * b[i] % p;
            a[off + i] = static_cast<long>(((t % p) + p) % p);
        }
        a = gfp_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

bool squarefree_mod_p(const std::vector<Integer>& cs, long p) {
    std::vector<long> a, d;
    for (const auto& c : cs) a.push_back(mod_reduce(c, p));
    a = gfp_trim(std::move(a));
    if (a.size() != cs.size()) return false;  // degree dropped mod p
    for (std::size_t i = 1; i < a.size(); ++i)
        d.push_back(static_cast<long>((static_cast<__int128>(a[i]) * (i % p)) % p));
    d = gfp_trim(std::move(d));
    if (d.empty()) return false;
    while (!d.empty()) {
        auto r = gfp_rem(a, d, p);
        a = std::move(d);
        d = std::move(r);
    }
    return a.size() == 1;  // gcd constant
}

// Complete rational-root search for large coefficients: roots mod p, a
// quadratic Hensel lift, then rational reconstruction, each candidate
// verified exactly over Q afterwards.
std::set<Rational> modular_root_candidates(const std::vector<Integer>& cs, char /*v*/) {
    const Integer N = ::abs(cs.front());  // numerator bound
    const Integer D = ::abs(cs.back());   // denominator bound

    long p = 10007;
    for (;;) {
        Integer pz(p);
        if (sgn(cs.back() % pz) != 0 && squarefree_mod_p(cs, p)) break;
        mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
        p = static_cast<long>(pz.get_si());
    }

    std::vector<long> a;
    for (const auto& c : cs) a.push_back(mod_reduce(c, p));
    std::vector<long> roots_p;
    for (long r = 0; r < p; ++r) {
        __int128 acc = 0;
        for (std::size_t i = a.size(); i-- > 0;) acc = (acc * r + a[i]) % p;
        if (acc == 0) roots_p.push_back(r);
    }

    auto eval_mod = [&](const Integer& r, const Integer& m) {
        Integer acc = 0;
        for (std::size_t i = cs.size(); i-- > 0;) acc = (acc * r + cs[i]) % m;
        return acc;
    };
    auto deriv_mod = [&](const Integer& r, const Integer& m) {
        Integer acc = 0;
        for (std::size_t i = cs.size(); i-- > 1;) acc = (acc * r + i * cs[i]) % m;
        return acc;
    };

    Integer goal = 2 * N * D + 1;
    std::set<Rational> candidates;
    for (long r0 : roots_p) {
        Integer m(p), r(r0);
        while (m < goal) {
            Integer m2 = m * m;
            Integer d = deriv_mod(r, m2);
            Integer u;
            if (mpz_invert(u.get_mpz_t(), d.get_mpz_t(), m2.get_mpz_t()) == 0) break;
            r = (r - eval_mod(r, m2) * u) % m2;
            if (sgn(r) < 0) r += m2;
            m = m2;
        }
        if (m < goal) continue;
        // rational reconstruction of r mod m with |num| <= N, |den| <= D
        Integer v0 = m, v1 = 0, w0 = r, w1 = 1;
        while (w0 > N) {
            Integer q = v0 / w0;
            Integer t0 = v0 - q * w0, t1 = v1 - q * w1;
            v0 = w0; v1 = w1;
            w0 = t0; w1 = t1;
            if (sgn(w0) == 0) break;
        }
        if (sgn(w0) == 0 || sgn(w1) == 0) continue;
        if (::abs(w1) > D) continue;
        candidates.insert(Rational(w0, w1));
    }
    return candidates;
}

}  // namespace

std::vector<Rational> rational_roots(const MPoly& f) {
    char v = 0;
    if (!f.is_univariate(&v)) throw InputError("rational_roots requires a univariate polynomial");
    if (f.is_zero()) throw InputError("rational_roots of the zero polynomial");
    if (v == 0) return {};

    MPoly p = normalize_primitive(f, v);
    auto cs = p.univariate_coeffs(v);

    std::set<Rational> roots;
    std::size_t low = 0;
    while (low < cs.size() && cs[low].is_zero()) ++low;
    if (low > 0) roots.insert(Rational(0));

    Integer trailing = cs[low].to_integer();
    Integer leading = cs.back().to_integer();
    auto check = [&](const Rational& r) {
        if (p.evaluate({{v, r}}).is_zero()) roots.insert(r);
    };

    constexpr unsigned long kTrialBound = 100000;
    auto [tf, tf_rest] = trial_factor(trailing, kTrialBound);
    auto [lf, lf_rest] = trial_factor(leading, kTrialBound);
    if (tf_rest == 1 && lf_rest == 1) {
        // Divisor enumeration with exact verification.
        for (const Integer& pn : divisors_from(tf))
            for (const Integer& qd : divisors_from(lf)) {
                Rational r(pn, qd);
                check(r);
                check(-r);
            }
    } else {
        // Coefficients too large to factor quickly: same answer through a
        // modular lift, still verified exactly.
        std::vector<Integer> scs;
        MPoly s = squarefree_part(p);
        for (const auto& c : s.univariate_coeffs(v)) scs.push_back(c.to_integer());
        while (!scs.empty() && sgn(scs.front()) == 0) scs.erase(scs.begin());
        if (scs.size() > 1)
            for (const Rational& r : modular_root_candidates(scs, v)) check(r);
    }
    return {roots.begin(), roots.end()};
}

}  // namespace rbd
