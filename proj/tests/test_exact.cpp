#include "doctest.h"

#include <random>

#include "rbd/matrix.hpp"
#include "rbd/poly.hpp"
#include "rbd/smith.hpp"

using namespace rbd;

namespace {

// Independent determinant oracle: cofactor expansion.
Rational cofactor_det(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m.at(0, 0);
    Rational total(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        ExactMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, cc++) = m.at(i, k);
            }
        }
        Rational term = m.at(0, j) * cofactor_det(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

// Independent invariant-factor oracle through determinantal divisors:
// d_k = D_k / D_{k-1} with D_k the gcd of all k x k minors.
std::vector<Integer> determinantal_divisor_factors(const ExactMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    const std::size_t kmax = std::min(r, c);
    std::vector<Integer> D(kmax + 1);
    D[0] = 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
        Integer g = 0;
        auto next_combo = [](std::vector<std::size_t>& idx, std::size_t limit) {
            std::size_t k2 = idx.size();
            for (std::size_t i = k2; i-- > 0;) {
                if (idx[i] + (k2 - i) < limit + 0) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < k2; ++j) idx[j] = idx[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        // iterate all row and column combinations
        std::vector<std::size_t> rows(k);
        for (std::size_t i = 0; i < k; ++i) rows[i] = i;
        bool more_rows = true;
        while (more_rows) {
            std::vector<std::size_t> cols(k);
            for (std::size_t i = 0; i < k; ++i) cols[i] = i;
            bool more_cols = true;
            while (more_cols) {
                ExactMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub.at(i, j) = m.at(rows[i], cols[j]);
                g = gcd(g, cofactor_det(sub).to_integer());
                more_cols = next_combo(cols, c);
            }
            more_rows = next_combo(rows, r);
        }
        D[k] = g;
        if (sgn(g) == 0) break;
    }
    std::vector<Integer> out;
    for (std::size_t k = 1; k <= kmax; ++k) {
        if (sgn(D[k]) == 0) break;
        out.push_back(D[k] / D[k - 1]);
    }
    return out;
}

ExactMatrix chain_matrix_c7() {
    ExactMatrix p(6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
        p.at(i, i) = Rational(i == 5 ? -9 : -2);
        if (i + 1 < 6) {
            p.at(i, i + 1) = 1;
            p.at(i + 1, i) = 1;
        }
    }
    return p;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
    Rational r(6, 8);
    CHECK(r.num() == 3);
    CHECK(r.den() == 4);
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(0, 5).den() == 1);
    CHECK(Rational::parse("-22/7").str() == "-22/7");
    CHECK(Rational::parse("42") == Rational(42));
    // printing and re-parsing is the identity
    Rational x(-123456789L, 987654321L);
    CHECK(Rational::parse(x.str()) == x);
    CHECK_THROWS_AS(Rational(1, 0), InputError);
    CHECK_THROWS_AS(Rational::parse("x"), InputError);
}

TEST_CASE("determinants against the cofactor oracle") {
    ExactMatrix p = chain_matrix_c7();
    CHECK(cofactor_det(p) == Rational(49));
    CHECK(p.determinant() == Rational(49));

    ExactMatrix h{{0, 1}, {1, 0}};
    CHECK(h.determinant() == Rational(-1));

    std::mt19937 rng(7781);
    std::uniform_int_distribution<long> ent(-6, 6);
    for (int c = 0; c < 100; ++c) {
        std::size_t n = 1 + static_cast<std::size_t>(c % 5);
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rational(ent(rng));
        CHECK(m.determinant() == cofactor_det(m));
    }
    CHECK_THROWS_AS(ExactMatrix(2, 3).determinant(), InputError);
}

TEST_CASE("inverse of the chain matrix has the dual-pairing shape") {
    ExactMatrix p = chain_matrix_c7();
    ExactMatrix t = p.inverse();
    CHECK(p * t == ExactMatrix::identity(6));
    // last row is -(1,2,3,4,5,6)/49
    for (std::size_t j = 0; j < 6; ++j)
        CHECK(t.at(5, j) == Rational(-static_cast<long>(j + 1), 49));
    CHECK(ExactMatrix{{2}}.inverse() == ExactMatrix{{Rational(1, 2)}});
    CHECK(ExactMatrix::identity(4).inverse() == ExactMatrix::identity(4));
    CHECK_THROWS_AS((ExactMatrix{{1, 1}, {1, 1}}.inverse()), InputError);
}

TEST_CASE("smith normal form: chain matrix, zero map, diagonal fold") {
    auto d = smith_normal_form(chain_matrix_c7());
    REQUIRE(d.invariant_factors.size() == 6);
    for (std::size_t i = 0; i < 5; ++i) CHECK(d.invariant_factors[i] == 1);
    CHECK(d.invariant_factors[5] == 49);
    CHECK(d.free_rank == 0);
    // independent oracle: determinantal divisors
    auto oracle = determinantal_divisor_factors(chain_matrix_c7());
    REQUIRE(oracle.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(oracle[i] == d.invariant_factors[i]);

    auto z = smith_normal_form(ExactMatrix{{0}});
    CHECK(z.invariant_factors.empty());
    CHECK(z.free_rank == 1);

    auto f = smith_normal_form(ExactMatrix{{2, 0}, {0, 3}});
    REQUIRE(f.invariant_factors.size() == 2);
    CHECK(f.invariant_factors[0] == 1);
    CHECK(f.invariant_factors[1] == 6);

    CHECK_THROWS_AS(smith_normal_form(ExactMatrix{{Rational(1, 2)}}), InputError);
}

TEST_CASE("smith factors match determinantal divisors on random matrices") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> ent(-5, 5);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int c = 0; c < 60; ++c) {
        std::size_t r = dim(rng), k = dim(rng);
        ExactMatrix m(r, k);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < k; ++j) m.at(i, j) = Rational(ent(rng));
        auto d = smith_normal_form(m);
        auto oracle = determinantal_divisor_factors(m);
        REQUIRE(d.invariant_factors.size() == oracle.size());
        for (std::size_t i = 0; i < oracle.size(); ++i)
            CHECK(d.invariant_factors[i] == oracle[i]);
    }
}

TEST_CASE("polynomial parsing, printing, arithmetic") {
    MPoly p = MPoly::parse("-2*x^3*y + 4/27*z^3");
    CHECK(p.degree('x') == 3);
    CHECK(p.degree('z') == 3);
    CHECK(MPoly::parse(p.str()) == p);
    CHECK(MPoly::parse("(y + 1/2*z)^3") ==
          MPoly::parse("y^3 + 3/2*y^2*z + 3/4*y*z^2 + 1/8*z^3"));
    CHECK(MPoly::parse("x/2 - x/2").is_zero());
    CHECK(MPoly::parse("z*y^2 - z*x^2 - x^3").is_homogeneous());
    CHECK_THROWS_AS(MPoly::parse("x^-1"), InputError);
    CHECK_THROWS_AS(MPoly::parse("x + "), InputError);
    CHECK_THROWS_AS(MPoly::parse("q/(x)"), InputError);
    // derivative and substitution
    MPoly f = MPoly::parse("z*y^2 - z*x^2 - x^3");
    CHECK(f.derivative('x') == MPoly::parse("-2*z*x - 3*x^2"));
    CHECK(f.substitute('z', MPoly(Rational(1))) == MPoly::parse("y^2 - x^2 - x^3"));
}

TEST_CASE("resultants against frozen Sylvester values") {
    MPoly f = MPoly::parse("y^2 - x^3");
    MPoly g = MPoly::parse("2*y");
    MPoly r = resultant(f, g, 'y');
    bool up_to_sign = r == MPoly::parse("4*x^3") || r == MPoly::parse("-4*x^3");
    CHECK(up_to_sign);

    MPoly c = resultant(MPoly::parse("x - 1"), MPoly::parse("x + 1"), 'x');
    CHECK(c.is_constant());
    CHECK(c.constant_value().abs() == Rational(2));

    // discriminant route: t^3 - 4t - 4 is squarefree, disc = -4p^3 - 27q^2
    MPoly cubic = MPoly::parse("t^3 - 4*t - 4");
    MPoly d = resultant(cubic, cubic.derivative('t'), 't');
    CHECK(d.is_constant());
    long p_coef = -4, q_coef = -4;
    long disc = -4 * p_coef * p_coef * p_coef - 27 * q_coef * q_coef;  // -176
    CHECK(disc == -176);
    CHECK(d.constant_value().abs() == Rational(176));

    // vanishes exactly on a shared root
    MPoly shared = resultant(MPoly::parse("(x - 2)*(x + 1)"), MPoly::parse("(x - 2)*(x + 5)"), 'x');
    CHECK(shared.is_zero());
    CHECK_THROWS_AS(resultant(MPoly(), f, 'y'), InputError);
    CHECK_THROWS_AS(resultant(MPoly::parse("x"), MPoly::parse("x + 1"), 'y'), InputError);
}

TEST_CASE("squarefree parts") {
    CHECK(squarefree_part(MPoly::parse("x^3")) == MPoly::parse("x"));
    MPoly t = MPoly::parse("t^3 - 4*t - 4");
    CHECK(squarefree_part(t) == t);
    CHECK(squarefree_part(MPoly::parse("(x-1)^2*(x+2)")) == MPoly::parse("(x-1)*(x+2)"));
    // result has no repeated factors
    MPoly s = squarefree_part(MPoly::parse("(x-3)^4*(x+1)^2*x"));
    CHECK(gcd_univariate(s, s.derivative('x'), 'x').is_constant());
    CHECK_THROWS_AS(squarefree_part(MPoly()), InputError);
}

TEST_CASE("rational roots by divisor enumeration") {
    auto roots = rational_roots(MPoly::parse("-2*z^3 - 3*z^2"));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rational(-3, 2));
    CHECK(roots[1] == Rational(0));

    CHECK(rational_roots(MPoly::parse("x^2 - 2")).empty());

    auto r2 = rational_roots(MPoly::parse("(2*x - 1)*(x + 3)"));
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == Rational(-3));
    CHECK(r2[1] == Rational(1, 2));
}

TEST_CASE("rational roots survive huge unfactorable coefficients") {
    // (x - 1000006000009) * (2x - 1): the constant term's square factor
    // exceeds the trial bound, forcing the modular path.
    MPoly f = MPoly::parse("(x - 1000006000009) * (2*x - 1)");
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rational(1, 2));
    CHECK(roots[1] == Rational(Integer("1000006000009")));

    MPoly g = MPoly::parse("(3*x - 2) * (x + 5) * (x^2 + 1000000000039)");
    auto r2 = rational_roots(g);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == Rational(-5));
    CHECK(r2[1] == Rational(2, 3));
}

TEST_CASE("matrix JSON wire format") {
    auto m = ExactMatrix::from_json_text(R"([[1, "-1/49"], ["2/3", 0]])");
    CHECK(m.at(0, 1) == Rational(-1, 49));
    CHECK(m.at(1, 0) == Rational(2, 3));
    CHECK(ExactMatrix::from_json_text(m.to_json_text()) == m);
    CHECK_THROWS_AS(ExactMatrix::from_json_text("[[1],[2,3]]"), InputError);
    CHECK_THROWS_AS(ExactMatrix::from_json_text("{}"), InputError);
}

TEST_CASE("exact division") {
    MPoly f = MPoly::parse("(x + y)^3 * (x - 2*y)");
    auto q = try_divide(f, MPoly::parse("(x + y)^2"));
    REQUIRE(q.has_value());
    CHECK(*q == MPoly::parse("(x + y) * (x - 2*y)"));
    CHECK(!try_divide(f, MPoly::parse("x + 2*y")).has_value());
}
