#pragma once

// Randomized property suites, shared between the unit tests and the
// acceptance run. Seeds are fixed; failures carry a description.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rbd/h2.hpp"
#include "rbd/forms.hpp"
#include "rbd/mcg.hpp"
#include "rbd/plumbing.hpp"
#include "rbd/poly.hpp"
#include "rbd/smith.hpp"

namespace rbd::props {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline ExactMatrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                     long lo = -9, long hi = 9) {
    std::uniform_int_distribution<long> dist(lo, hi);
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(dist(rng));
    return m;
}

// Random unimodular matrix as a product of elementary row operations.
inline ExactMatrix random_unimodular(std::mt19937& rng, std::size_t n, int ops = 12) {
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> coeff(-2, 2);
    ExactMatrix b = ExactMatrix::identity(n);
    for (int k = 0; k < ops; ++k) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        Rational c(coeff(rng));
        for (std::size_t t = 0; t < n; ++t) b.at(i, t) += c * b.at(j, t);
    }
    return b;
}

// left * M * right == diag(factors), divisibility chain, |prod| = |det|.
inline SuiteResult snf_reconstruction(std::size_t cases, unsigned seed = 20240701) {
    SuiteResult res{"snf-reconstruction", cases, {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (std::size_t c = 0; c < cases; ++c) {
        std::size_t r = dim(rng), k = dim(rng);
        ExactMatrix m = random_int_matrix(rng, r, k);
        SmithDecomposition d = smith_normal_form(m);
        if (!(d.left * m * d.right == d.diagonal(r, k))) {
            res.failures.push_back("reconstruction failed for " + m.str());
            continue;
        }
        Rational ld = d.left.determinant(), rd = d.right.determinant();
        if (ld.abs() != Rational(1) || rd.abs() != Rational(1)) {
            res.failures.push_back("transforms not unimodular for " + m.str());
            continue;
        }
        for (std::size_t i = 0; i + 1 < d.invariant_factors.size(); ++i)
            if (sgn(d.invariant_factors[i + 1] % d.invariant_factors[i]) != 0) {
                res.failures.push_back("divisibility chain broken for " + m.str());
                break;
            }
        if (r == k) {
            Integer prod = 1;
            for (const auto& f : d.invariant_factors) prod *= f;
            if (d.invariant_factors.size() < r) prod = 0;
            Integer det = m.determinant().to_integer();
            if (::abs(prod) != ::abs(det))
                res.failures.push_back("factor product vs det mismatch for " + m.str());
        }
    }
    return res;
}

// invariants(B^t Q B) == invariants(Q) for unimodular B.
inline SuiteResult form_basis_invariance(std::size_t cases, unsigned seed = 20240702) {
    SuiteResult res{"form-basis-invariance", cases, {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    std::uniform_int_distribution<long> ent(-4, 4);
    for (std::size_t c = 0; c < cases; ++c) {
        std::size_t n = dim(rng);
        ExactMatrix q(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                q.at(i, j) = Rational(ent(rng));
                q.at(j, i) = q.at(i, j);
            }
        if (q.determinant().is_zero()) continue;  // invariants reject degenerate forms
        forms::SymForm f(q);
        ExactMatrix b = random_unimodular(rng, n);
        forms::SymForm g(b.transpose() * q * b);
        auto fi = forms::invariants(f), gi = forms::invariants(g);
        if (fi.rank != gi.rank || fi.signature != gi.signature || fi.parity != gi.parity ||
            fi.definiteness != gi.definiteness)
            res.failures.push_back("invariants changed under congruence for " + q.str());
    }
    return res;
}

// Bilinearity and symmetry of the intersection pairing.
inline SuiteResult pairing_bilinearity(std::size_t cases, unsigned seed = 20240703) {
    SuiteResult res{"pairing-bilinearity", cases, {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<std::size_t> dim(0, 6);
    auto rand_class = [&](std::size_t n) {
        std::vector<Rational> e;
        for (std::size_t i = 0; i < n; ++i) e.emplace_back(num(rng), den(rng));
        return h2::H2Class(n, Rational(num(rng), den(rng)), std::move(e));
    };
    for (std::size_t c = 0; c < cases; ++c) {
        std::size_t n = dim(rng);
        auto x = rand_class(n), y = rand_class(n), z = rand_class(n);
        Rational s(num(rng), den(rng));
        if (h2::pair(x, y) != h2::pair(y, x)) {
            res.failures.push_back("symmetry failed");
            continue;
        }
        if (h2::pair(x + s * y, z) != h2::pair(x, z) + s * h2::pair(y, z))
            res.failures.push_back("bilinearity failed");
        if (h2::pair(h2::blow_up(x), h2::blow_up(y)) != h2::pair(x, y))
            res.failures.push_back("blow-up is not pairing-preserving");
    }
    return res;
}

// evaluate(u v) == evaluate(u) evaluate(v); relations of the torus group.
inline SuiteResult evaluate_homomorphism(std::size_t cases, unsigned seed = 20240704) {
    SuiteResult res{"evaluate-homomorphism", cases, {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len(0, 10);
    std::uniform_int_distribution<int> gen(0, 1);
    std::uniform_int_distribution<long> exp(-3, 3);
    auto rand_word = [&] {
        mcg::McgWord w;
        int L = len(rng);
        for (int i = 0; i < L; ++i) {
            long e = exp(rng);
            if (e == 0) continue;
            w = w * mcg::McgWord::generator(gen(rng) ? 'a' : 'b', e);
        }
        return w;
    };
    for (std::size_t c = 0; c < cases; ++c) {
        auto u = rand_word(), v = rand_word();
        if (!(mcg::evaluate(u * v) == mcg::evaluate(u) * mcg::evaluate(v))) {
            res.failures.push_back("homomorphism failed for " + u.str() + " | " + v.str());
            continue;
        }
        auto m = mcg::evaluate(u);
        if (m.a * m.d - m.b * m.c != 1) res.failures.push_back("det != 1 for " + u.str());
        if (!(mcg::evaluate(mcg::McgWord::parse(u.str())) == m))
            res.failures.push_back("print/parse round-trip failed for " + u.str());
    }
    return res;
}

// hj_expand round-trips through evaluation for all 1 <= q < p <= 60.
inline SuiteResult hj_roundtrip(long max_p = 60) {
    SuiteResult res{"hj-roundtrip", 0, {}};
    for (long p = 2; p <= max_p; ++p)
        for (long q = 1; q < p; ++q) {
            if (gcd(Integer(p), Integer(q)) != 1) continue;
            ++res.cases;
            auto as = plumbing::hj_expand(Integer(p), Integer(q));
            for (const auto& a : as)
                if (a < 2) res.failures.push_back("coefficient < 2 for " + std::to_string(p) +
                                                  "/" + std::to_string(q));
            if (plumbing::hj_evaluate(as) != Rational(p, q))
                res.failures.push_back("round-trip failed for " + std::to_string(p) + "/" +
                                       std::to_string(q));
        }
    return res;
}

// Direct sums add rank and signature; parity even only when both are even;
// negation flips the signature and keeps parity.
inline SuiteResult form_sum_negation(std::size_t cases, unsigned seed = 20240706) {
    SuiteResult res{"form-sum-negation", cases, {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    std::uniform_int_distribution<long> ent(-3, 3);
    auto random_form = [&]() -> std::optional<forms::SymForm> {
        std::size_t n = dim(rng);
        ExactMatrix q(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                q.at(i, j) = Rational(ent(rng));
                q.at(j, i) = q.at(i, j);
            }
        if (q.determinant().is_zero()) return std::nullopt;
        return forms::SymForm(q);
    };
    for (std::size_t c = 0; c < cases; ++c) {
        auto q1 = random_form(), q2 = random_form();
        if (!q1 || !q2) continue;
        auto a = forms::invariants(*q1), b = forms::invariants(*q2);
        auto s = forms::invariants(q1->direct_sum(*q2));
        if (s.rank != a.rank + b.rank || s.signature != a.signature + b.signature)
            res.failures.push_back("direct sum is not additive");
        bool both_even = a.parity == forms::Parity::even && b.parity == forms::Parity::even;
        if ((s.parity == forms::Parity::even) != both_even)
            res.failures.push_back("direct-sum parity rule failed");
        auto n1 = forms::invariants(q1->negated());
        if (n1.signature != -a.signature || n1.parity != a.parity)
            res.failures.push_back("negation changed the wrong invariant");
    }
    return res;
}

// Resultant vanishes exactly when the inputs share a root: products of
// linear factors with and without a shared factor.
inline SuiteResult resultant_shared_root(std::size_t cases, unsigned seed = 20240707) {
    SuiteResult res{"resultant-shared-root", cases, {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> root(-6, 6);
    for (std::size_t c = 0; c < cases; ++c) {
        long r1 = root(rng), r2 = root(rng), r3 = root(rng);
        auto lin = [](long r) {
            return MPoly::variable('x') - MPoly(Rational(r));
        };
        MPoly f = lin(r1) * lin(r2);
        MPoly g_shared = lin(r2) * lin(r3);
        if (!resultant(f, g_shared, 'x').is_zero())
            res.failures.push_back("resultant nonzero despite shared root");
        if (r3 != r1 && r3 != r2) {
            MPoly g_disjoint = lin(r3) * lin(r3 + 13);
            MPoly r = resultant(f, g_disjoint, 'x');
            if (r.is_zero()) res.failures.push_back("resultant zero without shared root");
        }
    }
    return res;
}

// m * m^{-1} == identity on random nonsingular matrices.
inline SuiteResult inverse_identity(std::size_t cases, unsigned seed = 20240705) {
    SuiteResult res{"inverse-identity", cases, {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (std::size_t c = 0; c < cases; ++c) {
        std::size_t n = dim(rng);
        ExactMatrix m = random_int_matrix(rng, n, n);
        if (m.determinant().is_zero()) continue;
        if (!(m * m.inverse() == ExactMatrix::identity(n)))
            res.failures.push_back("inverse failed for " + m.str());
    }
    return res;
}

inline std::vector<SuiteResult> run_all() {
    return {snf_reconstruction(2500),     form_basis_invariance(2000),
            pairing_bilinearity(2500),    evaluate_homomorphism(2500),
            hj_roundtrip(60),             inverse_identity(600),
            form_sum_negation(800),       resultant_shared_root(600)};
}

}  // namespace rbd::props
