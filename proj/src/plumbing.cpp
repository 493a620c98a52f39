#include "rbd/plumbing.hpp"

#include <sstream>

namespace rbd::plumbing {

SurgeryPresentation::SurgeryPresentation(std::vector<Rational> coeffs, ExactMatrix link)
    : coefficients(std::move(coeffs)), linking(std::move(link)) {
    const std::size_t n = coefficients.size();
    if (linking.rows() != n || linking.cols() != n)
        throw InputError("linking matrix size does not match component count");
    if (!linking.is_integer() || !linking.is_symmetric())
        throw InputError("linking matrix must be symmetric and integral");
    for (std::size_t i = 0; i < n; ++i)
        if (!linking.at(i, i).is_zero())
            throw InputError("linking matrix must have zero diagonal");
}

AbelianGroupPresentation::AbelianGroupPresentation(std::vector<std::string> generators,
                                                   ExactMatrix relations)
    : generators_(std::move(generators)),
      relations_(std::move(relations)),
      snf_(smith_normal_form(relations_.transpose())) {
    if (relations_.cols() != generators_.size())
        throw InputError("relation matrix columns must match generators");
}

std::vector<Integer> AbelianGroupPresentation::torsion() const {
    std::vector<Integer> t;
    for (const auto& d : snf_.invariant_factors)
        if (d > 1) t.push_back(d);
    return t;
}

std::size_t AbelianGroupPresentation::free_rank() const { return snf_.free_rank; }

Integer AbelianGroupPresentation::order() const {
    if (!is_finite()) throw InputError("group is infinite");
    Integer n = 1;
    for (const auto& d : snf_.invariant_factors) n *= d;
    return n;
}

std::optional<Integer> AbelianGroupPresentation::element_order(const std::string& name) const {
    std::size_t idx = generators_.size();
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i] == name) idx = i;
    if (idx == generators_.size()) throw InputError("unknown generator: " + name);

    // Coordinates of the generator in the diagonalized cokernel: y = L * e_idx.
    const std::size_t n = generators_.size();
    const auto& L = snf_.left;
    std::vector<Integer> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = L.at(i, idx).to_integer();

    const std::size_t k = snf_.invariant_factors.size();
    Integer ord = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (i < k) {
            const Integer& d = snf_.invariant_factors[i];
            Integer g = rbd::gcd(d, y[i]);
            ord = rbd::lcm(ord, d / g);
        } else if (sgn(y[i]) != 0) {
            return std::nullopt;  // hits a free coordinate
        }
    }
    return ord;
}

std::string AbelianGroupPresentation::structure() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < free_rank(); ++i) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (const auto& d : torsion()) {
        os << (first ? "" : " + ") << "Z_" << d.get_str();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

AbelianGroupPresentation h1(const SurgeryPresentation& pres) {
    const std::size_t n = pres.components();
    ExactMatrix rel(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& c = pres.coefficients[i];
        rel.at(i, i) = Rational(c.num());
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            rel.at(i, j) = Rational(c.den()) * pres.linking.at(i, j);
        }
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
    return AbelianGroupPresentation(std::move(names), std::move(rel));
}

SurgeryPresentation chain_presentation(const std::vector<long>& framings) {
    const std::size_t n = framings.size();
    if (n == 0) throw InputError("empty chain");
    std::vector<Rational> coeffs;
    coeffs.reserve(n);
    for (long f : framings) coeffs.emplace_back(f);
    ExactMatrix link(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        link.at(i, i + 1) = 1;
        link.at(i + 1, i) = 1;
    }
    return SurgeryPresentation(std::move(coeffs), std::move(link));
}

std::vector<Integer> hj_expand(const Integer& p_in, const Integer& q_in) {
    if (!(q_in > 0) || !(p_in > q_in) || rbd::gcd(p_in, q_in) != 1)
        throw InputError("hj_expand requires 0 < q < p with gcd(p, q) = 1");
    std::vector<Integer> as;
    Integer p = p_in, q = q_in;
    while (true) {
        // a = ceil(p/q)
        Integer a;
        mpz_cdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        as.push_back(a);
        Integer r = a * q - p;  // 0 <= r < q
        if (sgn(r) == 0) break;
        p = q;
        q = r;
    }
    return as;
}

Rational hj_evaluate(const std::vector<Integer>& as) {
    if (as.empty()) throw InputError("empty continued fraction");
    Rational value(as.back());
    for (std::size_t i = as.size() - 1; i-- > 0;)
        value = Rational(as[i]) - Rational(1) / value;
    return value;
}

LensSpace chain_boundary(const std::vector<long>& framings) {
    if (framings.empty()) throw InputError("empty chain");
    std::vector<Integer> as;
    as.reserve(framings.size());
    for (long f : framings) {
        if (f > -2) throw InputError("chain_boundary supports framings <= -2 only");
        as.emplace_back(-f);
    }
    Rational v = hj_evaluate(as);
    return LensSpace{v.num(), v.den(), false};
}

CpChain build_cp(long p) {
    if (p < 2) throw InputError("C_p requires p >= 2");
    CpChain chain;
    chain.p = p;
    chain.framings.push_back(-(p + 2));
    for (long i = 0; i < p - 2; ++i) chain.framings.push_back(-2);

    // Gram in the u-basis: the -2 spheres first, the -(p+2) sphere last.
    const std::size_t n = static_cast<std::size_t>(p - 1);
    chain.gram = ExactMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        chain.gram.at(i, i) = Rational(i + 1 == n ? -(p + 2) : -2);
        if (i + 1 < n) {
            chain.gram.at(i, i + 1) = 1;
            chain.gram.at(i + 1, i) = 1;
        }
    }
    chain.boundary = chain_boundary(chain.framings);
    return chain;
}

}  // namespace rbd::plumbing
