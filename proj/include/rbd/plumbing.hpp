#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbd/smith.hpp"

namespace rbd::plumbing {

// Dehn surgery description: one p/q coefficient per link component plus the
// symmetric linking matrix (zero diagonal).
struct SurgeryPresentation {
    std::vector<Rational> coefficients;
    ExactMatrix linking;

    SurgeryPresentation(std::vector<Rational> coeffs, ExactMatrix link);
    std::size_t components() const { return coefficients.size(); }
};

// H_1 presented by the meridians: relation i reads
//   p_i mu_i + q_i sum_j lk(K_i, K_j) mu_j = 0.
class AbelianGroupPresentation {
public:
    AbelianGroupPresentation(std::vector<std::string> generators, ExactMatrix relations);

    const std::vector<std::string>& generators() const { return generators_; }
    const ExactMatrix& relations() const { return relations_; }
    const SmithDecomposition& snf() const { return snf_; }

    // Torsion coefficients > 1, divisibility order.
    std::vector<Integer> torsion() const;
    std::size_t free_rank() const;
    bool is_finite() const { return free_rank() == 0; }
    Integer order() const;  // finite groups only

    // Order of a generator's image; nullopt = infinite.
    std::optional<Integer> element_order(const std::string& name) const;

    std::string structure() const;  // e.g. "Z_49", "Z + Z_2"

private:
    std::vector<std::string> generators_;
    ExactMatrix relations_;     // rows = relations, columns = generators
    SmithDecomposition snf_;    // of relations^T
};

AbelianGroupPresentation h1(const SurgeryPresentation& pres);

// Chain of unknots, each linking its neighbours once, integral framings.
SurgeryPresentation chain_presentation(const std::vector<long>& framings);

// Lens space L(p, q), stored with 0 < q < p. `mirrored` records when the
// value arose as the opposite orientation L(p, -q) of a printed convention.
struct LensSpace {
    Integer p;
    Integer q;
    bool mirrored = false;

    LensSpace mirror() const { return {p, p - q, !mirrored}; }
    std::string str() const { return "L(" + p.get_str() + "," + q.get_str() + ")"; }
};

// p/q = a1 - 1/(a2 - 1/(... - 1/ak)), all a_i >= 2.
std::vector<Integer> hj_expand(const Integer& p, const Integer& q);

// Exact value of the continued fraction [a1, a2, ...].
Rational hj_evaluate(const std::vector<Integer>& as);

// Boundary of a linear plumbing with framings f_i <= -2: the lens space
// L(p, q) with p/q = [-f_1, -f_2, ...].
LensSpace chain_boundary(const std::vector<long>& framings);

struct CpChain {
    long p = 0;
    std::vector<long> framings;  // (-(p+2), -2, ..., -2), p-2 twos
    ExactMatrix gram;            // sphere order u_1..u_{p-1}: -2s first, -(p+2) last
    LensSpace boundary;
};

CpChain build_cp(long p);

}  // namespace rbd::plumbing
