#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbd/matrix.hpp"

namespace rbd::forms {

enum class Parity { even, odd };
enum class Definiteness { positive, negative, indefinite };

std::string to_string(Parity p);
std::string to_string(Definiteness d);

// Symmetric bilinear integer form. Unimodularity is checked on demand.
class SymForm {
public:
    explicit SymForm(ExactMatrix m);
    static SymForm from_json_text(const std::string& text);

    const ExactMatrix& matrix() const { return m_; }
    std::size_t rank() const { return m_.rows(); }
    bool is_unimodular() const;

    SymForm direct_sum(const SymForm& other) const;
    SymForm negated() const;

private:
    ExactMatrix m_;
};

struct FormInvariants {
    std::size_t rank = 0;
    long signature = 0;
    std::size_t b2_plus = 0, b2_minus = 0;
    Parity parity = Parity::even;
    Definiteness definiteness = Definiteness::indefinite;
    Integer det;

    bool same_triple(const FormInvariants& o) const {
        return rank == o.rank && signature == o.signature && parity == o.parity;
    }
};

// Rank, signature (exact congruence diagonalization over Q), parity read off
// the diagonal, definiteness from the rank/signature trichotomy.
// Degenerate (det = 0) forms are rejected.
FormInvariants invariants(const SymForm& q);

// Serre: indefinite unimodular forms are classified by (rank, signature,
// parity). Errors when both inputs are definite.
bool indefinite_equivalent(const SymForm& q1, const SymForm& q2);

// Invariant-level version of the same gate, for callers that only carry
// (rank, signature, parity) triples.
bool indefinite_equivalent(const FormInvariants& a, const FormInvariants& b);

// Forms of simply-connected closed 4-manifolds: homeomorphic iff the forms
// are equivalent and both manifolds are smooth. Definite forms of rank > 2
// are not decided by this tool.
bool freedman_homeomorphic(const SymForm& q1, const SymForm& q2, bool both_smooth);
bool freedman_homeomorphic(const FormInvariants& a, const FormInvariants& b, bool both_smooth);

// Q(x, e_i) = Q(e_i, e_i) (mod 2) for every basis vector.
bool is_characteristic(const std::vector<Integer>& x, const SymForm& q);

struct SmoothabilityReport {
    FormInvariants invariants;
    bool rohlin_applicable = false;  // even forms only
    bool rohlin_pass = false;        // signature divisible by 16
    // A characteristic vector and the residue check Q(x,x) = signature mod 8.
    std::vector<Integer> characteristic_vector;
    bool mod8_holds = false;
};

SmoothabilityReport smoothability_obstructions(const SymForm& q);

// Named built-in forms: "E8-", "H", "<1>", "diag(1,-1^n)".
SymForm builtin_form(const std::string& name);

}  // namespace rbd::forms
