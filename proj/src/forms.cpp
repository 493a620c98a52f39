#include "rbd/forms.hpp"

#include <array>
#include <functional>

namespace rbd::forms {

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::string to_string(Definiteness d) {
    switch (d) {
        case Definiteness::positive: return "positive-definite";
        case Definiteness::negative: return "negative-definite";
        default: return "indefinite";
    }
}

SymForm::SymForm(ExactMatrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw InputError("form matrix must be square");
    if (!m_.is_integer()) throw InputError("form matrix must have integer entries");
    if (!m_.is_symmetric()) throw InputError("form matrix must be symmetric");
}

SymForm SymForm::from_json_text(const std::string& text) {
    return SymForm(ExactMatrix::from_json_text(text));
}

bool SymForm::is_unimodular() const {
    Rational d = m_.determinant();
    return d == Rational(1) || d == Rational(-1);
}

SymForm SymForm::direct_sum(const SymForm& other) const {
    return SymForm(m_.direct_sum(other.m_));
}

SymForm SymForm::negated() const { return SymForm(-m_); }

FormInvariants invariants(const SymForm& q) {
    const std::size_t n = q.rank();
    FormInvariants inv;
    inv.rank = n;
    inv.det = q.matrix().determinant().to_integer();
    if (n > 0 && sgn(inv.det) == 0) throw InputError("degenerate form (det = 0)");

    // Sylvester's law by symmetric congruence. If every diagonal entry of the
    // trailing block vanishes, an off-diagonal entry is folded onto the
    // diagonal first (basis change e_i -> e_i + e_j).
    ExactMatrix a = q.matrix();
    std::size_t done = 0;
    auto sym_row_col_add = [&](std::size_t i, std::size_t j, const Rational& f) {
        for (std::size_t k = 0; k < n; ++k) a.at(i, k) += f * a.at(j, k);
        for (std::size_t k = 0; k < n; ++k) a.at(k, i) += f * a.at(k, j);
    };
    auto sym_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) std::swap(a.at(i, k), a.at(j, k));
        for (std::size_t k = 0; k < n; ++k) std::swap(a.at(k, i), a.at(k, j));
    };
    while (done < n) {
        std::size_t piv = done;
        while (piv < n && a.at(piv, piv).is_zero()) ++piv;
        if (piv == n) {
            bool found = false;
            for (std::size_t i = done; i < n && !found; ++i)
                for (std::size_t j = i + 1; j < n && !found; ++j)
                    if (!a.at(i, j).is_zero()) {
                        sym_row_col_add(i, j, Rational(1));
                        piv = i;
                        found = true;
                    }
            if (!found) break;  // trailing block identically zero
        }
        if (piv != done) sym_swap(done, piv);
        const Rational d = a.at(done, done);
        if (d.sign() > 0) ++inv.b2_plus;
        else ++inv.b2_minus;
        for (std::size_t i = done + 1; i < n; ++i) {
            if (a.at(i, done).is_zero()) continue;
            sym_row_col_add(i, done, -(a.at(i, done) / d));
        }
        ++done;
    }
    inv.signature = static_cast<long>(inv.b2_plus) - static_cast<long>(inv.b2_minus);

    inv.parity = Parity::even;
    for (std::size_t i = 0; i < n; ++i)
        if (sgn(q.matrix().at(i, i).to_integer() % 2) != 0) {
            inv.parity = Parity::odd;
            break;
        }

    long rk = static_cast<long>(inv.rank);
    inv.definiteness = inv.signature == rk    ? Definiteness::positive
                       : inv.signature == -rk ? Definiteness::negative
                                              : Definiteness::indefinite;
    return inv;
}

bool indefinite_equivalent(const FormInvariants& a, const FormInvariants& b) {
    if (a.definiteness != Definiteness::indefinite && b.definiteness != Definiteness::indefinite)
        throw InputError("indefinite classification does not apply to definite forms");
    return a.same_triple(b) && a.definiteness == Definiteness::indefinite &&
           b.definiteness == Definiteness::indefinite;
}

bool indefinite_equivalent(const SymForm& q1, const SymForm& q2) {
    if (!q1.is_unimodular() || !q2.is_unimodular())
        throw InputError("indefinite classification requires unimodular forms");
    return indefinite_equivalent(invariants(q1), invariants(q2));
}

namespace {

// Exhaustive congruence search B^t Q1 B = Q2 over integer B with bounded
// entries; complete for the rank <= 2 definite cases this tool accepts.
bool congruent_by_search(const ExactMatrix& q1, const ExactMatrix& q2, long bound) {
    const std::size_t n = q1.rows();
    std::vector<long> entries(n * n, -bound);
    ExactMatrix b(n, n);
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == n * n) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) b.at(i, j) = Rational(entries[i * n + j]);
            Rational det = b.determinant();
            if (det != Rational(1) && det != Rational(-1)) return false;
            return b.transpose() * q1 * b == q2;
        }
        for (long v = -bound; v <= bound; ++v) {
            entries[k] = v;
            if (rec(k + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

bool freedman_homeomorphic(const FormInvariants& a, const FormInvariants& b, bool both_smooth) {
    if (!both_smooth) return false;
    if (!a.same_triple(b)) return false;
    if (a.definiteness == Definiteness::indefinite) return true;
    if (a.rank <= 2) return true;  // definite rank <= 2 classes are unique per triple
    throw NotDecided("equivalence of definite forms of rank > 2 is not decided");
}

bool freedman_homeomorphic(const SymForm& q1, const SymForm& q2, bool both_smooth) {
    if (!q1.is_unimodular() || !q2.is_unimodular())
        throw InputError("the homeomorphism gate requires unimodular forms");
    FormInvariants a = invariants(q1), b = invariants(q2);
    if (!a.same_triple(b)) return false;
    bool equivalent;
    if (a.definiteness == Definiteness::indefinite) {
        equivalent = true;
    } else if (a.rank <= 2) {
        long bound = 3;
        for (std::size_t i = 0; i < a.rank; ++i)
            for (std::size_t j = 0; j < a.rank; ++j) {
                Integer m = ::abs(q1.matrix().at(i, j).to_integer());
                if (m.fits_slong_p()) bound = std::max(bound, m.get_si());
            }
        equivalent = congruent_by_search(q1.matrix(), q2.matrix(), bound + 2);
        if (!equivalent)
            throw NotDecided("no congruence found within the search bound");
    } else {
        throw NotDecided("equivalence of definite forms of rank > 2 is not decided");
    }
    return equivalent && both_smooth;
}

bool is_characteristic(const std::vector<Integer>& x, const SymForm& q) {
    const std::size_t n = q.rank();
    if (x.size() != n) throw InputError("characteristic test: dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        Integer pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += q.matrix().at(i, j).to_integer() * x[j];
        Integer diag = q.matrix().at(i, i).to_integer();
        if (sgn((pairing - diag) % 2) != 0) return false;
    }
    return true;
}

SmoothabilityReport smoothability_obstructions(const SymForm& q) {
    if (!q.is_unimodular()) throw InputError("smoothability report requires a unimodular form");
    SmoothabilityReport rep;
    rep.invariants = invariants(q);
    rep.rohlin_applicable = rep.invariants.parity == Parity::even;
    rep.rohlin_pass = rep.rohlin_applicable && rep.invariants.signature % 16 == 0;

    // A characteristic vector: x = Q^{-1} * diag(Q) mod 2 (Q unimodular, so
    // the inverse is integral).
    const std::size_t n = q.rank();
    ExactMatrix diag(n, 1);
    for (std::size_t i = 0; i < n; ++i) diag.at(i, 0) = q.matrix().at(i, i);
    if (n > 0) {
        ExactMatrix x0 = q.matrix().inverse() * diag;
        rep.characteristic_vector.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            Integer v = x0.at(i, 0).to_integer() % 2;
            rep.characteristic_vector[i] = sgn(v) < 0 ? v + 2 : v;
        }
        Integer qxx = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                qxx += rep.characteristic_vector[i] *
                       q.matrix().at(i, j).to_integer() * rep.characteristic_vector[j];
        Integer residue = (qxx - rep.invariants.signature) % 8;
        rep.mod8_holds = sgn(residue) == 0;
    } else {
        rep.mod8_holds = true;
    }
    return rep;
}

SymForm builtin_form(const std::string& name) {
    if (name == "H")
        return SymForm(ExactMatrix{{0, 1}, {1, 0}});
    if (name == "<1>")
        return SymForm(ExactMatrix{{1}});
    if (name == "<-1>")
        return SymForm(ExactMatrix{{-1}});
    if (name == "E8-") {
        ExactMatrix m(8, 8);
        const std::array<std::array<int, 8>, 8> e8{{
            {-2, 1, 0, 0, 0, 0, 0, 0},
            {1, -2, 1, 0, 0, 0, 0, 0},
            {0, 1, -2, 1, 0, 0, 0, 0},
            {0, 0, 1, -2, 1, 0, 0, 0},
            {0, 0, 0, 1, -2, 1, 0, 1},
            {0, 0, 0, 0, 1, -2, 1, 0},
            {0, 0, 0, 0, 0, 1, -2, 0},
            {0, 0, 0, 0, 1, 0, 0, -2},
        }};
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) m.at(i, j) = Rational(e8[i][j]);
        return SymForm(m);
    }
    // diag(1,-1^n)
    if (name.rfind("diag(1,-1^", 0) == 0 && name.back() == ')') {
        std::string num = name.substr(10, name.size() - 11);
        std::size_t n = std::stoul(num);
        ExactMatrix m(n + 1, n + 1);
        m.at(0, 0) = 1;
        for (std::size_t i = 1; i <= n; ++i) m.at(i, i) = Rational(-1);
        return SymForm(m);
    }
    throw InputError("unknown built-in form: " + name);
}

}  // namespace rbd::forms
