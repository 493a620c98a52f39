#pragma once

#include <array>
#include <string>

#include "rbd/forms.hpp"
#include "rbd/ledger.hpp"

namespace rbd::park {

// Linear functional in the symplectic-class coefficients a, b1..b13.
class LinearForm {
public:
    static constexpr std::size_t kSymbols = 14;  // a, b1..b13

    LinearForm() = default;
    static LinearForm symbol_a();
    static LinearForm symbol_b(std::size_t i);  // 1-based

    const Rational& a() const { return c_[0]; }
    const Rational& b(std::size_t i) const;
    Rational& coeff(std::size_t idx) { return c_[idx]; }  // 0 = a, i = b_i

    bool is_zero() const;
    LinearForm operator-() const;
    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    friend LinearForm operator+(LinearForm x, const LinearForm& y) { return x += y; }
    friend LinearForm operator-(LinearForm x, const LinearForm& y) { return x -= y; }
    friend LinearForm operator*(const Rational& s, const LinearForm& f);
    friend bool operator==(const LinearForm&, const LinearForm&) = default;

    Rational evaluate(const std::array<Rational, kSymbols>& values) const;
    std::string str() const;

private:
    std::array<Rational, kSymbols> c_{};
};

// The C_7 configuration inside E(1) # 4 CP^2-bar: u1..u5 from the chain of
// -2 spheres in the degenerate fibre, u6 the sphere of square -9.
struct C7Embedding {
    std::array<h2::H2Class, 6> u;
    ExactMatrix P;  // gram(u1..u6)
    ExactMatrix T;  // P^{-1}, the pairing of the dual basis gamma_i
};

// Builds the embedding from a replayed fibre-component ledger; the chain
// classes come from the ledger, not from constants.
C7Embedding build_c7_embedding(const h2::LedgerResult& e6);
C7Embedding build_c7_embedding();  // built-in ledger

// Coefficients (x.u1, ..., x.u6) in the dual basis gamma_i.
std::array<Rational, 6> restrict_class(const h2::H2Class& x, const C7Embedding& emb);
// Restriction of the symbolic class a*h - sum b_i e_i.
std::array<LinearForm, 6> restrict_omega(const C7Embedding& emb);

// x^T T y, numeric or with symbolic coefficients carried through exactly.
Rational pair_in_config(const std::array<Rational, 6>& x, const std::array<Rational, 6>& y,
                        const C7Embedding& emb);
LinearForm pair_in_config(const std::array<Rational, 6>& x, const std::array<LinearForm, 6>& y,
                          const C7Embedding& emb);

// K.omega as a functional: -3a + (b1 + ... + b13).
LinearForm k_dot_omega();
// The blowdown pairing K_7 . omega_7 = K.omega - K|C7 . omega|C7.
LinearForm blowdown_pairing(const C7Embedding& emb);

// Farkas-style certificate for positivity of a functional on the region
//   a >= b1 >= ... >= b13 >= 0,  3a > b1 + ... + b13 (strict):
// L = lambda0 (3a - sum b) + sum chain_k (consecutive difference k)
//       + sum tail_i b_i,  all weights >= 0, lambda0 > 0.
struct PositivityCertificate {
    Rational lambda0;
    std::array<Rational, 13> chain;  // a-b1, b1-b2, ..., b12-b13
    std::array<Rational, 13> tails;  // b1, ..., b13
};

bool verify_certificate(const LinearForm& L, const PositivityCertificate& cert);

// The certificate shipped for the blowdown functional.
PositivityCertificate park_certificate();

// Rank/signature bookkeeping for removing a C_p configuration:
// b2+ unchanged, b2- drops by p-1. Parity odd when the new signature is not
// divisible by 8 (mod-8 characteristic-vector constraint on smooth forms).
forms::FormInvariants blowdown_bookkeeping(const forms::FormInvariants& before, long p);

struct Park7Report {
    C7Embedding embedding;
    std::array<Rational, 6> k_restriction;
    std::array<LinearForm, 6> omega_restriction;
    LinearForm config_pairing;    // K|C7 . omega|C7
    LinearForm blowdown;          // K7 . omega7
    bool certificate_ok = false;
    forms::FormInvariants before; // E(1) # 4 CP^2-bar
    forms::FormInvariants after;  // the blowdown
    bool wu_ok = false;           // K^2 = 3 sigma + 2 chi upstairs
    bool freedman_ok = false;     // after vs diag(1,-1^7), both smooth
    // Records the sign convention used for the signature; see run_park7.
    std::string signature_note;
};

Park7Report run_park7();

}  // namespace rbd::park
