#include "rbd/park7.hpp"

#include <sstream>

namespace rbd::park {

LinearForm LinearForm::symbol_a() {
    LinearForm f;
    f.c_[0] = 1;
    return f;
}

LinearForm LinearForm::symbol_b(std::size_t i) {
    if (i == 0 || i >= kSymbols) throw InputError("b-index out of range");
    LinearForm f;
    f.c_[i] = 1;
    return f;
}

const Rational& LinearForm::b(std::size_t i) const {
    if (i == 0 || i >= kSymbols) throw InputError("b-index out of range");
    return c_[i];
}

bool LinearForm::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

LinearForm LinearForm::operator-() const {
    LinearForm f = *this;
    for (auto& c : f.c_) c = -c;
    return f;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    for (std::size_t i = 0; i < kSymbols; ++i) c_[i] += o.c_[i];
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
    for (std::size_t i = 0; i < kSymbols; ++i) c_[i] -= o.c_[i];
    return *this;
}

LinearForm operator*(const Rational& s, const LinearForm& f) {
    LinearForm r = f;
    for (auto& c : r.c_) c *= s;
    return r;
}

Rational LinearForm::evaluate(const std::array<Rational, kSymbols>& values) const {
    Rational total(0);
    for (std::size_t i = 0; i < kSymbols; ++i) total += c_[i] * values[i];
    return total;
}

std::string LinearForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < kSymbols; ++i) {
        if (c_[i].is_zero()) continue;
        Rational v = c_[i];
        if (first) {
            if (v.sign() < 0) { os << "-"; v = -v; }
        } else {
            os << (v.sign() < 0 ? " - " : " + ");
            if (v.sign() < 0) v = -v;
        }
        if (v != Rational(1)) os << v.str() << "*";
        os << (i == 0 ? "a" : "b" + std::to_string(i));
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

C7Embedding build_c7_embedding(const h2::LedgerResult& e6) {
    constexpr std::size_t kAmbient = 13;
    // Chain classes, in the order dictated by the -9 sphere's neighbours:
    // u1 = e4-e7, u2 = e1-e4, u3 = h-e1-e2-e3, u4 = e2-e5, u5 = e5-e9.
    const char* chain_literals[5] = {"e4 - e7", "e1 - e4", "h - e1 - e2 - e3",
                                     "e2 - e5", "e5 - e9"};
    std::array<h2::H2Class, 6> u{h2::H2Class(kAmbient), h2::H2Class(kAmbient),
                                 h2::H2Class(kAmbient), h2::H2Class(kAmbient),
                                 h2::H2Class(kAmbient), h2::H2Class(kAmbient)};
    for (std::size_t i = 0; i < 5; ++i) {
        h2::H2Class expected = h2::H2Class::parse(chain_literals[i], e6.final_fiber.ambient());
        bool found = false;
        for (const auto& [cls, mult] : e6.final_components) found |= cls == expected;
        if (!found)
            throw Error("ledger does not produce the expected chain sphere " +
                        expected.str());
        h2::H2Class lifted = expected;
        while (lifted.ambient() < kAmbient) lifted = h2::blow_up(lifted);
        u[i] = lifted;
    }
    // u6: the fibre class with the four double points blown up, resolved
    // against the section e9: 4f + e9 - 2(e10..e13) expanded in {h, e_i}.
    h2::H2Class f = h2::fiber_class(kAmbient);
    h2::H2Class s = Rational(4) * f + h2::basis_e(kAmbient, 9);
    for (std::size_t k = 10; k <= 13; ++k) s = s - Rational(2) * h2::basis_e(kAmbient, k);
    u[5] = s;

    C7Embedding emb{u, h2::gram({u.begin(), u.end()}), ExactMatrix()};
    emb.T = emb.P.inverse();
    if (h2::pair(u[5], u[5]) != Rational(-9))
        throw Error("u6 does not have square -9");
    return emb;
}

C7Embedding build_c7_embedding() {
    return build_c7_embedding(h2::replay(h2::builtin_ledger("e6")));
}

std::array<Rational, 6> restrict_class(const h2::H2Class& x, const C7Embedding& emb) {
    if (x.ambient() != emb.u[0].ambient())
        throw InputError("class does not live in the configuration's ambient");
    std::array<Rational, 6> out;
    for (std::size_t i = 0; i < 6; ++i) out[i] = h2::pair(x, emb.u[i]);
    return out;
}

std::array<LinearForm, 6> restrict_omega(const C7Embedding& emb) {
    // omega = a h - sum_i b_i e_i, so omega . u = a u_h + sum_i b_i u_{e_i}.
    std::array<LinearForm, 6> out;
    for (std::size_t i = 0; i < 6; ++i) {
        LinearForm f = emb.u[i].h() * LinearForm::symbol_a();
        for (std::size_t k = 1; k <= emb.u[i].ambient(); ++k)
            f += emb.u[i].e(k) * LinearForm::symbol_b(k);
        out[i] = f;
    }
    return out;
}

Rational pair_in_config(const std::array<Rational, 6>& x, const std::array<Rational, 6>& y,
                        const C7Embedding& emb) {
    Rational total(0);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) total += x[i] * emb.T.at(i, j) * y[j];
    return total;
}

LinearForm pair_in_config(const std::array<Rational, 6>& x, const std::array<LinearForm, 6>& y,
                          const C7Embedding& emb) {
    LinearForm total;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) total += (x[i] * emb.T.at(i, j)) * y[j];
    return total;
}

LinearForm k_dot_omega() {
    // K = -3h + sum e_i against omega = a h - sum b_i e_i.
    LinearForm f = Rational(-3) * LinearForm::symbol_a();
    for (std::size_t i = 1; i < LinearForm::kSymbols; ++i) f += LinearForm::symbol_b(i);
    return f;
}

LinearForm blowdown_pairing(const C7Embedding& emb) {
    h2::H2Class K = h2::canonical_class(13);
    return k_dot_omega() - pair_in_config(restrict_class(K, emb), restrict_omega(emb), emb);
}

bool verify_certificate(const LinearForm& L, const PositivityCertificate& cert) {
    if (cert.lambda0.sign() <= 0) return false;
    for (const auto& w : cert.chain)
        if (w.sign() < 0) return false;
    for (const auto& w : cert.tails)
        if (w.sign() < 0) return false;

    // lambda0 * (3a - sum b)
    LinearForm sum = Rational(3) * cert.lambda0 * LinearForm::symbol_a();
    for (std::size_t i = 1; i <= 13; ++i) sum -= cert.lambda0 * LinearForm::symbol_b(i);
    // chain differences a-b1, b1-b2, ..., b12-b13
    for (std::size_t k = 0; k < 13; ++k) {
        LinearForm hi = k == 0 ? LinearForm::symbol_a() : LinearForm::symbol_b(k);
        LinearForm lo = LinearForm::symbol_b(k + 1);
        sum += cert.chain[k] * (hi - lo);
    }
    // tails b_i >= 0
    for (std::size_t i = 1; i <= 13; ++i) sum += cert.tails[i - 1] * LinearForm::symbol_b(i);
    return sum == L;
}

PositivityCertificate park_certificate() {
    PositivityCertificate cert;
    cert.lambda0 = Rational(18, 7);
    cert.chain.fill(Rational(0));
    cert.tails.fill(Rational(0));
    cert.chain[2] = Rational(2, 7);  // weight on b2 - b3
    cert.tails[4] = Rational(2, 7);  // b5
    cert.tails[5] = Rational(1, 7);  // b6
    cert.tails[7] = Rational(1, 7);  // b8
    cert.tails[8] = Rational(2, 7);  // b9
    for (std::size_t i = 9; i < 13; ++i) cert.tails[i] = Rational(13, 7);  // b10..b13
    return cert;
}

forms::FormInvariants blowdown_bookkeeping(const forms::FormInvariants& before, long p) {
    if (p < 2) throw InputError("C_p requires p >= 2");
    const std::size_t removed = static_cast<std::size_t>(p - 1);
    // The complement must keep at least one negative class.
    if (before.b2_minus <= removed)
        throw InputError("not enough negative classes to remove the configuration");
    forms::FormInvariants after;
    after.b2_plus = before.b2_plus;
    after.b2_minus = before.b2_minus - removed;
    after.rank = after.b2_plus + after.b2_minus;
    after.signature = static_cast<long>(after.b2_plus) - static_cast<long>(after.b2_minus);
    if (after.signature % 8 == 0)
        throw NotDecided("parity after blowdown is not determined by the mod-8 constraint");
    after.parity = forms::Parity::odd;
    long rk = static_cast<long>(after.rank);
    after.definiteness = after.signature == rk    ? forms::Definiteness::positive
                         : after.signature == -rk ? forms::Definiteness::negative
                                                  : forms::Definiteness::indefinite;
    // Sign of the determinant of a diagonalized unimodular representative.
    after.det = after.b2_minus % 2 == 0 ? 1 : -1;
    return after;
}

Park7Report run_park7() {
    Park7Report rep{build_c7_embedding(),
                    {},
                    {},
                    LinearForm(),
                    LinearForm(),
                    false,
                    forms::FormInvariants{},
                    forms::FormInvariants{},
                    false,
                    false,
                    ""};
    h2::H2Class K = h2::canonical_class(13);
    rep.k_restriction = restrict_class(K, rep.embedding);
    rep.omega_restriction = restrict_omega(rep.embedding);
    rep.config_pairing = pair_in_config(rep.k_restriction, rep.omega_restriction, rep.embedding);
    rep.blowdown = blowdown_pairing(rep.embedding);
    rep.certificate_ok = verify_certificate(rep.blowdown, park_certificate());

    // E(1) # 4 CP^2-bar: (b2+, b2-) = (1, 13), sigma = -12, chi = 16.
    rep.before.rank = 14;
    rep.before.b2_plus = 1;
    rep.before.b2_minus = 13;
    rep.before.signature = -12;
    rep.before.parity = forms::Parity::odd;
    rep.before.definiteness = forms::Definiteness::indefinite;
    rep.before.det = -1;
    rep.wu_ok = h2::wu_check(K, -12, 16);

    rep.after = blowdown_bookkeeping(rep.before, 7);
    forms::FormInvariants standard =
        forms::invariants(forms::builtin_form("diag(1,-1^7)"));
    rep.freedman_ok = forms::freedman_homeomorphic(rep.after, standard, true);
    rep.signature_note =
        "signature reported as b2+ - b2- = -6; conventions with the opposite "
        "sign list 6; both sides of the gate use the same convention";
    return rep;
}

}  // namespace rbd::park
