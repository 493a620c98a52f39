#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbd/rational.hpp"

namespace rbd::mcg {

// Word in the Dehn-twist generators a, b; adjacent letters always have
// distinct generators, so a word is freely reduced by construction.
class McgWord {
public:
    struct Letter {
        char gen;   // 'a' or 'b'
        long exp;   // nonzero
        friend bool operator==(const Letter&, const Letter&) = default;
    };

    McgWord() = default;
    static McgWord generator(char g, long exp = 1);

    // Grammar: letters a, b; inverses A, B or a^-1; parentheses; integer
    // powers. Whitespace ignored. Errors carry the offending position.
    static McgWord parse(const std::string& text);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const;  // total letter count, exponents unsigned

    McgWord inverse() const;
    friend McgWord operator*(const McgWord& u, const McgWord& v);
    McgWord pow(long n) const;
    friend bool operator==(const McgWord& a, const McgWord& b) = default;

    std::string str() const;

private:
    void append(char gen, long exp);
    std::vector<Letter> letters_;
};

// Words are stored freely reduced, so this is the identity; it exists so
// callers can state the reduction step explicitly.
McgWord free_reduce(const McgWord& w);

struct SL2Mat {
    Integer a{1}, b{0}, c{0}, d{1};

    static SL2Mat identity() { return {}; }
    SL2Mat inverse() const { return {d, -b, -c, a}; }
    Integer trace() const { return a + d; }
    friend SL2Mat operator*(const SL2Mat& x, const SL2Mat& y);
    friend bool operator==(const SL2Mat&, const SL2Mat&) = default;
    std::string str() const;
};

// phi(a) = [[1,1],[0,1]], phi(b) = [[1,0],[-1,1]]; group homomorphism.
SL2Mat evaluate(const McgWord& w);

// --- Kodaira fibre catalogue -------------------------------------------

enum class FiberKind { I, II, III, IV, Istar, E8t, E7t, E6t };

struct FiberType {
    FiberKind kind;
    long n = 0;  // for I_n (n >= 0) and I*_n (n >= 0); I_0 is the generic torus

    friend bool operator==(const FiberType&, const FiberType&) = default;
};

long euler(const FiberType& t);
McgWord monodromy_word(const FiberType& t);
SL2Mat monodromy_matrix(const FiberType& t);
std::string name(const FiberType& t);
// Accepts I0, I1, ..., II, III, IV, I0*, In*, II*, III*, IV*, E8~, E7~, E6~.
FiberType parse_fiber(const std::string& text);

struct EulerBudget {
    long total = 0;
    bool accept = false;  // exactly 12 for a fibration on E(1)
};
EulerBudget euler_budget(const std::vector<FiberType>& config);

// --- factorization verification -----------------------------------------

struct Factor {
    McgWord word;
    FiberType type;
    std::optional<McgWord> witness;  // w with  w * factor * w^-1 = monodromy
};

struct Factorization {
    std::vector<Factor> factors;
    static Factorization from_json_text(const std::string& text);
};

enum class ConjugacyStatus { verified_witness, verified_search, unknown, failed };
std::string to_string(ConjugacyStatus s);

struct FactorReport {
    bool trace_ok = false;
    ConjugacyStatus conjugacy = ConjugacyStatus::unknown;
    std::optional<McgWord> conjugator;
};

struct FactorizationReport {
    bool product_identity = false;
    std::vector<FactorReport> factors;
    long euler_total = 0;
    bool euler_ok = false;

    bool all_verified() const;
    // An exhausted search is reported as unknown, never as failure; these
    // are necessary conditions for a fibration, not sufficient ones.
    static constexpr const char* caveat =
        "a correct budget and factorization certify necessary conditions only";
};

FactorizationReport verify_factorization(const Factorization& f, std::size_t search_bound = 6);

Factorization builtin_factorization(const std::string& name);  // "e6" or "i6"

}  // namespace rbd::mcg
