#include "rbd/mcg.hpp"

#include <cctype>
#include <deque>
#include <sstream>

#include "json.hpp"
#include "rbd/builtin_data.hpp"

namespace rbd::mcg {

void McgWord::append(char gen, long exp) {
    if (exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == gen) {
        letters_.back().exp += exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return;
    }
    letters_.push_back({gen, exp});
}

McgWord McgWord::generator(char g, long exp) {
    if (g != 'a' && g != 'b') throw InputError("generators are a and b");
    McgWord w;
    w.append(g, exp);
    return w;
}

std::size_t McgWord::length() const {
    std::size_t n = 0;
    for (const auto& l : letters_) n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
    return n;
}

McgWord McgWord::inverse() const {
    McgWord w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.append(it->gen, -it->exp);
    return w;
}

McgWord operator*(const McgWord& u, const McgWord& v) {
    McgWord w = u;
    for (const auto& l : v.letters_) w.append(l.gen, l.exp);
    return w;
}

McgWord McgWord::pow(long n) const {
    McgWord base = n < 0 ? inverse() : *this;
    long k = n < 0 ? -n : n;
    McgWord out;
    for (long i = 0; i < k; ++i) out = out * base;
    return out;
}

std::string McgWord::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& l : letters_) {
        if (!first) os << " ";
        os << l.gen;
        if (l.exp != 1) os << "^" << l.exp;
        first = false;
    }
    return os.str();
}

McgWord free_reduce(const McgWord& w) { return w; }

namespace {

class WordParser {
public:
    explicit WordParser(const std::string& s) : s_(s) {}

    McgWord run() {
        McgWord w = word();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("word syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    long read_exponent() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected exponent");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return neg ? -v : v;
    }

    McgWord word() {
        McgWord w;
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] == ')') return w;
            char c = s_[pos_];
            McgWord atom;
            if (c == '(') {
                ++pos_;
                atom = word();
                skip_ws();
                if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
                ++pos_;
            } else if (c == 'a' || c == 'b') {
                atom = McgWord::generator(c);
                ++pos_;
            } else if (c == 'A' || c == 'B') {
                atom = McgWord::generator(static_cast<char>(std::tolower(c)), -1);
                ++pos_;
            } else {
                fail("expected a, b, A, B or '('");
            }
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                atom = atom.pow(read_exponent());
            }
            w = w * atom;
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

McgWord McgWord::parse(const std::string& text) { return WordParser(text).run(); }

SL2Mat operator*(const SL2Mat& x, const SL2Mat& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::string SL2Mat::str() const {
    return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() + "]]";
}

namespace {

SL2Mat gen_power(char g, long e) {
    if (g == 'a') return {1, Integer(e), 0, 1};
    // b^e = [[1,0],[-e,1]]
    return {1, 0, Integer(-e), 1};
}

}  // namespace

SL2Mat evaluate(const McgWord& w) {
    SL2Mat m = SL2Mat::identity();
    for (const auto& l : w.letters()) m = m * gen_power(l.gen, l.exp);
    return m;
}

// --- catalogue -------------------------------------------------------------

long euler(const FiberType& t) {
    switch (t.kind) {
        case FiberKind::I: return t.n;
        case FiberKind::II: return 2;
        case FiberKind::III: return 3;
        case FiberKind::IV: return 4;
        case FiberKind::Istar: return t.n + 6;
        case FiberKind::E8t: return 10;
        case FiberKind::E7t: return 9;
        case FiberKind::E6t: return 8;
    }
    throw Error("unreachable");
}

McgWord monodromy_word(const FiberType& t) {
    const McgWord a = McgWord::generator('a');
    const McgWord b = McgWord::generator('b');
    switch (t.kind) {
        case FiberKind::I: return a.pow(t.n);
        case FiberKind::II: return b * a;
        case FiberKind::III: return a * b * a;
        case FiberKind::IV: return (b * a).pow(2);
        case FiberKind::Istar: return (a * b).pow(3) * a.pow(t.n);
        case FiberKind::E8t: return (b * a).pow(5);
        case FiberKind::E7t: return (b * a).pow(4) * b;
        case FiberKind::E6t: return (b * a).pow(4);
    }
    throw Error("unreachable");
}

SL2Mat monodromy_matrix(const FiberType& t) { return evaluate(monodromy_word(t)); }

std::string name(const FiberType& t) {
    switch (t.kind) {
        case FiberKind::I: return "I" + std::to_string(t.n);
        case FiberKind::II: return "II";
        case FiberKind::III: return "III";
        case FiberKind::IV: return "IV";
        case FiberKind::Istar: return "I" + std::to_string(t.n) + "*";
        case FiberKind::E8t: return "E8~";
        case FiberKind::E7t: return "E7~";
        case FiberKind::E6t: return "E6~";
    }
    throw Error("unreachable");
}

FiberType parse_fiber(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') s += c;
    if (s == "II") return {FiberKind::II};
    if (s == "III") return {FiberKind::III};
    if (s == "IV") return {FiberKind::IV};
    if (s == "II*" || s == "E8~") return {FiberKind::E8t};
    if (s == "III*" || s == "E7~") return {FiberKind::E7t};
    if (s == "IV*" || s == "E6~") return {FiberKind::E6t};
    if (!s.empty() && s[0] == 'I') {
        bool star = !s.empty() && s.back() == '*';
        std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        if (!digits.empty() &&
            digits.find_first_not_of("0123456789") == std::string::npos) {
            long n = std::stol(digits);
            return star ? FiberType{FiberKind::Istar, n} : FiberType{FiberKind::I, n};
        }
    }
    throw InputError("unknown fibre type: " + text);
}

EulerBudget euler_budget(const std::vector<FiberType>& config) {
    EulerBudget b;
    for (const auto& t : config) b.total += euler(t);
    b.accept = b.total == 12;
    return b;
}

// --- factorization verification ---------------------------------------------

Factorization Factorization::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("factors"))
        throw InputError("factorization: expected {\"factors\": [...]}");
    Factorization f;
    for (const auto& jf : j["factors"]) {
        Factor factor;
        factor.word = McgWord::parse(jf.at("word").get<std::string>());
        factor.type = parse_fiber(jf.at("type").get<std::string>());
        if (jf.contains("witness"))
            factor.witness = McgWord::parse(jf["witness"].get<std::string>());
        f.factors.push_back(std::move(factor));
    }
    return f;
}

std::string to_string(ConjugacyStatus s) {
    switch (s) {
        case ConjugacyStatus::verified_witness: return "verified-by-witness";
        case ConjugacyStatus::verified_search: return "verified-by-search";
        case ConjugacyStatus::unknown: return "unknown";
        case ConjugacyStatus::failed: return "failed";
    }
    throw Error("unreachable");
}

bool FactorizationReport::all_verified() const {
    if (!product_identity || !euler_ok) return false;
    for (const auto& f : factors)
        if (f.conjugacy != ConjugacyStatus::verified_witness &&
            f.conjugacy != ConjugacyStatus::verified_search)
            return false;
    return true;
}

namespace {

// Breadth-first search over freely reduced conjugator words g with
// g * F * g^-1 = M, up to the given letter count.
std::optional<McgWord> search_conjugator(const SL2Mat& factor, const SL2Mat& target,
                                         std::size_t bound) {
    std::deque<McgWord> queue{McgWord()};
    while (!queue.empty()) {
        McgWord g = queue.front();
        queue.pop_front();
        SL2Mat gm = evaluate(g);
        if (gm * factor * gm.inverse() == target) return g;
        if (g.length() >= bound) continue;
        for (char gen : {'a', 'b'})
            for (long e : {1L, -1L}) {
                McgWord next = g * McgWord::generator(gen, e);
                if (next.length() > g.length()) queue.push_back(next);
            }
    }
    return std::nullopt;
}

}  // namespace

FactorizationReport verify_factorization(const Factorization& f, std::size_t search_bound) {
    FactorizationReport rep;
    SL2Mat prod = SL2Mat::identity();
    std::vector<FiberType> config;
    for (const auto& factor : f.factors) {
        prod = prod * evaluate(factor.word);
        config.push_back(factor.type);

        FactorReport fr;
        SL2Mat fm = evaluate(factor.word);
        SL2Mat target = monodromy_matrix(factor.type);
        fr.trace_ok = fm.trace() == target.trace();
        if (!fr.trace_ok) {
            fr.conjugacy = ConjugacyStatus::failed;
        } else {
            bool witness_ok = false;
            if (factor.witness) {
                SL2Mat w = evaluate(*factor.witness);
                witness_ok = w * fm * w.inverse() == target;
            }
            if (witness_ok) {
                fr.conjugacy = ConjugacyStatus::verified_witness;
                fr.conjugator = factor.witness;
            } else if (auto g = search_conjugator(fm, target, search_bound)) {
                fr.conjugacy = ConjugacyStatus::verified_search;
                fr.conjugator = g;
            } else {
                fr.conjugacy = ConjugacyStatus::unknown;
            }
        }
        rep.factors.push_back(std::move(fr));
    }
    rep.product_identity = prod == SL2Mat::identity();
    EulerBudget budget = euler_budget(config);
    rep.euler_total = budget.total;
    rep.euler_ok = budget.accept;
    return rep;
}

Factorization builtin_factorization(const std::string& name) {
    if (name == "e6") return Factorization::from_json_text(data::factorization_e6_fishtails);
    if (name == "i6") return Factorization::from_json_text(data::factorization_i6_fishtails);
    throw InputError("unknown built-in factorization: " + name);
}

}  // namespace rbd::mcg
