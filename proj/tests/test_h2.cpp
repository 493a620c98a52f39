#include "doctest.h"

#include "rbd/ledger.hpp"

using namespace rbd;
using namespace rbd::h2;

TEST_CASE("class literals and printing") {
    auto s = H2Class::parse("12h + e9 - 4(e1..e9) - 2(e10..e13)", 13);
    CHECK(s.h() == Rational(12));
    CHECK(s.e(9) == Rational(-3));  // +1 - 4
    CHECK(s.e(1) == Rational(-4));
    CHECK(s.e(10) == Rational(-2));
    CHECK(H2Class::parse(s.str(), 13) == s);

    auto k = H2Class::parse("3h - e1 - 2e10", 10);
    CHECK(k.e(10) == Rational(-2));
    CHECK_THROWS_AS(H2Class::parse("e3", 2), InputError);
    CHECK_THROWS_AS(H2Class::parse("", 2), InputError);
    CHECK_THROWS_AS(H2Class::parse("3h - (e2..e1)", 4), InputError);
    CHECK(H2Class::parse("1/2 h + 1/3 e1", 1).is_integral() == false);
}

TEST_CASE("pairing values") {
    auto a = H2Class::parse("3h - e1", 1);
    auto b = H2Class::parse("h - e1", 1);
    CHECK(pair(a, b) == Rational(2));

    auto s = H2Class::parse("12h + e9 - 4(e1..e9) - 2(e10..e13)", 13);
    CHECK(pair(s, s) == Rational(-9));

    auto h0 = basis_h(0);
    CHECK(pair(h0, h0) == Rational(1));

    CHECK_THROWS_AS(pair(basis_h(1), basis_h(2)), InputError);
}

TEST_CASE("blow-up and proper transform") {
    auto h = basis_h(0);
    auto h1 = blow_up(h);
    CHECK(h1.ambient() == 1);
    CHECK(pair(h1, h1) == Rational(1));

    auto e1 = basis_e(1, 1);
    auto e1_lift = blow_up(e1);
    CHECK(pair(e1_lift, basis_e(2, 2)) == Rational(0));

    // canonical class bookkeeping across a blow-up
    auto k9 = canonical_class(9);
    auto k10 = blow_up(k9) + basis_e(10, 10);
    CHECK(k10 == canonical_class(10));
    CHECK(wu_check(canonical_class(9), -8, 12));
    CHECK(wu_check(canonical_class(0), 1, 3));
    CHECK(wu_check(canonical_class(13), -12, 16));

    CHECK(proper_transform(blow_up(H2Class::parse("3h", 0)), 1) == H2Class::parse("3h - e1", 1));
    CHECK(proper_transform(blow_up(H2Class::parse("h", 0)), 1) == H2Class::parse("h - e1", 1));
    auto f10 = blow_up(fiber_class(9));
    CHECK(proper_transform(f10, 2) == H2Class::parse("3h - (e1..e9) - 2e10", 10));
    CHECK_THROWS_AS(proper_transform(f10, -1), InputError);
}

TEST_CASE("wu identity on blown-up planes") {
    // K^2 = 9 - n, sigma = 1 - n, chi = 3 + n
    for (std::size_t n = 0; n <= 13; ++n) {
        auto k = canonical_class(n);
        long sigma = 1 - static_cast<long>(n);
        long chi = 3 + static_cast<long>(n);
        CHECK(pair(k, k) == Rational(9 - static_cast<long>(n)));
        CHECK(wu_check(k, sigma, chi));
    }
}

TEST_CASE("single-step multiplicity solving") {
    LedgerStep step;
    step.fiber = H2Class::parse("3h - e1", 1);
    step.components = {{H2Class::parse("h - e1", 1), 3}};
    step.new_exceptional = 1;
    CHECK(exceptional_multiplicity(step) == 2);

    // inconsistent ledger: wrong multiplicity upstream
    LedgerStep bad;
    bad.fiber = H2Class::parse("3h - e1 - e2", 2);
    bad.components = {{H2Class::parse("h - e1 - e2", 2), 3},
                      {H2Class::parse("e1 - e2", 2), 1}};
    bad.new_exceptional = 2;
    CHECK_THROWS_AS(exceptional_multiplicity(bad), InputError);
}

TEST_CASE("ledger replays") {
    auto e8 = replay(builtin_ledger("e8"));
    CHECK(e8.multiplicities == std::vector<long>{2, 4, 6, 5, 4, 3, 2, 1, 0});
    CHECK(e8.final_fiber_square == Rational(0));
    CHECK(e8.final_fiber == fiber_class(9));
    REQUIRE(e8.final_components.size() == 9);
    for (const auto& [cls, mult] : e8.final_components) CHECK(pair(cls, cls) == Rational(-2));
    CHECK(e8.sections == std::vector<std::size_t>{9});
    // the component gram is the extended diagram: all -2 diagonal, edges 1
    const auto& g = e8.component_gram;
    std::size_t edges = 0;
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(g.at(i, i) == Rational(-2));
        for (std::size_t j = i + 1; j < 9; ++j) {
            bool zero_or_one = g.at(i, j) == Rational(0) || g.at(i, j) == Rational(1);
            CHECK(zero_or_one);
            if (g.at(i, j) == Rational(1)) ++edges;
        }
    }
    CHECK(edges == 8);  // tree with 9 vertices

    auto e6 = replay(builtin_ledger("e6"));
    CHECK(e6.multiplicities == std::vector<long>{2, 2, 2, 1, 1, 1, 0, 0, 0});
    CHECK(e6.sections == std::vector<std::size_t>{7, 8, 9});
    REQUIRE(e6.final_components.size() == 7);
    // the seven spheres, with their fibre multiplicities
    std::vector<std::pair<std::string, long>> expected = {
        {"e4 - e7", 1}, {"e1 - e4", 2}, {"h - e1 - e2 - e3", 3}, {"e2 - e5", 2},
        {"e5 - e9", 1}, {"e3 - e6", 2}, {"e6 - e8", 1}};
    for (const auto& [lit, mult] : expected) {
        auto cls = H2Class::parse(lit, 9);
        bool found = false;
        for (const auto& [c, m] : e6.final_components)
            if (c == cls && m == mult) found = true;
        CHECK_MESSAGE(found, lit);
        CHECK(pair(cls, cls) == Rational(-2));
    }
    // conservation: sum mult * class = fiber class
    H2Class total(9);
    for (const auto& [c, m] : e6.final_components) total = total + Rational(m) * c;
    CHECK(total == e6.final_fiber);
}

TEST_CASE("ledger JSON loading and a positive final multiplicity") {
    const char* text = R"({
        "name": "mini",
        "start_ambient": 0,
        "steps": [
            {"fiber": "3h - e1", "components": [["h - e1", 3]], "new_exceptional": 1}
        ]
    })";
    auto res = replay(Ledger::from_json_text(text));
    CHECK(res.multiplicities == std::vector<long>{2});
    // the solved exceptional joins the final member with its multiplicity
    REQUIRE(res.final_components.size() == 2);
    CHECK(res.final_components[1].first == basis_e(1, 1));
    CHECK(res.final_components[1].second == 2);
    CHECK(res.sections.empty());

    CHECK_THROWS_AS(Ledger::from_json_text("not json"), InputError);
    CHECK_THROWS_AS(Ledger::from_json_text(R"({"steps": [
        {"fiber": "3h - e1", "components": [["h - e1", 0]], "new_exceptional": 1}
    ]})"),
                    InputError);
    CHECK_THROWS_AS(Ledger::from_json_text(R"({"steps": [
        {"fiber": "3h - e1", "components": [["h - e1", 3]], "new_exceptional": 2}
    ]})"),
                    InputError);
}

TEST_CASE("gram matrices") {
    std::vector<H2Class> chain;
    for (const char* lit : {"e4 - e7", "e1 - e4", "h - e1 - e2 - e3", "e2 - e5", "e5 - e9"})
        chain.push_back(H2Class::parse(lit, 9));
    auto g = gram(chain);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(g.at(i, i) == Rational(-2));
        if (i + 1 < 5) CHECK(g.at(i, i + 1) == Rational(1));
    }
    CHECK(g.at(0, 2) == Rational(0));
    CHECK(gram({basis_h(0)}) == ExactMatrix{{1}});
}
