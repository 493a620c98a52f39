#include "doctest.h"

#include "rbd/forms.hpp"

using namespace rbd;
using namespace rbd::forms;

TEST_CASE("invariants of the catalogue forms") {
    auto e8 = builtin_form("E8-");
    auto inv = invariants(e8);
    CHECK(inv.rank == 8);
    CHECK(inv.signature == -8);
    CHECK(inv.b2_plus == 0);
    CHECK(inv.b2_minus == 8);
    CHECK(inv.parity == Parity::even);
    CHECK(inv.definiteness == Definiteness::negative);
    CHECK(inv.det == 1);
    CHECK(e8.is_unimodular());

    auto h = invariants(builtin_form("H"));
    CHECK(h.rank == 2);
    CHECK(h.signature == 0);
    CHECK(h.parity == Parity::even);
    CHECK(h.definiteness == Definiteness::indefinite);
    CHECK(h.det == -1);

    auto one = invariants(builtin_form("<1>"));
    CHECK(one.rank == 1);
    CHECK(one.signature == 1);
    CHECK(one.parity == Parity::odd);
    CHECK(one.definiteness == Definiteness::positive);

    CHECK_THROWS_AS((SymForm(ExactMatrix{{0, 1}, {2, 0}})), InputError);
    CHECK_THROWS_AS((invariants(SymForm(ExactMatrix{{1, 1}, {1, 1}}))), InputError);
}

TEST_CASE("direct sum and negation behave additively") {
    auto e8 = builtin_form("E8-");
    auto sum = invariants(e8.direct_sum(builtin_form("H")));
    CHECK(sum.rank == 10);
    CHECK(sum.signature == -8);
    CHECK(sum.parity == Parity::even);

    auto neg = invariants(e8.negated());
    CHECK(neg.signature == 8);
    CHECK(neg.parity == Parity::even);

    auto mixed = invariants(builtin_form("H").direct_sum(builtin_form("<1>")));
    CHECK(mixed.parity == Parity::odd);
}

TEST_CASE("indefinite classification") {
    auto x7 = builtin_form("diag(1,-1^7)");
    CHECK(indefinite_equivalent(x7, x7));

    // H and <1> + <-1>: same rank and signature, parities differ
    auto h = builtin_form("H");
    auto odd2 = SymForm(ExactMatrix{{1, 0}, {0, -1}});
    CHECK(!indefinite_equivalent(h, odd2));

    auto one = builtin_form("<1>");
    CHECK_THROWS_AS(indefinite_equivalent(one, one), InputError);
    CHECK_THROWS_AS(indefinite_equivalent(SymForm(ExactMatrix{{2}}), h), InputError);
}

TEST_CASE("homeomorphism gate") {
    auto x7 = builtin_form("diag(1,-1^7)");
    CHECK(freedman_homeomorphic(x7, x7, true));
    CHECK(!freedman_homeomorphic(x7, x7, false));

    // rank mismatch: the E(1) form against diag(1,-1^8)
    auto e1 = builtin_form("diag(1,-1^9)");
    auto cp8 = builtin_form("diag(1,-1^8)");
    CHECK(!freedman_homeomorphic(e1, cp8, true));

    auto one = builtin_form("<1>");
    CHECK(freedman_homeomorphic(one, one, true));
    auto e8 = builtin_form("E8-");
    CHECK_THROWS_AS(freedman_homeomorphic(e8, e8, true), NotDecided);

    // invariant-level gate
    auto a = invariants(x7);
    FormInvariants b = a;
    CHECK(freedman_homeomorphic(a, b, true));
    b.signature = -4;
    CHECK(!freedman_homeomorphic(a, b, true));
}

TEST_CASE("characteristic elements") {
    // (-3, 1, ..., 1) in diag(1, -1^13)
    auto q = builtin_form("diag(1,-1^13)");
    std::vector<Integer> k(14, 1);
    k[0] = -3;
    CHECK(is_characteristic(k, q));

    std::vector<Integer> zero8(8, 0);
    CHECK(is_characteristic(zero8, builtin_form("E8-")));

    std::vector<Integer> zero1(1, 0);
    CHECK(!is_characteristic(zero1, builtin_form("<1>")));

    CHECK_THROWS_AS(is_characteristic(zero1, q), InputError);
}

TEST_CASE("characteristic vectors satisfy the mod-8 congruence on small forms") {
    // every characteristic vector found by search on rank <= 4 forms
    std::vector<SymForm> small = {
        builtin_form("<1>"), builtin_form("H"), SymForm(ExactMatrix{{1, 0}, {0, -1}}),
        builtin_form("diag(1,-1^3)"), SymForm(ExactMatrix{{2, 1}, {1, 1}})};
    for (const auto& q : small) {
        auto inv = invariants(q);
        const std::size_t n = q.rank();
        std::vector<Integer> x(n, -3);
        // exhaustive box search over entries in [-3, 3]
        auto advance = [&]() {
            for (std::size_t i = 0; i < n; ++i) {
                if (x[i] < 3) { ++x[i]; return true; }
                x[i] = -3;
            }
            return false;
        };
        std::size_t found = 0;
        do {
            if (!is_characteristic(x, q)) continue;
            ++found;
            Integer qxx = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    qxx += x[i] * q.matrix().at(i, j).to_integer() * x[j];
            Integer res = (qxx - inv.signature) % 8;
            CHECK(sgn(res) == 0);
        } while (advance());
        CHECK(found > 0);
    }
}

TEST_CASE("smoothability obstructions") {
    auto rep = smoothability_obstructions(builtin_form("E8-"));
    CHECK(rep.rohlin_applicable);
    CHECK(!rep.rohlin_pass);  // signature -8 is not divisible by 16
    CHECK(rep.mod8_holds);

    auto e8e8 = builtin_form("E8-").direct_sum(builtin_form("E8-"));
    auto rep2 = smoothability_obstructions(e8e8);
    CHECK(rep2.rohlin_applicable);
    CHECK(rep2.rohlin_pass);  // signature -16

    auto rep3 = smoothability_obstructions(builtin_form("<1>"));
    CHECK(!rep3.rohlin_applicable);  // odd form
}
