#pragma once

#include <string>
#include <vector>

#include "rbd/h2.hpp"

namespace rbd::h2 {

// One blow-up in a pencil construction. The components are the pieces of the
// degenerate pencil member after this blow-up, with their multiplicities;
// the newest exceptional class's multiplicity is left to the solver.
struct LedgerStep {
    std::string note;
    H2Class fiber;                                     // class of every member
    std::vector<std::pair<H2Class, long>> components;  // (class, multiplicity)
    std::size_t new_exceptional = 0;                   // 1-based e-index
};

struct Ledger {
    std::string name;
    std::size_t start_ambient = 0;
    std::vector<LedgerStep> steps;

    static Ledger from_json_text(const std::string& text);
};

// Solves m in  sum_i mult_i * class_i + m * e_new = fiber,  coefficient-wise.
// Throws InputError when no non-negative integer m is consistent.
long exceptional_multiplicity(const LedgerStep& step);

struct LedgerResult {
    std::string name;
    std::vector<long> multiplicities;                  // one per step
    H2Class final_fiber;
    Rational final_fiber_square;
    std::vector<std::pair<H2Class, long>> final_components;
    std::vector<std::size_t> sections;                 // exceptionals of multiplicity 0
    ExactMatrix component_gram;
};

// Replays every step, verifying multiplicity conservation exactly.
LedgerResult replay(const Ledger& ledger);

Ledger builtin_ledger(const std::string& name);  // "e8" or "e6"

}  // namespace rbd::h2
