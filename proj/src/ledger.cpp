#include "rbd/ledger.hpp"

#include "json.hpp"
#include "rbd/builtin_data.hpp"

namespace rbd::h2 {

Ledger Ledger::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("ledger: invalid JSON");
    Ledger led;
    led.name = j.value("name", "");
    led.start_ambient = j.value("start_ambient", 0u);
    if (!j.contains("steps") || !j["steps"].is_array())
        throw InputError("ledger: missing steps array");
    std::size_t ambient = led.start_ambient;
    for (const auto& js : j["steps"]) {
        ++ambient;
        LedgerStep step;
        step.note = js.value("note", "");
        step.new_exceptional = js.value("new_exceptional", 0u);
        if (step.new_exceptional == 0 || step.new_exceptional > ambient)
            throw InputError("ledger: bad new_exceptional index");
        step.fiber = H2Class::parse(js.at("fiber").get<std::string>(), ambient);
        for (const auto& jc : js.at("components")) {
            H2Class cls = H2Class::parse(jc.at(0).get<std::string>(), ambient);
            long mult = jc.at(1).get<long>();
            if (mult <= 0) throw InputError("ledger: component multiplicities must be positive");
            step.components.emplace_back(std::move(cls), mult);
        }
        led.steps.push_back(std::move(step));
    }
    return led;
}

long exceptional_multiplicity(const LedgerStep& step) {
    const std::size_t n = step.fiber.ambient();
    H2Class residual = step.fiber;
    for (const auto& [cls, mult] : step.components) {
        if (cls.ambient() != n) throw InputError("ledger: component ambient mismatch");
        residual = residual - Rational(mult) * cls;
    }
    // residual must be exactly m * e_new
    if (!residual.h().is_zero())
        throw InputError("ledger inconsistency: h-coefficient does not balance");
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == step.new_exceptional) continue;
        if (!residual.e(i).is_zero())
            throw InputError("ledger inconsistency: e" + std::to_string(i) +
                             " does not balance");
    }
    Rational m = residual.e(step.new_exceptional);
    if (!m.is_integer() || m.sign() < 0)
        throw InputError("ledger inconsistency: multiplicity " + m.str() +
                         " is not a non-negative integer");
    return static_cast<long>(m.to_integer().get_si());
}

LedgerResult replay(const Ledger& ledger) {
    if (ledger.steps.empty()) throw InputError("ledger has no steps");
    LedgerResult res;
    res.name = ledger.name;
    for (const auto& step : ledger.steps)
        res.multiplicities.push_back(exceptional_multiplicity(step));

    const LedgerStep& last = ledger.steps.back();
    res.final_fiber = last.fiber;
    res.final_fiber_square = pair(last.fiber, last.fiber);
    res.final_components = last.components;
    long m_last = res.multiplicities.back();
    if (m_last > 0)
        res.final_components.emplace_back(
            basis_e(last.fiber.ambient(), last.new_exceptional), m_last);
    for (std::size_t k = 0; k < ledger.steps.size(); ++k)
        if (res.multiplicities[k] == 0)
            res.sections.push_back(ledger.steps[k].new_exceptional);

    std::vector<H2Class> comps;
    for (auto& [cls, mult] : res.final_components) {
        H2Class lifted = cls;
        while (lifted.ambient() < last.fiber.ambient()) lifted = blow_up(lifted);
        comps.push_back(lifted);
    }
    res.component_gram = gram(comps);
    return res;
}

Ledger builtin_ledger(const std::string& name) {
    if (name == "e8") return Ledger::from_json_text(data::e8_ledger);
    if (name == "e6") return Ledger::from_json_text(data::e6_ledger);
    throw InputError("unknown built-in ledger: " + name);
}

}  // namespace rbd::h2
