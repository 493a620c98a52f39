#include "rbd/cli.hpp"

#include <algorithm>
#include <functional>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rbd/builtin_data.hpp"
#include "rbd/forms.hpp"
#include "rbd/ledger.hpp"
#include "rbd/mcg.hpp"
#include "rbd/park7.hpp"
#include "rbd/pencil.hpp"
#include "rbd/plumbing.hpp"

namespace rbd::cli {

namespace {

using nlohmann::json;

json rational_json(const Rational& r) {
    if (r.is_integer() && mpz_fits_slong_p(r.num().get_mpz_t()))
        return json(r.num().get_si());
    return json(r.str());
}

json matrix_json(const ExactMatrix& m) {
    return json::parse(m.to_json_text());
}

json invariants_json(const forms::FormInvariants& inv) {
    return json{{"rank", inv.rank},
                {"signature", inv.signature},
                {"b2_plus", inv.b2_plus},
                {"b2_minus", inv.b2_minus},
                {"parity", forms::to_string(inv.parity)},
                {"definiteness", forms::to_string(inv.definiteness)},
                {"det", inv.det.get_str()}};
}

// Named built-in matrices for the form commands.
ExactMatrix resolve_form_matrix(const std::string& text) {
    if (!text.empty() && text[0] == '@') {
        std::string name = text.substr(1);
        if (name == "e8minus") return forms::builtin_form("E8-").matrix();
        if (name == "h") return forms::builtin_form("H").matrix();
        if (name == "one") return forms::builtin_form("<1>").matrix();
        if (name == "x7" || name == "cp2_7bar")
            return forms::builtin_form("diag(1,-1^7)").matrix();
        return forms::builtin_form(name).matrix();
    }
    return ExactMatrix::from_json_text(text);
}

std::vector<long> parse_framings(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stol(tok));
    }
    if (out.empty()) throw InputError("empty framing list");
    return out;
}

struct Emitter {
    bool pretty = false;
    std::ostream& out;

    void report(const std::string& command, json inputs, json results,
                std::vector<std::string> anchors) const {
        json rep{{"command", command},
                 {"inputs", std::move(inputs)},
                 {"results", std::move(results)},
                 {"anchors", std::move(anchors)}};
        out << (pretty ? rep.dump(2) : rep.dump()) << "\n";
    }
};

json member_analysis_json(const pencil::MemberAnalysis& a) {
    json points = json::array();
    for (const auto& sp : a.points)
        points.push_back(json{{"point", sp.point.str()}, {"type", pencil::to_string(sp.type)}});
    json unresolved = json::array();
    for (const auto& e : a.unresolved) unresolved.push_back(e.str());
    const char* status = a.status == pencil::MemberStatus::smooth        ? "smooth"
                         : a.status == pencil::MemberStatus::degenerate ? "degenerate-member"
                                                                        : "isolated";
    return json{{"status", status}, {"points", points}, {"unresolved", unresolved}};
}

json factorization_report_json(const mcg::Factorization& f, const mcg::FactorizationReport& rep) {
    json factors = json::array();
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        json jf{{"word", f.factors[i].word.str()},
                {"type", mcg::name(f.factors[i].type)},
                {"euler", mcg::euler(f.factors[i].type)},
                {"trace_ok", rep.factors[i].trace_ok},
                {"conjugacy", mcg::to_string(rep.factors[i].conjugacy)}};
        if (rep.factors[i].conjugator)
            jf["conjugator"] = rep.factors[i].conjugator->str();
        factors.push_back(std::move(jf));
    }
    return json{{"product_identity", rep.product_identity},
                {"factors", factors},
                {"euler_total", rep.euler_total},
                {"euler_ok", rep.euler_ok},
                {"all_verified", rep.all_verified()},
                {"note", mcg::FactorizationReport::caveat}};
}

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculator for intersection forms, plumbings, pencils and "
                 "rational blowdowns"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the JSON output");

    // form
    auto* form = app.add_subcommand("form", "intersection form invariants and gates");
    form->require_subcommand(1);
    std::string q_text, q1_text, q2_text;
    auto* form_inv = form->add_subcommand("invariants", "rank/signature/parity/definiteness");
    form_inv->add_option("--q", q_text, "matrix JSON or @name")->required();
    auto* form_freedman =
        form->add_subcommand("freedman", "homeomorphism gate for two forms");
    form_freedman->add_option("--q1", q1_text)->required();
    form_freedman->add_option("--q2", q2_text)->required();
    bool smooth = false;
    form_freedman->add_flag("--smooth", smooth, "assert both manifolds are smooth");
    auto* form_obstr = form->add_subcommand("obstructions", "smoothability obstructions");
    form_obstr->add_option("--q", q_text)->required();

    // chain
    auto* chain = app.add_subcommand("chain", "homology of a linear surgery chain");
    std::string framings_text;
    chain->add_option("--framings", framings_text, "comma-separated framings")->required();

    // hj
    auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung continued fraction of p/q");
    long hj_p = 0, hj_q = 0;
    hj->add_option("p", hj_p)->required();
    hj->add_option("q", hj_q)->required();

    // pencil
    auto* pen = app.add_subcommand("pencil", "cubic pencils in the projective plane");
    pen->require_subcommand(1);
    std::string p0_text, p1_text, pencil_name, f_text, point_text, line_text;
    auto add_pencil_opts = [&](CLI::App* cmd) {
        cmd->add_option("--p0", p0_text, "first cubic");
        cmd->add_option("--p1", p1_text, "second cubic");
        cmd->add_option("--pencil", pencil_name, "@e8pencil or @e6pencil");
    };
    auto* pen_sing = pen->add_subcommand("singular", "singular members and their points");
    add_pencil_opts(pen_sing);
    auto* pen_classify = pen->add_subcommand("classify", "node/cusp type of a singular point");
    pen_classify->add_option("--f", f_text, "cubic")->required();
    pen_classify->add_option("--point", point_text, "x,y,z with rational entries")->required();
    auto* pen_base = pen->add_subcommand("basepoints", "distinct base points along a line");
    add_pencil_opts(pen_base);
    pen_base->add_option("--line", line_text, "linear form with p0 = line^3");

    // mcg
    auto* mcg_cmd = app.add_subcommand("mcg", "torus mapping class group tools");
    mcg_cmd->require_subcommand(1);
    std::string word_text, factorization_text, fibers_text;
    std::size_t bound = 6;
    auto* mcg_eval = mcg_cmd->add_subcommand("eval", "evaluate a word in SL(2,Z)");
    mcg_eval->add_option("--word", word_text)->required();
    auto* mcg_reduce = mcg_cmd->add_subcommand("reduce", "freely reduce a word");
    mcg_reduce->add_option("--word", word_text)->required();
    auto* mcg_verify = mcg_cmd->add_subcommand("verify", "verify a monodromy factorization");
    mcg_verify->add_option("--factorization", factorization_text, "JSON file, @e6 or @i6")
        ->required();
    mcg_verify->add_option("--bound", bound, "conjugator search bound");
    auto* mcg_budget = mcg_cmd->add_subcommand("budget", "Euler budget of a fibre configuration");
    mcg_budget->add_option("--fibers", fibers_text, "comma-separated fibre types")->required();

    // ledger
    auto* ledger_cmd = app.add_subcommand("ledger", "blow-up multiplicity ledgers");
    ledger_cmd->require_subcommand(1);
    auto* ledger_replay = ledger_cmd->add_subcommand("replay", "replay and verify a ledger");
    std::string ledger_file, ledger_builtin;
    ledger_replay->add_option("--file", ledger_file, "ledger JSON file");
    ledger_replay->add_option("--builtin", ledger_builtin, "e8 or e6");

    // park7
    auto* park = app.add_subcommand("park7", "the C7 blowdown pipeline");
    park->require_subcommand(1);
    park->add_subcommand("report", "full configuration report");

    // Let the global --pretty flag appear after any subcommand.
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands({})) {
            sub->fallthrough();
            allow_fallthrough(sub);
        }
    };
    allow_fallthrough(&app);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    Emitter emit{pretty, out};

    if (form_inv->parsed()) {
        forms::SymForm q(resolve_form_matrix(q_text));
        emit.report("form invariants", json{{"q", q_text}},
                    json{{"invariants", invariants_json(forms::invariants(q))},
                         {"unimodular", q.is_unimodular()}},
                    {"form-invariants"});
        return 0;
    }
    if (form_freedman->parsed()) {
        forms::SymForm q1(resolve_form_matrix(q1_text));
        forms::SymForm q2(resolve_form_matrix(q2_text));
        bool verdict = forms::freedman_homeomorphic(q1, q2, smooth);
        emit.report("form freedman",
                    json{{"q1", q1_text}, {"q2", q2_text}, {"smooth", smooth}},
                    json{{"homeomorphic", verdict}}, {"homeomorphism-gate"});
        return verdict ? 0 : 1;
    }
    if (form_obstr->parsed()) {
        forms::SymForm q(resolve_form_matrix(q_text));
        auto rep = forms::smoothability_obstructions(q);
        json xs = json::array();
        for (const auto& v : rep.characteristic_vector) xs.push_back(v.get_str());
        emit.report("form obstructions", json{{"q", q_text}},
                    json{{"invariants", invariants_json(rep.invariants)},
                         {"rohlin_applicable", rep.rohlin_applicable},
                         {"rohlin_pass", rep.rohlin_pass},
                         {"characteristic_vector", xs},
                         {"mod8_holds", rep.mod8_holds}},
                    {"rohlin-divisibility", "characteristic-mod8"});
        return 0;
    }
    if (chain->parsed()) {
        auto framings = parse_framings(framings_text);
        auto pres = plumbing::chain_presentation(framings);
        auto group = plumbing::h1(pres);
        json orders = json::object();
        for (const auto& g : group.generators()) {
            auto ord = group.element_order(g);
            orders[g] = ord ? json(ord->get_str()) : json("infinite");
        }
        json factors = json::array();
        for (const auto& d : group.snf().invariant_factors) factors.push_back(d.get_str());
        json results{{"h1", group.structure()},
                     {"relation_matrix", matrix_json(group.relations())},
                     {"snf_factors", factors},
                     {"generator_orders", orders}};
        bool all_le_minus2 = std::all_of(framings.begin(), framings.end(),
                                         [](long f) { return f <= -2; });
        if (all_le_minus2)
            results["lens_boundary"] = plumbing::chain_boundary(framings).str();
        emit.report("chain", json{{"framings", framings_text}}, std::move(results),
                    {"chain-homology", "meridian-orders"});
        return 0;
    }
    if (hj->parsed()) {
        auto as = plumbing::hj_expand(Integer(hj_p), Integer(hj_q));
        json coeffs = json::array();
        for (const auto& a : as) coeffs.push_back(a.get_str());
        emit.report("hj", json{{"p", hj_p}, {"q", hj_q}},
                    json{{"expansion", coeffs},
                         {"value", plumbing::hj_evaluate(as).str()}},
                    {"hirzebruch-jung"});
        return 0;
    }

    auto make_pencil = [&]() -> pencil::CubicPencil {
        if (!pencil_name.empty()) {
            if (pencil_name == "@e8pencil")
                return pencil::CubicPencil(MPoly::parse("z^3"),
                                           MPoly::parse("z*y^2 - z*x^2 - x^3"));
            if (pencil_name == "@e6pencil")
                return pencil::CubicPencil(MPoly::parse("(y + 1/2*z)^3"),
                                           MPoly::parse("z*y^2 - z*x^2 - x^3"));
            throw InputError("unknown pencil: " + pencil_name);
        }
        if (p0_text.empty() || p1_text.empty())
            throw InputError("provide --p0 and --p1, or --pencil");
        return pencil::CubicPencil(MPoly::parse(p0_text), MPoly::parse(p1_text));
    };

    if (pen_sing->parsed()) {
        auto pc = make_pencil();
        auto scan = pencil::singular_parameters(pc);
        json interior = json::array();
        for (const auto& rep : scan.interior)
            interior.push_back(json{{"param", rep.param.str()},
                                    {"analysis", member_analysis_json(rep.analysis)}});
        json unresolved = json::array();
        for (const auto& e : scan.unresolved_eliminants) unresolved.push_back(e.str());
        emit.report("pencil singular",
                    json{{"p0", pc.p0.str()}, {"p1", pc.p1.str()}},
                    json{{"endpoint_p0",
                          json{{"param", scan.endpoint_p0.param.str()},
                               {"analysis", member_analysis_json(scan.endpoint_p0.analysis)}}},
                         {"endpoint_p1",
                          json{{"param", scan.endpoint_p1.param.str()},
                               {"analysis", member_analysis_json(scan.endpoint_p1.analysis)}}},
                         {"interior", interior},
                         {"unresolved_parameters", unresolved}},
                    {"pencil-singular-members"});
        return 0;
    }
    if (pen_classify->parsed()) {
        MPoly f = MPoly::parse(f_text);
        std::stringstream ss(point_text);
        std::string tok;
        std::vector<Rational> coords;
        while (std::getline(ss, tok, ',')) coords.push_back(Rational::parse(tok));
        if (coords.size() != 3) throw InputError("--point needs three coordinates");
        auto pt = pencil::ProjPoint::of(coords[0], coords[1], coords[2]);
        auto type = pencil::classify_point(f, pt);
        emit.report("pencil classify",
                    json{{"f", f.str()}, {"point", pt.str()}},
                    json{{"type", pencil::to_string(type)}}, {"node-cusp-classification"});
        return 0;
    }
    if (pen_base->parsed()) {
        auto pc = make_pencil();
        MPoly line;
        if (!line_text.empty()) {
            line = MPoly::parse(line_text);
        } else if (pencil_name == "@e8pencil") {
            line = MPoly::parse("z");
        } else if (pencil_name == "@e6pencil") {
            line = MPoly::parse("y + 1/2*z");
        } else {
            throw InputError("provide --line");
        }
        auto rep = pencil::base_points_on_line(pc, line);
        emit.report("pencil basepoints",
                    json{{"p0", pc.p0.str()}, {"p1", pc.p1.str()}, {"line", line.str()}},
                    json{{"distinct_points", rep.distinct_points},
                         {"transverse", rep.transverse},
                         {"parameter_poly", rep.parameter_poly.str()}},
                    {"base-point-count"});
        return 0;
    }
    if (mcg_eval->parsed()) {
        auto w = mcg::McgWord::parse(word_text);
        auto m = mcg::evaluate(w);
        emit.report("mcg eval", json{{"word", word_text}},
                    json{{"matrix", json::parse(m.str())},
                         {"trace", m.trace().get_str()},
                         {"identity", m == mcg::SL2Mat::identity()}},
                    {"sl2z-representation"});
        return 0;
    }
    if (mcg_reduce->parsed()) {
        auto w = mcg::free_reduce(mcg::McgWord::parse(word_text));
        emit.report("mcg reduce", json{{"word", word_text}},
                    json{{"reduced", w.str()}, {"length", w.length()}},
                    {"free-reduction"});
        return 0;
    }
    if (mcg_verify->parsed()) {
        mcg::Factorization f;
        if (factorization_text == "@e6") {
            f = mcg::builtin_factorization("e6");
        } else if (factorization_text == "@i6") {
            f = mcg::builtin_factorization("i6");
        } else {
            std::ifstream in(factorization_text);
            if (!in) throw InputError("cannot open " + factorization_text);
            std::stringstream buf;
            buf << in.rdbuf();
            f = mcg::Factorization::from_json_text(buf.str());
        }
        auto rep = mcg::verify_factorization(f, bound);
        emit.report("mcg verify", json{{"factorization", factorization_text}},
                    factorization_report_json(f, rep), {"monodromy-factorization"});
        return rep.all_verified() ? 0 : 1;
    }
    if (mcg_budget->parsed()) {
        std::vector<mcg::FiberType> config;
        std::stringstream ss(fibers_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) config.push_back(mcg::parse_fiber(tok));
        auto b = mcg::euler_budget(config);
        emit.report("mcg budget", json{{"fibers", fibers_text}},
                    json{{"total", b.total}, {"accept", b.accept}}, {"euler-budget"});
        return b.accept ? 0 : 1;
    }
    if (ledger_replay->parsed()) {
        h2::Ledger led;
        if (!ledger_builtin.empty()) {
            led = h2::builtin_ledger(ledger_builtin);
        } else if (!ledger_file.empty()) {
            std::ifstream in(ledger_file);
            if (!in) throw InputError("cannot open " + ledger_file);
            std::stringstream buf;
            buf << in.rdbuf();
            led = h2::Ledger::from_json_text(buf.str());
        } else {
            throw InputError("provide --file or --builtin");
        }
        json inputs{{"ledger", ledger_builtin.empty() ? ledger_file : ledger_builtin}};
        try {
            auto res = h2::replay(led);
            json comps = json::array();
            for (const auto& [cls, mult] : res.final_components)
                comps.push_back(json{{"class", cls.str()},
                                     {"mult", mult},
                                     {"square", rational_json(h2::pair(cls, cls))}});
            emit.report("ledger replay", std::move(inputs),
                        json{{"ok", true},
                             {"multiplicities", res.multiplicities},
                             {"final_fiber", res.final_fiber.str()},
                             {"final_fiber_square", rational_json(res.final_fiber_square)},
                             {"components", comps},
                             {"sections", res.sections},
                             {"component_gram", matrix_json(res.component_gram)}},
                        {"blowup-ledger"});
            return 0;
        } catch (const InputError& e) {
            emit.report("ledger replay", std::move(inputs),
                        json{{"ok", false}, {"error", e.what()}}, {"blowup-ledger"});
            return 1;
        }
    }
    if (park->parsed()) {
        auto rep = park::run_park7();
        json omega_restr = json::array();
        for (const auto& f : rep.omega_restriction) omega_restr.push_back(f.str());
        json k_restr = json::array();
        for (const auto& r : rep.k_restriction) k_restr.push_back(rational_json(r));
        bool ok = rep.certificate_ok && rep.freedman_ok && rep.wu_ok;
        emit.report(
            "park7 report", json::object(),
            json{{"P", matrix_json(rep.embedding.P)},
                 {"T", matrix_json(rep.embedding.T)},
                 {"u6_square", rational_json(h2::pair(rep.embedding.u[5], rep.embedding.u[5]))},
                 {"k_restriction", k_restr},
                 {"omega_restriction", omega_restr},
                 {"config_pairing", rep.config_pairing.str()},
                 {"blowdown_functional", rep.blowdown.str()},
                 {"certificate_ok", rep.certificate_ok},
                 {"before", invariants_json(rep.before)},
                 {"after", invariants_json(rep.after)},
                 {"wu_ok", rep.wu_ok},
                 {"freedman_ok", rep.freedman_ok},
                 {"signature_note", rep.signature_note}},
            {"c7-configuration", "blowdown-positivity", "homeomorphism-gate"});
        return ok ? 0 : 1;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(std::move(args), out, err);
    } catch (const NotDecided& e) {
        err << "not decided: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace rbd::cli
