#include "rbd/pencil.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rbd::pencil {

namespace {

constexpr char kParam = 't';  // pencil parameter t0/t1 during elimination

void require_cubic(const MPoly& p, const char* which) {
    if (p.is_zero()) throw InputError(std::string(which) + " must be nonzero");
    if (!p.is_homogeneous() || p.total_degree() != 3)
        throw InputError(std::string(which) + " must be homogeneous of degree 3");
    for (char v : p.variables())
        if (v != 'x' && v != 'y' && v != 'z')
            throw InputError(std::string(which) + " must use variables x, y, z only");
}

struct Chart {
    char at_one;  // variable set to 1
    char u, v;    // remaining variables
};

constexpr Chart kCharts[] = {{'z', 'x', 'y'}, {'y', 'x', 'z'}, {'x', 'y', 'z'}};

MPoly grad_component(const MPoly& f, char v) { return f.derivative(v); }

// gcd over Q[v] treating the zero polynomial as absorbing.
MPoly gcd_or(const MPoly& a, const MPoly& b, char v) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return gcd_univariate(a, b, v);
}

}  // namespace

CubicPencil::CubicPencil(MPoly p0_in, MPoly p1_in) : p0(std::move(p0_in)), p1(std::move(p1_in)) {
    require_cubic(p0, "p0");
    require_cubic(p1, "p1");
}

PencilParam PencilParam::of(const Rational& t0, const Rational& t1) {
    if (t0.is_zero() && t1.is_zero()) throw InputError("pencil parameter [0:0]");
    if (t1.is_zero()) return {Rational(1), Rational(0)};
    return {t0 / t1, Rational(1)};
}

bool PencilParam::same_point(const PencilParam& o) const {
    return t0 * o.t1 == t1 * o.t0;
}

std::string PencilParam::str() const { return "[" + t0.str() + ":" + t1.str() + "]"; }

MPoly member(const CubicPencil& pencil, const PencilParam& t) {
    return t.t0 * pencil.p0 + t.t1 * pencil.p1;
}

ProjPoint ProjPoint::of(const Rational& x, const Rational& y, const Rational& z) {
    Rational scale = !x.is_zero() ? x : !y.is_zero() ? y : z;
    if (scale.is_zero()) throw InputError("[0:0:0] is not a projective point");
    Rational inv = Rational(1) / scale;
    return {inv * x, inv * y, inv * z};
}

bool ProjPoint::operator<(const ProjPoint& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
}

std::string ProjPoint::str() const {
    return "[" + x.str() + ":" + y.str() + ":" + z.str() + "]";
}

std::string to_string(LocalType t) {
    switch (t) {
        case LocalType::node: return "node";
        case LocalType::cusp: return "cusp";
        default: return "higher";
    }
}

namespace {

Rational coord(const ProjPoint& p, char v) {
    return v == 'x' ? p.x : v == 'y' ? p.y : p.z;
}

bool vanishes_with_gradient(const MPoly& f, const ProjPoint& pt) {
    std::map<char, Rational> at{{'x', pt.x}, {'y', pt.y}, {'z', pt.z}};
    if (!f.evaluate(at).is_zero()) return false;
    for (char v : {'x', 'y', 'z'})
        if (!grad_component(f, v).evaluate(at).is_zero()) return false;
    return true;
}

}  // namespace

LocalType classify_point(const MPoly& f, const ProjPoint& pt) {
    require_cubic(f, "f");
    if (!vanishes_with_gradient(f, pt))
        throw InputError("point " + pt.str() + " is not a singular point of the curve");

    // Chart with nonzero coordinate, preferring z, then y, then x.
    const Chart* chart = nullptr;
    for (const Chart& c : kCharts)
        if (!coord(pt, c.at_one).is_zero()) { chart = &c; break; }
    if (!chart) throw InputError("[0:0:0] is not a projective point");

    Rational scale = Rational(1) / coord(pt, chart->at_one);
    Rational u0 = scale * coord(pt, chart->u);
    Rational v0 = scale * coord(pt, chart->v);

    MPoly g = f.substitute(chart->at_one, MPoly(Rational(1)));
    g = g.substitute(chart->u, MPoly::variable(chart->u) + MPoly(u0));
    g = g.substitute(chart->v, MPoly::variable(chart->v) + MPoly(v0));

    MPoly quad = g.homogeneous_component(2);
    MPoly cubic = g.homogeneous_component(3);
    if (quad.is_zero()) return LocalType::higher;

    auto coeff_of = [&](unsigned du, unsigned dv) {
        Monomial m;
        if (du) m[chart->u] = du;
        if (dv) m[chart->v] = dv;
        auto it = quad.terms().find(m);
        return it == quad.terms().end() ? Rational(0) : it->second;
    };
    Rational A = coeff_of(2, 0), B = coeff_of(1, 1), C = coeff_of(0, 2);
    Rational disc = B * B - Rational(4) * A * C;
    if (!disc.is_zero()) return LocalType::node;

    // quad = (repeated line)^2 up to a scalar
    MPoly line = A.is_zero() ? MPoly::variable(chart->v)
                             : Rational(2) * A * MPoly::variable(chart->u) +
                                   B * MPoly::variable(chart->v);
    if (cubic.is_zero() || try_divide(cubic, line)) return LocalType::higher;
    return LocalType::cusp;
}

namespace {

// Candidate u-values for common zeros of the system, by pairwise
// v-resultants. A vanishing pair means a shared factor of positive
// v-degree; for a reduced member the pair of the curve with its
// v-derivative never vanishes, so every computable pair vanishing
// certifies a repeated component (*degenerate).
std::vector<MPoly> pairwise_eliminants(const MPoly& g, const MPoly& A, const MPoly& B,
                                       char v, bool* degenerate) {
    std::vector<MPoly> elims;
    std::size_t computable = 0;
    const MPoly* polys[3] = {&g, &A, &B};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const MPoly &p = *polys[i], &q = *polys[j];
            if (p.is_zero() || q.is_zero()) continue;
            if (p.degree(v) <= 0 && q.degree(v) <= 0) continue;
            ++computable;
            MPoly r = resultant(p, q, v);
            if (!r.is_zero()) elims.push_back(std::move(r));
        }
    if (computable > 0 && elims.empty()) *degenerate = true;
    return elims;
}

// Analysis of one affine chart of one cubic member.
void analyze_chart(const MPoly& g, char uvar, char vvar, MemberAnalysis* out,
                   const MPoly& f_proj, const Chart& chart) {
    if (g.is_constant()) return;  // no zeros in this chart
    MPoly A = g.derivative(uvar), B = g.derivative(vvar);

    // A variable missing from g makes every critical zero a whole line.
    for (auto [missing, present] : {std::pair{uvar, vvar}, std::pair{vvar, uvar}}) {
        if (!g.derivative(missing).is_zero()) continue;
        MPoly gg = gcd_or(g, g.derivative(present), present);
        if (gg.total_degree() >= 1) out->status = MemberStatus::degenerate;
        return;
    }

    bool degenerate = false;
    std::vector<MPoly> elims = pairwise_eliminants(g, A, B, vvar, &degenerate);
    if (degenerate) {
        out->status = MemberStatus::degenerate;
        return;
    }

    // A common zero of the system is a root of every eliminant, so their
    // gcd carries exactly the candidate u-values.
    MPoly E;
    for (const MPoly& e : elims)
        E = E.is_zero() ? e : gcd_univariate(E, e, uvar);
    if (E.is_zero() || E.degree(uvar) <= 0) return;

    std::set<Rational> u_candidates;
    MPoly u_leftover = squarefree_part(E);
    for (const Rational& r : rational_roots(u_leftover)) {
        u_candidates.insert(r);
        MPoly lin = Rational(r.den()) * MPoly::variable(uvar) - MPoly(Rational(r.num()));
        if (auto q = try_divide(u_leftover, lin)) u_leftover = *q;
    }
    if (u_leftover.degree(uvar) >= 1) out->unresolved.push_back(u_leftover);

    for (const Rational& u0 : u_candidates) {
        MPoly g0 = g.substitute(uvar, MPoly(u0));
        MPoly A0 = A.substitute(uvar, MPoly(u0));
        MPoly B0 = B.substitute(uvar, MPoly(u0));
        if (g0.is_zero() && A0.is_zero() && B0.is_zero()) {
            out->status = MemberStatus::degenerate;  // a whole line of the member
            continue;
        }
        MPoly common = gcd_or(gcd_or(g0, A0, vvar), B0, vvar);
        if (common.is_constant()) continue;
        auto roots = rational_roots(common);
        long resolved = 0;
        for (const Rational& v0 : roots) {
            Rational coords[3];
            coords[0] = chart.u == 'x' ? u0 : chart.v == 'x' ? v0 : Rational(chart.at_one == 'x');
            coords[1] = chart.u == 'y' ? u0 : chart.v == 'y' ? v0 : Rational(chart.at_one == 'y');
            coords[2] = chart.u == 'z' ? u0 : chart.v == 'z' ? v0 : Rational(chart.at_one == 'z');
            ProjPoint pt = ProjPoint::of(coords[0], coords[1], coords[2]);
            if (!vanishes_with_gradient(f_proj, pt)) continue;
            bool seen = false;
            for (const auto& sp : out->points) seen |= sp.point == pt;
            if (!seen) out->points.push_back({pt, classify_point(f_proj, pt)});
            ++resolved;
        }
        MPoly sf = squarefree_part(common);
        if (resolved < sf.total_degree()) out->unresolved.push_back(sf);
    }
}

}  // namespace

MemberAnalysis analyze_member(const MPoly& f) {
    require_cubic(f, "member");
    MemberAnalysis out;
    for (const Chart& chart : kCharts) {
        MPoly g = f.substitute(chart.at_one, MPoly(Rational(1)));
        analyze_chart(g, chart.u, chart.v, &out, f, chart);
        if (out.status == MemberStatus::degenerate) {
            out.points.clear();
            out.unresolved.clear();
            return out;
        }
    }
    if (out.status != MemberStatus::degenerate)
        out.status = (out.points.empty() && out.unresolved.empty()) ? MemberStatus::smooth
                                                                    : MemberStatus::isolated;
    std::sort(out.points.begin(), out.points.end(),
              [](const SingularPoint& a, const SingularPoint& b) { return a.point < b.point; });
    return out;
}

BasePointReport base_points_on_line(const CubicPencil& pencil, const MPoly& line) {
    if (line.is_zero() || !line.is_homogeneous() || line.total_degree() != 1)
        throw InputError("line must be homogeneous of degree 1");
    MPoly cube = line.pow(3);
    // p0 must be a scalar multiple of line^3
    Rational ratio = pencil.p0.terms().begin()->second / cube.terms().begin()->second;
    if (!(ratio * cube == pencil.p0))
        throw InputError("p0 is not the given line cubed");

    // Solve the line for its first variable with nonzero coefficient.
    char solved = 0;
    Rational solved_coeff;
    for (char v : {'x', 'y', 'z'}) {
        MPoly c = line.derivative(v);
        if (!c.is_zero()) { solved = v; solved_coeff = c.constant_value(); break; }
    }
    MPoly rest = line - solved_coeff * MPoly::variable(solved);
    MPoly substitution = (Rational(-1) / solved_coeff) * rest;
    MPoly restricted = pencil.p1.substitute(solved, substitution);
    if (restricted.is_zero())
        throw InputError("the line is a component of p1");

    // Binary form in the remaining variables (s, w), s < w alphabetically.
    std::vector<char> rem;
    for (char v : {'x', 'y', 'z'})
        if (v != solved) rem.push_back(v);
    char s = rem[0], w = rem[1];
    long d = restricted.total_degree();

    MPoly f_t = restricted.substitute(s, MPoly(Rational(1)));  // univariate in w
    BasePointReport rep;
    MPoly sf = squarefree_part(f_t);
    rep.distinct_points = std::max(sf.degree(w), 0L);
    if (f_t.degree(w) < d) rep.distinct_points += 1;  // the point with s = 0
    rep.transverse = rep.distinct_points == d;
    rep.parameter_poly = f_t;
    // primitive normalization for display
    if (!rep.parameter_poly.is_zero()) {
        Integer den_l = 1, num_g = 0;
        for (const auto& [m, c] : rep.parameter_poly.terms()) {
            den_l = lcm(den_l, c.den());
            num_g = gcd(num_g, c.num());
        }
        rep.parameter_poly = Rational(den_l, num_g) * rep.parameter_poly;
        auto cs = rep.parameter_poly.coefficients_in(w);
        if (!cs.empty() && cs.back().constant_value().sign() < 0)
            rep.parameter_poly = -rep.parameter_poly;
    }
    return rep;
}

PencilScan singular_parameters(const CubicPencil& pencil) {
    PencilScan scan{
        {PencilParam{Rational(1), Rational(0)}, analyze_member(pencil.p0)},
        {PencilParam{Rational(0), Rational(1)}, analyze_member(pencil.p1)},
        {},
        {}};

    // Generic member t*p0 + p1 with t = t0/t1 a free variable.
    MPoly generic = MPoly::variable(kParam) * pencil.p0 + pencil.p1;

    std::set<Rational> candidates;
    for (const Chart& chart : kCharts) {
        MPoly g = generic.substitute(chart.at_one, MPoly(Rational(1)));
        MPoly A = g.derivative(chart.u), B = g.derivative(chart.v);
        if (A.is_zero() || B.is_zero()) continue;
        // Eliminate v from the partials and from the member, in both orders;
        // a singular parameter over this chart is a root of every route's
        // eliminant, so their gcd strips the spurious resultant factors.
        MPoly chart_elim;
        for (auto [uvar, vvar] : {std::pair{chart.u, chart.v}, std::pair{chart.v, chart.u}}) {
            MPoly Au = g.derivative(uvar), Av = g.derivative(vvar);
            if (Au.degree(vvar) < 0 && Av.degree(vvar) < 0) continue;
            auto res_or_null = [&](const MPoly& p, const MPoly& q) -> MPoly {
                if (p.degree(vvar) <= 0 && q.degree(vvar) <= 0) return MPoly();
                return resultant(p, q, vvar);
            };
            MPoly r1 = res_or_null(Au, Av);
            MPoly r2 = res_or_null(g, Av);
            if (r1.is_zero() || r2.is_zero()) continue;
            // A factor free of u is already a condition on the parameter
            // alone; otherwise eliminate u as well.
            MPoly elim;
            bool r1_has_u = r1.degree(uvar) > 0, r2_has_u = r2.degree(uvar) > 0;
            if (r1_has_u && r2_has_u) elim = resultant(r1, r2, uvar);
            else if (!r1_has_u) elim = r1;
            else elim = r2;
            if (elim.is_zero()) continue;
            char pv = 0;
            if (!elim.is_univariate(&pv) || (pv != 0 && pv != kParam)) continue;
            if (elim.degree(kParam) <= 0) continue;
            chart_elim = chart_elim.is_zero() ? elim
                                              : gcd_univariate(chart_elim, elim, kParam);
        }
        if (chart_elim.is_zero() || chart_elim.degree(kParam) <= 0) continue;

        MPoly sf = squarefree_part(chart_elim);
        auto roots = rational_roots(sf);
        MPoly leftover = sf;
        for (const Rational& r : roots) {
            if (!r.is_zero()) candidates.insert(r);
            MPoly lin = Rational(r.den()) * MPoly::variable(kParam) - MPoly(Rational(r.num()));
            if (auto q = try_divide(leftover, lin)) leftover = *q;
        }
        if (leftover.degree(kParam) >= 1) {
            bool dup = false;
            for (const MPoly& u : scan.unresolved_eliminants) dup |= u == leftover;
            if (!dup) scan.unresolved_eliminants.push_back(leftover);
        }
    }

    for (const Rational& alpha : candidates) {
        PencilParam t = PencilParam::of(alpha, Rational(1));
        MemberAnalysis analysis = analyze_member(member(pencil, t));
        if (analysis.status == MemberStatus::smooth) continue;
        scan.interior.push_back({t, std::move(analysis)});
    }
    std::sort(scan.interior.begin(), scan.interior.end(),
              [](const SingularFiberReport& a, const SingularFiberReport& b) {
                  return a.param.t0 < b.param.t0;
              });
    return scan;
}

}  // namespace rbd::pencil
