#pragma once

#include <string>
#include <vector>

#include "rbd/poly.hpp"

namespace rbd::pencil {

// Pencil t0*p0 + t1*p1 of plane cubics; both generators homogeneous of
// degree 3 in x, y, z. Coprimality of p0, p1 is the caller's assertion.
struct CubicPencil {
    MPoly p0, p1;
    CubicPencil(MPoly p0_in, MPoly p1_in);
};

// Point of CP^1; normalized to t1 = 1 when t1 != 0, else (1, 0).
struct PencilParam {
    Rational t0, t1;
    static PencilParam of(const Rational& t0, const Rational& t1);
    bool same_point(const PencilParam& o) const;
    std::string str() const;
};

MPoly member(const CubicPencil& pencil, const PencilParam& t);

// Projective point with rational coordinates, first nonzero coordinate
// (in x, y, z order) scaled to 1.
struct ProjPoint {
    Rational x, y, z;
    static ProjPoint of(const Rational& x, const Rational& y, const Rational& z);
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    bool operator<(const ProjPoint& o) const;
    std::string str() const;
};

enum class LocalType { node, cusp, higher };
std::string to_string(LocalType t);

// Local type of a verified singular point: quadratic part nondegenerate ->
// node; a nonzero perfect square whose root line does not divide the cubic
// part -> cusp; anything worse -> higher.
LocalType classify_point(const MPoly& f, const ProjPoint& pt);

enum class MemberStatus {
    smooth,
    isolated,    // finitely many singular points, all resolved or listed
    degenerate,  // singular along a curve (non-reduced member)
};

struct SingularPoint {
    ProjPoint point;
    LocalType type;
};

struct MemberAnalysis {
    MemberStatus status = MemberStatus::smooth;
    std::vector<SingularPoint> points;  // rational, exactly verified
    std::vector<MPoly> unresolved;      // eliminants possibly hiding irrational points
};

// Exact singular-point analysis of one plane cubic, chart order z, y, x.
MemberAnalysis analyze_member(const MPoly& f);

struct SingularFiberReport {
    PencilParam param;
    MemberAnalysis analysis;
};

struct BasePointReport {
    long distinct_points = 0;
    bool transverse = false;   // substituted binary form squarefree
    MPoly parameter_poly;      // dehomogenized restriction, primitive normalized
};

// Requires p0 = c * line^3; counts distinct intersections of the line with
// the cubic p1 through the squarefree part of the restricted form.
BasePointReport base_points_on_line(const CubicPencil& pencil, const MPoly& line);

struct PencilScan {
    SingularFiberReport endpoint_p0;        // [1:0]
    SingularFiberReport endpoint_p1;        // [0:1]
    std::vector<SingularFiberReport> interior;
    std::vector<MPoly> unresolved_eliminants;  // parameter factors with no rational root
};

// Chart-by-chart resultant elimination for the parameters t with singular
// member, candidates verified by exact substitution. Only rational
// parameters are resolved; leftovers surface as eliminant polynomials.
PencilScan singular_parameters(const CubicPencil& pencil);

}  // namespace rbd::pencil
