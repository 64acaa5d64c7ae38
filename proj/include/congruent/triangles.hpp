#pragma once

#include <set>
#include <string>

#include "congruent/elliptic.hpp"
#include "congruent/ntheory.hpp"

namespace congruent {

// A right triangle with positive rational sides, legs ordered a <= b,
// a^2 + b^2 = c^2 exactly.
class RationalTriangle {
public:
    // Validates the Pythagorean relation and positivity; legs may be passed
    // in either order.
    static RationalTriangle create(Rational leg1, Rational leg2, Rational hyp);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    Rational area() const;

    friend bool operator==(const RationalTriangle& x, const RationalTriangle& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

private:
    RationalTriangle(Rational a, Rational b, Rational c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
    Rational a_, b_, c_;
};

// A primitive integer right triangle together with the squarefree part t of
// its area and the cofactor u: a*b/2 = t*u^2, gcd(a,b,c) = 1, a <= b < c.
struct PrimitiveTriangle {
    Integer a, b, c;
    Integer t;  // squarefree part of the area
    Integer u;

    friend bool operator==(const PrimitiveTriangle& x, const PrimitiveTriangle& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator<(const PrimitiveTriangle& x, const PrimitiveTriangle& y);
};

// Validating factory for externally supplied side triples.
PrimitiveTriangle make_primitive_triangle(const Integer& leg1, const Integer& leg2,
                                          const Integer& hyp);

// The classical two-parameter description of primitive triangles:
// (s^2 - t^2, 2st, s^2 + t^2) with s > t >= 1, gcd(s, t) = 1, s + t odd.
struct STPair {
    Integer s, t;

    friend bool operator==(const STPair& x, const STPair& y) { return x.s == y.s && x.t == y.t; }
};

// (X, Y) -> (|X^2 - t^2| / |Y|, |2tX| / |Y|, (X^2 + t^2) / |Y|), legs ordered.
// The result has area exactly t. Rejects infinity and Y = 0 (torsion).
RationalTriangle point_to_triangle(const CurvePoint& p, const CongruentCurve& curve);

// (a, b, c) -> (t b / (c - a), 2 t^2 / (c - a)) after rescaling the triangle
// to area exactly t (t = squarefree part of the area). The point lies on E_t
// with Y != 0.
CurvePoint triangle_to_point(const RationalTriangle& tri);

// Clear denominators, divide by the content, order the legs.
PrimitiveTriangle to_primitive(const RationalTriangle& tri);

PrimitiveTriangle st_to_triangle(const STPair& pair);

// Inverse of st_to_triangle: s^2 = (c + odd leg)/2, t^2 = (c - odd leg)/2.
// Rejects non-primitive input.
STPair triangle_to_st(const PrimitiveTriangle& tri);

// Primitive + leg-ordered makes similarity plain equality of the triples.
bool similar(const PrimitiveTriangle& x, const PrimitiveTriangle& y);

// Triangles of the eight coset points +-p + e1*T1 + e2*T2. All eight map to
// one similarity class, so the returned set has size 1.
std::set<PrimitiveTriangle> torsion_orbit_triangles(const CurvePoint& p,
                                                    const CongruentCurve& curve);

std::string to_string(const PrimitiveTriangle& tri);

}  // namespace congruent
