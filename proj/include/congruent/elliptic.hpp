#pragma once

#include <array>
#include <span>
#include <vector>

#include "congruent/ntheory.hpp"

namespace congruent {

// A rational point on a congruent-number curve: either the point at infinity
// or an affine pair of canonical rationals. Points are immutable values;
// the owning curve is passed explicitly to every operation that needs it.
class CurvePoint {
public:
    static CurvePoint infinity() { return CurvePoint(); }
    static CurvePoint affine(Rational x, Rational y);

    bool is_infinity() const { return infinity_; }
    const Rational& x() const;
    const Rational& y() const;

    friend bool operator==(const CurvePoint& a, const CurvePoint& b);
    friend bool operator<(const CurvePoint& a, const CurvePoint& b);

private:
    CurvePoint() : infinity_(true) {}
    bool infinity_;
    Rational x_, y_;
};

CurvePoint negate(const CurvePoint& p);

// Naive height of the X-coordinate: max(|num X|, den X). Rejects infinity.
Integer naive_height(const CurvePoint& p);

// E_t : Y^2 = X^3 - t^2 X for squarefree positive t. The chord-tangent group
// law is implemented with exact rational arithmetic; every produced point is
// canonical.
class CongruentCurve {
public:
    explicit CongruentCurve(SquarefreeInt t);

    const SquarefreeInt& t() const { return t_; }
    const Integer& t_squared() const { return t2_; }

    bool contains(const CurvePoint& p) const;

    CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
    CurvePoint scalar_mul(const Integer& n, const CurvePoint& p) const;

    // Sum of coeffs[i] * gens[i]. Throws ValidationError on length mismatch.
    CurvePoint linear_combination(std::span<const CurvePoint> gens,
                                  std::span<const long> coeffs) const;

    // {infinity, (0,0), (t,0), (-t,0)} = the full torsion subgroup Z/2 x Z/2.
    std::array<CurvePoint, 4> torsion_points() const;

private:
    SquarefreeInt t_;
    Integer t2_;
};

struct PointSearchBudget {
    Integer max_bound = 1000000;
};

// Exhaustive search for affine points with Y != 0. X-coordinates of rational
// points on this Weierstrass form have square denominators, so candidates are
// X = p/q^2 with |p| <= bound, q^2 <= bound, gcd(p, q) = 1. One point per X
// (the Y > 0 representative), ordered by (naive height, X).
std::vector<CurvePoint> find_small_points(const CongruentCurve& curve, const Integer& bound,
                                          const PointSearchBudget& budget = {});

// Greedy reduction of a small-point list to `rank` points that are pairwise
// independent as far as a box check of exponent span_k (plus torsion and
// sign) can tell. A desk-scale stand-in for descent software; the claimed
// rank stays "presumed". Throws BudgetError when the bound yields too few
// independent points or rank > 3.
std::vector<CurvePoint> select_generators(const CongruentCurve& curve, const Integer& bound,
                                          int rank, int span_k = 8,
                                          const PointSearchBudget& budget = {});

}  // namespace congruent
