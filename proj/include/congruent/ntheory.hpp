#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "congruent/errors.hpp"

namespace congruent {

// All integer and rational arithmetic in this library is exact. GMP carries
// the values; these aliases name the roles.
using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: gcd(|num|, den) = 1, den >= 1

// Limits for the factorization routine. The defaults factor everything this
// library meets (t values up to ~10^16) instantly; they are not sized for
// cryptographic inputs.
struct FactorBudget {
    unsigned long trial_division_bound = 100000;  // trial divide p <= this
    unsigned rho_rounds = 64;                     // Pollard rho restarts before giving up
    int primality_reps = 40;                      // Miller-Rabin repetitions
};

// Prime factorization with multiplicity, sorted ascending. factor(1) = {}.
// Throws BudgetError when the input resists the configured method.
std::vector<Integer> factor(const Integer& n, const FactorBudget& budget = {});

bool is_squarefree(const Integer& n, const FactorBudget& budget = {});

// Floor square root, no floating point.
Integer isqrt(const Integer& n);

// Exact square test; returns the nonnegative root when n is a square.
std::optional<Integer> is_perfect_square(const Integer& n);

// Exact square test for rationals (num and den both squares).
std::optional<Rational> rational_sqrt(const Rational& r);

// A positive integer no prime divides twice. Construction validates by
// factorization; use `assume` only where squarefreeness is already proven.
class SquarefreeInt {
public:
    explicit SquarefreeInt(Integer value, const FactorBudget& budget = {});
    static SquarefreeInt assume(Integer value);

    const Integer& value() const { return value_; }

    friend bool operator==(const SquarefreeInt& a, const SquarefreeInt& b) {
        return a.value_ == b.value_;
    }
    friend bool operator<(const SquarefreeInt& a, const SquarefreeInt& b) {
        return a.value_ < b.value_;
    }

private:
    struct Unchecked {};
    SquarefreeInt(Integer value, Unchecked) : value_(std::move(value)) {}
    Integer value_;
};

struct SquarefreeDecomposition {
    SquarefreeInt s;  // squarefree part
    Integer u;        // cofactor, n = s * u^2
};

// Unique decomposition n = s * u^2 with s squarefree. Rejects n <= 0.
SquarefreeDecomposition squarefree_part(const Integer& n, const FactorBudget& budget = {});

// Squarefree part of a positive rational: r = s * q^2 with s a squarefree
// integer and q rational. (r = p/d reduces to s = squarefree part of p*d.)
struct RationalSquarefreeDecomposition {
    SquarefreeInt s;
    Rational q;
};
RationalSquarefreeDecomposition squarefree_part(const Rational& r, const FactorBudget& budget = {});

// --- string conversions used by the interchange formats ---

// Parses "num" or "num/den" into a canonical rational. Throws ValidationError.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);
std::string to_string(const Integer& n);
std::string to_string(const Rational& r);  // "num" or "num/den"

// --- logarithms of huge integers ---

// Bit length of |n|; bit_length(0) = 0.
std::size_t bit_length(const Integer& n);

// Natural log of a positive integer computed from the bit length and the top
// mantissa bits, so 400000-bit inputs never pass through a finite double.
double ln(const Integer& n);

// Fixed 9-decimal rendering used everywhere a log is serialized.
std::string format_ln(double value);

}  // namespace congruent
