#pragma once

#include <cstdint>

#include "congruent/ntheory.hpp"

namespace congruent {

enum class Congruence {
    NonCongruent,              // unconditional
    CongruentConditionalBSD,   // congruent if the Birch--Swinnerton-Dyer conjecture holds
};

struct TunnellVerdict {
    Integer n;
    Congruence verdict;
    // The two representation counts that decided it: count_32 over the form
    // with the 32-coefficient, count_8 over the 8-form. The criterion is
    // count_32 == count_8 / 2.
    std::uint64_t count_32 = 0;
    std::uint64_t count_8 = 0;

    friend bool operator==(const TunnellVerdict& a, const TunnellVerdict& b) {
        return a.n == b.n && a.verdict == b.verdict && a.count_32 == b.count_32 &&
               a.count_8 == b.count_8;
    }
};

struct TunnellBudget {
    std::uint64_t max_n = 100000000;  // exhaustive lattice counting stays instant below this
};

// Number of integer triples (x, y, z) with A x^2 + B y^2 + C z^2 = n,
// signs and zeros counted. A, B, C >= 1.
std::uint64_t count_representations(std::uint64_t a_coeff, std::uint64_t b_coeff,
                                    std::uint64_t c_coeff, std::uint64_t n);

// Tunnell's criterion for squarefree n >= 1:
//   odd n:  compare #{n = 2x^2 + y^2 + 32z^2} with (1/2) #{n = 2x^2 + y^2 + 8z^2}
//   even n: compare #{n/2 = 4x^2 + y^2 + 32z^2} with (1/2) #{n/2 = 4x^2 + y^2 + 8z^2}
// Equality means congruent under BSD; inequality means non-congruent,
// unconditionally.
TunnellVerdict classify(const SquarefreeInt& n, const TunnellBudget& budget = {});

}  // namespace congruent
