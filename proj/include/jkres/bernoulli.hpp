#pragma once

#include "jkres/rational.hpp"

namespace jkres {

// Bernoulli number B_n with the convention B_1 = -1/2, i.e. the
// coefficients of w/(e^w - 1) = sum_n B_n w^n / n!.  Memoized.
Rational bernoulli(unsigned n);

} // namespace jkres
