#pragma once

// Even-index Fibonacci numeration: the two-digit decomposition over
// F(2), F(4), ..., the golden string machinery behind it, enumerators for
// the fixed-term sets A(2k), B(2N) and Z(N), and brute-force oracles that
// verify every structural claim over finite ranges.

#include "fibdecomp/numeric.hpp"
#include "fibdecomp/golden_string.hpp"
#include "fibdecomp/decomposition.hpp"
#include "fibdecomp/fixed_term_sets.hpp"
#include "fibdecomp/oracle.hpp"
#include "fibdecomp/serialization.hpp"
