#pragma once

#include "llt/laurent.hpp"
#include "llt/partition.hpp"

// q-integers, q-factorials and Gaussian binomial/multinomial coefficients,
// all as exact IntLaurentPoly values. Quotients of q-factorials are formed
// by exact polynomial division (the divisors are monic, so this is always
// an integer-coefficient division; a nonzero remainder throws).

namespace llt {

IntLaurentPoly q_int(int k);        // 1 + q + ... + q^{k-1};  q_int(0) = 0
IntLaurentPoly q_factorial(int k);  // [k]_q [k-1]_q ... [1]_q; [0]_q! = 1

// Zero polynomial when k < 0 or k > n (including every n < 0 with k >= 0).
IntLaurentPoly q_binomial(int n, int k);

// [n]_q! / ([k_1]_q! ... [k_r]_q!). Throws if the parts do not sum to n.
IntLaurentPoly q_multinomial(int n, const Composition& parts);
IntLaurentPoly q_multinomial(int n, const std::vector<int>& parts);

}  // namespace llt
