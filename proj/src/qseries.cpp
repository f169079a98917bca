#include "llt/qseries.hpp"

#include <numeric>
#include <stdexcept>

namespace llt {

IntLaurentPoly q_int(int k) {
    if (k < 0) throw std::invalid_argument("q_int: k must be >= 0");
    IntLaurentPoly p;
    for (int e = 0; e < k; ++e) p.set_coeff(e, 1);
    return p;
}

IntLaurentPoly q_factorial(int k) {
    if (k < 0) throw std::invalid_argument("q_factorial: k must be >= 0");
    IntLaurentPoly p(1);
    for (int j = 2; j <= k; ++j) p = p * q_int(j);
    return p;
}

IntLaurentPoly q_binomial(int n, int k) {
    if (k < 0 || k > n) return {};
    return q_factorial(n).divided_exact(q_factorial(k) * q_factorial(n - k));
}

IntLaurentPoly q_multinomial(int n, const std::vector<int>& parts) {
    int total = std::accumulate(parts.begin(), parts.end(), 0);
    if (total != n)
        throw std::invalid_argument("q_multinomial: parts must sum to n");
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("q_multinomial: negative part");
    IntLaurentPoly result = q_factorial(n);
    for (int p : parts) result = result.divided_exact(q_factorial(p));
    return result;
}

IntLaurentPoly q_multinomial(int n, const Composition& parts) {
    return q_multinomial(n, parts.parts());
}

}  // namespace llt
