#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

// Exact integer Laurent polynomials in one variable q. Coefficients are
// arbitrary-precision (GMP); exponents may be negative. The internal map
// never stores a zero coefficient, so equality is structural.

namespace llt {

class IntLaurentPoly {
public:
    using Coeff = mpz_class;
    using Terms = std::map<int, Coeff>;  // exponent -> nonzero coefficient

    IntLaurentPoly() = default;
    IntLaurentPoly(long constant);  // NOLINT: implicit on purpose, like int -> poly

    static IntLaurentPoly monomial(int exponent, Coeff coeff = 1);
    static IntLaurentPoly from_histogram(const std::vector<long long>& counts,
                                         int first_exponent);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_exponent() const;  // throws on zero polynomial
    int max_exponent() const;
    Coeff coeff(int exponent) const;
    void set_coeff(int exponent, Coeff c);

    bool operator==(const IntLaurentPoly&) const = default;

    IntLaurentPoly& operator+=(const IntLaurentPoly& o);
    IntLaurentPoly& operator-=(const IntLaurentPoly& o);
    IntLaurentPoly operator+(const IntLaurentPoly& o) const;
    IntLaurentPoly operator-(const IntLaurentPoly& o) const;
    IntLaurentPoly operator*(const IntLaurentPoly& o) const;
    IntLaurentPoly operator-() const;

    IntLaurentPoly shifted(int dq) const;  // multiply by q^dq

    // Exact division; throws std::domain_error if the remainder is nonzero
    // or a coefficient division is inexact. Never touches floating point.
    IntLaurentPoly divided_exact(const IntLaurentPoly& divisor) const;

    Coeff eval_at_one() const;
    bool has_negative_coeff() const;

    // Canonical rendering: increasing exponents, "q^k" syntax, the q^0 term
    // as a bare integer, q^1 as "q". Zero polynomial renders as "0".
    std::string to_string() const;

    // JSON-schema helpers: {"terms": [[exponent, coefficient], ...]} sorted
    // by exponent. Serialized here as a plain string to keep the JSON layer
    // in one place (the CLI wraps it with nlohmann::json).
    std::vector<std::pair<int, std::string>> term_strings() const;

private:
    Terms terms_;
};

// Splits p into `modulus` polynomials: component i collects exactly the
// terms whose exponent is congruent to i + offset (mod modulus).
std::vector<IntLaurentPoly> residue_split(const IntLaurentPoly& p, int modulus,
                                          int offset);

}  // namespace llt
