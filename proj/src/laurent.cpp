#include "llt/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace llt {

IntLaurentPoly::IntLaurentPoly(long constant) {
    if (constant != 0) terms_[0] = constant;
}

IntLaurentPoly IntLaurentPoly::monomial(int exponent, Coeff coeff) {
    IntLaurentPoly p;
    if (coeff != 0) p.terms_[exponent] = std::move(coeff);
    return p;
}

IntLaurentPoly IntLaurentPoly::from_histogram(const std::vector<long long>& counts,
                                              int first_exponent) {
    IntLaurentPoly p;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] != 0)
            p.terms_[first_exponent + static_cast<int>(i)] = static_cast<long>(counts[i]);
    return p;
}

int IntLaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

int IntLaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

IntLaurentPoly::Coeff IntLaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void IntLaurentPoly::set_coeff(int exponent, Coeff c) {
    if (c == 0)
        terms_.erase(exponent);
    else
        terms_[exponent] = std::move(c);
}

IntLaurentPoly& IntLaurentPoly::operator+=(const IntLaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        Coeff& slot = terms_[e];
        slot += c;
        if (slot == 0) terms_.erase(e);
    }
    return *this;
}

IntLaurentPoly& IntLaurentPoly::operator-=(const IntLaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        Coeff& slot = terms_[e];
        slot -= c;
        if (slot == 0) terms_.erase(e);
    }
    return *this;
}

IntLaurentPoly IntLaurentPoly::operator+(const IntLaurentPoly& o) const {
    IntLaurentPoly r = *this;
    r += o;
    return r;
}

IntLaurentPoly IntLaurentPoly::operator-(const IntLaurentPoly& o) const {
    IntLaurentPoly r = *this;
    r -= o;
    return r;
}

IntLaurentPoly IntLaurentPoly::operator*(const IntLaurentPoly& o) const {
    IntLaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Coeff& slot = r.terms_[e1 + e2];
            slot += c1 * c2;
            if (slot == 0) r.terms_.erase(e1 + e2);
        }
    return r;
}

IntLaurentPoly IntLaurentPoly::operator-() const {
    IntLaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

IntLaurentPoly IntLaurentPoly::shifted(int dq) const {
    IntLaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + dq] = c;
    return r;
}

IntLaurentPoly IntLaurentPoly::divided_exact(const IntLaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return {};
    IntLaurentPoly rem = *this, quot;
    const int dexp = divisor.max_exponent();
    const Coeff& dlead = divisor.terms_.rbegin()->second;
    // Lowest exponent any quotient term of an exact division can have;
    // dropping below it means the division is inexact.
    const int floor_exp = min_exponent() - divisor.min_exponent();
    while (!rem.is_zero()) {
        int e = rem.max_exponent();
        if (e - dexp < floor_exp)
            throw std::domain_error("nonzero remainder in exact division");
        Coeff lead = rem.terms_.rbegin()->second;
        Coeff q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), dlead.get_mpz_t());
        if (r != 0)
            throw std::domain_error("inexact coefficient in polynomial division");
        IntLaurentPoly t = IntLaurentPoly::monomial(e - dexp, q);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

IntLaurentPoly::Coeff IntLaurentPoly::eval_at_one() const {
    Coeff s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool IntLaurentPoly::has_negative_coeff() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return true;
    return false;
}

std::string IntLaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Coeff a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::vector<std::pair<int, std::string>> IntLaurentPoly::term_strings() const {
    std::vector<std::pair<int, std::string>> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.emplace_back(e, c.get_str());
    return out;
}

std::vector<IntLaurentPoly> residue_split(const IntLaurentPoly& p, int modulus,
                                          int offset) {
    if (modulus < 1) throw std::invalid_argument("residue_split: modulus must be >= 1");
    std::vector<IntLaurentPoly> parts(modulus);
    for (const auto& [e, c] : p.terms()) {
        int r = (e - offset) % modulus;
        if (r < 0) r += modulus;
        parts[r].set_coeff(e, c);
    }
    return parts;
}

}  // namespace llt
