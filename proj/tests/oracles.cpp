#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace llt::oracles {

long long partition_count(int n) {
    static std::vector<long long> p = {1};
    for (int m = static_cast<int>(p.size()); m <= n; ++m) {
        long long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long long term = 0;
            if (g1 <= m) term += p[m - g1];
            if (g2 <= m) term += p[m - g2];
            total += (k % 2 ? term : -term);
        }
        p.push_back(total);
    }
    return p[n];
}

long long hook_length_count(const Partition& shape) {
    const auto& parts = shape.parts();
    std::vector<int> conj(parts.empty() ? 0 : parts[0], 0);
    for (int p : parts)
        for (int c = 0; c < p; ++c) ++conj[c];
    long long numer = 1;
    for (int i = 1; i <= shape.size(); ++i) numer *= i;
    long long denom = 1;
    for (std::size_t r = 0; r < parts.size(); ++r)
        for (int c = 0; c < parts[r]; ++c)
            denom *= (parts[r] - c) + (conj[c] - static_cast<int>(r)) - 1;
    if (numer % denom != 0) throw std::logic_error("hook length division not exact");
    return numer / denom;
}

namespace {

void words_rec(std::vector<int>& budget, int remaining, std::vector<int>& acc,
               const std::function<void(const std::vector<int>&)>& visit) {
    if (remaining == 0) {
        visit(acc);
        return;
    }
    for (std::size_t v = 0; v < budget.size(); ++v) {
        if (budget[v] == 0) continue;
        --budget[v];
        acc.push_back(static_cast<int>(v) + 1);
        words_rec(budget, remaining - 1, acc, visit);
        acc.pop_back();
        ++budget[v];
    }
}

void for_each_word(const std::vector<int>& weight,
                   const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> budget = weight, acc;
    int n = std::accumulate(weight.begin(), weight.end(), 0);
    words_rec(budget, n, acc, visit);
}

int direct_inv(const std::vector<int>& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

int direct_maj(const std::vector<int>& w) {
    int m = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) m += static_cast<int>(i) + 1;
    return m;
}

using Monomial = std::vector<int>;
using MonomialPoly = std::map<Monomial, long long>;

// All SSYT exponent vectors of the shape with entries <= max_entry, as
// monomials in max_entry variables (a local filler, separate from the
// library's enumerator).
void ssyt_rec(const std::vector<int>& parts, int row, int col,
              std::vector<std::vector<int>>& rows, Monomial& expo, int max_entry,
              const std::function<void(const Monomial&)>& visit) {
    if (row == static_cast<int>(parts.size())) {
        visit(expo);
        return;
    }
    int nrow = row, ncol = col + 1;
    if (ncol == parts[row]) {
        ++nrow;
        ncol = 0;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, rows[row][col - 1]);
    if (row > 0) lo = std::max(lo, rows[row - 1][col] + 1);
    for (int v = lo; v <= max_entry; ++v) {
        rows[row][col] = v;
        ++expo[v - 1];
        ssyt_rec(parts, nrow, ncol, rows, expo, max_entry, visit);
        --expo[v - 1];
    }
}

std::vector<Monomial> schur_monomials(const Partition& shape, int max_entry) {
    std::vector<Monomial> out;
    if (shape.empty()) {
        out.emplace_back(max_entry, 0);
        return out;
    }
    std::vector<std::vector<int>> rows;
    for (int p : shape.parts()) rows.emplace_back(p, 0);
    Monomial expo(max_entry, 0);
    ssyt_rec(shape.parts(), 0, 0, rows, expo, max_entry,
             [&](const Monomial& m) { out.push_back(m); });
    return out;
}

// Schur multiplicity from the monomial expansion:
// a_nu = sum_sigma sgn(sigma) * coeff(nu + delta - sigma(delta)).
long long alternant_multiplicity(const MonomialPoly& chi, const Partition& nu, int vars) {
    std::vector<int> delta(vars);
    for (int i = 0; i < vars; ++i) delta[i] = vars - 1 - i;
    std::vector<int> sigma = delta;
    std::sort(sigma.begin(), sigma.end());
    long long total = 0;
    do {
        // sgn relative to the descending arrangement delta itself, which is
        // the identity permutation of the alternant
        int sign_parity = (vars * (vars - 1) / 2 - direct_inv(sigma)) % 2;
        Monomial target(vars);
        bool ok = true;
        for (int i = 0; i < vars; ++i) {
            target[i] = nu.part(i) + delta[i] - sigma[i];
            if (target[i] < 0) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        auto it = chi.find(target);
        if (it == chi.end()) continue;
        total += (sign_parity ? -it->second : it->second);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

MonomialPoly power_of_monomial_list(const std::vector<Monomial>& mons, int copies,
                                    int vars) {
    MonomialPoly chi;
    chi[Monomial(vars, 0)] = 1;
    for (int step = 0; step < copies; ++step) {
        MonomialPoly next;
        for (const auto& [expo, coeff] : chi)
            for (const Monomial& m : mons) {
                Monomial sum(vars);
                for (int i = 0; i < vars; ++i) sum[i] = expo[i] + m[i];
                next[sum] += coeff;
            }
        chi = std::move(next);
    }
    return chi;
}

}  // namespace

IntLaurentPoly inv_sum_over_words(const std::vector<int>& weight) {
    IntLaurentPoly p;
    for_each_word(weight, [&](const std::vector<int>& w) {
        int e = direct_inv(w);
        p.set_coeff(e, p.coeff(e) + 1);
    });
    return p;
}

IntLaurentPoly maj_sum_over_words(const std::vector<int>& weight) {
    IntLaurentPoly p;
    for_each_word(weight, [&](const std::vector<int>& w) {
        int e = direct_maj(w);
        p.set_coeff(e, p.coeff(e) + 1);
    });
    return p;
}

long long tensor_multiplicity(const Partition& mu, int copies, const Partition& nu) {
    const int vars = std::max(1, nu.num_parts());
    MonomialPoly chi =
        power_of_monomial_list(schur_monomials(mu, vars), copies, vars);
    return alternant_multiplicity(chi, nu, vars);
}

long long plethysm_multiplicity(const Partition& lambda, const Partition& mu,
                                const Partition& nu) {
    const int vars = std::max(1, nu.num_parts());
    std::vector<Monomial> inner = schur_monomials(mu, vars);
    const int letters = static_cast<int>(inner.size());
    MonomialPoly chi;
    for (const Monomial& outer : schur_monomials(lambda, letters)) {
        // `outer` records how many times each inner monomial is used
        Monomial expo(vars, 0);
        for (int l = 0; l < letters; ++l)
            for (int i = 0; i < vars; ++i) expo[i] += outer[l] * inner[l][i];
        ++chi[expo];
    }
    return alternant_multiplicity(chi, nu, vars);
}

}  // namespace llt::oracles
