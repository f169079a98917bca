#include "llt/symfunc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace llt {

long long kostka(const Partition& lambda, const Partition& nu) {
    if (lambda.size() != nu.size())
        throw std::invalid_argument("kostka: |lambda| must equal |nu|");
    return static_cast<long long>(enumerate_sstab(lambda, nu.parts()).size());
}

KostkaMatrix::KostkaMatrix(int n) : partitions_(enumerate_partitions(n)) {
    const int m = size();
    k_.assign(static_cast<std::size_t>(m) * m, 0);
    kinv_.assign(static_cast<std::size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            long long v = kostka(partitions_[i], partitions_[j]);
            k_[idx(i, j)] = v;
            if (i == j && v != 1)
                throw std::logic_error("Kostka diagonal entry is not 1");
            if (j < i && v != 0)
                throw std::logic_error("Kostka matrix not triangular in reverse-lex order");
        }
    for (int j = 0; j < m; ++j) {
        kinv_[idx(j, j)] = 1;
        for (int i = j - 1; i >= 0; --i) {
            long long acc = 0;
            for (int t = i + 1; t <= j; ++t) acc += k_[idx(i, t)] * kinv_[idx(t, j)];
            kinv_[idx(i, j)] = -acc;
        }
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            long long acc = 0;
            for (int t = 0; t < m; ++t) acc += k_[idx(i, t)] * kinv_[idx(t, j)];
            if (acc != (i == j ? 1 : 0))
                throw std::logic_error("Kostka inverse verification failed");
        }
}

std::shared_ptr<const KostkaMatrix> KostkaMatrix::get(int n) {
    static std::mutex mtx;
    static std::map<int, std::shared_ptr<const KostkaMatrix>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto km = std::shared_ptr<const KostkaMatrix>(new KostkaMatrix(n));
    cache.emplace(n, km);
    return km;
}

int KostkaMatrix::index_of(const Partition& p) const {
    auto it = std::find(partitions_.begin(), partitions_.end(), p);
    if (it == partitions_.end())
        throw std::invalid_argument("KostkaMatrix: partition of wrong size");
    return static_cast<int>(it - partitions_.begin());
}

long long KostkaMatrix::k(const Partition& lambda, const Partition& nu) const {
    return k(index_of(lambda), index_of(nu));
}

long long KostkaMatrix::kinv(const Partition& lambda, const Partition& nu) const {
    return kinv(index_of(lambda), index_of(nu));
}

WeightIndexedPoly schur_expand(const WeightIndexedPoly& f) {
    if (f.empty()) return {};
    const int n = f.begin()->first.size();
    for (const auto& [p, poly] : f)
        if (p.size() != n)
            throw std::invalid_argument("schur_expand: mixed partition sizes");
    auto km = KostkaMatrix::get(n);
    WeightIndexedPoly out;
    for (int j = 0; j < km->size(); ++j) {
        IntLaurentPoly c;
        for (int i = 0; i < km->size(); ++i) {
            long long coeff = km->kinv(i, j);
            if (coeff == 0) continue;
            auto it = f.find(km->partitions()[i]);
            if (it == f.end() || it->second.is_zero()) continue;
            c += it->second * IntLaurentPoly(coeff);
        }
        out.emplace(km->partitions()[j], std::move(c));
    }
    return out;
}

IntLaurentPoly q_littlewood_richardson(const LLTInstance& inst, const Partition& nu) {
    if (nu.size() != inst.total_size())
        throw std::invalid_argument("q_littlewood_richardson: |nu| must equal n|mu|");
    auto km = KostkaMatrix::get(inst.total_size());
    const int j = km->index_of(nu);
    IntLaurentPoly out;
    for (int i = 0; i < km->size(); ++i) {
        long long c = km->kinv(i, j);
        if (c == 0) continue;
        out += llt_coefficient(inst, km->partitions()[i]) * IntLaurentPoly(c);
    }
    return out;
}

IntLaurentPoly q_lr_component(const LLTInstance& inst, const Partition& nu, int residue) {
    if (residue < 0 || residue >= inst.copies)
        throw std::invalid_argument("q_lr_component: residue out of range");
    if (nu.size() != inst.total_size())
        throw std::invalid_argument("q_lr_component: |nu| must equal n|mu|");
    auto km = KostkaMatrix::get(inst.total_size());
    const int j = km->index_of(nu);
    IntLaurentPoly out;
    for (int i = 0; i < km->size(); ++i) {
        long long c = km->kinv(i, j);
        if (c == 0) continue;
        out += component_split(inst, km->partitions()[i])[residue] * IntLaurentPoly(c);
    }
    return out;
}

long long plethysm_multiplicity(const Partition& lambda, const Partition& mu,
                                const Partition& nu) {
    const int n = lambda.size();
    if (n < 1) throw std::invalid_argument("plethysm_multiplicity: lambda is empty");
    if (nu.size() != n * mu.size())
        throw std::invalid_argument("plethysm_multiplicity: |nu| must equal |lambda||mu|");
    LLTInstance inst(mu, n);
    const StandardTableau s = enumerate_standard(lambda).front();
    auto km = KostkaMatrix::get(nu.size());
    const int j = km->index_of(nu);
    long long a = 0;
    for (int i = 0; i < km->size(); ++i) {
        long long c = km->kinv(i, j);
        if (c == 0) continue;
        a += c * static_cast<long long>(
                     rs_class_tuples(s, inst, km->partitions()[i]).size());
    }
    return a;
}

IntLaurentPoly a_q_plethysm(const StandardTableau& s, const LLTInstance& inst,
                            const Partition& nu) {
    if (s.size() != inst.copies)
        throw std::invalid_argument("a_q_plethysm: tableau size must equal n");
    if (nu.size() != inst.total_size())
        throw std::invalid_argument("a_q_plethysm: |nu| must equal n|mu|");
    auto km = KostkaMatrix::get(inst.total_size());
    const int j = km->index_of(nu);
    IntLaurentPoly out;
    for (int i = 0; i < km->size(); ++i) {
        long long c = km->kinv(i, j);
        if (c == 0) continue;
        out += class_poly(s, inst, km->partitions()[i]) * IntLaurentPoly(c);
    }
    return out;
}

long long k_lambda_i(const Partition& lambda, int residue) {
    const int n = lambda.size();
    if (n < 1) throw std::invalid_argument("k_lambda_i: lambda is empty");
    if (residue < 0 || residue >= n)
        throw std::invalid_argument("k_lambda_i: residue out of range");
    long long count = 0;
    for (const StandardTableau& s : enumerate_standard(lambda))
        if (maj_standard(s) % n == residue) ++count;
    return count;
}

namespace {

// Border-strip recursion over beta numbers: removing a strip of size r is
// subtracting r from one beta number while keeping them distinct; the sign
// is (-1)^(number of beta numbers jumped over).
long long mn_rec(const std::vector<int>& lambda, const std::vector<int>& cycles,
                 std::size_t idx) {
    if (idx == cycles.size()) return 1;
    const int r = cycles[idx];
    const int rows = static_cast<int>(lambda.size());
    std::vector<int> beta(rows);
    for (int i = 0; i < rows; ++i) beta[i] = lambda[i] + (rows - 1 - i);
    long long total = 0;
    for (int i = 0; i < rows; ++i) {
        const int nb = beta[i] - r;
        if (nb < 0) continue;
        bool clash = false;
        int jumped = 0;
        for (int t = 0; t < rows; ++t) {
            if (t == i) continue;
            if (beta[t] == nb) {
                clash = true;
                break;
            }
            if (beta[t] > nb && beta[t] < beta[i]) ++jumped;
        }
        if (clash) continue;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> nl(rows);
        for (int t = 0; t < rows; ++t) nl[t] = nbeta[t] - (rows - 1 - t);
        while (!nl.empty() && nl.back() == 0) nl.pop_back();
        const long long sub = mn_rec(nl, cycles, idx + 1);
        total += (jumped % 2 != 0) ? -sub : sub;
    }
    return total;
}

int mobius(int m) {
    int result = 1;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        m /= p;
        if (m % p == 0) return 0;  // square factor
        result = -result;
    }
    if (m > 1) result = -result;
    return result;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& cycle_type) {
    if (lambda.size() != cycle_type.size())
        throw std::invalid_argument("mn_character: |lambda| must equal |cycle_type|");
    return mn_rec(lambda.parts(), cycle_type.parts(), 0);
}

long long ramanujan_sum(int n, int i) {
    if (n < 1) throw std::invalid_argument("ramanujan_sum: n must be >= 1");
    const int r = ((i % n) + n) % n;
    const int g = std::gcd(n, r);  // gcd(n, 0) = n
    long long total = 0;
    for (int d = 1; d <= g; ++d) {
        if (g % d) continue;
        total += static_cast<long long>(mobius(n / d)) * d;
    }
    return total;
}

long long cyclic_eigenspace_dim(const Partition& lambda, int residue) {
    const int n = lambda.size();
    if (n < 1) throw std::invalid_argument("cyclic_eigenspace_dim: lambda is empty");
    if (residue < 0 || residue >= n)
        throw std::invalid_argument("cyclic_eigenspace_dim: residue out of range");
    long long total = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        std::vector<int> cycle(d, n / d);  // gamma^(n/d)-power class: (n/d)^d
        total += mn_character(lambda, Partition(cycle)) * ramanujan_sum(n / d, residue);
    }
    if (total % n != 0)
        throw std::logic_error("cyclic_eigenspace_dim: non-integer dimension");
    return total / n;
}

NegativityReport negativity_scan(const LLTInstance& inst) {
    NegativityReport rep;
    rep.mu = inst.mu;
    rep.copies = inst.copies;
    const int n = inst.copies;
    auto km = KostkaMatrix::get(inst.total_size());
    const int m = km->size();

    // One enumeration pass per rho; class polynomials keyed by recording rows.
    std::map<std::vector<std::vector<int>>, std::map<int, IntLaurentPoly>> by_s;
    for (int i = 0; i < m; ++i)
        for (const auto& [s, poly] : class_polys_all(inst, km->partitions()[i]))
            by_s[s.rows()][i] = poly;

    for (const Partition& lam : enumerate_partitions(n))
        for (const StandardTableau& s : enumerate_standard(lam)) {
            auto it = by_s.find(s.rows());
            for (int j = 0; j < m; ++j) {
                IntLaurentPoly a;
                if (it != by_s.end())
                    for (int i = 0; i < m; ++i) {
                        long long c = km->kinv(i, j);
                        if (c == 0) continue;
                        auto pit = it->second.find(i);
                        if (pit == it->second.end()) continue;
                        a += pit->second * IntLaurentPoly(c);
                    }
                ++rep.pairs_scanned;
                if (a.has_negative_coeff())
                    rep.findings.push_back({s, km->partitions()[j], a});
            }
        }

    for (int j = 0; j < m; ++j)
        for (int r = 0; r < n; ++r) {
            IntLaurentPoly p = q_lr_component(inst, km->partitions()[j], r);
            rep.aggregates.push_back({km->partitions()[j], r, p, !p.has_negative_coeff()});
        }
    return rep;
}

}  // namespace llt
