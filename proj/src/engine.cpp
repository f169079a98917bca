#include "llt/engine.hpp"

#include "llt/qseries.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace llt {

LLTInstance::LLTInstance(Partition shape, int n) : mu(std::move(shape)), copies(n) {
    if (n < 1) throw std::invalid_argument("LLTInstance: need at least one copy");
}

namespace {

// Cell-pair index tables for one shape, over the row-major cell order
// (which matches the reading word). same: c(u) == c(v); adjacent:
// c(u) == c(v) - 1. Both lists hold ordered cell-index pairs.
struct ShapePairs {
    std::vector<std::pair<int, int>> same;
    std::vector<std::pair<int, int>> adjacent;
};

ShapePairs make_shape_pairs(const Partition& mu) {
    ShapePairs sp;
    std::vector<Cell> cells = shape_cells(mu);
    for (std::size_t u = 0; u < cells.size(); ++u)
        for (std::size_t v = 0; v < cells.size(); ++v) {
            int cu = cells[u].content(), cv = cells[v].content();
            if (cu == cv) sp.same.emplace_back(u, v);
            if (cu == cv - 1) sp.adjacent.emplace_back(u, v);
        }
    return sp;
}

int inversion_pair_flat(const ShapePairs& sp, const std::vector<int>& earlier,
                        const std::vector<int>& later) {
    int count = 0;
    for (auto [u, v] : sp.same) count += earlier[u] > later[v];
    for (auto [u, v] : sp.adjacent) count += later[u] > earlier[v];
    return count;
}

// Interned SSTab(mu) with entries <= max_entry, sorted by the reading-word
// total order, with the full pairwise inversion matrix and a support-mask
// index used to enumerate weight-constrained tuples quickly.
struct Universe {
    Partition mu;
    int max_entry = 0;
    int d1 = 0, d2 = 0;
    ShapePairs pairs;
    std::vector<SemistandardTableau> tabs;
    std::vector<std::vector<int>> flat;                     // reading words
    std::vector<std::vector<std::pair<int, int>>> sparse;   // (letter-1, count)
    std::vector<std::uint32_t> support;
    std::size_t count = 0;
    std::vector<std::uint16_t> ipmat;
    std::vector<std::uint32_t> bucket_mask;                 // ascending
    std::vector<std::vector<int>> bucket_ids;

    int ip(int a, int b) const { return ipmat[static_cast<std::size_t>(a) * count + b]; }
};

std::shared_ptr<const Universe> build_universe(const Partition& mu, int max_entry) {
    if (max_entry > 31)
        throw std::invalid_argument("weight has too many letters (limit 31)");
    auto u = std::make_shared<Universe>();
    u->mu = mu;
    u->max_entry = max_entry;
    u->d1 = d1_shape(mu);
    u->d2 = d2_shape(mu);
    u->pairs = make_shape_pairs(mu);
    u->tabs = enumerate_sstab_bounded(mu, max_entry);
    u->count = u->tabs.size();
    u->flat.reserve(u->count);
    u->sparse.reserve(u->count);
    u->support.reserve(u->count);
    std::map<std::uint32_t, std::vector<int>> buckets;
    for (std::size_t id = 0; id < u->count; ++id) {
        const auto& t = u->tabs[id];
        u->flat.push_back(t.reading_word());
        std::vector<int> w = t.weight(max_entry);
        std::vector<std::pair<int, int>> sp;
        std::uint32_t mask = 0;
        for (int l = 0; l < max_entry; ++l)
            if (w[l] > 0) {
                sp.emplace_back(l, w[l]);
                mask |= 1u << l;
            }
        u->sparse.push_back(std::move(sp));
        u->support.push_back(mask);
        buckets[mask].push_back(static_cast<int>(id));
    }
    u->ipmat.resize(u->count * u->count);
    for (std::size_t a = 0; a < u->count; ++a)
        for (std::size_t b = 0; b < u->count; ++b) {
            int ip = inversion_pair_flat(u->pairs, u->flat[a], u->flat[b]);
            u->ipmat[a * u->count + b] = static_cast<std::uint16_t>(ip);
        }
    for (auto& [mask, ids] : buckets) {
        u->bucket_mask.push_back(mask);
        u->bucket_ids.push_back(std::move(ids));
    }
    return u;
}

std::shared_ptr<const Universe> get_universe(const Partition& mu, int max_entry) {
    static std::mutex mtx;
    static std::map<std::pair<std::vector<int>, int>, std::shared_ptr<const Universe>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(mu.parts(), max_entry);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto u = build_universe(mu, max_entry);
    cache.emplace(std::move(key), u);
    return u;
}

// Ids whose weight fits the remaining budget, ascending, optionally
// restricted to ids >= min_id. Chooses between enumerating submasks of the
// budget support and scanning the bucket table, whichever is smaller.
void collect_candidates(const Universe& u, const std::vector<int>& budget,
                        std::uint32_t bsup, int min_id, std::vector<int>& out) {
    out.clear();
    auto try_bucket = [&](std::size_t bi) {
        const auto& ids = u.bucket_ids[bi];
        auto it = std::lower_bound(ids.begin(), ids.end(), min_id);
        for (; it != ids.end(); ++it) {
            int id = *it;
            bool fits = true;
            for (auto [l, c] : u.sparse[id])
                if (budget[l] < c) {
                    fits = false;
                    break;
                }
            if (fits) out.push_back(id);
        }
    };
    const std::size_t nb = u.bucket_mask.size();
    const unsigned pc = static_cast<unsigned>(std::popcount(bsup));
    if (pc < 20 && (1ull << pc) < 2 * nb) {
        std::uint32_t s = bsup;
        for (;;) {
            auto it = std::lower_bound(u.bucket_mask.begin(), u.bucket_mask.end(), s);
            if (it != u.bucket_mask.end() && *it == s)
                try_bucket(static_cast<std::size_t>(it - u.bucket_mask.begin()));
            if (s == 0) break;
            s = (s - 1) & bsup;
        }
        std::sort(out.begin(), out.end());
    } else {
        for (std::size_t bi = 0; bi < nb; ++bi)
            if ((u.bucket_mask[bi] & ~bsup) == 0) try_bucket(bi);
        std::sort(out.begin(), out.end());
    }
}

// Enumerates the tuples (as id sequences over u.tabs) whose weights sum to
// the budget, calling leaf(ids, inv) with the inversion number attached.
// With nondecreasing=true only weakly increasing id sequences are visited.
template <class Leaf>
void walk_tuples(const Universe& u, std::vector<int> budget, int n, bool nondecreasing,
                 Leaf&& leaf) {
    std::uint32_t bsup = 0;
    for (std::size_t l = 0; l < budget.size(); ++l)
        if (budget[l] > 0) bsup |= 1u << l;
    std::vector<int> ids(n, 0);
    std::vector<std::vector<int>> scratch(n);

    auto rec = [&](auto&& self, int depth, long long inv) -> void {
        if (depth == n) {
            leaf(static_cast<const std::vector<int>&>(ids), inv);
            return;
        }
        std::vector<int>& cand = scratch[depth];
        collect_candidates(u, budget, bsup, nondecreasing && depth > 0 ? ids[depth - 1] : 0,
                           cand);
        for (int id : cand) {
            long long add = 0;
            for (int a = 0; a < depth; ++a) add += u.ip(ids[a], id);
            ids[depth] = id;
            std::uint32_t saved = bsup;
            for (auto [l, c] : u.sparse[id]) {
                budget[l] -= c;
                if (budget[l] == 0) bsup &= ~(1u << l);
            }
            self(self, depth + 1, inv + add);
            for (auto [l, c] : u.sparse[id]) budget[l] += c;
            bsup = saved;
        }
    };
    rec(rec, 0, 0);
}

// Growable exponent histogram with possibly negative exponents.
class ExpHist {
public:
    void add(long long exponent) {
        int e = static_cast<int>(exponent);
        if (counts_.empty()) {
            offset_ = -e;
            counts_.assign(1, 0);
        } else if (e + offset_ < 0) {
            int grow = -(e + offset_);
            counts_.insert(counts_.begin(), grow, 0);
            offset_ += grow;
        } else if (e + offset_ >= static_cast<int>(counts_.size())) {
            counts_.resize(e + offset_ + 1, 0);
        }
        ++counts_[e + offset_];
    }

    IntLaurentPoly to_poly() const {
        return IntLaurentPoly::from_histogram(counts_, -offset_);
    }

private:
    int offset_ = 0;
    std::vector<long long> counts_;
};

std::vector<int> checked_weight(const LLTInstance& inst, const std::vector<int>& weight) {
    int total = 0;
    for (int w : weight) {
        if (w < 0) throw std::invalid_argument("weight entries must be >= 0");
        total += w;
    }
    if (total != inst.total_size())
        throw std::invalid_argument("weight size must equal n|mu|");
    return weight;
}

// Canonical k-vector over interned ids: blocks are the distinct ids of the
// sorted tuple, rho their multiplicities.
void canonical_k_ids(const Universe& u, const std::vector<int>& sorted_ids,
                     std::vector<int>& blocks, std::vector<int>& rho, KVector& kv) {
    blocks.clear();
    rho.clear();
    for (int id : sorted_ids) {
        if (!blocks.empty() && blocks.back() == id) {
            ++rho.back();
        } else {
            blocks.push_back(id);
            rho.push_back(1);
        }
    }
    const int m = static_cast<int>(blocks.size());
    const int dd = u.d1 + u.d2;
    kv.assign(m, 0);
    int suffix = 0;
    for (int j = m - 1; j >= 0; --j) {
        long long acc = -static_cast<long long>(suffix) * dd;
        for (int i = 0; i < j; ++i)
            acc += static_cast<long long>(u.ip(blocks[i], blocks[j])) * rho[i];
        kv[j] = static_cast<int>(acc);
        suffix += rho[j];
    }
}

// alpha and maj of one tuple given as ids; shared by theorem_b_rhs and the
// RS class polynomials.
std::pair<int, int> alpha_maj_ids(const Universe& u, const std::vector<int>& ids) {
    std::vector<int> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> blocks, rho;
    KVector kv;
    canonical_k_ids(u, sorted, blocks, rho, kv);
    std::vector<int> letters;
    letters.reserve(ids.size());
    for (int id : ids) {
        auto it = std::lower_bound(blocks.begin(), blocks.end(), id);
        letters.push_back(static_cast<int>(it - blocks.begin()) + 1);
    }
    Word w(letters);
    return {alpha_prime(w, kv), maj_word(w)};
}

}  // namespace

int inversion_pair(const SemistandardTableau& earlier, const SemistandardTableau& later) {
    if (earlier.shape() != later.shape())
        throw std::invalid_argument("inversion_pair: shapes differ");
    ShapePairs sp = make_shape_pairs(earlier.shape());
    return inversion_pair_flat(sp, earlier.reading_word(), later.reading_word());
}

long long inversion_number(const TableauTuple& t) {
    long long total = 0;
    if (t.size() == 0) return 0;
    ShapePairs sp = make_shape_pairs(t.common_shape());
    std::vector<std::vector<int>> flat;
    flat.reserve(t.size());
    for (const auto& c : t.components()) flat.push_back(c.reading_word());
    for (int a = 0; a < t.size(); ++a)
        for (int b = a + 1; b < t.size(); ++b)
            total += inversion_pair_flat(sp, flat[a], flat[b]);
    return total;
}

int tuple_maj(const TableauTuple& t) {
    int m = 0;
    for (int i = 1; i < t.size(); ++i)
        if (tableau_compare(t[i - 1], t[i]) > 0) m += i;
    return m;
}

int d1_shape(const Partition& mu) {
    int d = 0;
    for (const Cell& c : shape_cells(mu)) d += std::min(c.row, c.col);
    return d;
}

int d2_shape(const Partition& mu) {
    int d = 0;
    for (const Cell& c : shape_cells(mu)) d += std::min(c.row, c.col + 1);
    return d;
}

long long d_min_closed(const LLTInstance& inst) {
    return binomial2(inst.copies) * (d1_shape(inst.mu) + d2_shape(inst.mu));
}

long long d_min_constant_oracle(const LLTInstance& inst, int max_entry) {
    auto u = get_universe(inst.mu, max_entry);
    if (u->count == 0)
        throw std::invalid_argument("d_min_constant_oracle: no tableaux within entry bound");
    long long best = -1;
    for (std::size_t a = 0; a < u->count; ++a) {
        long long inv = binomial2(inst.copies) * u->ip(a, a);
        if (best < 0 || inv < best) best = inv;
    }
    return best;
}

long long d_min_full_search(const LLTInstance& inst, int max_entry) {
    auto uptr = get_universe(inst.mu, max_entry);
    const Universe& u = *uptr;
    if (u.count == 0)
        throw std::invalid_argument("d_min_full_search: no tableaux within entry bound");
    const int n = inst.copies;
    long long best = binomial2(n) * u.ip(0, 0);  // the first constant tuple
    std::vector<int> ids(n, 0);
    auto rec = [&](auto&& self, int depth, long long inv) -> void {
        if (depth == n) {
            best = inv;  // guarded below, so this is a strict improvement
            return;
        }
        for (std::size_t c = 0; c < u.count; ++c) {
            long long add = 0;
            for (int a = 0; a < depth; ++a) add += u.ip(ids[a], static_cast<int>(c));
            if (inv + add >= best) continue;  // all future pair counts are >= 0
            ids[depth] = static_cast<int>(c);
            self(self, depth + 1, inv + add);
        }
    };
    rec(rec, 0, 0);
    return best;
}

BlockDecomposition canonical_k(const TableauTuple& sorted_tuple) {
    const int n = sorted_tuple.size();
    for (int i = 1; i < n; ++i)
        if (tableau_compare(sorted_tuple[i - 1], sorted_tuple[i]) > 0)
            throw std::invalid_argument("canonical_k: tuple is not weakly increasing");
    BlockDecomposition bd;
    std::vector<int> rho;
    for (int i = 0; i < n; ++i) {
        if (!bd.blocks.empty() &&
            tableau_compare(bd.blocks.back(), sorted_tuple[i]) == 0) {
            ++rho.back();
        } else {
            bd.blocks.push_back(sorted_tuple[i]);
            rho.push_back(1);
        }
    }
    const int m = static_cast<int>(bd.blocks.size());
    const Partition mu = sorted_tuple.common_shape();
    const int dd = d1_shape(mu) + d2_shape(mu);
    bd.k.assign(m, 0);
    int suffix = 0;
    for (int j = m - 1; j >= 0; --j) {
        long long acc = -static_cast<long long>(suffix) * dd;
        for (int i = 0; i < j; ++i)
            acc += static_cast<long long>(inversion_pair(bd.blocks[i], bd.blocks[j])) * rho[i];
        bd.k[j] = static_cast<int>(acc);
        suffix += rho[j];
    }
    bd.rho = Composition(rho);
    long long lhs = 0;
    for (int j = 0; j < m; ++j) lhs += static_cast<long long>(bd.k[j]) * rho[j];
    long long d_mu = binomial2(n) * dd;
    if (n > 0 && lhs != inversion_number(sorted_tuple) - d_mu)
        throw std::logic_error("canonical_k: k-vector invariant violated");
    return bd;
}

int alpha_statistic(const TableauTuple& t) {
    std::vector<SemistandardTableau> sorted = t.components();
    std::sort(sorted.begin(), sorted.end(),
              [](const SemistandardTableau& a, const SemistandardTableau& b) {
                  return tableau_compare(a, b) < 0;
              });
    BlockDecomposition bd = canonical_k(TableauTuple(sorted));
    std::vector<int> letters;
    letters.reserve(t.size());
    for (const auto& c : t.components()) {
        int rank = 0;
        while (tableau_compare(bd.blocks[rank], c) != 0) ++rank;
        letters.push_back(rank + 1);
    }
    return alpha_prime(Word(letters), bd.k);
}

IntLaurentPoly llt_coefficient(const LLTInstance& inst, const std::vector<int>& weight) {
    auto w = checked_weight(inst, weight);
    auto u = get_universe(inst.mu, static_cast<int>(w.size()));
    ExpHist hist;
    walk_tuples(*u, w, inst.copies, false,
                [&](const std::vector<int>&, long long inv) { hist.add(inv); });
    return hist.to_poly();
}

IntLaurentPoly llt_coefficient(const LLTInstance& inst, const Partition& nu) {
    return llt_coefficient(inst, nu.parts());
}

IntLaurentPoly theorem_a_rhs(const LLTInstance& inst, const std::vector<int>& weight) {
    auto w = checked_weight(inst, weight);
    auto u = get_universe(inst.mu, static_cast<int>(w.size()));
    IntLaurentPoly result;
    std::map<std::vector<int>, IntLaurentPoly> multinomials;
    walk_tuples(*u, w, inst.copies, true,
                [&](const std::vector<int>& ids, long long inv) {
                    std::vector<int> rho;
                    for (std::size_t i = 0; i < ids.size(); ++i) {
                        if (i > 0 && ids[i] == ids[i - 1])
                            ++rho.back();
                        else
                            rho.push_back(1);
                    }
                    auto it = multinomials.find(rho);
                    if (it == multinomials.end())
                        it = multinomials.emplace(rho, q_multinomial(inst.copies, rho)).first;
                    result += it->second.shifted(static_cast<int>(inv));
                });
    return result;
}

IntLaurentPoly theorem_a_rhs(const LLTInstance& inst, const Partition& nu) {
    return theorem_a_rhs(inst, nu.parts());
}

IntLaurentPoly theorem_b_rhs(const LLTInstance& inst, const std::vector<int>& weight) {
    auto w = checked_weight(inst, weight);
    auto u = get_universe(inst.mu, static_cast<int>(w.size()));
    const long long d = d_min_closed(inst);
    const int n = inst.copies;
    ExpHist hist;
    walk_tuples(*u, w, n, false, [&](const std::vector<int>& ids, long long) {
        auto [alpha, maj] = alpha_maj_ids(*u, ids);
        hist.add(static_cast<long long>(n) * alpha + maj + d);
    });
    return hist.to_poly();
}

IntLaurentPoly theorem_b_rhs(const LLTInstance& inst, const Partition& nu) {
    return theorem_b_rhs(inst, nu.parts());
}

WeightIndexedPoly llt_polynomial(const LLTInstance& inst) {
    WeightIndexedPoly result;
    for (const Partition& nu : enumerate_partitions(inst.total_size()))
        result.emplace(nu, llt_coefficient(inst, nu));
    return result;
}

std::vector<IntLaurentPoly> component_split(const LLTInstance& inst, const Partition& nu) {
    return residue_split(llt_coefficient(inst, nu), inst.copies,
                         static_cast<int>(d_min_closed(inst)));
}

std::vector<TableauTuple> rs_class_tuples(const StandardTableau& s, const LLTInstance& inst,
                                          const Partition& nu) {
    if (s.size() != inst.copies)
        throw std::invalid_argument("rs_class_tuples: tableau size must equal n");
    auto w = checked_weight(inst, nu.parts());
    auto u = get_universe(inst.mu, static_cast<int>(w.size()));
    std::vector<TableauTuple> out;
    walk_tuples(*u, w, inst.copies, false, [&](const std::vector<int>& ids, long long) {
        std::vector<int> letters(ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i) letters[i] = ids[i] + 1;
        RSResult rs = rs_correspondence(letters);
        if (rs.recording == s) {
            std::vector<SemistandardTableau> comps;
            comps.reserve(ids.size());
            for (int id : ids) comps.push_back(u->tabs[id]);
            out.emplace_back(std::move(comps));
        }
    });
    return out;
}

IntLaurentPoly class_poly(const StandardTableau& s, const LLTInstance& inst,
                          const Partition& nu) {
    if (s.size() != inst.copies)
        throw std::invalid_argument("class_poly: tableau size must equal n");
    auto w = checked_weight(inst, nu.parts());
    auto u = get_universe(inst.mu, static_cast<int>(w.size()));
    const long long d = d_min_closed(inst);
    const int n = inst.copies;
    const int maj_s = maj_standard(s);
    ExpHist hist;
    bool any = false;
    walk_tuples(*u, w, n, false, [&](const std::vector<int>& ids, long long) {
        std::vector<int> letters(ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i) letters[i] = ids[i] + 1;
        RSResult rs = rs_correspondence(letters);
        if (rs.recording == s) {
            auto [alpha, maj] = alpha_maj_ids(*u, ids);
            (void)maj;
            hist.add(static_cast<long long>(n) * alpha + maj_s + d);
            any = true;
        }
    });
    return any ? hist.to_poly() : IntLaurentPoly{};
}

std::vector<std::pair<StandardTableau, IntLaurentPoly>> class_polys_all(
    const LLTInstance& inst, const Partition& nu) {
    auto w = checked_weight(inst, nu.parts());
    auto u = get_universe(inst.mu, static_cast<int>(w.size()));
    const long long d = d_min_closed(inst);
    const int n = inst.copies;
    std::map<std::vector<std::vector<int>>, ExpHist> hists;
    walk_tuples(*u, w, n, false, [&](const std::vector<int>& ids, long long) {
        std::vector<int> letters(ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i) letters[i] = ids[i] + 1;
        RSResult rs = rs_correspondence(letters);
        auto [alpha, maj] = alpha_maj_ids(*u, ids);
        (void)maj;
        hists[rs.recording.rows()].add(static_cast<long long>(n) * alpha +
                                       maj_standard(rs.recording) + d);
    });
    std::vector<std::pair<StandardTableau, IntLaurentPoly>> out;
    out.reserve(hists.size());
    for (const auto& [rows, hist] : hists)
        out.emplace_back(StandardTableau(rows), hist.to_poly());
    return out;
}

long long count_class_i(const LLTInstance& inst, const Partition& nu, int residue) {
    if (residue < 0 || residue >= inst.copies)
        throw std::invalid_argument("count_class_i: residue out of range");
    auto w = checked_weight(inst, nu.parts());
    auto u = get_universe(inst.mu, static_cast<int>(w.size()));
    long long count = 0;
    const int n = inst.copies;
    walk_tuples(*u, w, n, false, [&](const std::vector<int>& ids, long long) {
        int maj = 0;
        for (std::size_t i = 1; i < ids.size(); ++i)
            if (ids[i - 1] > ids[i]) maj += static_cast<int>(i);
        if (maj % n == residue) ++count;
    });
    return count;
}

std::vector<TableauTuple> enumerate_tuples(const LLTInstance& inst,
                                           const std::vector<int>& weight) {
    auto w = checked_weight(inst, weight);
    auto u = get_universe(inst.mu, static_cast<int>(w.size()));
    std::vector<TableauTuple> out;
    walk_tuples(*u, w, inst.copies, false, [&](const std::vector<int>& ids, long long) {
        std::vector<SemistandardTableau> comps;
        comps.reserve(ids.size());
        for (int id : ids) comps.push_back(u->tabs[id]);
        out.emplace_back(std::move(comps));
    });
    return out;
}

}  // namespace llt
