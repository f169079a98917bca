#pragma once

#include "llt/engine.hpp"

#include <memory>

// Kostka and inverse Kostka coefficients, Schur expansion of weight-indexed
// q-polynomials, q-Littlewood-Richardson coefficients and their residue
// components, plethysm multiplicities through the RS splitting, and the
// character-theoretic eigenspace dimensions used to cross-check the
// maj-residue counts K_lambda^(i).
//
// Symmetric functions are represented solely by their monomial coordinates
// on partitions (WeightIndexedPoly); Schur coordinates come from exact
// unitriangular inversion of the Kostka matrix.

namespace llt {

// #SSTab(lambda, nu). Throws on size mismatch.
long long kostka(const Partition& lambda, const Partition& nu);

// Kostka matrix and its exact integer inverse over the partitions of n in
// reverse-lexicographic order (which refines dominance, so the matrix is
// upper unitriangular). K * Kinv = I is asserted at construction.
class KostkaMatrix {
public:
    static std::shared_ptr<const KostkaMatrix> get(int n);  // cached per size

    int size() const { return static_cast<int>(partitions_.size()); }
    const std::vector<Partition>& partitions() const { return partitions_; }
    int index_of(const Partition& p) const;

    long long k(int row, int col) const { return k_[idx(row, col)]; }
    long long kinv(int row, int col) const { return kinv_[idx(row, col)]; }
    long long k(const Partition& lambda, const Partition& nu) const;
    long long kinv(const Partition& lambda, const Partition& nu) const;

private:
    explicit KostkaMatrix(int n);
    std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * size() + c; }

    std::vector<Partition> partitions_;
    std::vector<long long> k_;
    std::vector<long long> kinv_;
};

// Schur coordinates c_nu = sum_rho Kinv_{rho,nu} f(rho); the inverse of
// multiplying by the Kostka matrix. The result carries every partition of
// the common size (zero polynomials included).
WeightIndexedPoly schur_expand(const WeightIndexedPoly& f);

// LR~(q) = sum_rho Kinv_{rho,nu} G_{mu^n, rho}(q).
IntLaurentPoly q_littlewood_richardson(const LLTInstance& inst, const Partition& nu);

// Schur expansion of the i-th residue component; the components sum to the
// full LR~ over i = 0..n-1.
IntLaurentPoly q_lr_component(const LLTInstance& inst, const Partition& nu, int residue);

// a_{lambda[mu]}^nu at q = 1, through the RS splitting with a fixed
// standard tableau of shape lambda.
long long plethysm_multiplicity(const Partition& lambda, const Partition& mu,
                                const Partition& nu);

// a_{S[mu]}^nu(q) = sum_rho Kinv_{rho,nu} G_{S[mu],rho}(q). May have
// negative coefficients.
IntLaurentPoly a_q_plethysm(const StandardTableau& s, const LLTInstance& inst,
                            const Partition& nu);

// #{S in STab(lambda) : maj(S) = i mod n}, n = |lambda|.
long long k_lambda_i(const Partition& lambda, int residue);

// Symmetric-group character chi^lambda(cycle type), Murnaghan-Nakayama.
long long mn_character(const Partition& lambda, const Partition& cycle_type);

// Ramanujan sum c_n(i): the integer value of the sum of i-th powers of the
// primitive n-th roots of unity.
long long ramanujan_sum(int n, int i);

// dim S^lambda[zeta_n^i], computed with integer arithmetic only:
// (1/n) sum_{d|n} chi^lambda((n/d)^d) c_{n/d}(i). Must equal k_lambda_i.
long long cyclic_eigenspace_dim(const Partition& lambda, int residue);

struct ScanFinding {
    StandardTableau tableau;
    Partition nu;
    IntLaurentPoly poly;
};

struct ScanAggregate {
    Partition nu;
    int residue = 0;
    IntLaurentPoly poly;
    bool nonnegative = true;
};

struct NegativityReport {
    Partition mu;
    int copies = 0;
    long long pairs_scanned = 0;
    std::vector<ScanFinding> findings;     // every a_{S[mu]}^nu(q) with a
                                           // negative coefficient
    std::vector<ScanAggregate> aggregates; // residue-class sums LR~^(i)
};

// Enumerates (S, nu) over STab(n) x partitions of n|mu| and reports every
// a_{S[mu]}^nu(q) with a negative coefficient, together with the
// residue-class aggregates. Makes no claim that negatives exist or not.
NegativityReport negativity_scan(const LLTInstance& inst);

}  // namespace llt
