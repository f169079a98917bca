#pragma once

#include "llt/laurent.hpp"
#include "llt/partition.hpp"
#include "llt/tableau.hpp"
#include "llt/words.hpp"

#include <map>
#include <vector>

// LLT coefficients for n equal shapes: the inversion statistic on tableau
// tuples, the q-multinomial expansion over weakly increasing tuples, the
// statistic alpha built from canonical k-vectors and the h family, residue
// components, and the RS splitting into recording-tableau classes.
//
// llt_coefficient carries the reference semantics (a plain sum of q^Inv
// over every tuple of the given weight); theorem_a_rhs and theorem_b_rhs
// are the two expansion formulas and must agree with it bit for bit.

namespace llt {

struct LLTInstance {
    Partition mu;
    int copies = 1;  // number n of equal shapes

    LLTInstance(Partition shape, int n);
    int total_size() const { return copies * mu.size(); }
};

// Inversions contributed by an ordered pair of equal-shape tableaux:
// entries of `earlier` beating `later` on equal contents plus entries of
// `later` beating `earlier` across adjacent contents.
int inversion_pair(const SemistandardTableau& earlier,
                   const SemistandardTableau& later);

long long inversion_number(const TableauTuple& t);

// Sum of positions i (1-based) where component i-1 exceeds component i in
// the reading-word total order.
int tuple_maj(const TableauTuple& t);

// d1 = same-diagonal cell pairs  = sum over cells of min(row, col);
// d2 = adjacent-diagonal count   = sum over cells of min(row, col + 1).
// Any tableau T of shape mu has inversion_pair(T, T) = d1 + d2.
int d1_shape(const Partition& mu);
int d2_shape(const Partition& mu);

// Minimum inversion number over SSTab(mu)^n: closed form C(n,2)(d1+d2).
long long d_min_closed(const LLTInstance& inst);
// The same minimum taken over constant tuples with entries <= max_entry.
long long d_min_constant_oracle(const LLTInstance& inst, int max_entry);
// Exhaustive branch-and-bound minimum over ALL tuples with entries
// <= max_entry (test mode; sound pruning, so the result is exact).
long long d_min_full_search(const LLTInstance& inst, int max_entry);

struct BlockDecomposition {
    std::vector<SemistandardTableau> blocks;  // strictly increasing
    Composition rho;                          // multiplicities, sum = n
    KVector k;                                // sum k_j rho_j = Inv - d_mu
};

// Canonical k-vector of a weakly increasing tuple:
//   k_j = sum_{i<j} inversion_pair(U_i, U_j) rho_i
//         - (sum_{l>j} rho_l) (d1 + d2).
// Throws if the input is not weakly increasing; the invariant
// sum k_j rho_j = Inv(sorted) - d_mu is asserted.
BlockDecomposition canonical_k(const TableauTuple& sorted_tuple);

// alpha(T): sort the components, take the canonical k-vector, form the
// block-index word w of T (so maj(w) = tuple_maj(T)), return
// alpha_prime(w, k).
int alpha_statistic(const TableauTuple& t);

using WeightIndexedPoly = std::map<Partition, IntLaurentPoly>;

// Weight arguments: compositions (vectors with zeros allowed) are accepted
// everywhere; the partition overloads are the CLI-facing forms.
IntLaurentPoly llt_coefficient(const LLTInstance& inst, const std::vector<int>& weight);
IntLaurentPoly llt_coefficient(const LLTInstance& inst, const Partition& nu);

IntLaurentPoly theorem_a_rhs(const LLTInstance& inst, const std::vector<int>& weight);
IntLaurentPoly theorem_a_rhs(const LLTInstance& inst, const Partition& nu);

IntLaurentPoly theorem_b_rhs(const LLTInstance& inst, const std::vector<int>& weight);
IntLaurentPoly theorem_b_rhs(const LLTInstance& inst, const Partition& nu);

// Coefficient for every partition of n|mu| (symmetry makes partition
// weights sufficient).
WeightIndexedPoly llt_polynomial(const LLTInstance& inst);

// residue_split(llt_coefficient, n, d_mu): component i holds the terms
// with exponent = i + d_mu (mod n).
std::vector<IntLaurentPoly> component_split(const LLTInstance& inst, const Partition& nu);

// All tuples in SSTab(mu^n, nu) whose RS recording tableau equals S.
std::vector<TableauTuple> rs_class_tuples(const StandardTableau& s,
                                          const LLTInstance& inst, const Partition& nu);

// G_{S[mu],nu}(q) = sum over the RS class of q^{n alpha(T) + maj(S) + d_mu}.
IntLaurentPoly class_poly(const StandardTableau& s, const LLTInstance& inst,
                          const Partition& nu);

// #SSTab(mu^n, nu; i): tuples whose maj is congruent to i mod n.
long long count_class_i(const LLTInstance& inst, const Partition& nu, int residue);

// class_poly for every occupied recording tableau in one enumeration pass,
// sorted by the recording tableau's rows.
std::vector<std::pair<StandardTableau, IntLaurentPoly>> class_polys_all(
    const LLTInstance& inst, const Partition& nu);

// Every tuple of the given weight, in a fixed deterministic order
// (lexicographic in the total-order ranks of the components).
std::vector<TableauTuple> enumerate_tuples(const LLTInstance& inst,
                                           const std::vector<int>& weight);

}  // namespace llt
