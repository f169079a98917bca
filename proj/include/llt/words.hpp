#pragma once

#include <string>
#include <vector>

// Mahonian statistics on words: inv, maj, the Foata bijection, the cyclic
// rotation gamma, the h_{k_1,...,k_m} statistics family with its maj-side
// companion alpha', and the sorting schedule of adjacent transpositions.
//
// A word is a sequence of positive integers. The h family uses the
// canonical recursion
//     h_{k_1}(w)          = k_1
//     h_{k_1,k_2}(w)      = k_1 + h_{0, k_2-k_1}(w)
//     h_{k_1,...,k_m}(w)  = h_{k_1, h_{k_2,...,k_m}(w')}(w'')
// where w' drops all 1s (letters shifted down) and w'' flattens letters
// above 1 to 2. h_{0,k} counts the letter 2 in the last k cyclic positions
// for k > 0 and is MINUS the count in the first |k| cyclic positions for
// k < 0; the signed k < 0 branch is what makes
//     q^{k a} [n choose a]_q = sum_w q^{n h_{0,k}(w) + inv(w)}
// hold for negative k.

namespace llt {

class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    const std::vector<int>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int letter(int i) const { return letters_[i]; }
    int max_letter() const;

    std::vector<int> weight(int length) const;

    bool operator==(const Word&) const = default;
    std::string to_string() const;  // digit string for alphabet <= 9

private:
    std::vector<int> letters_;
};

using KVector = std::vector<int>;

struct TranspositionSchedule {
    // Each index i means the adjacent transposition swapping 0-based
    // positions (i-1, i), applied left to right.
    std::vector<int> indices;
};

int inv_word(const Word& w);
int maj_word(const Word& w);

Word foata(const Word& w);
Word foata_inverse(const Word& w);

Word rotate_gamma(const Word& w);  // last letter to the front; rejects empty

int h_0_k(const Word& w, int k);             // binary words only
int h_two(const Word& w, int k1, int k2);    // k1 + h_{0, k2-k1}

// w' = w with all 1s removed, letters unchanged; w'' = letters above 1
// flattened to 2. inv(w) = inv(w') + inv(w'') and the pair determines w.
std::pair<Word, Word> split_word(const Word& w);
Word merge_split(const Word& w_prime, const Word& w_doubleprime);

int h_general(const Word& w, const KVector& kv);
int alpha_prime(const Word& w, const KVector& kv);  // h_general(foata(w), kv)

TranspositionSchedule sort_schedule(const Word& w);
Word apply_schedule(const Word& w, const TranspositionSchedule& schedule);

// All words of the given weight (weight[k] copies of letter k+1, zeros
// allowed), in lexicographic order.
std::vector<Word> enumerate_words(const std::vector<int>& weight);

Word parse_word(const std::string& text);

}  // namespace llt
