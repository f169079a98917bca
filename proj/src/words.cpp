#include "llt/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace llt {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int v : letters_)
        if (v < 1) throw std::invalid_argument("word letters must be positive");
}

int Word::max_letter() const {
    int m = 0;
    for (int v : letters_) m = std::max(m, v);
    return m;
}

std::vector<int> Word::weight(int length) const {
    std::vector<int> w(length, 0);
    for (int v : letters_) {
        if (v > length) throw std::invalid_argument("word letter beyond weight length");
        ++w[v - 1];
    }
    return w;
}

std::string Word::to_string() const {
    std::ostringstream os;
    bool digits = max_letter() <= 9;
    for (int i = 0; i < length(); ++i) {
        if (!digits && i) os << ",";
        os << letters_[i];
    }
    return os.str();
}

int inv_word(const Word& w) {
    int inv = 0;
    const auto& a = w.letters();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] > a[j]) ++inv;
    return inv;
}

int maj_word(const Word& w) {
    int m = 0;
    const auto& a = w.letters();
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] > a[i + 1]) m += static_cast<int>(i) + 1;
    return m;
}

Word foata(const Word& w) {
    const auto& a = w.letters();
    if (a.size() <= 1) return w;
    std::vector<int> u = {a[0]};
    std::vector<int> next;
    for (std::size_t k = 1; k < a.size(); ++k) {
        const int x = a[k];
        const bool le = u.back() <= x;  // pivot condition: <= x, else > x
        next.clear();
        std::size_t block_start = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if ((u[i] <= x) == le) {
                // block u[block_start..i]; its last letter moves to the front
                next.push_back(u[i]);
                next.insert(next.end(), u.begin() + block_start, u.begin() + i);
                block_start = i + 1;
            }
        }
        u = next;
        u.push_back(x);
    }
    return Word(u);
}

Word foata_inverse(const Word& w) {
    const auto& a = w.letters();
    if (a.size() <= 1) return w;
    const int x = a.back();
    std::vector<int> v(a.begin(), a.end() - 1);
    // Blocks of v start at the pivot letters; the first letter decides the
    // pivot condition (all pivots sit on the same side of x).
    const bool le = v.front() <= x;
    std::vector<int> u;
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i + 1;
        while (j < v.size() && (v[j] <= x) != le) ++j;
        u.insert(u.end(), v.begin() + i + 1, v.begin() + j);
        u.push_back(v[i]);
        i = j;
    }
    std::vector<int> result = foata_inverse(Word(u)).letters();
    result.push_back(x);
    return Word(result);
}

Word rotate_gamma(const Word& w) {
    if (w.empty()) throw std::invalid_argument("rotate_gamma: empty word");
    std::vector<int> v;
    v.reserve(w.length());
    v.push_back(w.letters().back());
    v.insert(v.end(), w.letters().begin(), w.letters().end() - 1);
    return Word(v);
}

namespace {

void require_binary(const Word& w) {
    for (int v : w.letters())
        if (v != 1 && v != 2)
            throw std::invalid_argument("h statistics need a binary word");
}

}  // namespace

int h_0_k(const Word& w, int k) {
    require_binary(w);
    if (k == 0 || w.empty()) return 0;
    const int n = w.length();
    int twos = 0;
    for (int v : w.letters()) twos += (v == 2);
    const int mag = k > 0 ? k : -k;
    const int full = mag / n, rem = mag % n;
    int cnt = full * twos;
    if (k > 0) {
        for (int j = n - rem; j < n; ++j) cnt += (w.letter(j) == 2);
        return cnt;
    }
    for (int j = 0; j < rem; ++j) cnt += (w.letter(j) == 2);
    return -cnt;
}

int h_two(const Word& w, int k1, int k2) { return k1 + h_0_k(w, k2 - k1); }

std::pair<Word, Word> split_word(const Word& w) {
    std::vector<int> prime, doubleprime;
    doubleprime.reserve(w.length());
    for (int v : w.letters()) {
        if (v > 1) prime.push_back(v);
        doubleprime.push_back(v == 1 ? 1 : 2);
    }
    return {Word(prime), Word(doubleprime)};
}

Word merge_split(const Word& w_prime, const Word& w_doubleprime) {
    std::vector<int> out;
    out.reserve(w_doubleprime.length());
    std::size_t next = 0;
    for (int v : w_doubleprime.letters()) {
        if (v == 1) {
            out.push_back(1);
        } else {
            if (next >= w_prime.letters().size())
                throw std::invalid_argument("merge_split: inconsistent pair");
            out.push_back(w_prime.letters()[next++]);
        }
    }
    if (next != w_prime.letters().size())
        throw std::invalid_argument("merge_split: inconsistent pair");
    return Word(out);
}

int h_general(const Word& w, const KVector& kv) {
    const int m = static_cast<int>(kv.size());
    if (m == 0) {
        if (!w.empty()) throw std::invalid_argument("h_general: empty k-vector");
        return 0;
    }
    if (w.max_letter() > m)
        throw std::invalid_argument("h_general: k-vector shorter than alphabet");
    if (m == 1) return kv[0];
    if (m == 2) return h_two(w, kv[0], kv[1]);
    auto [prime, doubleprime] = split_word(w);
    std::vector<int> shifted;
    shifted.reserve(prime.length());
    for (int v : prime.letters()) shifted.push_back(v - 1);
    const int inner = h_general(Word(shifted), KVector(kv.begin() + 1, kv.end()));
    return h_two(doubleprime, kv[0], inner);
}

int alpha_prime(const Word& w, const KVector& kv) {
    return h_general(foata(w), kv);
}

TranspositionSchedule sort_schedule(const Word& w) {
    std::vector<int> v = w.letters();
    TranspositionSchedule schedule;
    for (std::size_t t = 0; t < v.size(); ++t) {
        std::size_t j = t;
        for (std::size_t i = t + 1; i < v.size(); ++i)
            if (v[i] < v[j]) j = i;
        // leftmost occurrence of the minimum, bubbled to position t
        for (std::size_t p = j; p > t; --p) {
            std::swap(v[p - 1], v[p]);
            schedule.indices.push_back(static_cast<int>(p));
        }
    }
    return schedule;
}

Word apply_schedule(const Word& w, const TranspositionSchedule& schedule) {
    std::vector<int> v = w.letters();
    for (int i : schedule.indices) {
        if (i < 1 || i >= static_cast<int>(v.size()))
            throw std::invalid_argument("apply_schedule: index out of range");
        std::swap(v[i - 1], v[i]);
    }
    return Word(v);
}

namespace {

void words_rec(std::vector<int>& budget, int remaining, std::vector<int>& acc,
               std::vector<Word>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (std::size_t v = 0; v < budget.size(); ++v) {
        if (budget[v] == 0) continue;
        --budget[v];
        acc.push_back(static_cast<int>(v) + 1);
        words_rec(budget, remaining - 1, acc, out);
        acc.pop_back();
        ++budget[v];
    }
}

}  // namespace

std::vector<Word> enumerate_words(const std::vector<int>& weight) {
    int n = 0;
    for (int w : weight) {
        if (w < 0) throw std::invalid_argument("enumerate_words: negative weight");
        n += w;
    }
    std::vector<Word> out;
    std::vector<int> budget = weight, acc;
    words_rec(budget, n, acc, out);
    return out;
}

Word parse_word(const std::string& text) {
    std::vector<int> letters;
    if (text.find(',') != std::string::npos) {
        std::istringstream is(text);
        std::string token;
        while (std::getline(is, token, ',')) {
            std::istringstream ts(token);
            int v;
            if (!(ts >> v)) throw std::invalid_argument("bad word letter: '" + token + "'");
            letters.push_back(v);
        }
    } else {
        for (char c : text) {
            if (c == ' ' || c == '\t') continue;
            if (c < '1' || c > '9') throw std::invalid_argument("bad word digit");
            letters.push_back(c - '0');
        }
    }
    return Word(letters);
}

}  // namespace llt
