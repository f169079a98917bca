#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Integer partitions and compositions.
//
// Conventions used throughout the library:
//   * partitions are weakly decreasing sequences of positive integers,
//   * compositions are sequences of positive integers (zeros dropped),
//   * cells of a Young diagram are 0-indexed (row, col), content = col - row,
//   * "weight vectors" are plain std::vector<int> and MAY contain zeros;
//     they are the letter-multiplicity profiles of words and tableaux.

namespace llt {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                    // sum of the parts
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;               // 0-based, 0 beyond the last part
    bool empty() const { return parts_.empty(); }

    bool contains_cell(int row, int col) const;
    int num_cells() const { return size(); }

    // weight vector of the given length (pads with zeros; rejects truncation)
    std::vector<int> to_weight(int length) const;

    bool operator==(const Partition&) const = default;
    std::strong_ordering operator<=>(const Partition& o) const;

    std::string to_string() const;       // "4,2,1"; "-" for the empty partition

private:
    std::vector<int> parts_;
};

class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);  // zero parts are dropped

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int num_parts() const { return static_cast<int>(parts_.size()); }

    Partition sorted() const;            // the underlying partition

    bool operator==(const Composition&) const = default;
    std::string to_string() const;

private:
    std::vector<int> parts_;
};

struct Cell {
    int row = 0;
    int col = 0;
    int content() const { return col - row; }
    bool operator==(const Cell&) const = default;
};

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

// All compositions of n into positive parts, at most max_parts of them.
std::vector<Composition> enumerate_compositions(int n, int max_parts);

// Dominance order: a dominates b iff all prefix sums of a are >= those of b.
// Only meaningful for |a| == |b|.
bool dominates(const Partition& a, const Partition& b);

// Parses "4,2,1" (whitespace tolerated around tokens). Empty string or "-"
// yields the empty partition. Throws std::invalid_argument on bad input.
Partition parse_partition(const std::string& text);
Composition parse_composition(const std::string& text);

long long binomial2(long long n);  // n*(n-1)/2, the pair count

}  // namespace llt
