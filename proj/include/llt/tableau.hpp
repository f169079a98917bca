#pragma once

#include "llt/partition.hpp"

#include <vector>

// Semistandard and standard Young tableaux, tuples of equal shape, the
// reading-word total order, and Robinson-Schensted row insertion over any
// totally ordered alphabet of integers.
//
// Tableaux are stored as ragged rows; rows weakly increase left to right
// and columns strictly increase top to bottom. The reading word is the
// concatenation of the rows, top row first.

namespace llt {

std::vector<Cell> shape_cells(const Partition& shape);  // row-major order

class SemistandardTableau {
public:
    SemistandardTableau() = default;
    explicit SemistandardTableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int entry(int row, int col) const { return rows_[row][col]; }
    int num_cells() const;
    int max_entry() const;  // 0 for the empty tableau

    std::vector<int> reading_word() const;
    std::vector<int> weight(int length) const;  // letter multiplicities 1..length

    bool operator==(const SemistandardTableau&) const = default;

    std::string to_string() const;  // rows joined by "/", entries by ","

private:
    std::vector<std::vector<int>> rows_;
};

// Lexicographic comparison of reading words; a total order on SSTab(mu).
// Throws std::invalid_argument on unequal shapes.
std::strong_ordering tableau_compare(const SemistandardTableau& a,
                                     const SemistandardTableau& b);

class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return tableau_.rows(); }
    Partition shape() const { return tableau_.shape(); }
    int size() const { return tableau_.num_cells(); }
    const SemistandardTableau& as_semistandard() const { return tableau_; }

    // Row index (0-based) holding the value v in 1..size().
    int row_of(int value) const;

    bool operator==(const StandardTableau&) const = default;
    std::string to_string() const { return tableau_.to_string(); }

private:
    SemistandardTableau tableau_;
    std::vector<int> row_of_;  // value-1 -> row
};

// Sum of the descents: positions i with i+1 strictly below i.
int maj_standard(const StandardTableau& s);

class TableauTuple {
public:
    TableauTuple() = default;
    explicit TableauTuple(std::vector<SemistandardTableau> components);

    const std::vector<SemistandardTableau>& components() const { return components_; }
    int size() const { return static_cast<int>(components_.size()); }
    const SemistandardTableau& operator[](int i) const { return components_[i]; }
    Partition common_shape() const;
    std::vector<int> weight(int length) const;

    bool operator==(const TableauTuple&) const = default;
    std::string to_string() const;  // "(11,12,23)" style via reading words

private:
    std::vector<SemistandardTableau> components_;
};

// All SSYT of the given shape and exact weight (weight[k] copies of the
// letter k+1; zeros allowed), sorted by the reading-word total order.
std::vector<SemistandardTableau> enumerate_sstab(const Partition& shape,
                                                 const std::vector<int>& weight);
std::vector<SemistandardTableau> enumerate_sstab(const Partition& shape,
                                                 const Composition& weight);

// All SSYT with entries in 1..max_entry, same order.
std::vector<SemistandardTableau> enumerate_sstab_bounded(const Partition& shape,
                                                         int max_entry);

std::vector<StandardTableau> enumerate_standard(const Partition& shape);

// Robinson-Schensted row insertion: bump the leftmost entry strictly
// greater than the inserted letter. P is semistandard over the alphabet,
// Q standard of the same shape, and maj(letters) = maj(Q).
struct RSResult {
    std::vector<std::vector<int>> insertion_rows;  // P, rows of alphabet letters
    StandardTableau recording;                     // Q
};
RSResult rs_correspondence(const std::vector<int>& letters);

// RS over the tableau alphabet: components are ranked by tableau_compare
// and the ranks inserted. P's letters are tableaux.
struct RSTupleResult {
    std::vector<std::vector<SemistandardTableau>> insertion_rows;
    StandardTableau recording;
};
RSTupleResult rs_correspondence(const TableauTuple& tuple);

// Parses "1,2/3": rows separated by "/", entries comma-separated,
// whitespace tolerated. Validates semistandardness / standardness.
SemistandardTableau parse_semistandard(const std::string& text);
StandardTableau parse_standard(const std::string& text);

}  // namespace llt
