#include "llt/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace llt {

std::vector<Cell> shape_cells(const Partition& shape) {
    std::vector<Cell> cells;
    cells.reserve(shape.size());
    for (int r = 0; r < shape.num_parts(); ++r)
        for (int c = 0; c < shape.part(r); ++c) cells.push_back({r, c});
    return cells;
}

SemistandardTableau::SemistandardTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].empty()) throw std::invalid_argument("tableau row is empty");
        if (r + 1 < rows_.size() && rows_[r].size() < rows_[r + 1].size())
            throw std::invalid_argument("tableau rows do not form a partition shape");
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (rows_[r][c] < 1) throw std::invalid_argument("tableau entries must be positive");
            if (c > 0 && rows_[r][c] < rows_[r][c - 1])
                throw std::invalid_argument("tableau row not weakly increasing");
            if (r > 0 && rows_[r][c] <= rows_[r - 1][c])
                throw std::invalid_argument("tableau column not strictly increasing");
        }
    }
}

Partition SemistandardTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(parts);
}

int SemistandardTableau::num_cells() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
}

int SemistandardTableau::max_entry() const {
    int m = 0;
    for (const auto& row : rows_)
        for (int v : row) m = std::max(m, v);
    return m;
}

std::vector<int> SemistandardTableau::reading_word() const {
    std::vector<int> w;
    w.reserve(num_cells());
    for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
    return w;
}

std::vector<int> SemistandardTableau::weight(int length) const {
    std::vector<int> w(length, 0);
    for (const auto& row : rows_)
        for (int v : row) {
            if (v > length) throw std::invalid_argument("tableau entry beyond weight length");
            ++w[v - 1];
        }
    return w;
}

std::string SemistandardTableau::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << "/";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) os << ",";
            os << rows_[r][c];
        }
    }
    return os.str();
}

std::strong_ordering tableau_compare(const SemistandardTableau& a,
                                     const SemistandardTableau& b) {
    if (a.shape() != b.shape())
        throw std::invalid_argument("tableau_compare: shapes differ");
    std::vector<int> wa = a.reading_word(), wb = b.reading_word();
    return std::lexicographical_compare_three_way(wa.begin(), wa.end(), wb.begin(),
                                                  wb.end());
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows)
    : tableau_(std::move(rows)) {
    int n = tableau_.num_cells();
    row_of_.assign(n, -1);
    for (std::size_t r = 0; r < tableau_.rows().size(); ++r)
        for (int v : tableau_.rows()[r]) {
            if (v < 1 || v > n || row_of_[v - 1] != -1)
                throw std::invalid_argument("standard tableau must contain 1..n once each");
            row_of_[v - 1] = static_cast<int>(r);
        }
}

int StandardTableau::row_of(int value) const {
    if (value < 1 || value > size())
        throw std::out_of_range("StandardTableau::row_of");
    return row_of_[value - 1];
}

int maj_standard(const StandardTableau& s) {
    int m = 0;
    for (int i = 1; i < s.size(); ++i)
        if (s.row_of(i + 1) > s.row_of(i)) m += i;
    return m;
}

TableauTuple::TableauTuple(std::vector<SemistandardTableau> components)
    : components_(std::move(components)) {
    for (std::size_t i = 1; i < components_.size(); ++i)
        if (components_[i].shape() != components_[0].shape())
            throw std::invalid_argument("tableau tuple components must share one shape");
}

Partition TableauTuple::common_shape() const {
    return components_.empty() ? Partition{} : components_[0].shape();
}

std::vector<int> TableauTuple::weight(int length) const {
    std::vector<int> w(length, 0);
    for (const auto& t : components_) {
        std::vector<int> tw = t.weight(length);
        for (int k = 0; k < length; ++k) w[k] += tw[k];
    }
    return w;
}

std::string TableauTuple::to_string() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < size(); ++i) {
        if (i) os << ";";
        os << components_[i].to_string();
    }
    os << ")";
    return os.str();
}

namespace {

// Backtracking filler over cells in row-major order. `budget` holds the
// remaining multiplicity per letter; `exact` demands the budget be used up.
void fill_rec(const Partition& shape, const std::vector<Cell>& cells, std::size_t idx,
              std::vector<std::vector<int>>& rows, std::vector<int>& budget, bool exact,
              std::vector<SemistandardTableau>& out) {
    if (idx == cells.size()) {
        if (exact)
            for (int b : budget)
                if (b != 0) return;
        out.emplace_back(rows);
        return;
    }
    const Cell cell = cells[idx];
    int lo = 1;
    if (cell.col > 0) lo = std::max(lo, rows[cell.row][cell.col - 1]);
    if (cell.row > 0) lo = std::max(lo, rows[cell.row - 1][cell.col] + 1);
    for (int v = lo; v <= static_cast<int>(budget.size()); ++v) {
        if (budget[v - 1] == 0) continue;
        --budget[v - 1];
        rows[cell.row].push_back(v);
        fill_rec(shape, cells, idx + 1, rows, budget, exact, out);
        rows[cell.row].pop_back();
        ++budget[v - 1];
    }
}

std::vector<SemistandardTableau> enumerate_fill(const Partition& shape,
                                                std::vector<int> budget, bool exact) {
    std::vector<SemistandardTableau> out;
    std::vector<Cell> cells = shape_cells(shape);
    std::vector<std::vector<int>> rows(shape.num_parts());
    fill_rec(shape, cells, 0, rows, budget, exact, out);
    std::sort(out.begin(), out.end(),
              [](const SemistandardTableau& a, const SemistandardTableau& b) {
                  return a.reading_word() < b.reading_word();
              });
    return out;
}

}  // namespace

std::vector<SemistandardTableau> enumerate_sstab(const Partition& shape,
                                                 const std::vector<int>& weight) {
    int total = 0;
    for (int w : weight) {
        if (w < 0) throw std::invalid_argument("enumerate_sstab: negative weight entry");
        total += w;
    }
    if (total != shape.size())
        throw std::invalid_argument("enumerate_sstab: weight size does not match shape");
    return enumerate_fill(shape, weight, /*exact=*/true);
}

std::vector<SemistandardTableau> enumerate_sstab(const Partition& shape,
                                                 const Composition& weight) {
    return enumerate_sstab(shape, weight.parts());
}

std::vector<SemistandardTableau> enumerate_sstab_bounded(const Partition& shape,
                                                         int max_entry) {
    if (max_entry < 0) throw std::invalid_argument("enumerate_sstab_bounded: bad bound");
    std::vector<int> budget(max_entry, shape.size());
    return enumerate_fill(shape, budget, /*exact=*/false);
}

std::vector<StandardTableau> enumerate_standard(const Partition& shape) {
    std::vector<int> weight(shape.size(), 1);
    std::vector<StandardTableau> out;
    for (const auto& t : enumerate_fill(shape, weight, /*exact=*/true))
        out.emplace_back(t.rows());
    return out;
}

RSResult rs_correspondence(const std::vector<int>& letters) {
    std::vector<std::vector<int>> p;
    std::vector<std::vector<int>> q;
    for (std::size_t step = 0; step < letters.size(); ++step) {
        int carry = letters[step];
        std::size_t row = 0;
        for (;; ++row) {
            if (row == p.size()) {
                p.emplace_back();
                q.emplace_back();
            }
            auto it = std::upper_bound(p[row].begin(), p[row].end(), carry);
            if (it == p[row].end()) {
                p[row].push_back(carry);
                q[row].push_back(static_cast<int>(step) + 1);
                break;
            }
            std::swap(*it, carry);
        }
    }
    return {std::move(p), StandardTableau(std::move(q))};
}

RSTupleResult rs_correspondence(const TableauTuple& tuple) {
    // Rank the components in the reading-word total order, insert the ranks.
    std::vector<SemistandardTableau> sorted = tuple.components();
    std::sort(sorted.begin(), sorted.end(),
              [](const SemistandardTableau& a, const SemistandardTableau& b) {
                  return tableau_compare(a, b) < 0;
              });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> ranks;
    ranks.reserve(tuple.size());
    for (const auto& t : tuple.components()) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), t,
                                   [](const SemistandardTableau& a,
                                      const SemistandardTableau& b) {
                                       return tableau_compare(a, b) < 0;
                                   });
        ranks.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    RSResult rs = rs_correspondence(ranks);
    RSTupleResult out;
    out.insertion_rows.reserve(rs.insertion_rows.size());
    for (const auto& row : rs.insertion_rows) {
        std::vector<SemistandardTableau> trow;
        trow.reserve(row.size());
        for (int rank : row) trow.push_back(sorted[rank - 1]);
        out.insertion_rows.push_back(std::move(trow));
    }
    out.recording = std::move(rs.recording);
    return out;
}

namespace {

std::vector<std::vector<int>> parse_rows(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::string row_text;
    std::istringstream is(text);
    while (std::getline(is, row_text, '/')) {
        std::vector<int> row;
        std::string token;
        std::istringstream rs(row_text);
        while (std::getline(rs, token, ',')) {
            std::istringstream ts(token);
            int v;
            if (!(ts >> v)) throw std::invalid_argument("bad tableau entry: '" + token + "'");
            std::string rest;
            ts >> rest;
            if (!rest.empty())
                throw std::invalid_argument("trailing junk in tableau entry: '" + token + "'");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

SemistandardTableau parse_semistandard(const std::string& text) {
    return SemistandardTableau(parse_rows(text));
}

StandardTableau parse_standard(const std::string& text) {
    return StandardTableau(parse_rows(text));
}

}  // namespace llt
