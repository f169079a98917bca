#include "llt/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace llt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    return (i >= 0 && i < num_parts()) ? parts_[i] : 0;
}

bool Partition::contains_cell(int row, int col) const {
    return row >= 0 && col >= 0 && row < num_parts() && col < parts_[row];
}

std::vector<int> Partition::to_weight(int length) const {
    if (length < num_parts())
        throw std::invalid_argument("weight length shorter than partition");
    std::vector<int> w(length, 0);
    std::copy(parts_.begin(), parts_.end(), w.begin());
    return w;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                  o.parts_.begin(), o.parts_.end());
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

Composition::Composition(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("composition parts must be non-negative");
        if (p > 0) parts_.push_back(p);
    }
}

int Composition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Composition::sorted() const {
    std::vector<int> p = parts_;
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(p);
}

std::string Composition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

void compositions_rec(int remaining, int max_parts, std::vector<int>& acc,
                      std::vector<Composition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_parts == 0) return;
    for (int p = 1; p <= remaining; ++p) {
        acc.push_back(p);
        compositions_rec(remaining - p, max_parts - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, n == 0 ? 1 : n, acc, out);
    return out;
}

std::vector<Composition> enumerate_compositions(int n, int max_parts) {
    std::vector<Composition> out;
    std::vector<int> acc;
    compositions_rec(n, max_parts, acc, out);
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    int len = std::max(a.num_parts(), b.num_parts());
    for (int i = 0; i < len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return sa == sb;
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> vals;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        std::istringstream ts(token);
        int v;
        if (!(ts >> v)) throw std::invalid_argument("bad integer in list: '" + token + "'");
        std::string rest;
        ts >> rest;
        if (!rest.empty()) throw std::invalid_argument("trailing junk in list: '" + token + "'");
        vals.push_back(v);
    }
    return vals;
}

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace

Partition parse_partition(const std::string& text) {
    if (is_blank(text) || text == "-") return Partition{};
    return Partition(parse_int_list(text));
}

Composition parse_composition(const std::string& text) {
    if (is_blank(text) || text == "-") return Composition{};
    return Composition(parse_int_list(text));
}

long long binomial2(long long n) { return n * (n - 1) / 2; }

}  // namespace llt
