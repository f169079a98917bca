#include "llt/tableau.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <map>
#include <set>

using namespace llt;

namespace {

SemistandardTableau sst(std::vector<std::vector<int>> rows) {
    return SemistandardTableau(std::move(rows));
}

}  // namespace

TEST_CASE("tableau validation") {
    CHECK_THROWS(sst({{2, 1}}));        // row decreases
    CHECK_THROWS(sst({{1, 1}, {1}}));   // column not strict
    CHECK_THROWS(sst({{1}, {2, 2}}));   // rows not a partition shape
    CHECK(sst({{1, 1, 2}, {2, 3}}).shape() == Partition({3, 2}));
}

TEST_CASE("reading word") {
    CHECK(sst({{1, 1, 2, 3}}).reading_word() == std::vector<int>({1, 1, 2, 3}));
    CHECK(sst({{5}}).reading_word() == std::vector<int>({5}));
    CHECK(sst({{1, 1}, {2, 2}}).reading_word() == std::vector<int>({1, 1, 2, 2}));
}

TEST_CASE("total order on tableaux") {
    SemistandardTableau t1 = sst({{1, 1, 2, 3}});
    SemistandardTableau t2 = sst({{1, 1, 2, 4}});
    SemistandardTableau t3 = sst({{1, 2, 2, 2}});
    CHECK(tableau_compare(t1, t2) < 0);
    CHECK(tableau_compare(t2, t3) < 0);
    CHECK(tableau_compare(t1, t3) < 0);
    CHECK(tableau_compare(t2, t2) == 0);
    CHECK(tableau_compare(t3, t1) > 0);
    CHECK_THROWS(tableau_compare(t1, sst({{1, 1}, {2, 2}})));
}

TEST_CASE("enumerate_sstab with exact weight") {
    auto two = enumerate_sstab(Partition({2, 1}), std::vector<int>{1, 1, 1});
    CHECK(two.size() == 2);  // Kostka K_{(2,1),(1,1,1)}
    auto single = enumerate_sstab(Partition({2}), std::vector<int>{2});
    REQUIRE(single.size() == 1);
    CHECK(single[0] == sst({{1, 1}}));
    CHECK(enumerate_sstab(Partition({1, 1}), std::vector<int>{2}).empty());
    CHECK_THROWS(enumerate_sstab(Partition({2, 1}), std::vector<int>{1, 1}));

    // outputs are sorted and distinct in the total order
    auto all = enumerate_sstab(Partition({3, 2}), std::vector<int>{2, 2, 1});
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
        CHECK(tableau_compare(all[i], all[i + 1]) < 0);
}

TEST_CASE("Kostka counts are invariant under weight permutation") {
    const Partition shape({3, 1});
    std::vector<std::vector<int>> weights = {
        {2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
    std::size_t first = enumerate_sstab(shape, weights[0]).size();
    for (const auto& w : weights)
        CHECK(enumerate_sstab(shape, w).size() == first);
}

TEST_CASE("enumerate_standard against the hook length oracle") {
    CHECK(enumerate_standard(Partition({2, 1})).size() == 2);
    CHECK(enumerate_standard(Partition({5})).size() == 1);
    CHECK(enumerate_standard(Partition({2, 2})).size() == 2);
    for (int n = 1; n <= 7; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            CHECK(static_cast<long long>(enumerate_standard(lam).size()) ==
                  oracles::hook_length_count(lam));
}

TEST_CASE("maj of standard tableaux") {
    CHECK(maj_standard(parse_standard("1,2,4/3,5")) == 6);
    CHECK(maj_standard(parse_standard("1,2,3,4")) == 0);
    CHECK(maj_standard(parse_standard("1,2/3")) == 2);
    CHECK(maj_standard(parse_standard("1,3/2")) == 1);
}

TEST_CASE("robinson-schensted on words") {
    RSResult rs = rs_correspondence({1, 2, 1, 4, 2});
    CHECK(rs.insertion_rows == std::vector<std::vector<int>>({{1, 1, 2}, {2, 4}}));
    CHECK(rs.recording == parse_standard("1,2,4/3,5"));

    RSResult sorted = rs_correspondence({1, 1, 2, 3});
    CHECK(sorted.recording == parse_standard("1,2,3,4"));
    CHECK(sorted.insertion_rows.size() == 1);
}

TEST_CASE("robinson-schensted over the tableau alphabet") {
    TableauTuple tuple({sst({{1, 2}}), sst({{1, 2}}), sst({{1, 1}})});
    RSTupleResult rs = rs_correspondence(tuple);
    CHECK(rs.recording == parse_standard("1,2/3"));
    REQUIRE(rs.insertion_rows.size() == 2);
    CHECK(rs.insertion_rows[0] == std::vector<SemistandardTableau>{sst({{1, 1}}), sst({{1, 2}})});
    CHECK(rs.insertion_rows[1] == std::vector<SemistandardTableau>{sst({{1, 2}})});
}

TEST_CASE("maj survives RS for every short word") {
    for (int len = 0; len <= 8; ++len) {
        std::vector<int> w(len, 1);
        for (;;) {
            RSResult rs = rs_correspondence(w);
            int maj = 0;
            for (int i = 0; i + 1 < len; ++i)
                if (w[i] > w[i + 1]) maj += i + 1;
            REQUIRE(maj == maj_standard(rs.recording));
            int j = len - 1;
            while (j >= 0 && w[j] == 4) w[j--] = 1;
            if (j < 0) break;
            ++w[j];
        }
        if (len == 0) continue;
    }
}

TEST_CASE("words with a fixed insertion tableau count standard tableaux") {
    // full RS inversion at length 5: for each P the recordings exhaust
    // STab(shape(P)) exactly once
    std::map<std::vector<std::vector<int>>, std::set<std::vector<std::vector<int>>>> classes;
    std::vector<int> w(5, 1);
    for (;;) {
        RSResult rs = rs_correspondence(w);
        auto inserted = classes[rs.insertion_rows].insert(rs.recording.rows());
        REQUIRE(inserted.second);  // (P,Q) determines w
        int j = 4;
        while (j >= 0 && w[j] == 5) w[j--] = 1;
        if (j < 0) break;
        ++w[j];
    }
    for (const auto& [p_rows, recordings] : classes) {
        std::vector<int> parts;
        for (const auto& row : p_rows) parts.push_back(static_cast<int>(row.size()));
        CHECK(static_cast<long long>(recordings.size()) ==
              oracles::hook_length_count(Partition(parts)));
    }
}

TEST_CASE("tableau parsing") {
    CHECK(parse_semistandard("1,1,2/2,3").shape() == Partition({3, 2}));
    CHECK(parse_standard("1,2/3").size() == 3);
    CHECK_THROWS(parse_standard("1,2/2"));   // repeated value
    CHECK_THROWS(parse_standard("1,3/4"));   // not 1..n
    CHECK_THROWS(parse_semistandard("2,1"));
    CHECK(parse_semistandard(" 1 , 2 / 3 ") == sst({{1, 2}, {3}}));
}

TEST_CASE("tuple weight and validation") {
    TableauTuple t({sst({{1, 1}}), sst({{2, 3}})});
    CHECK(t.weight(3) == std::vector<int>({2, 1, 1}));
    CHECK(t.common_shape() == Partition({2}));
    CHECK_THROWS(TableauTuple({sst({{1, 1}}), sst({{1}, {2}})}));
}
