#include "llt/qseries.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace llt;

namespace {

IntLaurentPoly poly_of(std::initializer_list<std::pair<int, long>> terms) {
    IntLaurentPoly p;
    for (auto [e, c] : terms) p.set_coeff(e, c);
    return p;
}

IntLaurentPoly random_sparse(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 6), expo(-20, 20), coeff(-9, 9);
    IntLaurentPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p.set_coeff(expo(rng), coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("laurent ring laws on random sparse polynomials") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        IntLaurentPoly a = random_sparse(rng), b = random_sparse(rng), c = random_sparse(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == IntLaurentPoly{});
        if (!b.is_zero()) CHECK((a * b).divided_exact(b) == a);
    }
}

TEST_CASE("laurent division failures are hard errors") {
    CHECK_THROWS(poly_of({{2, 1}, {0, 1}}).divided_exact(poly_of({{1, 1}, {0, 1}})));
    CHECK_THROWS(poly_of({{0, 3}}).divided_exact(poly_of({{0, 2}})));
    CHECK_THROWS(poly_of({{0, 1}}).divided_exact(IntLaurentPoly{}));
}

TEST_CASE("laurent rendering") {
    CHECK(IntLaurentPoly{}.to_string() == "0");
    CHECK(poly_of({{0, 1}, {1, 1}, {2, 1}}).to_string() == "1+q+q^2");
    CHECK(poly_of({{0, 1}, {2, 2}, {4, 1}}).to_string() == "1+2q^2+q^4");
    CHECK(poly_of({{-1, 1}, {1, -3}}).to_string() == "q^-1-3q");
    CHECK(poly_of({{0, -2}}).to_string() == "-2");
    auto ts = poly_of({{2, 5}, {-1, 1}}).term_strings();
    REQUIRE(ts.size() == 2);
    CHECK(ts[0] == std::pair<int, std::string>(-1, "1"));
    CHECK(ts[1] == std::pair<int, std::string>(2, "5"));
}

TEST_CASE("q_int basics") {
    CHECK(q_int(0) == IntLaurentPoly{});
    CHECK(q_int(1) == IntLaurentPoly(1));
    CHECK(q_int(3) == poly_of({{0, 1}, {1, 1}, {2, 1}}));
    CHECK_THROWS(q_int(-1));
}

TEST_CASE("q_binomial examples") {
    CHECK(q_binomial(3, 1) == q_int(3));
    CHECK(q_binomial(7, 0) == IntLaurentPoly(1));
    CHECK(q_binomial(4, 2) == poly_of({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    CHECK(q_binomial(4, 2) == oracles::inv_sum_over_words({2, 2}));
    CHECK(q_binomial(3, -1) == IntLaurentPoly{});
    CHECK(q_binomial(3, 4) == IntLaurentPoly{});
    CHECK(q_binomial(-2, 0) == IntLaurentPoly{});
}

TEST_CASE("q_multinomial examples and the inv-sum oracle") {
    CHECK(q_multinomial(3, std::vector<int>{1, 1, 1}) ==
          poly_of({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
    CHECK(q_multinomial(5, std::vector<int>{5}) == IntLaurentPoly(1));
    CHECK(q_multinomial(3, std::vector<int>{2, 1}) == q_int(3));
    CHECK_THROWS(q_multinomial(3, std::vector<int>{1, 1}));

    for (int n = 0; n <= 7; ++n)
        for (const Composition& nu : enumerate_compositions(n, 4)) {
            IntLaurentPoly qm = q_multinomial(n, nu);
            CHECK(qm == oracles::inv_sum_over_words(nu.parts()));
            CHECK(qm == oracles::maj_sum_over_words(nu.parts()));
        }
}

TEST_CASE("q_multinomial at q=1 is the multinomial coefficient") {
    for (int n = 0; n <= 8; ++n)
        for (const Composition& nu : enumerate_compositions(n, 3)) {
            long long expect = 1;
            int used = 0;
            for (int p : nu.parts()) {
                // running product of binomial(used + p, p)
                for (int i = 1; i <= p; ++i) expect = expect * (used + i) / i;
                used += p;
            }
            CHECK(q_multinomial(n, nu).eval_at_one() == static_cast<long>(expect));
        }
}

TEST_CASE("residue_split") {
    IntLaurentPoly g = poly_of({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}});
    auto parts = residue_split(g, 3, 0);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == poly_of({{0, 1}, {3, 1}}));
    CHECK(parts[1] == poly_of({{1, 1}, {4, 1}}));
    CHECK(parts[2] == poly_of({{2, 2}}));

    CHECK(residue_split(g, 1, 0) == std::vector<IntLaurentPoly>{g});

    auto shifted = residue_split(poly_of({{5, 1}}), 4, 2);
    CHECK(shifted[3] == poly_of({{5, 1}}));
    for (int i = 0; i < 3; ++i) CHECK(shifted[i].is_zero());

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        IntLaurentPoly p = random_sparse(rng);
        auto split = residue_split(p, 1 + trial % 5, trial - 25);
        IntLaurentPoly sum;
        for (const auto& piece : split) sum += piece;
        CHECK(sum == p);
        for (std::size_t i = 0; i < split.size(); ++i)
            for (std::size_t j = i + 1; j < split.size(); ++j)
                for (const auto& [e, c] : split[i].terms())
                    CHECK(split[j].coeff(e) == 0);
    }
}
