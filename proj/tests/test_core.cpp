#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mahonian/core.hpp"
#include "mahonian/families.hpp"
#include "mahonian/stats.hpp"

using namespace mahonian;

namespace {

Word W(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(c - '0');
    return w;
}

// All words of content alpha by brute-force filtering of all length-n strings.
std::vector<Word> brute_words(const Composition& a) {
    int n = composition_size(a), m = static_cast<int>(a.size());
    std::vector<Word> out;
    Word w(n, 1);
    while (true) {
        Composition c(m, 0);
        for (int x : w) ++c[x - 1];
        if (c == a) out.push_back(w);
        int i = n - 1;
        while (i >= 0 && w[i] == m) w[i--] = 1;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

}  // namespace

TEST_CASE("content") {
    CHECK(content(W("1112")) == Composition{3, 1});
    CHECK(content(W("1")) == Composition{1});
    CHECK(content(W("212113333")) == Composition{3, 2, 4});
    CHECK_THROWS_AS(content(W("13")), Error);
    CHECK_THROWS_AS(content(Word{}), Error);
}

TEST_CASE("standardization") {
    CHECK(standardize(W("313231344")) == W("415362789"));
    CHECK(standardize(W("1121")) == W("1243"));
    CHECK(standardize(W("4213")) == W("4213"));
    CHECK(istd({2, 1, 4, 2}, W("415362789")) == W("313231344"));
    CHECK(content(W("313231344")) == Composition{2, 1, 4, 2});
    CHECK(istd({1, 1, 1}, W("312")) == W("312"));
    CHECK(istd({2, 3, 3}, W("13762458")) == W("12331223"));
    CHECK_THROWS_AS(istd({2, 2}, W("123")), Error);
}

TEST_CASE("std order characterization and istd round trip") {
    for (int n = 1; n <= 6; ++n)
        for (auto& a : compositions(n))
            for_each_word(a, [&](const Word& w) {
                Permutation t = standardize(w);
                CHECK(istd(a, t) == w);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (i != j) {
                            bool lhs = t[i] < t[j];
                            bool rhs = w[i] < w[j] || (w[i] == w[j] && i < j);
                            REQUIRE(lhs == rhs);
                        }
            });
}

TEST_CASE("istd_set") {
    CHECK(istd_set({3, 2, 4}, {1, 2, 3}) == LetterMultiset{{1, 3}});
    CHECK(istd_set({3, 2, 4}, {}).empty());
    CHECK(istd_set({2, 3, 3}, {2, 5, 8}) == LetterMultiset{{1, 1}, {2, 1}, {3, 1}});
}

TEST_CASE("inverse and supp") {
    CHECK(inverse(W("312")) == W("231"));
    CHECK(inverse(W("1234")) == W("1234"));
    CHECK_THROWS_AS(inverse(W("112")), Error);
    CHECK(supp(to_multiset({1, 1, 1, 3, 3, 4, 4})) == LetterSet{1, 3, 4});
    CHECK(supp({}).empty());
    CHECK(supp(to_multiset({2, 2})) == LetterSet{2});
}

TEST_CASE("theta") {
    CHECK(theta(W("245136789"), {3, 5}) == W("212113333"));
    CHECK(theta(W("1234"), {}) == W("1111"));
    CHECK(theta_inv(W("212113333")) == W("245136789"));
    CHECK(theta_inv(W("111")) == W("123"));
    CHECK_THROWS_AS(theta(W("2134"), {}), Error);
    for (auto& p : gen_words({1, 1, 1, 1})) CHECK(theta(p, {1, 2, 3}) == inverse(p));
    for (auto& w : gen_words({2, 2})) CHECK(theta(theta_inv(w), {2}) == w);
}

TEST_CASE("theta properties on descent classes") {
    for (int n = 1; n <= 7; ++n)
        for (auto& S : subsets(n - 1)) {
            Composition a = composition_from_set(n, S);
            std::vector<Word> image;
            for (auto& p : gen_des_subseteq(n, S)) {
                Word w = theta(p, S);
                REQUIRE(standardize(w) == inverse(p));
                REQUIRE(theta_inv(w) == p);
                image.push_back(w);
            }
            std::sort(image.begin(), image.end());
            REQUIRE(image == gen_words(a));
        }
}

TEST_CASE("PLrmax of a permutation is Rlmin of its inverse") {
    for (int n = 1; n <= 7; ++n)
        for_each_word(Composition(n, 1), [](const Word& p) { REQUIRE(plrmax(p) == rlmin_set(inverse(p))); });
}

TEST_CASE("compositions and partial sums") {
    CHECK(partial_sums({3, 2, 4}) == PositionSet{3, 5});
    CHECK(composition_from_set(9, {3, 5}) == Composition{3, 2, 4});
    CHECK(composition_from_set(3, {}) == Composition{3});
    CHECK_THROWS_AS(composition_from_set(3, {3}), Error);
}

TEST_CASE("word generation matches a brute-force filter") {
    for (int n = 1; n <= 6; ++n)
        for (auto& a : compositions(n)) REQUIRE(gen_words(a) == brute_words(a));
}

TEST_CASE("set partitions") {
    SetPartition sp = make_set_partition({{4}, {2, 6}, {1, 3, 5, 7}, {8, 9}});
    CHECK(partition_to_string(sp) == "4/26/1357/89");
    CHECK(word_rep(sp) == W("323132344"));
    CHECK(perm_rep(sp) == W("426135789"));
    CHECK(shape(sp) == Composition{1, 2, 4, 2});
    CHECK(partition_from_word(W("323132344")) == sp);
    SetPartition one = make_set_partition({{1, 2, 3}});
    CHECK(word_rep(one) == W("111"));
}

TEST_CASE("formatting") {
    CHECK(word_to_string(W("2111")) == "2111");
    CHECK(word_to_string({10, 2, 10, 1}) == "10,2,10,1");
    CHECK(set_to_string({1, 3}) == "{1,3}");
    CHECK(set_to_string({}) == "{}");
    CHECK(multiset_to_string(to_multiset({1, 1, 3})) == "{1,1,3}");
}
