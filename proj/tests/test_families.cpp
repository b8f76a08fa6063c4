#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mahonian/families.hpp"
#include "mahonian/poly.hpp"
#include "mahonian/stats.hpp"

using namespace mahonian;

namespace {

Word W(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(c - '0');
    return w;
}

std::vector<Word> Ws(std::initializer_list<const char*> l) {
    std::vector<Word> out;
    for (auto s : l) out.push_back(W(s));
    return out;
}

bool sorted_unique(const std::vector<Word>& v) {
    return std::is_sorted(v.begin(), v.end()) && std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

TEST_CASE("words") {
    CHECK(gen_words({3, 1}) == Ws({"1112", "1121", "1211", "2111"}));
    CHECK(gen_words({3}).size() == 1);
    CHECK(gen_words({2, 2}).size() == 6);
    CHECK(compositions(4).size() == 8);
    CHECK(subsets(2) == std::vector<PositionSet>{{}, {1}, {2}, {1, 2}});
}

TEST_CASE("fixed Rlwmin and Rlmin classes partition S_alpha") {
    CHECK(gen_words_fixed_rlwmin({3, 1}, to_multiset({1, 1, 1, 2})) == Ws({"1112"}));
    CHECK(gen_words_fixed_rlwmin({3, 1}, to_multiset({2})).empty());
    for (int n = 1; n <= 6; ++n)
        for (auto& a : compositions(n)) {
            std::set<LetterMultiset> Rs;
            std::set<LetterSet> Ds;
            for_each_word(a, [&](const Word& w) {
                Rs.insert(rlwmin(w));
                Ds.insert(rlmin_set(w));
            });
            std::size_t total = 0;
            for (auto& R : Rs) {
                auto c = gen_words_fixed_rlwmin(a, R);
                REQUIRE(sorted_unique(c));
                total += c.size();
            }
            REQUIRE(Integer(total) == multinomial(n, a));
            for (auto& D : Ds) {
                std::vector<Word> u;
                for (auto& R : Rs)
                    if (supp(R) == D)
                        for (auto& w : gen_words_fixed_rlwmin(a, R)) u.push_back(w);
                std::sort(u.begin(), u.end());
                REQUIRE(u == gen_words_fixed_rlmin(a, D));
            }
        }
}

TEST_CASE("descent classes") {
    CHECK(gen_des_eq(3, {1}) == Ws({"213", "312"}));
    CHECK(gen_des_eq(3, {}) == Ws({"123"}));
    CHECK(gen_des_eq(4, {2}).size() == 5);
    CHECK(gen_des_P(3, {}, {1, 2, 3}, true) == Ws({"123"}));
    CHECK(gen_des_P(4, {2}, {1, 3}, false).empty());
    for (int n = 1; n <= 6; ++n)
        for (auto& S : subsets(n - 1)) {
            auto le = gen_des_subseteq(n, S);
            REQUIRE(sorted_unique(le));
            std::vector<Word> u;
            for (auto& P : s_suffix_closed(n, S))
                for (auto& p : gen_des_P(n, S, P, false)) u.push_back(p);
            std::sort(u.begin(), u.end());
            REQUIRE(u == le);
        }
}

TEST_CASE("S-suffix-closed sets") {
    auto two = s_suffix_closed(2, {});
    std::sort(two.begin(), two.end());
    CHECK(two == std::vector<PositionSet>{{}, {1, 2}, {2}});
    CHECK(s_suffix_closed(9, {3, 5}).size() == 60);
    CHECK(is_s_suffix_closed(9, {3, 5}, {2, 3, 5, 9}));
    CHECK_FALSE(is_s_suffix_closed(9, {3, 5}, {2}));
    for (int n = 1; n <= 7; ++n)
        for (auto& S : subsets(n - 1)) {
            Composition a = composition_from_set(n, S);
            std::set<LetterMultiset> images;
            auto closed = s_suffix_closed(n, S);
            for (auto& P : closed) images.insert(istd_set(a, P));
            long long want = 1;
            for (int x : a) want *= x + 1;
            REQUIRE(static_cast<long long>(images.size()) == want);
            REQUIRE(static_cast<long long>(closed.size()) == want);
        }
}

TEST_CASE("set partitions") {
    auto sps = gen_set_partitions({1, 2, 4, 2});
    bool found = false;
    for (auto& sp : sps) found |= partition_to_string(sp) == "4/26/1357/89";
    CHECK(found);
    CHECK(gen_set_partitions({3}).size() == 1);
    CHECK(word_rep(gen_set_partitions({3})[0]) == W("111"));
    CHECK(is_partition_word(W("323132344")));
    CHECK_FALSE(is_partition_word(W("2121")));
}

TEST_CASE("quasi-increasing words and Stirling permutations") {
    CHECK(gen_avoiders({2, 2}, Pattern::P221) == Ws({"1122", "1212", "2112"}));
    CHECK(gen_avoiders({2, 2}, Pattern::P212) == Ws({"1122", "1221", "2211"}));
    CHECK(gen_avoiders({4}, Pattern::P221).size() == 1);
    CHECK(avoider_count({3, 2, 4}) == 4 * 6);
    for (int n = 1; n <= 7; ++n)
        for (auto& a : compositions(n))
            for (auto pat : {Pattern::P221, Pattern::P212}) {
                auto f = gen_avoiders(a, pat);
                REQUIRE(sorted_unique(f));
                REQUIRE(gen_avoiders_by_insertion(a, pat) == f);
                REQUIRE(static_cast<long long>(f.size()) == avoider_count(a));
            }
}

TEST_CASE("alternating permutations") {
    CHECK(gen_alternating(4, false) == Ws({"2143", "3142", "3241", "4132", "4231"}));
    CHECK(gen_alternating(1, false).size() == 1);
    CHECK(gen_alternating(1, true).size() == 1);
    CHECK(alternating_descent_set(5, false) == PositionSet{1, 3});
    CHECK(alternating_descent_set(5, true) == PositionSet{2, 4});
}

TEST_CASE("alternating runs") {
    CHECK(mcs({1, 2, 3, 5, 6, 8, 9, 10}) == 3);
    CHECK(mcs({}) == 0);
    CHECK(mcs({4}) == 1);
    CHECK(gen_alt_runs(3, 1) == Ws({"123", "321"}));
    CHECK(gen_alt_runs(3, 2).size() == 4);
    CHECK(gen_alt_runs(2, 2).empty());
    for (int n = 1; n <= 7; ++n) {
        std::size_t total = 0;
        for (int k = 1; k <= std::max(1, n - 1); ++k) {
            auto direct = gen_alt_runs(n, k);
            REQUIRE(direct == gen_alt_runs_by_descent_sets(n, k));
            total += direct.size();
        }
        REQUIRE(Integer(total) == multinomial(n, Composition(n, 1)));
    }
}

TEST_CASE("family grammar") {
    auto f = parse_family("words:alpha=3,1");
    CHECK(f.kind == FamilyKind::Words);
    CHECK(materialize(f).size() == 4);
    CHECK(materialize(parse_family("words:alpha=3,1:rlwmin=1,1,1,2")) == Ws({"1112"}));
    CHECK(materialize(parse_family("desle:n=9:S=3,5")).size() == 1260);
    CHECK(materialize(parse_family("deseq:n=3:S=1")) == Ws({"213", "312"}));
    CHECK(materialize(parse_family("deseq:n=6:S=2,4:plrmax=1,2,6")).size() > 0);
    auto spw = materialize(parse_family("sp-word:alpha=1,2,4,2"));
    auto spp = materialize(parse_family("sp-perm:alpha=1,2,4,2"));
    CHECK(spw.size() == gen_set_partitions({1, 2, 4, 2}).size());
    CHECK(spp.size() == spw.size());
    CHECK(std::binary_search(spw.begin(), spw.end(), W("323132344")));
    CHECK(std::binary_search(spp.begin(), spp.end(), W("426135789")));
    CHECK(materialize(parse_family("avoid221:alpha=2,3,3")).size() == 3 * 6);
    CHECK(materialize(parse_family("avoid212:alpha=2,3,3")).size() == 3 * 6);
    CHECK(materialize(parse_family("alt:n=6")).size() == 61);
    CHECK(materialize(parse_family("ralt:n=6")).size() == 61);
    CHECK(materialize(parse_family("runs:n=6:k=3")).size() > 0);
    for (auto s : {"words:alpha=3,1", "desle:n=9:S=3,5", "runs:n=6:k=3", "sp-word:alpha=1,2,4,2"})
        CHECK(family_to_string(parse_family(s)) == s);
    for (auto bad : {"", "nope:n=3", "words", "words:alpha=0,1", "desle:n=3:S=3", "alt:n=x", "runs:n=4"})
        CHECK_THROWS_AS(parse_family(bad), Error);
}
