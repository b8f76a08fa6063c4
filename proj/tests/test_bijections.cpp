#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mahonian/bijections.hpp"
#include "mahonian/families.hpp"
#include "mahonian/stats.hpp"

using namespace mahonian;

namespace {

Word W(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(c - '0');
    return w;
}

template <class Map, class Check>
void exhaust(int n_max, Map map, Check check) {
    for (int n = 1; n <= n_max; ++n)
        for (auto& a : compositions(n)) {
            std::set<Word> image;
            std::size_t count = 0;
            for_each_word(a, [&](const Word& w) {
                Word v = map(w);
                REQUIRE(content(v) == a);
                REQUIRE(rlwmin(v) == rlwmin(w));
                check(w, v);
                image.insert(v);
                ++count;
            });
            REQUIRE(image.size() == count);
        }
}

}  // namespace

TEST_CASE("J_x") {
    CHECK(J_x(W("112"), 1) == W("211"));
    CHECK(J_x(W("11"), 2) == W("11"));
    CHECK(J_x(W("3"), 1) == W("3"));
    CHECK_THROWS_AS(J_x(Word{}, 1), Error);
}

TEST_CASE("F_r") {
    CHECK(foata_r(W("1121"), 1) == W("2111"));
    CHECK(foata_r(W("2131"), 4) == W("2131"));
    for (int r = 1; r <= 3; ++r)
        exhaust(6, [r](const Word& w) { return foata_r(w, r); },
                [r](const Word& w, const Word& v) { REQUIRE(inv(v) == inv_r(w, r)); });
}

TEST_CASE("Rawlings map") {
    Word w = W("2152431552");
    CHECK(rawlings_u(w, 5, 1) == 5);
    CHECK(rawlings_u(w, 5, 2) == 1);
    CHECK(rawlings_u(w, 5, 3) == 1);
    std::vector<int> inserted{2, 7};
    CHECK(rawlings_insert(W("215243152"), 5, inserted, 1, 3) == W("2152431552"));
    CHECK(rawlings_R(W("1121"), 1) == W("2111"));
    CHECK(rawlings_R(W("111"), 2) == W("111"));
    for (int r = 1; r <= 3; ++r)
        exhaust(6, [r](const Word& w) { return rawlings_R(w, r); },
                [r](const Word& w, const Word& v) { REQUIRE(rmaj(v, r) == inv(w)); });
}

TEST_CASE("cyclic intervals and T_r") {
    CHECK(in_cyclic_interval(1, 2, 2));
    CHECK_FALSE(in_cyclic_interval(1, 2, 1));
    CHECK(in_cyclic_interval(3, 1, 4));
    CHECK(in_cyclic_interval(3, 1, 1));
    CHECK_FALSE(in_cyclic_interval(3, 1, 2));
    CHECK_FALSE(in_cyclic_interval(2, 2, 2));
    CHECK_FALSE(in_cyclic_interval(2, 2, 3));
    CHECK(T_r(1, Biword{{1, 2}, {2, 1}}, 1) == Biword{{2, 1}, {1, 2}});
    CHECK(T_r(1, Biword{{1, 2}, {3, 3}}, 1) == Biword{{2, 1}, {3, 3}});
    CHECK_THROWS_AS(T_r(2, Biword{{1, 2}, {2, 1}}, 1), Error);
    CHECK_THROWS_AS(T_r(0, Biword{{1, 2}, {2, 1}}, 1), Error);
}

TEST_CASE("cycle decomposition") {
    auto c = gamma_rden(W("21"), 1);
    REQUIRE(c.size() == 1);
    CHECK(c[0] == Biword{{1, 2}, {2, 1}});
    for (auto& cyc : gamma_rden(W("11223"), 1)) CHECK(cyc.top.size() == 1);
    for (int n = 1; n <= 6; ++n)
        for (auto& a : compositions(n))
            for (int r = 1; r < static_cast<int>(a.size()); ++r)
                for_each_word(a, [&](const Word& w) {
                    Word bottoms;
                    for (auto& cyc : gamma_rden(w, r)) {
                        REQUIRE(is_dominated_cycle(cyc));
                        bottoms.insert(bottoms.end(), cyc.bottom.begin(), cyc.bottom.end());
                    }
                    REQUIRE(content(bottoms) == a);
                });
}

TEST_CASE("H_rden") {
    CHECK(H_rden(W("21"), 1) == W("21"));
    CHECK(H_rden(W("2131"), 3) == W("2131"));
    for (int r = 1; r <= 3; ++r)
        exhaust(6, [r](const Word& w) { return H_rden(w, r); },
                [r](const Word& w, const Word& v) {
                    REQUIRE(rdes(v, r) == rexc(w, r));
                    REQUIRE(rmaj(v, r) == rden(w, r));
                });
}

TEST_CASE("Phi") {
    CHECK(phi_perm(W("16327458")) == W("13762458"));
    CHECK(phi_perm(W("1234")) == W("1234"));
    CHECK(phi_alpha(W("13213223")) == W("12331223"));
    CHECK(phi_alpha(W("1123")) == W("1123"));
    exhaust(6, [](const Word& w) { return phi_alpha(w); },
            [](const Word& w, const Word& v) {
                REQUIRE(exc(v) == des(w));
                REQUIRE(den(v) == mak(w));
                REQUIRE(inv(v) == mad(w));
            });
}

TEST_CASE("pattern predicates") {
    CHECK(avoids_221(W("1212")));
    CHECK_FALSE(avoids_221(W("2211")));
    CHECK(avoids_212(W("1221")));
    CHECK_FALSE(avoids_212(W("1212")));
    for (int n = 1; n <= 6; ++n)
        for (auto& a : compositions(n))
            for_each_word(a, [](const Word& w) {
                bool has221 = false, has212 = false;
                std::size_t m = w.size();
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = i + 1; j < m; ++j)
                        for (std::size_t k = j + 1; k < m; ++k) {
                            has221 |= w[i] == w[j] && w[j] > w[k];
                            has212 |= w[i] == w[k] && w[i] > w[j];
                        }
                REQUIRE(avoids_221(w) == !has221);
                REQUIRE(avoids_212(w) == !has212);
            });
}

TEST_CASE("phi on Stirling permutations") {
    CHECK(phi_QI(W("1221")) == W("1212"));
    CHECK(phi_QI(W("2211")) == W("2112"));
    CHECK(phi_QI(W("1122")) == W("1122"));
    CHECK_THROWS_AS(phi_QI(W("1212")), Error);
    for (int n = 1; n <= 7; ++n)
        for (auto& a : compositions(n)) {
            std::set<Word> image;
            auto Q = gen_avoiders(a, Pattern::P212);
            for (auto& w : Q) {
                Word u = phi_QI(w);
                REQUIRE(avoids_221(u));
                REQUIRE(plrmax(u) == plrmax(w));
                image.insert(u);
            }
            REQUIRE(image.size() == Q.size());
        }
}
