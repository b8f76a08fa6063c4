#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

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

long naive_inv(const Word& w) {
    long c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
    return c;
}

long naive_maj(const Word& w) {
    long c = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) c += static_cast<long>(i) + 1;
    return c;
}

// Denert's statistic: excedance positions, weak inversions among excedance letters,
// inversions among the others.
long han_den(const Word& w) {
    Word a = w;
    std::sort(a.begin(), a.end());
    Word ex, rest;
    long s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > a[i]) {
            s += static_cast<long>(i) + 1;
            ex.push_back(w[i]);
        } else {
            rest.push_back(w[i]);
        }
    }
    for (std::size_t i = 0; i < ex.size(); ++i)
        for (std::size_t j = i + 1; j < ex.size(); ++j) s += ex[i] >= ex[j];
    return s + naive_inv(rest);
}

template <class F>
void all_words(int n_max, F f) {
    for (int n = 1; n <= n_max; ++n)
        for (auto& a : compositions(n)) for_each_word(a, f);
}

}  // namespace

TEST_CASE("descents") {
    auto d = descents(W("1121"));
    CHECK(d.set == PositionSet{3});
    CHECK(d.count == 1);
    CHECK(d.maj == 3);
    CHECK(descents(W("1123")).set.empty());
    CHECK(descents(W("212113333")).set == PositionSet{1, 3});
    CHECK(maj(W("212113333")) == 4);
}

TEST_CASE("inv and excedances") {
    CHECK(inv(W("2111")) == 3);
    CHECK(inv(W("1122")) == 0);
    CHECK(excedances(W("2111")).set == PositionSet{1});
    CHECK(excedances(W("1121")).set == PositionSet{3});
    CHECK(excedances(W("1122"), 2).set.empty());
}

TEST_CASE("r-gap statistics") {
    CHECK(inv_r(W("2111"), 2) == 2);
    CHECK(rmaj(W("313"), 2) == 1);
    all_words(6, [](const Word& w) {
        int n = static_cast<int>(w.size());
        REQUIRE(inv_r(w, 1) == maj(w));
        REQUIRE(inv_r(w, std::max(1, n - 1)) == inv(w));
        REQUIRE(rmaj(w, 1) == maj(w));
        REQUIRE(rmaj(w, max_letter(w)) == inv(w));
        REQUIRE(rden(w, 1) == han_den(w));
        REQUIRE(rdes(w, 1) == des(w));
        REQUIRE(rexc(w, 1) == exc(w));
    });
}

TEST_CASE("denert") {
    CHECK(den(W("2111")) == 1);
    CHECK(den(W("1122")) == 0);
    CHECK(den(W("1112")) == 0);
    CHECK(den(W("1121")) == 3);
    CHECK(den(W("1211")) == 2);
}

TEST_CASE("mak and mad") {
    CHECK(mak(W("1121")) == 3);
    CHECK(mak(W("1123")) == 0);
    CHECK(mak(W("2111")) == 1);
    auto m = mak_mad(W("21144231"));
    CHECK(m.values == std::vector<int>{4, 1, 2, 7, 8, 5, 6, 3});
    CHECK(m.heights == std::vector<int>{4, 1, 1, 7, 7, 4, 6, 1});
    all_words(6, [](const Word& w) { REQUIRE(mak_mad(w).values == standardize(w)); });
}

TEST_CASE("stat") {
    CHECK(stat(W("1")) == 0);
    std::vector<long> vals;
    for (auto& w : gen_words({3, 1})) vals.push_back(stat(w));
    std::sort(vals.begin(), vals.end());
    CHECK(vals == std::vector<long>{0, 1, 2, 3});
    MultiPoly istat_dist;
    StatName istat{StatKind::Stat, 1, true};
    for (auto& p : gen_des_subseteq(4, {2})) istat_dist += MultiPoly::var(Var::Q, static_cast<int>(istat.eval(p)));
    CHECK(istat_dist == q_multinomial(4, {2, 2}));
}

TEST_CASE("minima and maxima") {
    auto mm = minima_maxima(W("3212315354646547577"));
    CHECK(mm.rlmin == LetterSet{1, 3, 4, 5, 7});
    CHECK(mm.rlwmin == to_multiset({1, 1, 3, 4, 4, 4, 5, 7, 7}));
    auto inc = minima_maxima(W("1234"));
    CHECK(inc.rlwmin == to_multiset({1, 2, 3, 4}));
    CHECK(inc.plrmax == PositionSet{1, 2, 3, 4});
    auto m2 = minima_maxima(W("1221"));
    CHECK(m2.plrmax == PositionSet{1, 2});
    CHECK(m2.lrmax == LetterSet{1, 2});
    CHECK(lrmin(W("3412")) == 2);
}

TEST_CASE("Rlwmin under appending a letter") {
    all_words(5, [](const Word& w) {
        for (int c = 1; c <= max_letter(w) + 1; ++c) {
            Word wc = w;
            wc.push_back(c);
            LetterMultiset expect{{c, 1}};
            for (auto [v, k] : rlwmin(w))
                if (v <= c) expect[v] += k;
            REQUIRE(rlwmin(wc) == expect);
        }
    });
}

TEST_CASE("inverse statistics") {
    for_each_word({1, 1, 1, 1}, [](const Word& p) {
        REQUIRE(StatName{StatKind::Inv, 1, true}.eval(p) == inv(p));
    });
    CHECK(StatName{StatKind::Maj, 1, true}.eval(W("123")) == 0);
    CHECK(StatName{StatKind::Maj, 1, true}.eval(W("231")) == 1);
    StatName imaj{StatKind::Maj, 1, true};
    CHECK_THROWS_AS(imaj.eval(W("112")), Error);
}

TEST_CASE("alternating runs") {
    CHECK(alternating_runs(W("123")) == 1);
    CHECK(alternating_runs(W("132")) == 2);
    CHECK(alternating_runs(W("4321")) == 1);
    CHECK(alternating_runs(W("1")) == 1);
}

TEST_CASE("standard statistics") {
    all_words(6, [](const Word& w) {
        Permutation p = standardize(w);
        REQUIRE(inv(p) == inv(w));
        REQUIRE(maj(p) == maj(w));
        REQUIRE(mak(p) == mak(w));
        REQUIRE(stat(p) == stat(w));
        for (int r = 1; r <= 3; ++r) REQUIRE(inv_r(p, r) == inv_r(w, r));
    });
}

TEST_CASE("non-standard statistics have witnesses") {
    for (auto st : {StatName{StatKind::Den}, StatName{StatKind::Mad}, StatName{StatKind::RMaj, 2},
                    StatName{StatKind::RDen, 2}}) {
        bool found = false;
        all_words(5, [&](const Word& w) { found |= st.eval(standardize(w)) != st.eval(w); });
        CHECK_MESSAGE(found, st.name());
    }
}

TEST_CASE("naive oracles and Mahonian property") {
    for (int n = 1; n <= 6; ++n)
        for (auto& a : compositions(n)) {
            MultiPoly closed = q_multinomial(n, a);
            std::vector<StatName> names{{StatKind::Inv}, {StatKind::Maj}, {StatKind::Den}, {StatKind::Mak},
                                        {StatKind::Mad}, {StatKind::Stat}};
            for (int r = 1; r <= 3; ++r) {
                names.push_back({StatKind::InvR, r});
                names.push_back({StatKind::RMaj, r});
                names.push_back({StatKind::RDen, r});
            }
            for (auto& st : names) {
                MultiPoly p;
                for_each_word(a, [&](const Word& w) { p += MultiPoly::var(Var::Q, static_cast<int>(st.eval(w))); });
                REQUIRE_MESSAGE(p == closed, st.name());
            }
            for_each_word(a, [](const Word& w) {
                REQUIRE(inv(w) == naive_inv(w));
                REQUIRE(maj(w) == naive_maj(w));
                REQUIRE(des(w) == static_cast<int>(descents(w).set.size()));
                REQUIRE(exc(w) == static_cast<int>(excedances(w).set.size()));
            });
        }
}

TEST_CASE("statistic names") {
    CHECK(parse_stat("inv")->kind == StatKind::Inv);
    auto s = parse_stat("i2den");
    REQUIRE(s);
    CHECK(s->kind == StatKind::RDen);
    CHECK(s->r == 2);
    CHECK(s->inverse);
    CHECK(parse_stat("rmaj", 3)->r == 3);
    CHECK(parse_stat("inv_2")->r == 2);
    CHECK(parse_stat("imak")->name() == "imak");
    CHECK_FALSE(parse_stat("bogus"));
}
