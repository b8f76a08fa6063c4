#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mahonian/core.hpp"

namespace mahonian {

struct DescentInfo {
    PositionSet set;
    int count = 0;
    long maj = 0;
};

struct ExcedanceInfo {
    PositionSet set;
    int count = 0;
};

struct RmajInfo {
    PositionSet rdes_set;
    int rdes = 0;
    long rmaj = 0;
};

struct DenInfo {
    long rden = 0;
    long exc_part = 0;
    long imv_part = 0;
    long inv_part = 0;
};

struct MakMadInfo {
    long mak = 0;
    long mad = 0;
    long dbot = 0;
    long dtop = 0;
    long ddif = 0;
    long res = 0;
    std::vector<int> heights;  // heights[i] = h(w_i)
    std::vector<int> values;   // equals standardize(w)
    std::vector<std::pair<int, int>> blocks;  // 1-based [first, last] of each descent block
    std::vector<int> embracing;
};

struct MinimaInfo {
    LetterSet rlmin;
    LetterMultiset rlwmin;
    LetterSet lrmax;
    PositionSet plrmax;
    int lrmin = 0;
};

DescentInfo descents(const Word& w);
int des(const Word& w);
long maj(const Word& w);
long inv(const Word& w);
ExcedanceInfo excedances(const Word& w, int r = 1);
int exc(const Word& w);
long inv_r(const Word& w, int r);
RmajInfo rmaj_info(const Word& w, int r);
long rmaj(const Word& w, int r);
int rdes(const Word& w, int r);
int rexc(const Word& w, int r);
DenInfo den_stats(const Word& w, int r);
long rden(const Word& w, int r);
long den(const Word& w);
MakMadInfo mak_mad(const Word& w);
long mak(const Word& w);
long mad(const Word& w);
long stat(const Word& w);
MinimaInfo minima_maxima(const Word& w);
LetterSet rlmin_set(const Word& w);
LetterMultiset rlwmin(const Word& w);
PositionSet plrmax(const Word& w);
int lrmin(const Word& w);
int alternating_runs(const Permutation& p);

enum class StatKind {
    Des, Exc, Inv, Maj, InvR, RDes, RMaj, RExc, RDen, Den, Mak, Mad, Stat,
    Rlmin, Rlwmin, Lrmax, Lrmin,
};

// A numeric statistic, optionally with a gap parameter r and optionally
// evaluated on the inverse permutation.
struct StatName {
    StatKind kind = StatKind::Inv;
    int r = 1;
    bool inverse = false;

    bool operator==(const StatName&) const = default;
    bool uses_r() const;
    std::string name() const;
    long eval(const Word& w) const;
};

// Accepts e.g. "inv", "imaj", "inv_2", "2maj", "i2den", and the r-generic
// forms "inv_r", "rmaj", "rdes", "rexc", "rden" which take default_r.
std::optional<StatName> parse_stat(const std::string& s, int default_r = 1);
StatName stat_name(StatKind k, int r = 1, bool inverse = false);

long inverse_stat(const StatName& st, const Permutation& p);

}  // namespace mahonian
