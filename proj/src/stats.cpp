#include "mahonian/stats.hpp"

#include <algorithm>
#include <cctype>

namespace mahonian {

DescentInfo descents(const Word& w) {
    DescentInfo d;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) {
            d.set.push_back(static_cast<int>(i) + 1);
            ++d.count;
            d.maj += static_cast<long>(i) + 1;
        }
    return d;
}

int des(const Word& w) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) c += w[i] > w[i + 1];
    return c;
}

long maj(const Word& w) {
    long s = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) s += static_cast<long>(i) + 1;
    return s;
}

long inv(const Word& w) {
    long c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
    return c;
}

ExcedanceInfo excedances(const Word& w, int r) {
    Word a = sorted_word(w);
    ExcedanceInfo e;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] >= a[i] + r) {
            e.set.push_back(static_cast<int>(i) + 1);
            ++e.count;
        }
    return e;
}

int exc(const Word& w) { return excedances(w, 1).count; }

long inv_r(const Word& w, int r) {
    std::size_t n = w.size();
    long c = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n && j < i + r; ++j) c += w[i] > w[j];
        if (i + r < n && w[i] > w[i + r]) c += static_cast<long>(i) + 1;
    }
    return c;
}

RmajInfo rmaj_info(const Word& w, int r) {
    RmajInfo info;
    std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (w[i] > w[j] && w[j] > w[i] - r) ++info.rmaj;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (w[i] >= w[i + 1] + r) {
            info.rdes_set.push_back(static_cast<int>(i) + 1);
            ++info.rdes;
            info.rmaj += static_cast<long>(i) + 1;
        }
    return info;
}

long rmaj(const Word& w, int r) { return rmaj_info(w, r).rmaj; }

int rdes(const Word& w, int r) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) c += w[i] >= w[i + 1] + r;
    return c;
}

int rexc(const Word& w, int r) { return excedances(w, r).count; }

DenInfo den_stats(const Word& w, int r) {
    Word a = sorted_word(w);
    std::size_t n = w.size();
    DenInfo d;
    Word excl, nexcl;
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] >= a[i] + r) {
            long b = 0;
            for (int x : a) b += (w[i] - r < x && x < w[i]);
            d.exc_part += static_cast<long>(i) + 1 + b;
            excl.push_back(w[i]);
        } else {
            nexcl.push_back(w[i]);
        }
    }
    for (std::size_t i = 0; i < excl.size(); ++i)
        for (std::size_t j = i + 1; j < excl.size(); ++j) d.imv_part += excl[i] >= excl[j];
    d.inv_part = inv(nexcl);
    d.rden = d.exc_part + d.imv_part + d.inv_part;
    return d;
}

long rden(const Word& w, int r) { return den_stats(w, r).rden; }

long den(const Word& w) { return rden(w, 1); }

MakMadInfo mak_mad(const Word& w) {
    std::size_t n = w.size();
    MakMadInfo m;
    m.heights.resize(n);
    m.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        int h = 1, l = 0;
        for (std::size_t j = 0; j < n; ++j) h += w[j] < w[i];
        for (std::size_t j = 0; j < i; ++j) l += w[j] == w[i];
        m.heights[i] = h;
        m.values[i] = h + l;
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (w[i] > w[i + 1]) {
            m.dbot += m.values[i + 1];
            m.dtop += m.heights[i];
        }
    std::size_t start = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (i == n || w[i - 1] <= w[i]) {
            m.blocks.push_back({static_cast<int>(start) + 1, static_cast<int>(i)});
            start = i;
        }
    m.embracing.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (auto [first, last] : m.blocks) {
            if (first == last || first - 1 <= static_cast<int>(i)) continue;
            int closer = w[first - 1], opener = w[last - 1];
            if (closer >= w[i] && w[i] > opener) ++m.embracing[i];
        }
    for (int e : m.embracing) m.res += e;
    m.ddif = m.dtop - m.dbot;
    m.mak = m.dbot + m.res;
    m.mad = m.ddif + m.res;
    return m;
}

long mak(const Word& w) { return mak_mad(w).mak; }
long mad(const Word& w) { return mak_mad(w).mad; }

// stat = (13-2) + (21-3) + (32-1) + (21) on std(w); ties in w read left < right.
long stat(const Word& w) {
    std::size_t n = w.size();
    long c = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        int a = w[i], b = w[i + 1];
        if (a > b) ++c;
        for (std::size_t k = i + 2; k < n; ++k) {
            int z = w[k];
            if (a <= z && z < b) ++c;
            if (b < a && a <= z) ++c;
            if (z < b && b < a) ++c;
        }
    }
    return c;
}

MinimaInfo minima_maxima(const Word& w) {
    MinimaInfo m;
    std::size_t n = w.size();
    int suffix_min = 0;
    for (std::size_t k = n; k-- > 0;) {
        if (k == n - 1 || w[k] <= suffix_min) ++m.rlwmin[w[k]];
        if (k == n - 1 || w[k] < suffix_min) m.rlmin.push_back(w[k]);
        suffix_min = (k == n - 1) ? w[k] : std::min(suffix_min, w[k]);
    }
    std::sort(m.rlmin.begin(), m.rlmin.end());
    int best = 0, low = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 || w[i] > best) {
            m.lrmax.push_back(w[i]);
            m.plrmax.push_back(static_cast<int>(i) + 1);
            best = w[i];
        }
        if (i == 0 || w[i] < low) {
            ++m.lrmin;
            low = w[i];
        }
    }
    std::sort(m.lrmax.begin(), m.lrmax.end());
    return m;
}

LetterSet rlmin_set(const Word& w) { return minima_maxima(w).rlmin; }
LetterMultiset rlwmin(const Word& w) { return minima_maxima(w).rlwmin; }
PositionSet plrmax(const Word& w) { return minima_maxima(w).plrmax; }
int lrmin(const Word& w) { return minima_maxima(w).lrmin; }

int alternating_runs(const Permutation& p) {
    int runs = 1;
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
        if ((p[i - 1] < p[i]) != (p[i] < p[i + 1])) ++runs;
    return runs;
}

namespace {

long count_rlwmin(const Word& w) {
    long c = 0;
    int suffix_min = 0;
    for (std::size_t k = w.size(); k-- > 0;) {
        if (k == w.size() - 1 || w[k] <= suffix_min) {
            ++c;
            suffix_min = w[k];
        }
    }
    return c;
}

long count_rlmin(const Word& w) {
    long c = 0;
    int suffix_min = 0;
    for (std::size_t k = w.size(); k-- > 0;) {
        if (k == w.size() - 1 || w[k] < suffix_min) {
            ++c;
            suffix_min = w[k];
        }
    }
    return c;
}

long count_lrmax(const Word& w) {
    long c = 0;
    int best = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (i == 0 || w[i] > best) {
            ++c;
            best = w[i];
        }
    return c;
}

long eval_direct(StatKind k, int r, const Word& w) {
    switch (k) {
        case StatKind::Des: return des(w);
        case StatKind::Exc: return exc(w);
        case StatKind::Inv: return inv(w);
        case StatKind::Maj: return maj(w);
        case StatKind::InvR: return inv_r(w, r);
        case StatKind::RDes: return rdes(w, r);
        case StatKind::RMaj: return rmaj(w, r);
        case StatKind::RExc: return rexc(w, r);
        case StatKind::RDen: return rden(w, r);
        case StatKind::Den: return den(w);
        case StatKind::Mak: return mak(w);
        case StatKind::Mad: return mad(w);
        case StatKind::Stat: return stat(w);
        case StatKind::Rlmin: return count_rlmin(w);
        case StatKind::Rlwmin: return count_rlwmin(w);
        case StatKind::Lrmax: return count_lrmax(w);
        case StatKind::Lrmin: return lrmin(w);
    }
    return 0;
}

struct NameEntry {
    const char* name;
    StatKind kind;
};

const NameEntry kPlain[] = {
    {"des", StatKind::Des}, {"exc", StatKind::Exc}, {"inv", StatKind::Inv},
    {"maj", StatKind::Maj}, {"den", StatKind::Den}, {"mak", StatKind::Mak},
    {"mad", StatKind::Mad}, {"stat", StatKind::Stat}, {"rlmin", StatKind::Rlmin},
    {"rlwmin", StatKind::Rlwmin}, {"lrmax", StatKind::Lrmax}, {"lrmin", StatKind::Lrmin},
};

const NameEntry kGap[] = {
    {"des", StatKind::RDes}, {"maj", StatKind::RMaj}, {"exc", StatKind::RExc}, {"den", StatKind::RDen},
};

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::optional<StatName> parse_plain(const std::string& s, int default_r) {
    for (auto& e : kPlain)
        if (s == e.name) return StatName{e.kind, 1, false};
    if (s == "inv_r") return StatName{StatKind::InvR, default_r, false};
    if (s.rfind("inv_", 0) == 0 && all_digits(s.substr(4))) {
        int r = std::stoi(s.substr(4));
        if (r >= 1) return StatName{StatKind::InvR, r, false};
    }
    for (auto& e : kGap) {
        std::string base = e.name;
        if (s == "r" + base) return StatName{e.kind, default_r, false};
        if (s.size() > base.size() && s.compare(s.size() - base.size(), base.size(), base) == 0) {
            std::string prefix = s.substr(0, s.size() - base.size());
            if (all_digits(prefix)) {
                int r = std::stoi(prefix);
                if (r >= 1) return StatName{e.kind, r, false};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

bool StatName::uses_r() const {
    return kind == StatKind::InvR || kind == StatKind::RDes || kind == StatKind::RMaj ||
           kind == StatKind::RExc || kind == StatKind::RDen;
}

std::string StatName::name() const {
    std::string base;
    switch (kind) {
        case StatKind::InvR: base = "inv_" + std::to_string(r); break;
        case StatKind::RDes: base = std::to_string(r) + "des"; break;
        case StatKind::RMaj: base = std::to_string(r) + "maj"; break;
        case StatKind::RExc: base = std::to_string(r) + "exc"; break;
        case StatKind::RDen: base = std::to_string(r) + "den"; break;
        default:
            for (auto& e : kPlain)
                if (e.kind == kind) base = e.name;
    }
    return inverse ? "i" + base : base;
}

long StatName::eval(const Word& w) const {
    if (inverse) return eval_direct(kind, r, mahonian::inverse(w));
    return eval_direct(kind, r, w);
}

std::optional<StatName> parse_stat(const std::string& s, int default_r) {
    if (auto p = parse_plain(s, default_r)) return p;
    if (s.size() > 1 && s[0] == 'i') {
        if (auto p = parse_plain(s.substr(1), default_r)) {
            p->inverse = true;
            return p;
        }
    }
    return std::nullopt;
}

StatName stat_name(StatKind k, int r, bool inverse) { return StatName{k, r, inverse}; }

long inverse_stat(const StatName& st, const Permutation& p) {
    StatName s = st;
    s.inverse = false;
    return s.eval(inverse(p));
}

}  // namespace mahonian
