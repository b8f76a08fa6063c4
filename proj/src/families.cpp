#include "mahonian/families.hpp"

#include <algorithm>
#include <sstream>

#include "mahonian/bijections.hpp"
#include "mahonian/stats.hpp"

namespace mahonian {

std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    if (n < 1) return out;
    // Bit i of mask set means a cut after position i+1.
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        PositionSet S;
        for (int i = 0; i < n - 1; ++i)
            if (mask >> i & 1u) S.push_back(i + 1);
        out.push_back(composition_from_set(n, S));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PositionSet> subsets(int m) {
    std::vector<PositionSet> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        PositionSet s;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1u) s.push_back(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

void for_each_word(const Composition& a, const std::function<void(const Word&)>& visit) {
    require_composition(a);
    Word w;
    for (std::size_t i = 0; i < a.size(); ++i) w.insert(w.end(), a[i], static_cast<int>(i) + 1);
    do visit(w);
    while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Word> gen_words(const Composition& a) {
    std::vector<Word> out;
    for_each_word(a, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::vector<Word> gen_words_fixed_rlwmin(const Composition& a, const LetterMultiset& R) {
    std::vector<Word> out;
    for_each_word(a, [&](const Word& w) {
        if (rlwmin(w) == R) out.push_back(w);
    });
    return out;
}

std::vector<Word> gen_words_fixed_rlmin(const Composition& a, const LetterSet& D) {
    std::vector<Word> out;
    for_each_word(a, [&](const Word& w) {
        if (rlmin_set(w) == D) out.push_back(w);
    });
    return out;
}

std::vector<Permutation> gen_des_subseteq(int n, const PositionSet& S) {
    Composition a = composition_from_set(n, S);
    std::vector<Permutation> out;
    for_each_word(a, [&](const Word& w) { out.push_back(theta_inv(w)); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> gen_des_eq(int n, const PositionSet& S) {
    std::vector<Permutation> out;
    for (auto& p : gen_des_subseteq(n, S))
        if (descents(p).set == S) out.push_back(p);
    return out;
}

std::vector<Permutation> gen_des_P(int n, const PositionSet& S, const PositionSet& P, bool exact) {
    std::vector<Permutation> out;
    for (auto& p : exact ? gen_des_eq(n, S) : gen_des_subseteq(n, S))
        if (plrmax(p) == P) out.push_back(p);
    return out;
}

bool is_s_suffix_closed(int n, const PositionSet& S, const PositionSet& P) {
    std::vector<char> in(n + 2, 0);
    for (int x : P) {
        if (x < 1 || x > n) return false;
        in[x] = 1;
    }
    std::vector<int> ends(S.begin(), S.end());
    ends.push_back(n);
    int lo = 1;
    for (int e : ends) {
        for (int i = lo; i < e; ++i)
            if (in[i] && !in[i + 1]) return false;
        lo = e + 1;
    }
    return true;
}

std::vector<PositionSet> s_suffix_closed(int n, const PositionSet& S) {
    // Each block [s_{j-1}+1, s_j] contributes one of its suffixes.
    Composition a = composition_from_set(n, S);
    std::vector<PositionSet> out{{}};
    int start = 1;
    for (int len : a) {
        std::vector<PositionSet> next;
        for (auto& base : out)
            for (int take = 0; take <= len; ++take) {
                PositionSet s = base;
                for (int i = start + len - take; i < start + len; ++i) s.push_back(i);
                next.push_back(std::move(s));
            }
        out = std::move(next);
        start += len;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void choose(const std::vector<int>& pool, int k, std::size_t from, std::vector<int>& cur,
            std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        choose(pool, k, i + 1, cur, out);
        cur.pop_back();
    }
}

void build_partitions(const Composition& a, int idx, std::vector<int> remaining,
                      std::vector<std::vector<int>>& blocks, std::vector<SetPartition>& out) {
    if (idx < 0) {
        out.push_back(SetPartition{blocks});
        return;
    }
    int top = remaining.back();
    remaining.pop_back();
    std::vector<std::vector<int>> picks;
    std::vector<int> cur;
    choose(remaining, a[idx] - 1, 0, cur, picks);
    for (auto& pick : picks) {
        std::vector<int> block = pick;
        block.push_back(top);
        std::vector<int> left;
        std::set_difference(remaining.begin(), remaining.end(), pick.begin(), pick.end(), std::back_inserter(left));
        blocks[idx] = block;
        build_partitions(a, idx - 1, left, blocks, out);
    }
}

}  // namespace

std::vector<SetPartition> gen_set_partitions(const Composition& a) {
    require_composition(a);
    int n = composition_size(a);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    std::vector<std::vector<int>> blocks(a.size());
    std::vector<SetPartition> out;
    build_partitions(a, static_cast<int>(a.size()) - 1, all, blocks, out);
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return word_rep(x) < word_rep(y); });
    return out;
}

bool is_partition_word(const Word& w) {
    int m = max_letter(w);
    std::vector<int> last(m + 1, -1);
    for (std::size_t i = 0; i < w.size(); ++i) last[w[i]] = static_cast<int>(i);
    for (int j = 2; j <= m; ++j)
        if (last[j - 1] > last[j]) return false;
    return true;
}

std::vector<Word> gen_avoiders(const Composition& a, Pattern pat) {
    std::vector<Word> out;
    for_each_word(a, [&](const Word& w) {
        if (pat == Pattern::P221 ? avoids_221(w) : avoids_212(w)) out.push_back(w);
    });
    return out;
}

std::vector<Word> gen_avoiders_by_insertion(const Composition& a, Pattern pat) {
    require_composition(a);
    std::vector<Word> level{Word(a[0], 1)};
    for (std::size_t j = 1; j < a.size(); ++j) {
        int m = static_cast<int>(j) + 1;
        std::vector<Word> next;
        for (auto& w : level)
            for (std::size_t x = 0; x <= w.size(); ++x) {
                Word u = w;
                if (pat == Pattern::P221) {
                    u.insert(u.begin() + x, m);
                    u.insert(u.end(), a[j] - 1, m);
                } else {
                    u.insert(u.begin() + x, a[j], m);
                }
                next.push_back(std::move(u));
            }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end());
    return level;
}

long long avoider_count(const Composition& a) {
    long long c = 1, s = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        s += a[i];
        c *= s + 1;
    }
    return c;
}

PositionSet alternating_descent_set(int n, bool reverse) {
    PositionSet S;
    for (int i = reverse ? 2 : 1; i <= n - 1; i += 2) S.push_back(i);
    return S;
}

std::vector<Permutation> gen_alternating(int n, bool reverse) {
    return gen_des_eq(n, alternating_descent_set(n, reverse));
}

int mcs(const PositionSet& S) {
    int c = 0;
    for (std::size_t i = 0; i < S.size(); ++i)
        if (i == 0 || S[i] != S[i - 1] + 1) ++c;
    return c;
}

std::vector<PositionSet> runs_descent_sets(int n, int k) {
    std::vector<PositionSet> out;
    for (auto& S : subsets(std::max(n - 1, 0))) {
        bool has1 = std::find(S.begin(), S.end(), 1) != S.end();
        bool hasl = std::find(S.begin(), S.end(), n - 1) != S.end();
        int c = mcs(S);
        bool keep;
        if (k % 2 == 0)
            keep = 2 * c == k && (has1 != hasl);
        else
            keep = (2 * c == k - 1 && !has1 && !hasl) || (2 * c == k + 1 && has1 && hasl);
        if (keep) out.push_back(S);
    }
    return out;
}

std::vector<Permutation> gen_alt_runs(int n, int k) {
    std::vector<Permutation> out;
    Composition ones(n, 1);
    for_each_word(ones, [&](const Word& p) {
        if (alternating_runs(p) == k) out.push_back(p);
    });
    return out;
}

std::vector<Permutation> gen_alt_runs_by_descent_sets(int n, int k) {
    std::vector<Permutation> out;
    for (auto& S : runs_descent_sets(n, k)) {
        auto part = gen_des_eq(n, S);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw Error(ErrorKind::InvalidArgument, "empty list item in '" + s + "'");
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw Error(ErrorKind::InvalidArgument, "bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

PositionSet sorted_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw Error(ErrorKind::InvalidArgument, "repeated element in set");
    return v;
}

}  // namespace

FamilySpec parse_family(const std::string& spec) {
    std::vector<std::string> fields;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) fields.push_back(item);
    if (fields.empty()) throw Error(ErrorKind::InvalidArgument, "empty family spec");
    FamilySpec f;
    const std::string& head = fields[0];
    bool has_alpha = false, has_n = false, has_k = false, has_P = false, has_R = false, has_D = false;
    try {
        for (std::size_t i = 1; i < fields.size(); ++i) {
            auto eq = fields[i].find('=');
            if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "expected key=value in '" + fields[i] + "'");
            std::string key = fields[i].substr(0, eq), val = fields[i].substr(eq + 1);
            if (key == "alpha") { f.alpha = parse_int_list(val); has_alpha = true; }
            else if (key == "n") { f.n = std::stoi(val); has_n = true; }
            else if (key == "k") { f.k = std::stoi(val); has_k = true; }
            else if (key == "S") f.S = sorted_set(parse_int_list(val));
            else if (key == "plrmax") { f.P = sorted_set(parse_int_list(val)); has_P = true; }
            else if (key == "rlwmin") { f.R = to_multiset(parse_int_list(val)); has_R = true; }
            else if (key == "rlmin") { f.D = sorted_set(parse_int_list(val)); has_D = true; }
            else throw Error(ErrorKind::InvalidArgument, "unknown key '" + key + "'");
        }
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::InvalidArgument, "bad number in '" + spec + "'");
    } catch (const std::out_of_range&) {
        throw Error(ErrorKind::InvalidArgument, "number out of range in '" + spec + "'");
    }
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw Error(ErrorKind::InvalidArgument, std::string(head) + " needs " + what);
    };
    if (head == "words" || head == "perms") {
        if (head == "perms") {
            need(has_n, "n");
            f.alpha = Composition(f.n, 1);
            has_alpha = true;
        }
        need(has_alpha, "alpha");
        f.kind = has_R ? FamilyKind::WordsFixedRlwmin : has_D ? FamilyKind::WordsFixedRlmin : FamilyKind::Words;
    } else if (head == "desle" || head == "deseq") {
        need(has_n, "n");
        bool eq = head == "deseq";
        f.kind = has_P ? (eq ? FamilyKind::DesEqP : FamilyKind::DesSubseteqP)
                       : (eq ? FamilyKind::DesEq : FamilyKind::DesSubseteq);
    } else if (head == "sp-word" || head == "sp-perm") {
        need(has_alpha, "alpha");
        f.kind = head == "sp-word" ? FamilyKind::SetPartitionWord : FamilyKind::SetPartitionPerm;
    } else if (head == "avoid221" || head == "avoid212") {
        need(has_alpha, "alpha");
        f.kind = head == "avoid221" ? FamilyKind::Avoid221 : FamilyKind::Avoid212;
    } else if (head == "alt" || head == "ralt") {
        need(has_n, "n");
        f.kind = head == "alt" ? FamilyKind::Alternating : FamilyKind::ReverseAlternating;
    } else if (head == "runs") {
        need(has_n && has_k, "n and k");
        f.kind = FamilyKind::AltRuns;
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown family '" + head + "'");
    }
    if (has_alpha) {
        require_composition(f.alpha);
        f.n = composition_size(f.alpha);
    }
    if (f.n < 1) throw Error(ErrorKind::OutOfRange, "n must be positive");
    for (int s : f.S)
        if (s < 1 || s > f.n - 1) throw Error(ErrorKind::OutOfRange, "S must be a subset of [n-1]");
    for (int p : f.P)
        if (p < 1 || p > f.n) throw Error(ErrorKind::OutOfRange, "plrmax must be a subset of [n]");
    return f;
}

std::string family_to_string(const FamilySpec& f) {
    switch (f.kind) {
        case FamilyKind::Words: return "words:alpha=" + join(f.alpha);
        case FamilyKind::WordsFixedRlwmin: return "words:alpha=" + join(f.alpha) + ":rlwmin=" + join(multiset_letters(f.R));
        case FamilyKind::WordsFixedRlmin: return "words:alpha=" + join(f.alpha) + ":rlmin=" + join(f.D);
        case FamilyKind::DesSubseteq: return "desle:n=" + std::to_string(f.n) + ":S=" + join(f.S);
        case FamilyKind::DesEq: return "deseq:n=" + std::to_string(f.n) + ":S=" + join(f.S);
        case FamilyKind::DesSubseteqP: return "desle:n=" + std::to_string(f.n) + ":S=" + join(f.S) + ":plrmax=" + join(f.P);
        case FamilyKind::DesEqP: return "deseq:n=" + std::to_string(f.n) + ":S=" + join(f.S) + ":plrmax=" + join(f.P);
        case FamilyKind::SetPartitionWord: return "sp-word:alpha=" + join(f.alpha);
        case FamilyKind::SetPartitionPerm: return "sp-perm:alpha=" + join(f.alpha);
        case FamilyKind::Avoid221: return "avoid221:alpha=" + join(f.alpha);
        case FamilyKind::Avoid212: return "avoid212:alpha=" + join(f.alpha);
        case FamilyKind::Alternating: return "alt:n=" + std::to_string(f.n);
        case FamilyKind::ReverseAlternating: return "ralt:n=" + std::to_string(f.n);
        case FamilyKind::AltRuns: return "runs:n=" + std::to_string(f.n) + ":k=" + std::to_string(f.k);
    }
    return "";
}

std::vector<Word> materialize(const FamilySpec& f) {
    switch (f.kind) {
        case FamilyKind::Words: return gen_words(f.alpha);
        case FamilyKind::WordsFixedRlwmin: return gen_words_fixed_rlwmin(f.alpha, f.R);
        case FamilyKind::WordsFixedRlmin: return gen_words_fixed_rlmin(f.alpha, f.D);
        case FamilyKind::DesSubseteq: return gen_des_subseteq(f.n, f.S);
        case FamilyKind::DesEq: return gen_des_eq(f.n, f.S);
        case FamilyKind::DesSubseteqP: return gen_des_P(f.n, f.S, f.P, false);
        case FamilyKind::DesEqP: return gen_des_P(f.n, f.S, f.P, true);
        case FamilyKind::SetPartitionWord: {
            std::vector<Word> out;
            for (auto& sp : gen_set_partitions(f.alpha)) out.push_back(word_rep(sp));
            return out;
        }
        case FamilyKind::SetPartitionPerm: {
            std::vector<Word> out;
            for (auto& sp : gen_set_partitions(f.alpha)) out.push_back(perm_rep(sp));
            std::sort(out.begin(), out.end());
            return out;
        }
        case FamilyKind::Avoid221: return gen_avoiders(f.alpha, Pattern::P221);
        case FamilyKind::Avoid212: return gen_avoiders(f.alpha, Pattern::P212);
        case FamilyKind::Alternating: return gen_alternating(f.n, false);
        case FamilyKind::ReverseAlternating: return gen_alternating(f.n, true);
        case FamilyKind::AltRuns: return gen_alt_runs(f.n, f.k);
    }
    return {};
}

}  // namespace mahonian
