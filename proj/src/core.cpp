#include "mahonian/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mahonian {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::GapInAlphabet: return "GapInAlphabet";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::DescentViolation: return "DescentViolation";
        case ErrorKind::NotAPermutation: return "NotAPermutation";
        case ErrorKind::EmptyWord: return "EmptyWord";
        case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
        case ErrorKind::NotStirling: return "NotStirling";
        case ErrorKind::PartsSumMismatch: return "PartsSumMismatch";
        case ErrorKind::UnknownIdentity: return "UnknownIdentity";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

Error::Error(ErrorKind kind, const std::string& msg)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

void require_word(const Word& w) {
    if (w.empty()) throw Error(ErrorKind::EmptyWord, "word must be nonempty");
    for (int x : w)
        if (x < 1) throw Error(ErrorKind::OutOfRange, "letters must be positive");
}

bool is_permutation(const Word& w) {
    std::vector<char> seen(w.size() + 1, 0);
    for (int x : w) {
        if (x < 1 || x > static_cast<int>(w.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

void require_permutation(const Permutation& p) {
    require_word(p);
    if (!is_permutation(p)) throw Error(ErrorKind::NotAPermutation, word_to_string(p));
}

void require_composition(const Composition& a) {
    if (a.empty()) throw Error(ErrorKind::OutOfRange, "composition must be nonempty");
    for (int x : a)
        if (x < 1) throw Error(ErrorKind::OutOfRange, "composition parts must be positive");
}

int max_letter(const Word& w) { return w.empty() ? 0 : *std::max_element(w.begin(), w.end()); }

Composition content(const Word& w) {
    require_word(w);
    Composition a(max_letter(w), 0);
    for (int x : w) ++a[x - 1];
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == 0)
            throw Error(ErrorKind::GapInAlphabet, "letter " + std::to_string(i + 1) + " missing");
    return a;
}

int composition_size(const Composition& a) { return std::accumulate(a.begin(), a.end(), 0); }

PositionSet partial_sums(const Composition& a) {
    PositionSet S;
    int s = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) S.push_back(s += a[i]);
    return S;
}

Composition composition_from_set(int n, const PositionSet& S) {
    Composition a;
    int prev = 0;
    for (int s : S) {
        if (s <= prev || s >= n) throw Error(ErrorKind::OutOfRange, "S must be a subset of [n-1]");
        a.push_back(s - prev);
        prev = s;
    }
    a.push_back(n - prev);
    return a;
}

Word sorted_word(const Word& w) {
    Word a = w;
    std::sort(a.begin(), a.end());
    return a;
}

Permutation standardize(const Word& w) {
    std::vector<int> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return w[i] < w[j]; });
    Permutation t(w.size());
    for (std::size_t v = 0; v < order.size(); ++v) t[order[v]] = static_cast<int>(v) + 1;
    return t;
}

int istd_letter(const Composition& a, int value) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i];
        if (value <= s) return static_cast<int>(i) + 1;
    }
    throw Error(ErrorKind::OutOfRange, "value exceeds the composition size");
}

Word istd(const Composition& a, const Permutation& p) {
    require_composition(a);
    if (composition_size(a) != static_cast<int>(p.size()))
        throw Error(ErrorKind::LengthMismatch, "permutation length differs from |alpha|");
    require_permutation(p);
    Word w(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) w[i] = istd_letter(a, p[i]);
    return w;
}

LetterMultiset istd_set(const Composition& a, const PositionSet& A) {
    int n = composition_size(a);
    LetterMultiset M;
    for (int x : A) {
        if (x < 1 || x > n) throw Error(ErrorKind::OutOfRange, "position outside [n]");
        ++M[istd_letter(a, x)];
    }
    return M;
}

Permutation inverse(const Permutation& p) {
    require_permutation(p);
    Permutation q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
    return q;
}

LetterSet supp(const LetterMultiset& M) {
    LetterSet s;
    for (auto& [v, c] : M) s.push_back(v);
    return s;
}

LetterMultiset to_multiset(const std::vector<int>& letters) {
    LetterMultiset M;
    for (int x : letters) ++M[x];
    return M;
}

std::vector<int> multiset_letters(const LetterMultiset& M) {
    std::vector<int> out;
    for (auto& [v, c] : M) out.insert(out.end(), c, v);
    return out;
}

Word theta(const Permutation& p, const PositionSet& S) {
    require_permutation(p);
    int n = static_cast<int>(p.size());
    std::vector<char> cut(n + 1, 0);
    for (int s : S) {
        if (s < 1 || s >= n) throw Error(ErrorKind::OutOfRange, "S must be a subset of [n-1]");
        cut[s] = 1;
    }
    Word w(n);
    int block = 1;
    for (int i = 1; i <= n; ++i) {
        if (i > 1 && p[i - 2] > p[i - 1] && !cut[i - 1])
            throw Error(ErrorKind::DescentViolation, "descent at " + std::to_string(i - 1) + " not in S");
        w[p[i - 1] - 1] = block;
        if (cut[i]) ++block;
    }
    return w;
}

Permutation theta_inv(const Word& w) {
    Composition a = content(w);
    Permutation p;
    p.reserve(w.size());
    for (std::size_t j = 1; j <= a.size(); ++j)
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] == static_cast<int>(j)) p.push_back(static_cast<int>(i) + 1);
    return p;
}

void require_biword(const Biword& v) {
    if (v.top.size() != v.bottom.size()) throw Error(ErrorKind::LengthMismatch, "biword rows differ in length");
    if (sorted_word(v.top) != sorted_word(v.bottom))
        throw Error(ErrorKind::InvalidArgument, "biword rows are not rearrangements");
}

SetPartition make_set_partition(std::vector<std::vector<int>> blocks) {
    int n = 0;
    for (auto& b : blocks) {
        if (b.empty()) throw Error(ErrorKind::InvalidArgument, "empty block");
        std::sort(b.begin(), b.end());
        n += static_cast<int>(b.size());
    }
    std::sort(blocks.begin(), blocks.end(), [](auto& x, auto& y) { return x.back() < y.back(); });
    std::vector<char> seen(n + 1, 0);
    for (auto& b : blocks)
        for (int x : b) {
            if (x < 1 || x > n || seen[x]) throw Error(ErrorKind::InvalidArgument, "blocks do not partition [n]");
            seen[x] = 1;
        }
    return SetPartition{std::move(blocks)};
}

Composition shape(const SetPartition& sp) {
    Composition a;
    for (auto& b : sp.blocks) a.push_back(static_cast<int>(b.size()));
    return a;
}

Word word_rep(const SetPartition& sp) {
    int n = composition_size(shape(sp));
    Word w(n);
    for (std::size_t j = 0; j < sp.blocks.size(); ++j)
        for (int x : sp.blocks[j]) w[x - 1] = static_cast<int>(j) + 1;
    return w;
}

Permutation perm_rep(const SetPartition& sp) {
    Permutation p;
    for (auto& b : sp.blocks) p.insert(p.end(), b.begin(), b.end());
    return p;
}

SetPartition partition_from_word(const Word& w) {
    Composition a = content(w);
    std::vector<std::vector<int>> blocks(a.size());
    for (std::size_t i = 0; i < w.size(); ++i) blocks[w[i] - 1].push_back(static_cast<int>(i) + 1);
    for (std::size_t j = 1; j < blocks.size(); ++j)
        if (blocks[j - 1].back() > blocks[j].back())
            throw Error(ErrorKind::InvalidArgument, "last occurrences out of order");
    return SetPartition{std::move(blocks)};
}

std::string word_to_string(const Word& w) {
    bool digits = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x <= 9; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!digits && i) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

std::string set_to_string(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::string multiset_to_string(const LetterMultiset& M) { return set_to_string(multiset_letters(M)); }

std::string partition_to_string(const SetPartition& sp) {
    std::ostringstream os;
    bool digits = composition_size(shape(sp)) <= 9;
    for (std::size_t j = 0; j < sp.blocks.size(); ++j) {
        if (j) os << '/';
        for (std::size_t i = 0; i < sp.blocks[j].size(); ++i) {
            if (!digits && i) os << ',';
            os << sp.blocks[j][i];
        }
    }
    return os.str();
}

}  // namespace mahonian
