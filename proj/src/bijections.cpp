#include "mahonian/bijections.hpp"

#include <algorithm>

#include "mahonian/stats.hpp"

namespace mahonian {

Word J_x(const Word& w, int x) {
    if (w.empty()) throw Error(ErrorKind::EmptyWord, "J_x needs a nonempty word");
    bool high = w.back() > x;
    Word out, pending;
    out.reserve(w.size());
    for (int c : w) {
        if ((c > x) == high) {
            out.push_back(c);
            out.insert(out.end(), pending.begin(), pending.end());
            pending.clear();
        } else {
            pending.push_back(c);
        }
    }
    return out;
}

Word foata_r(const Word& w, int r) {
    require_word(w);
    if (r < 1) throw Error(ErrorKind::OutOfRange, "r must be positive");
    int n = static_cast<int>(w.size());
    if (r >= n) return w;
    Word g(w.begin(), w.begin() + r);
    for (int i = r; i < n; ++i) {
        // g = a_1..a_{i-r+1} w_{i-r+2}..w_i
        Word head(g.begin(), g.begin() + (i - r + 1));
        Word next = J_x(head, w[i]);
        next.insert(next.end(), g.begin() + (i - r + 1), g.end());
        next.push_back(w[i]);
        g = std::move(next);
    }
    return g;
}

int rawlings_u(const Word& w, int i, int j) {
    int seen = 0;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p] != i || ++seen != j) continue;
        int c = 0;
        for (std::size_t q = p + 1; q < w.size(); ++q) c += w[q] < i;
        return c;
    }
    throw Error(ErrorKind::OutOfRange, "no such occurrence");
}

Word rawlings_insert(const Word& gamma, int m, std::vector<int>& inserted, int label, int r) {
    int len = static_cast<int>(gamma.size());
    std::vector<char> starred(len + 1, 0);
    for (int p : inserted) starred[p] = 1;
    std::vector<int> flat, rising;
    for (int p = 0; p <= len; ++p) {
        if (starred[p]) continue;
        int gain = 0;
        if (p < len) {
            int y = gamma[p];
            gain = (m >= y + r) - (p > 0 && gamma[p - 1] >= y + r);
        }
        (gain == 0 ? flat : rising).push_back(p);
    }
    std::vector<int> order(flat.rbegin(), flat.rend());
    order.insert(order.end(), rising.begin(), rising.end());
    if (label < 0 || label >= static_cast<int>(order.size()))
        throw Error(ErrorKind::OutOfRange, "insertion label out of range");
    int gap = order[label];
    Word out = gamma;
    out.insert(out.begin() + gap, m);
    for (int& p : inserted)
        if (p >= gap) ++p;
    inserted.push_back(gap);
    return out;
}

Word rawlings_R(const Word& w, int r) {
    require_word(w);
    if (r < 1) throw Error(ErrorKind::OutOfRange, "r must be positive");
    int m = max_letter(w);
    if (m == 1) return w;
    Word rest;
    for (int c : w)
        if (c != m) rest.push_back(c);
    if (rest.empty()) return w;
    Word g = rawlings_R(rest, r);
    int copies = static_cast<int>(w.size() - rest.size());
    std::vector<int> inserted;
    for (int j = 1; j <= copies; ++j) g = rawlings_insert(g, m, inserted, rawlings_u(w, m, j), r);
    return g;
}

bool in_cyclic_interval(int x, int y, int z) {
    if (x <= y) return x < z && z <= y;
    return z > x || z <= y;
}

Biword T_r(int i, const Biword& v, int r) {
    int n = static_cast<int>(v.top.size());
    if (i < 1 || i > n - 1) throw Error(ErrorKind::PositionOutOfRange, "T_i needs 1 <= i <= n-1");
    Biword out = v;
    int x = v.top[i - 1], y = v.top[i];
    int a = v.bottom[i - 1], b = v.bottom[i];
    std::swap(out.top[i - 1], out.top[i]);
    if (in_cyclic_interval(x + r - 1, y + r - 1, a) != in_cyclic_interval(x + r - 1, y + r - 1, b))
        std::swap(out.bottom[i - 1], out.bottom[i]);
    return out;
}

bool is_dominated_cycle(const Biword& c) {
    std::size_t n = c.top.size();
    if (n == 0 || c.bottom.size() != n) return false;
    if (n == 1) return true;
    if (c.bottom[0] != c.top[n - 1]) return false;
    for (std::size_t i = 1; i < n; ++i)
        if (c.bottom[i] != c.top[i - 1] || c.bottom[0] <= c.bottom[i]) return false;
    return true;
}

CycleDecomposition gamma_rden(const Word& w, int r) {
    require_word(w);
    if (r < 1) throw Error(ErrorKind::OutOfRange, "r must be positive");
    CycleDecomposition cycles;
    Word cur = w;
    while (!cur.empty()) {
        Biword v{sorted_word(cur), cur};
        int top_max = v.top.back();
        int k = static_cast<int>(cur.size()) - 1;  // 0-based boundary column
        while (v.bottom[k] != top_max) {
            // Largest column left of the boundary whose top equals the boundary bottom.
            int i = k - 1;
            while (i >= 0 && v.top[i] != v.bottom[k]) --i;
            if (i < 0) throw Error(ErrorKind::InvalidArgument, "cycle peel failed");
            for (int j = i; j <= k - 2; ++j) v = T_r(j + 1, v, r);
            --k;
        }
        Biword c{Word(v.top.begin() + k, v.top.end()), Word(v.bottom.begin() + k, v.bottom.end())};
        cycles.push_back(std::move(c));
        cur.assign(v.bottom.begin(), v.bottom.begin() + k);
    }
    std::reverse(cycles.begin(), cycles.end());
    return cycles;
}

Word H_rden(const Word& w, int r) {
    require_word(w);
    if (r >= max_letter(w)) return w;
    Word out;
    for (auto& c : gamma_rden(w, r)) out.insert(out.end(), c.bottom.begin(), c.bottom.end());
    return out;
}

Permutation phi_perm(const Permutation& p) {
    require_permutation(p);
    int n = static_cast<int>(p.size());
    MakMadInfo info = mak_mad(p);
    std::vector<int> emb(n + 1, 0);
    std::vector<char> is_bottom(n + 1, 0), is_top(n + 1, 0);
    for (int i = 0; i < n; ++i) emb[p[i]] = info.embracing[i];
    for (int i = 0; i + 1 < n; ++i)
        if (p[i] > p[i + 1]) {
            is_top[p[i]] = 1;
            is_bottom[p[i + 1]] = 1;
        }
    std::vector<int> f, g, fp, gp;
    for (int x = 1; x <= n; ++x) (is_bottom[x] ? f : g).push_back(x);
    // f': decreasing insertion, each letter gets emb greater letters on its left.
    for (int x = n; x >= 1; --x)
        if (is_top[x]) fp.insert(fp.begin() + emb[x], x);
    // g': increasing insertion, each letter gets emb smaller letters on its right.
    for (int x = 1; x <= n; ++x)
        if (!is_top[x]) gp.insert(gp.end() - emb[x], x);
    Permutation out(n);
    for (std::size_t k = 0; k < f.size(); ++k) out[f[k] - 1] = fp[k];
    for (std::size_t k = 0; k < g.size(); ++k) out[g[k] - 1] = gp[k];
    return out;
}

Word phi_alpha(const Word& w) {
    Composition a = content(w);
    return istd(a, phi_perm(standardize(w)));
}

bool avoids_221(const Word& w) {
    // w_i = w_j > w_k with i < j < k: some letter has a smaller letter after its second copy.
    std::size_t n = w.size();
    int suffix_min = 0;
    std::vector<int> count(max_letter(w) + 1, 0);
    std::vector<int> later_min(n);
    for (std::size_t k = n; k-- > 0;) {
        later_min[k] = (k == n - 1) ? 0 : suffix_min;
        suffix_min = (k == n - 1) ? w[k] : std::min(suffix_min, w[k]);
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (count[w[j]]++ >= 1 && j + 1 < n && later_min[j] < w[j]) return false;
    }
    return true;
}

bool avoids_212(const Word& w) {
    // w_i = w_k > w_j with i < j < k.
    std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool dipped = false;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (w[j] < w[i]) dipped = true;
            else if (w[j] == w[i] && dipped) return false;
        }
    }
    return true;
}

namespace {

Word phi_qi_rec(const Word& w) {
    int m = max_letter(w);
    if (m == 1) return w;
    Word rest;
    int x = -1, copies = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == m) {
            if (x < 0) x = static_cast<int>(rest.size());
            ++copies;
        } else {
            rest.push_back(w[i]);
        }
    }
    Word u = phi_qi_rec(rest);
    u.insert(u.begin() + x, m);
    u.insert(u.end(), copies - 1, m);
    return u;
}

}  // namespace

Word phi_QI(const Word& w) {
    content(w);
    if (!avoids_212(w)) throw Error(ErrorKind::NotStirling, word_to_string(w) + " contains 212");
    return phi_qi_rec(w);
}

}  // namespace mahonian
