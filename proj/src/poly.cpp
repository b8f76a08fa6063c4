#include "mahonian/poly.hpp"

#include <algorithm>
#include <json.hpp>
#include <mutex>

namespace mahonian {

MultiPoly::MultiPoly(long long c) {
    if (c != 0) terms_[{0, 0, 0}] = c;
}

MultiPoly MultiPoly::monomial(Integer c, int et, int eq, int ex) {
    MultiPoly p;
    p.add_term({et, eq, ex}, c);
    return p;
}

MultiPoly MultiPoly::var(Var v, int power) {
    Exponent e{0, 0, 0};
    e[static_cast<int>(v)] = power;
    MultiPoly p;
    p.add_term(e, 1);
    return p;
}

Integer MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Integer& c) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw Error(ErrorKind::OutOfRange, "negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::operator-() const { return scale(-1); }

MultiPoly MultiPoly::scale(const Integer& c) const {
    MultiPoly r;
    if (c == 0) return r;
    for (auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

Integer MultiPoly::at_ones() const {
    Integer s = 0;
    for (auto& [e, c] : terms_) s += c;
    return s;
}

int MultiPoly::degree(Var v) const {
    int d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
    return d;
}

MultiPoly MultiPoly::specialize_one(Var v) const {
    MultiPoly r;
    for (auto& [e0, c] : terms_) {
        Exponent e = e0;
        e[static_cast<int>(v)] = 0;
        r.add_term(e, c);
    }
    return r;
}

std::string MultiPoly::to_text() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"t", "q", "x"};
    std::string out;
    bool first = true;
    for (auto& [e, c] : terms_) {
        bool neg = c < 0;
        Integer mag = neg ? Integer(-c) : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string body;
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (!body.empty()) body += '*';
            body += names[v];
            if (e[v] > 1) body += "^" + std::to_string(e[v]);
        }
        if (body.empty())
            out += mag.str();
        else if (mag == 1)
            out += body;
        else
            out += mag.str() + "*" + body;
    }
    return out;
}

std::string MultiPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [e, c] : terms_) arr.push_back({{"t", e[0]}, {"q", e[1]}, {"x", e[2]}, {"c", c.str()}});
    return arr.dump();
}

MultiPoly MultiPoly::from_json(const std::string& s) {
    auto arr = nlohmann::json::parse(s);
    if (!arr.is_array()) throw Error(ErrorKind::InvalidArgument, "polynomial JSON must be an array");
    MultiPoly p;
    for (auto& term : arr)
        p.add_term({term.at("t").get<int>(), term.at("q").get<int>(), term.at("x").get<int>()},
                   Integer(term.at("c").get<std::string>()));
    return p;
}

MultiPoly q_int(int i) {
    MultiPoly p;
    for (int k = 0; k < i; ++k) p.add_term({0, k, 0}, 1);
    return p;
}

MultiPoly q_factorial(int i) {
    MultiPoly p = 1;
    for (int k = 2; k <= i; ++k) p *= q_int(k);
    return p;
}

MultiPoly q_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return MultiPoly();
    static std::mutex mu;
    static std::map<std::pair<int, int>, MultiPoly> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({n, k});
        if (it != memo.end()) return it->second;
    }
    MultiPoly r;
    if (k == 0 || k == n)
        r = 1;
    else
        r = q_binomial(n - 1, k - 1) + MultiPoly::var(Var::Q, k) * q_binomial(n - 1, k);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_pair(n, k), r);
    return r;
}

MultiPoly q_multinomial(int n, const Composition& parts) {
    require_composition(parts);
    if (composition_size(parts) != n) throw Error(ErrorKind::PartsSumMismatch, "parts do not sum to n");
    MultiPoly r = 1;
    int s = 0;
    for (int a : parts) {
        s += a;
        r *= q_binomial(s, a);
    }
    return r;
}

MultiPoly det_poly(const PolyMatrix& M) {
    std::size_t d = M.size();
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
    for (auto& row : M)
        if (row.size() != d) throw Error(ErrorKind::InvalidArgument, "matrix is not square");
    if (d == 1) return M[0][0];
    MultiPoly r;
    for (std::size_t j = 0; j < d; ++j) {
        if (M[0][j].is_zero()) continue;
        PolyMatrix minor;
        for (std::size_t i = 1; i < d; ++i) {
            std::vector<MultiPoly> row;
            for (std::size_t c = 0; c < d; ++c)
                if (c != j) row.push_back(M[i][c]);
            minor.push_back(std::move(row));
        }
        MultiPoly term = M[0][j] * det_poly(minor);
        if (j % 2) r -= term; else r += term;
    }
    return r;
}

MultiPoly mahonian_stirling_product(int n) {
    if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be positive");
    MultiPoly r = 1;
    for (int i = 0; i < n; ++i) {
        MultiPoly f = MultiPoly::var(Var::X);
        for (int k = 1; k <= i; ++k) f += MultiPoly::var(Var::Q, k);
        r *= f;
    }
    return r;
}

namespace {
std::vector<int> bounds(int n, const PositionSet& S) {
    std::vector<int> s{0};
    s.insert(s.end(), S.begin(), S.end());
    s.push_back(n);
    return s;
}
}  // namespace

MultiPoly stanley_matrix_det(int n, const PositionSet& S) {
    auto s = bounds(n, S);
    std::size_t k1 = s.size() - 1;
    PolyMatrix M(k1, std::vector<MultiPoly>(k1));
    for (std::size_t i = 0; i < k1; ++i)
        for (std::size_t j = 0; j < k1; ++j) M[i][j] = q_binomial(n - s[i], s[j + 1] - s[i]);
    return det_poly(M);
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Integer multinomial(int n, const Composition& parts) {
    if (composition_size(parts) != n) throw Error(ErrorKind::PartsSumMismatch, "parts do not sum to n");
    Integer r = 1;
    int s = 0;
    for (int a : parts) {
        s += a;
        r *= binomial(s, a);
    }
    return r;
}

Integer macmahon_det(int n, const PositionSet& S) {
    auto s = bounds(n, S);
    std::size_t k1 = s.size() - 1;
    PolyMatrix M(k1, std::vector<MultiPoly>(k1));
    for (std::size_t i = 0; i < k1; ++i)
        for (std::size_t j = 0; j < k1; ++j) {
            Integer b = binomial(n - s[i], s[j + 1] - s[i]);
            M[i][j] = MultiPoly::monomial(b, 0, 0, 0);
        }
    return det_poly(M).at_ones();
}

}  // namespace mahonian
