#include "mahonian/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "mahonian/bijections.hpp"

namespace mahonian {

std::string StatAssignment::to_string() const {
    static const char* names[3] = {"t", "q", "x"};
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) s += ',';
        s += items[i].first.name() + ":" + names[static_cast<int>(items[i].second)];
    }
    return s;
}

void validate_assignment(const StatAssignment& sa) {
    if (sa.items.empty()) throw Error(ErrorKind::InvalidArgument, "empty statistic assignment");
    bool used[3] = {false, false, false};
    for (auto& [st, v] : sa.items) {
        if (used[static_cast<int>(v)]) throw Error(ErrorKind::InvalidArgument, "variable assigned twice");
        used[static_cast<int>(v)] = true;
        if (st.r < 1) throw Error(ErrorKind::OutOfRange, "r must be positive");
    }
}

StatAssignment parse_assignment(const std::string& s, int default_r) {
    StatAssignment sa;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string name = item, var = "q";
        auto colon = item.find(':');
        if (colon != std::string::npos) {
            name = item.substr(0, colon);
            var = item.substr(colon + 1);
        }
        auto st = parse_stat(name, default_r);
        if (!st) throw Error(ErrorKind::InvalidArgument, "unknown statistic '" + name + "'");
        Var v;
        if (var == "t") v = Var::T;
        else if (var == "q") v = Var::Q;
        else if (var == "x") v = Var::X;
        else throw Error(ErrorKind::InvalidArgument, "unknown variable '" + var + "'");
        sa.items.push_back({*st, v});
    }
    validate_assignment(sa);
    return sa;
}

namespace {

MultiPoly from_counts(const std::map<Exponent, long long>& counts) {
    MultiPoly p;
    for (auto& [e, c] : counts) p.add_term(e, Integer(c));
    return p;
}

}  // namespace

MultiPoly distribution(const std::vector<Word>& family, const StatAssignment& sa) {
    validate_assignment(sa);
    std::map<Exponent, long long> counts;
    for (auto& w : family) {
        Exponent e{0, 0, 0};
        for (auto& [st, v] : sa.items) e[static_cast<int>(v)] += static_cast<int>(st.eval(w));
        ++counts[e];
    }
    return from_counts(counts);
}

MultiPoly distribution(const FamilySpec& fam, const StatAssignment& sa) { return distribution(materialize(fam), sa); }

MultiPoly distribution_of(const std::vector<Word>& family, const std::function<long(const Word&)>& f, Var v) {
    std::map<Exponent, long long> counts;
    for (auto& w : family) {
        Exponent e{0, 0, 0};
        e[static_cast<int>(v)] = static_cast<int>(f(w));
        ++counts[e];
    }
    return from_counts(counts);
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Warn: return "warn";
    }
    return "fail";
}

std::string CheckReport::to_json() const {
    nlohmann::json j;
    j["identity"] = identity;
    j["grid"] = grid;
    j["status"] = status_name(status);
    j["cells"] = cells;
    j["failed"] = failed;
    if (witness)
        j["witness"] = {{"cell", witness->cell}, {"detail", witness->detail}};
    else
        j["witness"] = nullptr;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    os << identity << ": " << status_name(status) << " (" << cells << " cells";
    if (failed) os << ", " << failed << " failing";
    os << ", " << elapsed_ms << " ms)";
    if (witness) os << "\n  at " << witness->cell << ": " << witness->detail;
    return os.str();
}

CheckReport run_cells(const std::string& identity, const std::vector<Cell>& cells, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::optional<std::string>> results(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < cells.size();) {
            try {
                results[i] = cells[i].run();
            } catch (const std::exception& e) {
                results[i] = std::string("exception: ") + e.what();
            }
        }
    };
    int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    CheckReport rep;
    rep.identity = identity;
    rep.cells = static_cast<int>(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        rep.grid.push_back(cells[i].label);
        if (results[i]) {
            ++rep.failed;
            if (!rep.witness) rep.witness = Witness{cells[i].label, *results[i]};
        }
    }
    rep.status = rep.failed ? CheckStatus::Fail : CheckStatus::Pass;
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::optional<std::string> compare_distributions(const std::vector<Word>& family,
                                                 const std::vector<StatAssignment>& sas,
                                                 const std::optional<MultiPoly>& closed) {
    if (sas.empty()) return std::nullopt;
    MultiPoly first = distribution(family, sas[0]);
    if (closed && !(first == *closed))
        return sas[0].to_string() + " gives " + first.to_text() + ", closed form is " + closed->to_text();
    for (std::size_t i = 1; i < sas.size(); ++i) {
        MultiPoly p = distribution(family, sas[i]);
        if (!(p == first))
            return sas[0].to_string() + " gives " + first.to_text() + " but " + sas[i].to_string() + " gives " +
                   p.to_text();
    }
    return std::nullopt;
}

std::optional<SearchFamily> parse_search_family(const std::string& s) {
    if (s == "rlwmin") return SearchFamily::RlwminClasses;
    if (s == "desle") return SearchFamily::DesSubseteq;
    if (s == "deseq") return SearchFamily::DesEq;
    if (s == "sp-perm") return SearchFamily::SetPartitionPerm;
    return std::nullopt;
}

const char* search_family_name(SearchFamily f) {
    switch (f) {
        case SearchFamily::RlwminClasses: return "rlwmin";
        case SearchFamily::DesSubseteq: return "desle";
        case SearchFamily::DesEq: return "deseq";
        case SearchFamily::SetPartitionPerm: return "sp-perm";
    }
    return "";
}

namespace {

std::string comp_label(const Composition& a) {
    std::string s = "alpha=(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

std::string ns_label(int n, const PositionSet& S) { return "n=" + std::to_string(n) + " S=" + set_to_string(S); }

std::map<LetterMultiset, std::vector<Word>> group_by_rlwmin(const Composition& a) {
    std::map<LetterMultiset, std::vector<Word>> g;
    for_each_word(a, [&](const Word& w) { g[rlwmin(w)].push_back(w); });
    return g;
}

std::vector<Permutation> all_perms(int n) { return gen_words(Composition(n, 1)); }

}  // namespace

std::optional<Counterexample> find_counterexample(const StatName& a, const StatName& b, SearchFamily fam, int n_max) {
    StatAssignment sa{{{a, Var::Q}}}, sb{{{b, Var::Q}}};
    auto differ = [&](const std::vector<Word>& f, const std::string& label) -> std::optional<Counterexample> {
        MultiPoly pa = distribution(f, sa), pb = distribution(f, sb);
        if (pa == pb) return std::nullopt;
        return Counterexample{label, pa, pb};
    };
    for (int n = 1; n <= n_max; ++n) {
        if (fam == SearchFamily::RlwminClasses || fam == SearchFamily::SetPartitionPerm) {
            for (auto& alpha : compositions(n)) {
                if (fam == SearchFamily::RlwminClasses) {
                    for (auto& [R, ws] : group_by_rlwmin(alpha))
                        if (auto c = differ(ws, comp_label(alpha) + " R=" + multiset_to_string(R))) return c;
                } else {
                    auto f = materialize(parse_family("sp-perm:alpha=" + [&] {
                        std::string s;
                        for (std::size_t i = 0; i < alpha.size(); ++i) s += (i ? "," : "") + std::to_string(alpha[i]);
                        return s;
                    }()));
                    if (auto c = differ(f, comp_label(alpha))) return c;
                }
            }
        } else {
            for (auto& S : subsets(n - 1)) {
                auto f = fam == SearchFamily::DesSubseteq ? gen_des_subseteq(n, S) : gen_des_eq(n, S);
                if (auto c = differ(f, ns_label(n, S))) return c;
            }
        }
    }
    return std::nullopt;
}

std::vector<Integer> euler_numbers(int n_max) {
    std::vector<Integer> out;
    if (n_max < 0) return out;
    std::vector<Integer> prev{1};
    out.push_back(1);
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Integer> row(n + 1);
        row[0] = 0;
        for (int k = 1; k <= n; ++k) row[k] = row[k - 1] + prev[n - k];
        out.push_back(row[n]);
        prev = std::move(row);
    }
    return out;
}

namespace {

StatName ST(StatKind k, int r = 1, bool inv = false) { return StatName{k, r, inv}; }

StatAssignment one(const StatName& s, Var v = Var::Q) { return StatAssignment{{{s, v}}}; }

StatAssignment two(const StatName& a, Var va, const StatName& b, Var vb) { return StatAssignment{{{a, va}, {b, vb}}}; }

std::vector<StatName> mahonian_stats(const std::vector<int>& rs) {
    std::vector<StatName> v{ST(StatKind::Inv), ST(StatKind::Maj), ST(StatKind::Den), ST(StatKind::Mak), ST(StatKind::Mad)};
    for (int r : rs) {
        v.push_back(ST(StatKind::InvR, r));
        v.push_back(ST(StatKind::RMaj, r));
        v.push_back(ST(StatKind::RDen, r));
    }
    return v;
}

std::vector<StatName> inverse_stats(const std::vector<int>& rs, bool with_stat) {
    std::vector<StatName> v{ST(StatKind::Inv), ST(StatKind::Maj, 1, true), ST(StatKind::Mak, 1, true)};
    for (int r : rs) v.push_back(ST(StatKind::InvR, r, true));
    if (with_stat) v.push_back(ST(StatKind::Stat, 1, true));
    return v;
}

std::vector<StatAssignment> singles(const std::vector<StatName>& names, std::optional<std::pair<StatName, Var>> extra = {}) {
    std::vector<StatAssignment> out;
    for (auto& n : names) {
        StatAssignment sa = one(n);
        if (extra) sa.items.push_back(*extra);
        out.push_back(sa);
    }
    return out;
}

std::vector<StatAssignment> euler_pairs(std::optional<std::pair<StatName, Var>> extra = {}) {
    std::vector<StatAssignment> out{two(ST(StatKind::Des), Var::T, ST(StatKind::Maj), Var::Q),
                                    two(ST(StatKind::Exc), Var::T, ST(StatKind::Den), Var::Q),
                                    two(ST(StatKind::Des), Var::T, ST(StatKind::Mak), Var::Q)};
    if (extra)
        for (auto& sa : out) sa.items.push_back(*extra);
    return out;
}

std::vector<StatAssignment> r_euler_pairs(int r, std::optional<std::pair<StatName, Var>> extra = {}) {
    std::vector<StatAssignment> out{two(ST(StatKind::RDes, r), Var::T, ST(StatKind::RMaj, r), Var::Q),
                                    two(ST(StatKind::RExc, r), Var::T, ST(StatKind::RDen, r), Var::Q)};
    if (extra)
        for (auto& sa : out) sa.items.push_back(*extra);
    return out;
}

// Runs several comparisons, returning the first failure with a prefix.
struct Checks {
    std::optional<std::string> failure;
    void run(const std::string& where, const std::optional<std::string>& r) {
        if (!failure && r) failure = where.empty() ? *r : where + ": " + *r;
    }
    void expect(bool ok, const std::string& what) {
        if (!failure && !ok) failure = what;
    }
};

std::string str(const Integer& v) { return v.str(); }

std::vector<Cell> per_composition(const CheckOptions& opt, int n_min,
                                  const std::function<std::optional<std::string>(const Composition&)>& f) {
    std::vector<Cell> cells;
    for (int n = n_min; n <= opt.n_max; ++n)
        for (auto& a : compositions(n)) cells.push_back({comp_label(a), [a, f] { return f(a); }});
    return cells;
}

std::vector<Cell> per_descent_set(const CheckOptions& opt,
                                  const std::function<std::optional<std::string>(int, const PositionSet&)>& f) {
    std::vector<Cell> cells;
    for (int n = 1; n <= opt.n_max; ++n)
        for (auto& s : subsets(n - 1)) cells.push_back({ns_label(n, s), [n, s, f] { return f(n, s); }});
    return cells;
}

std::vector<Cell> per_n(const CheckOptions& opt, int n_min, const std::function<std::optional<std::string>(int)>& f) {
    std::vector<Cell> cells;
    for (int n = n_min; n <= opt.n_max; ++n) cells.push_back({"n=" + std::to_string(n), [n, f] { return f(n); }});
    return cells;
}

std::vector<int> run_counts(int n) {
    std::vector<int> ks;
    for (int k = 1; k <= std::max(1, n - 1); ++k) ks.push_back(k);
    return ks;
}

// Distributions of st on families indexed by key.
template <class Key>
std::map<Key, std::vector<Word>> group(const std::vector<Word>& fam, const std::function<Key(const Word&)>& key) {
    std::map<Key, std::vector<Word>> g;
    for (auto& w : fam) g[key(w)].push_back(w);
    return g;
}

std::map<int, long long> coefficient_counts(const std::vector<Word>& fam, const std::function<long(const Word&)>& f) {
    std::map<int, long long> c;
    for (auto& w : fam) ++c[static_cast<int>(f(w))];
    return c;
}

bool is_submultiset(const LetterMultiset& small, const LetterMultiset& big) {
    for (auto& [v, c] : small) {
        auto it = big.find(v);
        if (it == big.end() || it->second < c) return false;
    }
    return true;
}

std::string join_comp(const Composition& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s;
}

// Bijection contract on every S_alpha: bijective, statistic transport, Rlwmin kept.
std::optional<std::string> bijection_contract(
    const Composition& a, const std::function<Word(const Word&)>& map,
    const std::function<std::optional<std::string>(const Word&, const Word&)>& transport) {
    std::set<Word> image;
    std::size_t count = 0;
    std::optional<std::string> bad;
    for_each_word(a, [&](const Word& w) {
        if (bad) return;
        ++count;
        Word v = map(w);
        if (content(v) != a) {
            bad = "w=" + word_to_string(w) + " maps outside S_alpha to " + word_to_string(v);
            return;
        }
        if (auto t = transport(w, v)) {
            bad = *t;
            return;
        }
        if (rlwmin(v) != rlwmin(w)) {
            bad = "w=" + word_to_string(w) + " image " + word_to_string(v) + " Rlwmin " +
                  multiset_to_string(rlwmin(w)) + " vs " + multiset_to_string(rlwmin(v));
            return;
        }
        image.insert(v);
    });
    if (bad) return bad;
    if (image.size() != count)
        return "not injective: " + std::to_string(image.size()) + " images for " + std::to_string(count) + " words";
    return std::nullopt;
}

struct Identity {
    std::string id;
    std::string description;
    std::function<std::vector<Cell>(const CheckOptions&)> cells;
    bool negative = false;
};

std::vector<Cell> remark_cells(const CheckOptions& opt, const std::vector<StatName>& stats,
                               const std::vector<SearchFamily>& fams) {
    std::vector<Cell> cells;
    for (auto& st : stats)
        for (auto fam : fams) {
            int n_max = opt.n_max;
            cells.push_back({st.name() + " vs inv on " + search_family_name(fam), [st, fam, n_max]() -> std::optional<std::string> {
                                 auto c = find_counterexample(st, ST(StatKind::Inv), fam, n_max);
                                 if (c) return std::nullopt;
                                 return "no witness up to n=" + std::to_string(n_max);
                             }});
        }
    return cells;
}

const std::vector<Identity>& registry() {
    static const std::vector<Identity> reg = {
        {"EQ_1_QMULTI", "Mahonian statistics on S_alpha equal the q-multinomial coefficient",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_composition(o, 1, [rs](const Composition& a) {
                 auto names = mahonian_stats(rs);
                 names.push_back(ST(StatKind::Stat));
                 return compare_distributions(gen_words(a), singles(names), q_multinomial(composition_size(a), a));
             });
         }},
        {"THM_2_1", "Mahonian statistics are equidistributed on each S_{alpha,R}",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_composition(o, 1, [rs](const Composition& a) {
                 Checks c;
                 for (auto& [R, ws] : group_by_rlwmin(a))
                     c.run("R=" + multiset_to_string(R), compare_distributions(ws, singles(mahonian_stats(rs))));
                 return c.failure;
             });
         }},
        {"THM_2_2", "(des,maj), (exc,den), (des,mak) agree on each S_{alpha,R}",
         [](const CheckOptions& o) {
             return per_composition(o, 1, [](const Composition& a) {
                 Checks c;
                 for (auto& [R, ws] : group_by_rlwmin(a))
                     c.run("R=" + multiset_to_string(R), compare_distributions(ws, euler_pairs()));
                 return c.failure;
             });
         }},
        {"THM_2_3", "(rdes,rmaj) and (rexc,rden) agree on each S_{alpha,R}",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_composition(o, 1, [rs](const Composition& a) {
                 Checks c;
                 for (auto& [R, ws] : group_by_rlwmin(a))
                     for (int r : rs)
                         c.run("R=" + multiset_to_string(R) + " r=" + std::to_string(r),
                               compare_distributions(ws, r_euler_pairs(r)));
                 return c.failure;
             });
         }},
        {"COR_2_1", "rlwmin-refined Mahonian, Euler-Mahonian and r-Euler-Mahonian classes on S_alpha",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_composition(o, 1, [rs](const Composition& a) {
                 auto ws = gen_words(a);
                 std::pair<StatName, Var> x{ST(StatKind::Rlwmin), Var::X};
                 Checks c;
                 c.run("mahonian", compare_distributions(ws, singles(mahonian_stats(rs), x)));
                 c.run("euler", compare_distributions(ws, euler_pairs(x)));
                 for (int r : rs) c.run("r=" + std::to_string(r), compare_distributions(ws, r_euler_pairs(r, x)));
                 return c.failure;
             });
         }},
        {"COR_2_2", "classes on words with fixed Rlmin, and rlmin-refined classes on S_alpha",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_composition(o, 1, [rs](const Composition& a) {
                 auto ws = gen_words(a);
                 Checks c;
                 for (auto& w : ws)
                     c.expect(supp(rlwmin(w)) == rlmin_set(w), "supp(Rlwmin) differs from Rlmin at " + word_to_string(w));
                 auto groups = group<LetterSet>(ws, [](const Word& w) { return rlmin_set(w); });
                 for (auto& [D, g] : groups) {
                     std::string where = "D=" + set_to_string(D);
                     c.run(where, compare_distributions(g, singles(mahonian_stats(rs))));
                     c.run(where, compare_distributions(g, euler_pairs()));
                     for (int r : rs) c.run(where, compare_distributions(g, r_euler_pairs(r)));
                 }
                 std::pair<StatName, Var> x{ST(StatKind::Rlmin), Var::X};
                 c.run("rlmin", compare_distributions(ws, singles(mahonian_stats(rs), x)));
                 c.run("rlmin", compare_distributions(ws, euler_pairs(x)));
                 for (int r : rs) c.run("rlmin", compare_distributions(ws, r_euler_pairs(r, x)));
                 return c.failure;
             });
         }},
        {"MAHONIAN_STIRLING", "Mahonian statistics paired with rlmin on S_n equal x(x+q)...(x+q+...+q^{n-1})",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_n(o, 1, [rs](int n) {
                 std::pair<StatName, Var> x{ST(StatKind::Rlmin), Var::X};
                 return compare_distributions(all_perms(n), singles(mahonian_stats(rs), x), mahonian_stirling_product(n));
             });
         }},
        {"EQ_4_5", "sizes and inv-distributions of D^<=(S) and D^=(S) match the multinomial and determinant forms",
         [](const CheckOptions& o) {
             return per_descent_set(o, [](int n, const PositionSet& S) -> std::optional<std::string> {
                 Composition a = composition_from_set(n, S);
                 auto le = gen_des_subseteq(n, S);
                 auto eq = gen_des_eq(n, S);
                 Checks c;
                 std::vector<Permutation> filt;
                 for (auto& p : all_perms(n)) {
                     auto d = descents(p).set;
                     if (std::includes(S.begin(), S.end(), d.begin(), d.end())) filt.push_back(p);
                 }
                 c.expect(filt == le, "theta_inv route differs from the descent filter");
                 c.expect(Integer(le.size()) == multinomial(n, a),
                          "|D^<=| = " + std::to_string(le.size()) + ", multinomial " + str(multinomial(n, a)));
                 c.expect(Integer(eq.size()) == macmahon_det(n, S),
                          "|D^=| = " + std::to_string(eq.size()) + ", determinant " + str(macmahon_det(n, S)));
                 Integer incl = 0;
                 for (auto& T : subsets(static_cast<int>(S.size()))) {
                     PositionSet sub;
                     for (int idx : T) sub.push_back(S[idx - 1]);
                     Integer term = multinomial(n, composition_from_set(n, sub));
                     if ((S.size() - sub.size()) % 2) incl -= term; else incl += term;
                 }
                 c.expect(Integer(eq.size()) == incl, "inclusion-exclusion gives " + str(incl));
                 c.run("D^<=", compare_distributions(le, {one(ST(StatKind::Inv))}, q_multinomial(n, a)));
                 c.run("D^=", compare_distributions(eq, {one(ST(StatKind::Inv))}, stanley_matrix_det(n, S)));
                 return c.failure;
             });
         }},
        {"THM_3_1", "inv, imaj, imak, iinv_r, istat on D^<=(S) and D^=(S) equal the closed forms",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_descent_set(o, [rs](int n, const PositionSet& S) {
                 Checks c;
                 auto names = singles(inverse_stats(rs, true));
                 c.run("D^<=", compare_distributions(gen_des_subseteq(n, S), names, q_multinomial(n, composition_from_set(n, S))));
                 c.run("D^=", compare_distributions(gen_des_eq(n, S), names, stanley_matrix_det(n, S)));
                 return c.failure;
             });
         }},
        {"THM_3_2", "inv, imaj, imak, iinv_r agree on D^<=_P(S) and D^=_P(S) for every P",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_descent_set(o, [rs](int n, const PositionSet& S) {
                 Checks c;
                 auto le = gen_des_subseteq(n, S);
                 for (auto& p : le)
                     c.expect(is_s_suffix_closed(n, S, plrmax(p)),
                              "PLrmax of " + word_to_string(p) + " is not S-suffix-closed");
                 auto names = singles(inverse_stats(rs, false));
                 auto closed = s_suffix_closed(n, S);
                 std::set<PositionSet> closed_set(closed.begin(), closed.end());
                 auto ple = group<PositionSet>(le, [](const Word& w) { return plrmax(w); });
                 for (auto& [P, g] : ple) c.expect(closed_set.count(P) > 0, "realized P " + set_to_string(P) + " not closed");
                 for (auto& P : closed) {
                     std::string where = "P=" + set_to_string(P);
                     c.run(where + " D^<=", compare_distributions(gen_des_P(n, S, P, false), names));
                     c.run(where + " D^=", compare_distributions(gen_des_P(n, S, P, true), names));
                 }
                 return c.failure;
             });
         }},
        {"COR_3_1", "(inv,lrmax), (imaj,lrmax), (imak,lrmax), (iinv_r,lrmax) agree on D^=(S) and D^<=(S)",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_descent_set(o, [rs](int n, const PositionSet& S) {
                 Checks c;
                 auto names = singles(inverse_stats(rs, false), std::make_pair(ST(StatKind::Lrmax), Var::X));
                 c.run("D^<=", compare_distributions(gen_des_subseteq(n, S), names));
                 c.run("D^=", compare_distributions(gen_des_eq(n, S), names));
                 return c.failure;
             });
         }},
        {"COR_3_2", "(lrmax,des,st) agree on S_n for st in inv, imaj, imak, iinv_r",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_n(o, 1, [rs](int n) {
                 std::vector<StatAssignment> sas;
                 for (auto& st : inverse_stats(rs, false))
                     sas.push_back(StatAssignment{{{ST(StatKind::Lrmax), Var::X}, {ST(StatKind::Des), Var::T}, {st, Var::Q}}});
                 return compare_distributions(all_perms(n), sas);
             });
         }},
        {"PROP_3_1", "theta is a bijection D^<=(S) -> S_alpha with std(theta(p)) = p^{-1} and Rlwmin(theta(p)) = istd(PLrmax(p))",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_descent_set(o, [rs](int n, const PositionSet& S) {
                 Composition a = composition_from_set(n, S);
                 Checks c;
                 std::set<Word> image;
                 std::vector<StatName> standard{ST(StatKind::Inv), ST(StatKind::Maj), ST(StatKind::Mak), ST(StatKind::Stat)};
                 for (int r : rs) standard.push_back(ST(StatKind::InvR, r));
                 auto le = gen_des_subseteq(n, S);
                 for (auto& p : le) {
                     Word w = theta(p, S);
                     std::string at = "p=" + word_to_string(p);
                     image.insert(w);
                     c.expect(content(w) == a, at + " theta leaves S_alpha");
                     c.expect(standardize(w) == inverse(p), at + " std(theta(p)) != p^{-1}");
                     c.expect(theta_inv(w) == p, at + " theta_inv(theta(p)) != p");
                     c.expect(plrmax(p) == rlmin_set(inverse(p)), at + " PLrmax(p) != Rlmin(p^{-1})");
                     c.expect(rlwmin(w) == istd_set(a, plrmax(p)), at + " Rlwmin(theta(p)) != istd(PLrmax(p))");
                     for (auto& st : standard) {
                         StatName ist = st;
                         ist.inverse = true;
                         c.expect(ist.eval(p) == st.eval(w), at + " " + ist.name() + "(p) != " + st.name() + "(theta(p))");
                     }
                 }
                 c.expect(Integer(image.size()) == multinomial(n, a), "theta image has " + std::to_string(image.size()) + " words");
                 return c.failure;
             });
         }},
        {"BIJ_F_R", "F_r is a bijection on S_alpha with inv(F_r(w)) = inv_r(w), keeping Rlwmin",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_composition(o, 1, [rs](const Composition& a) {
                 Checks c;
                 for (int r : rs)
                     c.run("r=" + std::to_string(r),
                           bijection_contract(a, [r](const Word& w) { return foata_r(w, r); },
                                              [r](const Word& w, const Word& v) -> std::optional<std::string> {
                                                  if (inv(v) == inv_r(w, r)) return std::nullopt;
                                                  return "w=" + word_to_string(w) + " inv_r=" + std::to_string(inv_r(w, r)) +
                                                         " F_r(w)=" + word_to_string(v) + " inv=" + std::to_string(inv(v));
                                              }));
                 return c.failure;
             });
         }},
        {"BIJ_RAWLINGS", "R is a bijection on S_alpha with rmaj(R(w)) = inv(w), keeping Rlwmin",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_composition(o, 1, [rs](const Composition& a) {
                 Checks c;
                 for (int r : rs)
                     c.run("r=" + std::to_string(r),
                           bijection_contract(a, [r](const Word& w) { return rawlings_R(w, r); },
                                              [r](const Word& w, const Word& v) -> std::optional<std::string> {
                                                  if (rmaj(v, r) == inv(w)) return std::nullopt;
                                                  return "w=" + word_to_string(w) + " inv=" + std::to_string(inv(w)) +
                                                         " R(w)=" + word_to_string(v) + " rmaj=" + std::to_string(rmaj(v, r));
                                              }));
                 return c.failure;
             });
         }},
        {"BIJ_H_RDEN", "H_rden is a bijection on S_alpha sending (rexc,rden) to (rdes,rmaj), keeping Rlwmin",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_composition(o, 1, [rs](const Composition& a) {
                 Checks c;
                 for (int r : rs) {
                     c.run("r=" + std::to_string(r),
                           bijection_contract(a, [r](const Word& w) { return H_rden(w, r); },
                                              [r](const Word& w, const Word& v) -> std::optional<std::string> {
                                                  if (rdes(v, r) == rexc(w, r) && rmaj(v, r) == rden(w, r)) return std::nullopt;
                                                  return "w=" + word_to_string(w) + " (rexc,rden)=(" + std::to_string(rexc(w, r)) +
                                                         "," + std::to_string(rden(w, r)) + ") H(w)=" + word_to_string(v) +
                                                         " (rdes,rmaj)=(" + std::to_string(rdes(v, r)) + "," +
                                                         std::to_string(rmaj(v, r)) + ")";
                                              }));
                     if (r < static_cast<int>(a.size()))
                         for_each_word(a, [&](const Word& w) {
                             for (auto& cyc : gamma_rden(w, r))
                                 c.expect(is_dominated_cycle(cyc), "w=" + word_to_string(w) + " has a cycle that is not dominated");
                         });
                 }
                 return c.failure;
             });
         }},
        {"BIJ_PHI_ALPHA", "Phi_alpha is a bijection on S_alpha sending (des,mak,mad) to (exc,den,inv), keeping Rlwmin",
         [](const CheckOptions& o) {
             return per_composition(o, 1, [](const Composition& a) {
                 return bijection_contract(a, [](const Word& w) { return phi_alpha(w); },
                                           [](const Word& w, const Word& v) -> std::optional<std::string> {
                                               auto m = mak_mad(w);
                                               if (exc(v) == des(w) && den(v) == m.mak && inv(v) == m.mad) return std::nullopt;
                                               return "w=" + word_to_string(w) + " Phi(w)=" + word_to_string(v);
                                           });
             });
         }},
        {"SP_WORD", "word representation of set partitions: characterization and the three refined classes",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_composition(o, 1, [rs](const Composition& a) {
                 Checks c;
                 std::vector<Word> reps;
                 for (auto& sp : gen_set_partitions(a)) {
                     Word w = word_rep(sp);
                     c.expect(partition_from_word(w) == sp, "word_rep does not invert at " + partition_to_string(sp));
                     reps.push_back(w);
                 }
                 std::sort(reps.begin(), reps.end());
                 std::vector<Word> last_order, by_supp;
                 LetterSet full;
                 for (std::size_t i = 1; i <= a.size(); ++i) full.push_back(static_cast<int>(i));
                 for_each_word(a, [&](const Word& w) {
                     if (is_partition_word(w)) last_order.push_back(w);
                     if (supp(rlwmin(w)) == full) by_supp.push_back(w);
                 });
                 c.expect(reps == last_order, "partitions differ from the last-occurrence characterization");
                 c.expect(reps == by_supp, "partitions differ from the union over supp(R) = [m]");
                 std::pair<StatName, Var> x{ST(StatKind::Rlwmin), Var::X};
                 c.run("mahonian", compare_distributions(reps, singles(mahonian_stats(rs))));
                 c.run("euler", compare_distributions(reps, euler_pairs()));
                 for (int r : rs) c.run("r-euler", compare_distributions(reps, r_euler_pairs(r)));
                 c.run("mahonian+rlwmin", compare_distributions(reps, singles(mahonian_stats(rs), x)));
                 c.run("euler+rlwmin", compare_distributions(reps, euler_pairs(x)));
                 for (int r : rs) c.run("r-euler+rlwmin", compare_distributions(reps, r_euler_pairs(r, x)));
                 return c.failure;
             });
         }},
        {"THM_4_1", "inv, imaj, imak, iinv_r agree on the permutation representation of set partitions",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_composition(o, 1, [rs](const Composition& a) {
                 Checks c;
                 int n = composition_size(a);
                 PositionSet S = partial_sums(a);
                 PositionSet Sbar = S;
                 Sbar.push_back(n);
                 auto perms = materialize(parse_family("sp-perm:alpha=" + join_comp(a)));
                 std::vector<Permutation> via_P;
                 for (auto& p : gen_des_subseteq(n, S)) {
                     auto P = plrmax(p);
                     if (std::includes(P.begin(), P.end(), Sbar.begin(), Sbar.end())) via_P.push_back(p);
                 }
                 c.expect(perms == via_P, "permutation representation differs from the union over P containing S+{n}");
                 c.run("", compare_distributions(perms, singles(inverse_stats(rs, false))));
                 return c.failure;
             });
         }},
        {"THM_4_2", "(st,lrmax) pairs agree on the permutation representation of set partitions",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_composition(o, 1, [rs](const Composition& a) {
                 auto perms = materialize(parse_family("sp-perm:alpha=" + join_comp(a)));
                 return compare_distributions(perms, singles(inverse_stats(rs, false), std::make_pair(ST(StatKind::Lrmax), Var::X)));
             });
         }},
        {"EQ_19_COUNT", "|Q_alpha| = |I_alpha| = prod(alpha_1+...+alpha_i+1); insertion routes match the filters",
         [](const CheckOptions& o) {
             return per_composition(o, 1, [](const Composition& a) {
                 Checks c;
                 auto I = gen_avoiders(a, Pattern::P221);
                 auto Q = gen_avoiders(a, Pattern::P212);
                 long long want = avoider_count(a);
                 c.expect(static_cast<long long>(I.size()) == want, "|I| = " + std::to_string(I.size()) + ", want " + std::to_string(want));
                 c.expect(static_cast<long long>(Q.size()) == want, "|Q| = " + std::to_string(Q.size()) + ", want " + std::to_string(want));
                 c.expect(gen_avoiders_by_insertion(a, Pattern::P221) == I, "221 insertion route differs");
                 c.expect(gen_avoiders_by_insertion(a, Pattern::P212) == Q, "212 insertion route differs");
                 return c.failure;
             });
         }},
        {"THM_5_1", "Mahonian, Euler-Mahonian and r-Euler-Mahonian classes on I_alpha, with the product closed form",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_composition(o, 1, [rs](const Composition& a) {
                 Checks c;
                 auto I = gen_avoiders(a, Pattern::P221);
                 MultiPoly closed = 1;
                 int s = 0;
                 for (std::size_t i = 0; i + 1 < a.size(); ++i) closed *= q_int((s += a[i]) + 1);
                 LetterMultiset B;
                 for (std::size_t i = 1; i < a.size(); ++i)
                     if (a[i] > 1) B[static_cast<int>(i) + 1] = a[i] - 1;
                 std::vector<Word> viaR;
                 for_each_word(a, [&](const Word& w) {
                     if (is_submultiset(B, rlwmin(w))) viaR.push_back(w);
                 });
                 c.expect(viaR == I, "I_alpha differs from the union over R containing B");
                 c.run("mahonian", compare_distributions(I, singles(mahonian_stats(rs)), closed));
                 c.run("euler", compare_distributions(I, euler_pairs()));
                 for (int r : rs) c.run("r=" + std::to_string(r), compare_distributions(I, r_euler_pairs(r)));
                 return c.failure;
             });
         }},
        {"THM_5_2", "des, lrmin and lrmax have the same distribution on Q_alpha and I_alpha",
         [](const CheckOptions& o) {
             return per_composition(o, 1, [](const Composition& a) {
                 Checks c;
                 auto I = gen_avoiders(a, Pattern::P221);
                 auto Q = gen_avoiders(a, Pattern::P212);
                 for (auto k : {StatKind::Des, StatKind::Lrmin, StatKind::Lrmax}) {
                     MultiPoly pq = distribution(Q, one(ST(k))), pi = distribution(I, one(ST(k)));
                     c.expect(pq == pi, ST(k).name() + ": Q gives " + pq.to_text() + ", I gives " + pi.to_text());
                 }
                 return c.failure;
             });
         }},
        {"REC_DES", "descent counts on I_alpha and Q_alpha satisfy the two-term recurrence",
         [](const CheckOptions& o) {
             return per_composition(o, 2, [](const Composition& a) -> std::optional<std::string> {
                 if (a.size() < 2) return std::nullopt;
                 Composition ap(a.begin(), a.end() - 1);
                 int np = composition_size(ap);
                 Checks c;
                 for (auto pat : {Pattern::P221, Pattern::P212}) {
                     auto cur = coefficient_counts(gen_avoiders(a, pat), [](const Word& w) { return des(w); });
                     auto prev = coefficient_counts(gen_avoiders(ap, pat), [](const Word& w) { return des(w); });
                     auto at = [&](std::map<int, long long>& m, int i) { auto it = m.find(i); return it == m.end() ? 0LL : it->second; };
                     for (int i = 0; i <= static_cast<int>(a.size()) - 1; ++i) {
                         long long want = (np - i + 1) * at(prev, i - 1) + (i + 1) * at(prev, i);
                         c.expect(at(cur, i) == want, std::string(pat == Pattern::P221 ? "I" : "Q") + " i=" + std::to_string(i) +
                                                          ": " + std::to_string(at(cur, i)) + " vs " + std::to_string(want));
                     }
                 }
                 return c.failure;
             });
         }},
        {"REC_LRMIN", "left-to-right minima counts on Q_alpha and I_alpha satisfy B_{a,i} = B_{a',i-1} + n' B_{a',i}",
         [](const CheckOptions& o) {
             return per_composition(o, 2, [](const Composition& a) -> std::optional<std::string> {
                 if (a.size() < 2) return std::nullopt;
                 Composition ap(a.begin(), a.end() - 1);
                 int np = composition_size(ap);
                 Checks c;
                 for (auto pat : {Pattern::P221, Pattern::P212}) {
                     auto cur = coefficient_counts(gen_avoiders(a, pat), [](const Word& w) { return lrmin(w); });
                     auto prev = coefficient_counts(gen_avoiders(ap, pat), [](const Word& w) { return lrmin(w); });
                     auto at = [&](std::map<int, long long>& m, int i) { auto it = m.find(i); return it == m.end() ? 0LL : it->second; };
                     for (int i = 1; i <= static_cast<int>(a.size()); ++i) {
                         long long want = at(prev, i - 1) + np * at(prev, i);
                         c.expect(at(cur, i) == want, std::string(pat == Pattern::P221 ? "I" : "Q") + " i=" + std::to_string(i) +
                                                          ": " + std::to_string(at(cur, i)) + " vs " + std::to_string(want));
                     }
                 }
                 return c.failure;
             });
         }},
        {"PHI_QI", "phi: Q_alpha -> I_alpha is a bijection keeping PLrmax",
         [](const CheckOptions& o) {
             return per_composition(o, 1, [](const Composition& a) {
                 Checks c;
                 auto Q = gen_avoiders(a, Pattern::P212);
                 auto I = gen_avoiders(a, Pattern::P221);
                 std::set<Word> image;
                 for (auto& w : Q) {
                     Word u = phi_QI(w);
                     image.insert(u);
                     c.expect(avoids_221(u) && content(u) == a, "phi(" + word_to_string(w) + ") = " + word_to_string(u) + " is not in I_alpha");
                     c.expect(plrmax(u) == plrmax(w), "PLrmax differs at " + word_to_string(w));
                 }
                 c.expect(std::vector<Word>(image.begin(), image.end()) == I, "phi is not onto I_alpha");
                 return c.failure;
             });
         }},
        {"ALT_EULER", "|Alt_n| = |Ralt_n| = E_n from the boustrophedon recurrence",
         [](const CheckOptions& o) {
             auto cells = per_n(o, 1, [](int n) {
                 Checks c;
                 Integer e = euler_numbers(n)[n];
                 auto alt = gen_alternating(n, false);
                 auto ralt = gen_alternating(n, true);
                 std::size_t zig = 0, zag = 0;
                 for (auto& p : all_perms(n)) {
                     bool up = true, down = true;
                     for (int i = 0; i + 1 < n; ++i) {
                         bool fall = p[i] > p[i + 1];
                         if (fall != (i % 2 == 0)) down = false;
                         if (fall != (i % 2 == 1)) up = false;
                     }
                     zig += down;
                     zag += up;
                 }
                 c.expect(Integer(alt.size()) == e, "|Alt_n| = " + std::to_string(alt.size()) + ", E_n = " + str(e));
                 c.expect(Integer(ralt.size()) == e, "|Ralt_n| = " + std::to_string(ralt.size()) + ", E_n = " + str(e));
                 c.expect(zig == alt.size() && zag == ralt.size(), "descent-set route differs from the direct zigzag filter");
                 return c.failure;
             });
             cells.insert(cells.begin(), Cell{"E_0..E_6", []() -> std::optional<std::string> {
                                                  std::vector<Integer> want{1, 1, 1, 2, 5, 16, 61};
                                                  auto got = euler_numbers(6);
                                                  if (got == want) return std::nullopt;
                                                  return std::string("boustrophedon disagrees with 1,1,1,2,5,16,61");
                                              }});
             return cells;
         }},
        {"ALT_EQ_25_29", "five Mahonian statistics and the PLrmax/lrmax refinements on Alt_n and Ralt_n",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             return per_n(o, 1, [rs](int n) {
                 Checks c;
                 for (bool rev : {false, true}) {
                     std::string name = rev ? "Ralt" : "Alt";
                     auto fam = gen_alternating(n, rev);
                     c.run(name, compare_distributions(fam, singles(inverse_stats(rs, true)),
                                                       stanley_matrix_det(n, alternating_descent_set(n, rev))));
                     for (auto& [P, g] : group<PositionSet>(fam, [](const Word& w) { return plrmax(w); }))
                         c.run(name + " P=" + set_to_string(P), compare_distributions(g, singles(inverse_stats(rs, false))));
                     c.run(name + " lrmax",
                           compare_distributions(fam, singles(inverse_stats(rs, false), std::make_pair(ST(StatKind::Lrmax), Var::X))));
                 }
                 return c.failure;
             });
         }},
        {"RUNS_EQ_30", "permutations with k alternating runs are the disjoint union of D^=(S) over the listed descent sets",
         [](const CheckOptions& o) {
             std::vector<Cell> cells;
             for (int n = 1; n <= o.n_max; ++n)
                 for (int k : run_counts(n))
                     cells.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k), [n, k]() {
                                          Checks c;
                                          auto direct = gen_alt_runs(n, k);
                                          auto viaS = gen_alt_runs_by_descent_sets(n, k);
                                          std::size_t total = 0;
                                          for (auto& S : runs_descent_sets(n, k)) total += gen_des_eq(n, S).size();
                                          c.expect(direct == viaS, "run filter has " + std::to_string(direct.size()) +
                                                                       " permutations, decomposition " + std::to_string(viaS.size()));
                                          c.expect(total == viaS.size(), "decomposition is not disjoint");
                                          return c.failure;
                                      }});
             return cells;
         }},
        {"RUNS_STATS", "five Mahonian statistics and the PLrmax/lrmax refinements on R(n,k)",
         [](const CheckOptions& o) {
             auto rs = o.r_set;
             std::vector<Cell> cells;
             for (int n = 1; n <= o.n_max; ++n)
                 for (int k : run_counts(n))
                     cells.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k), [n, k, rs]() {
                                          Checks c;
                                          auto fam = gen_alt_runs(n, k);
                                          c.run("", compare_distributions(fam, singles(inverse_stats(rs, true))));
                                          for (auto& [P, g] : group<PositionSet>(fam, [](const Word& w) { return plrmax(w); }))
                                              c.run("P=" + set_to_string(P), compare_distributions(g, singles(inverse_stats(rs, false))));
                                          c.run("lrmax", compare_distributions(fam, singles(inverse_stats(rs, false),
                                                                                            std::make_pair(ST(StatKind::Lrmax), Var::X))));
                                          return c.failure;
                                      }});
             return cells;
         }},
        {"REMARK_2_2", "stat is not equidistributed with inv on some S_{alpha,R}",
         [](const CheckOptions& o) { return remark_cells(o, {ST(StatKind::Stat)}, {SearchFamily::RlwminClasses}); }, true},
        {"REMARK_3_2", "iden, imad, irmaj, irden are not equidistributed with inv on some D^<=(S) and some D^=(S)",
         [](const CheckOptions& o) {
             return remark_cells(o,
                                 {ST(StatKind::Den, 1, true), ST(StatKind::Mad, 1, true), ST(StatKind::RMaj, 2, true),
                                  ST(StatKind::RDen, 2, true)},
                                 {SearchFamily::DesSubseteq, SearchFamily::DesEq});
         },
         true},
        {"REMARK_4_2", "istat, iden, irmaj, imad are not equidistributed with inv on some permutation representation",
         [](const CheckOptions& o) {
             return remark_cells(o,
                                 {ST(StatKind::Stat, 1, true), ST(StatKind::Den, 1, true), ST(StatKind::RMaj, 2, true),
                                  ST(StatKind::Mad, 1, true)},
                                 {SearchFamily::SetPartitionPerm});
         },
         true},
    };
    return reg;
}

const Identity& lookup(const std::string& id) {
    for (auto& e : registry())
        if (e.id == id) return e;
    throw Error(ErrorKind::UnknownIdentity, id);
}

}  // namespace

std::vector<std::string> identity_ids() {
    std::vector<std::string> ids;
    for (auto& e : registry()) ids.push_back(e.id);
    return ids;
}

std::string identity_description(const std::string& id) { return lookup(id).description; }

CheckReport check_identity(const std::string& id, const CheckOptions& opt) {
    const Identity& e = lookup(id);
    if (opt.n_max < 1) throw Error(ErrorKind::OutOfRange, "n_max must be positive");
    for (int r : opt.r_set)
        if (r < 1) throw Error(ErrorKind::OutOfRange, "r must be positive");
    CheckReport rep = run_cells(e.id, e.cells(opt), opt.jobs);
    if (e.negative && rep.status == CheckStatus::Fail) rep.status = CheckStatus::Warn;
    return rep;
}

}  // namespace mahonian
