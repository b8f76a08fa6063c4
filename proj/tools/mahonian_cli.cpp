#include <CLI11.hpp>
#include <cctype>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "mahonian/bijections.hpp"
#include "mahonian/families.hpp"
#include "mahonian/poly.hpp"
#include "mahonian/stats.hpp"
#include "mahonian/verify.hpp"

using namespace mahonian;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Config {
    std::string format = "text";
    std::vector<int> r;
    int rmax = 3;
    int nmax = 5;
    int jobs = 1;
    std::string family;
    std::string stats;
    std::string bijection;
    std::string S;
    std::string word;
    std::string identity;
};

Word parse_word(const std::string& s) {
    if (s.empty()) throw Error(ErrorKind::EmptyWord, "empty word literal");
    Word w;
    if (s.find(',') == std::string::npos) {
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                throw Error(ErrorKind::InvalidArgument, "bad word literal '" + s + "'");
            w.push_back(c - '0');
        }
        return w;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || std::stoi(item) < 1)
            throw Error(ErrorKind::InvalidArgument, "bad word literal '" + s + "'");
        w.push_back(std::stoi(item));
    }
    return w;
}

PositionSet parse_positions(const std::string& s) {
    PositionSet out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorKind::InvalidArgument, "bad position list '" + s + "'");
        out.push_back(std::stoi(item));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> r_values(const Config& cfg) {
    if (!cfg.r.empty()) {
        for (int r : cfg.r)
            if (r < 1) throw Error(ErrorKind::OutOfRange, "r must be positive");
        return cfg.r;
    }
    return {1};
}

json multiset_json(const LetterMultiset& m) { return multiset_letters(m); }

int cmd_stats(const Config& cfg) {
    Word w = parse_word(cfg.word);
    require_word(w);
    auto rs = r_values(cfg);
    auto mm = minima_maxima(w);
    std::vector<std::pair<std::string, long>> values = {
        {"des", des(w)}, {"exc", exc(w)}, {"inv", inv(w)}, {"maj", maj(w)}, {"den", den(w)},
        {"mak", mak(w)}, {"mad", mad(w)}, {"stat", stat(w)}, {"rlmin", static_cast<long>(mm.rlmin.size())},
        {"lrmax", static_cast<long>(mm.lrmax.size())}, {"lrmin", mm.lrmin}};
    for (int r : rs) {
        std::string s = std::to_string(r);
        values.push_back({"inv_" + s, inv_r(w, r)});
        values.push_back({s + "des", rdes(w, r)});
        values.push_back({s + "maj", rmaj(w, r)});
        values.push_back({s + "exc", rexc(w, r)});
        values.push_back({s + "den", rden(w, r)});
    }
    if (is_permutation(w)) {
        for (auto k : {StatKind::Maj, StatKind::Mak, StatKind::Den, StatKind::Mad, StatKind::Stat}) {
            StatName st{k, 1, true};
            values.push_back({st.name(), st.eval(w)});
        }
        for (int r : rs) {
            StatName st{StatKind::InvR, r, true};
            values.push_back({st.name(), st.eval(w)});
        }
    }
    auto d = descents(w);
    auto e = excedances(w);
    if (cfg.format == "json") {
        json j;
        j["word"] = word_to_string(w);
        for (auto& [k, v] : values) j[k] = v;
        j["Des"] = d.set;
        j["Exc"] = e.set;
        j["Rlmin"] = mm.rlmin;
        j["Rlwmin"] = multiset_json(mm.rlwmin);
        j["Lrmax"] = mm.lrmax;
        j["PLrmax"] = mm.plrmax;
        std::cout << j.dump() << "\n";
        return kExitPass;
    }
    std::cout << "word=" << word_to_string(w) << "\n";
    for (auto& [k, v] : values) std::cout << k << "=" << v << "\n";
    std::cout << "Des=" << set_to_string(d.set) << "\n"
              << "Exc=" << set_to_string(e.set) << "\n"
              << "Rlmin=" << set_to_string(mm.rlmin) << "\n"
              << "Rlwmin=" << multiset_to_string(mm.rlwmin) << "\n"
              << "Lrmax=" << set_to_string(mm.lrmax) << "\n"
              << "PLrmax=" << set_to_string(mm.plrmax) << "\n";
    return kExitPass;
}

int cmd_dist(const Config& cfg) {
    if (cfg.family.empty() || cfg.stats.empty()) throw CLI::ValidationError("dist needs --family and --stats");
    FamilySpec fam = parse_family(cfg.family);
    auto members = materialize(fam);
    auto rs = r_values(cfg);
    json out = json::array();
    for (int r : rs) {
        StatAssignment sa = parse_assignment(cfg.stats, r);
        MultiPoly p = distribution(members, sa);
        if (cfg.format == "json") {
            out.push_back({{"family", family_to_string(fam)}, {"stats", sa.to_string()}, {"r", r},
                           {"polynomial", json::parse(p.to_json())}, {"text", p.to_text()}});
        } else {
            if (rs.size() > 1) std::cout << "r=" << r << ": ";
            std::cout << p.to_text() << "\n";
        }
    }
    if (cfg.format == "json") std::cout << (out.size() == 1 ? out[0] : out).dump() << "\n";
    return kExitPass;
}

struct MapRow {
    std::string before_name;
    long before;
    std::string after_name;
    long after;
};

int cmd_map(const Config& cfg) {
    Word w = parse_word(cfg.word);
    const std::string& b = cfg.bijection;
    auto rs = r_values(cfg);
    json out = json::array();
    auto emit = [&](const Word& image, const std::vector<MapRow>& rows, std::optional<int> r,
                    const std::vector<std::pair<std::string, std::string>>& sets = {}) {
        if (cfg.format == "json") {
            json j{{"bijection", b}, {"input", word_to_string(w)}, {"image", word_to_string(image)}};
            if (r) j["r"] = *r;
            json t = json::array();
            for (auto& row : rows)
                t.push_back({{"before", row.before_name}, {"before_value", row.before}, {"after", row.after_name},
                             {"after_value", row.after}});
            j["transport"] = t;
            for (auto& [k, v] : sets) j[k] = v;
            out.push_back(j);
            return;
        }
        if (r && rs.size() > 1) std::cout << "r=" << *r << ": ";
        std::cout << word_to_string(image) << "\n";
        for (auto& row : rows)
            std::cout << "  " << row.before_name << "(w)=" << row.before << " -> " << row.after_name
                      << "(image)=" << row.after << "\n";
        for (auto& [k, v] : sets) std::cout << "  " << k << ": " << v << "\n";
    };
    auto rlw = [&](const Word& v) { return multiset_to_string(rlwmin(v)); };
    if (b == "foata_r") {
        for (int r : rs) {
            Word v = foata_r(w, r);
            emit(v, {{"inv_" + std::to_string(r), inv_r(w, r), "inv", inv(v)}}, r, {{"Rlwmin", rlw(w) + " -> " + rlw(v)}});
        }
    } else if (b == "rawlings") {
        for (int r : rs) {
            Word v = rawlings_R(w, r);
            emit(v, {{"inv", inv(w), std::to_string(r) + "maj", rmaj(v, r)}}, r, {{"Rlwmin", rlw(w) + " -> " + rlw(v)}});
        }
    } else if (b == "hrden") {
        for (int r : rs) {
            Word v = H_rden(w, r);
            std::string s = std::to_string(r);
            emit(v, {{s + "exc", rexc(w, r), s + "des", rdes(v, r)}, {s + "den", rden(w, r), s + "maj", rmaj(v, r)}}, r,
                 {{"Rlwmin", rlw(w) + " -> " + rlw(v)}});
        }
    } else if (b == "phi") {
        Word v = phi_alpha(w);
        emit(v, {{"des", des(w), "exc", exc(v)}, {"mak", mak(w), "den", den(v)}, {"mad", mad(w), "inv", inv(v)}}, {},
             {{"Rlwmin", rlw(w) + " -> " + rlw(v)}});
    } else if (b == "phi_qi") {
        Word v = phi_QI(w);
        emit(v, {{"des", des(w), "des", des(v)}}, {}, {{"PLrmax", set_to_string(plrmax(w)) + " -> " + set_to_string(plrmax(v))}});
    } else if (b == "theta") {
        require_permutation(w);
        PositionSet S = parse_positions(cfg.S);
        Word v = theta(w, S);
        std::vector<MapRow> rows;
        for (auto k : {StatKind::Inv, StatKind::Maj, StatKind::Mak, StatKind::Stat}) {
            StatName st{k, 1, false}, ist{k, 1, true};
            rows.push_back({ist.name(), ist.eval(w), st.name(), st.eval(v)});
        }
        emit(v, rows, {}, {{"PLrmax -> Rlwmin", set_to_string(plrmax(w)) + " -> " + rlw(v)}});
    } else if (b == "theta_inv") {
        Word v = theta_inv(w);
        std::vector<MapRow> rows;
        for (auto k : {StatKind::Inv, StatKind::Maj, StatKind::Mak, StatKind::Stat}) {
            StatName st{k, 1, false}, ist{k, 1, true};
            rows.push_back({st.name(), st.eval(w), ist.name(), ist.eval(v)});
        }
        emit(v, rows, {}, {{"Rlwmin -> PLrmax", rlw(w) + " -> " + set_to_string(plrmax(v))}});
    } else {
        throw CLI::ValidationError("unknown bijection '" + b + "'");
    }
    if (cfg.format == "json") std::cout << (out.size() == 1 ? out[0] : out).dump() << "\n";
    return kExitPass;
}

int cmd_check(const Config& cfg) {
    CheckOptions opt;
    opt.n_max = cfg.nmax;
    opt.jobs = cfg.jobs;
    if (!cfg.r.empty()) {
        opt.r_set = r_values(cfg);
    } else {
        if (cfg.rmax < 1) throw Error(ErrorKind::OutOfRange, "rmax must be positive");
        opt.r_set.clear();
        for (int r = 1; r <= cfg.rmax; ++r) opt.r_set.push_back(r);
    }
    std::vector<std::string> ids;
    if (cfg.identity == "all") ids = identity_ids();
    else ids.push_back(cfg.identity);
    for (auto& id : ids) identity_description(id);
    bool failed = false;
    for (auto& id : ids) {
        CheckReport rep = check_identity(id, opt);
        std::cout << (cfg.format == "json" ? rep.to_json() : rep.to_text()) << std::endl;
        failed |= rep.status == CheckStatus::Fail;
    }
    return failed ? kExitFail : kExitPass;
}

int cmd_counterexample(const Config& cfg) {
    std::vector<std::string> names;
    std::stringstream ss(cfg.stats);
    for (std::string item; std::getline(ss, item, ',');) names.push_back(item);
    if (names.size() != 2) throw CLI::ValidationError("counterexample needs --stats a,b");
    int r = r_values(cfg).front();
    auto a = parse_stat(names[0], r), b = parse_stat(names[1], r);
    if (!a || !b) throw Error(ErrorKind::InvalidArgument, "unknown statistic in '" + cfg.stats + "'");
    auto fam = parse_search_family(cfg.family.empty() ? "rlwmin" : cfg.family);
    if (!fam) throw Error(ErrorKind::InvalidArgument, "search family must be rlwmin, desle, deseq or sp-perm");
    auto c = find_counterexample(*a, *b, *fam, cfg.nmax);
    if (cfg.format == "json") {
        json j{{"a", a->name()}, {"b", b->name()}, {"family", search_family_name(*fam)}, {"nmax", cfg.nmax}};
        if (c)
            j["witness"] = {{"cell", c->cell}, {"a", c->lhs.to_text()}, {"b", c->rhs.to_text()}};
        else
            j["witness"] = nullptr;
        std::cout << j.dump() << "\n";
    } else if (c) {
        std::cout << c->cell << "\n  " << a->name() << ": " << c->lhs.to_text() << "\n  " << b->name() << ": "
                  << c->rhs.to_text() << "\n";
    } else {
        std::cout << "none up to n=" << cfg.nmax << "\n";
    }
    return kExitPass;
}

int cmd_euler(const Config& cfg) {
    if (cfg.nmax < 0) throw Error(ErrorKind::OutOfRange, "nmax must be nonnegative");
    auto e = euler_numbers(cfg.nmax);
    if (cfg.format == "json") {
        json j = json::array();
        for (auto& v : e) j.push_back(v.str());
        std::cout << j.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < e.size(); ++i) std::cout << (i ? "," : "") << e[i].str();
        std::cout << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of Mahonian statistics on words and permutations"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--r", cfg.r, "Comma list of r values")->delimiter(',')->allow_extra_args(false);
    app.add_option("--jobs", cfg.jobs, "Worker threads for check")->check(CLI::PositiveNumber);

    auto* stats = app.add_subcommand("stats", "All statistics of a word");
    stats->add_option("word", cfg.word, "Word literal, e.g. 2111 or 10,2,10,1")->required();

    auto* dist = app.add_subcommand("dist", "Distribution polynomial over a family");
    dist->add_option("--family", cfg.family, "Family spec, e.g. words:alpha=3,1")->required();
    dist->add_option("--stats", cfg.stats, "Assignment, e.g. des:t,maj:q")->required();

    auto* map = app.add_subcommand("map", "Apply a bijection");
    map->add_option("--bijection", cfg.bijection, "foata_r, rawlings, hrden, phi, phi_qi, theta, theta_inv")
        ->required()
        ->check(CLI::IsMember({"foata_r", "rawlings", "hrden", "phi", "phi_qi", "theta", "theta_inv"}));
    map->add_option("--S", cfg.S, "Descent set for theta");
    map->add_option("word", cfg.word, "Word literal")->required();

    auto* check = app.add_subcommand("check", "Run identity checks");
    check->add_option("identity", cfg.identity, "Identity id or 'all'")->required();
    check->add_option("--nmax", cfg.nmax, "Largest n");
    check->add_option("--rmax", cfg.rmax, "Use r = 1..rmax when --r is absent");

    auto* cex = app.add_subcommand("counterexample", "Search for a non-equidistribution witness");
    cex->add_option("--stats", cfg.stats, "Two statistics, e.g. iden,inv")->required();
    cex->add_option("--family", cfg.family, "rlwmin, desle, deseq or sp-perm");
    cex->add_option("--nmax", cfg.nmax, "Largest n");

    auto* euler = app.add_subcommand("euler", "Euler numbers E_0..E_nmax");
    euler->add_option("--nmax", cfg.nmax, "Largest n");

    for (auto* sub : {stats, dist, map, check, cex, euler}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*stats) return cmd_stats(cfg);
        if (*dist) return cmd_dist(cfg);
        if (*map) return cmd_map(cfg);
        if (*check) return cmd_check(cfg);
        if (*cex) return cmd_counterexample(cfg);
        if (*euler) return cmd_euler(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
