#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mahonian/families.hpp"
#include "mahonian/poly.hpp"
#include "mahonian/stats.hpp"

namespace mahonian {

struct StatAssignment {
    std::vector<std::pair<StatName, Var>> items;
    std::string to_string() const;
};

// "inv:q,maj:t"; a bare name means q.
StatAssignment parse_assignment(const std::string& s, int default_r = 1);
void validate_assignment(const StatAssignment& sa);

MultiPoly distribution(const std::vector<Word>& family, const StatAssignment& sa);
MultiPoly distribution(const FamilySpec& fam, const StatAssignment& sa);
MultiPoly distribution_of(const std::vector<Word>& family, const std::function<long(const Word&)>& f, Var v = Var::Q);

enum class CheckStatus { Pass, Fail, Warn };
const char* status_name(CheckStatus s);

struct Witness {
    std::string cell;
    std::string detail;
};

struct CheckReport {
    std::string identity;
    std::vector<std::string> grid;
    int cells = 0;
    int failed = 0;
    CheckStatus status = CheckStatus::Pass;
    std::optional<Witness> witness;
    long long elapsed_ms = 0;

    std::string to_json() const;
    std::string to_text() const;
};

// A cell returns nullopt on success or a description of the failure.
struct Cell {
    std::string label;
    std::function<std::optional<std::string>()> run;
};

struct CheckOptions {
    int n_max = 5;
    std::vector<int> r_set{1, 2, 3};
    int jobs = 1;
};

// Runs cells (possibly concurrently) and reports the first failure in grid order.
CheckReport run_cells(const std::string& identity, const std::vector<Cell>& cells, int jobs);

std::vector<std::string> identity_ids();
std::string identity_description(const std::string& id);
CheckReport check_identity(const std::string& id, const CheckOptions& opt);

// Equality of all distributions, and of each with `closed` when given.
std::optional<std::string> compare_distributions(const std::vector<Word>& family,
                                                 const std::vector<StatAssignment>& sas,
                                                 const std::optional<MultiPoly>& closed = std::nullopt);

enum class SearchFamily { RlwminClasses, DesSubseteq, DesEq, SetPartitionPerm };
std::optional<SearchFamily> parse_search_family(const std::string& s);
const char* search_family_name(SearchFamily f);

struct Counterexample {
    std::string cell;
    MultiPoly lhs;
    MultiPoly rhs;
};

// Smallest-parameter family instance on which a and b are not equidistributed.
std::optional<Counterexample> find_counterexample(const StatName& a, const StatName& b, SearchFamily fam, int n_max);

// Boustrophedon (Seidel-Entringer) recurrence.
std::vector<Integer> euler_numbers(int n_max);

}  // namespace mahonian
