#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mahonian/core.hpp"

namespace mahonian {

std::vector<Composition> compositions(int n);
// All subsets of [m], each sorted, in order of their bitmask.
std::vector<PositionSet> subsets(int m);

void for_each_word(const Composition& a, const std::function<void(const Word&)>& visit);
std::vector<Word> gen_words(const Composition& a);
std::vector<Word> gen_words_fixed_rlwmin(const Composition& a, const LetterMultiset& R);
std::vector<Word> gen_words_fixed_rlmin(const Composition& a, const LetterSet& D);

std::vector<Permutation> gen_des_subseteq(int n, const PositionSet& S);
std::vector<Permutation> gen_des_eq(int n, const PositionSet& S);
std::vector<Permutation> gen_des_P(int n, const PositionSet& S, const PositionSet& P, bool exact);
bool is_s_suffix_closed(int n, const PositionSet& S, const PositionSet& P);
std::vector<PositionSet> s_suffix_closed(int n, const PositionSet& S);

std::vector<SetPartition> gen_set_partitions(const Composition& a);
bool is_partition_word(const Word& w);

enum class Pattern { P221, P212 };
std::vector<Word> gen_avoiders(const Composition& a, Pattern pat);
// Constructive routes: first-copy insertion for 221, block insertion for 212.
std::vector<Word> gen_avoiders_by_insertion(const Composition& a, Pattern pat);
long long avoider_count(const Composition& a);

PositionSet alternating_descent_set(int n, bool reverse);
std::vector<Permutation> gen_alternating(int n, bool reverse);

int mcs(const PositionSet& S);
std::vector<PositionSet> runs_descent_sets(int n, int k);
std::vector<Permutation> gen_alt_runs(int n, int k);
std::vector<Permutation> gen_alt_runs_by_descent_sets(int n, int k);

enum class FamilyKind {
    Words, WordsFixedRlwmin, WordsFixedRlmin, DesSubseteq, DesEq, DesSubseteqP, DesEqP,
    SetPartitionWord, SetPartitionPerm, Avoid221, Avoid212, Alternating, ReverseAlternating, AltRuns,
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::Words;
    Composition alpha;
    int n = 0;
    PositionSet S;
    PositionSet P;
    LetterMultiset R;
    LetterSet D;
    int k = 0;
};

FamilySpec parse_family(const std::string& spec);
std::string family_to_string(const FamilySpec& f);
std::vector<Word> materialize(const FamilySpec& f);

}  // namespace mahonian
