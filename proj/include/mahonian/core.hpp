#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mahonian {

enum class ErrorKind {
    GapInAlphabet,
    LengthMismatch,
    OutOfRange,
    DescentViolation,
    NotAPermutation,
    EmptyWord,
    PositionOutOfRange,
    NotStirling,
    PartsSumMismatch,
    UnknownIdentity,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg);
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Letters are positive integers. Positions in every returned set are 1-based.
using Word = std::vector<int>;
using Permutation = std::vector<int>;
using Composition = std::vector<int>;
using PositionSet = std::vector<int>;  // sorted, 1-based
using LetterSet = std::vector<int>;    // sorted
using LetterMultiset = std::map<int, int>;

struct Biword {
    std::vector<int> top;
    std::vector<int> bottom;
    bool operator==(const Biword&) const = default;
};

// Blocks listed so that max B_1 < max B_2 < ... ; each block sorted.
struct SetPartition {
    std::vector<std::vector<int>> blocks;
    bool operator==(const SetPartition&) const = default;
};

void require_word(const Word& w);
void require_permutation(const Permutation& p);
void require_composition(const Composition& a);
bool is_permutation(const Word& w);

int max_letter(const Word& w);
Composition content(const Word& w);
int composition_size(const Composition& a);
// S = Sigma(alpha): the proper partial sums.
PositionSet partial_sums(const Composition& a);
Composition composition_from_set(int n, const PositionSet& S);

Word sorted_word(const Word& w);
Permutation standardize(const Word& w);
Word istd(const Composition& a, const Permutation& p);
int istd_letter(const Composition& a, int value);
LetterMultiset istd_set(const Composition& a, const PositionSet& A);
Permutation inverse(const Permutation& p);
LetterSet supp(const LetterMultiset& M);
LetterMultiset to_multiset(const std::vector<int>& letters);
std::vector<int> multiset_letters(const LetterMultiset& M);

Word theta(const Permutation& p, const PositionSet& S);
Permutation theta_inv(const Word& w);

void require_biword(const Biword& v);

SetPartition make_set_partition(std::vector<std::vector<int>> blocks);
Composition shape(const SetPartition& sp);
Word word_rep(const SetPartition& sp);
Permutation perm_rep(const SetPartition& sp);
SetPartition partition_from_word(const Word& w);

std::string word_to_string(const Word& w);
std::string set_to_string(const std::vector<int>& s);
std::string multiset_to_string(const LetterMultiset& M);
std::string partition_to_string(const SetPartition& sp);

}  // namespace mahonian
