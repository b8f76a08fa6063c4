#pragma once

#include <vector>

#include "mahonian/core.hpp"

namespace mahonian {

using CycleDecomposition = std::vector<Biword>;

Word J_x(const Word& w, int x);
Word foata_r(const Word& w, int r);

// Number of letters smaller than i to the right of the j-th occurrence of i.
int rawlings_u(const Word& w, int i, int j);
// One insertion step: put m into gamma at the unstarred gap carrying `label`.
// `inserted` holds 0-based indices of earlier copies of m and is updated.
Word rawlings_insert(const Word& gamma, int m, std::vector<int>& inserted, int label, int r);
Word rawlings_R(const Word& w, int r);

bool in_cyclic_interval(int x, int y, int z);
// Columns i, i+1 (1-based i).
Biword T_r(int i, const Biword& v, int r);
bool is_dominated_cycle(const Biword& c);
CycleDecomposition gamma_rden(const Word& w, int r);
Word H_rden(const Word& w, int r);

Permutation phi_perm(const Permutation& p);
Word phi_alpha(const Word& w);

bool avoids_221(const Word& w);
bool avoids_212(const Word& w);
Word phi_QI(const Word& w);

}  // namespace mahonian
