#pragma once
// Index-tuple plumbing: permutation signs, sorted subsets, shuffles.

#include <cstdint>
#include <functional>
#include <vector>

namespace nary {

using Tuple = std::vector<int>;

// Sign of the permutation that sorts t; 0 when t has a repeated entry.
int sort_sign(Tuple& t);
int perm_sign(const Tuple& t);

// All strictly increasing k-subsets of {0..d-1} in lexicographic order.
std::vector<Tuple> combinations(int d, int k);
// Position of a sorted k-subset in the lexicographic list above.
long comb_rank(const Tuple& t, int d);
long binom(int n, int k);
long factorial(int n);

// Calls f(perm, sign) for every permutation of 0..n-1.
void for_each_perm(int n, const std::function<void(const Tuple&, int)>& f);

// Splits positions 0..N-1 into a first block of size k (kept in order) and the
// complement (in order); f receives both blocks and the sign of the shuffle.
void for_each_shuffle(int N, int k, const std::function<void(const Tuple&, const Tuple&, int)>& f);

// Iterates every tuple in {0..d-1}^k in lexicographic order.
void for_each_tuple(int d, int k, const std::function<void(const Tuple&)>& f);

long flat_index(const Tuple& t, int d);
Tuple unflatten(long idx, int d, int k);
long ipow(long b, int e);

}  // namespace nary
