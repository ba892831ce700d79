#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxfaces/coxeter.hpp"
#include "coxfaces/sortable.hpp"

namespace testing {

using coxfaces::CoxeterElementOrder;
using coxfaces::CoxeterSystem;
using coxfaces::GroupElement;
using coxfaces::ParabolicSet;
using coxfaces::Word;

// S_n in one-line notation (values 1..n), used as an oracle for type A.
using OneLine = std::vector<int>;

inline OneLine identity_perm(int n) {
  OneLine p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

inline std::vector<OneLine> all_perms(int n) {
  std::vector<OneLine> out;
  OneLine p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// (a*b)(x) = a(b(x))
inline OneLine compose(const OneLine& a, const OneLine& b) {
  OneLine out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x] - 1];
  return out;
}

inline OneLine transposition(int n, int i) {
  OneLine p = identity_perm(n);
  std::swap(p[i], p[i + 1]);
  return p;
}

// Simple index i is the transposition (i+1, i+2).
inline OneLine perm_of_word(const std::vector<int>& letters, int n) {
  OneLine p = identity_perm(n);
  for (int s : letters) p = compose(p, transposition(n, s));
  return p;
}

// A word for p obtained by bubble sort: swapping adjacent positions is right multiplication.
inline std::vector<int> word_of_perm(OneLine p) {
  std::vector<int> letters;
  const int n = static_cast<int>(p.size());
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i)
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        letters.push_back(i);
        changed = true;
      }
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

inline int inversions(const OneLine& p) {
  int count = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) count += p[a] > p[b];
  return count;
}

// Left inversions as value pairs (a, b), a < b, with b appearing before a.
inline std::set<std::pair<int, int>> value_inversions(const OneLine& p) {
  std::set<std::pair<int, int>> out;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = x + 1; y < p.size(); ++y)
      if (p[x] > p[y]) out.emplace(p[y], p[x]);
  return out;
}

// Root e_a - e_b of A_{n-1}: coefficient 1 on simples a-1 .. b-2.
inline std::pair<int, int> root_as_pair(const CoxeterSystem& sys, int root) {
  const auto& coeffs = sys.positive_roots()[root];
  int first = -1, last = -1;
  for (int s = 0; s < sys.rank(); ++s)
    if (!(coeffs[s] == coxfaces::Golden(0))) {
      if (first < 0) first = s;
      last = s;
    }
  return {first + 1, last + 2};
}

inline int find_root(const CoxeterSystem& sys, const std::vector<int>& coefficients) {
  for (int r = 0; r < sys.num_positive_roots(); ++r) {
    bool same = true;
    for (int s = 0; s < sys.rank(); ++s) same = same && sys.positive_roots()[r][s] == coxfaces::Golden(coefficients[s]);
    if (same) return r;
  }
  return -1;
}

inline GroupElement elem(const CoxeterSystem& sys, std::initializer_list<int> letters_1based) {
  Word w;
  for (int s : letters_1based) w.letters.push_back(s - 1);
  return sys.element_of(w);
}

inline std::vector<std::string> small_types() {
  return {"A1", "A2", "A3", "B2", "B3", "G2", "H3", "I2(5)", "I2(7)"};
}

inline std::vector<std::string> rank4_types() { return {"A4", "B4", "D4", "F4", "H4"}; }

inline std::vector<CoxeterElementOrder> all_orders(int rank) {
  std::vector<int> letters(rank);
  std::iota(letters.begin(), letters.end(), 0);
  std::vector<CoxeterElementOrder> out;
  do out.emplace_back(letters, rank);
  while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

inline std::vector<ParabolicSet> all_subsets(int rank) {
  std::vector<ParabolicSet> out;
  for (std::uint32_t mask = 0; mask < (1U << rank); ++mask) out.push_back(ParabolicSet::from_mask(mask));
  return out;
}

inline std::size_t catalan(int n) {
  std::size_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace testing
