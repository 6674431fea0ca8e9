#pragma once

// Test-side oracles, independent of the library's computation paths.

#include <algorithm>
#include <map>
#include <vector>

#include "parcount/green.hpp"
#include "parcount/group.hpp"
#include "parcount/partitions.hpp"

namespace oracles {

using namespace parcount;

inline uint64_t lcg(uint64_t& s) {
  s = s * 6364136223846793005ULL + 1442695040888963407ULL;
  return s >> 16;
}

// Kostka number K_{lambda,mu}: semistandard tableaux of shape lambda and
// content mu, counted by direct backtracking over fillings.
inline long long kostka_number(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return 0;
  std::vector<std::vector<int>> rows(lambda.parts.size());
  for (size_t i = 0; i < lambda.parts.size(); ++i) rows[i].assign(lambda.parts[i], 0);
  std::vector<int> remaining(mu.parts.begin(), mu.parts.end());
  long long count = 0;
  std::function<void(size_t, size_t)> rec = [&](size_t r, size_t c) {
    if (r == rows.size()) {
      ++count;
      return;
    }
    size_t nr = r, nc = c + 1;
    if (nc == rows[r].size()) {
      nr = r + 1;
      nc = 0;
    }
    for (int v = 1; v <= static_cast<int>(remaining.size()); ++v) {
      if (remaining[v - 1] == 0) continue;
      if (c > 0 && rows[r][c - 1] > v) continue;                             // weakly increasing rows
      if (r > 0 && c < rows[r - 1].size() && rows[r - 1][c] >= v) continue;  // strictly increasing cols
      rows[r][c] = v;
      --remaining[v - 1];
      rec(nr, nc);
      ++remaining[v - 1];
      rows[r][c] = 0;
    }
  };
  if (rows.empty())
    count = 1;
  else
    rec(0, 0);
  return count;
}

// Frozen irreducible character tables of S_2 and S_3; rows indexed by
// lambda in the canonical partitions_of order, columns by cycle type in the
// same order. Values from the standard tables.
inline std::map<std::pair<Partition, Partition>, long long> symmetric_group_characters(int n) {
  std::map<std::pair<Partition, Partition>, long long> chi;
  auto P = [](std::vector<int> v) { return Partition(std::move(v)); };
  if (n == 1) {
    chi[{P({1}), P({1})}] = 1;
  } else if (n == 2) {
    chi[{P({2}), P({1, 1})}] = 1;
    chi[{P({2}), P({2})}] = 1;
    chi[{P({1, 1}), P({1, 1})}] = 1;
    chi[{P({1, 1}), P({2})}] = -1;
  } else if (n == 3) {
    chi[{P({3}), P({1, 1, 1})}] = 1;
    chi[{P({3}), P({2, 1})}] = 1;
    chi[{P({3}), P({3})}] = 1;
    chi[{P({2, 1}), P({1, 1, 1})}] = 2;
    chi[{P({2, 1}), P({2, 1})}] = 0;
    chi[{P({2, 1}), P({3})}] = -1;
    chi[{P({1, 1, 1}), P({1, 1, 1})}] = 1;
    chi[{P({1, 1, 1}), P({2, 1})}] = -1;
    chi[{P({1, 1, 1}), P({3})}] = 1;
  }
  return chi;
}

// Twisted maximal torus T_rho^F realized inside GL_n(F_q) as block-diagonal
// polynomials in companion matrices of the lowest irreducibles of the part
// degrees. The additive version (with zero blocks allowed) is the Lie
// algebra t_rho^F.
inline std::vector<Mat> twisted_torus_matrices(const GroupSpec& g, const Partition& rho,
                                               bool lie_algebra) {
  std::vector<Mat> companions;
  for (int part : rho.parts)
    companions.push_back(Mat::companion(lowest_irreducible_of_degree(g.F(), part)));
  std::vector<Mat> out;
  std::vector<long long> digits(rho.parts.size(), 0);
  auto block_count = [&](size_t i) { return ipow(g.q(), rho.parts[i]); };
  while (true) {
    Mat m(g.F(), g.n);
    bool all_nonzero = true;
    int offset = 0;
    for (size_t i = 0; i < rho.parts.size(); ++i) {
      // digits[i] encodes a polynomial of degree < rho_i over F_q
      long long v = digits[i];
      std::vector<int> coeffs;
      for (int j = 0; j < rho.parts[i]; ++j) {
        coeffs.push_back(static_cast<int>(v % g.q()));
        v /= g.q();
      }
      if (digits[i] == 0) all_nonzero = false;
      Mat blk = eval_poly_at(Poly(g.F(), coeffs), companions[i]);
      for (int r = 0; r < blk.n(); ++r)
        for (int c = 0; c < blk.n(); ++c) m.set(offset + r, offset + c, blk.at(r, c));
      offset += rho.parts[i];
    }
    if (lie_algebra || all_nonzero) out.push_back(m);
    size_t i = 0;
    while (i < digits.size() && ++digits[i] == block_count(i)) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

// Brute count of Borel subgroups of GL_n(F_q) containing the matrix.
inline long long borel_fixed_points(const GroupSpec& g, const Mat& m) {
  ParabolicSpec borel(std::vector<int>(g.n, 1));
  return f_parabolic_group(g, borel, m);
}

// Unipotent representative of Jordan type lambda: identity plus the
// superdiagonal units inside each Jordan block.
inline Mat unipotent_of_type(const GroupSpec& g, const Partition& lambda) {
  Mat m = Mat::identity(g.F(), g.n);
  int offset = 0;
  for (int part : lambda.parts) {
    for (int i = 0; i + 1 < part; ++i) m.set(offset + i, offset + i + 1, 1);
    offset += part;
  }
  return m;
}

// Nilpotent representative of Jordan type lambda.
inline Mat nilpotent_of_type(const GroupSpec& g, const Partition& lambda) {
  Mat m(g.F(), g.n);
  int offset = 0;
  for (int part : lambda.parts) {
    for (int i = 0; i + 1 < part; ++i) m.set(offset + i, offset + i + 1, 1);
    offset += part;
  }
  return m;
}

}  // namespace oracles
