#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace majorana {

/// Set of Majorana site indices, stored as a bitmask: site i (1-based) is bit i-1.
/// The empty mask denotes the identity monomial. Chains of up to 64 sites.
using SiteMask = std::uint64_t;

inline constexpr int kMaxSites = 64;

inline SiteMask mask_of(const std::vector<int>& sites) {
  SiteMask m = 0;
  for (int s : sites) m |= SiteMask{1} << (s - 1);
  return m;
}

inline std::vector<int> sites_of(SiteMask m) {
  std::vector<int> out;
  while (m) {
    int b = std::countr_zero(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

inline int site_count(SiteMask m) { return std::popcount(m); }

inline int max_site(SiteMask m) { return m ? 64 - std::countl_zero(m) : 0; }

inline int min_site(SiteMask m) { return m ? std::countr_zero(m) + 1 : 0; }

/// Sign of reordering the concatenation (a ascending)(b ascending) into canonical
/// ascending order: (-1)^{#pairs (i in a, j in b) with i > j}. Shared generators
/// square to +1 afterwards, which this count already accounts for.
inline int merge_sign(SiteMask a, SiteMask b) {
  int inversions = 0;
  SiteMask rest = b;
  while (rest) {
    int site = std::countr_zero(rest) + 1;
    inversions += std::popcount(a >> site);  // sites of a strictly above `site`
    rest &= rest - 1;
  }
  return (inversions & 1) ? -1 : 1;
}

/// Ordering by (site count, lexicographic site list), the rendering convention.
inline bool term_order(SiteMask a, SiteMask b) {
  int na = site_count(a), nb = site_count(b);
  if (na != nb) return na < nb;
  while (a && b) {
    int sa = std::countr_zero(a), sb = std::countr_zero(b);
    if (sa != sb) return sa < sb;
    a &= a - 1;
    b &= b - 1;
  }
  return a < b;
}

}  // namespace majorana
