#pragma once

#include <unordered_map>
#include <vector>

#include "majorana/operator.hpp"

namespace majorana {

/// Phase prefactor i^{n(n-1)/2} making C_a = phase * c_{i1}...c_{in} satisfy
/// C_a^dag = C_a and C_a^2 = 1.
inline Complex hermitian_phase(SiteMask m) {
  static constexpr Complex units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  int n = site_count(m);
  return units[(n * (n - 1) / 2) & 3];
}

inline MajoranaOperator hermitian_element(SiteMask m) {
  return MajoranaOperator::from_mask(m, hermitian_phase(m));
}

/// Orthonormal basis {C_a} of the odd-parity operators on sites {1..n_sites},
/// n_sites odd; 2^{n_sites-1} elements ordered by (site count, lexicographic).
class HermitianBasis {
 public:
  explicit HermitianBasis(int n_sites);

  int size() const { return static_cast<int>(masks_.size()); }
  SiteMask mask(int a) const { return masks_[a]; }
  int index(SiteMask m) const;  // -1 when absent
  int n_sites() const { return n_sites_; }

  /// Coefficient vector of op in the C_a basis; throws if op has support
  /// outside the basis or an even-parity term.
  std::vector<Complex> coefficients(const MajoranaOperator& op) const;

  /// Operator sum_a x_a C_a from a real coefficient vector (Hermitian result).
  MajoranaOperator operator_from(const std::vector<double>& x) const;

 private:
  int n_sites_;
  std::vector<SiteMask> masks_;
  std::unordered_map<SiteMask, int> index_;
};

}  // namespace majorana
