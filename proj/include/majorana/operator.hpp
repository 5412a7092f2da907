#pragma once

#include <complex>
#include <map>
#include <vector>

#include "majorana/sites.hpp"

namespace majorana {

using Complex = std::complex<double>;

enum class Parity { Even, Odd, Mixed };

/// Sparse linear combination of canonical Majorana monomials c_{i1}...c_{in}
/// (sites strictly increasing) with complex coefficients. Immutable value
/// semantics: every operation returns a new operator, so concurrent reads are
/// safe without synchronization.
///
/// Generators obey {c_i, c_j} = 2 delta_{ij}; products are reduced to canonical
/// form with the transposition sign absorbed into the coefficient. Exact zeros
/// are pruned; no epsilon pruning happens inside the algebra.
class MajoranaOperator {
 public:
  using TermMap = std::map<SiteMask, Complex>;

  MajoranaOperator() = default;

  static MajoranaOperator zero() { return {}; }
  static MajoranaOperator identity(Complex coeff = 1.0);
  /// Single generator c_i.
  static MajoranaOperator generator(int site);
  /// Monomial coeff * c_{i1}...c_{in} from an ascending site list.
  static MajoranaOperator monomial(const std::vector<int>& sites, Complex coeff = 1.0);
  static MajoranaOperator from_mask(SiteMask sites, Complex coeff = 1.0);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Complex coefficient(SiteMask m) const;

  /// Largest site index appearing in any term (0 for scalars).
  int max_site() const;
  /// Union of all term supports.
  SiteMask support() const;

  MajoranaOperator& add_term(SiteMask m, Complex coeff);

  MajoranaOperator operator+(const MajoranaOperator& rhs) const;
  MajoranaOperator operator-(const MajoranaOperator& rhs) const;
  MajoranaOperator operator*(const MajoranaOperator& rhs) const;
  MajoranaOperator operator*(Complex scalar) const;
  MajoranaOperator operator-() const { return *this * Complex(-1.0); }

  /// Hermitian conjugate: conjugates coefficients, reverses each monomial
  /// (sign (-1)^{n(n-1)/2} absorbed into the coefficient).
  MajoranaOperator dagger() const;

  Parity parity() const;

  /// sum_S conj(a_S) b_S; equals the normalized trace inner product
  /// Tr(A^dag B)/Tr(1) because distinct monomials are trace-orthogonal.
  Complex inner_product(const MajoranaOperator& rhs) const;

  /// Coefficient 2-norm sqrt(sum |c_S|^2).
  double norm() const;

  /// Truncation projector: keeps exactly the terms supported inside
  /// {1, ..., cutoff_site - 1}. Identity terms survive every cutoff.
  MajoranaOperator truncate_support(int cutoff_site) const;

  /// Drops terms with |coeff| <= eps. Display-only helper; the algebra itself
  /// prunes exact zeros only.
  MajoranaOperator pruned(double eps) const;

  bool is_hermitian(double tol = 1e-12) const;

  /// max_S |a_S - b_S| over the union of supports.
  double max_coeff_distance(const MajoranaOperator& rhs) const;

  /// Terms sorted by (site count, lexicographic sites), the canonical
  /// presentation order used by rendering and CSV output.
  std::vector<std::pair<SiteMask, Complex>> sorted_terms() const;

 private:
  TermMap terms_;
};

inline MajoranaOperator operator*(Complex scalar, const MajoranaOperator& op) {
  return op * scalar;
}

/// ab - ba. Pairs of monomials whose products agree in sign cancel exactly.
MajoranaOperator commutator(const MajoranaOperator& a, const MajoranaOperator& b);

/// ab + ba.
MajoranaOperator anticommutator(const MajoranaOperator& a, const MajoranaOperator& b);

}  // namespace majorana
