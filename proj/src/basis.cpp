#include "majorana/basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "majorana/errors.hpp"

namespace majorana {

HermitianBasis::HermitianBasis(int n_sites) : n_sites_(n_sites) {
  if (n_sites < 1 || n_sites > 30)
    throw std::invalid_argument("majorana_algebra: HermitianBasis site count out of range");
  SiteMask all = (SiteMask{1} << n_sites) - 1;
  masks_.reserve(std::size_t{1} << (n_sites - 1));
  for (SiteMask m = 1; m <= all; ++m)
    if (site_count(m) & 1) masks_.push_back(m);
  std::sort(masks_.begin(), masks_.end(), term_order);
  index_.reserve(masks_.size());
  for (int a = 0; a < size(); ++a) index_.emplace(masks_[a], a);
}

int HermitianBasis::index(SiteMask m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

std::vector<Complex> HermitianBasis::coefficients(const MajoranaOperator& op) const {
  std::vector<Complex> x(masks_.size(), 0.0);
  for (const auto& [m, c] : op.terms()) {
    int a = index(m);
    if (a < 0)
      throw ContractError("majorana_algebra: operator leaves the odd-monomial basis at term c" +
                          std::to_string(m));
    x[a] = c / hermitian_phase(m);
  }
  return x;
}

MajoranaOperator HermitianBasis::operator_from(const std::vector<double>& x) const {
  MajoranaOperator op;
  for (std::size_t a = 0; a < x.size() && a < masks_.size(); ++a)
    if (x[a] != 0.0) op.add_term(masks_[a], x[a] * hermitian_phase(masks_[a]));
  return op;
}

}  // namespace majorana
