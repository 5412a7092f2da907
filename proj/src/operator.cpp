#include "majorana/operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace majorana {

namespace {
constexpr Complex kZero{0.0, 0.0};
}

MajoranaOperator MajoranaOperator::identity(Complex coeff) {
  MajoranaOperator op;
  op.add_term(0, coeff);
  return op;
}

MajoranaOperator MajoranaOperator::generator(int site) {
  if (site < 1 || site > kMaxSites)
    throw std::out_of_range("majorana_algebra: site index out of range");
  MajoranaOperator op;
  op.add_term(SiteMask{1} << (site - 1), 1.0);
  return op;
}

MajoranaOperator MajoranaOperator::monomial(const std::vector<int>& sites, Complex coeff) {
  MajoranaOperator op;
  for (std::size_t i = 1; i < sites.size(); ++i)
    if (sites[i] <= sites[i - 1])
      throw std::invalid_argument("majorana_algebra: monomial sites must be strictly increasing");
  for (int s : sites)
    if (s < 1 || s > kMaxSites)
      throw std::out_of_range("majorana_algebra: site index out of range");
  op.add_term(mask_of(sites), coeff);
  return op;
}

MajoranaOperator MajoranaOperator::from_mask(SiteMask sites, Complex coeff) {
  MajoranaOperator op;
  op.add_term(sites, coeff);
  return op;
}

Complex MajoranaOperator::coefficient(SiteMask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? kZero : it->second;
}

int MajoranaOperator::max_site() const {
  int best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, majorana::max_site(m));
  return best;
}

SiteMask MajoranaOperator::support() const {
  SiteMask u = 0;
  for (const auto& [m, c] : terms_) u |= m;
  return u;
}

MajoranaOperator& MajoranaOperator::add_term(SiteMask m, Complex coeff) {
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == kZero) terms_.erase(it);
  } else if (coeff == kZero) {
    terms_.erase(it);
  }
  return *this;
}

MajoranaOperator MajoranaOperator::operator+(const MajoranaOperator& rhs) const {
  MajoranaOperator out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

MajoranaOperator MajoranaOperator::operator-(const MajoranaOperator& rhs) const {
  MajoranaOperator out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

MajoranaOperator MajoranaOperator::operator*(const MajoranaOperator& rhs) const {
  MajoranaOperator out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      double sign = merge_sign(ma, mb);
      out.add_term(ma ^ mb, sign * ca * cb);
    }
  }
  return out;
}

MajoranaOperator MajoranaOperator::operator*(Complex scalar) const {
  MajoranaOperator out;
  if (scalar == kZero) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scalar);
  return out;
}

MajoranaOperator MajoranaOperator::dagger() const {
  MajoranaOperator out;
  for (const auto& [m, c] : terms_) {
    int n = site_count(m);
    int sign = ((n * (n - 1) / 2) & 1) ? -1 : 1;
    out.terms_.emplace(m, std::conj(c) * double(sign));
  }
  return out;
}

Parity MajoranaOperator::parity() const {
  bool has_even = false, has_odd = false;
  for (const auto& [m, c] : terms_) {
    (site_count(m) & 1 ? has_odd : has_even) = true;
  }
  if (has_even && has_odd) return Parity::Mixed;
  return has_odd ? Parity::Odd : Parity::Even;
}

Complex MajoranaOperator::inner_product(const MajoranaOperator& rhs) const {
  Complex acc = 0.0;
  const auto* small = this;
  const auto* big = &rhs;
  bool conj_small = true;
  if (big->terms_.size() < small->terms_.size()) {
    std::swap(small, big);
    conj_small = false;
  }
  for (const auto& [m, c] : small->terms_) {
    auto it = big->terms_.find(m);
    if (it == big->terms_.end()) continue;
    acc += conj_small ? std::conj(c) * it->second : std::conj(it->second) * c;
  }
  return acc;
}

double MajoranaOperator::norm() const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_) acc += std::norm(c);
  return std::sqrt(acc);
}

MajoranaOperator MajoranaOperator::truncate_support(int cutoff_site) const {
  if (cutoff_site < 1)
    throw std::invalid_argument("majorana_algebra: truncation cutoff must be >= 1");
  SiteMask allowed = (cutoff_site > kMaxSites) ? ~SiteMask{0}
                                               : (SiteMask{1} << (cutoff_site - 1)) - 1;
  MajoranaOperator out;
  for (const auto& [m, c] : terms_)
    if ((m & ~allowed) == 0) out.terms_.emplace(m, c);
  return out;
}

MajoranaOperator MajoranaOperator::pruned(double eps) const {
  MajoranaOperator out;
  for (const auto& [m, c] : terms_)
    if (std::abs(c) > eps) out.terms_.emplace(m, c);
  return out;
}

bool MajoranaOperator::is_hermitian(double tol) const {
  return max_coeff_distance(dagger()) <= tol;
}

double MajoranaOperator::max_coeff_distance(const MajoranaOperator& rhs) const {
  double worst = 0.0;
  for (const auto& [m, c] : terms_) worst = std::max(worst, std::abs(c - rhs.coefficient(m)));
  for (const auto& [m, c] : rhs.terms_) worst = std::max(worst, std::abs(c - coefficient(m)));
  return worst;
}

std::vector<std::pair<SiteMask, Complex>> MajoranaOperator::sorted_terms() const {
  std::vector<std::pair<SiteMask, Complex>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return term_order(a.first, b.first); });
  return out;
}

MajoranaOperator commutator(const MajoranaOperator& a, const MajoranaOperator& b) {
  // c_A c_B = (-1)^{|A||B| - |A&B|} c_B c_A, so a monomial pair contributes to
  // the commutator exactly when |A||B| - |A&B| is odd, and then with weight 2.
  MajoranaOperator out;
  for (const auto& [ma, ca] : a.terms()) {
    int na = site_count(ma);
    for (const auto& [mb, cb] : b.terms()) {
      int swap_par = (na * site_count(mb) - site_count(ma & mb)) & 1;
      if (!swap_par) continue;
      double sign = merge_sign(ma, mb);
      out.add_term(ma ^ mb, 2.0 * sign * ca * cb);
    }
  }
  return out;
}

MajoranaOperator anticommutator(const MajoranaOperator& a, const MajoranaOperator& b) {
  MajoranaOperator out;
  for (const auto& [ma, ca] : a.terms()) {
    int na = site_count(ma);
    for (const auto& [mb, cb] : b.terms()) {
      int swap_par = (na * site_count(mb) - site_count(ma & mb)) & 1;
      if (swap_par) continue;
      double sign = merge_sign(ma, mb);
      out.add_term(ma ^ mb, 2.0 * sign * ca * cb);
    }
  }
  return out;
}

}  // namespace majorana
