#include "pmech/linmap.hpp"

#include <bit>
#include <stdexcept>

namespace pmech {

LinearCanonicalMap::LinearCanonicalMap(VarTablePtr source, VarTablePtr target,
                                       std::vector<SuperPolynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_->size())
    throw std::invalid_argument("one image per source variable required");
  for (int i = 0; i < source_->size(); ++i) {
    const auto& img = images_[i];
    if (img.table().get() != target_.get() && !img.table()->same_as(*target_))
      throw std::invalid_argument("image not over the target table");
    const VarParity want = source_->info(i).parity;
    for (const auto& [m, c] : img.terms()) {
      (void)c;
      if (m.total_degree() != 1)
        throw std::invalid_argument("images must be homogeneous of degree one");
      const bool odd = m.odd_mask != 0;
      if (odd != (want == VarParity::Odd))
        throw std::invalid_argument("parity-violating variable map");
    }
  }
}

LinearCanonicalMap LinearCanonicalMap::identity(const VarTablePtr& table) {
  std::vector<SuperPolynomial> images;
  images.reserve(table->size());
  for (int i = 0; i < table->size(); ++i)
    images.push_back(SuperPolynomial::variable(table, i));
  return LinearCanonicalMap(table, table, std::move(images));
}

LinearCanonicalMap LinearCanonicalMap::from_matrix(const VarTablePtr& table,
                                                   const Eigen::MatrixXcd& m) {
  const int n = table->size();
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("coefficient matrix size mismatch");
  std::vector<SuperPolynomial> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    SuperPolynomial img = SuperPolynomial::zero(table);
    for (int j = 0; j < n; ++j) {
      if (std::abs(m(i, j)) < SuperPolynomial::kPruneThreshold) continue;
      img += m(i, j) * SuperPolynomial::variable(table, j);
    }
    images.push_back(img);
  }
  return LinearCanonicalMap(table, table, std::move(images));
}

SuperPolynomial LinearCanonicalMap::apply(const SuperPolynomial& f) const {
  if (f.table().get() != source_.get() && !f.table()->same_as(*source_))
    throw std::invalid_argument("polynomial not over the map's source table");
  SuperPolynomial result = SuperPolynomial::zero(target_);
  for (const auto& [m, c] : f.terms()) {
    SuperPolynomial term = SuperPolynomial::constant(target_, c);
    for (size_t slot = 0; slot < m.even_exp.size(); ++slot)
      for (int k = 0; k < m.even_exp[slot]; ++k)
        term = term * images_[source_->even_var(static_cast<int>(slot))];
    // odd factors in canonical order; the product handles reordering signs
    std::uint64_t mask = m.odd_mask;
    while (mask) {
      int slot = std::countr_zero(mask);
      mask &= mask - 1;
      term = term * images_[source_->odd_var(slot)];
    }
    result += term;
  }
  return result;
}

LinearCanonicalMap LinearCanonicalMap::then(const LinearCanonicalMap& next) const {
  std::vector<SuperPolynomial> images;
  images.reserve(images_.size());
  for (const auto& img : images_) images.push_back(next.apply(img));
  return LinearCanonicalMap(source_, next.target(), std::move(images));
}

Eigen::MatrixXcd LinearCanonicalMap::matrix() const {
  const int n = source_->size();
  if (target_->size() != n)
    throw std::invalid_argument("matrix form needs equally sized tables");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (const auto& [mono, c] : images_[i].terms()) {
      int j = -1;
      if (mono.odd_mask != 0)
        j = target_->odd_var(std::countr_zero(mono.odd_mask));
      else
        for (size_t slot = 0; slot < mono.even_exp.size(); ++slot)
          if (mono.even_exp[slot] == 1) j = target_->even_var(static_cast<int>(slot));
      m(i, j) = c;
    }
  }
  return m;
}

SuperPolynomial substitute(const SuperPolynomial& f, const LinearCanonicalMap& map) {
  return map.apply(f);
}

}  // namespace pmech
