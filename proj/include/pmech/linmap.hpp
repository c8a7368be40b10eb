#ifndef PMECH_LINMAP_HPP
#define PMECH_LINMAP_HPP

#include <vector>

#include <Eigen/Dense>

#include "pmech/superpoly.hpp"

namespace pmech {

/// Linear variable substitution between tables: every source variable maps to
/// a degree-one, parity-matching combination of target variables. Covers the
/// complexification, rotation and rescaling maps as well as the exact flows.
class LinearCanonicalMap {
public:
  LinearCanonicalMap(VarTablePtr source, VarTablePtr target,
                     std::vector<SuperPolynomial> images);

  static LinearCanonicalMap identity(const VarTablePtr& table);
  /// Map within one table given the coefficient matrix: v_i -> sum_j M(i,j) v_j.
  static LinearCanonicalMap from_matrix(const VarTablePtr& table, const Eigen::MatrixXcd& m);

  const VarTablePtr& source() const { return source_; }
  const VarTablePtr& target() const { return target_; }
  const SuperPolynomial& image(int source_var) const { return images_.at(source_var); }

  /// Substitutes the images into f; multiplicative: apply(f*g) = apply(f)*apply(g).
  SuperPolynomial apply(const SuperPolynomial& f) const;

  /// Composition: first this (S->T), then next (T->U).
  LinearCanonicalMap then(const LinearCanonicalMap& next) const;

  /// Coefficient matrix (square, source and target must have equal size).
  Eigen::MatrixXcd matrix() const;

private:
  VarTablePtr source_, target_;
  std::vector<SuperPolynomial> images_;
};

SuperPolynomial substitute(const SuperPolynomial& f, const LinearCanonicalMap& map);

}  // namespace pmech

#endif
