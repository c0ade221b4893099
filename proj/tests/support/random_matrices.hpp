#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "starlab/numeric.hpp"

namespace starlab::testing {

using numeric::Matrix;

inline Eigen::MatrixXd gaussian(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = g(rng);
  return m;
}

inline Eigen::MatrixXd random_orthogonal(std::mt19937_64& rng, int n) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian(rng, n, n));
  return qr.householderQ();
}

inline Matrix random_symmetric(std::mt19937_64& rng, int n) {
  const Eigen::MatrixXd g = gaussian(rng, n, n);
  return ((g + g.transpose()) / 2.0).cast<std::complex<double>>();
}

/// A = P diag(C, N) P^-1 with C well conditioned, N strictly upper triangular and
/// range(P1) visibly non-orthogonal to range(P2).
struct CoreNilpotent {
  Matrix a;
  int core_rank = 0;
  double cross_cosine = 0.0;  ///< largest cosine between the two column spaces
  double cond_p = 0.0;
};

inline double cond(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  return s(0) / s(s.size() - 1);
}

inline double largest_cosine(const Eigen::MatrixXd& p1, const Eigen::MatrixXd& p2) {
  Eigen::HouseholderQR<Eigen::MatrixXd> q1(p1), q2(p2);
  const Eigen::MatrixXd b1 = Eigen::MatrixXd(q1.householderQ()).leftCols(p1.cols());
  const Eigen::MatrixXd b2 = Eigen::MatrixXd(q2.householderQ()).leftCols(p2.cols());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b1.transpose() * b2);
  return svd.singularValues()(0);
}

/// Rejection-samples P until cond(P) <= max_cond and the cross cosine lies in [min_cos, max_cos].
inline CoreNilpotent random_core_nilpotent(std::mt19937_64& rng, int n, int r, double max_cond = 30.0,
                                           double min_cos = 0.3, double max_cos = 0.9) {
  std::uniform_real_distribution<double> sv(0.8, 1.25), nil(-1.0, 1.0);
  Eigen::MatrixXd p;
  double c = 0.0, k = 0.0;
  do {
    p = random_orthogonal(rng, n);
    Eigen::MatrixXd shear = Eigen::MatrixXd::Zero(n, n);
    shear.topRightCorner(r, n - r) = gaussian(rng, r, n - r) * 0.6;
    p = p * (Eigen::MatrixXd::Identity(n, n) + shear);
    c = largest_cosine(p.leftCols(r), p.rightCols(n - r));
    k = cond(p);
  } while (k > max_cond || c < min_cos || c > max_cos);

  Eigen::VectorXd s(r);
  for (int i = 0; i < r; ++i) s(i) = sv(rng);
  const Eigen::MatrixXd core = random_orthogonal(rng, r) * s.asDiagonal() * random_orthogonal(rng, r).transpose();
  Eigen::MatrixXd nilp = Eigen::MatrixXd::Zero(n - r, n - r);
  for (int i = 0; i < n - r; ++i)
    for (int j = i + 1; j < n - r; ++j) nilp(i, j) = nil(rng);

  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  d.topLeftCorner(r, r) = core;
  d.bottomRightCorner(n - r, n - r) = nilp;
  const Eigen::MatrixXd a = p * d * p.inverse();
  return {a.cast<std::complex<double>>(), r, c, k};
}

}  // namespace starlab::testing
