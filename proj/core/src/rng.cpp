#include "qsf/rng.hpp"

#include <stdexcept>

namespace qsf::rng {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  // splitmix64 finalizer over the combined state
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Eigen::VectorXd gaussian_vector(int dim, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = normal(gen);
  return v;
}

Eigen::VectorXd unit_vector(int dim, std::mt19937_64& gen) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::VectorXd v = gaussian_vector(dim, gen);
    double norm = v.norm();
    if (norm > 1e-12) return v / norm;
  }
  throw std::runtime_error("unit_vector: repeated zero-norm draws");
}

Eigen::MatrixXd random_orthogonal(int dim, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Eigen::MatrixXd g(dim, dim);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) g(i, j) = normal(gen);

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

}  // namespace qsf::rng
