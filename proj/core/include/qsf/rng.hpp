#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace qsf::rng {

/// Mixes a master seed with a stream index so that independent trials,
/// frames, or chunks draw from decorrelated deterministic streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Standard-normal vector drawn from `gen`, one component at a time.
Eigen::VectorXd gaussian_vector(int dim, std::mt19937_64& gen);

/// Gaussian draw normalized to unit length. Redraws on a zero-norm draw.
Eigen::VectorXd unit_vector(int dim, std::mt19937_64& gen);

/// Haar-ish random orthogonal matrix: QR of a Gaussian matrix with the
/// R-diagonal sign fix so Q is unique for the draw.
Eigen::MatrixXd random_orthogonal(int dim, std::uint64_t seed);

}  // namespace qsf::rng
