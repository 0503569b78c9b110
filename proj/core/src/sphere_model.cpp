#include "qsf/sphere_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "qsf/rng.hpp"

namespace qsf {

namespace {

constexpr std::int64_t kChunk = 8192;

void require_on_sphere(const SphereSpec& spec, const Vec5& p) {
  if (std::abs(p.norm() - spec.r) > 1e-9 * spec.r)
    throw std::invalid_argument("point is not on the sphere");
}

void require_tangent(const SphereSpec& spec, const Vec5& p, const Vec5& x) {
  if (std::abs(x.dot(p)) > 1e-9 * spec.r * (1.0 + x.norm()))
    throw std::invalid_argument("direction is not tangent at the base point");
}

Vec5 tangential(const SphereSpec& spec, const Vec5& p, const Vec5& w) {
  return w - (w.dot(p) / (spec.r * spec.r)) * p;
}

/// Equal-weight Monte Carlo integral: volume * mean(integrand). Partial
/// sums are taken over fixed-size chunks and reduced in chunk order, so
/// the result is identical for every thread count.
template <typename Integrand>
double integrate(const SphereSpec& spec, const SphereQuadrature& quad,
                 int threads, Integrand&& f) {
  const std::int64_t count = quad.size();
  if (count < 1) throw std::invalid_argument("empty quadrature");
  const std::int64_t num_chunks = (count + kChunk - 1) / kChunk;
  std::vector<double> partials(static_cast<std::size_t>(num_chunks), 0.0);

  const int workers = std::clamp(threads, 1, 64);
  auto run = [&](std::int64_t first_chunk, std::int64_t stride) {
    for (std::int64_t chunk = first_chunk; chunk < num_chunks;
         chunk += stride) {
      const std::int64_t begin = chunk * kChunk;
      const std::int64_t end = std::min(begin + kChunk, count);
      double sum = 0.0;
      for (std::int64_t i = begin; i < end; ++i)
        sum += f(quad.points[static_cast<std::size_t>(i)]);
      partials[static_cast<std::size_t>(chunk)] = sum;
    }
  };

  if (workers == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
    for (auto& t : pool) t.join();
  }

  double total = 0.0;
  for (const double s : partials) total += s;
  return spec.volume() * (total / static_cast<double>(count));
}

}  // namespace

SphereSpec SphereSpec::from_curvature(double c) {
  if (!std::isfinite(c) || c <= 0.0)
    throw std::invalid_argument("sphere model needs a finite curvature c > 0");
  SphereSpec spec;
  spec.c = c;
  spec.r = 1.0 / std::sqrt(c);
  return spec;
}

double SphereSpec::volume() const {
  return (8.0 / 3.0) * std::numbers::pi * std::numbers::pi * r * r * r * r;
}

SphereQuadrature sample(const SphereSpec& spec, std::int64_t count,
                        std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
  SphereQuadrature quad;
  quad.seed = seed;
  quad.weight = spec.volume() / static_cast<double>(count);
  quad.points.reserve(static_cast<std::size_t>(count));

  std::mt19937_64 gen(rng::derive_seed(seed, 0x7370686572ULL));
  for (std::int64_t i = 0; i < count; ++i)
    quad.points.push_back(spec.r * Vec5(rng::unit_vector(5, gen)));
  return quad;
}

FieldSpec coordinate_gradient(const Vec5& a) {
  if (std::abs(a.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("coordinate gradient needs a unit vector");
  return CoordinateGradient{a};
}

FieldSpec killing_field(const Mat5& generator) {
  if ((generator + generator.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("killing generator must be skew-symmetric");
  return KillingField{generator};
}

FieldSpec killing_rotation(int i, int j) {
  if (i < 0 || i > 4 || j < 0 || j > 4 || i == j)
    throw std::invalid_argument("rotation plane needs two distinct axes 0..4");
  Mat5 a = Mat5::Zero();
  a(j, i) = 1.0;
  a(i, j) = -1.0;
  return KillingField{a};
}

FieldSpec projected_constant(const Vec5& a) { return ProjectedConstant{a}; }

Vec5 evaluate_field(const FieldSpec& field, const SphereSpec& spec,
                    const Vec5& p) {
  require_on_sphere(spec, p);
  const double r2 = spec.r * spec.r;
  return std::visit(
      [&](const auto& f) -> Vec5 {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CoordinateGradient>)
          return f.a - (f.a.dot(p) / r2) * p;
        else if constexpr (std::is_same_v<T, KillingField>)
          return f.generator * p;
        else
          return f.a - (f.a.dot(p) / r2) * p;
      },
      field);
}

Vec5 covariant_derivative(const FieldSpec& field, const SphereSpec& spec,
                          const Vec5& p, const Vec5& x) {
  require_on_sphere(spec, p);
  require_tangent(spec, p, x);
  const double r2 = spec.r * spec.r;
  return std::visit(
      [&](const auto& f) -> Vec5 {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, KillingField>)
          return tangential(spec, p, f.generator * x);
        else
          return -(f.a.dot(p) / r2) * x;
      },
      field);
}

Eigen::Matrix<double, 5, 4> tangent_frame(const SphereSpec& spec,
                                          const Vec5& p) {
  require_on_sphere(spec, p);
  // The most degenerate projection of an ambient basis vector is the one
  // closest to the radial direction.
  int drop = 0;
  p.cwiseAbs().maxCoeff(&drop);

  Eigen::Matrix<double, 5, 4> frame;
  int col = 0;
  for (int k = 0; k < 5; ++k) {
    if (k == drop) continue;
    Vec5 v = tangential(spec, p, Vec5::Unit(k));
    for (int prev = 0; prev < col; ++prev)
      v -= v.dot(frame.col(prev)) * frame.col(prev);
    const double norm = v.norm();
    if (norm < 1e-8)
      throw std::runtime_error("tangent frame construction degenerated");
    frame.col(col++) = v / norm;
  }
  return frame;
}

double integral(const SphereSpec& spec, const SphereQuadrature& quad,
                const std::function<double(const Vec5&)>& integrand,
                int threads) {
  if (!integrand) throw std::invalid_argument("integrand must be callable");
  return integrate(spec, quad, threads, integrand);
}

double dirichlet_energy(const FieldSpec& field, const SphereSpec& spec,
                        const SphereQuadrature& quad, int threads) {
  return integrate(spec, quad, threads, [&](const Vec5& p) {
    const Eigen::Matrix<double, 5, 4> frame = tangent_frame(spec, p);
    double density = 0.0;
    for (int i = 0; i < 4; ++i)
      density +=
          covariant_derivative(field, spec, p, frame.col(i)).squaredNorm();
    return density;
  });
}

double l2_norm(const FieldSpec& field, const SphereSpec& spec,
               const SphereQuadrature& quad, int threads) {
  return integrate(spec, quad, threads, [&](const Vec5& p) {
    return evaluate_field(field, spec, p).squaredNorm();
  });
}

HessianBreakdown hessian_identity_map(const FieldSpec& field,
                                      const SphereSpec& spec,
                                      const SphereQuadrature& quad,
                                      int threads) {
  const SpaceFormParams params{1, spec.c};
  return hessian_closed_form(params,
                             dirichlet_energy(field, spec, quad, threads),
                             l2_norm(field, spec, quad, threads));
}

double rayleigh_lambda1(const SphereSpec& spec, const SphereQuadrature& quad,
                        const Vec5& a, int threads) {
  const FieldSpec gradient = coordinate_gradient(a);
  const double numerator = l2_norm(gradient, spec, quad, threads);
  const double denominator = integrate(
      spec, quad, threads, [&](const Vec5& p) { return std::pow(a.dot(p), 2); });
  if (denominator <= 0.0)
    throw std::runtime_error("degenerate Rayleigh denominator");
  return numerator / denominator;
}

HarmonicityNote identity_map_harmonicity_note(const SphereSpec& spec,
                                              std::uint64_t seed, int trials) {
  HarmonicityNote note;
  const double r2 = spec.r * spec.r;
  std::mt19937_64 gen(rng::derive_seed(seed, 0x6861726dULL));
  for (int t = 0; t < trials; ++t) {
    const Vec5 p = spec.r * Vec5(rng::unit_vector(5, gen));
    Vec5 x = tangential(spec, p, Vec5(rng::gaussian_vector(5, gen)));
    if (x.norm() < 1e-8) continue;
    x.normalize();

    // Domain-side and target-side covariant derivatives of the pushed
    // field coincide for the identity map; both paths below differentiate
    // the same extended field, once per field class and once through the
    // generic ambient Jacobian followed by tangential projection.
    const Vec5 a = rng::gaussian_vector(5, gen);
    const FieldSpec field = projected_constant(a);
    const Vec5 analytic = covariant_derivative(field, spec, p, x);
    const Vec5 ambient = -(a.dot(x) / r2) * p - (a.dot(p) / r2) * x;
    const Vec5 generic = tangential(spec, p, ambient);
    const double scale = std::max(1.0, analytic.norm());
    note.max_residual =
        std::max(note.max_residual, (analytic - generic).norm() / scale);
  }
  note.harmonic = true;
  return note;
}

}  // namespace qsf
