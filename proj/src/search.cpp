#include "tgh/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "tgh/curvature.hpp"
#include "tgh/tg_analysis.hpp"
#include "frame_util.hpp"

namespace tgh {

namespace {

/// C_m(i, j) = <nabla_{E_i} E_j, E_m>; the form (X,Y) -> <nabla_X Y, t> is
/// sum_m t_m C_m.
class NormalForms
{
public:
  explicit NormalForms(const MetricLieAlgebra & M) : m_n(M.dim())
  {
    const ConnectionTable gamma = levi_civita(M);
    for (int m = 0; m < m_n; ++m) {
      m_forms.push_back(detail::normal_form(gamma, Vector::Unit(m_n, m)));
    }
  }

  Matrix at(const Vector & t) const
  {
    Matrix out = Matrix::Zero(m_n, m_n);
    for (int m = 0; m < m_n; ++m) {
      if (t(m) != 0.0) out += t(m) * m_forms[m];
    }
    return out;
  }

  const Matrix & form(int m) const { return m_forms[m]; }
  int dim() const { return m_n; }

private:
  int m_n;
  std::vector<Matrix> m_forms;
};

double objective_value(const NormalForms & forms, const Vector & t)
{
  const int n = forms.dim();
  const Matrix P = Matrix::Identity(n, n) - t * t.transpose();
  return (P * forms.at(t) * P).squaredNorm();
}

ObjectiveValue objective(const NormalForms & forms, const Vector & t)
{
  const int n = forms.dim();
  const Matrix P = Matrix::Identity(n, n) - t * t.transpose();
  const Matrix F = forms.at(t);
  const Matrix A = P * F * P;
  const Matrix S = F.transpose() * P * F + F * P * F.transpose();
  ObjectiveValue out;
  out.value = A.squaredNorm();
  out.gradient = -2.0 * P * (S * t);
  for (int m = 0; m < n; ++m) {
    out.gradient(m) += 2.0 * A.cwiseProduct(forms.form(m)).sum();
  }
  return out;
}

Vector descend(const NormalForms & forms, Vector t, int max_iterations)
{
  double step = 1.0;
  ObjectiveValue f = objective(forms, t);
  for (int it = 0; it < max_iterations; ++it) {
    Vector g = f.gradient - f.gradient.dot(t) * t;
    const double gnorm2 = g.squaredNorm();
    if (gnorm2 < 1e-28 || f.value < 1e-26) break;
    bool accepted = false;
    for (int halving = 0; halving < 60; ++halving) {
      Vector trial = (t - step * g).normalized();
      const double value = objective_value(forms, trial);
      if (value <= f.value - 1e-4 * step * gnorm2) {
        t = trial;
        f = objective(forms, t);
        accepted = true;
        step *= 2.0;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
  return t;
}

Vector gauss_newton(const NormalForms & forms, Vector t)
{
  const int n = forms.dim();
  if (n < 2) return t;
  double value = objective_value(forms, t);
  for (int it = 0; it < 40 && value > 1e-32; ++it) {
    const Matrix P = Matrix::Identity(n, n) - t * t.transpose();
    const Matrix F = forms.at(t);
    const Matrix A = P * F * P;
    const Matrix B = detail::complement_of(t);
    Matrix J(n * n, n - 1);
    for (int c = 0; c < n - 1; ++c) {
      const Vector d = B.col(c);
      const Matrix dP = -(d * t.transpose() + t * d.transpose());
      const Matrix dA = dP * F * P + P * forms.at(d) * P + P * F * dP;
      J.col(c) = Eigen::Map<const Vector>(dA.data(), n * n);
    }
    const Vector r = Eigen::Map<const Vector>(A.data(), n * n);
    Eigen::JacobiSVD<Matrix> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    const Vector y = -svd.solve(r);
    double scale = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 30; ++halving) {
      const Vector trial = (t + scale * (B * y)).normalized();
      const double trial_value = objective_value(forms, trial);
      if (trial_value < value) {
        t = trial;
        value = trial_value;
        improved = true;
        break;
      }
      scale *= 0.5;
    }
    if (!improved) break;
  }
  return t;
}

struct Candidate
{
  Vector frame_t;
  double residual = 0.0;
};

} // namespace

ObjectiveValue hyperplane_objective(const MetricLieAlgebra & M, const Vector & frame_t)
{
  return objective(NormalForms(M), frame_t);
}

SearchResult search_tg_hyperplanes(const MetricLieAlgebra & M, const Tolerances & tol)
{
  const int n = M.dim();
  const NormalForms forms(M);
  const int seeds = std::max(0, tol.seeds);
  std::vector<std::optional<Candidate>> per_seed(seeds);

  auto run_seed = [&](int index) {
    std::seed_seq seq{static_cast<std::uint32_t>(tol.seed & 0xffffffffu),
                      static_cast<std::uint32_t>(tol.seed >> 32), static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector t(n);
    do {
      for (int i = 0; i < n; ++i) t(i) = normal(rng);
    } while (t.norm() < 1e-6);
    t.normalize();
    t = descend(forms, t, tol.max_iterations);
    t = gauss_newton(forms, t);
    Tolerances unit_tol = tol;
    unit_tol.unit = 1e-8;
    const double residual = hyperplane_tg_residual(M, M.from_frame(t), unit_tol);
    if (residual < tol.search_threshold) per_seed[index] = Candidate{t, residual};
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), seeds));
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < seeds; i = next++) run_seed(i);
    });
  }
  for (auto & th : pool) th.join();

  // Merge in seed order so the result does not depend on scheduling.
  SearchResult out;
  std::vector<Candidate> distinct;
  for (const auto & c : per_seed) {
    if (!c) continue;
    ++out.converged_seeds;
    bool merged = false;
    for (auto & d : distinct) {
      const double angle = std::acos(std::min(1.0, std::abs(d.frame_t.dot(c->frame_t))));
      if (angle < tol.dedup_angle) {
        if (c->residual < d.residual) d = *c;
        merged = true;
        break;
      }
    }
    if (!merged) distinct.push_back(*c);
  }
  out.continuum_detected = static_cast<int>(distinct.size()) > tol.continuum_count;

  std::vector<std::pair<Vector, double>> normals;
  for (const auto & d : distinct) {
    Vector T = M.from_frame(d.frame_t);
    T /= M.norm(T);
    normals.emplace_back(detail::sign_normalized(T), d.residual);
  }
  std::sort(normals.begin(), normals.end(), [](const auto & a, const auto & b) {
    return std::lexicographical_compare(a.first.data(), a.first.data() + a.first.size(), b.first.data(),
                                        b.first.data() + b.first.size());
  });
  for (auto & [T, r] : normals) {
    out.normals.push_back(T);
    out.residuals.push_back(r);
  }
  return out;
}

} // namespace tgh
