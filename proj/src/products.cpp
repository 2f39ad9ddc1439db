#include "tgh/products.hpp"

#include <cmath>
#include <sstream>

#include "tgh/errors.hpp"

namespace tgh {

CoordinateMetric build_warped_product(int m, const CoordinateMetric & base, const ScalarField & logf)
{
  if (m < 1) throw InvalidArgument("warped product needs at least one flat direction");
  const int nb = base.dim;
  CoordinateMetric out;
  out.dim = m + nb;
  out.fd_step = base.fd_step;
  out.gram_at = [m, nb, base, logf](const Vector & x) {
    const Vector u = x.tail(nb);
    Matrix g = Matrix::Zero(m + nb, m + nb);
    g.topLeftCorner(m, m) = std::exp(2.0 * logf.value(u)) * Matrix::Identity(m, m);
    g.bottomRightCorner(nb, nb) = base.metric(u);
    return g;
  };
  if (logf.gradient) {
    out.partials_at = [m, nb, base, logf](const Vector & x) {
      const Vector u = x.tail(nb);
      const double f = std::exp(2.0 * logf.value(u));
      const Vector dl = logf.gradient(u);
      const std::vector<Matrix> db = base.partials(u);
      std::vector<Matrix> out(m + nb, Matrix::Zero(m + nb, m + nb));
      for (int k = 0; k < nb; ++k) {
        out[m + k].topLeftCorner(m, m) = 2.0 * dl(k) * f * Matrix::Identity(m, m);
        out[m + k].bottomRightCorner(nb, nb) = db[k];
      }
      return out;
    };
  }
  return out;
}

void TwistedProductSpec::validate() const
{
  if (!(kappa != 0.0) || !std::isfinite(kappa)) throw BadParams("twisted product needs kappa != 0");
  if (!(k > 0.0)) throw BadParams("twisted product needs k > 0");
  if (anchor.size() != base.dim) throw DimensionMismatch("anchor must be a base point");
  if (!(std::abs(alpha.value(anchor)) < 1e-12)) throw BadParams("alpha must vanish at the anchor");
}

namespace {

struct TwistTerms
{
  double w;   ///< e^{-phi}
  double w_t;
  double w_tt;
};

TwistTerms twist_terms(const TwistedProductSpec & spec, double t, const Vector & u)
{
  const double a = spec.alpha.value(u);
  const double b = spec.beta.value(u);
  const double arg = spec.kappa * t + b;
  const double sa = std::sinh(a);
  return {sa * std::cos(arg) + std::cosh(a), -spec.kappa * sa * std::sin(arg),
          -spec.kappa * spec.kappa * sa * std::cos(arg)};
}

} // namespace

PhiJet twisting_jet(const TwistedProductSpec & spec, double t, const Vector & u)
{
  const TwistTerms w = twist_terms(spec, t, u);
  const double r = w.w_t / w.w;
  return {-std::log(w.w), -r, -w.w_tt / w.w + r * r};
}

CoordinateMetric build_twisted_product(const TwistedProductSpec & spec)
{
  spec.validate();
  const int nb = spec.base.dim;
  CoordinateMetric out;
  out.dim = nb + 1;
  out.fd_step = spec.base.fd_step;
  out.gram_at = [spec, nb](const Vector & x) {
    const Vector u = x.tail(nb);
    const double w = twist_terms(spec, x(0), u).w;
    if (!(w > 0.0)) {
      std::ostringstream msg;
      msg << "e^{-phi} = " << w << " is not positive";
      throw MetricDegenerate(msg.str());
    }
    Matrix g = Matrix::Zero(nb + 1, nb + 1);
    g(0, 0) = 1.0 / (w * w);
    g.bottomRightCorner(nb, nb) = spec.base.metric(u);
    return g;
  };
  CoordinateMetric differenced = out;
  out.partials_at = [spec, nb, differenced](const Vector & x) {
    const Vector u = x.tail(nb);
    const double a = spec.alpha.value(u);
    if (!(std::abs(a) > 1e-8)) {
      // polar center of (alpha, beta): beta has no gradient here
      return differenced.fd_partials(x);
    }
    const double b = spec.beta.value(u);
    const double arg = spec.kappa * x(0) + b;
    const double sa = std::sinh(a), ca = std::cosh(a);
    const double w = sa * std::cos(arg) + ca;
    const double w_t = -spec.kappa * sa * std::sin(arg);
    const Vector grad_w =
      (ca * std::cos(arg) + sa) * spec.alpha.gradient(u) - sa * std::sin(arg) * spec.beta.gradient(u);
    const double scale = -2.0 / (w * w * w);
    const std::vector<Matrix> db = spec.base.partials(u);
    std::vector<Matrix> d(nb + 1, Matrix::Zero(nb + 1, nb + 1));
    d[0](0, 0) = scale * w_t;
    for (int k = 0; k < nb; ++k) {
      d[k + 1](0, 0) = scale * grad_w(k);
      d[k + 1].bottomRightCorner(nb, nb) = db[k];
    }
    return d;
  };
  return out;
}

double twisting_ode_residual(const std::function<PhiJet(double, const Vector &)> & jet, double kappa,
                             const std::vector<double> & ts, const std::vector<Vector> & us)
{
  const double k2 = kappa * kappa;
  double worst = 0.0;
  for (const Vector & u : us) {
    for (double t : ts) {
      const PhiJet j = jet(t, u);
      const double em = std::exp(-j.phi);
      const double ep = std::exp(j.phi);
      // d/dt [e^{-phi} phi_t^2 + kappa^2 (e^phi + e^{-phi})]
      const double rate = em * (2.0 * j.phi_t * j.phi_tt - j.phi_t * j.phi_t * j.phi_t) + k2 * j.phi_t * (ep - em);
      worst = std::max(worst, std::abs(rate));
    }
  }
  return worst;
}

double twisting_ode_residual(const TwistedProductSpec & spec, const std::vector<double> & ts,
                             const std::vector<Vector> & us)
{
  return twisting_ode_residual([&spec](double t, const Vector & u) { return twisting_jet(spec, t, u); },
                               spec.kappa, ts, us);
}

EikonalResiduals eikonal_residuals(const TwistedProductSpec & spec, const std::vector<Vector> & us)
{
  const double k2 = spec.k * spec.k;
  EikonalResiduals out;
  bool any_beta = false;
  double beta_worst = 0.0;
  for (const Vector & u : us) {
    const Matrix B = spec.base.metric(u);
    const Eigen::LLT<Matrix> llt(B);
    const Vector ga = spec.alpha.gradient(u);
    out.alpha_residual = std::max(out.alpha_residual, std::abs(ga.dot(llt.solve(ga)) - k2));
    const double a = spec.alpha.value(u);
    if (!(a > 1e-12)) {
      ++out.skipped;
      continue;
    }
    const Vector gb = spec.beta.gradient(u);
    const double s = std::sinh(a);
    beta_worst = std::max(beta_worst, std::abs(s * s * gb.dot(llt.solve(gb)) - k2));
    any_beta = true;
  }
  if (any_beta) out.beta_residual = beta_worst;
  return out;
}

} // namespace tgh
