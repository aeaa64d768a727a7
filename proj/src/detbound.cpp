#include "detm/detbound.hpp"

#include <cmath>
#include <string>

#include "detm/errors.hpp"

namespace detm {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  if (!r.fits_ulong_p()) throw DomainError("binomial coefficient overflows 64 bits");
  return r.get_ui();
}

void require_dim(unsigned m) {
  if (m == 0) throw InputError("parameter dimension m must be >= 1");
}

}  // namespace

std::uint64_t monomials_exact_degree(unsigned m, unsigned k) {
  require_dim(m);
  return binomial(std::uint64_t{k} + m - 1, m - 1);
}

std::uint64_t monomials_up_to_degree(unsigned m, unsigned k) {
  require_dim(m);
  return binomial(std::uint64_t{k} + m, m);
}

ExponentBudget choose_nu(std::uint64_t mu, unsigned m) {
  require_dim(m);
  if (mu == 0) throw InputError("choose_nu needs mu >= 1");
  ExponentBudget out;
  // D_m(-1) = 0 by convention, so nu = 0 works exactly when mu <= D_m(0) = 1.
  while (monomials_up_to_degree(m, out.nu) < mu) ++out.nu;
  std::uint64_t below = 0;
  for (unsigned i = 0; i < out.nu; ++i) {
    out.e += std::uint64_t{i} * monomials_exact_degree(m, i);
    below += monomials_exact_degree(m, i);
  }
  out.e += std::uint64_t{out.nu} * (mu - below);
  return out;
}

double round_up(double x) {
  if (!std::isfinite(x)) return x;
  const double margin = (std::fabs(x) + 1.0) * 1e-12;
  return x + margin;
}

double round_down(double x) {
  if (!std::isfinite(x)) return x;
  const double margin = (std::fabs(x) + 1.0) * 1e-12;
  return x - margin;
}

double to_double_up(const Rational& q) {
  double d = q.get_d();
  while (Rational(d) < q) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

LogBound LogBound::of(double value) {
  if (value < 0) throw InputError("LogBound of a negative value");
  if (value == 0) return zero();
  return LogBound(round_up(std::log(value)));
}

double LogBound::value() const {
  if (is_zero()) return 0.0;
  const double v = std::exp(log_);
  return std::nextafter(v, std::numeric_limits<double>::infinity()) * (1 + 1e-12);
}

ParameterBox ParameterBox::unit(std::size_t m) {
  return ParameterBox{std::vector<Rational>(m, Rational(-1)), std::vector<Rational>(m, Rational(1))};
}

Rational ck_norm_bound(std::span<const Polynomial> components, unsigned k, const ParameterBox& box) {
  const std::size_t m = box.dims();
  if (box.hi.size() != m) throw InputError("malformed box");
  for (std::size_t i = 0; i < m; ++i)
    if (box.hi[i] < box.lo[i]) throw InputError("empty box");

  std::vector<Polynomial> affine_change;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational center = (box.lo[i] + box.hi[i]) / 2;
    const Rational half = (box.hi[i] - box.lo[i]) / 2;
    affine_change.push_back(Polynomial::constant(m, center) + Polynomial::variable(m, i) * half);
  }

  std::vector<Exponent> orders;
  for (unsigned d = 0; d <= k; ++d)
    for (auto& a : monomials_of_degree(m, d)) orders.push_back(std::move(a));

  Rational best = 0;
  for (const auto& phi : components) {
    if (phi.num_vars() != m) throw InputError("map component has the wrong number of parameters");
    for (const auto& alpha : orders) {
      const Polynomial deriv = partial_derivative(phi, alpha);
      if (deriv.is_zero()) continue;
      const Polynomial rescaled = compose(deriv, affine_change);
      Rational sum = 0;
      for (const auto& [e, c] : rescaled.terms()) sum += abs(c);
      if (sum > best) best = sum;
    }
  }
  return best;
}

LogBound product_norm_bound(std::span<const double> norms, unsigned k) {
  double acc = static_cast<double>(k) * std::log(static_cast<double>(norms.size()));
  for (double n : norms) {
    if (n < 0) throw InputError("norms must be nonnegative");
    if (n == 0) return LogBound::zero();
    acc += std::log(n);
  }
  return LogBound::from_log(round_up(acc));
}

LogBound determinant_bound(const DetBoundInput& input) {
  if (input.mu < 1 || input.m < 1) throw InputError("determinant bound needs mu >= 1 and m >= 1");
  if (!(input.r > 0 && input.r < 1)) throw InputError("diameter r must lie in (0, 1)");
  if (input.norms.size() != input.mu) throw InputError("need one norm per row function");
  const ExponentBudget budget = choose_nu(input.mu, input.m);
  double acc = std::lgamma(static_cast<double>(input.mu) + 1.0);
  acc += static_cast<double>(input.mu) * std::log(static_cast<double>(monomials_up_to_degree(input.m, budget.nu)));
  for (double n : input.norms) {
    if (n < 0) throw InputError("norms must be nonnegative");
    if (n == 0) return LogBound::zero();
    acc += std::log(n);
  }
  acc += static_cast<double>(budget.e) * std::log(input.r);
  return LogBound::from_log(round_up(acc));
}

Rational determinant_bound_exact(std::uint64_t mu, unsigned m, std::span<const Rational> norms, const Rational& r) {
  if (norms.size() != mu) throw InputError("need one norm per row function");
  const ExponentBudget budget = choose_nu(mu, m);
  Integer factorial;
  mpz_fac_ui(factorial.get_mpz_t(), mu);
  Integer dpow;
  mpz_ui_pow_ui(dpow.get_mpz_t(), monomials_up_to_degree(m, budget.nu), mu);
  Rational out(factorial * dpow);
  for (const auto& n : norms) out *= n;
  Rational rpow;
  mpz_pow_ui(rpow.get_num_mpz_t(), r.get_num_mpz_t(), budget.e);
  mpz_pow_ui(rpow.get_den_mpz_t(), r.get_den_mpz_t(), budget.e);
  return out * rpow;
}

AsymptoticExponents asymptotic_exponents(std::span<const Integer> sigma, std::uint64_t mu, unsigned m,
                                         const Integer& d, std::span<const Rational> a) {
  require_dim(m);
  if (d < 1) throw InputError("degree d must be >= 1");
  if (a.size() != sigma.size()) throw InputError("sigma and a must have the same length");
  const ExponentBudget budget = choose_nu(mu, m);
  if (budget.e == 0) throw DomainError("degenerate: f = 0 (mu <= 1)");
  const double root = std::pow(d.get_d(), 1.0 / m);
  AsymptoticExponents out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    Rational finite(Integer(m) * sigma[i], Integer(static_cast<unsigned long>(budget.e)));
    finite.canonicalize();
    out.finite.push_back(finite.get_d());
    out.limit.push_back((m + 1) * a[i].get_d() / root);
    out.slack.push_back(out.finite.back() - out.limit.back());
  }
  return out;
}

}  // namespace detm
