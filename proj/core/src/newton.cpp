#include "relindex/newton.hpp"

#include <cmath>

#include "relindex/index.hpp"

namespace relindex {

NewtonResult newton_solve(const Problem& problem, const Eigen::VectorXd& guess, std::size_t m,
                          const NewtonOptions& opt) {
  NewtonResult r;
  if (static_cast<std::size_t>(guess.size()) != problem.dimension(m)) {
    r.message = "guess has the wrong dimension";
    r.a = guess;
    return r;
  }
  Eigen::VectorXd a = guess;
  Eigen::VectorXd f = problem.residual(a, m);
  double nf = f.lpNorm<Eigen::Infinity>();
  for (int it = 0; it <= opt.max_iterations; ++it) {
    r.iterations = it;
    if (!std::isfinite(nf)) {
      r.message = "residual is not finite";
      break;
    }
    if (nf < opt.tolerance) {
      r.converged = true;
      break;
    }
    if (it == opt.max_iterations) {
      r.message = "iteration limit reached";
      break;
    }
    const Eigen::MatrixXd j = problem.jacobian(a, m);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(j);
    if (!lu.isInvertible()) {
      r.message = "singular Jacobian at iteration " + std::to_string(it);
      break;
    }
    const Eigen::VectorXd step = lu.solve(-f);
    double t = 1.0;
    Eigen::VectorXd trial = a + step;
    Eigen::VectorXd ft = problem.residual(trial, m);
    double nt = ft.lpNorm<Eigen::Infinity>();
    while (!(nt < (1.0 - 1e-4 * t) * nf) && t > 1e-4) {
      t *= 0.5;
      trial = a + t * step;
      ft = problem.residual(trial, m);
      nt = ft.lpNorm<Eigen::Infinity>();
    }
    const double moved = t * step.lpNorm<Eigen::Infinity>();
    if (!(nt < nf) && moved < 1e-15 * std::max(1.0, a.lpNorm<Eigen::Infinity>())) {
      r.converged = nf < opt.stagnation_tolerance;
      if (!r.converged) r.message = "stagnated";
      break;
    }
    if (!(nt < nf)) {
      // Full step despite no decrease; near the solution roundoff dominates.
      trial = a + step;
      ft = problem.residual(trial, m);
      nt = ft.lpNorm<Eigen::Infinity>();
      if (!(nt < nf) && nf < opt.stagnation_tolerance) {
        r.converged = true;
        break;
      }
    }
    a = trial;
    f = ft;
    nf = nt;
  }
  r.a = a;
  r.residual = nf;
  return r;
}

BranchResult continue_branch(const ProblemFactory& factory, const Eigen::VectorXd& start, std::size_t m,
                             double from, double to, double step, std::optional<double> certify_nu) {
  BranchResult out;
  if (!(step > 0.0)) throw DomainError("continue_branch: step must be positive");
  const double dir = to >= from ? 1.0 : -1.0;
  const auto count = static_cast<long>(std::floor(std::fabs(to - from) / step + 1e-9));
  Eigen::VectorXd guess = start;
  for (long i = 0; i <= count; ++i) {
    const double lam = from + dir * static_cast<double>(i) * step;
    const auto problem = factory(lam);
    const NewtonResult nr = newton_solve(*problem, guess, m);
    if (!nr.converged) {
      out.truncated = true;
      out.message = "Newton failed at parameter " + std::to_string(lam) + ": " + nr.message;
      break;
    }
    BranchPoint bp;
    bp.parameter = lam;
    bp.a = nr.a;
    if (certify_nu) {
      EquilibriumCertificate c = certify(*problem, nr.a, *certify_nu, m);
      if (c.status == CertStatus::certified) {
        const EigenEnclosure e = count_positive(problem->index_block(c.abar, c.m, c.m));
        if (e.conclusive) bp.index = e.positive_count;
      }
      bp.certificate = std::move(c);
    }
    out.points.push_back(std::move(bp));
    guess = nr.a;
  }
  return out;
}

}  // namespace relindex
