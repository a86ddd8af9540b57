#include "slp/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "slp/quadrature.hpp"

namespace slp {

double GreenKernel::value(const ValidatedProblem& problem, double x, double y) const {
  int px = problem.piece_of(x);
  int py = problem.piece_of(y);
  double weight = -problem.r(py, y) / abel_[py];
  if (y <= x) return left_->in_piece(py, y).u * right_->in_piece(px, x).u * weight;
  return left_->in_piece(px, x).u * right_->in_piece(py, y).u * weight;
}

GreenKernel build_kernel(const ValidatedProblem& problem, double lambda,
                         double proximity_threshold, const IvpOptions& opts) {
  double d = characteristic(problem, lambda, opts);
  if (std::fabs(d) <= proximity_threshold * std::max(1.0, std::fabs(lambda)))
    throw Error(errc::near_eigenvalue, "characteristic value " + std::to_string(d) +
                                           " too small at lambda=" + std::to_string(lambda));
  GreenKernel k;
  k.lambda_ = lambda;
  k.d_ = d;
  k.left_ = std::make_shared<PiecewiseSolution>(build_left_solution(problem, lambda, opts));
  k.right_ = std::make_shared<PiecewiseSolution>(build_right_solution(problem, lambda, opts));
  for (int piece = 0; piece < 3; ++piece)
    k.abel_[piece] = abel_constant(problem, *k.left_, *k.right_, piece);
  return k;
}

// ---------------------------------------------------------------------------

struct ResolventSolution::State {
  ValidatedProblem problem;
  double lambda = 0.0;
  double c = 0.0;  // coefficient of the left solution
  std::shared_ptr<const PiecewiseSolution> left, right;
  std::array<double, 3> abel{};

  // Cumulative integrals of  (left * weight * T1)  and  (right * weight * T1)
  // from -1, tabulated at segment boundaries per piece.
  std::array<std::vector<double>, 3> bounds;
  std::array<std::vector<double>, 3> left_prefix, right_prefix;  // start at 0 per piece
  std::array<double, 3> left_offset{}, right_offset{};
  double right_total = 0.0;

  std::array<std::function<double(double)>, 3> t1;

  double weight(int piece, double y) const { return -problem.r(piece, y) / abel[piece]; }

  double left_integrand(int piece, double y) const {
    return left->in_piece(piece, y).u * weight(piece, y) * t1[piece](y);
  }
  double right_integrand(int piece, double y) const {
    return right->in_piece(piece, y).u * weight(piece, y) * t1[piece](y);
  }

  // integral from -1 to x of the left integrand
  double cum_left(int piece, double x) const {
    const auto& bs = bounds[piece];
    auto it = std::upper_bound(bs.begin(), bs.end(), x);
    std::size_t seg = it == bs.begin() ? 0 : (it - bs.begin()) - 1;
    seg = std::min(seg, bs.size() - 2);
    double base = left_offset[piece] + left_prefix[piece][seg];
    if (x <= bs[seg]) return base;
    return base + integrate_panel([&](double y) { return left_integrand(piece, y); }, bs[seg], x);
  }
  double cum_right(int piece, double x) const {
    const auto& bs = bounds[piece];
    auto it = std::upper_bound(bs.begin(), bs.end(), x);
    std::size_t seg = it == bs.begin() ? 0 : (it - bs.begin()) - 1;
    seg = std::min(seg, bs.size() - 2);
    double base = right_offset[piece] + right_prefix[piece][seg];
    if (x <= bs[seg]) return base;
    return base + integrate_panel([&](double y) { return right_integrand(piece, y); }, bs[seg], x);
  }

  double value(int piece, double x) const {
    double a = cum_left(piece, x);
    double b = right_total - cum_right(piece, x);
    auto l = left->in_piece(piece, x);
    auto r = right->in_piece(piece, x);
    return r.u * a + l.u * (b + c);
  }
  double deriv(int piece, double x) const {
    // The integrand contributions of d/dx cancel between the two terms.
    double a = cum_left(piece, x);
    double b = right_total - cum_right(piece, x);
    auto l = left->in_piece(piece, x);
    auto r = right->in_piece(piece, x);
    return r.up * a + l.up * (b + c);
  }
};

double ResolventSolution::lambda() const { return state_->lambda; }
double ResolventSolution::value(int piece, double x) const { return state_->value(piece, x); }
double ResolventSolution::deriv(int piece, double x) const { return state_->deriv(piece, x); }

double ResolventSolution::value(const ValidatedProblem& problem, double x, Side side) const {
  return state_->value(problem.piece_of(x, side), x);
}
double ResolventSolution::deriv(const ValidatedProblem& problem, double x, Side side) const {
  return state_->deriv(problem.piece_of(x, side), x);
}

double ResolventSolution::scalar() const {
  double u1 = state_->value(2, 1.0);
  double du1 = state_->deriv(2, 1.0);
  return boundary_forms(state_->problem, u1, du1).du_form;
}

HilbertElement ResolventSolution::to_element() const {
  HilbertElement e;
  auto st = state_;
  for (int piece = 0; piece < 3; ++piece) {
    e.f[piece] = [st, piece](double x) { return st->value(piece, x); };
    e.df[piece] = [st, piece](double x) { return st->deriv(piece, x); };
  }
  e.scalar = scalar();
  return e;
}

ResolventSolution apply_resolvent(const ValidatedProblem& problem, const GreenKernel& kernel,
                                  const HilbertElement& T) {
  auto st = std::make_shared<ResolventSolution::State>();
  st->problem = problem;
  st->lambda = kernel.lambda();
  st->left = kernel.left_ptr();
  st->right = kernel.right_ptr();
  st->abel = kernel.abel();
  st->t1 = T.f;
  st->c = -T.scalar / kernel.d();

  double freq = std::sqrt(std::max(0.0, kernel.lambda()));
  double acc_left = 0.0, acc_right = 0.0;
  for (int piece = 0; piece < 3; ++piece) {
    double lo = problem.piece_lo(piece), hi = problem.piece_hi(piece);
    int segments = std::max(24, int(std::ceil((hi - lo) * (freq + 6.0) / 4.0)));
    auto& bs = st->bounds[piece];
    bs.resize(segments + 1);
    for (int i = 0; i <= segments; ++i) bs[i] = lo + (hi - lo) * i / segments;

    st->left_offset[piece] = acc_left;
    st->right_offset[piece] = acc_right;
    auto& lp = st->left_prefix[piece];
    auto& rp = st->right_prefix[piece];
    lp.assign(segments + 1, 0.0);
    rp.assign(segments + 1, 0.0);
    QuadOptions seg_quad{1e-13, 32, 8};
    for (int i = 0; i < segments; ++i) {
      lp[i + 1] = lp[i] + integrate_adaptive(
                              [&](double y) { return st->left_integrand(piece, y); }, bs[i],
                              bs[i + 1], seg_quad);
      rp[i + 1] = rp[i] + integrate_adaptive(
                              [&](double y) { return st->right_integrand(piece, y); }, bs[i],
                              bs[i + 1], seg_quad);
    }
    acc_left += lp[segments];
    acc_right += rp[segments];
  }
  st->right_total = acc_right;

  ResolventSolution out;
  out.state_ = st;
  return out;
}

ResolventSolution apply_resolvent(const ValidatedProblem& problem, double lambda,
                                  const HilbertElement& T) {
  return apply_resolvent(problem, build_kernel(problem, lambda), T);
}

double ResidualReport::max_defect() const {
  double m = std::max({ode_defect, bc_left, bc_right});
  for (double t : trans_defects) m = std::max(m, std::fabs(t));
  return m;
}

ResidualReport resolvent_residual(const ValidatedProblem& problem, double lambda,
                                  const HilbertElement& T, const ResolventSolution& U) {
  ResidualReport rep;
  const ProblemSpec& s = problem.spec();
  const double h = 1e-3;

  for (int piece = 0; piece < 3; ++piece) {
    double lo = problem.piece_lo(piece), hi = problem.piece_hi(piece);
    double margin = std::max(4.5 * h, 1e-3 * (hi - lo));
    const int n = 40;
    for (int i = 0; i < n; ++i) {
      double x = (lo + margin) + (hi - lo - 2 * margin) * i / (n - 1.0);
      auto flux = [&](double y) { return problem.p(piece, y) * U.deriv(piece, y); };
      double dflux = (-flux(x + 2 * h) + 8.0 * flux(x + h) - 8.0 * flux(x - h) +
                      flux(x - 2 * h)) /
                     (12.0 * h);
      double lu = (-dflux + problem.q(piece, x) * U.value(piece, x)) / problem.r(piece, x);
      double defect = std::fabs(lu - lambda * U.value(piece, x) - T.f[piece](x));
      rep.ode_defect = std::max(rep.ode_defect, defect);
    }
  }

  rep.bc_left = std::fabs(U.value(0, -1.0));

  double u1 = U.value(2, 1.0), du1 = U.deriv(2, 1.0);
  BoundaryForms forms = boundary_forms(problem, u1, du1);
  rep.bc_right = std::fabs(-forms.u_form - lambda * forms.du_form - T.scalar);

  rep.trans_defects[0] = s.gamma[0] * U.value(0, s.h1) - s.delta[0] * U.value(1, s.h1);
  rep.trans_defects[1] = s.gamma[1] * U.deriv(0, s.h1) - s.delta[1] * U.deriv(1, s.h1);
  rep.trans_defects[2] = s.gamma[2] * U.value(1, s.h2) - s.delta[2] * U.value(2, s.h2);
  rep.trans_defects[3] = s.gamma[3] * U.deriv(1, s.h2) - s.delta[3] * U.deriv(2, s.h2);
  return rep;
}

}  // namespace slp
