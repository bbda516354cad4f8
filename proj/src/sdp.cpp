#include "qcap/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace qcap {

HermitianMatrix project_psd(const HermitianMatrix& m) {
  const Spectrum s = eig_hermitian(m);
  const std::size_t n = m.dim();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = s.eigenvalues[k];
    if (lam <= 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = s.eigenvectors.at(i, k);
      if (vik == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j)
        out.at(i, j) += lam * vik * std::conj(s.eigenvectors.at(j, k));
    }
  }
  // Exact re-hermitization against roundoff drift.
  ComplexMatrix sym = 0.5 * (out + out.dagger());
  return HermitianMatrix(std::move(sym));
}

SdpLinearMap SdpLinearMap::scaled(double f, std::size_t dim) {
  SdpLinearMap m;
  m.kind = SdpMapKind::scale;
  m.factor = f;
  m.operand_dim = dim;
  return m;
}

SdpLinearMap SdpLinearMap::transpose_output(double f, std::size_t da, std::size_t db) {
  SdpLinearMap m;
  m.kind = SdpMapKind::transpose_out;
  m.factor = f;
  m.dim_a = da;
  m.dim_b = db;
  m.operand_dim = da * db;
  return m;
}

SdpLinearMap SdpLinearMap::trace_output(double f, std::size_t da, std::size_t db) {
  SdpLinearMap m;
  m.kind = SdpMapKind::trace_out;
  m.factor = f;
  m.dim_a = da;
  m.dim_b = db;
  m.operand_dim = da * db;
  return m;
}

SdpLinearMap SdpLinearMap::kron_identity_output(double f, std::size_t da, std::size_t db) {
  SdpLinearMap m;
  m.kind = SdpMapKind::kron_identity_out;
  m.factor = f;
  m.dim_a = da;
  m.dim_b = db;
  m.operand_dim = da;
  return m;
}

SdpLinearMap SdpLinearMap::trace_functional(double f, std::size_t dim) {
  SdpLinearMap m;
  m.kind = SdpMapKind::full_trace;
  m.factor = f;
  m.operand_dim = dim;
  return m;
}

SdpLinearMap SdpLinearMap::inner_product_with(const ComplexMatrix& g) {
  SdpLinearMap m;
  m.kind = SdpMapKind::inner_with;
  m.matrix = g;
  m.operand_dim = g.rows();
  return m;
}

std::size_t SdpLinearMap::output_dim() const {
  switch (kind) {
    case SdpMapKind::scale: return operand_dim;
    case SdpMapKind::transpose_out: return dim_a * dim_b;
    case SdpMapKind::trace_out: return dim_a;
    case SdpMapKind::kron_identity_out: return dim_a * dim_b;
    case SdpMapKind::full_trace: return 1;
    case SdpMapKind::inner_with: return 1;
  }
  return 0;
}

namespace {

ComplexMatrix transpose_second_factor(const ComplexMatrix& x, std::size_t da, std::size_t db) {
  ComplexMatrix out(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t a = 0; a < db; ++a)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t b = 0; b < db; ++b)
          out.at(i * db + b, j * db + a) = x.at(i * db + a, j * db + b);
  return out;
}

ComplexMatrix trace_second_factor(const ComplexMatrix& x, std::size_t da, std::size_t db) {
  ComplexMatrix out(da, da);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      cplx v = 0.0;
      for (std::size_t a = 0; a < db; ++a) v += x.at(i * db + a, j * db + a);
      out.at(i, j) = v;
    }
  return out;
}

}  // namespace

ComplexMatrix SdpLinearMap::apply(const ComplexMatrix& x) const {
  switch (kind) {
    case SdpMapKind::scale: return factor * x;
    case SdpMapKind::transpose_out: return factor * transpose_second_factor(x, dim_a, dim_b);
    case SdpMapKind::trace_out: return factor * trace_second_factor(x, dim_a, dim_b);
    case SdpMapKind::kron_identity_out:
      return factor * kron(x, ComplexMatrix::identity(dim_b));
    case SdpMapKind::full_trace: {
      ComplexMatrix out(1, 1);
      out.at(0, 0) = factor * x.trace();
      return out;
    }
    case SdpMapKind::inner_with: {
      ComplexMatrix out(1, 1);
      out.at(0, 0) = (matrix->dagger() * x).trace();
      return out;
    }
  }
  return {};
}

ComplexMatrix SdpLinearMap::adjoint(const ComplexMatrix& y) const {
  switch (kind) {
    case SdpMapKind::scale: return factor * y;
    case SdpMapKind::transpose_out: return factor * transpose_second_factor(y, dim_a, dim_b);
    case SdpMapKind::trace_out: return factor * kron(y, ComplexMatrix::identity(dim_b));
    case SdpMapKind::kron_identity_out: return factor * trace_second_factor(y, dim_a, dim_b);
    case SdpMapKind::full_trace: return (factor * y.at(0, 0)) * ComplexMatrix::identity(operand_dim);
    case SdpMapKind::inner_with: return y.at(0, 0) * (*matrix);
  }
  return {};
}

namespace {

// Coordinates of a Hermitian matrix in the orthonormal basis
// {E_ii} ∪ {(E_ij+E_ji)/√2} ∪ {i(E_ij-E_ji)/√2}.
void hermitian_to_coords(const ComplexMatrix& h, double* out) {
  const std::size_t d = h.rows();
  std::size_t k = 0;
  for (std::size_t i = 0; i < d; ++i) out[k++] = h.at(i, i).real();
  const double sq2 = std::sqrt(2.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      out[k++] = sq2 * h.at(i, j).real();
      out[k++] = sq2 * h.at(i, j).imag();
    }
}

ComplexMatrix coords_to_hermitian(const double* in, std::size_t d) {
  ComplexMatrix h(d, d);
  std::size_t k = 0;
  for (std::size_t i = 0; i < d; ++i) h.at(i, i) = in[k++];
  const double inv_sq2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const double re = in[k++] * inv_sq2;
      const double im = in[k++] * inv_sq2;
      h.at(i, j) = cplx{re, im};
      h.at(j, i) = cplx{re, -im};
    }
  return h;
}

// Dense symmetric positive-definite solver (Cholesky with a tiny optional
// ridge): enough for the small normal-equation systems here.
class SymmetricSolver {
 public:
  void factorize(std::vector<double> m, std::size_t n) {
    n_ = n;
    for (double ridge : {0.0, 1e-12, 1e-9}) {
      l_ = m;
      if (try_cholesky(ridge)) return;
    }
    throw SolverError("sdp: affine normal equations are singular", 0.0);
  }

  void solve_in_place(std::vector<double>& b) const {
    for (std::size_t i = 0; i < n_; ++i) {
      double s = b[i];
      for (std::size_t k = 0; k < i; ++k) s -= l_[i * n_ + k] * b[k];
      b[i] = s / l_[i * n_ + i];
    }
    for (std::size_t i = n_; i-- > 0;) {
      double s = b[i];
      for (std::size_t k = i + 1; k < n_; ++k) s -= l_[k * n_ + i] * b[k];
      b[i] = s / l_[i * n_ + i];
    }
  }

 private:
  bool try_cholesky(double ridge) {
    for (std::size_t i = 0; i < n_; ++i) l_[i * n_ + i] += ridge;
    for (std::size_t j = 0; j < n_; ++j) {
      double d = l_[j * n_ + j];
      for (std::size_t k = 0; k < j; ++k) d -= l_[j * n_ + k] * l_[j * n_ + k];
      if (d <= 0.0) return false;
      const double ljj = std::sqrt(d);
      l_[j * n_ + j] = ljj;
      for (std::size_t i = j + 1; i < n_; ++i) {
        double s = l_[i * n_ + j];
        for (std::size_t k = 0; k < j; ++k) s -= l_[i * n_ + k] * l_[j * n_ + k];
        l_[i * n_ + j] = s / ljj;
      }
    }
    return true;
  }

  std::size_t n_ = 0;
  std::vector<double> l_;
};

struct EqConstraint {
  std::vector<SdpTerm> terms;
  ComplexMatrix target;
};

using State = std::vector<ComplexMatrix>;

struct FeasOutcome {
  bool feasible = false;
  double residual = 0.0;
  std::size_t iterations = 0;
};

// Feasibility of {x : A x = b} ∩ (product PSD cone) by Dykstra-corrected
// alternating projections. The affine projection is exact: the normal matrix
// A A^dag is assembled once in an orthonormal Hermitian basis and factorized.
class FeasibilityEngine {
 public:
  FeasibilityEngine(std::vector<SdpVariable> vars, std::vector<EqConstraint> cons)
      : vars_(std::move(vars)), cons_(std::move(cons)) {
    offsets_.resize(cons_.size());
    std::size_t total = 0;
    for (std::size_t c = 0; c < cons_.size(); ++c) {
      offsets_[c] = total;
      total += cons_[c].target.rows() * cons_[c].target.rows();
    }
    total_ = total;
    build_normal_matrix();
  }

  State zero_state() const {
    State x;
    x.reserve(vars_.size());
    for (const auto& v : vars_) x.emplace_back(v.dim, v.dim);
    return x;
  }

  // Updates the constraint targets (the linear maps are fixed).
  void set_targets(std::vector<ComplexMatrix> targets) {
    for (std::size_t c = 0; c < cons_.size(); ++c) cons_[c].target = std::move(targets[c]);
  }

  // Douglas-Rachford splitting between the product cone and the affine set
  // (the ADMM form of the projection scheme): z <- z + P_D(2 P_C(z) - z) -
  // P_C(z). The shadow sequence P_C(z) converges to a point of C ∩ D when
  // one exists; the step norm converges to the gap between the sets when
  // none does.
  FeasOutcome run(State& z, double tol, std::size_t max_iters) const {
    FeasOutcome out;
    double prev_window_res = std::numeric_limits<double>::infinity();
    int flat_windows = 0;
    for (std::size_t it = 1; it <= max_iters; ++it) {
      State y(z);
      for (std::size_t v = 0; v < vars_.size(); ++v) {
        if (!vars_[v].psd) continue;
        ComplexMatrix sym = 0.5 * (y[v] + y[v].dagger());
        y[v] = project_psd(HermitianMatrix(std::move(sym))).mat();
      }
      State w(z);
      for (std::size_t v = 0; v < vars_.size(); ++v) w[v] = 2.0 * y[v] - z[v];
      project_affine(w);

      double res = 0.0;
      for (std::size_t v = 0; v < vars_.size(); ++v) {
        res = std::max(res, max_abs_diff(w[v], y[v]));
        z[v] += w[v] - y[v];
      }
      out.residual = res;
      out.iterations = it;
      if (res <= tol) {
        out.feasible = true;
        // Hand back the cone-side point: exactly PSD, affine within res.
        z = std::move(y);
        return out;
      }
      if (it % 500 == 0) {
        // The step norm can spiral flat for a stretch before dropping, so a
        // stall is only called after several non-improving windows; it is
        // then classified by level (an intersection gap stays flat forever).
        flat_windows = res > prev_window_res * 0.995 ? flat_windows + 1 : 0;
        prev_window_res = res;
        if (flat_windows >= 5) {
          if (res <= 10.0 * tol) {
            out.feasible = true;
            z = std::move(y);
          }
          return out;
        }
      }
    }
    return out;
  }

  double affine_violation(const State& x) const {
    double worst = 0.0;
    for (const auto& c : cons_) worst = std::max(worst, residual_of(c, x).max_abs());
    return worst;
  }

 private:
  ComplexMatrix residual_of(const EqConstraint& c, const State& x) const {
    ComplexMatrix r = ComplexMatrix(c.target.rows(), c.target.cols()) - c.target;
    for (const auto& t : c.terms) r += t.map.apply(x[t.var]);
    return r;
  }

  void project_affine(State& x) const {
    std::vector<double> rhs(total_, 0.0);
    for (std::size_t c = 0; c < cons_.size(); ++c) {
      const ComplexMatrix r = residual_of(cons_[c], x);
      hermitian_to_coords(r, rhs.data() + offsets_[c]);
    }
    solver_.solve_in_place(rhs);
    for (std::size_t c = 0; c < cons_.size(); ++c) {
      const std::size_t d = cons_[c].target.rows();
      const ComplexMatrix lam = coords_to_hermitian(rhs.data() + offsets_[c], d);
      for (const auto& t : cons_[c].terms) x[t.var] -= t.map.adjoint(lam);
    }
  }

  void build_normal_matrix() {
    std::vector<double> m(total_ * total_, 0.0);
    std::vector<double> coords(total_);
    for (std::size_t cb = 0; cb < cons_.size(); ++cb) {
      const std::size_t db = cons_[cb].target.rows();
      for (std::size_t beta = 0; beta < db * db; ++beta) {
        std::vector<double> unit(db * db, 0.0);
        unit[beta] = 1.0;
        const ComplexMatrix bmat = coords_to_hermitian(unit.data(), db);
        // A^dag of the basis element, accumulated per variable.
        State adj = zero_state_dims();
        for (const auto& t : cons_[cb].terms) adj[t.var] += t.map.adjoint(bmat);
        // A applied back, written as one column of the normal matrix.
        for (std::size_t ca = 0; ca < cons_.size(); ++ca) {
          const std::size_t da = cons_[ca].target.rows();
          ComplexMatrix img(da, da);
          for (const auto& t : cons_[ca].terms) img += t.map.apply(adj[t.var]);
          hermitian_to_coords(img, coords.data());
          for (std::size_t alpha = 0; alpha < da * da; ++alpha)
            m[(offsets_[ca] + alpha) * total_ + (offsets_[cb] + beta)] = coords[alpha];
        }
      }
    }
    solver_.factorize(std::move(m), total_);
  }

  State zero_state_dims() const {
    State x;
    x.reserve(vars_.size());
    for (const auto& v : vars_) x.emplace_back(v.dim, v.dim);
    return x;
  }

  std::vector<SdpVariable> vars_;
  std::vector<EqConstraint> cons_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  SymmetricSolver solver_;
};

// Equality form: every ⪰ constraint gains a PSD slack, the objective (if
// any) gains an epigraph slack whose target carries the bisected level t.
struct EqualityForm {
  std::vector<SdpVariable> vars;
  std::vector<EqConstraint> cons;
  std::size_t n_user_vars = 0;
  std::ptrdiff_t epigraph_constraint = -1;  // target = t·I lives here
  std::size_t image_dim = 0;
};

EqualityForm to_equality_form(const SdpProblem& prob) {
  EqualityForm eq;
  eq.vars = prob.variables;
  eq.n_user_vars = prob.variables.size();
  for (const auto& c : prob.constraints) {
    EqConstraint ec{c.terms, c.target.mat()};
    if (c.sense == SdpSense::succeq) {
      const std::size_t slack = eq.vars.size();
      eq.vars.push_back(SdpVariable{c.target.dim(), true});
      ec.terms.push_back(SdpTerm{slack, SdpLinearMap::scaled(-1.0, c.target.dim())});
    }
    eq.cons.push_back(std::move(ec));
  }
  if (prob.objective) {
    const std::size_t d = prob.objective->image_dim;
    eq.image_dim = d;
    const std::size_t slack = eq.vars.size();
    eq.vars.push_back(SdpVariable{d, true});
    EqConstraint ec{prob.objective->terms, ComplexMatrix(d, d)};  // target set per t
    ec.terms.push_back(SdpTerm{slack, SdpLinearMap::scaled(1.0, d)});
    eq.epigraph_constraint = std::ptrdiff_t(eq.cons.size());
    eq.cons.push_back(std::move(ec));
  }
  return eq;
}

}  // namespace

SdpSolution solve_sdp_admm(const SdpProblem& prob, double tol, std::size_t max_iters) {
  EqualityForm eq = to_equality_form(prob);
  FeasibilityEngine engine(eq.vars, eq.cons);

  auto targets_at = [&](double t) {
    std::vector<ComplexMatrix> targets;
    targets.reserve(eq.cons.size());
    for (const auto& c : eq.cons) targets.push_back(c.target);
    if (eq.epigraph_constraint >= 0)
      targets[std::size_t(eq.epigraph_constraint)] = t * ComplexMatrix::identity(eq.image_dim);
    return targets;
  };

  SdpSolution sol;
  auto finish = [&](const State& x, double value, bool ok, double residual) {
    sol.optimal_value = value;
    sol.converged = ok;
    sol.primal_residual = residual;
    sol.variables.clear();
    for (std::size_t v = 0; v < eq.n_user_vars; ++v) {
      ComplexMatrix sym = 0.5 * (x[v] + x[v].dagger());
      sol.variables.emplace_back(std::move(sym));
    }
  };

  if (!prob.objective) {
    State x = engine.zero_state();
    FeasOutcome out = engine.run(x, tol, max_iters);
    sol.iterations = out.iterations;
    finish(x, 0.0, out.feasible, out.residual);
    return sol;
  }

  const double inner_tol = tol;
  double hi = prob.objective->bracket_hi > 0.0 ? prob.objective->bracket_hi
                                               : double(prob.objective->image_dim);
  double lo = 0.0;

  State x = engine.zero_state();
  engine.set_targets(targets_at(hi));
  FeasOutcome top = engine.run(x, inner_tol, max_iters);
  sol.iterations += top.iterations;
  if (!top.feasible) {
    finish(x, hi, false, top.residual);
    return sol;
  }
  State best = x;
  double best_res = top.residual;

  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    State trial = best;  // warm start from the last feasible point
    engine.set_targets(targets_at(mid));
    FeasOutcome out = engine.run(trial, inner_tol, max_iters);
    sol.iterations += out.iterations;
    if (out.feasible) {
      hi = mid;
      best = std::move(trial);
      best_res = out.residual;
    } else {
      lo = mid;
    }
  }

  finish(best, hi, true, best_res);
  return sol;
}

SdpProblem make_max_rains_problem(const ChoiMatrix& j) {
  const std::size_t n = j.d_in * j.d_out;
  SdpProblem prob;
  prob.variables = {SdpVariable{n, true}, SdpVariable{n, true}};  // V, Y

  prob.constraints.push_back(
      SdpConstraint{{SdpTerm{0, SdpLinearMap::transpose_output(1.0, j.d_in, j.d_out)},
                     SdpTerm{1, SdpLinearMap::transpose_output(-1.0, j.d_in, j.d_out)}},
                    j.matrix,
                    SdpSense::succeq});

  SdpObjective obj;
  obj.terms = {SdpTerm{0, SdpLinearMap::trace_output(1.0, j.d_in, j.d_out)},
               SdpTerm{1, SdpLinearMap::trace_output(1.0, j.d_in, j.d_out)}};
  obj.image_dim = j.d_in;

  // Feasible by construction at t = ||Tr_out |J^{T_out}| ||_inf via the
  // Jordan split V = (J^{T_out})_+, Y = (J^{T_out})_-; keep [0, d_in] as the
  // bracket when it is the larger.
  HermitianMatrix jpt = partial_transpose(j.matrix, {j.d_in, j.d_out}, 1);
  const Spectrum s = eig_hermitian(jpt);
  ComplexMatrix abs_pt(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = std::abs(s.eigenvalues[k]);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        abs_pt.at(a, b) += lam * s.eigenvectors.at(a, k) * std::conj(s.eigenvectors.at(b, k));
  }
  HermitianMatrix marg(trace_second_factor(0.5 * (abs_pt + abs_pt.dagger()), j.d_in, j.d_out));
  const double bound = eig_hermitian(marg).eigenvalues.front();
  obj.bracket_hi = std::max(double(j.d_in), bound) + 1e-3;
  prob.objective = std::move(obj);
  return prob;
}

namespace {

// Largest g with a feasible dual point: X,W ⪰ 0, Tr W = 1,
// -W⊗I ⪯ X^{T_out} ⪯ W⊗I, <J, X> ≥ g. Every feasible g lower-bounds Gamma.
double max_rains_dual_value(const ChoiMatrix& j, double primal_gamma, double inner_tol,
                            std::size_t max_iters, std::size_t* iterations) {
  const std::size_t n = j.d_in * j.d_out;
  std::vector<SdpVariable> vars = {
      SdpVariable{n, true},        // X
      SdpVariable{j.d_in, true},   // W
      SdpVariable{n, true},        // A1 = W⊗I - X^T_out
      SdpVariable{n, true},        // A2 = W⊗I + X^T_out
      SdpVariable{1, true},        // s: <J,X> - s = g
  };

  std::vector<EqConstraint> cons;
  {
    EqConstraint c;
    c.terms = {SdpTerm{1, SdpLinearMap::kron_identity_output(1.0, j.d_in, j.d_out)},
               SdpTerm{0, SdpLinearMap::transpose_output(-1.0, j.d_in, j.d_out)},
               SdpTerm{2, SdpLinearMap::scaled(-1.0, n)}};
    c.target = ComplexMatrix(n, n);
    cons.push_back(std::move(c));
  }
  {
    EqConstraint c;
    c.terms = {SdpTerm{1, SdpLinearMap::kron_identity_output(1.0, j.d_in, j.d_out)},
               SdpTerm{0, SdpLinearMap::transpose_output(1.0, j.d_in, j.d_out)},
               SdpTerm{3, SdpLinearMap::scaled(-1.0, n)}};
    c.target = ComplexMatrix(n, n);
    cons.push_back(std::move(c));
  }
  {
    EqConstraint c;
    c.terms = {SdpTerm{1, SdpLinearMap::trace_functional(1.0, j.d_in)}};
    ComplexMatrix one(1, 1);
    one.at(0, 0) = 1.0;
    c.target = std::move(one);
    cons.push_back(std::move(c));
  }
  const std::size_t level_constraint = cons.size();
  {
    EqConstraint c;
    c.terms = {SdpTerm{0, SdpLinearMap::inner_product_with(j.matrix.mat())},
               SdpTerm{4, SdpLinearMap::scaled(-1.0, 1)}};
    c.target = ComplexMatrix(1, 1);  // set per g
    cons.push_back(std::move(c));
  }

  FeasibilityEngine engine(vars, cons);
  auto targets_at = [&](double g) {
    std::vector<ComplexMatrix> t;
    for (const auto& c : cons) t.push_back(c.target);
    ComplexMatrix lvl(1, 1);
    lvl.at(0, 0) = g;
    t[level_constraint] = std::move(lvl);
    return t;
  };

  double lo = 0.0;  // feasible: X = 0, W = I/d_in
  double hi = primal_gamma + 0.05;
  State best = engine.zero_state();
  engine.set_targets(targets_at(lo));
  FeasOutcome base = engine.run(best, inner_tol, max_iters);
  *iterations += base.iterations;
  if (!base.feasible) return 0.0;

  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    State trial = best;
    engine.set_targets(targets_at(mid));
    FeasOutcome out = engine.run(trial, inner_tol, max_iters);
    *iterations += out.iterations;
    if (out.feasible) {
      lo = mid;
      best = std::move(trial);
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

MaxRainsResult max_rains_bound_full(const KrausChannel& ch) {
  if (ch.d_in() * ch.d_out() > kMaxDim)
    throw std::invalid_argument("max_rains_bound: d_in*d_out exceeds 16");
  const ChoiMatrix j = choi_of(ch);
  SdpProblem prob = make_max_rains_problem(j);

  MaxRainsResult res{};
  res.primal = solve_sdp_admm(prob, 1e-8, 50000);
  res.gamma_primal = res.primal.optimal_value;
  if (!res.primal.converged)
    throw SolverError("max_rains_bound: primal feasibility solve did not converge",
                      std::log2(std::max(res.gamma_primal, 1e-12)));

  std::size_t dual_iters = 0;
  res.gamma_dual = max_rains_dual_value(j, res.gamma_primal, 1e-8, 50000, &dual_iters);
  res.primal.iterations += dual_iters;
  res.value_bits = std::log2(res.gamma_primal);
  res.duality_gap_bits = std::log2(res.gamma_primal) - std::log2(std::max(res.gamma_dual, 1e-12));
  return res;
}

double max_rains_bound(const KrausChannel& ch) {
  return max_rains_bound_full(ch).value_bits;
}

}  // namespace qcap
