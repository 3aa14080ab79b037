#include "qdistill/noise.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace qdistill {

namespace {

constexpr Real kNormTol = 1e-12;
constexpr Real kStationaryTol = 1e-8;

void check_prob_vector(const RealVector& p, const std::string& what) {
  for (Index i = 0; i < p.size(); ++i)
    if (p[i] < 0.0) throw ValidationError(what + ": negative probability at entry " + std::to_string(i));
  if (std::abs(p.sum() - 1.0) > kNormTol)
    throw ValidationError(what + ": probabilities sum to " + std::to_string(p.sum()) +
                          " (expected 1 within 1e-12)");
}

Real log_base(Real v, int d) { return std::log(v) / std::log(static_cast<Real>(d)); }

// Entropy term with the 0 log 0 = 0 convention.
Real h_term(Real p, int d) { return p > 0.0 ? -p * log_base(p, d) : 0.0; }

Index sample_from(const RealVector& p, Rng& rng) {
  std::uniform_real_distribution<Real> unif(0.0, 1.0);
  Real draw = unif(rng) * p.sum();
  for (Index i = 0; i < p.size(); ++i) {
    draw -= p[i];
    if (draw <= 0.0) return i;
  }
  return p.size() - 1;
}

}  // namespace

PauliDistribution::PauliDistribution(int d, int n, Form form) : d_(d), n_(n), form_(form) {
  if (d_ < 2) throw DimensionError("PauliDistribution: d must be >= 2");
  if (n_ < 1) throw DimensionError("PauliDistribution: n must be >= 1");
}

PauliDistribution PauliDistribution::explicit_table(int d, int n, RealVector table) {
  PauliDistribution dist(d, n, Form::Explicit);
  const Index labels = checked_pow(d, 2 * n);
  if (table.size() != labels)
    throw ValidationError("PauliDistribution: explicit table must have d^{2n} entries");
  check_prob_vector(table, "PauliDistribution(explicit)");
  dist.table_ = std::move(table);
  return dist;
}

PauliDistribution PauliDistribution::iid(int d, int n, RealVector single_letter) {
  PauliDistribution dist(d, n, Form::IID);
  if (single_letter.size() != static_cast<Index>(d) * d)
    throw ValidationError("PauliDistribution: single-letter table must have d^2 entries");
  check_prob_vector(single_letter, "PauliDistribution(iid)");
  dist.single_ = std::move(single_letter);
  return dist;
}

PauliDistribution PauliDistribution::markov(int d, int n, RealVector initial, RealMatrix transition) {
  PauliDistribution dist(d, n, Form::Markov);
  const Index letters = static_cast<Index>(d) * d;
  if (initial.size() != letters)
    throw ValidationError("PauliDistribution: initial distribution must have d^2 entries");
  check_prob_vector(initial, "PauliDistribution(markov initial)");
  if (transition.rows() != letters || transition.cols() != letters)
    throw ValidationError("PauliDistribution: transition matrix must be d^2 x d^2");
  for (Index u = 0; u < letters; ++u)
    check_prob_vector(transition.row(u).transpose(), "PauliDistribution(markov row " + std::to_string(u) + ")");
  dist.initial_ = std::move(initial);
  dist.transition_ = std::move(transition);
  return dist;
}

Real PauliDistribution::prob(const ZdVec& x) const {
  if (x.d() != d_ || x.n() != n_) throw DimensionError("PauliDistribution::prob: label mismatch");
  switch (form_) {
    case Form::Explicit:
      return table_[x.index()];
    case Form::IID: {
      Real p = 1.0;
      for (int i = 0; i < n_; ++i) p *= single_[x.letter_index(i)];
      return p;
    }
    case Form::Markov: {
      Real p = initial_[x.letter_index(0)];
      for (int i = 0; i + 1 < n_; ++i) p *= transition_(x.letter_index(i), x.letter_index(i + 1));
      return p;
    }
  }
  return 0.0;
}

RealVector PauliDistribution::to_explicit() const {
  const Index labels = checked_pow(d_, 2 * n_);
  if (form_ == Form::Explicit) return table_;
  RealVector out(labels);
  for (Index idx = 0; idx < labels; ++idx) out[idx] = prob(ZdVec::from_index(d_, n_, idx));
  return out;
}

ZdVec PauliDistribution::sample(Rng& rng) const {
  IntVector coords(2 * n_);
  switch (form_) {
    case Form::Explicit: {
      const Index idx = sample_from(table_, rng);
      return ZdVec::from_index(d_, n_, idx);
    }
    case Form::IID: {
      for (int i = 0; i < n_; ++i) {
        const Index u = sample_from(single_, rng);
        coords[2 * i] = static_cast<int>(u) / d_;
        coords[2 * i + 1] = static_cast<int>(u) % d_;
      }
      return ZdVec(d_, std::move(coords));
    }
    case Form::Markov: {
      Index u = sample_from(initial_, rng);
      for (int i = 0; i < n_; ++i) {
        coords[2 * i] = static_cast<int>(u) / d_;
        coords[2 * i + 1] = static_cast<int>(u) % d_;
        if (i + 1 < n_) u = sample_from(transition_.row(u).transpose(), rng);
      }
      return ZdVec(d_, std::move(coords));
    }
  }
  return ZdVec::zero(d_, n_);
}

const RealVector& PauliDistribution::single_letter() const {
  if (form_ != Form::IID) throw ValidationError("single_letter: not an iid distribution");
  return single_;
}

const RealVector& PauliDistribution::initial() const {
  if (form_ != Form::Markov) throw ValidationError("initial: not a markov distribution");
  return initial_;
}

const RealMatrix& PauliDistribution::transition() const {
  if (form_ != Form::Markov) throw ValidationError("transition: not a markov distribution");
  return transition_;
}

Real mass(const PauliDistribution& p, const std::vector<ZdVec>& labels) {
  Real acc = 0.0;
  for (const ZdVec& x : labels) acc += p.prob(x);
  return acc;
}

MarkovAnalysis analyze_chain(const RealMatrix& transition) {
  const Index m = transition.rows();
  if (m == 0 || transition.cols() != m) throw ValidationError("analyze_chain: square transition matrix required");
  for (Index u = 0; u < m; ++u) {
    for (Index v = 0; v < m; ++v)
      if (transition(u, v) < 0.0) throw ValidationError("analyze_chain: negative transition probability");
    if (std::abs(transition.row(u).sum() - 1.0) > 1e-9)
      throw ValidationError("analyze_chain: row " + std::to_string(u) + " does not sum to 1");
  }

  // reach(u, v): v reachable from u in >= 1 step.
  std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
  for (Index u = 0; u < m; ++u) {
    std::deque<Index> queue;
    for (Index v = 0; v < m; ++v)
      if (transition(u, v) > 0.0 && !reach[u][v]) {
        reach[u][v] = true;
        queue.push_back(v);
      }
    while (!queue.empty()) {
      const Index w = queue.front();
      queue.pop_front();
      for (Index v = 0; v < m; ++v)
        if (transition(w, v) > 0.0 && !reach[u][v]) {
          reach[u][v] = true;
          queue.push_back(v);
        }
    }
  }

  MarkovAnalysis out;
  out.class_index.assign(m, -1);
  for (Index u = 0; u < m; ++u) {
    if (out.class_index[u] >= 0) continue;
    MarkovClass cls;
    cls.states.push_back(static_cast<int>(u));
    out.class_index[u] = static_cast<int>(out.classes.size());
    for (Index v = u + 1; v < m; ++v) {
      if (out.class_index[v] >= 0) continue;
      if (reach[u][v] && reach[v][u]) {
        cls.states.push_back(static_cast<int>(v));
        out.class_index[v] = static_cast<int>(out.classes.size());
      }
    }
    out.classes.push_back(std::move(cls));
  }

  for (auto& cls : out.classes) {
    cls.closed = true;
    for (int u : cls.states) {
      for (Index v = 0; v < m; ++v) {
        if (transition(u, v) > 0.0 &&
            std::find(cls.states.begin(), cls.states.end(), static_cast<int>(v)) == cls.states.end()) {
          cls.closed = false;
          break;
        }
      }
      if (!cls.closed) break;
    }
    if (!cls.closed) continue;

    // Unique stationary distribution of the restricted (irreducible) chain:
    // solve q^T P = q^T with the normalization row appended.
    const Index mc = static_cast<Index>(cls.states.size());
    RealMatrix sub(mc, mc);
    for (Index i = 0; i < mc; ++i)
      for (Index j = 0; j < mc; ++j) sub(i, j) = transition(cls.states[i], cls.states[j]);
    RealMatrix system(mc + 1, mc);
    system.topRows(mc) = sub.transpose() - RealMatrix::Identity(mc, mc);
    system.row(mc).setOnes();
    RealVector rhs = RealVector::Zero(mc + 1);
    rhs[mc] = 1.0;
    RealVector q = system.colPivHouseholderQr().solve(rhs);
    for (Index i = 0; i < mc; ++i) q[i] = std::max(q[i], 0.0);
    q /= q.sum();
    cls.stationary = RealVector::Zero(m);
    for (Index i = 0; i < mc; ++i) cls.stationary[cls.states[i]] = q[i];
  }

  out.irreducible = out.classes.size() == 1;
  return out;
}

MarkovAnalysis stationary(const PauliDistribution& markov_dist) {
  return analyze_chain(markov_dist.transition());
}

Real entropy(const RealVector& p, int d) {
  if (d < 2) throw DimensionError("entropy: d must be >= 2");
  for (Index i = 0; i < p.size(); ++i)
    if (p[i] < -1e-12) throw ValidationError("entropy: negative probability");
  if (std::abs(p.sum() - 1.0) > 1e-9) throw ValidationError("entropy: probabilities do not sum to 1");
  Real h = 0.0;
  for (Index i = 0; i < p.size(); ++i) h += h_term(p[i], d);
  return h;
}

Real cond_entropy(const RealMatrix& transition, const RealVector& q, int d) {
  if (transition.rows() != transition.cols() || transition.rows() != q.size())
    throw DimensionError("cond_entropy: shape mismatch");
  Real h = 0.0;
  for (Index u = 0; u < q.size(); ++u) {
    if (q[u] <= 0.0) continue;
    Real row_h = 0.0;
    for (Index v = 0; v < q.size(); ++v) row_h += h_term(transition(u, v), d);
    h += q[u] * row_h;
  }
  return h;
}

Real hashing_bound(const RealVector& single_letter, int d) {
  if (single_letter.size() != static_cast<Index>(d) * d)
    throw DimensionError("hashing_bound: table must have d^2 entries");
  return 1.0 - entropy(single_letter, d);
}

Real markov_bound(const RealMatrix& transition, const RealVector& q, int d) {
  const Index letters = static_cast<Index>(d) * d;
  if (transition.rows() != letters || q.size() != letters)
    throw DimensionError("markov_bound: transition/stationary must be over d^2 letters");
  const RealVector residual = (transition.transpose() * q - q).cwiseAbs();
  if (residual.maxCoeff() > kStationaryTol)
    throw ValidationError("markov_bound: q is not stationary (||qP - q|| = " +
                          std::to_string(residual.maxCoeff()) + ")");
  return 1.0 - cond_entropy(transition, q, d);
}

namespace {

struct ExponentObjective {
  const RealVector& p;  // support-restricted reference
  Real rate;
  int d;

  Real operator()(const RealVector& q) const {
    Real div = 0.0, ent = 0.0;
    for (Index i = 0; i < q.size(); ++i) {
      if (q[i] <= 0.0) continue;
      div += q[i] * (std::log(q[i]) - std::log(p[i]));
      ent += -q[i] * std::log(q[i]);
    }
    const Real ln_d = std::log(static_cast<Real>(d));
    div /= ln_d;
    ent /= ln_d;
    return div + std::max(0.0, 1.0 - ent - rate);
  }

  RealVector gradient(const RealVector& q) const {
    const Real ln_d = std::log(static_cast<Real>(d));
    Real ent = 0.0;
    for (Index i = 0; i < q.size(); ++i)
      if (q[i] > 0.0) ent += -q[i] * std::log(q[i]) / ln_d;
    const bool active = 1.0 - ent - rate > 0.0;
    RealVector g(q.size());
    for (Index i = 0; i < q.size(); ++i) {
      const Real qi = std::max(q[i], 1e-18);
      g[i] = (std::log(qi / p[i]) + 1.0) / ln_d;
      if (active) g[i] += (std::log(qi) + 1.0) / ln_d;
    }
    return g;
  }
};

RealVector project_to_simplex(RealVector v) {
  RealVector u = v;
  std::sort(u.data(), u.data() + u.size(), std::greater<Real>());
  Real cumulative = 0.0, tau = 0.0;
  int support = 0;
  for (Index j = 0; j < u.size(); ++j) {
    cumulative += u[j];
    const Real candidate = (cumulative - 1.0) / static_cast<Real>(j + 1);
    if (u[j] - candidate > 0.0) {
      tau = candidate;
      support = static_cast<int>(j) + 1;
    }
  }
  (void)support;
  for (Index i = 0; i < v.size(); ++i) v[i] = std::max(v[i] - tau, 0.0);
  return v;
}

Real minimize_from(const ExponentObjective& f, RealVector q) {
  Real value = f(q);
  Real step = 0.25;
  int stale = 0;
  for (int iter = 0; iter < 20000 && stale < 60; ++iter) {
    const RealVector g = f.gradient(q);
    bool improved = false;
    Real trial_step = step;
    for (int bt = 0; bt < 40; ++bt) {
      RealVector candidate = project_to_simplex(q - trial_step * g);
      const Real candidate_value = f(candidate);
      if (candidate_value < value - 1e-15) {
        q = std::move(candidate);
        value = candidate_value;
        step = std::min(trial_step * 1.5, 1.0);
        improved = true;
        break;
      }
      trial_step *= 0.5;
    }
    stale = improved ? 0 : stale + 1;
  }
  return value;
}

}  // namespace

Real error_exponent(Real rate, const RealVector& single_letter, int d) {
  if (rate < -1e-12 || rate > 1.0 + 1e-12)
    throw ValidationError("error_exponent: rate must lie in [0, 1]");
  rate = std::min(std::max(rate, 0.0), 1.0);
  if (single_letter.size() != static_cast<Index>(d) * d)
    throw DimensionError("error_exponent: table must have d^2 entries");
  check_prob_vector(single_letter, "error_exponent");

  // Q must be absolutely continuous w.r.t. P: restrict to the support.
  std::vector<Index> support;
  for (Index i = 0; i < single_letter.size(); ++i)
    if (single_letter[i] > 0.0) support.push_back(i);
  const Index m = static_cast<Index>(support.size());
  RealVector p(m);
  for (Index i = 0; i < m; ++i) p[i] = single_letter[support[i]];

  if (m == 1) return std::max(0.0, 1.0 - rate);

  const ExponentObjective objective{p, rate, d};
  Real best = objective(p);  // start at Q = P
  best = std::min(best, minimize_from(objective, p));
  best = std::min(best, minimize_from(objective, RealVector::Constant(m, 1.0 / static_cast<Real>(m))));
  Rng rng(0x5eedULL);
  for (int s = 0; s < 20; ++s) {
    std::exponential_distribution<Real> expo(1.0);
    RealVector q(m);
    for (Index i = 0; i < m; ++i) q[i] = expo(rng);
    q /= q.sum();
    best = std::min(best, minimize_from(objective, q));
  }
  return std::max(best, 0.0);
}

BoundReport distillation_bound(const PauliDistribution& dist) {
  BoundReport report;
  switch (dist.form()) {
    case PauliDistribution::Form::IID: {
      report.derived = true;
      report.kind = "hashing";
      report.value = hashing_bound(dist.single_letter(), dist.d());
      break;
    }
    case PauliDistribution::Form::Explicit: {
      if (dist.n() == 1) {
        report.derived = true;
        report.kind = "hashing";
        report.value = hashing_bound(dist.to_explicit(), dist.d());
      } else {
        report.note = "no bound available: explicit tables with n > 1 have no single-letter form";
      }
      break;
    }
    case PauliDistribution::Form::Markov: {
      const MarkovAnalysis analysis = analyze_chain(dist.transition());
      // Locate the class holding the initial support.
      int cls_idx = -1;
      bool split = false;
      for (Index u = 0; u < dist.initial().size(); ++u) {
        if (dist.initial()[u] <= 0.0) continue;
        const int c = analysis.class_index[u];
        if (cls_idx < 0) cls_idx = c;
        else if (cls_idx != c) split = true;
      }
      if (split) {
        report.note = "no bound available: initial distribution spans multiple classes";
        break;
      }
      const MarkovClass& cls = analysis.classes[cls_idx];
      if (!cls.closed) {
        report.note = "no bound available: initial support lies in a non-closed class";
        break;
      }
      report.derived = true;
      report.kind = "markov";
      report.value = markov_bound(dist.transition(), cls.stationary, dist.d());
      if (!analysis.irreducible) report.note = "reducible chain: bound taken on the closed class of the initial support";
      break;
    }
  }
  if (report.derived && report.value <= 0.0) report.vacuous = true;
  return report;
}

}  // namespace qdistill
