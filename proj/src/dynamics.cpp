// Copyright 2026 The qrnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrnet/dynamics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace qrnet {

namespace {

constexpr Complex kImag(0.0, 1.0);

std::vector<Index> site_strides(const CompositeSpace& space) {
  const auto& dims = space.shape.dims;
  std::vector<Index> strides(dims.size());
  Index s = 1;
  for (size_t k = dims.size(); k-- > 0;) {
    strides[k] = s;
    s *= dims[k];
  }
  return strides;
}

// Accumulates c * (x_p^dag x_q + x_q^dag x_p) with x the site-local lowering
// operator, enumerating basis states directly instead of materializing
// embedded factors.
void add_hopping(std::vector<Eigen::Triplet<Complex>>& triplets,
                 const CompositeSpace& space, const std::vector<Index>& strides,
                 int p, int q, double c) {
  const Index dim = space.dim();
  const Index d_p = space.shape.dims[static_cast<size_t>(p)];
  const Index d_q = space.shape.dims[static_cast<size_t>(q)];
  const Index stride_p = strides[static_cast<size_t>(p)];
  const Index stride_q = strides[static_cast<size_t>(q)];
  for (Index s = 0; s < dim; ++s) {
    const Index dp = (s / stride_p) % d_p;
    const Index dq = (s / stride_q) % d_q;
    if (dq < 1 || dp + 1 >= d_p) continue;
    const Index t = s + stride_p - stride_q;
    const double amp = c * std::sqrt(static_cast<double>(dp + 1)) *
                       std::sqrt(static_cast<double>(dq));
    triplets.emplace_back(t, s, Complex(amp, 0.0));
    triplets.emplace_back(s, t, Complex(amp, 0.0));
  }
}

}  // namespace

ReservoirParams sample_reservoir(Rng& rng, double p_ratio) {
  ReservoirParams params;
  params.J = RealMatrix::Zero(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      params.J(i, j) = params.J(j, i) = rng.uniform(-1.0, 1.0);
  const CompositeSpace space = CompositeSpace::qubits(6);
  const EigResult eig = herm_eig(reservoir_hamiltonian(params.J, space));
  params.gamma = eig.eigenvalues.cwiseAbs().maxCoeff();
  params.pump = p_ratio * params.gamma;
  return params;
}

CouplingParams sample_coupling(Rng& rng, double f, double tau) {
  CouplingParams params;
  params.W = RealVector(6);
  for (int j = 0; j < 6; ++j) params.W(j) = rng.uniform(-1.0, 1.0);
  params.f = f;
  params.tau = tau;
  return params;
}

Matrix reservoir_hamiltonian(const RealMatrix& J, const CompositeSpace& space) {
  const Index dim = space.dim();
  const auto strides = site_strides(space);
  std::vector<Eigen::Triplet<Complex>> triplets;
  // Sum over unordered pairs only; any double counting in alternative
  // conventions is absorbed into the scale of J and hence into gamma.
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (J(i, j) != 0.0) add_hopping(triplets, space, strides, i, j, J(i, j));
  SparseMatrix h(dim, dim);
  h.setFromTriplets(triplets.begin(), triplets.end());
  return Matrix(h);
}

Matrix interaction_hamiltonian(const CouplingParams& params,
                               const CompositeSpace& joint) {
  if (joint.n_sites() != 8)
    throw std::invalid_argument("interaction_hamiltonian: expected 6+2 subsystems");
  const Index dim = joint.dim();
  const auto strides = site_strides(joint);
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (int k = 6; k <= 7; ++k)
    for (int j = 0; j < 6; ++j)
      add_hopping(triplets, joint, strides, k, j, params.f * params.W(j));
  SparseMatrix h(dim, dim);
  h.setFromTriplets(triplets.begin(), triplets.end());
  return Matrix(h);
}

Matrix lindblad_rhs(const Matrix& rho, const Matrix& h,
                    const std::vector<Collapse>& collapse) {
  Matrix out = -kImag * (h * rho - rho * h);
  for (const Collapse& c : collapse) {
    const Matrix xd = c.op.adjoint();
    const Matrix xdx = xd * c.op;
    out += 0.5 * c.rate * (2.0 * c.op * rho * xd - xdx * rho - rho * xdx);
  }
  return out;
}

LindbladPropagator::LindbladPropagator(const Matrix& h,
                                       const std::vector<Collapse>& collapse,
                                       double dt_safety)
    : dt_safety_(dt_safety) {
  h_ = h.sparseView(1e-14, 1.0);
  for (const Collapse& c : collapse) {
    SparseCollapse sc;
    sc.op = c.op.sparseView(1e-14, 1.0);
    sc.op_dag = SparseMatrix(sc.op.adjoint());
    sc.op_dag_op = SparseMatrix(sc.op_dag * sc.op);
    sc.rate = c.rate;
    collapse_.push_back(std::move(sc));
  }
  // Step rule uses gamma + P, i.e. the two largest distinct rates, not their
  // multiplicity over the six qubits.
  double r1 = 0.0, r2 = 0.0;
  for (const Collapse& c : collapse) {
    if (c.rate > r1) {
      r2 = r1;
      r1 = c.rate;
    } else if (c.rate > r2 && c.rate < r1) {
      r2 = c.rate;
    }
  }
  rate_bound_ = r1 + r2;

  // Spectral norm of H by power iteration on the sparse matrix; deterministic
  // start vector.
  const Index dim = h.rows();
  if (h_.nonZeros() > 0) {
    Rng rng(0x9E3779B9u, 42);
    Vector v(dim);
    for (Index i = 0; i < dim; ++i) v(i) = Complex(rng.normal(), rng.normal());
    v.normalize();
    double norm = 0.0;
    for (int it = 0; it < 100; ++it) {
      Vector w = h_ * v;
      const double wn = w.norm();
      if (wn == 0.0) break;
      w /= wn;
      if (std::abs(wn - norm) < 1e-6 * std::max(wn, 1.0) && it > 5) {
        norm = wn;
        break;
      }
      norm = wn;
      v = std::move(w);
    }
    h_norm_ = norm * 1.05;  // small headroom for power-iteration slack
  }
}

double LindbladPropagator::step_size(double t_total, int* n_steps) const {
  const double scale = h_norm_ + rate_bound_;
  const double dt_max = scale > 0.0 ? dt_safety_ / scale : t_total;
  const int n = std::max(1, static_cast<int>(std::ceil(t_total / dt_max)));
  if (n_steps != nullptr) *n_steps = n;
  return t_total / n;
}

Matrix LindbladPropagator::rhs(const Matrix& rho) const {
  Matrix out = -kImag * (h_ * rho - rho * h_);
  for (const SparseCollapse& c : collapse_) {
    const Matrix x_rho = c.op * rho;
    out += c.rate * (x_rho * c.op_dag) -
           (0.5 * c.rate) * (c.op_dag_op * rho + rho * c.op_dag_op);
  }
  return out;
}

Matrix LindbladPropagator::rhs_adjoint(const Matrix& obs) const {
  Matrix out = kImag * (h_ * obs - obs * h_);
  for (const SparseCollapse& c : collapse_) {
    const Matrix xd_obs = c.op_dag * obs;
    out += c.rate * (xd_obs * c.op) -
           (0.5 * c.rate) * (c.op_dag_op * obs + obs * c.op_dag_op);
  }
  return out;
}

Matrix LindbladPropagator::propagate(Matrix rho, double t_total,
                                     const StepCallback& on_step) const {
  if (t_total < 0.0) throw std::invalid_argument("propagate: negative duration");
  if (t_total == 0.0) return rho;
  const double trace0 = rho.trace().real();
  int n_steps = 0;
  const double dt = step_size(t_total, &n_steps);
  for (int step = 0; step < n_steps; ++step) {
    const Matrix k1 = rhs(rho);
    const Matrix k2 = rhs(rho + (0.5 * dt) * k1);
    const Matrix k3 = rhs(rho + (0.5 * dt) * k2);
    const Matrix k4 = rhs(rho + dt * k3);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + rho.adjoint().eval());
    if (on_step) on_step(static_cast<double>(step + 1) * dt, rho);
  }
  if (std::abs(rho.trace().real() - trace0) > 1e-7)
    throw std::runtime_error(
        "propagate: trace drift beyond 1e-7; reduce dt_safety");
  return rho;
}

Matrix LindbladPropagator::propagate_adjoint(Matrix obs, double t_total) const {
  if (t_total <= 0.0) return obs;
  int n_steps = 0;
  const double dt = step_size(t_total, &n_steps);
  for (int step = 0; step < n_steps; ++step) {
    const Matrix k1 = rhs_adjoint(obs);
    const Matrix k2 = rhs_adjoint(obs + (0.5 * dt) * k1);
    const Matrix k3 = rhs_adjoint(obs + (0.5 * dt) * k2);
    const Matrix k4 = rhs_adjoint(obs + dt * k3);
    obs += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    obs = 0.5 * (obs + obs.adjoint().eval());
  }
  return obs;
}

std::vector<Collapse> reservoir_collapse(const ReservoirParams& params,
                                         const CompositeSpace& space) {
  const Matrix b = lowering_op(2);
  std::vector<Collapse> out;
  for (int j = 0; j < 6; ++j) {
    const Matrix b_j = embed(b, j, space);
    out.push_back({b_j, params.gamma});
    out.push_back({b_j.adjoint(), params.pump});
  }
  return out;
}

EquilibrationResult equilibrate(const Matrix& rho0, const ReservoirParams& params,
                                const EvolutionConfig& config, int stride) {
  const CompositeSpace space = CompositeSpace::qubits(6);
  if (rho0.rows() != space.dim())
    throw std::invalid_argument("equilibrate: expected a 64x64 reservoir state");
  const Matrix h = reservoir_hamiltonian(params.J, space);
  const LindbladPropagator prop(h, reservoir_collapse(params, space),
                                config.dt_safety);

  std::vector<Matrix> n_ops;
  for (int j = 0; j < 6; ++j) n_ops.push_back(number_op(j, space));

  EquilibrationResult result;
  std::vector<double> times;
  std::vector<std::array<double, 6>> rows;
  auto record = [&](double t, const Matrix& rho) {
    std::array<double, 6> row{};
    for (int j = 0; j < 6; ++j)
      row[static_cast<size_t>(j)] = (rho * n_ops[static_cast<size_t>(j)]).trace().real();
    times.push_back(t);
    rows.push_back(row);
  };

  record(0.0, rho0);
  int step_index = 0;
  result.rho = prop.propagate(rho0, config.t_equilibration,
                              [&](double t, const Matrix& rho) {
                                ++step_index;
                                if (step_index % stride == 0) record(t, rho);
                              });

  result.populations.times = std::move(times);
  result.populations.values.resize(static_cast<Index>(rows.size()), 6);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int j = 0; j < 6; ++j)
      result.populations.values(static_cast<Index>(r), j) = rows[r][static_cast<size_t>(j)];
  return result;
}

namespace {

// Segments of the reading window: H_R + H_I while the switch is on, H_R alone
// afterwards.
struct ReadingSegment {
  Matrix h;
  double duration;
};

std::vector<ReadingSegment> reading_segments(const CouplingParams& coupling,
                                             const ReservoirParams& params,
                                             const CompositeSpace& joint,
                                             double t_reading) {
  const Matrix h_r = reservoir_hamiltonian(params.J, joint);
  const double on = std::min(t_reading, coupling.tau);
  std::vector<ReadingSegment> segments;
  if (on > 0.0)
    segments.push_back({h_r + interaction_hamiltonian(coupling, joint), on});
  if (t_reading > coupling.tau)
    segments.push_back({h_r, t_reading - coupling.tau});
  return segments;
}

}  // namespace

Matrix read_teacher(const Matrix& reservoir_rho, const TeacherState& teacher,
                    const CouplingParams& coupling, const ReservoirParams& params,
                    const EvolutionConfig& config,
                    const LindbladPropagator::StepCallback& on_step) {
  const Index teacher_dim = teacher.shape.dims.at(0);
  if (teacher.shape.dims.at(1) != teacher_dim)
    throw std::invalid_argument("read_teacher: teacher factors must match");
  const CompositeSpace joint = CompositeSpace::reservoir_with_teacher(teacher_dim);
  if (reservoir_rho.rows() * teacher.rho.rows() != joint.dim())
    throw std::invalid_argument("read_teacher: dimension mismatch");

  Matrix rho = kron(reservoir_rho, teacher.rho);
  const auto collapse = reservoir_collapse(params, joint);
  double t = 0.0;
  for (const ReadingSegment& seg :
       reading_segments(coupling, params, joint, config.t_reading)) {
    const LindbladPropagator prop(seg.h, collapse, config.dt_safety);
    const double t_base = t;
    LindbladPropagator::StepCallback shifted;
    if (on_step)
      shifted = [&on_step, t_base](double dt, const Matrix& r) {
        on_step(t_base + dt, r);
      };
    rho = prop.propagate(std::move(rho), seg.duration, shifted);
    t += seg.duration;
  }
  return partial_trace(rho, joint.shape, {0, 1, 2, 3, 4, 5});
}

namespace {

// Total-excitation grading of a composite space: sector = sum of site digits.
struct Grading {
  std::vector<std::vector<Index>> sectors;  // basis indices per sector
  std::vector<int> sector_of;               // per basis index
  std::vector<Index> local_of;              // position within its sector
};

Grading grade_by_excitation(const CompositeSpace& space) {
  const auto strides = site_strides(space);
  const Index dim = space.dim();
  Grading g;
  g.sector_of.resize(static_cast<size_t>(dim));
  g.local_of.resize(static_cast<size_t>(dim));
  int max_sector = 0;
  for (Index s = 0; s < dim; ++s) {
    int n = 0;
    for (size_t k = 0; k < strides.size(); ++k)
      n += static_cast<int>((s / strides[k]) % space.shape.dims[k]);
    g.sector_of[static_cast<size_t>(s)] = n;
    max_sector = std::max(max_sector, n);
  }
  g.sectors.resize(static_cast<size_t>(max_sector) + 1);
  for (Index s = 0; s < dim; ++s) {
    auto& sector = g.sectors[static_cast<size_t>(g.sector_of[static_cast<size_t>(s)])];
    g.local_of[static_cast<size_t>(s)] = static_cast<Index>(sector.size());
    sector.push_back(s);
  }
  return g;
}

// Adjoint-flow fast path. The hopping Hamiltonians conserve the total
// excitation number and each site lowering/raising dissipator shifts every
// basis state by exactly one quantum, so an observable that is block diagonal
// in the excitation grading stays block diagonal under the adjoint generator.
// Propagating the diagonal blocks is algebraically identical to the dense
// evolution but touches only a fraction of the matrix.
class GradedAdjointPropagator {
 public:
  GradedAdjointPropagator(const Matrix& h, const std::vector<Collapse>& collapse,
                          const Grading& grading)
      : grading_(grading) {
    const Index dim = h.rows();
    const size_t n_sectors = grading.sectors.size();

    // L = iH - K/2 with K the sum of rate * op^dag op; the adjoint rhs is
    // L A + A L^dag + sum rate op^dag A op.
    SparseMatrix hs = h.sparseView(1e-14, 1.0);
    SparseMatrix k(dim, dim);
    for (const Collapse& c : collapse) {
      const SparseMatrix sp = c.op.sparseView(1e-14, 1.0);
      k += SparseMatrix(c.rate * (SparseMatrix(sp.adjoint()) * sp));
    }
    const SparseMatrix l = SparseMatrix(kImag * hs) - SparseMatrix(0.5 * k);

    l_.resize(n_sectors);
    ldag_.resize(n_sectors);
    std::vector<std::vector<Eigen::Triplet<Complex>>> l_triplets(n_sectors);
    for (int col = 0; col < l.outerSize(); ++col)
      for (SparseMatrix::InnerIterator it(l, col); it; ++it) {
        const int sr = grading.sector_of[static_cast<size_t>(it.row())];
        const int sc = grading.sector_of[static_cast<size_t>(it.col())];
        if (sr != sc) {
          usable_ = false;  // H or K breaks the grading
          return;
        }
        l_triplets[static_cast<size_t>(sr)].emplace_back(
            grading.local_of[static_cast<size_t>(it.row())],
            grading.local_of[static_cast<size_t>(it.col())], it.value());
      }
    for (size_t n = 0; n < n_sectors; ++n) {
      const Index d = static_cast<Index>(grading.sectors[n].size());
      SparseMatrix block(d, d);
      block.setFromTriplets(l_triplets[n].begin(), l_triplets[n].end());
      l_[n] = block;
      ldag_[n] = SparseMatrix(block.adjoint());
    }

    // Per channel: a uniform sector shift and one rectangular block per
    // source sector (rows in sector n + shift, columns in sector n).
    for (const Collapse& c : collapse) {
      Channel channel;
      channel.rate = c.rate;
      const SparseMatrix sp = c.op.sparseView(1e-14, 1.0);
      int shift = 0;
      bool shift_set = false;
      std::vector<std::vector<Eigen::Triplet<Complex>>> blocks(n_sectors);
      for (int col = 0; col < sp.outerSize(); ++col)
        for (SparseMatrix::InnerIterator it(sp, col); it; ++it) {
          const int sr = grading.sector_of[static_cast<size_t>(it.row())];
          const int sc = grading.sector_of[static_cast<size_t>(it.col())];
          if (!shift_set) {
            shift = sr - sc;
            shift_set = true;
          } else if (sr - sc != shift) {
            usable_ = false;  // mixed shifts would smear the blocks
            return;
          }
          blocks[static_cast<size_t>(sc)].emplace_back(
              grading.local_of[static_cast<size_t>(it.row())],
              grading.local_of[static_cast<size_t>(it.col())], it.value());
        }
      channel.shift = shift;
      channel.block.resize(n_sectors);
      channel.block_dag.resize(n_sectors);
      for (size_t n = 0; n < n_sectors; ++n) {
        if (blocks[n].empty()) continue;
        const size_t m = static_cast<size_t>(static_cast<int>(n) + shift);
        SparseMatrix block(static_cast<Index>(grading.sectors[m].size()),
                           static_cast<Index>(grading.sectors[n].size()));
        block.setFromTriplets(blocks[n].begin(), blocks[n].end());
        channel.block[n] = block;
        channel.block_dag[n] = SparseMatrix(block.adjoint());
      }
      channels_.push_back(std::move(channel));
    }
  }

  bool usable() const { return usable_; }

  // Splits a block-diagonal observable into its sector blocks; returns false
  // when the off-block residue is non-negligible.
  bool decompose(const Matrix& a, std::vector<Matrix>* blocks) const {
    double off_block = 0.0;
    for (Index r = 0; r < a.rows(); ++r)
      for (Index c = 0; c < a.cols(); ++c)
        if (grading_.sector_of[static_cast<size_t>(r)] !=
            grading_.sector_of[static_cast<size_t>(c)])
          off_block = std::max(off_block, std::abs(a(r, c)));
    if (off_block > 1e-12) return false;
    const size_t n_sectors = grading_.sectors.size();
    blocks->assign(n_sectors, Matrix());
    for (size_t n = 0; n < n_sectors; ++n) {
      const auto& idx = grading_.sectors[n];
      Matrix block(idx.size(), idx.size());
      for (size_t r = 0; r < idx.size(); ++r)
        for (size_t c = 0; c < idx.size(); ++c)
          block(static_cast<Index>(r), static_cast<Index>(c)) = a(idx[r], idx[c]);
      (*blocks)[n] = std::move(block);
    }
    return true;
  }

  Matrix reassemble(const std::vector<Matrix>& blocks, Index dim) const {
    Matrix a = Matrix::Zero(dim, dim);
    for (size_t n = 0; n < grading_.sectors.size(); ++n) {
      const auto& idx = grading_.sectors[n];
      for (size_t r = 0; r < idx.size(); ++r)
        for (size_t c = 0; c < idx.size(); ++c)
          a(idx[r], idx[c]) = blocks[n](static_cast<Index>(r), static_cast<Index>(c));
    }
    return a;
  }

  void propagate(std::vector<Matrix>* blocks, double dt, int n_steps) const {
    for (int step = 0; step < n_steps; ++step) {
      const std::vector<Matrix> k1 = rhs(*blocks);
      const std::vector<Matrix> k2 = rhs(shifted(*blocks, k1, 0.5 * dt));
      const std::vector<Matrix> k3 = rhs(shifted(*blocks, k2, 0.5 * dt));
      const std::vector<Matrix> k4 = rhs(shifted(*blocks, k3, dt));
      for (size_t n = 0; n < blocks->size(); ++n) {
        Matrix& a = (*blocks)[n];
        a += (dt / 6.0) * (k1[n] + 2.0 * k2[n] + 2.0 * k3[n] + k4[n]);
        a = 0.5 * (a + a.adjoint().eval());
      }
    }
  }

 private:
  struct Channel {
    double rate = 0.0;
    int shift = 0;
    std::vector<SparseMatrix> block;      // sector n -> sector n + shift
    std::vector<SparseMatrix> block_dag;
  };

  static std::vector<Matrix> shifted(const std::vector<Matrix>& a,
                                     const std::vector<Matrix>& k, double c) {
    std::vector<Matrix> out(a.size());
    for (size_t n = 0; n < a.size(); ++n) out[n] = a[n] + c * k[n];
    return out;
  }

  std::vector<Matrix> rhs(const std::vector<Matrix>& a) const {
    const size_t n_sectors = a.size();
    std::vector<Matrix> out(n_sectors);
    for (size_t n = 0; n < n_sectors; ++n)
      out[n] = l_[n] * a[n] + a[n] * ldag_[n];
    for (const Channel& ch : channels_) {
      for (size_t n = 0; n < n_sectors; ++n) {
        if (ch.block[n].nonZeros() == 0) continue;
        const size_t m = static_cast<size_t>(static_cast<int>(n) + ch.shift);
        out[n].noalias() +=
            ch.rate * (ch.block_dag[n] * (a[m] * ch.block[n]).eval());
      }
    }
    return out;
  }

  const Grading& grading_;
  std::vector<SparseMatrix> l_;
  std::vector<SparseMatrix> ldag_;
  std::vector<Channel> channels_;
  bool usable_ = true;
};

}  // namespace

std::vector<Matrix> teacher_feature_operators(
    const Matrix& reservoir_rho, const std::vector<Matrix>& observables,
    const CouplingParams& coupling, const ReservoirParams& params,
    const EvolutionConfig& config, Index teacher_dim) {
  const CompositeSpace joint = CompositeSpace::reservoir_with_teacher(teacher_dim);
  const Index d_teach = teacher_dim * teacher_dim;
  const Index d_res = reservoir_rho.rows();
  const auto collapse = reservoir_collapse(params, joint);
  auto segments = reading_segments(coupling, params, joint, config.t_reading);
  const Grading grading = grade_by_excitation(joint);

  // The generic propagator supplies the step rule (and the fallback when the
  // grading shortcut does not apply to an observable).
  struct Segment {
    LindbladPropagator generic;
    GradedAdjointPropagator graded;
    double duration;
  };
  std::vector<Segment> prepared;
  for (auto it = segments.rbegin(); it != segments.rend(); ++it)
    prepared.push_back({LindbladPropagator(it->h, collapse, config.dt_safety),
                        GradedAdjointPropagator(it->h, collapse, grading),
                        it->duration});

  std::vector<Matrix> out;
  out.reserve(observables.size());
  const Matrix id_teach = Matrix::Identity(d_teach, d_teach);
  for (const Matrix& obs : observables) {
    Matrix a = kron(obs, id_teach);
    std::vector<Matrix> blocks;
    bool graded_ok = !prepared.empty() && prepared.front().graded.usable() &&
                     prepared.front().graded.decompose(a, &blocks);
    for (const Segment& seg : prepared) graded_ok = graded_ok && seg.graded.usable();
    if (graded_ok) {
      for (const Segment& seg : prepared) {
        int n_steps = 0;
        const double dt = seg.generic.step_size(seg.duration, &n_steps);
        seg.graded.propagate(&blocks, dt, n_steps);
      }
      a = prepared.front().graded.reassemble(blocks, joint.dim());
    } else {
      for (const Segment& seg : prepared)
        a = seg.generic.propagate_adjoint(std::move(a), seg.duration);
    }
    // Contract the reservoir side with rho_reservoir:
    //   C[j2,i2] = sum_{i1,j1} rho_res[i1,j1] A[(j1,j2),(i1,i2)].
    Matrix c = Matrix::Zero(d_teach, d_teach);
    for (Index i1 = 0; i1 < d_res; ++i1)
      for (Index j1 = 0; j1 < d_res; ++j1) {
        const Complex w = reservoir_rho(i1, j1);
        if (std::abs(w) < 1e-16) continue;
        c += w * a.block(j1 * d_teach, i1 * d_teach, d_teach, d_teach);
      }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace qrnet
