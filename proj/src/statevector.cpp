// SPDX-License-Identifier: MIT
#include "ghzec/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ghzec/rng.hpp"

namespace ghzec {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

std::uint64_t qmask(int n, int q) { return 1ull << (n - 1 - q); }

void check_register(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw CapacityError("register of " + std::to_string(n) +
                        " qubits is outside the supported range 1.." +
                        std::to_string(kMaxQubits));
  }
}

void check_qubit(int n, int q) {
  if (q < 0 || q >= n) {
    throw InvalidGateError("qubit " + std::to_string(q) +
                           " out of range for a " + std::to_string(n) +
                           "-qubit state");
  }
}

void check_distinct(std::span<const int> qs) {
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      if (qs[i] == qs[j]) {
        throw InvalidGateError("gate qubits must be distinct, got " +
                               std::to_string(qs[i]) + " twice");
      }
    }
  }
}

void check_unitary(const std::vector<cdouble>& m, int d) {
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      cdouble acc = 0.0;
      for (int k = 0; k < d; ++k) acc += std::conj(m[k * d + r]) * m[k * d + c];
      const cdouble want = (r == c) ? 1.0 : 0.0;
      if (std::abs(acc - want) > kAmpTolerance) {
        throw InvalidGateError("custom gate matrix is not unitary within 1e-12");
      }
    }
  }
}

void validate_gate(int n, const Gate& g) {
  const std::vector<int> qs = g.qubits();
  for (int q : qs) check_qubit(n, q);
  check_distinct(qs);
}

/// Inserts a zero bit at the position of mask `m` (bits at or above m shift up).
inline std::uint64_t expand1(std::uint64_t i, std::uint64_t m) {
  return ((i & ~(m - 1)) << 1) | (i & (m - 1));
}

/// Inserts zero bits at every mask position; masks must be ascending.
inline std::uint64_t expand_sorted(std::uint64_t i, const std::uint64_t* masks,
                                   int count) {
  for (int j = 0; j < count; ++j) i = expand1(i, masks[j]);
  return i;
}

void h_kernel(std::vector<cdouble>& a, int n, int q) {
  const std::uint64_t m = qmask(n, q);
  const std::uint64_t half = a.size() >> 1;
  for (std::uint64_t i = 0; i < half; ++i) {
    const std::uint64_t i0 = expand1(i, m);
    const std::uint64_t i1 = i0 | m;
    const cdouble a0 = a[i0];
    const cdouble a1 = a[i1];
    a[i0] = (a0 + a1) * kInvSqrt2;
    a[i1] = (a0 - a1) * kInvSqrt2;
  }
}

void cnot_kernel(std::vector<cdouble>& a, int n, int control, int target) {
  const std::uint64_t mc = qmask(n, control);
  const std::uint64_t mt = qmask(n, target);
  std::uint64_t masks[2] = {std::min(mc, mt), std::max(mc, mt)};
  const std::uint64_t quarter = a.size() >> 2;
  for (std::uint64_t i = 0; i < quarter; ++i) {
    const std::uint64_t i0 = expand_sorted(i, masks, 2) | mc;
    std::swap(a[i0], a[i0 | mt]);
  }
}

void cz_kernel(std::vector<cdouble>& a, int n, int qa, int qb) {
  const std::uint64_t ma = qmask(n, qa);
  const std::uint64_t mb = qmask(n, qb);
  std::uint64_t masks[2] = {std::min(ma, mb), std::max(ma, mb)};
  const std::uint64_t quarter = a.size() >> 2;
  for (std::uint64_t i = 0; i < quarter; ++i) {
    const std::uint64_t idx = expand_sorted(i, masks, 2) | ma | mb;
    a[idx] = -a[idx];
  }
}

void toffoli_kernel(std::vector<cdouble>& a, int n, int c0, int c1,
                    int target) {
  std::uint64_t masks[3] = {qmask(n, c0), qmask(n, c1), qmask(n, target)};
  const std::uint64_t mc0 = masks[0];
  const std::uint64_t mc1 = masks[1];
  const std::uint64_t mt = masks[2];
  std::sort(masks, masks + 3);
  const std::uint64_t eighth = a.size() >> 3;
  for (std::uint64_t i = 0; i < eighth; ++i) {
    const std::uint64_t i0 = expand_sorted(i, masks, 3) | mc0 | mc1;
    std::swap(a[i0], a[i0 | mt]);
  }
}

void u1_kernel(std::vector<cdouble>& a, int n, int q,
               const std::vector<cdouble>& m) {
  const std::uint64_t mq = qmask(n, q);
  const std::uint64_t half = a.size() >> 1;
  for (std::uint64_t i = 0; i < half; ++i) {
    const std::uint64_t i0 = expand1(i, mq);
    const std::uint64_t i1 = i0 | mq;
    const cdouble a0 = a[i0];
    const cdouble a1 = a[i1];
    a[i0] = m[0] * a0 + m[1] * a1;
    a[i1] = m[2] * a0 + m[3] * a1;
  }
}

void u2_kernel(std::vector<cdouble>& a, int n, int qa, int qb,
               const std::vector<cdouble>& m) {
  const std::uint64_t ma = qmask(n, qa);  // high bit of the gate-local basis
  const std::uint64_t mb = qmask(n, qb);
  std::uint64_t masks[2] = {std::min(ma, mb), std::max(ma, mb)};
  const std::uint64_t quarter = a.size() >> 2;
  for (std::uint64_t i = 0; i < quarter; ++i) {
    const std::uint64_t i00 = expand_sorted(i, masks, 2);
    const std::uint64_t i01 = i00 | mb;
    const std::uint64_t i10 = i00 | ma;
    const std::uint64_t i11 = i00 | ma | mb;
    const cdouble v0 = a[i00];
    const cdouble v1 = a[i01];
    const cdouble v2 = a[i10];
    const cdouble v3 = a[i11];
    a[i00] = m[0] * v0 + m[1] * v1 + m[2] * v2 + m[3] * v3;
    a[i01] = m[4] * v0 + m[5] * v1 + m[6] * v2 + m[7] * v3;
    a[i10] = m[8] * v0 + m[9] * v1 + m[10] * v2 + m[11] * v3;
    a[i11] = m[12] * v0 + m[13] * v1 + m[14] * v2 + m[15] * v3;
  }
}

/// Applies a fused layer of CNOTs whose control set and target set are
/// disjoint.  Entries pair one control bit with the XOR of its target bits;
/// the layer is a self-inverse index permutation, applied via paired swaps.
void cx_layer_kernel(std::vector<cdouble>& a,
                     std::span<const std::pair<std::uint64_t, std::uint64_t>>
                         control_targets) {
  std::pair<std::uint64_t, std::uint64_t> active[kMaxQubits];
  int terms = 0;
  for (const auto& ct : control_targets) {
    if (ct.second != 0) active[terms++] = ct;
  }
  if (terms == 0) return;
  const std::uint64_t dim = a.size();
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    std::uint64_t x = 0;
    for (int j = 0; j < terms; ++j) {
      x ^= active[j].second &
           (0ull - static_cast<std::uint64_t>((idx & active[j].first) != 0));
    }
    const std::uint64_t other = idx ^ x;
    if (other > idx) std::swap(a[idx], a[other]);
  }
}

/// Toffoli(c0,c1,t) · CZ(z,t) · Toffoli(c0,c1,t) collapses to a pure sign
/// flip on |z=1, t XOR (c0 AND c1) = 1>; populations never move.
void sandwich_kernel(std::vector<cdouble>& a, int n, int c0, int c1, int t,
                     int z) {
  const std::uint64_t mz = qmask(n, z);
  const std::uint64_t mt = qmask(n, t);
  const std::uint64_t m0 = qmask(n, c0);
  const std::uint64_t m1 = qmask(n, c1);
  const std::uint64_t half = a.size() >> 1;
  for (std::uint64_t i = 0; i < half; ++i) {
    const std::uint64_t idx = expand1(i, mz) | mz;
    const bool t_set = (idx & mt) != 0;
    const bool cc = ((idx & m0) != 0) && ((idx & m1) != 0);
    if (t_set != cc) a[idx] = -a[idx];
  }
}

void dispatch_single(std::vector<cdouble>& a, int n, const Gate& g) {
  switch (g.kind) {
    case GateKind::kH:
      h_kernel(a, n, g.q0);
      return;
    case GateKind::kCnot:
      cnot_kernel(a, n, g.q0, g.q1);
      return;
    case GateKind::kCz:
      cz_kernel(a, n, g.q0, g.q1);
      return;
    case GateKind::kToffoli:
      toffoli_kernel(a, n, g.q0, g.q1, g.q2);
      return;
    case GateKind::kUnitary1:
      u1_kernel(a, n, g.q0, g.matrix);
      return;
    case GateKind::kUnitary2:
      u2_kernel(a, n, g.q0, g.q1, g.matrix);
      return;
  }
}

bool match_sandwich(const Gate& g0, const Gate& g1, const Gate& g2, int* z) {
  if (g0.kind != GateKind::kToffoli || g1.kind != GateKind::kCz ||
      g2.kind != GateKind::kToffoli) {
    return false;
  }
  if (g0.q2 != g2.q2) return false;
  const bool same_controls = (g0.q0 == g2.q0 && g0.q1 == g2.q1) ||
                             (g0.q0 == g2.q1 && g0.q1 == g2.q0);
  if (!same_controls) return false;
  const int t = g0.q2;
  int other = -1;
  if (g1.q0 == t) {
    other = g1.q1;
  } else if (g1.q1 == t) {
    other = g1.q0;
  } else {
    return false;
  }
  if (other == g0.q0 || other == g0.q1) return false;
  *z = other;
  return true;
}

}  // namespace

State State::zero(int n_qubits) {
  check_register(n_qubits);
  std::vector<cdouble> amps(1ull << n_qubits, 0.0);
  amps[0] = 1.0;
  return State(n_qubits, std::move(amps));
}

State State::basis(int n_qubits, std::uint64_t index) {
  check_register(n_qubits);
  if (index >= (1ull << n_qubits)) {
    throw InvalidStateError("basis index " + std::to_string(index) +
                            " out of range for " + std::to_string(n_qubits) +
                            " qubits");
  }
  std::vector<cdouble> amps(1ull << n_qubits, 0.0);
  amps[index] = 1.0;
  return State(n_qubits, std::move(amps));
}

State State::from_amplitudes(int n_qubits, std::vector<cdouble> amps) {
  check_register(n_qubits);
  if (amps.size() != (1ull << n_qubits)) {
    throw DimensionError("amplitude vector length " +
                         std::to_string(amps.size()) + " does not match 2^" +
                         std::to_string(n_qubits));
  }
  double sq = 0.0;
  for (const cdouble& c : amps) sq += std::norm(c);
  const double nr = std::sqrt(sq);
  if (std::abs(nr - 1.0) > 1e-8) {
    throw InvalidStateError("amplitude vector has norm " + std::to_string(nr) +
                            ", expected 1");
  }
  for (cdouble& c : amps) c /= nr;
  return State(n_qubits, std::move(amps));
}

cdouble State::amplitude(std::uint64_t index) const {
  if (index >= amps_.size()) {
    throw DimensionError("amplitude index out of range");
  }
  return amps_[index];
}

double State::norm() const noexcept {
  double sq = 0.0;
  for (const cdouble& c : amps_) sq += std::norm(c);
  return std::sqrt(sq);
}

Gate Gate::h(int target) { return Gate{GateKind::kH, target}; }

Gate Gate::cnot(int control, int target) {
  Gate g{GateKind::kCnot, control, target};
  check_distinct(g.qubits());
  return g;
}

Gate Gate::cz(int a, int b) {
  Gate g{GateKind::kCz, a, b};
  check_distinct(g.qubits());
  return g;
}

Gate Gate::toffoli(int control0, int control1, int target) {
  Gate g{GateKind::kToffoli, control0, control1, target};
  check_distinct(g.qubits());
  return g;
}

Gate Gate::unitary1(int target, const std::array<cdouble, 4>& m) {
  Gate g{GateKind::kUnitary1, target};
  g.matrix.assign(m.begin(), m.end());
  check_unitary(g.matrix, 2);
  return g;
}

Gate Gate::unitary2(int qa, int qb, const std::array<cdouble, 16>& m) {
  Gate g{GateKind::kUnitary2, qa, qb};
  g.matrix.assign(m.begin(), m.end());
  check_distinct(g.qubits());
  check_unitary(g.matrix, 4);
  return g;
}

std::vector<int> Gate::qubits() const {
  switch (kind) {
    case GateKind::kH:
    case GateKind::kUnitary1:
      return {q0};
    case GateKind::kCnot:
    case GateKind::kCz:
    case GateKind::kUnitary2:
      return {q0, q1};
    case GateKind::kToffoli:
      return {q0, q1, q2};
  }
  return {};
}

State apply_gate(State s, const Gate& g) {
  validate_gate(s.n_qubits_, g);
  dispatch_single(s.amps_, s.n_qubits_, g);
  return s;
}

State apply_sequence(State s, const GateSequence& seq) {
  std::vector<cdouble>& a = s.amps_;
  const int n = s.n_qubits_;
  const std::vector<Gate>& gs = seq.gates;
  std::size_t i = 0;
  while (i < gs.size()) {
    const Gate& g = gs[i];
    validate_gate(n, g);
    if (g.kind == GateKind::kCnot) {
      // Grow a maximal fusible run: every control stays outside the target
      // set and vice versa, so the run is one self-inverse XOR permutation
      // and fusing is bit-exact.
      std::uint64_t controls = 0;
      std::uint64_t targets = 0;
      std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;
      std::size_t j = i;
      while (j < gs.size() && gs[j].kind == GateKind::kCnot) {
        if (j != i) validate_gate(n, gs[j]);
        const std::uint64_t mc = qmask(n, gs[j].q0);
        const std::uint64_t mt = qmask(n, gs[j].q1);
        if ((mc & (targets | mt)) != 0 || (mt & controls) != 0) break;
        controls |= mc;
        targets |= mt;
        bool merged = false;
        for (auto& term : terms) {
          if (term.first == mc) {
            term.second ^= mt;
            merged = true;
            break;
          }
        }
        if (!merged) terms.emplace_back(mc, mt);
        ++j;
      }
      if (j - i >= 2) {
        cx_layer_kernel(a, terms);
        i = j;
        continue;
      }
      cnot_kernel(a, n, g.q0, g.q1);
      ++i;
      continue;
    }
    if (g.kind == GateKind::kToffoli && i + 2 < gs.size()) {
      int z = -1;
      if (match_sandwich(gs[i], gs[i + 1], gs[i + 2], &z)) {
        validate_gate(n, gs[i + 1]);
        validate_gate(n, gs[i + 2]);
        sandwich_kernel(a, n, g.q0, g.q1, g.q2, z);
        i += 3;
        continue;
      }
    }
    dispatch_single(a, n, g);
    ++i;
  }
  return s;
}

State tensor(const State& a, const State& b) {
  const int n = a.n_qubits() + b.n_qubits();
  check_register(n);
  std::vector<cdouble> out(1ull << n);
  const std::uint64_t db = b.dim();
  for (std::uint64_t ia = 0; ia < a.dim(); ++ia) {
    const cdouble va = a.amplitudes()[ia];
    for (std::uint64_t ib = 0; ib < db; ++ib) {
      out[ia * db + ib] = va * b.amplitudes()[ib];
    }
  }
  return State(n, std::move(out));
}

State insert_zero_qubits(const State& s, int position, int count) {
  const int n = s.n_qubits();
  if (position < 0 || position > n || count < 0) {
    throw DimensionError("insertion position " + std::to_string(position) +
                         " not in [0, " + std::to_string(n) + "]");
  }
  if (count == 0) return s;
  check_register(n + count);
  const int low_bits = n - position;
  const std::uint64_t low_mask = (1ull << low_bits) - 1;
  std::vector<cdouble> out(1ull << (n + count), 0.0);
  for (std::uint64_t idx = 0; idx < s.dim(); ++idx) {
    const std::uint64_t hi = idx >> low_bits;
    const std::uint64_t lo = idx & low_mask;
    out[(hi << (low_bits + count)) | lo] = s.amplitudes()[idx];
  }
  return State(n + count, std::move(out));
}

namespace {

struct KeepPlan {
  int kept;
  int rest;
  std::vector<std::uint64_t> keep_part;   // partial index per kept pattern
  std::vector<std::uint64_t> keep_masks;  // ascending masks of kept positions
};

KeepPlan make_keep_plan(const State& s, std::span<const int> keep,
                        int max_keep) {
  const int n = s.n_qubits();
  if (keep.empty()) {
    throw InvalidSubsetError("keep set must not be empty");
  }
  if (static_cast<int>(keep.size()) > max_keep) {
    throw InvalidSubsetError("keep set of " + std::to_string(keep.size()) +
                             " qubits exceeds the supported maximum of " +
                             std::to_string(max_keep));
  }
  for (std::size_t j = 0; j < keep.size(); ++j) {
    if (keep[j] < 0 || keep[j] >= n) {
      throw InvalidSubsetError("keep qubit " + std::to_string(keep[j]) +
                               " out of range");
    }
    if (j > 0 && keep[j] <= keep[j - 1]) {
      throw InvalidSubsetError("keep set must be strictly ascending");
    }
  }
  KeepPlan plan;
  plan.kept = static_cast<int>(keep.size());
  plan.rest = n - plan.kept;
  plan.keep_masks.reserve(plan.kept);
  for (int j = plan.kept - 1; j >= 0; --j) {
    plan.keep_masks.push_back(qmask(n, keep[j]));  // ascending bit positions
  }
  plan.keep_part.resize(1ull << plan.kept);
  for (std::uint64_t rr = 0; rr < plan.keep_part.size(); ++rr) {
    std::uint64_t part = 0;
    for (int j = 0; j < plan.kept; ++j) {
      if ((rr >> (plan.kept - 1 - j)) & 1ull) part |= qmask(n, keep[j]);
    }
    plan.keep_part[rr] = part;
  }
  return plan;
}

}  // namespace

DensityMatrix::DensityMatrix(int n_qubits)
    : n_qubits_(n_qubits), dim_(1ull << n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxDensityQubits) {
    throw CapacityError("density matrix on " + std::to_string(n_qubits) +
                        " qubits outside supported range 1.." +
                        std::to_string(kMaxDensityQubits));
  }
  m_.assign(dim_ * dim_, 0.0);
}

double DensityMatrix::trace_real() const noexcept {
  double acc = 0.0;
  for (std::uint64_t r = 0; r < dim_; ++r) acc += entry(r, r).real();
  return acc;
}

double DensityMatrix::max_hermiticity_defect() const noexcept {
  double worst = 0.0;
  for (std::uint64_t r = 0; r < dim_; ++r) {
    for (std::uint64_t c = r; c < dim_; ++c) {
      worst = std::max(worst,
                       std::abs(entry(r, c) - std::conj(entry(c, r))));
    }
  }
  return worst;
}

DensityMatrix reduced_density_matrix(const State& s,
                                     std::span<const int> keep) {
  const KeepPlan plan = make_keep_plan(s, keep, kMaxDensityQubits);
  DensityMatrix rho(plan.kept);
  const std::uint64_t kd = 1ull << plan.kept;
  std::vector<cdouble> v(kd);
  const std::span<const cdouble> amps = s.amplitudes();
  for (std::uint64_t e = 0; e < (1ull << plan.rest); ++e) {
    const std::uint64_t base =
        expand_sorted(e, plan.keep_masks.data(), plan.kept);
    for (std::uint64_t rr = 0; rr < kd; ++rr) {
      v[rr] = amps[base | plan.keep_part[rr]];
    }
    for (std::uint64_t r = 0; r < kd; ++r) {
      if (v[r] == cdouble(0.0)) continue;
      for (std::uint64_t c = 0; c < kd; ++c) {
        rho.entry(r, c) += v[r] * std::conj(v[c]);
      }
    }
  }
  return rho;
}

double fidelity(const DensityMatrix& rho, const State& psi) {
  if (rho.dim() != psi.dim()) {
    throw DimensionError("density matrix on " +
                         std::to_string(rho.n_qubits()) +
                         " qubits does not match a " +
                         std::to_string(psi.n_qubits()) + "-qubit state");
  }
  cdouble acc = 0.0;
  for (std::uint64_t r = 0; r < rho.dim(); ++r) {
    cdouble row = 0.0;
    for (std::uint64_t c = 0; c < rho.dim(); ++c) {
      row += rho.entry(r, c) * psi.amplitudes()[c];
    }
    acc += std::conj(psi.amplitudes()[r]) * row;
  }
  return acc.real();
}

cdouble inner_product(const State& a, const State& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("inner product of states with different widths");
  }
  cdouble acc = 0.0;
  for (std::uint64_t i = 0; i < a.dim(); ++i) {
    acc += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  }
  return acc;
}

double subsystem_fidelity(const State& s, std::span<const int> keep,
                          const State& psi) {
  const KeepPlan plan = make_keep_plan(s, keep, kMaxQubits);
  if (psi.dim() != (1ull << plan.kept)) {
    throw DimensionError("reference state width does not match keep set");
  }
  const std::uint64_t kd = psi.dim();
  const std::span<const cdouble> amps = s.amplitudes();
  const std::span<const cdouble> ref = psi.amplitudes();
  double acc = 0.0;
  for (std::uint64_t e = 0; e < (1ull << plan.rest); ++e) {
    const std::uint64_t base =
        expand_sorted(e, plan.keep_masks.data(), plan.kept);
    cdouble overlap = 0.0;
    for (std::uint64_t rr = 0; rr < kd; ++rr) {
      overlap += std::conj(ref[rr]) * amps[base | plan.keep_part[rr]];
    }
    acc += std::norm(overlap);
  }
  return acc;
}

State random_state(int n_qubits, std::uint64_t seed) {
  check_register(n_qubits);
  SplitMix64 g(seed);
  std::vector<cdouble> amps(1ull << n_qubits);
  double sq = 0.0;
  for (cdouble& c : amps) {
    c = g.complex_gaussian();
    sq += std::norm(c);
  }
  const double nr = std::sqrt(sq);
  for (cdouble& c : amps) c /= nr;
  return State(n_qubits, std::move(amps));
}

}  // namespace ghzec
