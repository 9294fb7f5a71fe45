#include "unruhsim/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "unruhsim/kernels.hpp"

namespace unruhsim {

namespace {

KrausChannel finish(ChannelKind kind, double p, std::vector<ComplexMatrix> ops) {
  std::vector<ComplexMatrix> daggers;
  daggers.reserve(ops.size());
  for (const auto& e : ops) daggers.push_back(dagger(e));
  return KrausChannel{kind, p, std::move(ops), std::move(daggers)};
}

}  // namespace

double KrausChannel::completeness_defect() const {
  ComplexMatrix sum(dim());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    sum = add(sum, mul(ops_dagger[i], ops[i]));
  }
  return max_abs_diff(sum, ComplexMatrix::identity(dim()));
}

KrausChannel make_channel(ChannelKind kind, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("make_channel: decoherence parameter must be in [0, 1]");
  }
  const double keep = std::sqrt(1.0 - p);
  std::vector<ComplexMatrix> ops;
  switch (kind) {
    case ChannelKind::AmplitudeDamping:
      ops.push_back(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, keep}}));
      ops.push_back(ComplexMatrix::from_rows({{0.0, std::sqrt(p)}, {0.0, 0.0}}));
      break;
    case ChannelKind::PhaseDamping:
      ops.push_back(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, keep}}));
      ops.push_back(ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, std::sqrt(p)}}));
      break;
    case ChannelKind::Depolarizing: {
      const double w = std::sqrt(p / 3.0);
      ops.push_back(scale(keep, ComplexMatrix::identity(2)));
      ops.push_back(ComplexMatrix::from_rows({{0.0, w}, {w, 0.0}}));
      ops.push_back(ComplexMatrix::from_rows({{0.0, cplx(0, -w)}, {cplx(0, w), 0.0}}));
      ops.push_back(ComplexMatrix::from_rows({{w, 0.0}, {0.0, -w}}));
      break;
    }
  }
  return finish(kind, p, std::move(ops));
}

KrausChannel lift_local(const KrausChannel& ch, ChannelPlacement target) {
  if (ch.dim() != 2) {
    throw std::invalid_argument("lift_local: channel is already lifted");
  }
  if (target != ChannelPlacement::AliceLocal && target != ChannelPlacement::RobLocal) {
    throw std::invalid_argument("lift_local: target must be AliceLocal or RobLocal");
  }
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  std::vector<ComplexMatrix> ops;
  ops.reserve(ch.ops.size());
  for (const auto& e : ch.ops) {
    ops.push_back(target == ChannelPlacement::AliceLocal ? kron(e, id2) : kron(id2, e));
  }
  return finish(ch.kind, ch.p, std::move(ops));
}

KrausChannel lift_collective(const KrausChannel& ch) {
  if (ch.dim() != 2) {
    throw std::invalid_argument("lift_collective: channel must be single-qubit");
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(ch.ops.size() * ch.ops.size());
  for (const auto& eq : ch.ops)
    for (const auto& eq2 : ch.ops) ops.push_back(kron(eq, eq2));
  return finish(ch.kind, ch.p, std::move(ops));
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != 4) {
    throw std::invalid_argument("apply: channel must be lifted to the two-qubit space");
  }
  ComplexMatrix out(4);
  ComplexMatrix tmp(4);
  for (std::size_t i = 0; i < ch.ops.size(); ++i) {
    kernels::matmul4(ch.ops[i].data(), rho.mat().data(), tmp.data());
    kernels::matmul4_acc(tmp.data(), ch.ops_dagger[i].data(), out.data());
  }
  return DensityMatrix(out);
}

DensityMatrix apply_global(const DensityMatrix& rho, const KrausChannel& alice,
                           const KrausChannel& rob, const KrausChannel& collective) {
  return apply(collective, apply(rob, apply(alice, rho)));
}

}  // namespace unruhsim
