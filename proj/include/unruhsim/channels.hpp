#pragma once

#include <vector>

#include "unruhsim/density.hpp"
#include "unruhsim/qmat.hpp"

namespace unruhsim {

enum class ChannelKind { AmplitudeDamping, PhaseDamping, Depolarizing };
enum class ChannelPlacement { AliceLocal, RobLocal, Collective };

/// An ordered Kraus operator set E_i with sum E_i^dag E_i = I. Single-qubit
/// channels have dim 2 (2 operators for amplitude/phase damping, 4 for
/// depolarizing); lifting to the two-qubit space gives dim 4, and collective
/// lifting squares the operator count. Immutable after construction.
struct KrausChannel {
  ChannelKind kind;
  double p;  // decoherence parameter in [0, 1]
  std::vector<ComplexMatrix> ops;
  std::vector<ComplexMatrix> ops_dagger;  // cached adjoints, same order

  int dim() const { return ops.front().dim(); }

  /// || sum E^dag E - I ||_max
  double completeness_defect() const;
};

/// Single-qubit Kraus operators for the given kind, exactly:
///   amplitude damping  E0 = diag(1, sqrt(1-p)),        E1 = sqrt(p) |0><1|
///   phase damping      E0 = diag(1, sqrt(1-p)),        E1 = sqrt(p) |1><1|
///   depolarizing       E0 = sqrt(1-p) I, E_{1,2,3} = sqrt(p/3) sigma_{x,y,z}
/// p outside [0, 1] throws std::domain_error.
KrausChannel make_channel(ChannelKind kind, double p);

/// Tensor each operator with the identity on the other qubit: AliceLocal
/// gives E (x) I, RobLocal gives I (x) E. Requires a single-qubit channel.
KrausChannel lift_local(const KrausChannel& ch, ChannelPlacement target);

/// All n^2 ordered pairwise tensor products E_q (x) E_q' of a single-qubit
/// operator set, sharing one decoherence parameter. The full set is the one
/// that preserves the completeness relation.
KrausChannel lift_collective(const KrausChannel& ch);

/// rho' = sum_i E_i rho E_i^dag, for a dim-4 channel on a two-qubit state.
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// Alice-local, then Rob-local, then collective (the operator ordering
/// E^AR E^R E^A). The locals commute; the collective map is applied last.
DensityMatrix apply_global(const DensityMatrix& rho, const KrausChannel& alice,
                           const KrausChannel& rob, const KrausChannel& collective);

}  // namespace unruhsim
