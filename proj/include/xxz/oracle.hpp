#pragma once

#include <cstdint>

#include "xxz/code.hpp"

namespace xxz {

/// Default qubit cap for the dense oracle; XXZ_MAX_ORACLE_QUBITS raises it,
/// hard-limited at 24.
inline constexpr int kOracleDefaultQubits = 20;
inline constexpr int kOracleHardQubitLimit = 24;
inline constexpr uint64_t kOracleStateCap = uint64_t{1} << 20;  // qudit d^N cap

/// Resolves the effective qubit cap from the environment.
int oracle_qubit_cap();

/// Dimension of the joint +1 eigenspace, computed as the trace of the
/// product of projectors (I + S_i + ... + S_i^{d-1})/d by walking every
/// computational basis state. Each generator maps a basis state to one basis
/// state with a root-of-unity phase, so the accumulation is exact integer
/// arithmetic; no state vectors, no floating point.
///
/// Fails fast when the size cap is exceeded or the generators do not
/// commute. cap < 0 means "use oracle_qubit_cap()".
uint64_t ground_space_dim_dense(const StabilizerSet& s, int cap = -1);

/// Qudit variant; requires prime d and d^N within the state cap.
uint64_t ground_space_dim_dense(const QuditStabilizerSet& s);

/// Applies the two products to every basis state and returns the exponent c
/// with Q.P = omega^c P.Q, verified consistent across all states; this makes
/// it equal to symplectic_product(P, Q) by the x.z' - z.x' convention.
uint32_t commute_dense(const QuditPauli& p, const QuditPauli& q);
int commute_dense(const Pauli& p, const Pauli& q);

QuditPauli to_qudit_pauli(const Pauli& p);

}  // namespace xxz
