"""Local SL(2,C) filtering in the density-matrix picture, the induced
O(1,3) action on Stokes tensors, and renormalization bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    EnsembleAnnihilated,
    NotUnimodular,
    ParseError,
)
from .qstate import SIGMA, DensityMatrix, as_density, kron_all
from .stokes import StokesTensor, _apply_leg, minkowski_invariant, stokes_tensor

MINKOWSKI_METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


@dataclass(eq=False)
class LocalOperation:
    """One invertible 2x2 operator per qubit, applied as a tensor product."""

    ops: list

    def __post_init__(self):
        self.ops = [np.asarray(o, dtype=complex) for o in self.ops]
        for o in self.ops:
            if o.shape != (2, 2):
                raise DimensionMismatch("local operator must be 2x2")
            if abs(np.linalg.det(o)) <= 1e-9:
                raise DimensionMismatch("local operator is singular")

    def __len__(self):
        return len(self.ops)

    def is_unitary(self, k: int, tol: float = 1e-9) -> bool:
        o = self.ops[k]
        return bool(np.max(np.abs(o.conj().T @ o - np.eye(2))) <= tol)

    def full_matrix(self) -> np.ndarray:
        return kron_all(self.ops)

    def to_json_dict(self) -> dict:
        return {
            "ops": [
                [[[float(z.real), float(z.imag)] for z in row] for row in o]
                for o in self.ops
            ]
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "LocalOperation":
        try:
            ops = [
                np.array([[complex(z[0], z[1]) for z in row] for row in o])
                for o in doc["ops"]
            ]
        except (KeyError, TypeError, IndexError) as exc:
            raise ParseError("bad LocalOperation document: %s" % exc) from exc
        return cls(ops)


@dataclass
class FilterReport:
    """Effect of a det-1 local filter on the Stokes scalar."""

    attenuation: float
    invariant_before: float
    invariant_after_renorm: float
    gain: float

    def to_json_dict(self) -> dict:
        return {
            "attenuation": self.attenuation,
            "invariant_before": self.invariant_before,
            "invariant_after_renorm": self.invariant_after_renorm,
            "gain": self.gain,
        }


def lorentz_of(a: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """4x4 Lorentz matrix induced by a det-1 operator:
    L[mu, nu] = Tr(sigma_mu a sigma_nu a^dagger) / 2."""
    a = np.asarray(a, dtype=complex)
    if abs(np.linalg.det(a) - 1.0) > tol:
        raise NotUnimodular("det = %s is not 1" % np.linalg.det(a))
    adag = a.conj().T
    l = np.empty((4, 4))
    for mu in range(4):
        for nu in range(4):
            l[mu, nu] = 0.5 * np.trace(SIGMA[mu] @ a @ SIGMA[nu] @ adag).real
    return l


def apply_local_to_density(rho, op: LocalOperation) -> DensityMatrix:
    """rho -> (A1 x ... x An) rho (A1 x ... x An)^dagger, unnormalized."""
    rho = as_density(rho)
    if len(op) != rho.n_qubits:
        raise DimensionMismatch(
            "%d local operators for %d qubits" % (len(op), rho.n_qubits)
        )
    full = op.full_matrix()
    out = full @ rho.matrix @ full.conj().T
    return DensityMatrix(rho.n_qubits, out, normalized=False)


def apply_lorentz_to_stokes(s: StokesTensor, ls) -> StokesTensor:
    """Contract one 4x4 Lorentz matrix onto each tensor leg, qubit 1 first."""
    ls = list(ls)
    if len(ls) != s.n_qubits:
        raise DimensionMismatch(
            "%d Lorentz matrices for %d qubits" % (len(ls), s.n_qubits)
        )
    t = s.values.reshape((4,) * s.n_qubits)
    for k, l in enumerate(ls):
        t = _apply_leg(t, np.asarray(l, dtype=float), k)
    return StokesTensor(s.n_qubits, t.reshape(-1))


def renormalize(s: StokesTensor) -> StokesTensor:
    """Divide through by the intensity component so values[0] = 1."""
    s0 = s.values[0]
    if s0 <= 1e-12:
        raise EnsembleAnnihilated("intensity component %g <= 1e-12" % s0)
    return StokesTensor(s.n_qubits, s.values / s0)


def filter_state(rho, op: LocalOperation) -> FilterReport:
    """Apply a det-1 local filter and report how renormalization rescales
    the invariant. The invariant itself is unchanged before renormalization,
    so the whole effect is the factor 1/attenuation^2."""
    rho = as_density(rho)
    for o in op.ops:
        if abs(np.linalg.det(o) - 1.0) > 1e-8:
            raise NotUnimodular("filter operators must have det 1")
    before = minkowski_invariant(stokes_tensor(rho))
    out = apply_local_to_density(rho, op)
    attenuation = out.trace
    if attenuation <= 1e-12:
        raise EnsembleAnnihilated("filter annihilated the ensemble")
    gain = 1.0 / attenuation**2
    return FilterReport(
        attenuation=attenuation,
        invariant_before=before,
        invariant_after_renorm=before * gain,
        gain=gain,
    )
