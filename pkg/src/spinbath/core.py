"""Domain types and static decoherence rates for a qubit in an Ohmic bath.

Units: hbar = 1 and the bare level splitting sets the energy scale, so all
energies are quoted in units of the minimal gap and times in its inverse.
The environment is an Ohmic (s = 1) boson bath with spectral density

    J(eps) = 2*pi*alpha*eps*exp(-eps/e_cutoff),

coupled to the qubit along a fixed unit vector ``n``.  Only the component of
the fluctuating field transverse to the control field flips the qubit; the
longitudinal component dephases it with the low-frequency weight ``j0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

TRACE_TOL = 1e-9
HERMITICITY_TOL = 1e-12
BLOCH_NORM_TOL = 1e-6

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)

COUPLING_MODES = ("perp_y", "inplane_z", "longitudinal")


class ValidationError(ValueError):
    """A domain object violates one of its invariants."""


@dataclass(frozen=True)
class BathSpec:
    """Ohmic environment parameters.

    Parameters
    ----------
    alpha : dimensionless coupling strength (>= 0, weak coupling << 1).
    e_cutoff : exponential high-energy cutoff; ``math.inf`` selects the
        cutoff-free Ohmic form exactly (the flag is the infinity itself,
        never a large finite stand-in).
    temperature : bath temperature (>= 0).
    j0 : low-frequency spectral weight driving pure dephasing.
    exponent : bath exponent; only the Ohmic value 1 is supported and
        anything else is rejected when the spec is built.
    """

    alpha: float
    e_cutoff: float = math.inf
    temperature: float = 0.0
    j0: float = 0.0
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.alpha < 0:
            raise ValidationError(f"alpha must be >= 0, got {self.alpha}")
        if not self.e_cutoff > 0:
            raise ValidationError(f"e_cutoff must be > 0, got {self.e_cutoff}")
        if self.temperature < 0:
            raise ValidationError(f"temperature must be >= 0, got {self.temperature}")
        if self.j0 < 0:
            raise ValidationError(f"j0 must be >= 0, got {self.j0}")
        if self.exponent != 1:
            raise ValidationError(
                f"only the Ohmic bath exponent 1 is supported, got {self.exponent}"
            )

    @property
    def has_finite_cutoff(self) -> bool:
        return math.isfinite(self.e_cutoff)


def planck_occupation(eps: float, temperature: float) -> float:
    """Bose occupation 1/(exp(eps/T) - 1); exactly 0 at zero temperature.

    Raises a domain error for eps <= 0 at finite temperature, where the
    occupation diverges (or is unphysical).
    """
    if temperature == 0.0:
        return 0.0
    if temperature < 0:
        raise ValidationError(f"temperature must be >= 0, got {temperature}")
    if eps <= 0.0:
        raise ValidationError(
            f"occupation undefined for eps={eps} <= 0 at T={temperature} > 0"
        )
    return 1.0 / math.expm1(eps / temperature)


def ohmic_spectral_density(eps: float, bath: BathSpec) -> float:
    """Ohmic spectral density 2*pi*alpha*eps*exp(-eps/e_cutoff) at eps >= 0."""
    if eps < 0.0:
        raise ValidationError(f"spectral density requires eps >= 0, got {eps}")
    if eps == 0.0:
        return 0.0
    if bath.has_finite_cutoff:
        return 2.0 * math.pi * bath.alpha * eps * math.exp(-eps / bath.e_cutoff)
    return 2.0 * math.pi * bath.alpha * eps


class QubitState:
    """A 2x2 Hermitian unit-trace density matrix with a Bloch-vector view.

    rho = (1 + m . sigma)/2, so m_i = trace(sigma_i rho).  Construction
    validates Hermiticity (1e-12), unit trace (1e-9) and |m| <= 1 + 1e-6.
    """

    __slots__ = ("_rho",)

    def __init__(self, rho: np.ndarray):
        rho = np.asarray(rho, dtype=complex)
        if rho.shape != (2, 2):
            raise ValidationError(f"density matrix must be 2x2, got {rho.shape}")
        herm_dev = float(np.abs(rho - rho.conj().T).max())
        if herm_dev > HERMITICITY_TOL:
            raise ValidationError(f"density matrix not Hermitian: deviation {herm_dev:.3e}")
        trace_dev = abs(rho[0, 0].real + rho[1, 1].real - 1.0)
        if trace_dev > TRACE_TOL:
            raise ValidationError(f"density matrix trace deviates by {trace_dev:.3e}")
        self._rho = 0.5 * (rho + rho.conj().T)
        norm = float(np.linalg.norm(self.bloch))
        if norm > 1.0 + BLOCH_NORM_TOL:
            raise ValidationError(f"Bloch vector norm {norm} exceeds 1")

    @classmethod
    def from_bloch(cls, m) -> "QubitState":
        m = np.asarray(m, dtype=float)
        if m.shape != (3,):
            raise ValidationError(f"Bloch vector must have 3 components, got {m.shape}")
        if np.linalg.norm(m) > 1.0 + BLOCH_NORM_TOL:
            raise ValidationError(f"Bloch vector norm {np.linalg.norm(m)} exceeds 1")
        rho = 0.5 * (IDENTITY_2 + m[0] * SIGMA_X + m[1] * SIGMA_Y + m[2] * SIGMA_Z)
        return cls(rho)

    @classmethod
    def ground(cls) -> "QubitState":
        return cls.from_bloch((0.0, 0.0, 1.0))

    @classmethod
    def thermal(cls, gap: float, temperature: float) -> "QubitState":
        """Thermal state of H = -(gap/2) sigma_z: m_z = tanh(gap/2T)."""
        mz = 1.0 if temperature == 0.0 else math.tanh(gap / (2.0 * temperature))
        return cls.from_bloch((0.0, 0.0, mz))

    @property
    def rho(self) -> np.ndarray:
        return self._rho.copy()

    @property
    def bloch(self) -> np.ndarray:
        r = self._rho
        return np.array(
            [
                2.0 * r[0, 1].real,
                -2.0 * r[0, 1].imag,
                (r[0, 0] - r[1, 1]).real,
            ]
        )

    def __repr__(self) -> str:
        mx, my, mz = self.bloch
        return f"QubitState(m=({mx:.6g}, {my:.6g}, {mz:.6g}))"


def bloch_of_density(state: QubitState) -> np.ndarray:
    """Bloch vector (m_x, m_y, m_z) of a validated qubit state."""
    return state.bloch


def density_of_bloch(m) -> QubitState:
    """Qubit state with rho = (1 + m . sigma)/2."""
    return QubitState.from_bloch(m)


@dataclass(frozen=True)
class CouplingSpec:
    """Direction of the environment coupling operator n . sigma.

    ``mode`` names the rotating-field geometry (out-of-plane, in-plane, or
    co-rotating with the control field); ``n`` is the bare lab-frame unit
    direction used for static rates.
    """

    mode: str
    n: tuple = field(default=None)  # type: ignore[assignment]

    _DEFAULT_N = {
        "perp_y": (0.0, 1.0, 0.0),
        "inplane_z": (0.0, 0.0, 1.0),
        "longitudinal": (0.0, 0.0, 1.0),
    }

    def __post_init__(self) -> None:
        if self.mode not in COUPLING_MODES:
            raise ValidationError(
                f"unknown coupling mode {self.mode!r}; expected one of {COUPLING_MODES}"
            )
        n = self.n if self.n is not None else self._DEFAULT_N[self.mode]
        n = tuple(float(x) for x in n)
        if len(n) != 3:
            raise ValidationError("coupling direction must have 3 components")
        norm = math.sqrt(sum(x * x for x in n))
        if abs(norm - 1.0) > 1e-9:
            raise ValidationError(f"coupling direction must be a unit vector, |n|={norm}")
        object.__setattr__(self, "n", n)

    @classmethod
    def perp_y(cls) -> "CouplingSpec":
        return cls("perp_y")

    @classmethod
    def inplane_z(cls) -> "CouplingSpec":
        return cls("inplane_z")

    @classmethod
    def longitudinal(cls) -> "CouplingSpec":
        return cls("longitudinal")


class RateSet(NamedTuple):
    """Instantaneous decoherence rates and the geometric flip factor.

    gamma_2 = (gamma_r + gamma_e)/2 + gamma_phi always holds by construction;
    geometry_factor is the dimensionless transverse weight multiplying
    J(W)/2 in the flip rates.
    """

    gamma_r: float
    gamma_e: float
    gamma_2: float
    gamma_phi: float
    geometry_factor: float

    def validate(self, temperature: float | None = None, gap: float | None = None,
                 rel_tol: float = 1e-12) -> None:
        """Check positivity, the gamma_2 bound, and detailed balance."""
        if min(self.gamma_r, self.gamma_e, self.gamma_2, self.gamma_phi) < 0:
            raise ValidationError(f"negative rate in {self}")
        if self.gamma_2 < 0.5 * (self.gamma_r + self.gamma_e) - 1e-12:
            raise ValidationError("gamma_2 below flip-rate bound")
        if temperature == 0.0 and self.gamma_e != 0.0:
            raise ValidationError("excitation rate must vanish at T=0")
        if temperature and gap and self.gamma_r > 0.0 and temperature > 0.0:
            expected = math.exp(-gap / temperature)
            dev = abs(self.gamma_e / self.gamma_r - expected)
            if dev > rel_tol * max(expected, 1e-300):
                raise ValidationError(f"detailed balance violated by {dev:.3e}")


def detailed_balance_deviation(rates: RateSet, gap: float, temperature: float) -> float:
    """Relative deviation of gamma_e/gamma_r from exp(-gap/T); 0 where undefined."""
    if temperature <= 0.0 or rates.gamma_r <= 0.0:
        return 0.0
    expected = math.exp(-gap / temperature)
    if expected == 0.0:
        return 0.0
    return abs(rates.gamma_e / rates.gamma_r - expected) / expected


def static_rates(coupling: CouplingSpec, eps: float, bath: BathSpec) -> RateSet:
    """Golden-rule rates for a static control field with splitting eps > 0.

    The transverse weight n_x^2 + n_y^2 feeds the flip rates at the qubit
    splitting; the longitudinal weight n_z^2 feeds pure dephasing through
    the low-frequency spectral weight j0.
    """
    if not eps > 0.0:
        raise ValidationError(f"static rates require eps > 0, got {eps}")
    nx, ny, nz = coupling.n
    transverse = nx * nx + ny * ny
    j = ohmic_spectral_density(eps, bath)
    occ = planck_occupation(eps, bath.temperature)
    gamma_r = 0.5 * transverse * j * (occ + 1.0)
    gamma_e = 0.5 * transverse * j * occ
    gamma_phi = nz * nz * bath.j0
    gamma_2 = 0.5 * (gamma_r + gamma_e) + gamma_phi
    return RateSet(gamma_r, gamma_e, gamma_2, gamma_phi, transverse)
