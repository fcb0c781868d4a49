"""Time-dependent basis transformations for the two driving scenarios.

Both scenarios diagonalize the bare Hamiltonian with a first rotation (the
adiabatic basis) and absorb the generated gauge term with a second rotation
(the "eigen" basis).  The frame data collects the two angles, their rates,
and the adiabatic/eigen gaps E(t) and W(t); the coupling operator picks up
the inverse rotations, which redistributes its weight between qubit-flip
and pure-dephasing channels.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import SIGMA_X, SIGMA_Y, SIGMA_Z, CouplingSpec, ValidationError

SCENARIO_ROTATION = "rotation"
SCENARIO_LZ = "lz"

LZ_KINDS = ("transverse", "longitudinal")


class ConfigurationError(ValueError):
    """Scenario, mode, or level combination that has no defined meaning."""


class TruncationAccuracyWarning(UserWarning):
    """Sweep too fast for the two-transformation truncation to be accurate."""


@dataclass(frozen=True)
class RotatingFieldParams:
    """Control field of fixed magnitude rotating in the x-z plane at rate omega."""

    delta: float = 1.0
    omega: float = 0.1

    def __post_init__(self) -> None:
        if not self.delta > 0:
            raise ValidationError(f"delta must be > 0, got {self.delta}")
        if self.omega < 0:
            raise ValidationError(f"omega must be >= 0, got {self.omega}")


@dataclass(frozen=True)
class LZParams:
    """Avoided crossing with minimal gap delta swept at speed v.

    A diagnostic warning is issued for v > delta**2: the truncated basis
    series then carries relative rate errors of order (v/delta**2)**2.
    """

    delta: float = 1.0
    v: float = 0.5

    def __post_init__(self) -> None:
        if not self.delta > 0:
            raise ValidationError(f"delta must be > 0, got {self.delta}")
        if not self.v > 0:
            raise ValidationError(f"v must be > 0, got {self.v}")
        if self.v > self.delta**2:
            warnings.warn(
                f"v={self.v} exceeds delta^2={self.delta**2}: truncated-frame rates "
                "are accurate only to O(v^2/delta^4)",
                TruncationAccuracyWarning,
                stacklevel=2,
            )


class FrameAngles(NamedTuple):
    """Angles and gaps of the instantaneous double rotation at one time."""

    theta: float
    eta: float
    theta_dot: float
    eta_dot: float
    e_gap: float
    w_gap: float


def rotating_frame(t: float, p: RotatingFieldParams) -> FrameAngles:
    """Frame for uniform rotation: theta = omega*t, constant eta = atan(omega/delta).

    The rotation starts at t = 0; earlier times return the static frame.
    The second rotation is time independent, so eta_dot = 0 and the eigen
    gap w_gap = sqrt(delta^2 + omega^2) is constant.
    """
    if t < 0.0 or p.omega == 0.0:
        return FrameAngles(0.0, 0.0, 0.0, 0.0, p.delta, p.delta)
    eta = math.atan2(p.omega, p.delta)
    w = math.hypot(p.delta, p.omega)
    return FrameAngles(p.omega * t, eta, p.omega, 0.0, p.delta, w)


def lz_frame(t: float, p: LZParams) -> FrameAngles:
    """Frame for the linear sweep, valid for all t.

    theta runs over [0, pi] with cos(theta) = -v*t/E(t) (branch fixed by
    atan2, no cut crossing), tan(eta) = v*delta/E(t)^3, and

        E(t) = sqrt(v^2 t^2 + delta^2),
        W(t) = sqrt(E^2 + v^2 delta^2 / E^4),
        eta_dot = 3 v^3 delta t / (E^3 W^2).

    ``eta_dot`` follows the source convention, which is odd in t and equals
    minus the calculus derivative of eta(t); populations of the propagated
    density matrix are invariant under that global sign.
    """
    d, v = p.delta, p.v
    e2 = d * d + v * v * t * t
    e = math.sqrt(e2)
    theta = math.atan2(d, -v * t)
    eta = math.atan2(v * d, e2 * e)
    w2 = e2 + (v * d) ** 2 / (e2 * e2)
    w = math.sqrt(w2)
    eta_dot = 3.0 * v**3 * d * t / (e2 * e * w2)
    theta_dot = v * d / e2
    return FrameAngles(theta, eta, theta_dot, eta_dot, e, w)


def effective_hamiltonian(frame: FrameAngles, level: str = "adiabatic") -> np.ndarray:
    """Qubit Hamiltonian after one ("adiabatic") or two ("eigen") rotations.

    adiabatic: -(E sigma_z + theta_dot sigma_y)/2, where theta_dot is the
    scenario's gauge coefficient (omega for rotation, v*delta/E^2 for the
    sweep).  eigen: -(W sigma_z + eta_dot sigma_x)/2 with eigenvalues +-W/2.
    """
    if level == "adiabatic":
        return -0.5 * (frame.e_gap * SIGMA_Z + frame.theta_dot * SIGMA_Y)
    if level == "eigen":
        return -0.5 * (frame.w_gap * SIGMA_Z + frame.eta_dot * SIGMA_X)
    raise ConfigurationError(f"unknown level {level!r}; expected 'adiabatic' or 'eigen'")


def transformed_coupling(coupling: CouplingSpec, frame: FrameAngles,
                         scenario: str) -> tuple[float, float, float]:
    """Components (c_x, c_y, c_z) of the coupling operator in the eigen frame.

    c_x^2 + c_y^2 is the qubit-flip weight and c_z^2 the dephasing weight;
    the transformation is unitary so the components stay on the unit sphere.
    """
    se, ce = math.sin(frame.eta), math.cos(frame.eta)
    if scenario == SCENARIO_ROTATION:
        st, ct = math.sin(frame.theta), math.cos(frame.theta)
        if coupling.mode == "perp_y":
            return (0.0, ce, -se)
        if coupling.mode == "inplane_z":
            return (-st, se * ct, -ce * ct)
        if coupling.mode == "longitudinal":
            return (0.0, se, ce)
        raise ConfigurationError(
            f"coupling mode {coupling.mode!r} undefined for scenario {scenario!r}"
        )
    if scenario == SCENARIO_LZ:
        st, ct = math.sin(frame.theta), math.cos(frame.theta)
        if coupling.mode in ("inplane_z", "transverse"):
            return (-st, -ct * se, ct * ce)
        if coupling.mode == "longitudinal":
            return (0.0, -se, ce)
        raise ConfigurationError(
            f"coupling mode {coupling.mode!r} undefined for scenario {scenario!r}"
        )
    raise ConfigurationError(f"unknown scenario {scenario!r}")


def flip_weight(c: tuple[float, float, float]) -> float:
    return c[0] * c[0] + c[1] * c[1]


def dephasing_weight(c: tuple[float, float, float]) -> float:
    return c[2] * c[2]


def u1_matrix(theta: float) -> np.ndarray:
    """First rotation exp(i sigma_y theta/2) taking the lab basis to adiabatic."""
    c, s = math.cos(0.5 * theta), math.sin(0.5 * theta)
    return np.array([[c, s], [-s, c]], dtype=complex)


def u2_matrix(eta: float, scenario: str) -> np.ndarray:
    """Second rotation absorbing the gauge term (axis sign is per scenario)."""
    c, s = math.cos(0.5 * eta), math.sin(0.5 * eta)
    if scenario == SCENARIO_ROTATION:
        # exp(i sigma_x eta/2)
        return np.array([[c, 1j * s], [1j * s, c]], dtype=complex)
    if scenario == SCENARIO_LZ:
        # exp(-i sigma_x eta/2)
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    raise ConfigurationError(f"unknown scenario {scenario!r}")


def total_transformation(frame: FrameAngles, scenario: str) -> np.ndarray:
    """V(t) = U2 U1(t) mapping lab-frame states to the eigen frame."""
    return u2_matrix(frame.eta, scenario) @ u1_matrix(frame.theta)
