"""Instantaneous Bloch-Redfield rates for every scenario/coupling pairing.

All flip rates share the golden-rule skeleton

    gamma_r = (g/2) J(W) [N(W) + 1],    gamma_e = (g/2) J(W) N(W),

with the geometric factor g set by the transformed coupling direction and
J, N evaluated at the instantaneous eigen gap W(t).  Pure dephasing keeps
the low-frequency weight j0 times the longitudinal projection.  Rates are
evaluated lazily at whatever times the integrator requests.
"""

from __future__ import annotations

import math

from .core import BathSpec, RateSet, ohmic_spectral_density, planck_occupation
from .frames import LZ_KINDS, ConfigurationError, FrameAngles


def _flip_rates(geometry: float, w: float, bath: BathSpec) -> tuple[float, float]:
    j = ohmic_spectral_density(w, bath)
    occ = planck_occupation(w, bath.temperature)
    return 0.5 * geometry * j * (occ + 1.0), 0.5 * geometry * j * occ


def rotating_rates(mode: str, frame: FrameAngles, bath: BathSpec,
                   u1_only: bool = False) -> RateSet:
    """Rates for the rotating control field.

    perp_y: constant geometry cos(eta)^2, dephasing weight sin(eta)^2 / 2.
    inplane_z: oscillating geometry G(t) = sin(eta)^2 + sin(theta)^2 cos(eta)^2,
    dephasing j0 cos(eta)^2 cos(theta)^2.
    longitudinal: geometry sin(eta)^2, dephasing j0 cos(eta)^2.

    ``u1_only`` evaluates the same formulas with eta = 0 (rates taken after
    the first transformation only).
    """
    eta = 0.0 if u1_only else frame.eta
    se2 = math.sin(eta) ** 2
    ce2 = math.cos(eta) ** 2
    if mode == "perp_y":
        geometry = ce2
        gamma_phi = 0.5 * se2 * bath.j0
    elif mode == "inplane_z":
        st2 = math.sin(frame.theta) ** 2
        geometry = se2 + st2 * ce2
        gamma_phi = bath.j0 * ce2 * (1.0 - st2)
    elif mode == "longitudinal":
        geometry = se2
        gamma_phi = ce2 * bath.j0
    else:
        raise ConfigurationError(f"unknown rotating coupling mode {mode!r}")
    gamma_r, gamma_e = _flip_rates(geometry, frame.w_gap, bath)
    gamma_2 = 0.5 * (gamma_r + gamma_e) + gamma_phi
    return RateSet(gamma_r, gamma_e, gamma_2, gamma_phi, geometry)


def lz_geometry_factor(kind: str, frame: FrameAngles, u1_only: bool = False) -> float:
    """Transverse weight for the sweep: sin^2(eta) + sin^2(theta) cos^2(eta)
    for the fixed-axis coupling, sin^2(eta) for the co-aligned coupling."""
    eta = 0.0 if u1_only else frame.eta
    se2 = math.sin(eta) ** 2
    if kind == "transverse":
        return se2 + math.sin(frame.theta) ** 2 * (1.0 - se2)
    if kind == "longitudinal":
        return se2
    raise ConfigurationError(f"unknown LZ coupling kind {kind!r}; expected {LZ_KINDS}")


def lz_rates(kind: str, frame: FrameAngles, bath: BathSpec,
             u1_only: bool = False) -> RateSet:
    """Rates during the sweep, evaluated at the instantaneous gap W(t)."""
    geometry = lz_geometry_factor(kind, frame, u1_only)
    eta = 0.0 if u1_only else frame.eta
    ce2 = math.cos(eta) ** 2
    if kind == "transverse":
        gamma_phi = bath.j0 * ce2 * math.cos(frame.theta) ** 2
    else:
        gamma_phi = bath.j0 * ce2
    gamma_r, gamma_e = _flip_rates(geometry, frame.w_gap, bath)
    gamma_2 = 0.5 * (gamma_r + gamma_e) + gamma_phi
    return RateSet(gamma_r, gamma_e, gamma_2, gamma_phi, geometry)


def rate_equation_coefficient(frame: FrameAngles, bath: BathSpec,
                              kind: str = "transverse") -> float:
    """Relaxation scale Gamma_0 = pi alpha W(t) g(t) exp(-W/e_cutoff).

    The cutoff exponential is always applied through the spectral density;
    an infinite-cutoff bath recovers the bare pi*alpha*W*g form exactly.
    Equals gamma_r - gamma_e of the corresponding RateSet.
    """
    geometry = lz_geometry_factor(kind, frame)
    return 0.5 * geometry * ohmic_spectral_density(frame.w_gap, bath)
