"""Domain types for compactly supported lattice potentials and the z <-> lambda map.

The spectral parameter of the half-line difference operator lives on two
charts: the energy lambda, whose continuous band is [0, 4], and the complex
variable z with lambda = 2 - z - 1/z.  Energies below the band map to
z in (0, 1), energies above the band to z in (-1, 0), and the band itself
to the upper unit semicircle.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import TrailingZeroError, ZeroArgumentError

__all__ = [
    "Potential",
    "SpectralPoint",
    "NumericConfig",
    "validate_potential",
    "lambda_to_z",
    "z_to_lambda",
    "load_potential",
]


@dataclass(frozen=True)
class Potential:
    """Real potential supported on lattice sites 1..b with a nonzero last value.

    ``b = 0`` is the trivial potential (empty value tuple).
    """

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        for v in self.values:
            if not math.isfinite(v):
                raise ValueError(f"potential entries must be finite, got {v!r}")
        if self.values and self.values[-1] == 0:
            raise TrailingZeroError(
                "last potential entry is zero; trim the list or fix the value"
            )

    @property
    def b(self) -> int:
        return len(self.values)

    def scaled(self, t: float) -> "Potential":
        return Potential(tuple(t * v for v in self.values))

    def negated(self) -> "Potential":
        return Potential(tuple(-v for v in self.values))


def validate_potential(values: Sequence[float]) -> Potential:
    """Build a :class:`Potential`, rejecting a trailing zero entry.

    No silent trimming: a list ending in 0 raises :class:`TrailingZeroError`
    so the caller can decide whether trimming is intended.
    """
    return Potential(tuple(float(v) for v in values))


@dataclass(frozen=True)
class SpectralPoint:
    """A point (z, lambda) on the spectral curve lambda = 2 - z - 1/z."""

    z: complex
    lam: complex

    def __post_init__(self) -> None:
        if self.z == 0:
            raise ZeroArgumentError("z = 0 is not on the spectral curve")

    @classmethod
    def from_z(cls, z: complex) -> "SpectralPoint":
        return cls(z, z_to_lambda(z))

    @classmethod
    def from_lambda(cls, lam: float) -> "SpectralPoint":
        return cls(lambda_to_z(lam), lam)


# Extended-mode thresholds shrink because high-precision root refinement
# makes much tighter real/edge decisions meaningful.
_EXT_SCALE = 1e-10


@dataclass(frozen=True)
class NumericConfig:
    """Classification thresholds and the precision mode shared by the pipeline.

    tau_real:    |Im z| below which a root is snapped to the real axis.
    tau_cluster: pairwise distance below which roots merge into one
                 multiple root.
    tau_edge:    distance to z = +-1 below which a real root counts as an
                 edge (exceptional) zero.
    """

    tau_real: float = 1e-9
    tau_cluster: float = 1e-6
    tau_edge: float = 1e-9
    precision_mode: str = "standard"

    def __post_init__(self) -> None:
        if self.precision_mode not in ("standard", "extended"):
            raise ValueError(f"unknown precision mode {self.precision_mode!r}")
        if min(self.tau_real, self.tau_cluster, self.tau_edge) <= 0:
            raise ValueError("all thresholds must be positive")
        if self.tau_cluster < self.tau_real:
            raise ValueError("tau_cluster must be at least tau_real")

    @classmethod
    def extended(cls) -> "NumericConfig":
        return cls(
            tau_real=1e-9 * _EXT_SCALE,
            tau_cluster=1e-6 * _EXT_SCALE,
            tau_edge=1e-9 * _EXT_SCALE,
            precision_mode="extended",
        )

    @property
    def is_extended(self) -> bool:
        return self.precision_mode == "extended"


def lambda_to_z(lam: float) -> complex:
    """Map an energy to the unit-disk chart, z = 1 - lam/2 + sqrt(lam(lam-4))/2.

    Principal branch of the square root.  Band edges map exactly:
    lambda = 0 -> z = 1 and lambda = 4 -> z = -1.
    """
    if not math.isfinite(lam):
        raise ValueError("lambda must be finite")
    if lam == 0.0:
        return complex(1.0)
    if lam == 4.0:
        return complex(-1.0)
    z = 1.0 - lam / 2.0 + 0.5 * cmath.sqrt(complex(lam * (lam - 4.0)))
    if 0.0 < lam < 4.0:
        # in-band points lie on the unit circle; renormalize the modulus
        return z / abs(z)
    if abs(z) > 1.0:
        # the two solutions of z + 1/z = 2 - lambda are reciprocal;
        # keep the unit-disk representative
        z = 1.0 / z
    return z


def z_to_lambda(z: complex) -> complex:
    """Inverse chart map, lambda = 2 - z - 1/z."""
    if z == 0:
        raise ZeroArgumentError("z = 0 has no finite energy")
    lam = 2.0 - z - 1.0 / z
    return lam


def load_potential(source: str | Path) -> Potential:
    """Parse a potential from a file path or an inline string.

    Accepted formats: a JSON array of reals, or plain text with one real
    per line.  An inline string is parsed with the same two rules.
    """
    text: str
    path = Path(source) if not isinstance(source, Path) else source
    try:
        exists = path.exists()
    except OSError:
        exists = False
    if exists and path.is_file():
        text = path.read_text(encoding="utf-8")
    else:
        text = str(source)
    text = text.strip()
    if not text:
        return Potential(())
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = None
    if data is not None:
        if not isinstance(data, list):
            raise ValueError("potential JSON must be an array of reals")
        return validate_potential([float(x) for x in data])
    values = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        values.append(float(line))
    return validate_potential(values)
