"""Pupil models and quadrature configuration.

Two pupil kinds are supported: the clear circular aperture, whose intensity
profile is 1/pi inside the unit disk, and a sampled intensity profile given on
a uniform grid over [-1, 1]^2 (cell-centered, row-major).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import PupilFormatError

CIRCULAR = "circular-clear"
SAMPLED = "sampled-grid"


@dataclass(frozen=True)
class QuadratureSpec:
    """Node counts and convergence policy for pupil integrals.

    `tolerance` is absolute; refinement doubles node counts until two
    successive estimates agree to within it, at most `max_refinements` times.
    """

    radial_nodes: int = 48
    angular_nodes: int = 96
    tolerance: float = 1e-10
    max_refinements: int = 6

    def __post_init__(self):
        if self.radial_nodes < 16:
            raise ValueError("radial_nodes must be >= 16")
        if self.angular_nodes < 32:
            raise ValueError("angular_nodes must be >= 32")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_refinements < 0:
            raise ValueError("max_refinements must be >= 0")


DEFAULT_SPEC = QuadratureSpec()


@dataclass(frozen=True)
class PupilModel:
    """Normalized pupil intensity |P(u)|^2 with its integration rule.

    For `circular-clear` no data is stored; the weight is 1/pi on the unit
    disk and zero outside.  For `sampled-grid`, `weights[i, j]` holds |P|^2 at
    the cell center u = (-1 + (i + 0.5) h, -1 + (j + 0.5) h) and integrals are
    midpoint sums (accuracy O(h^2), so the QuadratureSpec tolerance is not
    guaranteed for sampled pupils).
    """

    kind: str = CIRCULAR
    weights: np.ndarray | None = field(default=None, repr=False)
    spacing: float | None = None
    renormalization: float = 1.0

    def __post_init__(self):
        if self.kind not in (CIRCULAR, SAMPLED):
            raise ValueError(f"unknown pupil kind {self.kind!r}")
        if self.kind == SAMPLED:
            if self.weights is None or self.spacing is None:
                raise ValueError("sampled-grid pupil requires weights and spacing")
            if np.any(self.weights < 0):
                raise ValueError("pupil weight samples must be non-negative")

    @property
    def is_circular(self) -> bool:
        return self.kind == CIRCULAR

    def grid_points(self):
        """Cell-center coordinates (ux, uy) and integration weights w*h^2."""
        if self.kind != SAMPLED:
            raise ValueError("grid_points is only defined for sampled-grid pupils")
        n = self.weights.shape[0]
        h = self.spacing
        centers = -1.0 + (np.arange(n) + 0.5) * h
        ux, uy = np.meshgrid(centers, centers, indexing="ij")
        return ux.ravel(), uy.ravel(), (self.weights * h * h).ravel()


def circular_pupil() -> PupilModel:
    return PupilModel(kind=CIRCULAR)


def sampled_pupil(weights: np.ndarray, spacing: float) -> PupilModel:
    """Build a sampled pupil, renormalizing to unit integral."""
    weights = np.asarray(weights, dtype=float)
    if weights.ndim != 2 or weights.shape[0] != weights.shape[1]:
        raise ValueError("weights must be a square 2D array")
    if np.any(weights < 0):
        raise ValueError("pupil weight samples must be non-negative")
    total = float(weights.sum() * spacing * spacing)
    if total <= 0:
        raise ValueError("pupil has zero total weight")
    return PupilModel(
        kind=SAMPLED,
        weights=weights / total,
        spacing=spacing,
        renormalization=1.0 / total,
    )


def load_pupil_grid(path) -> PupilModel:
    """Load a `pupil-grid v1` file.

    Format: header line ``pupil-grid v1 <N> <h>`` followed by N^2
    whitespace-separated non-negative reals in row-major order.  The loaded
    weights are renormalized to unit integral; the applied factor is recorded
    on the returned model.
    """
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().split()
        if len(header) != 4 or header[0] != "pupil-grid" or header[1] != "v1":
            raise PupilFormatError(f"bad pupil-grid header in {path}")
        try:
            n = int(header[2])
            h = float(header[3])
        except ValueError as exc:
            raise PupilFormatError(f"bad pupil-grid header in {path}") from exc
        if n <= 0 or h <= 0:
            raise PupilFormatError("pupil-grid N and h must be positive")
        try:
            values = np.array(fh.read().split(), dtype=float)
        except ValueError as exc:
            raise PupilFormatError(f"bad pupil-grid data in {path}") from exc
    if values.size != n * n:
        raise PupilFormatError(
            f"pupil-grid data has {values.size} samples, expected {n * n}"
        )
    if np.any(values < 0) or not np.all(np.isfinite(values)):
        raise PupilFormatError("pupil-grid samples must be finite and non-negative")
    return sampled_pupil(values.reshape(n, n), h)
