"""Strict interlacing checks and band decompositions, on ℝ and on 𝕊¹.

Two zero sets interlace strictly when every open gap between consecutive
points of the larger set (interval on the line, counterclockwise arc on the
circle) holds at most one point of the smaller set and the sets are
disjoint.  Acceptance produces the interlacing indices (real case) and the
partition of node indices into bands, which downstream modules use to
enumerate the admissible kernel circuits.

All operations are pure functions of immutable inputs.
"""

from __future__ import annotations

import cmath
import math
from bisect import bisect_left
from dataclasses import dataclass

from .errors import DegenerateAngleError, NotUnitModulusError, SharedPointError
from .scalars import coerce_real_field

TWO_PI = 2.0 * math.pi

# Chord distance below which two circle points are treated as equal; a
# collision is an error, never a merge.
POINT_TOL = 1e-12
# Acceptance slack for |z| = 1 on raw circle inputs; points inside it are
# projected onto the circle exactly.
UNIT_TOL = 1e-8

NOT_SORTED = "NOT_SORTED"
SHARED_POINT = "SHARED_POINT"
OUT_OF_RANGE = "OUT_OF_RANGE"
GAP_OVERFULL = "GAP_OVERFULL"
EMPTY_BAND = "EMPTY_BAND"


@dataclass(frozen=True)
class RealSpectrumPair:
    """Prescribed zero sets on the real line: the n-set ``xs`` and the
    m-set ``ys`` with 1 <= m < n."""

    xs: tuple
    ys: tuple

    def __post_init__(self):
        if not (1 <= len(self.ys) < len(self.xs)):
            raise ValueError("need 1 <= m < n")
        xs, ys = coerce_real_field(self.xs, self.ys)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    @property
    def n(self) -> int:
        return len(self.xs)

    @property
    def m(self) -> int:
        return len(self.ys)


@dataclass(frozen=True)
class CircleSpectrumPair:
    """Prescribed zero sets on the unit circle, already normalized.

    Arguments satisfy ``phis[0] < thetas[0] < ... < thetas[n-1] <
    phis[0] + 2*pi`` and ``phis`` is increasing in the same window; both
    point tuples are sorted accordingly.  Build instances through
    :func:`normalize_circle` or :func:`circle_pair_from_angles`.
    """

    zetas: tuple
    xis: tuple
    thetas: tuple
    phis: tuple

    def __post_init__(self):
        if not (1 <= len(self.xis) < len(self.zetas)):
            raise ValueError("need 1 <= m < n")

    @property
    def n(self) -> int:
        return len(self.zetas)

    @property
    def m(self) -> int:
        return len(self.xis)


@dataclass(frozen=True)
class InterlacingVerdict:
    accepted: bool
    indices: tuple | None = None
    code: str | None = None
    detail: str = ""


@dataclass(frozen=True)
class BandDecomposition:
    """Partition of the node indices {1,..,n} into bands.

    ``bands[r]`` holds the 1-based node indices between consecutive points
    of the smaller set; ``indices`` are the interlacing indices
    (i_0, ..., i_{m+1}) in the real case and ``None`` on the circle.
    """

    bands: tuple
    indices: tuple | None = None

    @property
    def sizes(self) -> tuple:
        return tuple(len(b) for b in self.bands)


def check_interlace_real(pair: RealSpectrumPair) -> InterlacingVerdict:
    """Decide strict interlacing of ``pair.ys`` among ``pair.xs``.

    Accepts iff there are indices i_0 = 0 < i_1 < ... < i_m < n = i_{m+1}
    with y_k strictly inside (x_{i_k}, x_{i_k + 1}); equivalently, every
    open gap between consecutive x's holds at most one y and no y escapes
    (x_1, x_n).  Rejections name the first offending point.
    """
    xs, ys = pair.xs, pair.ys
    n, m = pair.n, pair.m

    for i in range(1, n):
        if not xs[i - 1] < xs[i]:
            return InterlacingVerdict(
                False, code=NOT_SORTED, detail=f"xs[{i}] is not above xs[{i - 1}]"
            )
    for k in range(1, m):
        if not ys[k - 1] < ys[k]:
            return InterlacingVerdict(
                False, code=NOT_SORTED, detail=f"ys[{k}] is not above ys[{k - 1}]"
            )

    indices = [0]
    for k, y in enumerate(ys):
        pos = bisect_left(xs, y)
        if pos < n and xs[pos] == y:
            return InterlacingVerdict(
                False,
                code=SHARED_POINT,
                detail=f"ys[{k}] equals xs[{pos}]",
            )
        if pos == 0 or pos == n:
            return InterlacingVerdict(
                False,
                code=OUT_OF_RANGE,
                detail=f"ys[{k}] lies outside (xs[0], xs[{n - 1}])",
            )
        if pos == indices[-1]:
            return InterlacingVerdict(
                False,
                code=GAP_OVERFULL,
                detail=f"ys[{k - 1}] and ys[{k}] share the gap "
                f"(xs[{pos - 1}], xs[{pos}])",
            )
        indices.append(pos)
    indices.append(n)
    return InterlacingVerdict(True, indices=tuple(indices))


def bands_real(pair: RealSpectrumPair, verdict: InterlacingVerdict) -> BandDecomposition:
    """Bands I_r = {i_r + 1, ..., i_{r+1}} (1-based), r = 0..m."""
    if not verdict.accepted or verdict.indices is None:
        raise ValueError("bands_real requires an accepted verdict")
    idx = verdict.indices
    bands = tuple(
        tuple(range(idx[r] + 1, idx[r + 1] + 1)) for r in range(len(idx) - 1)
    )
    return BandDecomposition(bands=bands, indices=idx)


def _principal_angle(z: complex) -> float:
    return cmath.phase(z) % TWO_PI


def _collision_checks(zetas, xis):
    for i in range(len(zetas)):
        for j in range(i + 1, len(zetas)):
            if abs(zetas[i] - zetas[j]) <= POINT_TOL:
                raise DegenerateAngleError(f"zn[{i}] and zn[{j}] coincide")
    for i in range(len(xis)):
        for j in range(i + 1, len(xis)):
            if abs(xis[i] - xis[j]) <= POINT_TOL:
                raise DegenerateAngleError(f"zm[{i}] and zm[{j}] coincide")
    for i, z in enumerate(zetas):
        for j, w in enumerate(xis):
            if abs(z - w) <= POINT_TOL:
                raise SharedPointError(f"zn[{i}] equals zm[{j}]")


def _normalize(points_n, angles_n, points_m, angles_m) -> CircleSpectrumPair:
    _collision_checks(points_n, points_m)
    base = min(angles_m)
    zn = sorted(zip(angles_n, points_n), key=lambda t: (t[0] - base) % TWO_PI)
    zm = sorted(zip(angles_m, points_m), key=lambda t: (t[0] - base) % TWO_PI)
    thetas = tuple(base + ((a - base) % TWO_PI) for a, _ in zn)
    phis = tuple(base + ((a - base) % TWO_PI) for a, _ in zm)
    return CircleSpectrumPair(
        zetas=tuple(p for _, p in zn),
        xis=tuple(p for _, p in zm),
        thetas=thetas,
        phis=phis,
    )


def normalize_circle(zetas_raw, xis_raw) -> CircleSpectrumPair:
    """Canonicalize raw circle points.

    The base point is the smaller-set point of smallest principal argument
    in [0, 2*pi); every argument is shifted into [base, base + 2*pi) and
    both sets are relabelled in increasing argument, so any permutation of
    the raw inputs yields the same pair.
    """
    def project(tag, values):
        pts = []
        for i, z in enumerate(values):
            z = complex(z)
            r = abs(z)
            if abs(r - 1.0) > UNIT_TOL:
                raise NotUnitModulusError(f"{tag}[{i}] has modulus {r!r}")
            pts.append(z / r)
        return pts

    pn = project("zn", zetas_raw)
    pm = project("zm", xis_raw)
    return _normalize(
        pn, [_principal_angle(z) for z in pn], pm, [_principal_angle(z) for z in pm]
    )


def circle_pair_from_angles(thetas_raw, phis_raw) -> CircleSpectrumPair:
    """Like :func:`normalize_circle` but from angles in radians."""
    an = [float(a) % TWO_PI for a in thetas_raw]
    am = [float(a) % TWO_PI for a in phis_raw]
    pn = [cmath.rect(1.0, a) for a in an]
    pm = [cmath.rect(1.0, a) for a in am]
    return _normalize(pn, an, pm, am)


def _circle_bands(pair: CircleSpectrumPair):
    phis_ext = pair.phis + (pair.phis[0] + TWO_PI,)
    lo = 0
    bands = []
    for r in range(pair.m):
        hi = bisect_left(pair.thetas, phis_ext[r + 1], lo=lo)
        bands.append(tuple(range(lo + 1, hi + 1)))
        lo = hi
    return bands


def check_interlace_circle(pair: CircleSpectrumPair) -> InterlacingVerdict:
    """Decide strict interlacing on the circle.

    With the normalized arguments, the bands I_r = {j : phi_r < theta_j <
    phi_{r+1}} must all be nonempty; an empty band is the same violation as
    an arc between consecutive n-set points holding two m-set points.
    """
    for r, band in enumerate(_circle_bands(pair)):
        if not band:
            return InterlacingVerdict(
                False,
                code=EMPTY_BAND,
                detail=f"no zn point on the arc between zm[{r}] and "
                f"zm[{(r + 1) % pair.m}]",
            )
    return InterlacingVerdict(True)


def bands_circle(pair: CircleSpectrumPair) -> BandDecomposition:
    """Bands I_r = {j : phi_r < theta_j < phi_{r+1}}, r = 1..m."""
    bands = _circle_bands(pair)
    if any(not b for b in bands):
        raise ValueError("bands_circle requires an interlacing pair")
    return BandDecomposition(bands=tuple(bands), indices=None)
