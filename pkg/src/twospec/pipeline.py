"""End-to-end reconstruction drivers for both settings.

Each driver runs the full chain -- interlacing check, band decomposition,
circuit combination, moments, recurrence recovery, matrix assembly -- and
always attaches an independent verification report.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import InterlacingRejectedError
from .interlacing import (
    BandDecomposition,
    CircleSpectrumPair,
    InterlacingVerdict,
    RealSpectrumPair,
    bands_circle,
    bands_real,
    check_interlace_circle,
    check_interlace_real,
)
from .kernel import (
    LIST_LIMIT,
    WeightResult,
    WeightSelection,
    admissible_family,
    admissible_size,
    positive_weight,
)
from .oprl import JacobiData, RealMomentSequence, moments_real, stieltjes
from .poly import MonicPolynomial
from .popuc import (
    PentadiagonalUnitary,
    TrigMomentSequence,
    VerblunskyData,
    boundary_param,
    cmv_matrix,
    szego_popuc,
    trig_moments,
    verblunsky_from_moments,
)
from .verify import STANDARD, VerificationReport, verify_oprl, verify_popuc


@dataclass(frozen=True)
class RealSolution:
    pair: RealSpectrumPair
    verdict: InterlacingVerdict
    bands: BandDecomposition
    family_size: int
    family: tuple | None
    weight: WeightResult
    moments: RealMomentSequence
    jacobi: JacobiData
    report: VerificationReport


@dataclass(frozen=True)
class CircleSolution:
    pair: CircleSpectrumPair
    verdict: InterlacingVerdict
    bands: BandDecomposition
    family_size: int
    family: tuple | None
    weight: WeightResult
    moments: TrigMomentSequence
    verblunsky: VerblunskyData
    b_m: complex
    c_n: PentadiagonalUnitary
    c_m: PentadiagonalUnitary
    psi_n: MonicPolynomial
    psi_m: MonicPolynomial
    report: VerificationReport


def _family_listing(bands):
    size = admissible_size(bands)
    family = admissible_family(bands) if size <= LIST_LIMIT else None
    return size, family


def reconstruct_real(
    pair: RealSpectrumPair,
    selection: WeightSelection | None = None,
    profile=STANDARD,
) -> RealSolution:
    """Full real-line pipeline; raises InterlacingRejectedError when the
    prescribed sets do not strictly interlace."""
    selection = selection or WeightSelection()
    verdict = check_interlace_real(pair)
    if not verdict.accepted:
        raise InterlacingRejectedError(verdict)
    bands = bands_real(pair, verdict)
    weight = positive_weight(pair, bands, selection)
    moments = moments_real(pair.xs, weight.omega)
    jacobi = stieltjes(pair.xs, weight.omega)
    report = verify_oprl(pair, weight.omega, jacobi, profile)
    size, family = _family_listing(bands)
    return RealSolution(
        pair=pair,
        verdict=verdict,
        bands=bands,
        family_size=size,
        family=family,
        weight=weight,
        moments=moments,
        jacobi=jacobi,
        report=report,
    )


def reconstruct_circle(
    pair: CircleSpectrumPair,
    selection: WeightSelection | None = None,
    profile=STANDARD,
) -> CircleSolution:
    """Full circle pipeline on a normalized pair."""
    selection = selection or WeightSelection()
    verdict = check_interlace_circle(pair)
    if not verdict.accepted:
        raise InterlacingRejectedError(verdict)
    bands = bands_circle(pair)
    weight = positive_weight(pair, bands, selection)
    moments = trig_moments(pair.zetas, weight.omega)
    data = verblunsky_from_moments(moments)
    b_n = boundary_param(pair.zetas)
    b_m = boundary_param(pair.xis)
    data = replace(data, b=b_n)
    c_n = cmv_matrix(data.alpha, b_n)
    c_m = cmv_matrix(data.alpha[: pair.m - 1], b_m)
    psi_n = szego_popuc(data.alpha, b_n, pair.n)
    psi_m = szego_popuc(data.alpha, b_m, pair.m)
    report = verify_popuc(pair, weight.omega, data, (c_n, c_m), profile)
    size, family = _family_listing(bands)
    return CircleSolution(
        pair=pair,
        verdict=verdict,
        bands=bands,
        family_size=size,
        family=family,
        weight=weight,
        moments=moments,
        verblunsky=data,
        b_m=b_m,
        c_n=c_n,
        c_m=c_m,
        psi_n=psi_n,
        psi_m=psi_m,
        report=report,
    )
