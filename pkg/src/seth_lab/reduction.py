"""Assembly of the full reduction sequences and the OV decision rules.

The first sequence concatenates padded gadgets for every vector in A; the
second surrounds the B gadgets with |A|-1 all-ones decoy gadgets on each
side so a window of |A| gadgets can always slide over any B position. The
edit-distance variant wraps the first sequence in runs of '3'.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import editdist, pat
from .gadgets import GadgetParams, check_params, vector_gadget_1, vector_gadget_2
from .ov import OvInstance


class TheoremViolation(RuntimeError):
    """The computed distance landed in the forbidden gap between the
    planted and pair-free values; the parameter profile is unsound."""

    def __init__(self, kind: str, value: int, low: int, high: int):
        super().__init__(
            f"{kind} distance {value} outside {{<= {low}}} U {{== {high}}}"
        )
        self.kind = kind
        self.value = value
        self.low = low
        self.high = high


@dataclass(frozen=True)
class ReductionOutput:
    p1: str
    p2: str
    p1_prime: str
    p2_prime: str
    X: int
    Y: int
    params: GadgetParams
    normalized_instance: OvInstance


def padded_vector_gadget(k: int, v, p: GadgetParams) -> str:
    if k == 1:
        core = vector_gadget_1(v, p)
    elif k == 2:
        core = vector_gadget_2(v, p)
    else:
        raise ValueError("gadget side must be 1 or 2")
    pad = "2" * p.T
    return pad + core + pad


def build_sequences(inst: OvInstance, p: GadgetParams) -> ReductionOutput:
    if p.d != inst.d:
        raise ValueError(f"params are for d={p.d}, instance has d={inst.d}")
    A, B = inst.A, inst.B
    if len(A) > len(B):
        A, B = B, A  # orthogonality is symmetric; keep |A| <= |B|
    norm = OvInstance(d=inst.d, A=A, B=B)
    p1 = "".join(padded_vector_gadget(1, a, p) for a in A)
    ones_vec = (1,) * p.d
    decoy = padded_vector_gadget(2, ones_vec, p) * (len(A) - 1)
    p2 = decoy + "".join(padded_vector_gadget(2, b, p) for b in B) + decoy
    p2_prime = p2
    p1_prime = "3" * len(p2_prime) + p1 + "3" * len(p2_prime)
    X = len(A) * p.e_u
    Y = 2 * len(p2_prime) + X
    return ReductionOutput(
        p1=p1,
        p2=p2,
        p1_prime=p1_prime,
        p2_prime=p2_prime,
        X=X,
        Y=Y,
        params=p,
        normalized_instance=norm,
    )


def _decide(value: int, threshold_true: int, exact_false: int, kind: str) -> bool:
    if value <= threshold_true:
        return True
    if value == exact_false:
        return False
    raise TheoremViolation(kind, value, threshold_true, exact_false)


def decide_ov_via_pat(inst: OvInstance, p: GadgetParams) -> bool:
    """True iff an orthogonal pair exists, decided through the pattern
    distance of the assembled sequences."""
    report = check_params(p)
    if not report.ok:
        raise ValueError(f"params fail constraint checks: {report.violations}")
    out = build_sequences(inst, p)
    v = pat.pat_distance(out.p1, out.p2)
    return _decide(v, out.X - p.d, out.X, "PAT")


_EDIT_ENGINES = {
    "dp": editdist.edit_distance_dp,
    "bitparallel": editdist.edit_distance_bitparallel,
}


def decide_ov_via_edit(
    inst: OvInstance, p: GadgetParams, engine: str = "bitparallel"
) -> bool:
    """Same decision through the plain edit distance of the '3'-padded
    sequences. The bit-parallel engine is the default; these are the
    longest strings anywhere in the pipeline."""
    report = check_params(p)
    if not report.ok:
        raise ValueError(f"params fail constraint checks: {report.violations}")
    try:
        engine_fn = _EDIT_ENGINES[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}") from None
    out = build_sequences(inst, p)
    v = engine_fn(out.p1_prime, out.p2_prime)
    return _decide(v, out.Y - p.d, out.Y, "EDIT")
