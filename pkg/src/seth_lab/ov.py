"""Orthogonal-vectors instances: representation, generation, JSON I/O and
the quadratic reference solver."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Optional, Tuple

BinaryVector = Tuple[int, ...]

DEFAULT_ONE_DENSITY = 0.7
_REJECTION_BUDGET = 10_000


class GenerationError(RuntimeError):
    """Raised when a pair-free instance cannot be sampled in budget."""


@dataclass(frozen=True)
class OvInstance:
    d: int
    A: Tuple[BinaryVector, ...]
    B: Tuple[BinaryVector, ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("dimension must be positive")
        if not self.A or not self.B:
            raise ValueError("A and B must be nonempty")
        for side in (self.A, self.B):
            for v in side:
                if len(v) != self.d or any(b not in (0, 1) for b in v):
                    raise ValueError(f"vector {v!r} is not in {{0,1}}^{self.d}")


def dot(a: BinaryVector, b: BinaryVector) -> int:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def solve_ov_bruteforce(inst: OvInstance) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Quadratic scan; returns (found, witness) with the lexicographically
    first witness (A index, then B index) on success."""
    for i, a in enumerate(inst.A):
        for j, b in enumerate(inst.B):
            if dot(a, b) == 0:
                return True, (i, j)
    return False, None


def _random_vector(rng: random.Random, d: int, one_density: float) -> BinaryVector:
    return tuple(1 if rng.random() < one_density else 0 for _ in range(d))


def gen_ov(
    n_a: int,
    n_b: int,
    d: int,
    planted: bool,
    one_density: float = DEFAULT_ONE_DENSITY,
    seed: int = 0,
) -> OvInstance:
    """Deterministic instance generator.

    planted=True forces one orthogonal (a, b) pair by zeroing the chosen
    B-vector wherever the chosen A-vector has a 1. planted=False rejection
    samples until the brute-force solver confirms no orthogonal pair.
    """
    if d < 1:
        raise ValueError("dimension must be positive")
    rng = random.Random(seed)
    if planted:
        A = [_random_vector(rng, d, one_density) for _ in range(n_a)]
        B = [_random_vector(rng, d, one_density) for _ in range(n_b)]
        ia = rng.randrange(n_a)
        ib = rng.randrange(n_b)
        a = A[ia]
        B[ib] = tuple(0 if a[j] else B[ib][j] for j in range(d))
        return OvInstance(d=d, A=tuple(A), B=tuple(B))
    for _ in range(_REJECTION_BUDGET):
        A = tuple(_random_vector(rng, d, one_density) for _ in range(n_a))
        B = tuple(_random_vector(rng, d, one_density) for _ in range(n_b))
        inst = OvInstance(d=d, A=A, B=B)
        found, _ = solve_ov_bruteforce(inst)
        if not found:
            return inst
    raise GenerationError(
        "could not generate pair-free instance; raise one_density or shrink n"
    )


def to_json(inst: OvInstance) -> str:
    doc = {
        "d": inst.d,
        "A": ["".join(map(str, v)) for v in inst.A],
        "B": ["".join(map(str, v)) for v in inst.B],
    }
    return json.dumps(doc, indent=2) + "\n"


def from_json(text: str) -> OvInstance:
    doc = json.loads(text)
    d = int(doc["d"])

    def parse(side):
        vecs = []
        for s in doc[side]:
            if len(s) != d or set(s) - {"0", "1"}:
                raise ValueError(f"bad vector string {s!r} for d={d}")
            vecs.append(tuple(int(c) for c in s))
        return tuple(vecs)

    return OvInstance(d=d, A=parse("A"), B=parse("B"))


def save(inst: OvInstance, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(to_json(inst))


def load(path) -> OvInstance:
    with open(path, "r", encoding="ascii") as fh:
        return from_json(fh.read())
