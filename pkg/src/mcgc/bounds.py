"""Window-count bounds, best-known lengths, minimal colors, and coding gain.

Everything here is exact integer arithmetic except the gains.  The published
gain tables truncate to three decimals rather than round (0.4347 prints as
0.434), so table emission truncates; the test suite pins this cell by cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError, UnsupportedParameterError

__all__ = [
    "multichoose",
    "upper_bound",
    "BoundRecord",
    "bound_record",
    "lower_bound",
    "min_colors_1d",
    "min_colors_2d",
    "GainRecord",
    "gain_record",
    "coding_gain",
    "gain_3dp",
    "bounds_table",
    "kmin_table",
    "gain_table",
    "render_bounds_csv",
    "render_kmin_csv",
    "render_gain_csv",
]


def multichoose(k: int, m: int) -> int:
    """Number of m-multisets over a k-color palette: C(k+m-1, m)."""
    if k < 1 or m < 0:
        raise InputError("need k >= 1 and m >= 0")
    return math.comb(k + m - 1, m)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % p for p in range(2, int(n**0.5) + 1))


def upper_bound(m: int, k: int, cyclic: bool = True) -> int:
    """Ceiling on the length of an m-distinguishable sequence on [k].

    Cyclic mode: the window count C(k+m-1, m), less k/m when m is a prime
    dividing k (a counting parity then forces at least k/m multisets to go
    unused).  Linear mode: window count plus m-1; the cyclic refinement
    rests on wraparound and does not transfer.
    """
    if m < 1 or k < 1:
        raise InputError("need m >= 1 and k >= 1")
    total = multichoose(k, m)
    if cyclic:
        if _is_prime(m) and k % m == 0:
            return total - k // m
        return total
    return total + m - 1


@dataclass(frozen=True)
class BoundRecord:
    """Best known bracket on the longest linear m-distinguishable length."""

    m: int
    k: int
    lower: int
    upper: int
    tight: bool
    lower_provenance: str
    upper_provenance: str
    existence_only: bool = False


# Smallest palette each padded family is stated for.
_Y0 = {2: 2, 3: 4, 4: 5, 6: 11}


def _lower_candidates(m: int, k: int) -> list[tuple[int, str, bool]]:
    """(value, provenance, existence_only) for every family that applies.

    Provenance names the mechanism: "mcycle-cut" cuts open a cycle covering
    every m-multiset (attains the ceiling); "padded-mcycle-cut" pads such a
    cycle on fewer colors with runs of fresh colors; "dense-cyclic-cut" cuts
    the longest cyclic sequence when m divides k; "ucycle-cut" cuts a cycle
    of distinct m-subsets.
    """
    out: list[tuple[int, str, bool]] = []
    if m == 1:
        out.append((k, "exact", False))
    elif m == 2:
        if k % 2 == 1:
            out.append((multichoose(k, 2) + 1, "mcycle-cut", False))
        else:
            if k >= _Y0[2]:
                out.append((math.comb(k, 2) + 3, "padded-mcycle-cut", False))
            if k >= 4:
                out.append((multichoose(k, 2) - k // 2 + 1, "dense-cyclic-cut", False))
    elif m == 3:
        if k % 3 != 0:
            if k >= _Y0[3]:
                out.append((multichoose(k, 3) + 2, "mcycle-cut", True))
        else:
            out.append((multichoose(k, 3) - k // 3 + 2, "dense-cyclic-cut", False))
            if k >= _Y0[3]:
                out.append((math.comb(k + 1, 3) + 5, "padded-mcycle-cut", True))
    elif m == 4:
        if k >= _Y0[4]:
            if k % 4 in (1, 3):
                out.append((multichoose(k, 4) + 3, "mcycle-cut", True))
            else:
                out.append((math.comb(k + 2, 4) + 7, "padded-mcycle-cut", True))
    elif m == 6:
        if k >= _Y0[6]:
            r = k % 6
            if r in (1, 5):
                out.append((multichoose(k, 6) + 5, "mcycle-cut", True))
            elif r in (0, 2):
                out.append((math.comb(k + 4, 6) + 11, "padded-mcycle-cut", True))
            elif r == 3:
                out.append((math.comb(k + 3, 6) + 17, "padded-mcycle-cut", True))
            else:  # r == 4
                out.append((math.comb(k + 2, 6) + 23, "padded-mcycle-cut", True))
    else:
        # general window size: only the subset-cycle family, and only under
        # its divisibility condition
        if k >= m and math.comb(k - 1, m - 1) % m == 0:
            out.append((math.comb(k, m) + m - 1, "ucycle-cut", True))
    return out


def bound_record(m: int, k: int) -> BoundRecord:
    if m < 1 or k < 1:
        raise InputError("need m >= 1 and k >= 1")
    candidates = _lower_candidates(m, k)
    if not candidates:
        raise UnsupportedParameterError(
            f"no finite lower-bound formula covers m={m}, k={k}; "
            "known results there are asymptotic only"
        )
    value, provenance, existence = max(candidates, key=lambda c: (c[0], c[1]))
    upper_linear = upper_bound(m, k, cyclic=False)
    if value > upper_linear:
        raise AssertionError(
            f"lower bound {value} exceeds ceiling {upper_linear} for m={m}, k={k}"
        )
    return BoundRecord(
        m=m,
        k=k,
        lower=value,
        upper=upper_linear,
        tight=value == upper_linear,
        lower_provenance=provenance,
        upper_provenance="window-count",
        existence_only=existence,
    )


def lower_bound(m: int, k: int) -> int:
    """Best known lower bound on the longest linear m-distinguishable
    length over [k] (largest applicable family)."""
    return bound_record(m, k).lower


def min_colors_1d(M: int, m: int, k_limit: int = 10_000_000) -> int:
    """Smallest palette whose best known length bound reaches M.

    Palettes below a family's stated threshold are skipped rather than
    guessed at, so the answer is the smallest supported k.
    """
    if m < 1 or M < m:
        raise InputError("need M >= m >= 1")
    k = 0
    while k < k_limit:
        k += 1
        try:
            if lower_bound(m, k) >= M:
                return k
        except UnsupportedParameterError:
            continue
    raise UnsupportedParameterError(
        f"no palette up to {k_limit} reaches length {M} for window {m}"
    )


def min_colors_2d(M: int, N: int, m: int, n: int) -> int:
    """Product-code bound: color the two axes independently."""
    return min_colors_1d(M, m) * min_colors_1d(N, n)


@dataclass(frozen=True)
class GainRecord:
    """Bits-per-label reduction of the color protocol over unique labels.

    Computed from the product-code bound, so the gain is an upper bound on
    what the best 2D code could achieve.
    """

    M: int
    N: int
    m: int
    n: int
    k_M: int
    k_N: int
    gain: float
    provenance: str = "product-code-bound"


def gain_record(M: int, N: int, m: int, n: int) -> GainRecord:
    k_m = min_colors_1d(M, m)
    k_n = min_colors_1d(N, n)
    gain = (math.log2(k_m) + math.log2(k_n)) / (math.log2(M) + math.log2(N))
    return GainRecord(M=M, N=N, m=m, n=n, k_M=k_m, k_N=k_n, gain=gain)


def coding_gain(M: int, N: int, m: int, n: int) -> float:
    """(log2 k_M + log2 k_N) / (log2 M + log2 N) with the minimal 1D colors."""
    return gain_record(M, N, m, n).gain


def gain_3dp(gain: float) -> float:
    """Truncate a gain to three decimals, matching the published tables."""
    return math.floor(gain * 1000) / 1000


def bounds_table(m: int, ks: Iterable[int]) -> list[BoundRecord]:
    return [bound_record(m, k) for k in sorted(set(ks))]


def kmin_table(
    ms: Sequence[int], sizes: Sequence[int]
) -> list[tuple[int, int, int]]:
    """(m, M, k) rows, ascending m then M."""
    return [
        (m, M, min_colors_1d(M, m))
        for m in sorted(set(ms))
        for M in sorted(set(sizes))
    ]


def gain_table(
    sizes: Sequence[int], blocks: Sequence[tuple[int, int]]
) -> list[GainRecord]:
    """Gain records for every (M, N) in sizes x sizes, per block shape."""
    out: list[GainRecord] = []
    ordered = sorted(set(sizes))
    for m, n in blocks:
        for M in ordered:
            for N in ordered:
                out.append(gain_record(M, N, m, n))
    return out


def render_bounds_csv(records: Iterable[BoundRecord]) -> str:
    lines = ["m,k,lower,upper,tight,lower_provenance,upper_provenance,existence_only"]
    for r in records:
        lines.append(
            f"{r.m},{r.k},{r.lower},{r.upper},{str(r.tight).lower()},"
            f"{r.lower_provenance},{r.upper_provenance},{str(r.existence_only).lower()}"
        )
    return "\n".join(lines) + "\n"


def render_kmin_csv(rows: Iterable[tuple[int, int, int]]) -> str:
    lines = ["m,M,k"]
    lines.extend(f"{m},{M},{k}" for m, M, k in rows)
    return "\n".join(lines) + "\n"


def render_gain_csv(records: Iterable[GainRecord]) -> str:
    lines = ["m,n,M,N,k_M,k_N,gain"]
    for r in records:
        lines.append(
            f"{r.m},{r.n},{r.M},{r.N},{r.k_M},{r.k_N},{gain_3dp(r.gain):.3f}"
        )
    return "\n".join(lines) + "\n"
