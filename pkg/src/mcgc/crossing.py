"""Interleaving two cyclic distinguishable sequences into one.

Splitting each input into words of its window size and alternating them
yields a cyclic sequence distinguishable at the combined window size,
provided the word counts share a factor d >= 2 that is coprime to both
quotients.  Folding such interleavings builds sequences for any window size
out of the window-2 and window-3 generators.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .construct import build_m2, build_m3
from .errors import (
    ComposeError,
    InputError,
    PaletteError,
    PlanError,
    SelfCheckError,
)
from .sequences import ColorSequence, check_distinguishable

__all__ = [
    "CrossProductPlan",
    "plan_cross",
    "cross",
    "shift_palette",
    "split_window",
    "ComposeResult",
    "compose_for_m",
]


@dataclass(frozen=True)
class CrossProductPlan:
    """Validated parameters for one interleaving."""

    M1: int
    m1: int
    M2: int
    m2: int
    d: int
    L: int

    @property
    def output_length(self) -> int:
        return (self.m1 + self.m2) * self.L

    def index_pairs(self) -> list[tuple[int, int]]:
        """Word-index pairs (first, second) visited, in emission order.

        Exactly the pairs (i, j) with i = j modulo d, each once.
        """
        a = self.M1 // self.m1
        b = self.M2 // self.m2
        return [(x % a, x % b) for x in range(self.L)]


def plan_cross(M1: int, m1: int, M2: int, m2: int) -> CrossProductPlan:
    """Check the interleaving preconditions; each failure is named."""
    for name, value in (("M1", M1), ("m1", m1), ("M2", M2), ("m2", m2)):
        if value < 1:
            raise PlanError("positive", f"{name} must be positive, got {value}")
    if M1 % m1 != 0:
        raise PlanError("m1-divides-M1", f"m1={m1} does not divide M1={M1}")
    if M2 % m2 != 0:
        raise PlanError("m2-divides-M2", f"m2={m2} does not divide M2={M2}")
    a, b = M1 // m1, M2 // m2
    d = math.gcd(a, b)
    if d < 2:
        raise PlanError(
            "common-factor", f"gcd({a}, {b}) = {d}; the word counts need a common factor >= 2"
        )
    if math.gcd(d, a // d) != 1:
        raise PlanError(
            "coprime-first", f"gcd(d={d}, (M1/m1)/d={a // d}) != 1"
        )
    if math.gcd(d, b // d) != 1:
        raise PlanError(
            "coprime-second", f"gcd(d={d}, (M2/m2)/d={b // d}) != 1"
        )
    return CrossProductPlan(M1, m1, M2, m2, d, math.lcm(a, b))


def shift_palette(seq: ColorSequence, offset: int) -> ColorSequence:
    """Relabel all colors upward by offset, widening the palette to match."""
    if offset < 0:
        raise InputError("palette shift must be non-negative")
    return ColorSequence(
        tuple(c + offset for c in seq.colors), seq.palette_size + offset, seq.mode
    )


def cross(s: ColorSequence, t: ColorSequence, plan: CrossProductPlan) -> ColorSequence:
    """Interleave word by word per the plan.

    The first operand lives on [k1]; the second must use only colors above
    k1 (shift it with shift_palette first).  The output is cyclic on the
    union palette and (m1+m2)-distinguishable, verified before return.
    """
    if s.mode != "cyclic" or t.mode != "cyclic":
        raise InputError("both operands must be cyclic sequences")
    if (len(s), len(t)) != (plan.M1, plan.M2):
        raise PlanError(
            "plan-mismatch",
            f"plan is for lengths ({plan.M1}, {plan.M2}), got ({len(s)}, {len(t)})",
        )
    k1 = s.palette_size
    if t.palette_size <= k1 or any(c <= k1 for c in t.colors):
        raise PaletteError(
            f"second operand must use colors strictly above the first palette 1..{k1}"
        )
    a = plan.M1 // plan.m1
    b = plan.M2 // plan.m2
    alphas = [s.colors[i * plan.m1 : (i + 1) * plan.m1] for i in range(a)]
    betas = [t.colors[j * plan.m2 : (j + 1) * plan.m2] for j in range(b)]
    out: list[int] = []
    for x in range(plan.L):
        out.extend(alphas[x % a])
        out.extend(betas[x % b])
    result = ColorSequence(tuple(out), t.palette_size, "cyclic")
    if len(result) != plan.output_length:
        raise SelfCheckError("interleaved length disagrees with the plan")
    m = plan.m1 + plan.m2
    report = check_distinguishable(result, m)
    if not report.ok:
        raise SelfCheckError(
            f"interleaving failed {m}-distinguishability at windows {report.collision}"
        )
    return result


def split_window(m: int) -> list[int]:
    """Greedy split of m into summands of 3 and 2 (3 preferred), folded left."""
    if m < 2:
        raise InputError("composition needs a window of at least 2")
    parts: list[int] = []
    rest = m
    while rest > 4:
        parts.append(3)
        rest -= 3
    if rest in (2, 3):
        parts.append(rest)
    else:  # rest == 4
        parts.extend((2, 2))
    return parts


@dataclass(frozen=True)
class ComposeResult:
    sequence: ColorSequence
    split: tuple[int, ...]
    factor_palettes: tuple[int, ...]
    plans: tuple[CrossProductPlan, ...]


def _base_candidates(m: int, max_colors: int) -> list[tuple[int, int]]:
    """(k, cyclic length) options for one base factor, ascending k.

    Lengths not divisible by the window are dropped up front; divisibility
    is a plan precondition.
    """
    out: list[tuple[int, int]] = []
    if m == 2:
        for k in range(3, max_colors + 1):
            length = math.comb(k + 1, 2) - (k // 2 if k % 2 == 0 else 0)
            if length % 2 == 0:
                out.append((k, length))
    elif m == 3:
        for k in range(3, max_colors + 1, 3):
            length = math.comb(k + 2, 3) - k // 3
            if length % 3 == 0:
                out.append((k, length))
    else:
        raise InputError(f"no base construction for window {m}")
    return out


def _build_base(m: int, k: int) -> ColorSequence:
    return build_m2(k) if m == 2 else build_m3(k)


def _fold_plans(parts: list[int], lengths: list[int]) -> list[CrossProductPlan] | None:
    """Plans for the left fold, or None when some stage has no valid plan."""
    plans: list[CrossProductPlan] = []
    cur_len, cur_m = lengths[0], parts[0]
    for part, length in zip(parts[1:], lengths[1:]):
        try:
            plan = plan_cross(cur_len, cur_m, length, part)
        except PlanError:
            return None
        plans.append(plan)
        cur_m += part
        cur_len = plan.output_length
    return plans


def compose_for_m(m: int, max_colors: int = 48, min_length: int = 1) -> ComposeResult:
    """Build a cyclic m-distinguishable sequence by left-folding
    interleavings of window-2 and window-3 base sequences.

    Base sequences keep their native construction lengths (a cyclic
    sequence cannot generally be truncated and stay distinguishable), so
    the search varies the palette per factor instead.  Candidate palette
    tuples are tried in ascending total color count, then ascending final
    length; the first tuple whose every fold admits a valid plan and whose
    output reaches min_length wins.
    """
    if min_length < 1:
        raise InputError("min_length must be at least 1")
    parts = split_window(m)
    if len(parts) == 1:
        for k, length in _base_candidates(parts[0], max_colors):
            if length >= min_length:
                return ComposeResult(
                    _build_base(parts[0], k), tuple(parts), (k,), ()
                )
        raise ComposeError(
            f"no window-{m} base reaches length {min_length} within {max_colors} colors"
        )
    menus = [_base_candidates(p, max_colors) for p in parts]
    candidates = []
    for combo in itertools.product(*menus):
        ks = [k for k, _ in combo]
        if sum(ks) > max_colors:
            continue
        plans = _fold_plans(parts, [length for _, length in combo])
        if plans is None:
            continue
        final_length = plans[-1].output_length
        if final_length < min_length:
            continue
        candidates.append((sum(ks), final_length, tuple(ks), tuple(plans)))
    if not candidates:
        raise ComposeError(
            f"no valid interleaving for split {'+'.join(map(str, parts))} "
            f"within {max_colors} colors (min length {min_length})"
        )
    candidates.sort(key=lambda c: (c[0], c[1], c[2]))
    _, _, ks, plans = candidates[0]
    seq = _build_base(parts[0], ks[0])
    for part, k, plan in zip(parts[1:], ks[1:], plans):
        factor = shift_palette(_build_base(part, k), seq.palette_size)
        seq = cross(seq, factor, plan)
    return ComposeResult(seq, tuple(parts), ks, plans)
