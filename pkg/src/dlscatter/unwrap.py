"""Continuous-branch phase unwrapping in the wavenumber.

A phase shift is only defined modulo pi by its tangent; the physical branch
is fixed by requiring delta(k) -> 0 as k -> infinity and continuity in k.
The walker below starts at a large anchor wavenumber (where the branch
integer is chosen to minimize |delta|), then steps down toward the requested
wavenumbers, re-snapping the branch at every step. Steps adapt so that no
accepted step changes the phase by more than pi/4, well inside the pi/2
window where snapping to the nearest branch is unambiguous.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

_MAX_STEP = 0.5
_MIN_STEP = 1e-9
_ACCEPT_JUMP = math.pi / 4
_GROW_JUMP = math.pi / 16


def unwrap_descending(
    principal: Callable[[float], float],
    targets: Sequence[float],
    k_anchor: float,
) -> list[float]:
    """Unwrapped phase at each target wavenumber, in input order.

    ``principal`` must return the phase up to an additive multiple of pi;
    it is evaluated at the anchor, at every adaptive intermediate step and
    at every target. Targets above the anchor simply move the anchor up.
    """
    if not targets:
        return []
    order = sorted(set(float(k) for k in targets), reverse=True)
    k_start = max(k_anchor, order[0])

    p = principal(k_start)
    delta = p - math.pi * round(p / math.pi)
    out: dict[float, float] = {}
    if order[0] == k_start:
        out[order[0]] = delta
        order = order[1:]

    k_cur = k_start
    step = _MAX_STEP
    for k_target in order:
        while k_cur > k_target:
            k_new = max(k_target, k_cur - step)
            p = principal(k_new)
            cand = p + math.pi * round((delta - p) / math.pi)
            jump = abs(cand - delta)
            if jump > _ACCEPT_JUMP and step > _MIN_STEP:
                step *= 0.5
                continue
            if jump < _GROW_JUMP:
                step = min(step * 2.0, _MAX_STEP)
            delta = cand
            k_cur = k_new
        out[k_target] = delta

    return [out[float(k)] for k in targets]
