"""Cyclic profile dynamic program over the columns of P(n, k).

Columns are decided left to right, two labels per step (outer, inner).
The state tracks, for the trailing window of k columns, each inner
vertex's label and its residual coverage demand, plus the previous outer
vertex's label and demand.  A vertex's demand is created when its column
is decided (counting contributions of already-decided neighbors), reduced
when later neighbors are decided, and must be zero once its last neighbor
is decided.

The cycle is closed by seam enumeration: the labels that interact across
the wrap are the outer label of column 0 and the inner labels of columns
0..k-1.  For each assignment of those k+1 labels the run becomes linear:
wrap vertices keep their demands in a small residual vector that is
reduced at the known steps where their wrap neighbors are decided and
checked for zero after the last column.  Vertices in the closing window
see only known labels, so their demands are checked at creation.

Demand bookkeeping is shared by the three invariants through a label
algebra: labels contribute their value (Italian, domination) or their
color mask (2-rainbow), and a zero-labeled vertex starts with demand 2,
1, or {1,2} respectively.

State values are (weight, label-prefix) pairs ordered lexicographically,
so ties at equal weight resolve to the lexicographically smallest label
vector and results are deterministic regardless of traversal order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .errors import BudgetExceeded, InvalidParameters

DP_STATE_CAP = 2_000_000


class LabelAlgebra(NamedTuple):
    name: str
    labels: tuple[int, ...]
    weight: tuple[int, ...]
    reduce: tuple[tuple[int, ...], ...]
    need: int


def _saturating(need: int, nlabels: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(max(0, d - c) for c in range(nlabels)) for d in range(need + 1)
    )


ALGEBRAS = {
    "italian": LabelAlgebra(
        "italian", (0, 1, 2), (0, 1, 2), _saturating(2, 3), 2
    ),
    "domination": LabelAlgebra(
        "domination", (0, 1), (0, 1), _saturating(1, 2), 1
    ),
    "rainbow2": LabelAlgebra(
        "rainbow2",
        (0, 1, 2, 3),
        (0, 1, 1, 2),
        tuple(tuple(d & ~c for c in range(4)) for d in range(4)),
        3,
    ),
}


@dataclass(frozen=True)
class DpState:
    """Decoded window state, for inspection and debugging."""

    position: int
    inner_window: tuple[tuple[int, int], ...]  # (label, demand) at depths 1..k
    outer: tuple[int, int]
    wrap_residuals: tuple[int, ...]  # demands of o_0, i_0, ..., i_{k-1}


def decode_state(k: int, win: tuple[int, ...], residuals: tuple[int, ...], c: int) -> DpState:
    inner = tuple((win[2 * j], win[2 * j + 1]) for j in range(k))
    return DpState(
        position=c,
        inner_window=inner,
        outer=(win[2 * k], win[2 * k + 1]),
        wrap_residuals=residuals,
    )


def _transitions(win, c, n, k, alg, a0, bs):
    """Legal transitions from window `win` when deciding column c.

    Yields (lo, li, new_window, weight_delta, residual_ops) where
    residual_ops is a tuple of (slot, op, operand) with op 'r' (reduce by
    a label contribution) or 'a' (assign a freshly created demand).
    """
    labels = alg.labels
    red = alg.reduce
    wt = alg.weight
    need = alg.need
    k2 = 2 * k
    ilk = win[k2 - 2]  # inner label of column c-k
    idk = win[k2 - 1]  # its pending demand
    ol = win[k2]
    od = win[k2 + 1]
    lo_choices = (a0,) if c == 0 else labels
    li_choices = (bs[c],) if c < k else labels
    in_wrap_phase = k <= c < k2
    check_inner = c >= k2
    check_outer = c >= 2
    outer_wrap = c == 1
    late_t = c - (n - k)
    last = c == n - 1
    left_ready = c >= k
    out = []
    for lo in lo_choices:
        for li in li_choices:
            r_ops = []
            # column c-k's inner vertex: last in-window neighbor decided now
            if check_inner:
                if red[idk][li] != 0:
                    continue
            elif in_wrap_phase:
                r_ops.append((1 + c - k, "r", li))
            # column c-1's outer vertex
            if check_outer:
                if red[od][lo] != 0:
                    continue
            elif outer_wrap:
                r_ops.append((0, "r", lo))
            # closing window: this column's labels feed the wrap vertices
            if late_t >= 0:
                r_ops.append((1 + late_t, "r", li))
                if last:
                    r_ops.append((0, "r", lo))
            # demand of the new inner vertex
            if li == 0:
                d = need
                if left_ready:
                    d = red[d][ilk]
                d = red[d][lo]
                if late_t >= 0:
                    d = red[d][bs[c + k - n]]
                    if d != 0:
                        continue
                    ie = (li, 0)
                elif c < k:
                    r_ops.append((1 + c, "a", d))
                    ie = (li, 0)
                else:
                    ie = (li, d)
            else:
                ie = (li, 0)
            # demand of the new outer vertex
            if lo == 0:
                d = need
                d = red[d][li]
                if c >= 1:
                    d = red[d][ol]
                if last:
                    d = red[d][a0]
                    if d != 0:
                        continue
                    oe = (lo, 0)
                elif c == 0:
                    r_ops.append((0, "a", d))
                    oe = (lo, 0)
                else:
                    oe = (lo, d)
            else:
                oe = (lo, 0)
            new_win = ie + win[: k2 - 2] + oe
            out.append((lo, li, new_win, wt[lo] + wt[li], tuple(r_ops)))
    return out


# Middle-phase transitions depend only on (kind, k, window); cache them
# across seams and across calls.
_MID_MEMO: dict[tuple[str, int], dict] = {}


def solve_cycle(
    n: int, k: int, kind: str, state_cap: int = DP_STATE_CAP
) -> tuple[int, bytes, int]:
    """Minimum weight over the cyclic column structure of P(n, k).

    Returns (optimum, witness label bytes in vertex order, states explored).
    """
    if kind not in ALGEBRAS:
        raise InvalidParameters(f"unknown invariant kind {kind!r}")
    if n < 3 or k < 1 or 2 * k >= n:
        raise InvalidParameters(f"P(n,k) requires n >= 3, 2k < n; got n={n}, k={k}")
    alg = ALGEBRAS[kind]
    red = alg.reduce
    mid_memo = _MID_MEMO.setdefault((alg.name, k), {})
    init_win = (-1, 0) * k + (-1, 0)
    zero_r = (0,) * (k + 1)
    prune = 2 * n  # the all-ones labeling is always valid at this weight
    best: tuple[int, bytes] | None = None
    explored = 0
    for seam in product(alg.labels, repeat=k + 1):
        a0 = seam[0]
        bs = seam[1:]
        states = {(init_win, zero_r): (0, b"")}
        dead = False
        for c in range(n):
            new_states: dict = {}
            get = new_states.get
            if 2 * k <= c < n - k:
                for (win, res), (w, seq) in states.items():
                    trs = mid_memo.get(win)
                    if trs is None:
                        trs = tuple(
                            (nw, dw, bytes((lo, li)))
                            for lo, li, nw, dw, _ in _transitions(
                                win, c, n, k, alg, a0, bs
                            )
                        )
                        mid_memo[win] = trs
                    for nw, dw, chunk in trs:
                        w2 = w + dw
                        if w2 > prune:
                            continue
                        key = (nw, res)
                        val = (w2, seq + chunk)
                        cur = get(key)
                        if cur is None or val < cur:
                            new_states[key] = val
            else:
                for (win, res), (w, seq) in states.items():
                    for lo, li, nw, dw, r_ops in _transitions(
                        win, c, n, k, alg, a0, bs
                    ):
                        w2 = w + dw
                        if w2 > prune:
                            continue
                        if r_ops:
                            rl = list(res)
                            for slot, op, operand in r_ops:
                                if op == "r":
                                    rl[slot] = red[rl[slot]][operand]
                                else:
                                    rl[slot] = operand
                            res2 = tuple(rl)
                        else:
                            res2 = res
                        key = (nw, res2)
                        val = (w2, seq + bytes((lo, li)))
                        cur = get(key)
                        if cur is None or val < cur:
                            new_states[key] = val
            states = new_states
            explored += len(states)
            if len(states) > state_cap:
                raise BudgetExceeded(
                    f"dp state count {len(states)} exceeds cap {state_cap}"
                )
            if not states:
                dead = True
                break
        if dead:
            continue
        for (win, res), (w, seq) in states.items():
            if res != zero_r:
                continue
            cand = (w, seq)
            if best is None or cand < best:
                best = cand
                if w < prune:
                    prune = w
    if best is None:
        raise BudgetExceeded("dp found no closing state (pruning bug)")
    return best[0], best[1], explored
