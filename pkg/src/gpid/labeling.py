"""Labelings on P(n, k) and their validators.

Three kinds of assignment are handled:

* ``Labeling``        -- vertex -> {0, 1, 2}; a candidate Italian
  dominating function (IDF).  Valid iff every 0-vertex sees neighbor
  labels summing to at least 2.
* ``RainbowLabeling`` -- vertex -> subset of {1, 2}, encoded as a 2-bit
  mask (bit 1 = color 1, bit 2 = color 2); a candidate 2-rainbow
  dominating function.  Valid iff every empty-set vertex sees both colors.
* plain vertex sets   -- candidate dominating sets.

Validators return a report listing all violating vertices instead of
raising; invalid input is data, not an error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import FormatError, InvalidParameters, NotA2RDF
from .graph import PetersenGraph, build_petersen

RAINBOW_MASK_TO_STR = {0: "0", 1: "1", 2: "2", 3: "12"}
RAINBOW_STR_TO_MASK = {v: k for k, v in RAINBOW_MASK_TO_STR.items()}


@dataclass(frozen=True)
class Labeling:
    """A vertex -> {0,1,2} assignment on P(n, k)."""

    n: int
    k: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != 2 * self.n:
            raise InvalidParameters(
                f"expected {2 * self.n} values for n={self.n}, got {len(self.values)}"
            )
        if any(v not in (0, 1, 2) for v in self.values):
            raise InvalidParameters("labels must be 0, 1 or 2")

    def graph(self) -> PetersenGraph:
        return build_petersen(self.n, self.k)

    def level_sets(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        """(V_0, V_1, V_2): vertices labeled 0, 1, 2."""
        sets = ([], [], [])
        for v, val in enumerate(self.values):
            sets[val].append(v)
        return tuple(frozenset(s) for s in sets)  # type: ignore[return-value]


@dataclass(frozen=True)
class RainbowLabeling:
    """A vertex -> subset-of-{1,2} assignment, stored as 2-bit masks."""

    n: int
    k: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != 2 * self.n:
            raise InvalidParameters(
                f"expected {2 * self.n} values for n={self.n}, got {len(self.values)}"
            )
        if any(v not in (0, 1, 2, 3) for v in self.values):
            raise InvalidParameters("rainbow labels must be masks 0..3")

    def graph(self) -> PetersenGraph:
        return build_petersen(self.n, self.k)


@dataclass(frozen=True)
class ColumnWeight:
    i: int
    w: int


@dataclass(frozen=True)
class EdgeClasses:
    """Edges inside V_1 (e11) and between V_1 and V_2 (e12)."""

    e11: frozenset[tuple[int, int]]
    e12: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a validator; violations lists (vertex, observed) pairs."""

    valid: bool
    violations: tuple[tuple[int, int], ...]


def weight(f: Labeling | RainbowLabeling) -> int:
    """Total weight: sum of labels, or sum of |f(v)| for rainbow labelings."""
    if isinstance(f, RainbowLabeling):
        return sum(bin(v).count("1") for v in f.values)
    return sum(f.values)


def validate_idf(f: Labeling) -> ValidationReport:
    """Check the Italian domination condition at every 0-vertex."""
    adj = f.graph().adjacency
    vals = f.values
    bad = []
    for v, val in enumerate(vals):
        if val == 0:
            s = vals[adj[v][0]] + vals[adj[v][1]] + vals[adj[v][2]]
            if s < 2:
                bad.append((v, s))
    return ValidationReport(valid=not bad, violations=tuple(bad))


def validate_2rdf(f: RainbowLabeling) -> ValidationReport:
    """Check that every empty-labeled vertex sees both colors among neighbors."""
    adj = f.graph().adjacency
    vals = f.values
    bad = []
    for v, val in enumerate(vals):
        if val == 0:
            u = vals[adj[v][0]] | vals[adj[v][1]] | vals[adj[v][2]]
            if u != 3:
                bad.append((v, u))
    return ValidationReport(valid=not bad, violations=tuple(bad))


def validate_dominating(g: PetersenGraph, s) -> ValidationReport:
    """Check that the closed neighborhood of s covers every vertex."""
    chosen = set(s)
    bad = []
    for v in range(g.num_vertices):
        if v in chosen or any(u in chosen for u in g.adjacency[v]):
            continue
        bad.append((v, 0))
    return ValidationReport(valid=not bad, violations=tuple(bad))


def rainbow_to_idf(f: RainbowLabeling) -> Labeling:
    """Convert a valid 2RDF into the IDF g(v) = |f(v)| of equal weight."""
    report = validate_2rdf(f)
    if not report.valid:
        raise NotA2RDF(
            f"labeling violates the 2RDF condition at {len(report.violations)} vertices"
        )
    return Labeling(f.n, f.k, tuple(bin(v).count("1") for v in f.values))


def column_weights(f: Labeling) -> list[ColumnWeight]:
    """Per-column label sums w_i = f(v_{2i}) + f(v_{2i+1})."""
    return [
        ColumnWeight(i, f.values[2 * i] + f.values[2 * i + 1]) for i in range(f.n)
    ]


def edge_classes(f: Labeling) -> EdgeClasses:
    g = f.graph()
    vals = f.values
    e11 = []
    e12 = []
    for u, v in g.edges():
        a, b = vals[u], vals[v]
        if a == 1 and b == 1:
            e11.append((u, v))
        elif (a, b) in ((1, 2), (2, 1)):
            e12.append((u, v))
    return EdgeClasses(e11=frozenset(e11), e12=frozenset(e12))


def render_matrix(f: Labeling) -> str:
    """Two-row matrix text: top row outer labels, bottom row inner labels."""
    top = " ".join(str(f.values[2 * i]) for i in range(f.n))
    bottom = " ".join(str(f.values[2 * i + 1]) for i in range(f.n))
    return top + "\n" + bottom


def parse_matrix(text: str, n: int, k: int) -> Labeling:
    """Parse matrix text (rows split on newline or '/') back into a Labeling."""
    rows = [r for r in text.replace("/", "\n").splitlines() if r.strip()]
    if len(rows) != 2:
        raise FormatError(f"expected 2 rows, got {len(rows)}")
    grid = []
    for row in rows:
        toks = row.split()
        if len(toks) != n:
            raise FormatError(f"expected {n} columns, got {len(toks)} in {row!r}")
        try:
            digits = [int(t) for t in toks]
        except ValueError as exc:
            raise FormatError(f"non-numeric token in {row!r}") from exc
        if any(d not in (0, 1, 2) for d in digits):
            raise FormatError("matrix digits must be 0, 1 or 2")
        grid.append(digits)
    values = []
    for i in range(n):
        values.append(grid[0][i])
        values.append(grid[1][i])
    return Labeling(n, k, tuple(values))


def labeling_to_json(f: Labeling) -> str:
    return json.dumps({"n": f.n, "k": f.k, "values": list(f.values)}, sort_keys=True)


def labeling_from_json(text: str) -> Labeling:
    try:
        obj = json.loads(text)
        return Labeling(int(obj["n"]), int(obj["k"]), tuple(int(v) for v in obj["values"]))
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise FormatError(f"bad labeling JSON: {exc}") from exc


def rainbow_to_json(f: RainbowLabeling) -> str:
    vals = [RAINBOW_MASK_TO_STR[v] for v in f.values]
    return json.dumps({"n": f.n, "k": f.k, "values": vals}, sort_keys=True)


def rainbow_from_json(text: str) -> RainbowLabeling:
    try:
        obj = json.loads(text)
        masks = tuple(RAINBOW_STR_TO_MASK[str(v)] for v in obj["values"])
        return RainbowLabeling(int(obj["n"]), int(obj["k"]), masks)
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise FormatError(f"bad rainbow labeling JSON: {exc}") from exc
