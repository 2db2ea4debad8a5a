"""Spectrum transfer across the edge-to-polygon transform.

The full normalized-Laplacian spectrum of the transformed graph is
assembled from the base spectrum alone: the fixed family roots enter with
structural multiplicities, every base eigenvalue off {0, 2} spawns the
roots of its transfer equation, and 0 (plus 2 in the bipartite odd case)
is appended explicitly. Multiplicities stay exact integers throughout, so
generations can be iterated far past any explicitly constructible size.
Eigenvectors can be lifted one transform step along the same bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import aseries, oracle, roots
from .graphs import Graph

CLUSTER_TOL = 1e-7   # numeric eigenvalues closer than this merge
SNAP_TOL = 1e-9      # distance at which a value snaps to exactly 0 or 2
EDGE_TOL = 1e-12     # values this close to 0 or 2 are treated as 0 or 2

SOURCE_ZERO = "zero"
SOURCE_TWO = "two"
SOURCE_FAMILY_ZERO = "family-zero"
SOURCE_FAMILY_PLUS = "family-plus"
SOURCE_FAMILY_MINUS = "family-minus"
SOURCE_LIFTED = "lifted"
SOURCE_BASE = "base"


def _is_zero(value: float) -> bool:
    return abs(value) < EDGE_TOL


def _is_two(value: float) -> bool:
    return abs(value - 2.0) < EDGE_TOL


@dataclass(frozen=True)
class SpectrumEntry:
    value: float
    multiplicity: int
    source: str
    origin: float | None = None  # base eigenvalue behind a lifted entry

    def source_label(self) -> str:
        if self.source == SOURCE_LIFTED:
            return f"lifted({self.origin:.17g})"
        return self.source


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset as (value, multiplicity, source) entries.

    Entries are sorted by value. Entries whose values coincide are kept
    separate while their sources differ; merged() gives the export view.
    """

    entries: tuple[SpectrumEntry, ...]

    @property
    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def merged(self, tol: float = SNAP_TOL) -> list[tuple[float, int]]:
        """(value, multiplicity) pairs with near-equal values collapsed."""
        out: list[tuple[float, int]] = []
        for e in self.entries:
            if out and e.value - out[-1][0] <= tol:
                out[-1] = (out[-1][0], out[-1][1] + e.multiplicity)
            else:
                out.append((e.value, e.multiplicity))
        return out

    def expanded(self) -> np.ndarray:
        """Every eigenvalue repeated by multiplicity (explicit sizes only)."""
        values = [e.value for e in self.entries]
        counts = [e.multiplicity for e in self.entries]
        return np.repeat(np.asarray(values), counts)


@dataclass(frozen=True)
class SpectrumContext:
    vertices: int
    edges: int
    bipartite: bool


def _entry_order(entry: SpectrumEntry):
    origin = -1.0 if entry.origin is None else entry.origin
    return (entry.value, entry.source, origin)


def _check_input(spec: Spectrum, ctx: SpectrumContext) -> None:
    if ctx.vertices < 2 or ctx.edges < 1:
        raise ValueError(f"invalid context N={ctx.vertices}, E={ctx.edges}")
    if not ctx.bipartite and ctx.edges < ctx.vertices:
        raise ValueError("non-bipartite context requires at least N edges")
    zero_mult = 0
    for e in spec.entries:
        if e.multiplicity < 1:
            raise ValueError(f"nonpositive multiplicity at value {e.value}")
        if not -EDGE_TOL < e.value < 2.0 + EDGE_TOL:
            raise ValueError(f"eigenvalue {e.value} outside [0, 2]")
        if _is_zero(e.value):
            zero_mult += e.multiplicity
    if zero_mult != 1:
        raise ValueError(f"0 must have multiplicity 1, found {zero_mult}")
    if spec.total_multiplicity != ctx.vertices:
        raise ValueError(
            f"total multiplicity {spec.total_multiplicity} != N={ctx.vertices}")


def base_spectrum(graph: Graph) -> tuple[Spectrum, SpectrumContext]:
    """Numeric spectrum of the graph itself, clustered into exact multiplicities.

    Eigenvalues within CLUSTER_TOL of each other merge into one entry whose
    value is the cluster mean; values within SNAP_TOL of 0 or 2 snap exactly.
    """
    if not graph.connected:
        raise ValueError("spectrum pipeline requires a connected graph")
    eigs = oracle.eig_sym(oracle.normalized_laplacian(graph))
    clusters: list[list[float]] = []
    for value in eigs:
        if clusters and value - clusters[-1][-1] <= CLUSTER_TOL:
            clusters[-1].append(float(value))
        else:
            clusters.append([float(value)])
    entries = []
    for cluster in clusters:
        value = sum(cluster) / len(cluster)
        source = SOURCE_BASE
        if abs(value) <= SNAP_TOL:
            value, source = 0.0, SOURCE_ZERO
        elif abs(value - 2.0) <= SNAP_TOL:
            value, source = 2.0, SOURCE_TWO
        entries.append(SpectrumEntry(value, len(cluster), source))
    if entries[0].value != 0.0 or entries[0].multiplicity != 1:
        raise RuntimeError("connected graph must have a simple 0 eigenvalue")
    has_two = entries[-1].value == 2.0
    if has_two != graph.bipartite:
        raise RuntimeError("eigenvalue 2 disagrees with the bipartite flag")
    ctx = SpectrumContext(graph.vertex_count, len(graph.edges), graph.bipartite)
    return Spectrum(tuple(entries)), ctx


def transform_spectrum(spec: Spectrum, ctx: SpectrumContext,
                       n: int) -> tuple[Spectrum, SpectrumContext]:
    """One transform step on the spectrum level.

    Output multiplicities: the zero-type family carries N, the others carry
    the cycle count E-N+1 (the minus-type family drops to E-N when the
    input is not bipartite), each base eigenvalue off {0, 2} contributes
    its transfer roots with its own multiplicity, 0 enters once, and 2
    enters once exactly when the output is bipartite (odd n, bipartite
    input). The total must close to the new vertex count.
    """
    if n < 2:
        raise ValueError(f"polygon parameter must be at least 2, got {n}")
    _check_input(spec, ctx)
    odd = bool(n % 2)
    out_bipartite = ctx.bipartite and odd
    new_vertices = ctx.vertices + (n - 1) * ctx.edges
    new_edges = (n + 1) * ctx.edges
    cycles = ctx.edges - ctx.vertices + 1
    minus_mult = cycles if ctx.bipartite else cycles - 1
    entries = [SpectrumEntry(0.0, 1, SOURCE_ZERO)]
    if out_bipartite:
        entries.append(SpectrumEntry(2.0, 1, SOURCE_TWO))
    if odd:
        plan = [(roots.FamilyKind.ODD_ZERO, ctx.vertices, SOURCE_FAMILY_ZERO),
                (roots.FamilyKind.ODD_PLUS, cycles, SOURCE_FAMILY_PLUS),
                (roots.FamilyKind.ODD_MINUS, minus_mult, SOURCE_FAMILY_MINUS)]
    else:
        plan = [(roots.FamilyKind.EVEN_PLUS, ctx.vertices, SOURCE_FAMILY_PLUS),
                (roots.FamilyKind.EVEN_ZERO, cycles, SOURCE_FAMILY_ZERO),
                (roots.FamilyKind.EVEN_MINUS, minus_mult, SOURCE_FAMILY_MINUS)]
    for kind, mult, tag in plan:
        if mult < 0:
            raise ValueError(f"negative multiplicity {mult} for {tag}")
        if mult == 0:
            continue
        family = roots.roots_of_family(roots.RootFamily(kind, n))
        entries.extend(SpectrumEntry(r, mult, tag) for r in family.roots)
    inner = [e for e in spec.entries
             if not (_is_zero(e.value) or _is_two(e.value))]
    if inner:
        table = roots.solve_lambda_many(n, [e.value for e in inner])
        for e, row in zip(inner, table):
            entries.extend(
                SpectrumEntry(float(r), e.multiplicity, SOURCE_LIFTED,
                              origin=e.value) for r in row)
    total = sum(e.multiplicity for e in entries)
    if total != new_vertices:
        raise RuntimeError(
            f"multiplicity ledger mismatch: {total} != {new_vertices}")
    entries.sort(key=_entry_order)
    return (Spectrum(tuple(entries)),
            SpectrumContext(new_vertices, new_edges, out_bipartite))


def iterate_spectrum(spec: Spectrum, ctx: SpectrumContext, n: int,
                     g: int) -> tuple[Spectrum, SpectrumContext]:
    """g-fold spectrum transfer; g = 0 returns the input unchanged."""
    if g < 0:
        raise ValueError(f"generation must be nonnegative, got {g}")
    for _ in range(g):
        spec, ctx = transform_spectrum(spec, ctx, n)
    return spec, ctx


def lift_eigenvector(graph: Graph, n: int, lam: float, vec, mu: float,
                     tol: float = 1e-8) -> np.ndarray:
    """Extend a base eigenvector with eigenvalue lam to the transformed graph.

    mu must be a transfer root of lam with a_{n-1}(mu) != 0. Original
    vertices keep their entries; each new path is seeded from its two
    endpoint values (in random-walk scaling, hence the degree square
    roots) and continued by the recurrence. The result is an eigenvector
    of the transformed graph's normalized Laplacian for eigenvalue mu.
    """
    if n < 2:
        raise ValueError(f"polygon parameter must be at least 2, got {n}")
    vec = np.asarray(vec, dtype=float)
    if vec.shape != (graph.vertex_count,):
        raise ValueError(
            f"vector length {vec.shape} does not match {graph.vertex_count}")
    lap = oracle.normalized_laplacian(graph).entries
    norm = float(np.linalg.norm(vec))
    if norm == 0.0:
        raise ValueError("zero vector")
    if float(np.linalg.norm(lap @ vec - lam * vec)) > tol * norm:
        raise ValueError("(lam, vec) is not an eigenpair of the base graph")
    a_last = aseries.eval_a(n - 1, float(mu))
    if abs(a_last) < 1e-12:
        raise ValueError(
            "a_{n-1}(mu) vanishes; mu belongs to a fixed family, not a lift")
    a_prev = aseries.eval_a(n - 2, float(mu))
    scale = 1.0 / np.sqrt(np.asarray(graph.degrees, dtype=float))
    out = np.zeros(graph.vertex_count + (n - 1) * len(graph.edges))
    out[:graph.vertex_count] = vec
    step = 2.0 * (1.0 - mu)
    for e, (i, j) in enumerate(graph.edges):
        base = graph.vertex_count + e * (n - 1)
        seed = vec[i] * scale[i]
        out[base] = (a_prev / a_last) * seed + vec[j] * scale[j] / a_last
        if n >= 3:
            out[base + 1] = step * out[base] - seed
            for k in range(2, n - 1):
                out[base + k] = step * out[base + k - 1] - out[base + k - 2]
    return out
