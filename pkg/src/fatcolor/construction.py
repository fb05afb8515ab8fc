"""Regular graphs carrying a FAT k-coloring with prescribed rational (alpha, beta).

For ``alpha == 0`` the graph is ``k`` disjoint copies of ``K_{n+1}``, one per
class. For ``alpha = a0/b0 > 0`` (lowest terms) fix the least ``g`` with
``g * (b0 - (k-1) a0) > k`` and put::

    a = (g + n) a0,   b = (g + n) b0,   ell = b - (k-1) a + 1.

Vertices are triples ``(r, s, t)`` in ``[k] x [a] x [ell]``; two are adjacent
when they share ``t`` and differ in ``r``, or share ``r`` and ``s`` and differ
in ``t``. The graph is ``b``-regular, colouring by ``r`` is FAT with
parameters ``(a/b, 1 - (k-1) a/b)``, and its clique number is ``ell``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from fatcolor.fat import Partition, verify_fat
from fatcolor.graph import Graph, certificate_from_omegas, clique_number, is_regular
from fatcolor.rational import RationalLike, to_rational

ALPHA_ZERO = "alpha_zero"
ALPHA_POSITIVE = "alpha_positive"

CLIQUE_GATE = 300


class PlanError(ValueError):
    pass


@dataclass(frozen=True)
class ConstructionPlan:
    k: int
    alpha: Fraction
    beta: Fraction
    n: int
    branch: str
    a: int
    b: int
    a0: Optional[int] = None
    b0: Optional[int] = None
    g: Optional[int] = None
    ell: Optional[int] = None

    @property
    def component_order(self) -> Optional[int]:
        """Order of each complete component on the alpha = 0 branch."""
        return self.n + 1 if self.branch == ALPHA_ZERO else None

    def vertex_index(self, r: int, s: int, t: int) -> int:
        """Flat id of the 1-based triple ``(r, s, t)`` (alpha > 0 branch)."""
        if self.branch != ALPHA_POSITIVE:
            raise PlanError("triples only exist on the alpha > 0 branch")
        return ((r - 1) * self.a + (s - 1)) * self.ell + (t - 1)

    def vertex_triple(self, v: int) -> tuple[int, int, int]:
        if self.branch != ALPHA_POSITIVE:
            raise PlanError("triples only exist on the alpha > 0 branch")
        rs, t0 = divmod(v, self.ell)
        r0, s0 = divmod(rs, self.a)
        return r0 + 1, s0 + 1, t0 + 1


@dataclass(frozen=True)
class PredictedProperties:
    order: int
    regular_degree: int
    clique_number: int
    class_sizes: tuple[int, ...]


def least_g(k: int, a0: int, b0: int) -> int:
    gap = b0 - (k - 1) * a0
    return k // gap + 1


def plan_construction(
    k: int, alpha: RationalLike, n: int, *, g: Optional[int] = None
) -> ConstructionPlan:
    """Derive every quantity of the construction for ``(k, alpha, n)``.

    ``g`` defaults to the least admissible value; an explicit ``g`` must
    still satisfy ``g * (b0 - (k-1) a0) > k``.
    """
    alpha = to_rational(alpha)
    if k < 2:
        raise PlanError(f"k must be at least 2, got {k}")
    if n < 1:
        raise PlanError(f"n must be a positive integer, got {n}")
    if not 0 <= alpha < Fraction(1, k - 1):
        raise PlanError(f"alpha must lie in [0, 1/{k - 1}), got {alpha}")
    beta = 1 - (k - 1) * alpha

    if alpha == 0:
        if g is not None:
            raise PlanError("g only applies when alpha > 0")
        return ConstructionPlan(k=k, alpha=alpha, beta=beta, n=n, branch=ALPHA_ZERO, a=0, b=n)

    a0, b0 = alpha.numerator, alpha.denominator
    gap = b0 - (k - 1) * a0
    if g is None:
        g = least_g(k, a0, b0)
    elif g < 1 or g * gap <= k:
        raise PlanError(f"g={g} does not satisfy g * {gap} > {k}")
    a = (g + n) * a0
    b = (g + n) * b0
    ell = b - (k - 1) * a + 1
    return ConstructionPlan(
        k=k, alpha=alpha, beta=beta, n=n, branch=ALPHA_POSITIVE,
        a=a, b=b, a0=a0, b0=b0, g=g, ell=ell,
    )


def build_graph(plan: ConstructionPlan) -> tuple[Graph, Partition]:
    """The graph of ``plan`` and its colouring by first coordinate."""
    k = plan.k
    if plan.branch == ALPHA_ZERO:
        m = plan.component_order
        graph = Graph.disjoint_union(*(Graph.complete(m) for _ in range(k)))
        part = Partition(tuple(c + 1 for c in range(k) for _ in range(m)), k)
        return graph, part

    a, ell = plan.a, plan.ell
    idx = plan.vertex_index
    rows: list[tuple[int, ...]] = []
    class_of: list[int] = []
    for r in range(1, k + 1):
        for s in range(1, a + 1):
            for t in range(1, ell + 1):
                same_layer = [idx(r2, s2, t) for r2 in range(1, k + 1) if r2 != r for s2 in range(1, a + 1)]
                same_fibre = [idx(r, s, t2) for t2 in range(1, ell + 1) if t2 != t]
                rows.append(tuple(sorted(same_layer + same_fibre)))
                class_of.append(r)
    return Graph(len(rows), tuple(rows)), Partition(tuple(class_of), k)


def predict_properties(plan: ConstructionPlan) -> PredictedProperties:
    k = plan.k
    if plan.branch == ALPHA_ZERO:
        m = plan.component_order
        return PredictedProperties(k * m, m - 1, m, (m,) * k)
    a, ell = plan.a, plan.ell
    return PredictedProperties(k * a * ell, plan.b, max(k, ell), (a * ell,) * k)


@dataclass
class Check:
    name: str
    status: str  # "pass" | "fail" | "unchecked"
    predicted: Any
    measured: Any = None
    note: str = ""


@dataclass
class ConstructionReport:
    plan: ConstructionPlan
    predicted: PredictedProperties
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def verify_construction(plan: ConstructionPlan, *, clique_gate: int = CLIQUE_GATE) -> ConstructionReport:
    """Build the graph and compare it with the analytic predictions.

    Checks the order, regularity, the FAT parameters of the canonical
    colouring and, up to ``clique_gate`` vertices, the clique number. A
    clique check beyond the gate is recorded as ``"unchecked"``.
    """
    pred = predict_properties(plan)
    graph, part = build_graph(plan)
    report = ConstructionReport(plan, pred)

    report.checks.append(
        Check("order", "pass" if graph.order == pred.order else "fail", pred.order, graph.order)
    )

    deg = is_regular(graph)
    report.checks.append(
        Check("regularity", "pass" if deg == pred.regular_degree else "fail", pred.regular_degree, deg)
    )

    verdict = verify_fat(graph, part)
    expected = (plan.alpha, plan.beta)
    if verdict.valid and verdict.params.determined:
        measured = (verdict.params.alpha, verdict.params.beta)
        ok = measured == expected
    else:
        measured = None
        ok = False
    report.checks.append(
        Check(
            "fat",
            "pass" if ok else "fail",
            expected,
            measured,
            "" if verdict.valid else f"invalid at vertex {verdict.witness.vertex}",
        )
    )

    if graph.order <= clique_gate:
        omega = clique_number(graph)
        report.checks.append(
            Check("clique_number", "pass" if omega == pred.clique_number else "fail", pred.clique_number, omega)
        )
    else:
        report.checks.append(
            Check(
                "clique_number",
                "unchecked",
                pred.clique_number,
                note=f"unchecked at this scale: {graph.order} vertices > gate {clique_gate}",
            )
        )
    return report


@dataclass(frozen=True)
class SweepEntry:
    i: int
    j: int
    omega_i: int
    omega_j: int
    status: str
    source: str  # "measured" when both clique numbers were computed


def non_equivalence_sweep(
    k: int, alpha: RationalLike, n_max: int, *, clique_gate: int = CLIQUE_GATE
) -> tuple[dict[int, dict[str, Optional[int]]], list[SweepEntry]]:
    """Clique-number certificates for every pair ``i < j <= n_max``.

    Returns per-n clique numbers (predicted, and measured within the gate)
    and one certificate per pair, built from measured values when both are
    available.
    """
    if n_max < 1:
        raise PlanError("n_max must be positive")
    omegas: dict[int, dict[str, Optional[int]]] = {}
    for n in range(1, n_max + 1):
        plan = plan_construction(k, alpha, n)
        pred = predict_properties(plan)
        measured = None
        if pred.order <= clique_gate:
            graph, _ = build_graph(plan)
            measured = clique_number(graph)
        omegas[n] = {"predicted": pred.clique_number, "measured": measured}

    entries = []
    for i in range(1, n_max + 1):
        for j in range(i + 1, n_max + 1):
            mi, mj = omegas[i]["measured"], omegas[j]["measured"]
            if mi is not None and mj is not None:
                wi, wj, source = mi, mj, "measured"
            else:
                wi, wj, source = omegas[i]["predicted"], omegas[j]["predicted"], "predicted"
            cert = certificate_from_omegas(wi, wj)
            entries.append(SweepEntry(i, j, wi, wj, cert.status, source))
    return omegas, entries
