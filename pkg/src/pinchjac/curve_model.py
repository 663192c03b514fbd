"""Curve configurations: rational components pinched at contraction points.

A configuration is a list of components (projective lines, or positive-genus
labels that only contribute rank bookkeeping) together with singularities.
Each singularity is an ordered list of branches; a branch names a component,
a point of it, and a multiplicity recording how thick the pinch is along
that branch. The local ring at a singularity is of contraction type
(constants plus the product of the branch ideals), so its delta invariant is
the total branch multiplicity minus one.

The dual graph has one vertex per component and per singularity and one edge
per branch; its first Betti number is the torus rank of the Jacobian.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Mapping

from .algebra import P1Point
from .errors import InvalidConfig, PositiveGenusUnsupported, UnknownComponent

# Violation kinds reported by validate().
DUPLICATE_COMPONENT_ID = "DuplicateComponentId"
DUPLICATE_SINGULARITY_ID = "DuplicateSingularityId"
UNKNOWN_COMPONENT = "UnknownComponent"
DUPLICATE_BRANCH_POINT = "DuplicateBranchPoint"
BASEPOINT_NOT_SMOOTH = "BasepointNotSmooth"
TOTAL_MULTIPLICITY_TOO_LOW = "TotalMultiplicityTooLow"
POSITIVE_GENUS_THICK_BRANCH = "PositiveGenusThickBranch"


@dataclass(frozen=True)
class Component:
    """An irreducible component: a projective line when genus is zero."""

    id: str
    genus: int = 0

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"component {self.id}: genus must be nonnegative")


@dataclass(frozen=True)
class Branch:
    """A point of the normalization lying over a singularity."""

    component: str
    point: P1Point
    multiplicity: int = 1

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("branch multiplicity must be positive")


@dataclass(frozen=True)
class Singularity:
    """A contraction-type singular point with its ordered branch list."""

    id: str
    branches: tuple[Branch, ...]

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))

    @property
    def total_multiplicity(self) -> int:
        return sum(b.multiplicity for b in self.branches)

    @property
    def delta(self) -> int:
        """Delta invariant: total branch multiplicity minus one."""
        return self.total_multiplicity - 1

    @property
    def branch_count(self) -> int:
        return len(self.branches)


@dataclass(frozen=True)
class CurveConfig:
    """A full configuration; basepoints are optional and per component."""

    name: str
    components: tuple[Component, ...]
    singularities: tuple[Singularity, ...] = ()
    basepoints: tuple[tuple[str, P1Point], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "singularities", tuple(self.singularities))
        ordered = tuple(sorted(self.basepoints, key=lambda kv: kv[0]))
        object.__setattr__(self, "basepoints", ordered)

    def component(self, component_id: str) -> Component:
        for c in self.components:
            if c.id == component_id:
                return c
        raise UnknownComponent(f"no component named {component_id!r}")

    def has_component(self, component_id: str) -> bool:
        return any(c.id == component_id for c in self.components)

    def singularity(self, singularity_id: str):
        for s in self.singularities:
            if s.id == singularity_id:
                return s
        from .errors import UnknownSingularity

        raise UnknownSingularity(f"no singularity named {singularity_id!r}")

    def basepoint(self, component_id: str) -> P1Point | None:
        for cid, point in self.basepoints:
            if cid == component_id:
                return point
        return None

    def branch_points(self) -> Iterable[tuple[str, P1Point]]:
        for s in self.singularities:
            for b in s.branches:
                yield (b.component, b.point)

    def fingerprint(self) -> str:
        """Structural hash tying presentations and classes to this config."""
        parts = []
        for c in self.components:
            parts.append(f"C:{c.id}:{c.genus}")
        for s in self.singularities:
            branches = ",".join(
                f"{b.component}@{b.point}^{b.multiplicity}" for b in s.branches
            )
            parts.append(f"S:{s.id}:[{branches}]")
        for cid, point in self.basepoints:
            parts.append(f"B:{cid}@{point}")
        digest = hashlib.sha256("|".join(parts).encode("utf-8")).hexdigest()
        return digest[:16]


def with_basepoints(config: CurveConfig, mapping: Mapping[str, P1Point]) -> CurveConfig:
    """Copy of the configuration with the given basepoint assignment."""
    return CurveConfig(
        name=config.name,
        components=config.components,
        singularities=config.singularities,
        basepoints=tuple(mapping.items()),
    )


# --------------------------------------------------------------------------
# Validation
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    kind: str
    message: str


def validate(config: CurveConfig) -> list[Violation]:
    """All violations of the configuration invariants; empty means valid."""
    out: list[Violation] = []

    seen_components: set[str] = set()
    for c in config.components:
        if c.id in seen_components:
            out.append(Violation(DUPLICATE_COMPONENT_ID, f"component {c.id!r} repeats"))
        seen_components.add(c.id)

    genus_of = {c.id: c.genus for c in config.components}

    seen_sings: set[str] = set()
    seen_points: set[tuple[str, P1Point]] = set()
    for s in config.singularities:
        if s.id in seen_sings:
            out.append(Violation(DUPLICATE_SINGULARITY_ID, f"singularity {s.id!r} repeats"))
        seen_sings.add(s.id)
        if s.total_multiplicity < 2:
            out.append(
                Violation(
                    TOTAL_MULTIPLICITY_TOO_LOW,
                    f"singularity {s.id!r} has total multiplicity {s.total_multiplicity} < 2",
                )
            )
        for b in s.branches:
            if b.component not in genus_of:
                out.append(
                    Violation(
                        UNKNOWN_COMPONENT,
                        f"singularity {s.id!r} references unknown component {b.component!r}",
                    )
                )
                continue
            key = (b.component, b.point)
            if key in seen_points:
                out.append(
                    Violation(
                        DUPLICATE_BRANCH_POINT,
                        f"branch point ({b.component}, {b.point}) appears more than once",
                    )
                )
            seen_points.add(key)
            if genus_of[b.component] > 0 and b.multiplicity > 1:
                out.append(
                    Violation(
                        POSITIVE_GENUS_THICK_BRANCH,
                        f"component {b.component!r} has positive genus and cannot "
                        f"carry a branch of multiplicity {b.multiplicity}",
                    )
                )

    for cid, point in config.basepoints:
        if cid not in genus_of:
            out.append(
                Violation(UNKNOWN_COMPONENT, f"basepoint names unknown component {cid!r}")
            )
            continue
        if (cid, point) in seen_points:
            out.append(
                Violation(
                    BASEPOINT_NOT_SMOOTH,
                    f"basepoint ({cid}, {point}) is a branch point of a singularity",
                )
            )

    return out


def require_valid(config: CurveConfig) -> None:
    violations = validate(config)
    if violations:
        raise InvalidConfig(violations)


# --------------------------------------------------------------------------
# Dual graph
# --------------------------------------------------------------------------

Vertex = tuple[str, str]  # ("C", component id) or ("S", singularity id)
Edge = tuple[str, int]  # (singularity id, branch index)


@dataclass(frozen=True)
class DualGraph:
    """Bipartite incidence graph of components and singularities."""

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[str, int, str], ...]  # (singularity, branch index, component)
    betti1: int
    connected_components: int


def _edge_list(config: CurveConfig) -> list[tuple[str, int, str]]:
    return [
        (s.id, i, b.component)
        for s in config.singularities
        for i, b in enumerate(s.branches)
    ]


def _vertex_list(config: CurveConfig) -> list[Vertex]:
    return [("C", c.id) for c in config.components] + [
        ("S", s.id) for s in config.singularities
    ]


def _connected_classes(
    vertices: list[Vertex], adjacency: dict[Vertex, list[Vertex]]
) -> list[list[Vertex]]:
    seen: set[Vertex] = set()
    classes: list[list[Vertex]] = []
    for start in vertices:
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        cls = []
        while stack:
            v = stack.pop()
            cls.append(v)
            for w in adjacency.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        classes.append(cls)
    return classes


def _adjacency(
    vertices: list[Vertex],
    edges: list[tuple[str, int, str]],
    *,
    exclude_edges: frozenset[Edge] = frozenset(),
    exclude_singularity: str | None = None,
) -> tuple[list[Vertex], dict[Vertex, list[Vertex]]]:
    kept_vertices = [
        v for v in vertices if not (v[0] == "S" and v[1] == exclude_singularity)
    ]
    adjacency: dict[Vertex, list[Vertex]] = {v: [] for v in kept_vertices}
    for sing, idx, comp in edges:
        if sing == exclude_singularity or (sing, idx) in exclude_edges:
            continue
        u, v = ("S", sing), ("C", comp)
        adjacency[u].append(v)
        adjacency[v].append(u)
    return kept_vertices, adjacency


def dual_graph(config: CurveConfig) -> DualGraph:
    """The dual graph with its first Betti number and component count."""
    require_valid(config)
    vertices = _vertex_list(config)
    edges = _edge_list(config)
    kept, adjacency = _adjacency(vertices, edges)
    classes = _connected_classes(kept, adjacency)
    cc = len(classes)
    betti1 = len(edges) - len(vertices) + cc
    return DualGraph(tuple(vertices), tuple(edges), betti1, cc)


def connected_component_count(
    config: CurveConfig,
    *,
    exclude_edges: Iterable[Edge] = (),
    exclude_singularity: str | None = None,
) -> int:
    """Connected components of the dual graph with edges or one vertex removed."""
    vertices = _vertex_list(config)
    edges = _edge_list(config)
    kept, adjacency = _adjacency(
        vertices,
        edges,
        exclude_edges=frozenset(exclude_edges),
        exclude_singularity=exclude_singularity,
    )
    return len(_connected_classes(kept, adjacency))


def component_partition_without(config: CurveConfig, singularity_id: str) -> tuple[tuple[str, ...], ...]:
    """Partition of component ids after normalizing above one singularity.

    Classes are the connected components of the dual graph with the named
    singularity vertex (and all its branch edges) removed. Classes and their
    members follow the component order of the configuration.
    """
    config.singularity(singularity_id)  # raises UnknownSingularity
    vertices = _vertex_list(config)
    edges = _edge_list(config)
    kept, adjacency = _adjacency(vertices, edges, exclude_singularity=singularity_id)
    order = {c.id: i for i, c in enumerate(config.components)}
    classes = []
    for cls in _connected_classes(kept, adjacency):
        members = sorted((v[1] for v in cls if v[0] == "C"), key=order.__getitem__)
        if members:
            classes.append(tuple(members))
    classes.sort(key=lambda members: order[members[0]])
    return tuple(classes)


def is_smooth_point(config: CurveConfig, component_id: str, point: P1Point) -> bool:
    """True when the point is not a branch point of any singularity."""
    component = config.component(component_id)
    if component.genus > 0:
        raise PositiveGenusUnsupported(
            f"component {component_id!r} has genus {component.genus}; "
            "point arithmetic is only supported on genus-0 components"
        )
    return (component_id, point) not in set(config.branch_points())
