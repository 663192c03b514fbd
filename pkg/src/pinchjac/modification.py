"""Modifications: pulling a component away from the rest at one branch.

A branch is a modification site when it is reduced, is the only branch of its
component at that singularity, every branch of the singularity is reduced,
and detaching it strictly increases the number of connected components of the
dual graph. Performing the modification removes the branch; a singularity
left with a single reduced branch disappears entirely (the point becomes
smooth). All three Jacobian ranks are invariant under modification.

Singularities mixing reduced and non-reduced branches are excluded from the
site list and reported separately as indeterminate: whether such a branch
qualifies is not settled by the contraction-type model.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve_model import (
    CurveConfig,
    Singularity,
    connected_component_count,
    require_valid,
)
from .errors import NotASite


@dataclass(frozen=True)
class ModificationSite:
    """A (singularity, branch index) pair along which the curve can be pulled apart."""

    singularity: str
    branch: int


def _candidate(config: CurveConfig, singularity, branch_index: int, *, reduced_only: bool) -> bool:
    branch = singularity.branches[branch_index]
    if branch.multiplicity != 1:
        return False
    siblings_on_component = sum(
        1 for b in singularity.branches if b.component == branch.component
    )
    if siblings_on_component != 1:
        return False
    if reduced_only and any(b.multiplicity != 1 for b in singularity.branches):
        return False
    base = connected_component_count(config)
    detached = connected_component_count(
        config, exclude_edges=[(singularity.id, branch_index)]
    )
    return detached == base + 1


def modifiable_sites(config: CurveConfig) -> tuple[ModificationSite, ...]:
    """All modification sites, in configuration order."""
    require_valid(config)
    sites = []
    for s in config.singularities:
        for i in range(len(s.branches)):
            if _candidate(config, s, i, reduced_only=True):
                sites.append(ModificationSite(s.id, i))
    return tuple(sites)


def indeterminate_sites(config: CurveConfig) -> tuple[ModificationSite, ...]:
    """Reduced disconnecting branches of singularities with a thick branch.

    These satisfy every site condition except full reducedness of the
    singularity; eligibility is left undecided rather than guessed.
    """
    require_valid(config)
    out = []
    for s in config.singularities:
        if all(b.multiplicity == 1 for b in s.branches):
            continue
        for i in range(len(s.branches)):
            if _candidate(config, s, i, reduced_only=False):
                out.append(ModificationSite(s.id, i))
    return tuple(out)


def modify(config: CurveConfig, site: ModificationSite) -> CurveConfig:
    """Detach the site's branch; drop the singularity if one branch remains."""
    if site not in modifiable_sites(config):
        raise NotASite(
            f"({site.singularity}, {site.branch}) is not a modification site"
        )
    singularities = []
    for s in config.singularities:
        if s.id != site.singularity:
            singularities.append(s)
            continue
        remaining = tuple(
            b for i, b in enumerate(s.branches) if i != site.branch
        )
        if len(remaining) >= 2:
            singularities.append(Singularity(s.id, remaining))
        # a single remaining reduced branch is a smooth point: singularity gone
    result = CurveConfig(
        name=f"{config.name}_mod",
        components=config.components,
        singularities=tuple(singularities),
        basepoints=config.basepoints,
    )
    require_valid(result)
    return result
