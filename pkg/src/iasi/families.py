"""Named graph family generators and the ``FamilySpec`` descriptor.

Conventions that matter downstream:

* ``path`` is indexed by its EDGE count: ``path(m)`` has m edges and m+1
  vertices, so ``path(1)`` is a single edge.
* The fan ``fan(m, n)`` joins an edgeless graph on m vertices to a path on
  n VERTICES (so its total order is m + n).
* ``sun`` and ``complete_sun`` are separate families: the hull of the first
  is a cycle, of the second a clique.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Mapping

from .errors import DomainError
from .graphs import Graph


@dataclass(frozen=True)
class FamilySpec:
    """A named family, its parameters, and an optional power exponent."""

    family: str
    params: tuple[tuple[str, int], ...] = ()
    power: int = 1

    def __post_init__(self) -> None:
        if self.power < 1:
            raise DomainError(f"power must be >= 1, got {self.power}")
        object.__setattr__(self, "params", tuple(self.params))

    @classmethod
    def make(cls, family: str, power: int = 1, **params: int) -> FamilySpec:
        order = _param_order(family)
        missing = [name for name in order if name not in params]
        extra = [name for name in params if name not in order]
        if missing or extra:
            raise DomainError(
                f"family {family!r} takes parameters {order}; "
                f"missing {missing}, unexpected {extra}"
            )
        return cls(family, tuple((name, int(params[name])) for name in order), power)

    def param(self, name: str) -> int:
        for key, value in self.params:
            if key == name:
                return value
        raise DomainError(f"spec {self.label()} has no parameter {name!r}")

    def params_dict(self) -> dict[str, int]:
        return dict(self.params)

    def label(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({inner})"

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": self.params_dict(),
            "power": self.power,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> FamilySpec:
        try:
            family = str(data["family"])
            params = {str(k): int(v) for k, v in data.get("params", {}).items()}
            power = int(data.get("power", 1))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed family spec: {exc}") from exc
        return cls.make(family, power=power, **params)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DomainError(message)


def _path(m: int) -> Graph:
    _require(m >= 1, f"path requires m >= 1 edges, got m={m}")
    return Graph.make(m + 1, [(i, i + 1) for i in range(m)])


def _cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle requires n >= 3, got n={n}")
    return Graph.make(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph requires n >= 1, got n={n}")
    return Graph.make(n, combinations(range(n), 2))


def _complete_bipartite(m: int, n: int) -> Graph:
    _require(m >= 1 and n >= 1, f"complete bipartite requires m,n >= 1, got m={m}, n={n}")
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    roles = {i: "left" for i in range(m)}
    roles.update({m + j: "right" for j in range(n)})
    return Graph.make(m + n, edges, roles)


def _wheel(n: int) -> Graph:
    # Rim 0..n-1, hub n.  The formula table treats n=3 (which is K_4)
    # specially, but the generator allows it.
    _require(n >= 3, f"wheel requires rim length n >= 3, got n={n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n) for i in range(n)]
    roles = {i: "rim" for i in range(n)}
    roles[n] = "hub"
    return Graph.make(n + 1, edges, roles)


def _helm(n: int) -> Graph:
    # Wheel with one pendant per rim vertex: rim 0..n-1, hub n,
    # pendants n+1..2n.  2n+1 vertices and 3n edges.
    _require(n >= 3, f"helm requires rim length n >= 3, got n={n}")
    wheel = _wheel(n)
    edges = list(wheel.edges) + [(i, n + 1 + i) for i in range(n)]
    roles = dict(wheel.roles)
    roles.update({n + 1 + i: "pendant" for i in range(n)})
    return Graph.make(2 * n + 1, edges, roles)


def _friendship(n: int) -> Graph:
    # n triangles through the common vertex 0.
    _require(n >= 1, f"friendship requires n >= 1 triangles, got n={n}")
    edges = []
    for i in range(n):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    roles = {0: "hub"}
    roles.update({v: "outer" for v in range(1, 2 * n + 1)})
    return Graph.make(2 * n + 1, edges, roles)


def _fan(m: int, n: int) -> Graph:
    # Edgeless part 0..m-1 joined to the path m..m+n-1 (n vertices).
    _require(m >= 1, f"fan requires m >= 1, got m={m}")
    _require(n >= 2, f"fan requires a path on n >= 2 vertices, got n={n}")
    edges = [(m + i, m + i + 1) for i in range(n - 1)]
    edges += [(i, m + j) for i in range(m) for j in range(n)]
    roles = {i: "independent" for i in range(m)}
    roles.update({m + j: "path" for j in range(n)})
    return Graph.make(m + n, edges, roles)


def _complete_split(r: int, s: int) -> Graph:
    # Clique 0..r-1; independent set r..r+s-1 adjacent to the whole clique.
    _require(r >= 1 and s >= 1, f"complete split requires r,s >= 1, got r={r}, s={s}")
    edges = list(combinations(range(r), 2))
    edges += [(i, r + j) for i in range(r) for j in range(s)]
    roles = {i: "clique" for i in range(r)}
    roles.update({r + j: "independent" for j in range(s)})
    return Graph.make(r + s, edges, roles)


def _sun_edges(n: int, hull_complete: bool) -> tuple[list[tuple[int, int]], dict[int, str]]:
    # Hull u_0..u_{n-1} = 0..n-1; independent w_0..w_{n-1} = n..2n-1;
    # w_j is adjacent to u_j and u_{j+1 mod n}.
    if hull_complete:
        edges = list(combinations(range(n), 2))
    else:
        edges = [(i, (i + 1) % n) for i in range(n)]
    for j in range(n):
        edges += [(j, n + j), ((j + 1) % n, n + j)]
    roles = {i: "hull" for i in range(n)}
    roles.update({n + j: "independent" for j in range(n)})
    return edges, roles


def _sun(n: int) -> Graph:
    _require(n >= 3, f"sun requires n >= 3, got n={n}")
    edges, roles = _sun_edges(n, hull_complete=False)
    return Graph.make(2 * n, edges, roles)


def _complete_sun(n: int) -> Graph:
    _require(n >= 3, f"complete sun requires n >= 3, got n={n}")
    edges, roles = _sun_edges(n, hull_complete=True)
    return Graph.make(2 * n, edges, roles)


def _sunlet(n: int) -> Graph:
    # Cycle 0..n-1 with pendant n+i attached to cycle vertex i.
    _require(n >= 3, f"sunlet requires n >= 3, got n={n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    roles = {i: "cycle" for i in range(n)}
    roles.update({n + i: "pendant" for i in range(n)})
    return Graph.make(2 * n, edges, roles)


@dataclass(frozen=True)
class _Family:
    param_names: tuple[str, ...]
    build: Callable[..., Graph] = field(compare=False)


_FAMILIES: dict[str, _Family] = {
    "path": _Family(("m",), _path),
    "cycle": _Family(("n",), _cycle),
    "complete": _Family(("n",), _complete),
    "complete_bipartite": _Family(("m", "n"), _complete_bipartite),
    "wheel": _Family(("n",), _wheel),
    "helm": _Family(("n",), _helm),
    "friendship": _Family(("n",), _friendship),
    "fan": _Family(("m", "n"), _fan),
    "complete_split": _Family(("r", "s"), _complete_split),
    "sun": _Family(("n",), _sun),
    "complete_sun": _Family(("n",), _complete_sun),
    "sunlet": _Family(("n",), _sunlet),
}

FAMILY_NAMES = tuple(sorted(_FAMILIES))


def _param_order(family: str) -> tuple[str, ...]:
    if family not in _FAMILIES:
        raise DomainError(
            f"unknown family {family!r}; known families: {', '.join(FAMILY_NAMES)}"
        )
    return _FAMILIES[family].param_names


def generate(spec: FamilySpec) -> Graph:
    """Build the named family graph (the spec's power is NOT applied here)."""
    entry = _FAMILIES.get(spec.family)
    if entry is None:
        raise DomainError(
            f"unknown family {spec.family!r}; known families: {', '.join(FAMILY_NAMES)}"
        )
    args = [spec.param(name) for name in entry.param_names]
    return entry.build(*args)
