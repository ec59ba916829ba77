"""Enriques diagrams: weighted proximity forests for curve singularities.

A diagram records the equisingularity type of a reduced curve singularity
cluster on a smooth surface.  Vertices are infinitely near points, weighted
by the multiplicity of the strict transform.  Every non-root vertex is
proximate to its parent; it may additionally be proximate to exactly one
more distant ancestor, in which case it is a satellite.  Vertices with no
remote proximity (roots included) are free.  The defining constraints:

  * parent links form a forest, and a remote proximity points at a proper
    ancestor other than the parent (never more than one per vertex);
  * the vertices proximate to a given vertex form an unbroken chain: a
    satellite's parent is itself proximate to the remote target (the
    strict transform of an exceptional divisor is only available in the
    neighborhood of a point it passes through);
  * proximity inequality: the weight of V is at least the total weight of
    the vertices proximate to V;
  * minimality: no leaf is a free vertex of weight 1 (such points carry no
    singularity data and are trimmed).

The classical numerical invariants all come from the weights and the
proximity relation: writing C(n, 2) for binomial coefficients and summing
over vertices,

    deg = sum C(m_V + 1, 2)        delta    = sum C(m_V, 2)
    dim = roots + free vertices    branches = sum (m_V - sum of proximate weights)
    cod = deg - dim                milnor   = 2*delta - branches + roots

and, for a single root, the multiplicity of the Jacobian ideal is
milnor + m_root - 1.  The module also ships the standard named diagrams
(the A, D, E series and the r-nodes diagram rA1) and an exhaustive
enumerator of small diagrams up to isomorphism, which together drive the
verification of a family of sharp inequalities among these invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Vertex:
    """One infinitely near point: weight, parent index, remote proximity."""

    weight: int
    parent: int | None = None
    remote: int | None = None


@dataclass(frozen=True)
class EnriquesDiagram:
    """A weighted proximity forest, vertices listed parent-before-child."""

    vertices: tuple[Vertex, ...]

    def __post_init__(self) -> None:
        for i, v in enumerate(self.vertices):
            if v.parent is not None and not 0 <= v.parent < i:
                raise ValueError(f"vertex {i}: parent {v.parent} does not precede it")
            if v.remote is not None and not 0 <= v.remote < i:
                raise ValueError(f"vertex {i}: remote {v.remote} does not precede it")

    def __len__(self) -> int:
        return len(self.vertices)

    def roots(self) -> list[int]:
        return [i for i, v in enumerate(self.vertices) if v.parent is None]

    def children(self, i: int) -> list[int]:
        return [j for j, v in enumerate(self.vertices) if v.parent == i]

    def proximate_to(self, i: int) -> list[int]:
        """Vertices proximate to i: its children plus its remote satellites."""
        return [
            j
            for j, v in enumerate(self.vertices)
            if v.parent == i or v.remote == i
        ]

    def is_satellite(self, i: int) -> bool:
        return self.vertices[i].remote is not None

    def is_leaf(self, i: int) -> bool:
        return not any(v.parent == i for v in self.vertices)

    def ancestors(self, i: int) -> list[int]:
        """Proper ancestors of i, nearest first."""
        out = []
        p = self.vertices[i].parent
        while p is not None:
            out.append(p)
            p = self.vertices[p].parent
        return out


@dataclass(frozen=True)
class Violation:
    """First failed diagram axiom, with the offending vertex."""

    axiom: str
    vertex: int
    detail: str

    def __str__(self) -> str:
        return f"{self.axiom} violated at vertex {self.vertex}: {self.detail}"


def validate(diagram: EnriquesDiagram) -> Violation | None:
    """Check the diagram axioms; None means the diagram is valid and minimal."""
    for i, v in enumerate(diagram.vertices):
        if v.weight < 1:
            return Violation("positive-weight", i, f"weight {v.weight} is not positive")
    for i, v in enumerate(diagram.vertices):
        if v.remote is None:
            continue
        if v.parent is None:
            return Violation("remote-proximity", i, "a root cannot have a remote proximity")
        if v.remote == v.parent:
            return Violation("remote-proximity", i, "remote target equals the parent")
        if v.remote not in diagram.ancestors(i):
            return Violation(
                "remote-proximity", i, f"remote target {v.remote} is not a proper ancestor"
            )
        parent = diagram.vertices[v.parent]
        if parent.parent != v.remote and parent.remote != v.remote:
            return Violation(
                "proximity-chain",
                i,
                f"parent {v.parent} is not proximate to the remote target {v.remote}",
            )
    for i, v in enumerate(diagram.vertices):
        load = sum(diagram.vertices[j].weight for j in diagram.proximate_to(i))
        if v.weight < load:
            return Violation(
                "proximity-inequality", i, f"weight {v.weight} < proximate total {load}"
            )
    for i, v in enumerate(diagram.vertices):
        if v.weight == 1 and v.remote is None and diagram.is_leaf(i):
            return Violation("minimality", i, "free leaf of weight 1")
    return None


@dataclass(frozen=True)
class DiagramInvariants:
    """The numerical invariants; the defining identities are rechecked."""

    roots: int
    free_vertices: int
    dim: int
    deg: int
    cod: int
    delta: int
    branches: int
    milnor: int
    jacobian_mult: int | None

    def __post_init__(self) -> None:
        assert self.dim == self.roots + self.free_vertices
        assert self.cod == self.deg - self.dim
        assert self.milnor == 2 * self.delta - self.branches + self.roots


def invariants(diagram: EnriquesDiagram) -> DiagramInvariants:
    """Compute all invariants of a valid diagram."""
    bad = validate(diagram)
    if bad is not None:
        raise ValueError(f"invalid diagram: {bad}")
    roots = diagram.roots()
    frs = sum(1 for i in range(len(diagram)) if not diagram.is_satellite(i))
    deg = sum(comb(v.weight + 1, 2) for v in diagram.vertices)
    delta = sum(comb(v.weight, 2) for v in diagram.vertices)
    branches = sum(
        v.weight - sum(diagram.vertices[j].weight for j in diagram.proximate_to(i))
        for i, v in enumerate(diagram.vertices)
    )
    dim = len(roots) + frs
    milnor = 2 * delta - branches + len(roots)
    jac = None
    if len(roots) == 1:
        jac = milnor + diagram.vertices[roots[0]].weight - 1
    return DiagramInvariants(
        roots=len(roots),
        free_vertices=frs,
        dim=dim,
        deg=deg,
        cod=deg - dim,
        delta=delta,
        branches=branches,
        milnor=milnor,
        jacobian_mult=jac,
    )


@dataclass(frozen=True)
class InequalityResult:
    """Outcome of one invariant inequality: does it hold, and sharply?"""

    part: str
    holds: bool
    equality: bool


def inequality_report(diagram: EnriquesDiagram) -> tuple[InequalityResult, ...]:
    """Evaluate the eight invariant relations of a single-root diagram.

    (i)    root weight = branches + total satellite weight  (an identity)
    (ii)   delta <= cod          (iii)  cod <= milnor
    (iv)   milnor <= 2*delta     (v)    cod <= 2*delta
    (vi)   2*delta <= e          (vii)  e <= cod + delta
    (viii) e <= 2*cod

    with e the Jacobian multiplicity milnor + root weight - 1.
    """
    roots = diagram.roots()
    if len(roots) != 1:
        raise ValueError(f"need a single root, found {len(roots)}")
    inv = invariants(diagram)
    m_root = diagram.vertices[roots[0]].weight
    sat_weight = sum(v.weight for v in diagram.vertices if v.remote is not None)
    e = inv.jacobian_mult
    assert e is not None

    def ineq(part: str, lhs: int, rhs: int) -> InequalityResult:
        return InequalityResult(part, lhs <= rhs, lhs == rhs)

    identity = m_root == inv.branches + sat_weight
    return (
        InequalityResult("i", identity, identity),
        ineq("ii", inv.delta, inv.cod),
        ineq("iii", inv.cod, inv.milnor),
        ineq("iv", inv.milnor, 2 * inv.delta),
        ineq("v", inv.cod, 2 * inv.delta),
        ineq("vi", 2 * inv.delta, e),
        ineq("vii", e, inv.cod + inv.delta),
        ineq("viii", e, 2 * inv.cod),
    )


# -- named diagrams ---------------------------------------------------------


def named_diagram(kind: str, index: int) -> EnriquesDiagram:
    """Standard diagrams: the A, D, E series and r disjoint nodes (rA1).

    A_{2i+1} is a chain of i+1 free vertices of weight 2.  A_{2i} is a chain
    of i weight-2 vertices followed by a free weight-1 vertex and a weight-1
    satellite remote-proximate to the last weight-2 vertex.  D_k (k >= 4) is
    A_{k-3} with the root weight raised to 3; the E diagrams are the three
    weight-3-rooted shapes pinned by their Milnor numbers 6, 7 and 8.
    """
    if kind == "A":
        if index < 1:
            raise ValueError(f"A-series index must be at least 1: {index}")
        if index % 2 == 1:
            i = (index - 1) // 2
            verts = [Vertex(2, None if j == 0 else j - 1) for j in range(i + 1)]
        else:
            i = index // 2
            verts = [Vertex(2, None if j == 0 else j - 1) for j in range(i)]
            verts.append(Vertex(1, i - 1))
            verts.append(Vertex(1, i, remote=i - 1))
        return EnriquesDiagram(tuple(verts))
    if kind == "D":
        if index < 4:
            raise ValueError(f"D-series index must be at least 4: {index}")
        base = named_diagram("A", index - 3)
        verts = (Vertex(3, None, None),) + base.vertices[1:]
        return EnriquesDiagram(verts)
    if kind == "E":
        shapes = {
            6: (Vertex(3), Vertex(1, 0), Vertex(1, 1, remote=0), Vertex(1, 2, remote=0)),
            7: (Vertex(3), Vertex(2, 0), Vertex(1, 1, remote=0)),
            8: (Vertex(3), Vertex(2, 0), Vertex(1, 1, remote=0), Vertex(1, 2, remote=1)),
        }
        if index not in shapes:
            raise ValueError(f"E-series index must be 6, 7 or 8: {index}")
        return EnriquesDiagram(shapes[index])
    if kind == "rA1":
        if index < 1:
            raise ValueError(f"node count must be at least 1: {index}")
        return EnriquesDiagram(tuple(Vertex(2) for _ in range(index)))
    raise ValueError(f"unknown diagram kind {kind!r}")


# -- isomorphism and enumeration -------------------------------------------

#: Canonical key of a subtree: (weight, remote depth offset, sorted child keys).
#: The remote offset counts generations from the vertex up to its remote
#: target (0 when absent), which is labeling-independent.
TreeKey = tuple[int, int, tuple]


def canonical_key(diagram: EnriquesDiagram) -> tuple[TreeKey, ...]:
    """A labeling-invariant key: equal keys mean isomorphic diagrams."""
    depth: dict[int, int] = {}
    for i, v in enumerate(diagram.vertices):
        depth[i] = 0 if v.parent is None else depth[v.parent] + 1

    def subtree(i: int) -> TreeKey:
        v = diagram.vertices[i]
        offset = 0 if v.remote is None else depth[i] - depth[v.remote]
        return (v.weight, offset, tuple(sorted(subtree(c) for c in diagram.children(i))))

    return tuple(sorted(subtree(r) for r in diagram.roots()))


def _rebuild(keys: Iterable[TreeKey]) -> EnriquesDiagram:
    """The canonical representative with the given per-tree keys."""
    verts: list[Vertex] = []

    def emit(key: TreeKey, parent: int | None, path: list[int]) -> None:
        weight, offset, children = key
        idx = len(verts)
        remote = path[-offset] if offset else None
        verts.append(Vertex(weight, parent, remote))
        for child in children:
            emit(child, idx, path + [idx])

    for key in keys:
        emit(key, None, [])
    return EnriquesDiagram(tuple(verts))


def _single_root_catalog(max_vertices: int, max_weight: int) -> list[TreeKey]:
    """All single-root valid minimal diagrams up to iso, as sorted keys.

    Trees are generated in preorder: a new vertex attaches to any vertex on
    the rightmost path, so every ordered tree arises once; unordered
    duplicates collapse through the canonical key.  Capacities (remaining
    proximity budget per vertex) prune the search.
    """
    found: set[TreeKey] = set()
    weights: list[int] = []
    parents: list[int | None] = []
    remotes: list[int | None] = []
    caps: list[int] = []

    def record() -> None:
        diagram = EnriquesDiagram(
            tuple(Vertex(w, p, r) for w, p, r in zip(weights, parents, remotes))
        )
        if validate(diagram) is None:
            found.add(canonical_key(diagram)[0])

    def grow(stack: list[int]) -> None:
        record()
        if len(weights) == max_vertices:
            return
        for pos in range(len(stack)):
            parent = stack[pos]
            path = stack[: pos + 1]
            for w in range(1, min(max_weight, caps[parent]) + 1):
                # remote target: a vertex the parent is proximate to (its own
                # parent or remote target), with budget for one more vertex
                candidates = {parents[parent], remotes[parent]}
                remote_options: list[int | None] = [None]
                remote_options += [a for a in candidates if a is not None and caps[a] >= w]
                for remote in remote_options:
                    idx = len(weights)
                    weights.append(w)
                    parents.append(parent)
                    remotes.append(remote)
                    caps.append(w)
                    caps[parent] -= w
                    if remote is not None:
                        caps[remote] -= w
                    grow(path + [idx])
                    caps[parent] += w
                    if remote is not None:
                        caps[remote] += w
                    weights.pop()
                    parents.pop()
                    remotes.pop()
                    caps.pop()

    for root_weight in range(1, max_weight + 1):
        weights.append(root_weight)
        parents.append(None)
        remotes.append(None)
        caps.append(root_weight)
        grow([0])
        weights.pop()
        parents.pop()
        remotes.pop()
        caps.pop()
    return sorted(found)


@lru_cache(maxsize=None)
def _forest_catalog(max_vertices: int, max_weight: int) -> tuple[tuple[TreeKey, ...], ...]:
    trees = _single_root_catalog(max_vertices, max_weight)
    sizes = [_key_size(t) for t in trees]
    forests: list[tuple[TreeKey, ...]] = []

    def choose(start: int, room: int, picked: list[TreeKey]) -> None:
        if picked:
            forests.append(tuple(picked))
        for i in range(start, len(trees)):
            if sizes[i] <= room:
                picked.append(trees[i])
                choose(i, room - sizes[i], picked)
                picked.pop()

    choose(0, max_vertices, [])
    return tuple(sorted(forests, key=lambda f: (sum(_key_size(t) for t in f), f)))


def _key_size(key: TreeKey) -> int:
    return 1 + sum(_key_size(c) for c in key[2])


def enumerate_diagrams(max_vertices: int, max_weight: int) -> Iterator[EnriquesDiagram]:
    """All valid minimal diagrams up to isomorphism, smallest first.

    Exhaustive at desk scale; the limits are capped at 7 vertices and
    weight 6.  Multi-root diagrams are included (a forest is a multiset of
    its trees).  Every yielded diagram passes validate.
    """
    if max_vertices > 7:
        raise ValueError(f"max_vertices capped at 7: {max_vertices}")
    if max_weight > 6:
        raise ValueError(f"max_weight capped at 6: {max_weight}")
    if max_vertices < 1 or max_weight < 1:
        return
    for forest in _forest_catalog(max_vertices, max_weight):
        yield _rebuild(forest)


# -- text format ------------------------------------------------------------


def to_text(diagram: EnriquesDiagram) -> str:
    """One vertex per line: ``id weight parent|- remote|-``."""
    lines = []
    for i, v in enumerate(diagram.vertices):
        p = "-" if v.parent is None else str(v.parent)
        r = "-" if v.remote is None else str(v.remote)
        lines.append(f"{i} {v.weight} {p} {r}")
    return "\n".join(lines) + "\n"


def from_text(text: str) -> EnriquesDiagram:
    """Parse the text format; ids must be 0..n-1 with parents listed first."""
    verts: list[Vertex] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 4:
            raise ValueError(f"expected 'id weight parent remote': {raw!r}")
        idx, weight = int(fields[0]), int(fields[1])
        if idx != len(verts):
            raise ValueError(f"vertex ids must be consecutive from 0: got {idx}")
        parent = None if fields[2] == "-" else int(fields[2])
        remote = None if fields[3] == "-" else int(fields[3])
        verts.append(Vertex(weight, parent, remote))
    if not verts:
        raise ValueError("empty diagram text")
    return EnriquesDiagram(tuple(verts))
