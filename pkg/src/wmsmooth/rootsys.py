"""Combinatorial model of a connected reductive group.

A :class:`GroupDatum` is a based root datum given in coordinates: weights are
integer vectors, simple roots are weights, simple coroots are integer
functionals paired with weights by the dot product.  Groups assembled with
:func:`build_group` use fundamental-weight coordinates followed by torus
characters, so the i-th coroot is the i-th unit vector.  General root data
(for instance Levi subgroups, or ``GL(2)`` in its own coordinates) share the
same type.

Simple roots are referred to by their index in ``simple_roots``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InvalidComponent, NotDominant, NotInRootLattice, NotSimpleRoot
from .exactla.intmat import dot, rank, solve

TYPES = "ABCDEFG"


def valid_rank(kind: str, n: int) -> bool:
    return {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 2,
        "D": n >= 4,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
    }.get(kind, False)


@lru_cache(maxsize=None)
def cartan_matrix(kind: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Bourbaki Cartan matrix with entries ``<alpha_i^vee, alpha_j>``."""
    if not valid_rank(kind, n):
        raise InvalidComponent(f"{kind}{n} is not a valid Dynkin type")
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, ij=-1, ji=-1):
        a[i][j], a[j][i] = ij, ji

    if kind in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if kind == "B":
            # alpha_n short
            bond(n - 2, n - 1, -1, -2)
        elif kind == "C":
            # alpha_n long
            bond(n - 2, n - 1, -2, -1)
    elif kind == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif kind == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif kind == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif kind == "G":
        # alpha_1 short
        bond(0, 1, -3, -1)
    return tuple(tuple(r) for r in a)


def labelings(abstract: Sequence[Sequence[int]], ambient: Sequence[Sequence[int]], nodes: Iterable[int]) -> list[tuple[int, ...]]:
    """All bijections from abstract nodes onto ``nodes`` preserving Cartan entries.

    A result ``p`` sends abstract node ``k`` to ambient node ``p[k]``.
    """
    nodes = sorted(nodes)
    n = len(abstract)
    if len(nodes) != n:
        return []
    out: list[tuple[int, ...]] = []

    def extend(assigned: list[int]) -> None:
        k = len(assigned)
        if k == n:
            out.append(tuple(assigned))
            return
        for cand in nodes:
            if cand in assigned:
                continue
            if ambient[cand][cand] != abstract[k][k]:
                continue
            if all(
                ambient[cand][assigned[j]] == abstract[k][j] and ambient[assigned[j]][cand] == abstract[j][k]
                for j in range(k)
            ):
                extend(assigned + [cand])

    extend([])
    return out


@dataclass(frozen=True)
class Component:
    """A connected component of the Dynkin diagram.

    ``nodes[k]`` is the simple root playing the role of the (k+1)-th root in
    Bourbaki numbering.
    """

    kind: str
    rank: int
    nodes: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"


def _connected_pieces(cartan: Sequence[Sequence[int]], nodes: Iterable[int]) -> list[list[int]]:
    nodes = sorted(nodes)
    seen: set[int] = set()
    pieces = []
    for start in nodes:
        if start in seen:
            continue
        stack, piece = [start], []
        seen.add(start)
        while stack:
            v = stack.pop()
            piece.append(v)
            for w in nodes:
                if w not in seen and cartan[v][w] != 0:
                    seen.add(w)
                    stack.append(w)
        pieces.append(sorted(piece))
    return pieces


def identify(cartan: Sequence[Sequence[int]], nodes: Sequence[int], prefer: str = "") -> Component:
    """Dynkin type of a connected set of nodes, with a Bourbaki labeling."""
    n = len(nodes)
    order = [k for k in prefer if k in TYPES] + [k for k in TYPES if k not in prefer]
    for kind in order:
        if not valid_rank(kind, n):
            continue
        labs = labelings(cartan_matrix(kind, n), cartan, nodes)
        if labs:
            return Component(kind, n, min(labs))
    raise InvalidComponent(f"nodes {list(nodes)} do not form a finite-type Dynkin diagram")


class GroupDatum:
    """Simple roots, coroots and Dynkin components of a connected reductive group."""

    def __init__(
        self,
        simple_roots: Sequence[Sequence[int]],
        coroots: Sequence[Sequence[int]],
        rank: int,
        components: Sequence[Component] | None = None,
        labels: Sequence[str] | None = None,
        declared: Sequence[tuple[str, int]] | None = None,
        torus_rank: int | None = None,
    ):
        self.rank = rank
        self.simple_roots = tuple(tuple(int(x) for x in r) for r in simple_roots)
        self.coroots = tuple(tuple(int(x) for x in c) for c in coroots)
        if len(self.simple_roots) != len(self.coroots):
            raise InvalidComponent("need one coroot per simple root")
        for v in self.simple_roots + self.coroots:
            if len(v) != rank:
                raise DimensionMismatch(f"{v} does not have length {rank}")
        k = len(self.simple_roots)
        self.cartan = tuple(
            tuple(dot(self.coroots[i], self.simple_roots[j]) for j in range(k)) for i in range(k)
        )
        if any(self.cartan[i][i] != 2 for i in range(k)):
            raise InvalidComponent("coroot pairings with their roots must equal 2")
        if components is None:
            components = [identify(self.cartan, piece) for piece in _connected_pieces(self.cartan, range(k))]
        self.components = tuple(components)
        self.labels = tuple(labels) if labels else tuple(f"a{i + 1}" for i in range(k))
        self.declared = tuple(declared) if declared is not None else tuple((c.kind, c.rank) for c in self.components)
        self.torus_rank = rank - k if torus_rank is None else torus_rank

    # -- basic structure -------------------------------------------------

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    @property
    def simple(self) -> range:
        return range(len(self.simple_roots))

    @property
    def is_torus(self) -> bool:
        return not self.simple_roots

    def __repr__(self) -> str:
        parts = [c.name for c in self.components]
        if self.torus_rank:
            parts.append(f"T{self.torus_rank}")
        return f"GroupDatum({' x '.join(parts) or 'trivial'}, rank={self.rank})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupDatum)
            and self.rank == other.rank
            and self.simple_roots == other.simple_roots
            and self.coroots == other.coroots
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.simple_roots, self.coroots))

    def is_standard_sl2_torus(self) -> bool:
        """The datum of SL(2) x C^x in (omega, epsilon) coordinates."""
        return self.rank == 2 and self.simple_roots == ((2, 0),) and self.coroots == ((1, 0),)

    def component_of(self, i: int) -> Component:
        return next(c for c in self.components if i in c.nodes)

    # -- pairings and reflections ----------------------------------------

    def _check(self, w: Sequence) -> None:
        if len(w) != self.rank:
            raise DimensionMismatch(f"weight {tuple(w)} does not have length {self.rank}")

    def pairing(self, coweight: Sequence, w: Sequence):
        self._check(coweight)
        self._check(w)
        return dot(coweight, w)

    def coroot_pairing(self, i: int, w: Sequence):
        self._check(w)
        return dot(self.coroots[i], w)

    def simple_reflection(self, i: int, w: Sequence) -> tuple:
        if i not in self.simple:
            raise NotSimpleRoot(f"{i} is not a simple root index")
        self._check(w)
        c = dot(self.coroots[i], w)
        return tuple(x - c * a for x, a in zip(w, self.simple_roots[i]))

    def reflect_functional(self, i: int, f: Sequence) -> tuple:
        """The functional ``f ∘ s_i``."""
        c = dot(f, self.simple_roots[i])
        return tuple(x - c * a for x, a in zip(f, self.coroots[i]))

    def is_dominant(self, w: Sequence) -> bool:
        self._check(w)
        return all(dot(c, w) >= 0 for c in self.coroots)

    def levi_simple_roots(self, a: Sequence) -> frozenset[int]:
        a = tuple(Fraction(x) for x in a)
        if not self.is_dominant(a):
            raise NotDominant(f"{a} is not dominant")
        return frozenset(i for i in self.simple if dot(self.coroots[i], a) == 0)

    # -- root lattice ----------------------------------------------------

    def root_coefficients(self, w: Sequence) -> tuple[int, ...]:
        """Coefficients of ``w`` over the simple roots."""
        self._check(w)
        if not self.simple_roots:
            if any(w):
                raise NotInRootLattice(f"{tuple(w)} is not in the root lattice")
            return ()
        c = solve(self.simple_roots, w)
        if c is None or any(x.denominator != 1 for x in c):
            raise NotInRootLattice(f"{tuple(w)} is not in the root lattice")
        return tuple(int(x) for x in c)

    def root_weight(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(c * r[i] for c, r in zip(coeffs, self.simple_roots)) for i in range(self.rank))

    def support(self, w: Sequence) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.root_coefficients(w)) if c)

    def support_components(self, nodes: Iterable[int]) -> list[Component]:
        nodes = set(nodes)
        out = []
        for piece in _connected_pieces(self.cartan, nodes):
            prefer = self.component_of(piece[0]).kind
            out.append(identify(self.cartan, piece, prefer))
        return out

    def support_type(self, nodes: Iterable[int]) -> str:
        comps = self.support_components(nodes)
        return "x".join(c.name for c in comps) if comps else "0"

    def diagram_automorphisms(self, component: Component) -> list[dict[int, int]]:
        sub = component.nodes
        abstract = [[self.cartan[i][j] for j in sub] for i in sub]
        return [dict(zip(sub, p)) for p in labelings(abstract, self.cartan, sub)]

    def root_name(self, coeffs: Sequence[int]) -> str:
        terms = []
        for lab, c in zip(self.labels, coeffs):
            if c == 0:
                continue
            if c == 1:
                t = lab
            elif c == -1:
                t = "-" + lab
            else:
                t = f"{c}{lab}"
            terms.append(t)
        return "+".join(terms).replace("+-", "-") or "0"

    # -- derived groups --------------------------------------------------

    def levi(self, subset: Iterable[int]) -> "GroupDatum":
        """The Levi subgroup with the given simple roots, in the same coordinates."""
        subset = sorted(set(subset))
        return GroupDatum(
            [self.simple_roots[i] for i in subset],
            [self.coroots[i] for i in subset],
            self.rank,
            labels=[self.labels[i] for i in subset],
        )

    @cached_property
    def fundamental_weights(self) -> tuple[tuple[int, ...], ...]:
        if not self._standard:
            raise AttributeError("fundamental weights are only fixed for build_group data")
        return tuple(tuple(int(i == j) for i in range(self.rank)) for j in range(self.semisimple_rank))

    @cached_property
    def torus_characters(self) -> tuple[tuple[int, ...], ...]:
        if not self._standard:
            raise AttributeError("torus characters are only fixed for build_group data")
        k = self.semisimple_rank
        return tuple(tuple(int(i == j) for i in range(self.rank)) for j in range(k, self.rank))

    _standard = False

    def weight_lattice_basis(self) -> list[tuple[int, ...]]:
        return [tuple(int(i == j) for i in range(self.rank)) for j in range(self.rank)]

    def root_lattice_rank(self) -> int:
        return rank(self.simple_roots) if self.simple_roots else 0


def build_group(components: Sequence[tuple[str, int] | str], torus_rank: int = 0) -> GroupDatum:
    """Standard datum: fundamental-weight coordinates, then torus characters.

    ``components`` holds pairs like ``("B", 3)`` or strings like ``"B3"``.
    """
    parsed = []
    for comp in components:
        if isinstance(comp, str):
            kind, n = comp[0].upper(), comp[1:]
            if not n.isdigit():
                raise InvalidComponent(f"cannot parse component {comp!r}")
            comp = (kind, int(n))
        kind, n = comp
        kind = str(kind).upper()
        if not isinstance(n, int) or not valid_rank(kind, n):
            raise InvalidComponent(f"{kind}{n} is not a supported Dynkin type")
        parsed.append((kind, n))
    if torus_rank < 0:
        raise InvalidComponent("torus rank must be non-negative")
    ss = sum(n for _, n in parsed)
    dim = ss + torus_rank
    roots, coroots, comps, labels = [], [], [], []
    offset = 0
    prime = len(parsed) > 1
    for idx, (kind, n) in enumerate(parsed):
        a = cartan_matrix(kind, n)
        for j in range(n):
            root = [0] * dim
            for i in range(n):
                root[offset + i] = a[i][j]
            roots.append(root)
            cor = [0] * dim
            cor[offset + j] = 1
            coroots.append(cor)
            labels.append(f"a{j + 1}" + ("'" * idx if prime else ""))
        comps.append(Component(kind, n, tuple(range(offset, offset + n))))
        offset += n
    g = GroupDatum(roots, coroots, dim, components=comps, labels=labels, declared=parsed, torus_rank=torus_rank)
    g._standard = True
    return g


def group_from_root_datum(
    simple_roots: Sequence[Sequence[int]], coroots: Sequence[Sequence[int]], labels: Sequence[str] | None = None
) -> GroupDatum:
    """A datum in arbitrary coordinates; types are identified from the Cartan matrix."""
    roots = [tuple(r) for r in simple_roots]
    dim = len(roots[0]) if roots else (len(coroots[0]) if coroots else 0)
    return GroupDatum(roots, coroots, dim, labels=labels)


def torus(n: int) -> GroupDatum:
    return build_group([], n)


def gl2() -> GroupDatum:
    """GL(2) with weights written in the basis (omega_1, omega_2 = det)."""
    return group_from_root_datum([(2, -1)], [(1, 0)], labels=["a"])
