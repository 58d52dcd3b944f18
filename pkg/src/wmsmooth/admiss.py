"""Recognition of admissible triples (S, S^p, Σ^N).

A triple is admissible when the Dynkin diagram of S splits into blocks, each
of which is one of the primitive shapes below after relabeling by a diagram
automorphism.  Only the A_n × A_k shape spans two connected components.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InputError
from .rootsys import GroupDatum, _connected_pieces, build_group, cartan_matrix, labelings


@dataclass(frozen=True)
class AdmissibleTriple:
    """A triple over a fixed group datum.

    ``simple`` and ``sp`` are sets of simple-root indices; ``sigma`` holds
    coefficient vectors in the simple roots of the whole group.
    """

    group: GroupDatum
    simple: frozenset[int]
    sp: frozenset[int]
    sigma: frozenset[tuple[int, ...]]

    def __post_init__(self):
        object.__setattr__(self, "simple", frozenset(self.simple))
        object.__setattr__(self, "sp", frozenset(self.sp))
        k = self.group.semisimple_rank
        sig = frozenset(tuple(int(c) for c in s) for s in self.sigma)
        object.__setattr__(self, "sigma", sig)
        if not self.simple <= set(self.group.simple):
            raise InputError(f"S = {sorted(self.simple)} is not a set of simple-root indices")
        if not self.sp <= self.simple:
            raise InputError("S^p must be contained in S")
        for s in sig:
            if len(s) != k or any(c < 0 for c in s) or not any(s):
                raise InputError(f"{s} is not a nonzero element of NS")
            if not {i for i, c in enumerate(s) if c} <= self.simple:
                raise InputError(f"{self.group.root_name(s)} is not supported in S")

    def describe(self) -> dict:
        g = self.group
        return {
            "S": [g.labels[i] for i in sorted(self.simple)],
            "Sp": [g.labels[i] for i in sorted(self.sp)],
            "SigmaN": sorted(g.root_name(s) for s in self.sigma),
        }


@dataclass(frozen=True)
class BlockMatch:
    """One block of a decomposition: primitive item number, shape, and labeling.

    ``labeling[p]`` is the ambient index of the shape's node p+1; for the
    two-component shape the labelings of both factors are concatenated.
    """

    item: int
    shape: str
    labeling: tuple[int, ...]
    sp: frozenset[int] = field(default_factory=frozenset)
    sigma: frozenset[tuple[int, ...]] = field(default_factory=frozenset)


def _vec(k: int, entries: dict[int, int]) -> tuple[int, ...]:
    return tuple(entries.get(i, 0) for i in range(k))


def _single_block_patterns(kind: str, n: int) -> list[tuple[int, list[int], list[dict[int, int]]]]:
    """Primitive triples on one irreducible shape, in shape positions 0..n-1.

    Each entry is (item, S^p positions, Σ as {position: coefficient}).
    Item 1 is handled separately since it needs no labeling.
    """
    out = []
    if kind == "A":
        out.append((2, list(range(1, n)), []))
        if n >= 4 and n % 2 == 0:
            sp = list(range(0, n - 1, 2))
            sig = [{2 * k - 2: 1, 2 * k - 1: 2, 2 * k: 1} for k in range(1, (n - 2) // 2 + 1)]
            out.append((3, sp, sig))
    if kind == "C" and n >= 2:
        out.append((5, list(range(1, n)), []))
    if kind == "D" and n == 5:
        out.append((6, [1, 2, 3], [{1: 1, 2: 2, 3: 1, 4: 2}]))
    return out


# Shapes that can host some primitive other than item 1, by rank.
def _candidate_shapes(n: int) -> list[str]:
    shapes = ["A"]
    if n >= 2:
        shapes.append("C")
    if n == 5:
        shapes.append("D")
    return shapes


def _match_single(triple: AdmissibleTriple, nodes: list[int], sp: frozenset[int], sigma: frozenset) -> BlockMatch | None:
    g = triple.group
    k = g.semisimple_rank
    n = len(nodes)
    if sp == frozenset(nodes) and not sigma:
        return BlockMatch(1, g.support_type(nodes), tuple(nodes), sp, sigma)
    for kind in _candidate_shapes(n):
        abstract = cartan_matrix(kind, n)
        labs = labelings(abstract, g.cartan, nodes)
        if not labs:
            continue
        for item, sp_pos, sig_pos in _single_block_patterns(kind, n):
            for lab in labs:
                want_sp = frozenset(lab[p] for p in sp_pos)
                want_sig = frozenset(_vec(k, {lab[p]: c for p, c in s.items()}) for s in sig_pos)
                if want_sp == sp and want_sig == sigma:
                    return BlockMatch(item, f"{kind}{n}", lab, sp, sigma)
    return None


def _match_pair(
    triple: AdmissibleTriple, big: list[int], small: list[int], sp: frozenset[int], sigma: frozenset
) -> BlockMatch | None:
    g = triple.group
    k = g.semisimple_rank
    n, m = len(big), len(small)
    if not n > m >= 2:
        return None
    labs_big = labelings(cartan_matrix("A", n), g.cartan, big)
    labs_small = labelings(cartan_matrix("A", m), g.cartan, small)
    for lb in labs_big:
        want_sp = frozenset(lb[p] for p in range(m + 1, n))
        if want_sp != sp:
            continue
        for ls in labs_small:
            want_sig = frozenset(_vec(k, {lb[i]: 1, ls[i]: 1}) for i in range(m))
            if want_sig == sigma:
                return BlockMatch(4, f"A{n}xA{m}", lb + ls, sp, sigma)
    return None


def _components(triple: AdmissibleTriple) -> list[list[int]]:
    return _connected_pieces(triple.group.cartan, sorted(triple.simple))


def decompose(triple: AdmissibleTriple) -> list[BlockMatch] | None:
    """A decomposition into primitive blocks, or None if there is none.

    Σ elements supported on two components force those components into one
    A_n × A_k block, so the block partition is determined by Σ; only the
    labeling within each block is searched.
    """
    comps = _components(triple)
    where = {i: c for c, nodes in enumerate(comps) for i in nodes}
    sig_of: dict[frozenset[int], set] = {}
    for s in triple.sigma:
        touched = frozenset(where[i] for i, c in enumerate(s) if c)
        if len(touched) > 2:
            return None
        sig_of.setdefault(touched, set()).add(s)

    partner: dict[int, int] = {}
    for touched in sig_of:
        if len(touched) == 2:
            a, b = sorted(touched)
            if partner.get(a, b) != b or partner.get(b, a) != a:
                return None
            partner[a], partner[b] = b, a
    # Σ elements inside one component of a paired block cannot be matched.
    for c in partner:
        if frozenset([c]) in sig_of:
            return None

    blocks: list[BlockMatch] = []
    seen: set[int] = set()
    for c, nodes in enumerate(comps):
        if c in seen:
            continue
        if c in partner:
            d = partner[c]
            seen.update((c, d))
            both = set(nodes) | set(comps[d])
            sp = triple.sp & both
            sigma = frozenset(sig_of[frozenset((c, d))])
            big, small = (nodes, comps[d]) if len(nodes) > len(comps[d]) else (comps[d], nodes)
            match = _match_pair(triple, big, small, sp, sigma)
        else:
            seen.add(c)
            sp = triple.sp & set(nodes)
            sigma = frozenset(sig_of.get(frozenset([c]), ()))
            match = _match_single(triple, nodes, sp, sigma)
        if match is None:
            return None
        blocks.append(match)
    return blocks


def is_admissible(triple: AdmissibleTriple) -> tuple[bool, list[BlockMatch] | None]:
    blocks = decompose(triple)
    return blocks is not None, blocks


def _parse_shape(shape) -> tuple[str, int]:
    if isinstance(shape, str):
        return shape[0].upper(), int(shape[1:])
    kind, n = shape
    return kind.upper(), int(n)


def primitive_triples(component_shapes: Sequence) -> list[AdmissibleTriple]:
    """All primitive triples on the given shape(s), over the standard group of that type.

    One shape yields items 1, 2, 3, 5 and 6 as applicable; two type-A shapes
    of ranks n > k >= 2 (in that order or the reverse) yield item 4.
    B2 is the same diagram as C2, so item 5 is offered there too.
    """
    shapes = [_parse_shape(s) for s in component_shapes]
    group = build_group(shapes)
    k = group.semisimple_rank
    out: list[AdmissibleTriple] = []
    everything = frozenset(group.simple)
    if len(shapes) == 1:
        kind, n = shapes[0]
        out.append(AdmissibleTriple(group, everything, everything, frozenset()))
        for cand in _candidate_shapes(n):
            labs = labelings(cartan_matrix(cand, n), group.cartan, range(n))
            if not labs:
                continue
            lab = labs[0]
            for item, sp_pos, sig_pos in _single_block_patterns(cand, n):
                sp = frozenset(lab[p] for p in sp_pos)
                sigma = frozenset(_vec(k, {lab[p]: c for p, c in s.items()}) for s in sig_pos)
                t = AdmissibleTriple(group, everything, sp, sigma)
                if t not in out:
                    out.append(t)
        return out
    if len(shapes) == 2:
        (k1, n1), (k2, n2) = shapes
        if k1 == k2 == "A" and n1 != n2 and min(n1, n2) >= 2:
            first = list(range(n1))
            second = list(range(n1, n1 + n2))
            big, small = (first, second) if n1 > n2 else (second, first)
            m = len(small)
            sp = frozenset(big[p] for p in range(m + 1, len(big)))
            sigma = frozenset(_vec(k, {big[i]: 1, small[i]: 1}) for i in range(m))
            out.append(AdmissibleTriple(group, everything, sp, sigma))
        return out
    return out


def triple_from_names(group: GroupDatum, simple: Iterable, sp: Iterable, sigma: Iterable) -> AdmissibleTriple:
    """Build a triple from simple-root labels (or indices) and coefficient vectors."""

    def index(x) -> int:
        if isinstance(x, int):
            return x
        try:
            return group.labels.index(x)
        except ValueError:
            raise InputError(f"unknown simple root {x!r}") from None

    return AdmissibleTriple(
        group,
        frozenset(index(x) for x in simple),
        frozenset(index(x) for x in sp),
        frozenset(tuple(s) for s in sigma),
    )
