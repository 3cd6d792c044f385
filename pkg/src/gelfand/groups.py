"""Enumerated finite matrix groups: GL_n(F_q) and O_n(F_q).

A GroupTable holds every element as a MatFq in the lexicographic order of
canonical encodings, with an exact encoding -> id index.  That fixed order
makes coset representatives, class representatives and reports reproducible
bit for bit.

GL is enumerated by extending linearly independent row prefixes (the span
of the chosen rows is carried along, so the q^(n^2) ambient space is never
filtered).  O is the group of the identity bilinear form, built as the
multiplicative closure of all hyperplane reflections and cross-checked
against a direct filter of {g : g^T g = I} when that filter is feasible.
"""

from __future__ import annotations

from itertools import product

from .errors import CapExceededError, DomainError, InternalCheckError
from .field import Fq
from .matrix import (MatFq, identity_flat, inverse_flat, mul_flat,
                     transpose_flat, vec_dot)

DEFAULT_GROUP_CAP = 25_000
O_FILTER_FEASIBLE = 10 ** 7


def gl_order(n: int, q: int) -> int:
    order = 1
    for i in range(n):
        order *= q ** n - q ** i
    return order


class GroupTable:
    """Indexed element table of an enumerated matrix group."""

    def __init__(self, kind: str, n: int, field: Fq, entries_list,
                 generator_ids=None):
        self.kind = kind
        self.n = n
        self.field = field
        entries_list = sorted(entries_list)
        self.elements = [MatFq(field, n, n, e) for e in entries_list]
        self.order = len(self.elements)
        self._ids = {e: i for i, e in enumerate(entries_list)}
        if len(self._ids) != self.order:
            raise InternalCheckError("duplicate elements in group table")
        self.identity_id = self._ids[identity_flat(n)]
        self._generator_ids = generator_ids
        self._inverse_ids = None
        self._transpose_ids = None
        self._center_ids = None

    # -- lookup ---------------------------------------------------------------

    def id_of_entries(self, entries: tuple) -> int:
        """Element id for a flat entry tuple; raises if not in the group."""
        try:
            return self._ids[entries]
        except KeyError:
            raise InternalCheckError(
                f"matrix {entries} not in {self.kind}_{self.n}(F_{self.field.q})")

    def index_of(self, m: MatFq) -> int:
        if m.field != self.field or m.rows != self.n or m.cols != self.n:
            raise DomainError("matrix shape or field does not match group")
        return self.id_of_entries(m.entries)

    def element(self, i: int) -> MatFq:
        return self.elements[i]

    def mul_ids(self, i: int, j: int) -> int:
        return self.id_of_entries(mul_flat(
            self.elements[i].entries, self.elements[j].entries, self.n, self.field))

    # -- distinguished data (computed lazily, cached) ---------------------------

    @property
    def generator_ids(self) -> list[int]:
        if self._generator_ids is None:
            self._generator_ids = _greedy_generators(self)
        return self._generator_ids

    @property
    def inverse_ids(self) -> list[int]:
        if self._inverse_ids is None:
            n, f = self.n, self.field
            self._inverse_ids = [
                self.id_of_entries(inverse_flat(m.entries, n, f))
                for m in self.elements]
        return self._inverse_ids

    @property
    def transpose_ids(self) -> list[int]:
        if self._transpose_ids is None:
            n = self.n
            self._transpose_ids = [
                self.id_of_entries(transpose_flat(m.entries, n, n))
                for m in self.elements]
        return self._transpose_ids

    def center_ids(self) -> list[int]:
        """Ids of elements commuting with the whole group (via generators)."""
        if self._center_ids is None:
            n, f = self.n, self.field
            gens = [self.elements[g].entries for g in self.generator_ids]
            center = []
            for i, m in enumerate(self.elements):
                e = m.entries
                if all(mul_flat(e, g, n, f) == mul_flat(g, e, n, f)
                       for g in gens):
                    center.append(i)
            if self.kind == "GL":
                scalars = sorted(
                    self._ids[tuple(c if r == s else 0
                                    for r in range(n) for s in range(n))]
                    for c in range(1, f.q))
                if center != scalars:
                    raise InternalCheckError(
                        "GL center does not equal the scalar matrices")
            self._center_ids = center
        return self._center_ids

    def __repr__(self):
        return (f"GroupTable({self.kind}_{self.n}(F_{self.field.q}), "
                f"order={self.order})")


def _closure_extend(n, field, known, frontier, gens_entries, cap):
    """BFS closure of known (a dict entries->None used as ordered set)."""
    while frontier:
        new_frontier = []
        for x in frontier:
            for g in gens_entries:
                y = mul_flat(x, g, n, field)
                if y not in known:
                    known[y] = None
                    if len(known) > cap:
                        raise CapExceededError(
                            f"group order exceeds cap {cap}")
                    new_frontier.append(y)
        frontier = new_frontier


def _greedy_generators(table: GroupTable) -> list[int]:
    """Small generating set: seed with standard candidates, then greedy scan."""
    n, f = table.n, table.field
    seeds = []
    if n >= 2:
        transvection = list(identity_flat(n))
        transvection[1] = 1
        seeds.append(tuple(transvection))
        cycle = tuple(1 if c == (r + 1) % n else 0
                      for r in range(n) for c in range(n))
        seeds.append(cycle)
    g = f.generator() if f.q > 2 else 1
    if g != 1:
        diag = list(identity_flat(n))
        diag[0] = g
        seeds.append(tuple(diag))
    seed_ids = [table._ids[s] for s in seeds if s in table._ids]

    gens: list[int] = []
    known = {table.elements[table.identity_id].entries: None}
    for cand in list(seed_ids) + list(range(table.order)):
        if len(known) == table.order:
            break
        e = table.elements[cand].entries
        if e in known:
            continue
        gens.append(cand)
        gens_entries = [table.elements[i].entries for i in gens]
        known[e] = None
        _closure_extend(n, f, known, [x for x in known],
                        gens_entries, table.order)
    if len(known) != table.order:
        raise InternalCheckError("generator search did not close the group")
    return gens


def enumerate_gl(n: int, field: Fq, cap: int = DEFAULT_GROUP_CAP) -> GroupTable:
    """GL_n(F_q) by extending linearly independent row prefixes."""
    expected = gl_order(n, field.q)
    if expected > cap:
        raise CapExceededError(
            f"|GL_{n}(F_{field.q})| = {expected} exceeds cap {cap}")
    q = field.q
    vectors = list(product(range(q), repeat=n))
    add = field._add
    mul = field._mul
    out = []

    def extend(prefix: tuple, span: set, depth: int):
        for v in vectors:
            if v in span:
                continue
            row = prefix + v
            if depth + 1 == n:
                out.append(row)
            else:
                new_span = set(span)
                for c in range(1, q):
                    cv = tuple(mul[c * q + x] for x in v)
                    for s in span:
                        new_span.add(tuple(add[a * q + b]
                                           for a, b in zip(s, cv)))
                extend(row, new_span, depth + 1)

    zero = (0,) * n
    extend((), {zero}, 0)
    if len(out) != expected:
        raise InternalCheckError(
            f"GL enumeration produced {len(out)} elements, expected {expected}")
    table = GroupTable("GL", n, field, out)
    return table


def _reflection_entries(field: Fq, w: tuple, n: int) -> tuple:
    """Hyperplane reflection x -> x - 2(<w,x>/<w,w>)w for non-isotropic w."""
    norm = vec_dot(field, w, w)
    coef = field.div(field.add(1, 1), norm)  # 2 / <w,w>
    out = []
    for i in range(n):
        for j in range(n):
            x = 1 if i == j else 0
            out.append(field.sub(x, field.mul(coef, field.mul(w[i], w[j]))))
    return tuple(out)


def _o_direct_filter(n: int, field: Fq) -> set:
    """All g with g^T g = I, by nested column extension with Gram pruning.

    Equivalent to filtering the full q^(n^2) space: a matrix passes iff its
    columns are orthonormal, which is checked column by column.
    """
    q = field.q
    vectors = list(product(range(q), repeat=n))
    unit = [v for v in vectors if vec_dot(field, v, v) == 1]
    found = set()

    def extend(cols):
        depth = len(cols)
        if depth == n:
            found.add(tuple(cols[j][i] for i in range(n) for j in range(n)))
            return
        for v in unit:
            if all(vec_dot(field, v, c) == 0 for c in cols):
                extend(cols + [v])

    extend([])
    return found


def enumerate_o(n: int, field: Fq, cap: int = DEFAULT_GROUP_CAP,
                cross_check: bool | None = None) -> GroupTable:
    """O_n(F_q) for the identity form, q odd: closure of all reflections."""
    if field.p == 2:
        raise DomainError(
            "orthogonal pipeline requires odd q (reflections divide by 2)")
    q = field.q
    refl = {}
    for w in product(range(q), repeat=n):
        if vec_dot(field, w, w) != 0:
            refl.setdefault(_reflection_entries(field, w, n), None)
    gens_entries = list(refl)
    known = {identity_flat(n): None}
    for g in gens_entries:
        known.setdefault(g, None)
    _closure_extend(n, field, known, list(known), gens_entries, cap)

    for e in known:
        gram = mul_flat(transpose_flat(e, n, n), e, n, field)
        if gram != identity_flat(n):
            raise InternalCheckError("reflection closure left the orthogonal group")

    if cross_check is None:
        cross_check = q ** (n * n) <= O_FILTER_FEASIBLE
    if cross_check:
        filtered = _o_direct_filter(n, field)
        if filtered != set(known):
            raise InternalCheckError(
                "reflection closure disagrees with the direct g^T g = I filter")

    table = GroupTable("O", n, field, list(known))
    table._generator_ids = sorted(table._ids[g] for g in gens_entries)
    return table


class Embedding:
    """Injective homomorphism small -> big given by an id map."""

    def __init__(self, small: GroupTable, big: GroupTable, map_ids: list[int]):
        self.small = small
        self.big = big
        self.map = map_ids
        if len(set(map_ids)) != len(map_ids):
            raise InternalCheckError("embedding is not injective")

    def __repr__(self):
        return f"Embedding({self.small!r} -> {self.big!r})"


def embed_standard(h: GroupTable, g: GroupTable) -> Embedding:
    """h ∋ B  ->  diag(B, 1) ∈ g; requires h.n + 1 = g.n, same kind/field."""
    if h.field != g.field:
        raise DomainError("embedding requires the same field")
    if h.n + 1 != g.n or h.kind != g.kind:
        raise DomainError("standard embedding requires same kind and n+1 size")
    n = h.n
    big_n = g.n
    map_ids = []
    for m in h.elements:
        block = [[m[i, j] if i < n and j < n else (1 if i == j == n else 0)
                  for j in range(big_n)] for i in range(big_n)]
        flat = tuple(x for row in block for x in row)
        map_ids.append(g.id_of_entries(flat))
    emb = Embedding(h, g, map_ids)
    # identity must map to identity; full homomorphism check lives in tests
    if map_ids[h.identity_id] != g.identity_id:
        raise InternalCheckError("embedding does not preserve the identity")
    return emb


def embed_identity(g: GroupTable) -> Embedding:
    """The degenerate self-pair H = G."""
    return Embedding(g, g, list(range(g.order)))
