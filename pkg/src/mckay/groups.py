"""Finite matrix groups over cyclotomic fields.

Groups are generated by breadth-first closure from the identity, which fixes
a deterministic canonical element order.  Heavy index work (conjugacy
classes, power maps, class-algebra constants) runs on permutation tables
derived from the closure rather than on matrix arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CyclotomicNumber


class GroupElement:
    """A square matrix over a cyclotomic field; group elements have det 1."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        self._hash = None

    @property
    def dimension(self) -> int:
        return len(self.rows)

    @staticmethod
    def identity(n: int, conductor: int = 1) -> "GroupElement":
        one = CyclotomicNumber.from_rational(1, conductor)
        zero = CyclotomicNumber.from_rational(0, conductor)
        return GroupElement(
            [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def from_rows(rows, conductor: int) -> "GroupElement":
        """Build from rows of CyclotomicNumber or rationals, lifting all
        entries to the given conductor."""
        out = []
        for row in rows:
            new_row = []
            for x in row:
                if not isinstance(x, CyclotomicNumber):
                    x = CyclotomicNumber.from_rational(x, 1)
                new_row.append(x.lift(conductor))
            out.append(new_row)
        return GroupElement(out)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        n = self.dimension
        a, b = self.rows, other.rows
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = a[i][0] * b[0][j]
                for k in range(1, n):
                    acc = acc + a[i][k] * b[k][j]
                row.append(acc)
            out.append(row)
        return GroupElement(out)

    def trace(self) -> CyclotomicNumber:
        acc = self.rows[0][0]
        for i in range(1, self.dimension):
            acc = acc + self.rows[i][i]
        return acc

    def det(self) -> CyclotomicNumber:
        n = self.dimension
        r = self.rows
        if n == 1:
            return r[0][0]
        if n == 2:
            return r[0][0] * r[1][1] - r[0][1] * r[1][0]
        if n == 3:
            return (
                r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
            )
        raise ValueError("only dimensions 1..3 supported")

    def inverse(self) -> "GroupElement":
        """Inverse via the adjugate; valid because det = 1."""
        n = self.dimension
        r = self.rows
        if n == 1:
            return GroupElement([[r[0][0].inverse()]])
        if n == 2:
            return GroupElement([[r[1][1], -r[0][1]], [-r[1][0], r[0][0]]])
        if n == 3:
            cof = [
                [
                    r[(i + 1) % 3][(j + 1) % 3] * r[(i + 2) % 3][(j + 2) % 3]
                    - r[(i + 1) % 3][(j + 2) % 3] * r[(i + 2) % 3][(j + 1) % 3]
                    for i in range(3)
                ]
                for j in range(3)
            ]
            return GroupElement(cof)
        raise ValueError("only dimensions 1..3 supported")

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(hash(x) for row in self.rows for x in row))
        return self._hash

    def __repr__(self):
        return f"GroupElement({self.rows!r})"

    def to_json(self) -> list:
        return [[x.to_json() for x in row] for row in self.rows]

    @staticmethod
    def from_json(obj) -> "GroupElement":
        return GroupElement(
            [[CyclotomicNumber.from_json(x) for x in row] for row in obj]
        )


class MatrixGroup:
    """A closed finite set of matrices with its canonical BFS element order."""

    def __init__(self, dimension, conductor, elements, index, generator_indices,
                 right_perms, bfs_edges):
        self.dimension = dimension
        self.conductor = conductor
        self.elements = elements            # canonical order, identity first
        self._index = index                 # GroupElement -> canonical index
        self.generator_indices = tuple(generator_indices)
        self._right_perms = right_perms     # per generator: i -> idx(x_i * g)
        self._bfs_edges = bfs_edges         # i -> (parent, gen position)
        self._inverse = None
        self._rperm_cache: dict[int, list[int]] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, element: GroupElement) -> int:
        return self._index[element]

    def __contains__(self, element: GroupElement) -> bool:
        return element in self._index

    def inverse_index(self, i: int) -> int:
        if self._inverse is None:
            self._inverse = [
                self._index[x.inverse()] for x in self.elements
            ]
        return self._inverse[i]

    def right_perm(self, i: int) -> list[int]:
        """Permutation j -> index of elements[j] * elements[i].

        Composed along the BFS spanning tree, so only the permutations of
        elements actually asked for are materialized.
        """
        if i == 0:
            return list(range(len(self.elements)))
        cached = self._rperm_cache.get(i)
        if cached is not None:
            return cached
        parent, gpos = self._bfs_edges[i]
        base = self.right_perm(parent)
        gen_perm = self._right_perms[gpos]
        perm = [gen_perm[j] for j in base]
        self._rperm_cache[i] = perm
        return perm

    def multiply_indices(self, i: int, j: int) -> int:
        return self.right_perm(j)[i]

    def power_walk(self, i: int) -> list[int]:
        """Indices of x^0, x^1, ..., x^(ord(x)-1) for x = elements[i]."""
        perm = self.right_perm(i)
        walk = [0]
        cur = perm[0]
        while cur != 0:
            walk.append(cur)
            cur = perm[cur]
        return walk

    def element_order(self, i: int) -> int:
        return len(self.power_walk(i))

    def trace(self, i: int) -> CyclotomicNumber:
        return self.elements[i].trace()


def generate_group(generators, order_bound: int, *, dimension: int | None = None
                   ) -> MatrixGroup:
    """Close a generator list under multiplication, breadth-first.

    Elements get their canonical order from the BFS over the generator list
    starting at the identity.  Raises if closure exceeds ``order_bound``
    (guards non-finite or corrupted generator data).
    """
    gens = list(generators)
    if not gens:
        if dimension is None:
            raise ValueError("dimension required for an empty generator list")
        identity = GroupElement.identity(dimension, 1)
        return MatrixGroup(dimension, 1, [identity], {identity: 0}, (), [], [None])
    dims = {g.dimension for g in gens}
    if len(dims) != 1:
        raise ValueError("generators have mixed dimensions")
    n = dims.pop()
    if dimension is not None and dimension != n:
        raise ValueError(f"generators are {n}x{n}, expected {dimension}")
    conductor = 1
    for g in gens:
        for row in g.rows:
            for x in row:
                conductor = math.lcm(conductor, x.conductor)
    gens = [
        GroupElement([[x.lift(conductor) for x in row] for row in g.rows])
        for g in gens
    ]
    one = CyclotomicNumber.from_rational(1, conductor)
    for g in gens:
        if g.det() != one:
            raise ValueError("generator determinant is not 1")

    identity = GroupElement.identity(n, conductor)
    elements = [identity]
    index = {identity: 0}
    right_perms: list[list[int]] = [[] for _ in gens]
    bfs_edges: list[tuple[int, int] | None] = [None]
    cursor = 0
    while cursor < len(elements):
        x = elements[cursor]
        for gpos, g in enumerate(gens):
            product = x * g
            at = index.get(product)
            if at is None:
                at = len(elements)
                if at >= order_bound:
                    raise ValueError(
                        f"group not finite within bound {order_bound}"
                    )
                elements.append(product)
                index[product] = at
                bfs_edges.append((cursor, gpos))
            right_perms[gpos].append(at)
        cursor += 1
    generator_indices = [index[g] for g in gens]
    return MatrixGroup(n, conductor, elements, index, generator_indices,
                       right_perms, bfs_edges)


@dataclass(frozen=True)
class ConjugacyClasses:
    representatives: tuple[int, ...]   # least canonical index per class
    sizes: tuple[int, ...]
    class_map: tuple[int, ...]         # element index -> class index

    @property
    def count(self) -> int:
        return len(self.representatives)


def conjugacy_classes(group: MatrixGroup) -> ConjugacyClasses:
    """Partition the element indices into conjugation orbits.

    Classes are numbered by ascending least element index, so the identity
    class is always class 0.
    """
    n = group.order
    gens = group.generator_indices
    # Conjugation by generator g as an index map: x -> g x g^-1.
    conj_maps = []
    for gi in gens:
        rperm = group.right_perm(gi)
        rperm_inv = [0] * n
        for src, dst in enumerate(rperm):
            rperm_inv[dst] = src
        inv = [group.inverse_index(i) for i in range(n)]
        # rperm_inv gives x -> x*g^-1; g x g^-1 = ((x g^-1)^-1 g^-1)^-1.
        conj_maps.append([inv[rperm_inv[inv[rperm_inv[x]]]] for x in range(n)])
    class_map = [-1] * n
    reps: list[int] = []
    sizes: list[int] = []
    for start in range(n):
        if class_map[start] != -1:
            continue
        cls = len(reps)
        reps.append(start)
        orbit = [start]
        class_map[start] = cls
        frontier = [start]
        while frontier:
            nxt = []
            for x in frontier:
                for cmap in conj_maps:
                    y = cmap[x]
                    if class_map[y] == -1:
                        class_map[y] = cls
                        orbit.append(y)
                        nxt.append(y)
            frontier = nxt
        sizes.append(len(orbit))
    if sum(sizes) != n:
        raise AssertionError("class sizes do not sum to the group order")
    for s in sizes:
        if n % s != 0:
            raise AssertionError("class size does not divide the group order")
    return ConjugacyClasses(tuple(reps), tuple(sizes), tuple(class_map))


def class_constants(group: MatrixGroup, classes: ConjugacyClasses):
    """Class-algebra structure constants a[i][j][k]:
    K_i * K_j = sum_k a[i][j][k] K_k in the group algebra center.

    a[i][j][k] counts pairs (x, y) in C_i x C_j with x*y = z_k for the
    fixed representative z_k; computed as #{x in C_i : x^-1 z_k in C_j}.
    """
    r = classes.count
    n = group.order
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k, zk in enumerate(classes.representatives):
        col = group.right_perm(zk)   # y -> y * z_k
        for x in range(n):
            i = classes.class_map[x]
            j = classes.class_map[col[group.inverse_index(x)]]
            a[i][j][k] += 1
    return a


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def group_exponent(group: MatrixGroup, classes: ConjugacyClasses) -> int:
    """lcm of element orders (orders are class invariants)."""
    e = 1
    for rep in classes.representatives:
        e = math.lcm(e, group.element_order(rep))
    return e


def dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2*sqrt(order)."""
    bound = 2 * math.isqrt(order) + 1
    p = exponent + 1
    while p <= bound or not _is_prime(p):
        p += exponent
    return p
