"""
Sublattices of Z^R of finite index
==================================

A finite abelian group is handled as Z^R / L where L is a full-rank lattice
containing D*Z^R for a known exponent multiple D. `Lattice` stores L by its
canonical upper-triangular Hermite normal form, so equal lattices have
equal row tuples.

Features:
- Membership and canonical coset representatives (0 <= x_i < pivot_i)
- Index, order of a vector in the quotient, all solutions of k*x = c
- Enumeration of superlattices of a given index and of coset representatives
"""

from itertools import product
from math import gcd
from typing import Iterable, Iterator, List, Sequence, Tuple

from .numbers import xgcd, lcm_all


class Lattice:
    """Full-rank sublattice of Z^R containing exponent * Z^R"""

    __slots__ = ("dim", "exponent", "rows", "_hash")

    def __init__(self, dim: int, exponent: int, generators: Iterable[Sequence[int]] = ()):
        if exponent < 1:
            raise ValueError(f"Lattice exponent must be positive, got {exponent}")
        self.dim = dim
        self.exponent = exponent
        rows = [[exponent if j == i else 0 for j in range(dim)] for i in range(dim)]
        for v in generators:
            if len(v) != dim:
                raise ValueError(f"Generator {tuple(v)} does not have dimension {dim}")
            _insert(rows, [x % exponent for x in v], exponent, 0)
        _close(rows, exponent)
        _canonicalize(rows)
        self.rows = tuple(tuple(r) for r in rows)
        self._hash = hash((self.dim, self.rows))

    @classmethod
    def diagonal(cls, orders: Sequence[int]) -> "Lattice":
        """The lattice diag(orders), i.e. the product of cyclic groups Z/orders[i]"""
        exponent = lcm_all(orders)
        dim = len(orders)
        return cls(dim, exponent, [[o if j == i else 0 for j in range(dim)] for i, o in enumerate(orders)])

    # ------------------------------------------------------------ queries

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(self.dim))

    @property
    def index(self) -> int:
        """Order of the quotient Z^R / L"""
        result = 1
        for p in self.pivots:
            result *= p
        return result

    def reduce(self, v: Sequence[int]) -> Tuple[int, ...]:
        """Canonical representative of v + L"""
        w = list(v)
        for i, row in enumerate(self.rows):
            quot = w[i] // row[i]
            if quot:
                for j in range(i, self.dim):
                    w[j] -= quot * row[j]
        return tuple(w)

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def order_of(self, v: Sequence[int]) -> int:
        """Least k >= 1 with k*v in L"""
        k = 1
        w = list(v)
        for i, row in enumerate(self.rows):
            pivot = row[i]
            t = pivot // gcd(pivot, w[i])
            if t > 1:
                k *= t
                w = [t * x for x in w]
            quot = w[i] // pivot
            if quot:
                for j in range(i, self.dim):
                    w[j] -= quot * row[j]
        return k

    def extend(self, vectors: Iterable[Sequence[int]]) -> "Lattice":
        """Lattice generated by L and the given vectors"""
        vectors = list(vectors)
        if not vectors:
            return self
        return Lattice(self.dim, self.exponent, list(self.rows) + vectors)

    def is_sublattice_of(self, other: "Lattice") -> bool:
        return all(other.contains(row) for row in self.rows)

    def exponent_of_quotient(self) -> int:
        return lcm_all(self.order_of(e) for e in _unit_vectors(self.dim))

    def is_cyclic_quotient(self) -> bool:
        return self.exponent_of_quotient() == self.index

    # ------------------------------------------------------- enumeration

    def coset_representatives(self) -> Iterator[Tuple[int, ...]]:
        """Every element of Z^R / L once, as canonical representatives"""
        return product(*(range(p) for p in self.pivots))

    def solve_multiple(self, k: int, c: Sequence[int]) -> Iterator[Tuple[int, ...]]:
        """
        All x in Z^R / L with k*x = c (mod L), as canonical representatives

        Columns are fixed left to right; each column admits gcd(k, pivot)
        residues or none.
        """
        dim = self.dim
        rows = self.rows

        def solve(i, x, residual):
            if i == dim:
                yield tuple(x)
                return
            pivot = rows[i][i]
            g = gcd(k, pivot)
            target = residual[i]
            if target % g:
                return
            step = pivot // g
            _, inv, _ = xgcd((k // g) % step or step, step) if step > 1 else (1, 0, 0)
            base = ((target // g) * inv) % step if step > 1 else 0
            for t in range(g):
                xi = base + t * step
                w = list(residual)
                w[i] -= k * xi
                quot = w[i] // pivot
                for j in range(i, dim):
                    w[j] -= quot * rows[i][j]
                x.append(xi)
                yield from solve(i + 1, x, w)
                x.pop()

        return solve(0, [], list(c))

    def superlattices(self, index: int) -> Iterator["Lattice"]:
        """
        All lattices L' containing L with [Z^R : L'] = index

        Rows are chosen bottom-up in Hermite normal form; a partial choice
        is abandoned as soon as some row of L is not in the span of the
        rows chosen so far.
        """
        if index < 1 or self.index % index:
            return iter(())
        dim = self.dim
        pivots = self.pivots
        own = self.rows

        def pivot_choices(i, remaining):
            if i < 0:
                if remaining == 1:
                    yield ()
                return
            for h in _divisors(pivots[i]):
                if remaining % h == 0:
                    for rest in pivot_choices(i - 1, remaining // h):
                        yield rest + (h,)

        def build(i, hs, chosen):
            # chosen: rows i+1..dim-1, bottom row last
            if i < 0:
                yield Lattice._from_hnf(dim, self.exponent, chosen)
                return
            tails = [range(hs[j]) for j in range(i + 1, dim)]
            for tail in product(*tails):
                row = (0,) * i + (hs[i],) + tail
                candidate = [row] + chosen
                if _in_span(own[i], candidate, i, dim):
                    yield from build(i - 1, hs, candidate)

        def generate():
            for hs in pivot_choices(dim - 1, index):
                yield from build(dim - 1, hs, [])

        return generate()

    @classmethod
    def _from_hnf(cls, dim, exponent, rows):
        obj = cls.__new__(cls)
        obj.dim = dim
        obj.exponent = exponent
        obj.rows = tuple(tuple(r) for r in rows)
        obj._hash = hash((dim, obj.rows))
        return obj

    # ------------------------------------------------------------ dunder

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Lattice(pivots={self.pivots}, rows={self.rows})"


def _unit_vectors(dim):
    return [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]


def _divisors(n):
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _in_span(v, rows, start, dim):
    """v (zero before `start`) reduced by upper-triangular rows starting at `start`"""
    w = list(v)
    for offset, row in enumerate(rows):
        i = start + offset
        quot, rem = divmod(w[i], row[i])
        if rem:
            return False
        if quot:
            for j in range(i, dim):
                w[j] -= quot * row[j]
    return True


def _insert(rows: List[List[int]], v: List[int], exponent: int, start: int) -> bool:
    """Fold v into the triangular rows; True when some pivot shrank"""
    dim = len(rows)
    shrank = False
    for i in range(start, dim):
        b = v[i] % exponent
        if b == 0:
            continue
        row = rows[i]
        a = row[i]
        if b % a == 0:
            quot = b // a
            v = [(v[j] - quot * row[j]) % exponent for j in range(dim)]
            continue
        g, s, t = xgcd(a, b)
        new_row = [(s * row[j] + t * v[j]) % exponent for j in range(dim)]
        new_row[i] = g
        v = [((b // g) * row[j] - (a // g) * v[j]) % exponent for j in range(dim)]
        rows[i] = new_row
        shrank = True
    return shrank


def _close(rows: List[List[int]], exponent: int):
    """Make the rows span exponent*Z^R on their own"""
    dim = len(rows)
    changed = True
    while changed:
        changed = False
        for i in range(dim - 1, -1, -1):
            pivot = rows[i][i]
            scale = exponent // pivot
            tail = [0] * (i + 1) + [(scale * rows[i][j]) % exponent for j in range(i + 1, dim)]
            if any(tail) and _insert(rows, tail, exponent, i + 1):
                changed = True


def _canonicalize(rows: List[List[int]]):
    dim = len(rows)
    for j in range(dim):
        pivot = rows[j][j]
        for i in range(j):
            quot = rows[i][j] // pivot
            if quot:
                for k in range(j, dim):
                    rows[i][k] -= quot * rows[j][k]
