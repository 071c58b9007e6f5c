"""
Exact rank and kernel computations for sparse integer vectors.

Vectors are mappings from arbitrary hashable keys to integers.  The work is
done over the rationals by sympy's sparse ``DomainMatrix``; kernels are
returned with denominators cleared.

>>> rank([{"a": 1, "b": 1}, {"a": 2, "b": 2}, {"c": 1}])
2
>>> relations([{"a": 1}, {"a": 2}])
[[-2, 1]]
"""

__all__ = ["rank", "relations", "kernel_vectors", "same_span", "in_span"]

from math import lcm
from typing import Hashable, Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def _matrix(rows: Sequence[Mapping[Hashable, int]], columns=None):
    if columns is None:
        seen = {}
        for row in rows:
            for k in row:
                seen.setdefault(k, len(seen))
        columns = seen
    data = {}
    for i, row in enumerate(rows):
        entries = {columns[k]: QQ(v) for k, v in row.items() if v}
        if entries:
            data[i] = entries
    return DomainMatrix(data, (len(rows), len(columns)), QQ), columns


def rank(vectors: Sequence[Mapping[Hashable, int]]) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    m, columns = _matrix(vectors)
    if not columns:
        return 0
    return m.rank()


def _integral(row) -> list[int]:
    den = 1
    for x in row:
        den = lcm(den, int(x.denominator))
    return [int(x * den) for x in row]


def relations(vectors: Sequence[Mapping[Hashable, int]]) -> list[list[int]]:
    """Integer coefficient lists lam with sum(lam[i] * vectors[i]) == 0, a basis."""
    vectors = list(vectors)
    if not vectors:
        return []
    m, columns = _matrix(vectors)
    if not columns:
        return [[int(i == j) for j in range(len(vectors))] for i in range(len(vectors))]
    null = m.transpose().nullspace().to_Matrix()
    return [_integral(list(null.row(i))) for i in range(null.rows)]


def kernel_vectors(rows: Sequence[Mapping[Hashable, int]], keys: Sequence[Hashable]) -> list[dict]:
    """
    Basis of ``{x : sum_k row[k] x[k] == 0 for every row}``, x supported on keys.
    """
    columns = {k: i for i, k in enumerate(keys)}
    if not rows:
        return [{k: 1} for k in keys]
    m, _ = _matrix(rows, columns)
    null = m.nullspace().to_Matrix()
    out = []
    for i in range(null.rows):
        vals = _integral(list(null.row(i)))
        out.append({k: v for k, v in zip(keys, vals) if v})
    return out


def in_span(vector: Mapping[Hashable, int], basis: Sequence[Mapping[Hashable, int]]) -> bool:
    return rank(list(basis) + [vector]) == rank(basis)


def same_span(a: Sequence[Mapping[Hashable, int]], b: Sequence[Mapping[Hashable, int]]) -> bool:
    ra, rb = rank(a), rank(b)
    return ra == rb and rank(list(a) + list(b)) == ra
