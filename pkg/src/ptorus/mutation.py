"""Matrix mutation, mutation maps, and B-coherence checks.

Indices are 1-based (``k in {1, 2, 3}``) to match the usual cluster
algebra notation. A mutation sequence is a list of indices in the order
they are *applied*: ``[1, 2]`` first mutates at 1 and then at 2, so it
computes what is usually written ``eta_{21}``.

All arithmetic is exact; vectors may hold ``int`` or ``Fraction`` entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Iterator, Optional, Sequence

from ._exact import frac, sign

#: The exchange matrix of the once-punctured torus.
B = ((0, 2, -2), (-2, 0, 2), (2, -2, 0))
NEG_B = tuple(tuple(-x for x in row) for row in B)


def _check_index(k: int, n: int) -> None:
    if not isinstance(k, int) or not 1 <= k <= n:
        raise IndexError(f"mutation index {k!r} out of range 1..{n}")


def is_skew_symmetric(matrix: Sequence[Sequence]) -> bool:
    n = len(matrix)
    return all(len(row) == n for row in matrix) and all(
        matrix[i][j] == -matrix[j][i] for i in range(n) for j in range(n)
    )


def mutate_matrix(matrix: Sequence[Sequence], k: int) -> tuple:
    """Mutate an extended exchange matrix at ``k``.

    ``matrix`` has ``n`` columns; its first ``n`` rows form the
    (skew-symmetric) exchange matrix and any further rows are coefficient
    rows, which transform by the same rule.
    """
    n = len(matrix[0])
    _check_index(k, n)
    if len(matrix) < n or not is_skew_symmetric([row[:n] for row in matrix[:n]]):
        raise ValueError("top n x n block must be skew-symmetric")
    kk = k - 1
    out = []
    for i, row in enumerate(matrix):
        new = []
        for j in range(n):
            if i == kk or j == kk:
                new.append(-row[j])
            else:
                bik, bkj = row[kk], matrix[kk][j]
                new.append(row[j] + sign(bkj) * max(bik * bkj, 0))
        out.append(tuple(new))
    return tuple(out)


def mutation_step(matrix: Sequence[Sequence], k: int, a: Sequence) -> tuple:
    """One mutation-map step ``eta_k`` of the row ``a`` at exchange matrix ``matrix``."""
    kk = k - 1
    ak = a[kk]
    out = []
    for j, aj in enumerate(a):
        if j == kk:
            out.append(-ak)
            continue
        bkj = matrix[kk][j]
        if ak >= 0 and bkj >= 0:
            out.append(aj + ak * bkj)
        elif ak <= 0 and bkj <= 0:
            out.append(aj - ak * bkj)
        else:
            out.append(aj)
    return tuple(out)


def mutate_exchange(matrix: Sequence[Sequence], k: int) -> tuple:
    """Mutate a bare exchange matrix (no coefficient rows)."""
    return mutate_matrix(matrix, k)


def mutation_map(b0: Sequence[Sequence], ks: Sequence[int], a: Sequence) -> tuple:
    """Apply the mutation map for the sequence ``ks`` (application order) to ``a``.

    ``b0`` is the exchange matrix at the start of the sequence; each step
    uses the matrix mutated by the preceding steps.
    """
    n = len(b0)
    if len(a) != n:
        raise ValueError(f"vector has length {len(a)}, expected {n}")
    m = tuple(tuple(row) for row in b0)
    v = tuple(a)
    for k in ks:
        _check_index(k, n)
        v = mutation_step(m, k, v)
        m = mutate_exchange(m, k)
    return v


def final_matrix(b0: Sequence[Sequence], ks: Sequence[int]) -> tuple:
    m = tuple(tuple(row) for row in b0)
    for k in ks:
        m = mutate_exchange(m, k)
    return m


def inverse_map(b0: Sequence[Sequence], ks: Sequence[int], a: Sequence) -> tuple:
    """Inverse of :func:`mutation_map`: the reversed sequence run from ``mu_ks(b0)``."""
    return mutation_map(final_matrix(b0, ks), list(reversed(ks)), a)


def eta21(v: Sequence) -> tuple:
    """``eta_2^{-B} o eta_1^B``: mutate at 1, then at 2, starting from ``B``."""
    return mutation_map(B, (1, 2), v)


def eta21_closed_form(v: Sequence) -> tuple:
    """Four-case formula for ``eta21`` on the plane ``x + y + z = 0``."""
    x, y, z = v
    if x + y + z != 0:
        raise ValueError("closed form only holds on the plane x + y + z = 0")
    if x <= 0 and y <= 0:
        return (-x, -y, 2 * x + 2 * y + z)
    if x <= 0 and y >= 0:
        return (-x + 2 * y, -y, 2 * x + z)
    if x >= 0 and 2 * x + y <= 0:
        return (-x, -2 * x - y, 4 * x + 2 * y + z)
    return (3 * x + 2 * y, -2 * x - y, z)


def normalized_sequences(n: int, length: int) -> Iterator[tuple]:
    """All index sequences of the given length with no immediate repeats."""
    if length == 0:
        yield ()
        return
    for prefix in normalized_sequences(n, length - 1):
        for k in range(1, n + 1):
            if not prefix or prefix[-1] != k:
                yield prefix + (k,)


@dataclass(frozen=True)
class CoherenceResult:
    """Outcome of a depth-bounded B-coherence check.

    ``ok`` only certifies the sequences up to ``depth``; ``witness`` is the
    shortest failing sequence (application order) when ``ok`` is false.
    """

    ok: bool
    depth: int
    sequences_checked: int
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def _relation_holds(images, coeffs) -> bool:
    n = len(images[0]) if images else 0
    for j in range(n):
        lin = 0
        low = 0
        for v, c in zip(images, coeffs):
            lin += c * v[j]
            if v[j] < 0:
                low += c * v[j]
        if lin != 0 or low != 0:
            return False
    return True


def is_b_coherent(relation, depth: int, b0: Sequence[Sequence] = B) -> CoherenceResult:
    """Check the linear and componentwise-minimum conditions up to ``depth``.

    ``relation`` is a list of ``(vector, coefficient)`` pairs. Sequences are
    enumerated breadth-first without immediate repeats, so a failure
    reports a shortest witness.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    vectors = [tuple(v) for v, _ in relation]
    coeffs = [frac(c) for _, c in relation]
    m0 = tuple(tuple(row) for row in b0)
    level = [((), m0, vectors)]
    checked = 0
    for d in range(depth + 1):
        for seq, m, images in level:
            checked += 1
            if not _relation_holds(images, coeffs):
                return CoherenceResult(False, depth, checked, seq)
        if d == depth:
            break
        nxt = []
        for seq, m, images in level:
            for k in range(1, len(m0) + 1):
                if seq and seq[-1] == k:
                    continue
                nxt.append((seq + (k,), mutate_exchange(m, k), [mutation_step(m, k, v) for v in images]))
        level = nxt
    return CoherenceResult(True, depth, checked)


# -- sectors D_j of the plane x + y + z = 0 -------------------------------


def sector_generators(j: int) -> tuple:
    """The two generators of the closed sector ``D_j``."""
    if j == 0:
        return ((-1, 0, 1), (0, 1, -1))
    if j > 0:
        return ((j - 1, -j + 2, -1), (j, -j + 1, -1))
    return ((-j - 2, j + 1, 1), (-j - 1, j, 1))


def sector_membership(v: Sequence) -> frozenset:
    """Indices ``j`` with ``v`` in ``D_j``; empty exactly on the ray through ``[1, -1, 0]``."""
    x, y, z = (frac(t) for t in v)
    if x + y + z != 0:
        raise ValueError("vector is not in the plane x + y + z = 0")
    if x == y == z == 0:
        raise ValueError("zero vector lies in every sector")
    if z == 0:
        return frozenset({0}) if x < 0 else frozenset()
    if z < 0:
        # scaled to z = -1 the sector D_j (j >= 1) covers x in [j-1, j]
        t = x / -z
        if t < 0:
            return frozenset({0})
        if t.denominator == 1:
            return frozenset({0, 1}) if t == 0 else frozenset({int(t), int(t) + 1})
        return frozenset({ceil(t)})
    # z > 0: scaled to z = 1 the sector D_j (j <= -1) covers x in [-j-2, -j-1]
    s = x / z
    if s < -1:
        return frozenset({0})
    if s.denominator == 1:
        s = int(s)
        return frozenset({-s - 1, -s - 2}) if s > -1 else frozenset({0, -1})
    return frozenset({-floor(s) - 2})
