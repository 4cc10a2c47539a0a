"""Small exact-arithmetic helpers shared by the other modules.

Everything here works on ``int`` and ``fractions.Fraction``; nothing
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Vec = tuple  # tuple of ints / Fractions


def frac(value) -> Fraction:
    """Coerce ``value`` (int, Fraction, or a ``"p/q"`` string) to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def vec(values: Iterable) -> tuple:
    """Tuple of Fractions, with integral entries demoted to ``int``."""
    return tuple(_demote(frac(v)) for v in values)


def _demote(x: Fraction):
    return x.numerator if x.denominator == 1 else x


def sign(x) -> int:
    return (x > 0) - (x < 0)


def add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> tuple:
    return tuple(c * a for a in v)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def cross(u: Sequence, v: Sequence) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det2(u: Sequence, v: Sequence):
    return u[0] * v[1] - u[1] * v[0]


def det3(rows: Sequence[Sequence]):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def cycle2(v: Sequence) -> tuple:
    """``[x, y, z] -> [y, z, x]``."""
    return (v[1], v[2], v[0])


def cycle3(v: Sequence) -> tuple:
    """``[x, y, z] -> [z, x, y]``."""
    return (v[2], v[0], v[1])


def negswap(v: Sequence) -> tuple:
    """Swap the first two coordinates and negate; an involution."""
    return (-v[1], -v[0], -v[2])


def primitive(v: Sequence) -> tuple:
    """Primitive integer vector on the ray through the nonzero rational ``v``."""
    fs = [frac(x) for x in v]
    den = 1
    for x in fs:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fs]
    g = 0
    for n in ints:
        g = gcd(g, n)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(n // g for n in ints)


def solve(columns: Sequence[Sequence], rhs: Sequence) -> Optional[tuple]:
    """Solve ``sum_j x_j * columns[j] == rhs`` exactly.

    Returns the coefficient tuple, or ``None`` when ``rhs`` is not in the
    span. The columns must be linearly independent.
    """
    n_rows = len(rhs)
    n_cols = len(columns)
    m = [[frac(columns[j][i]) for j in range(n_cols)] + [frac(rhs[i])] for i in range(n_rows)]
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            raise ValueError("columns are linearly dependent")
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(r)
        r += 1
    if any(m[i][n_cols] != 0 for i in range(r, n_rows)):
        return None
    return tuple(_demote(m[i][n_cols]) for i in pivots)


def rank(rows: Sequence[Sequence]) -> int:
    m = [[frac(x) for x in row] for row in rows]
    if not m:
        return 0
    n_cols = len(m[0])
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def format_rational(x) -> str:
    x = frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_vector(v: Sequence) -> str:
    return ",".join(format_rational(x) for x in v)


def parse_vector(text: str, length: Optional[int] = 3) -> tuple:
    """Parse ``"p/q,r,s/t"`` into a tuple of exact rationals."""
    parts = [p for p in text.replace(" ", "").split(",")]
    if length is not None and len(parts) != length:
        raise ValueError(f"expected {length} comma-separated rationals, got {text!r}")
    try:
        return vec(parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational vector {text!r}") from exc
