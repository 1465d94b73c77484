"""The three mixed ternary families, representation tests, and counting.

A form is a*S1 + b*S2 + c*S3 where each slot is either a square x^2 or a
triangular number T_x = x(x+1)/2, in one of three shapes:

    sst: a*x^2 + b*y^2 + c*T_z
    stt: a*x^2 + b*T_y + c*T_z
    ttt: a*T_x + b*T_y + c*T_z

Since 8*T_x + 1 = (2x+1)^2, each family reduces to a diagonal quadratic form
with parity constraints; `associated_quadratic` exposes that reduction.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .arith import is_prime

MAX_COEFFICIENT = 2**32
MAX_TARGET = 2**40
MAX_SIEVE_BOUND = 10**7
MAX_EVAL_ARG = 2**20
MAX_LOCAL_MODULUS = 10**6


class FormKind(enum.Enum):
    TWO_SQUARES_ONE_TRI = "sst"
    ONE_SQUARE_TWO_TRI = "stt"
    THREE_TRI = "ttt"

    @property
    def slot_types(self) -> tuple[str, str, str]:
        return {
            FormKind.TWO_SQUARES_ONE_TRI: ("sq", "sq", "tri"),
            FormKind.ONE_SQUARE_TWO_TRI: ("sq", "tri", "tri"),
            FormKind.THREE_TRI: ("tri", "tri", "tri"),
        }[self]


@dataclass(frozen=True)
class MixedForm:
    kind: FormKind
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        for v in (self.a, self.b, self.c):
            if not 1 <= v <= MAX_COEFFICIENT:
                raise ValueError(f"coefficient {v} outside [1, 2^32]")

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        vars_sq = iter(("x^2", "y^2", "z^2"))
        vars_tri = iter(("T_x", "T_y", "T_z")[3 - self.kind.slot_types.count("tri"):])
        parts = []
        for coef, typ in zip(self.coefficients, self.kind.slot_types):
            var = next(vars_sq) if typ == "sq" else next(vars_tri)
            parts.append(var if coef == 1 else f"{coef}{var}")
        return "+".join(parts)


def triangular(t: int) -> int:
    """t(t+1)/2; note T_t == T_(-t-1)."""
    return t * (t + 1) // 2


def is_triangular(v: int) -> bool:
    if v < 0:
        return False
    s = math.isqrt(8 * v + 1)
    return s * s == 8 * v + 1


def evaluate(form: MixedForm, x: int, y: int, z: int) -> int:
    """Value of the form at integer arguments (bounded to 2^20 in magnitude)."""
    args = (x, y, z)
    for v in args:
        if abs(v) > MAX_EVAL_ARG:
            raise ValueError("argument magnitude exceeds 2^20")
    total = 0
    for coef, typ, v in zip(form.coefficients, form.kind.slot_types, args):
        total += coef * (v * v if typ == "sq" else triangular(v))
    return total


def _slot_values_upto(coef: int, typ: str, limit: int) -> np.ndarray:
    """Ascending array of coef*x^2 (or coef*T_x, x >= 0) values <= limit."""
    top = limit // coef
    if typ == "sq":
        k = math.isqrt(top)
        base = np.arange(k + 1, dtype=np.int64) ** 2
    else:
        k = (math.isqrt(8 * top + 1) - 1) // 2
        t = np.arange(k + 1, dtype=np.int64)
        base = t * (t + 1) // 2
    return coef * base


def _iter_slot_values(coef: int, typ: str, limit: int):
    x = 0
    while True:
        v = coef * (x * x if typ == "sq" else triangular(x))
        if v > limit:
            return
        yield v
        x += 1


def _slot_matches(coef: int, typ: str, rem: int) -> bool:
    if rem < 0 or rem % coef:
        return False
    q = rem // coef
    if typ == "tri":
        return is_triangular(q)
    s = math.isqrt(q)
    return s * s == q


def represents(form: MixedForm, n: int) -> bool:
    """True iff the form takes the value n at some integer point."""
    if n < 0:
        raise ValueError("targets are natural numbers")
    if n > MAX_TARGET:
        raise ValueError("target exceeds 2^40")
    if n == 0:
        return True
    slots = sorted(
        zip(form.coefficients, form.kind.slot_types), key=lambda s: -s[0]
    )
    (c1, t1), (c2, t2), (c3, t3) = slots
    for v1 in _iter_slot_values(c1, t1, n):
        for v2 in _iter_slot_values(c2, t2, n - v1):
            if _slot_matches(c3, t3, n - v1 - v2):
                return True
    return False


@dataclass(frozen=True)
class ExceptionalSetReport:
    """Exceptions of a form up to a bound, exhaustive below that bound only."""

    form: MixedForm
    bound: int
    exceptions: tuple[int, ...]
    complete_below_bound: bool = True
    caveat: str = "completeness beyond the bound is not certified"


def exceptional_set(form: MixedForm, bound: int) -> ExceptionalSetReport:
    """All n in [0, bound] not represented, by a bit sieve over slot values."""
    if bound < 0:
        raise ValueError("bound must be a natural number")
    if bound > MAX_SIEVE_BOUND:
        raise ValueError(f"bound exceeds the sieve memory guard ({MAX_SIEVE_BOUND})")
    slots = sorted(
        zip(form.coefficients, form.kind.slot_types), key=lambda s: s[0]
    )
    # pair the two smaller-coefficient slots, then shift by the sparsest slot
    lo, mid, outer = slots
    reach2 = np.zeros(bound + 1, dtype=bool)
    mid_vals = _slot_values_upto(mid[0], mid[1], bound)
    for v in _slot_values_upto(lo[0], lo[1], bound):
        reach2[v + mid_vals[: int(np.searchsorted(mid_vals, bound - v, "right"))]] = True
    reach = np.zeros(bound + 1, dtype=bool)
    for w in _slot_values_upto(outer[0], outer[1], bound).tolist():
        reach[w:] |= reach2[: bound + 1 - w]
    exceptions = tuple(int(v) for v in np.flatnonzero(~reach))
    return ExceptionalSetReport(form=form, bound=bound, exceptions=exceptions)


@dataclass(frozen=True)
class DiagonalQuadratic:
    """Diagonal form with per-variable parity constraints and target offset:
    the source form represents n iff this represents scale*n + offset."""

    coefficients: tuple[int, int, int]
    odd: tuple[bool, bool, bool]
    offset: int
    scale: int = 8


def associated_quadratic(form: MixedForm) -> DiagonalQuadratic:
    a, b, c = form.coefficients
    if form.kind is FormKind.TWO_SQUARES_ONE_TRI:
        return DiagonalQuadratic((8 * a, 8 * b, c), (False, False, True), c)
    if form.kind is FormKind.ONE_SQUARE_TWO_TRI:
        return DiagonalQuadratic((8 * a, b, c), (False, True, True), b + c)
    return DiagonalQuadratic((a, b, c), (True, True, True), a + b + c)


def _axis_values(coef: int, odd: bool, limit: int):
    """Yields (value, sign multiplicity) for coef*x^2 <= limit on one axis."""
    x = 1 if odd else 0
    step = 2 if odd else 1
    while True:
        v = coef * x * x
        if v > limit:
            return
        yield v, (1 if x == 0 else 2)
        x += step


def restricted_count(q: DiagonalQuadratic, n: int) -> int:
    """Exact number of integer triples with the given parities and value n
    (signs counted separately)."""
    if n < 0:
        raise ValueError("targets are natural numbers")
    if n > MAX_TARGET:
        raise ValueError("target exceeds 2^40")
    order = sorted(range(3), key=lambda i: -q.coefficients[i])
    i, j, k = order
    ck, oddk = q.coefficients[k], q.odd[k]
    total = 0
    for vi, mi in _axis_values(q.coefficients[i], q.odd[i], n):
        for vj, mj in _axis_values(q.coefficients[j], q.odd[j], n - vi):
            rem = n - vi - vj
            if rem % ck:
                continue
            s = rem // ck
            r = math.isqrt(s)
            if r * r != s:
                continue
            if oddk:
                if r % 2 == 0:
                    continue
                total += mi * mj * 2
            else:
                total += mi * mj * (1 if r == 0 else 2)
    return total


def _freq_table(coef: int, m: int) -> np.ndarray:
    x = np.arange(m, dtype=np.int64)
    return np.bincount((coef % m) * x * x % m, minlength=m)


def _cyclic_convolve(f: np.ndarray, g: np.ndarray, m: int) -> np.ndarray:
    """Exact cyclic convolution of nonnegative int64 tables via 64-bit limb
    packing (entries stay below 2^64, so limbs never carry)."""
    fi = int.from_bytes(f.astype("<u8").tobytes(), "little")
    gi = int.from_bytes(g.astype("<u8").tobytes(), "little")
    buf = (fi * gi).to_bytes(16 * m, "little")
    lin = np.frombuffer(buf, dtype="<u8")[: 2 * m - 1].astype(np.int64)
    out = lin[:m].copy()
    out[: m - 1] += lin[m:]
    return out


def local_count(coefficients: tuple[int, int, int], n: int, p: int, k: int) -> int:
    """Number of solutions of a*x^2+b*y^2+c*z^2 = n over (Z/p^k)^3."""
    if not is_prime(p):
        raise ValueError("modulus base must be prime")
    if k < 1:
        raise ValueError("exponent must be >= 1")
    m = p**k
    if m > MAX_LOCAL_MODULUS:
        raise ValueError(f"p^k exceeds {MAX_LOCAL_MODULUS}")
    a, b, c = coefficients
    fa, fb, fc = (_freq_table(u, m) for u in (a, b, c))
    conv = _cyclic_convolve(fb, fc, m)
    idx = (n - np.arange(m)) % m
    return int(fa @ conv[idx])
