"""Square-class algebra over Q_2, dyadic norm groups, and spinor-norm groups.

The square classes of Q_2 form an eight-element group indexed by (valuation
parity, unit mod 8), with canonical representatives {1,3,5,7,2,6,10,14}.
Spinor norm groups of diagonal dyadic lattices <1, 2^r*alpha> are tabulated
for r >= 1; ternary lattices reduce either to the full group or to their
rank-2 sublattices for the exponent configurations covered here, and honestly
report Indeterminate everywhere else.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import hilbert2, odd_part, squarefree_part, v2

_UNITS = (1, 3, 5, 7)
CANONICAL_REPRESENTATIVES = (1, 3, 5, 7, 2, 6, 10, 14)


@dataclass(frozen=True)
class SquareClass:
    """An element of Q_2^x / (Q_2^x)^2."""

    val_parity: int
    unit_mod8: int

    def __post_init__(self) -> None:
        if self.val_parity not in (0, 1) or self.unit_mod8 not in _UNITS:
            raise ValueError("square class needs parity in {0,1} and odd unit mod 8")

    @property
    def index(self) -> int:
        return self.val_parity * 4 + (self.unit_mod8 - 1) // 2

    @property
    def representative(self) -> int:
        return self.unit_mod8 << self.val_parity

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        return class_mul(self, other)


def square_class(value: int) -> SquareClass:
    if value == 0:
        raise ValueError("0 has no square class")
    val = v2(abs(value))
    return SquareClass(val % 2, (value >> val) % 8)


def class_mul(s: SquareClass, t: SquareClass) -> SquareClass:
    return SquareClass((s.val_parity + t.val_parity) % 2, s.unit_mod8 * t.unit_mod8 % 8)


@dataclass(frozen=True)
class SquareClassSet:
    """Subset of the eight square classes, stored as an 8-bit mask."""

    mask: int

    def __post_init__(self) -> None:
        if not 0 <= self.mask < 256:
            raise ValueError("mask must fit in 8 bits")

    @classmethod
    def from_values(cls, values) -> "SquareClassSet":
        mask = 0
        for v in values:
            cl = v if isinstance(v, SquareClass) else square_class(v)
            mask |= 1 << cl.index
        return cls(mask)

    def __contains__(self, v) -> bool:
        cl = v if isinstance(v, SquareClass) else square_class(v)
        return bool(self.mask >> cl.index & 1)

    def __iter__(self):
        for i in range(8):
            if self.mask >> i & 1:
                yield SquareClass(i // 4, 2 * (i % 4) + 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __or__(self, other: "SquareClassSet") -> "SquareClassSet":
        return SquareClassSet(self.mask | other.mask)

    def issubset(self, other: "SquareClassSet") -> bool:
        return self.mask & ~other.mask == 0

    def representatives(self) -> tuple[int, ...]:
        return tuple(sorted(cl.representative for cl in self))

    def is_subgroup(self) -> bool:
        classes = list(self)
        if SquareClass(0, 1) not in self:
            return False
        return all(s * t in self for s in classes for t in classes)


FULL_GROUP_SET = SquareClassSet(0xFF)


@dataclass(frozen=True)
class ImaginaryField:
    """The imaginary quadratic field Q(sqrt(-d)) with d > 0 squarefree."""

    radicand: int

    def __post_init__(self) -> None:
        if self.radicand < 1 or squarefree_part(self.radicand) != self.radicand:
            raise ValueError("radicand must be positive and squarefree")

    @classmethod
    def gaussian(cls) -> "ImaginaryField":
        return cls(1)

    @classmethod
    def root_minus_two(cls) -> "ImaginaryField":
        return cls(2)

    @classmethod
    def for_target(cls, n: int) -> "ImaginaryField":
        """Field generated by sqrt(-n), via the squarefree radicand of n."""
        if n < 1:
            raise ValueError("target must be positive")
        return cls(squarefree_part(n))

    @property
    def is_gaussian(self) -> bool:
        return self.radicand == 1

    @property
    def is_root_minus_two(self) -> bool:
        return self.radicand == 2

    @property
    def tag(self) -> str:
        if self.is_gaussian:
            return "gaussian"
        if self.is_root_minus_two:
            return "root-minus-two"
        return f"other({self.radicand})"


def norm_group(field: ImaginaryField) -> SquareClassSet:
    """Square classes that are dyadic local norms from the field."""
    if field.is_gaussian:
        return SquareClassSet.from_values((1, 5, 2, 10))
    if field.is_root_minus_two:
        return SquareClassSet.from_values((1, 3, 2, 6))
    raise ValueError(f"norm group only tabulated for the two ramified fields, not {field.tag}")


def binary_spinor_norm(alpha: int, r: int) -> SquareClassSet:
    """Spinor norm group of the dyadic lattice <1, 2^r * alpha>, r >= 1.

    r in {1,3}: the kernel of the character (. , -2*alpha); r = 2: the unit
    classes orthogonal to -alpha; r = 4: {1, alpha, 5, 5*alpha}; r >= 5:
    {1, alpha}.
    """
    if alpha % 2 == 0:
        raise ValueError("alpha must be a dyadic unit (odd)")
    if r < 1:
        raise ValueError("the unimodular binary case r = 0 is not tabulated")
    a8 = alpha % 8
    if r in (1, 3):
        return SquareClassSet.from_values(
            rep for rep in CANONICAL_REPRESENTATIVES if hilbert2(rep, -2 * a8) == 1
        )
    if r == 2:
        return SquareClassSet.from_values(
            u for u in _UNITS if hilbert2(u, -a8) == 1
        )
    if r == 4:
        return SquareClassSet.from_values((1, a8, 5, 5 * a8 % 8))
    return SquareClassSet.from_values((1, a8))


def _unimodular_binary_spinor_norm(alpha: int) -> SquareClassSet:
    """Spinor norm group of <1, alpha> (both exponents equal after scaling).

    Generated by the represented unit classes {1, 5, alpha, 5*alpha} together
    with the represented 2-unit classes (present exactly when alpha = 1 mod 4,
    where x, y odd gives x^2 + alpha*y^2 in 2*(1+alpha)/2*(Z_2^x)^2 classes).
    """
    a8 = alpha % 8
    if a8 == 1:
        return SquareClassSet.from_values((1, 5, 2, 10))
    if a8 == 5:
        return SquareClassSet.from_values((1, 5, 6, 14))
    return SquareClassSet.from_values((1, 3, 5, 7))


@dataclass(frozen=True)
class Lattice2:
    """Diagonal dyadic lattice <u1*2^e1, u2*2^e2, u3*2^e3>, exponents ascending."""

    units: tuple[int, int, int]
    exponents: tuple[int, int, int]
    permutation: tuple[int, int, int] = (0, 1, 2)

    def __post_init__(self) -> None:
        if any(u % 2 == 0 or not 1 <= u % 8 == u <= 7 for u in self.units):
            raise ValueError("units must be odd residues mod 8")
        if list(self.exponents) != sorted(self.exponents) or self.exponents[0] < 0:
            raise ValueError("exponents must be sorted nonnegative")

    @classmethod
    def from_diagonal(cls, d1: int, d2: int, d3: int) -> "Lattice2":
        entries = []
        for slot, d in enumerate((d1, d2, d3)):
            if d <= 0:
                raise ValueError("diagonal entries must be positive")
            entries.append((v2(d), odd_part(d) % 8, slot))
        entries.sort(key=lambda e: e[0])
        return cls(
            units=tuple(e[1] for e in entries),
            exponents=tuple(e[0] for e in entries),
            permutation=tuple(e[2] for e in entries),
        )

    def normalized(self) -> "Lattice2":
        """Divide out the common power of 2 (spinor norms are scale-invariant)."""
        e0 = self.exponents[0]
        return Lattice2(
            self.units,
            tuple(e - e0 for e in self.exponents),
            self.permutation,
        )


class SpinorKind(enum.Enum):
    FULL = "full"
    SET = "set"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class TernarySpinorNorm:
    kind: SpinorKind
    classes: SquareClassSet | None = None

    def issubset(self, other: SquareClassSet) -> bool | None:
        """Three-valued containment: None when the group is not determined."""
        if self.kind is SpinorKind.INDETERMINATE:
            return None
        if self.kind is SpinorKind.FULL:
            return FULL_GROUP_SET.issubset(other)
        return self.classes.issubset(other)


FULL_GROUP = TernarySpinorNorm(SpinorKind.FULL)
INDETERMINATE = TernarySpinorNorm(SpinorKind.INDETERMINATE)


def _pair_norm(ui: int, uj: int, diff: int) -> SquareClassSet:
    alpha = ui * uj % 8
    if diff == 0:
        return _unimodular_binary_spinor_norm(alpha)
    return binary_spinor_norm(alpha, diff)


def ternary_spinor_norm(lattice: Lattice2) -> TernarySpinorNorm:
    """Spinor norm data for <u1, u2*2^r, u3*2^s> with exponents (0, r, s).

    Full group when {r, s-r} meets {1,3} and {r, s, s-r} meets {2,4};
    otherwise, for 0 < r < s, and for s >= 5 with r in {0, s}, the classes
    carried by the three rank-2 sublattices; Indeterminate elsewhere.
    """
    if lattice.exponents[0] != 0:
        raise ValueError("normalize the lattice first (first exponent must be 0)")
    _, r, s = lattice.exponents
    u1, u2, u3 = lattice.units
    if {r, s - r} & {1, 3} and {r, s, s - r} & {2, 4}:
        return FULL_GROUP
    if (0 < r < s) or (s >= 5 and r in (0, s)):
        acc = SquareClassSet(0)
        for ui, uj, diff in ((u1, u2, r), (u1, u3, s), (u2, u3, s - r)):
            acc = acc | _pair_norm(ui, uj, diff)
        return TernarySpinorNorm(SpinorKind.SET, acc)
    return INDETERMINATE


class SpinorCheck(enum.Enum):
    CONDITIONS_HOLD = "hold"
    CONDITIONS_FAIL = "fail"
    INDETERMINATE = "indeterminate"


def _shifted(units: tuple[int, int, int], exps: tuple[int, int, int]) -> Lattice2:
    order = sorted(range(3), key=lambda i: exps[i])
    e0 = exps[order[0]]
    return Lattice2(
        units=tuple(units[i] for i in order),
        exponents=tuple(exps[i] - e0 for i in order),
    )


def _part1_fires(r: int, s: int, v2t: int, lp: bool, lpp: bool) -> bool:
    if r % 2:
        return v2t >= r - 3
    if not lp:
        return (r != s and v2t >= r - 2) or (r == s and v2t >= r)
    if not lpp:
        return v2t >= r
    return v2t >= s


def _part2_fires(r: int, s: int, v2t: int, lp: bool) -> bool:
    if r % 2 == 0:
        return v2t >= r - 4
    if not lp:
        return v2t >= r - 3
    return v2t >= s - 2


def schulze_pillot_check(
    lattice: Lattice2, t_valuation: int, field: ImaginaryField
) -> SpinorCheck:
    """Evaluate the dyadic primitive-spinor-exception conditions for a target
    square class of valuation t_valuation against <u1, 2^r*u2, 2^s*u3>.

    The caller must already have established that the lattice's spinor norm
    group lies in the field's dyadic norm group. CONDITIONS_FAIL means some
    defeating clause holds (the target is not a spinor exception);
    CONDITIONS_HOLD means none does. Sublattice spinor-norm containments that
    the covered reductions cannot decide propagate as INDETERMINATE when and
    only when the outcome depends on them.
    """
    if lattice.exponents[0] != 0:
        raise ValueError("normalize the lattice first (first exponent must be 0)")
    if t_valuation < 0:
        raise ValueError("valuations are natural numbers")
    ngroup = norm_group(field)
    _, r, s = lattice.exponents
    units = lattice.units
    same_parity = (r + s) % 2 == t_valuation % 2
    drop = 2 if same_parity else 3
    lp = ternary_spinor_norm(_shifted(units, (r - drop, r, s))).issubset(ngroup)
    outcomes = set()
    if same_parity:
        lpp = ternary_spinor_norm(_shifted(units, (r, r, s))).issubset(ngroup)
        for lp_case in (True, False) if lp is None else (lp,):
            for lpp_case in (True, False) if lpp is None else (lpp,):
                outcomes.add(_part1_fires(r, s, t_valuation, lp_case, lpp_case))
    else:
        for lp_case in (True, False) if lp is None else (lp,):
            outcomes.add(_part2_fires(r, s, t_valuation, lp_case))
    if len(outcomes) > 1:
        return SpinorCheck.INDETERMINATE
    return SpinorCheck.CONDITIONS_FAIL if outcomes.pop() else SpinorCheck.CONDITIONS_HOLD
