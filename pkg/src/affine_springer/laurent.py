"""Exact Laurent polynomials over Q and square matrices of them.

Besides ring arithmetic this module implements the passage from monomial
matrices to affine permutations, membership tests for the Iwahori, parahoric
and related subgroups, and extraction of the Iwahori-Bruhat cell
``M in B w B`` of an invertible matrix.
"""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .affine_weyl import AffinePermutation, min_coset_rep
from .errors import DomainError, EliminationBudgetError, SingularMatrixError

__all__ = [
    "LaurentPoly",
    "LaurentMatrix",
    "T",
    "apm",
    "lift",
    "membership",
    "extract_cell",
    "extract_cell_mod",
]


class LaurentPoly:
    """An element of Q[t, t^-1], stored as ``{exponent: nonzero Fraction}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[int(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coef=1) -> "LaurentPoly":
        return cls({exp: coef})

    # -- inspection ----------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[int, Fraction]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def valuation(self) -> float | int:
        """Lowest exponent; ``inf`` for the zero polynomial."""
        return min(self._terms) if self._terms else float("inf")

    def degree(self) -> float | int:
        return max(self._terms) if self._terms else float("-inf")

    def span(self) -> int:
        if not self._terms:
            raise DomainError("span of zero")
        return max(self._terms) - min(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coeff(self, exp: int) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    def lowest_coeff(self) -> Fraction:
        return self._terms[min(self._terms)]

    def at_zero(self) -> Fraction:
        """Value at ``t = 0``; defined only without negative exponents."""
        if self._terms and min(self._terms) < 0:
            raise DomainError("polynomial has a pole at t = 0")
        return self.coeff(0)

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPoly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return LaurentPoly._raw({})
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise DomainError("only monomials are invertible")
            return self.unit_inverse() ** (-k)
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_monomial():
            raise DomainError(f"{self} is not a unit of Q[t, t^-1]")
        ((e, c),) = self._terms.items()
        return LaurentPoly._raw({-e: 1 / c})

    def divmod(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Euclidean division: ``self = q * other + r`` with ``r = 0`` or ``span(r) < span(other)``."""
        if not other._terms:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self._terms:
            return LaurentPoly._raw({}), LaurentPoly._raw({})
        va, vb = min(self._terms), min(other._terms)
        num = {e - va: c for e, c in self._terms.items()}
        den = {e - vb: c for e, c in other._terms.items()}
        db = max(den)
        lead = den[db]
        quo: dict[int, Fraction] = {}
        while num and max(num) >= db:
            top = max(num)
            factor = num[top] / lead
            quo[top - db] = factor
            for e, c in den.items():
                k = e + top - db
                v = num.get(k, 0) - factor * c
                if v:
                    num[k] = v
                else:
                    num.pop(k, None)
        q = LaurentPoly._raw({e + va - vb: c for e, c in quo.items()})
        r = LaurentPoly._raw({e + va: c for e, c in num.items()})
        return q, r

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod(other)
        if r:
            raise DomainError(f"{other} does not divide {self}")
        return q

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- text and serialization ----------------------------------------

    def to_triples(self) -> list[list[int]]:
        return [[e, c.numerator, c.denominator] for e, c in self.items()]

    @classmethod
    def from_triples(cls, triples: Iterable[Sequence[int]]) -> "LaurentPoly":
        out: dict[int, Fraction] = {}
        for e, num, den in triples:
            out[int(e)] = out.get(int(e), 0) + Fraction(int(num), int(den))
        return cls(out)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            parts.append(f"{sign} {coef}" if e == 0 else f"{sign} {coef}*t^{e}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    __repr__ = __str__

    _TERM = re.compile(
        r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?
        (?P<t>t(?:\s*\^\s*(?P<exp>\(?[+-]?\d+\)?))?)?\s*""",
        re.VERBOSE,
    )

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse sums of terms ``coef*t^exp`` (``coef`` an integer or ``a/b``)."""
        s = text.strip()
        if s in ("", "0"):
            return cls()
        pos, out, first = 0, {}, True
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos or not (m.group("coef") or m.group("t")):
                raise DomainError(f"cannot parse Laurent polynomial {text!r} at {pos}")
            if not first and not m.group("sign"):
                raise DomainError(f"missing sign between terms in {text!r}")
            if m.group("star") and not m.group("t"):
                raise DomainError(f"dangling '*' in {text!r}")
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
            if m.group("sign") == "-":
                coef = -coef
            if m.group("t"):
                exp = int(m.group("exp").strip("()")) if m.group("exp") else 1
            else:
                exp = 0
            out[exp] = out.get(exp, 0) + coef
            pos, first = m.end(), False
        return cls(out)


T = LaurentPoly.monomial(1)
_ZERO = LaurentPoly()
_ONE = LaurentPoly.const(1)


class LaurentMatrix:
    """An ``n x n`` matrix with LaurentPoly entries (immutable by convention)."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence[object]]):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DomainError("matrix must be square")
        self.n = n
        self.rows = tuple(tuple(_as_poly(x) for x in r) for r in rows)

    # -- constructors --------------------------------------------------

    @classmethod
    def zeros(cls, n: int) -> "LaurentMatrix":
        return cls([[_ZERO] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_rational(cls, rows: Sequence[Sequence[object]]) -> "LaurentMatrix":
        return cls([[LaurentPoly.const(x) for x in r] for r in rows])

    @classmethod
    def from_entries(cls, n: int, entries: Iterable[tuple[int, int, object]]) -> "LaurentMatrix":
        """Build from ``(row, col, value)`` with 1-based indices; repeated positions add."""
        grid = [[_ZERO] * n for _ in range(n)]
        for i, j, v in entries:
            grid[i - 1][j - 1] = grid[i - 1][j - 1] + _as_poly(v)
        return cls(grid)

    # -- access ----------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, LaurentMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def nonzero(self) -> list[tuple[int, int, LaurentPoly]]:
        """Nonzero entries as ``(row, col, value)``, 0-based."""
        return [(i, j, x) for i, r in enumerate(self.rows) for j, x in enumerate(r) if x]

    def term_count(self) -> int:
        return sum(len(x._terms) for r in self.rows for x in r)

    def valuation(self) -> float | int:
        return min((x.valuation() for r in self.rows for x in r), default=float("inf"))

    def degree(self) -> float | int:
        return max((x.degree() for r in self.rows for x in r), default=float("-inf"))

    def coefficient_matrix(self, exp: int) -> list[list[Fraction]]:
        return [[x.coeff(exp) for x in r] for r in self.rows]

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        _same_size(self, other)
        return LaurentMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        _same_size(self, other)
        return LaurentMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "LaurentMatrix":
        return LaurentMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "LaurentMatrix":
        c = _as_poly(c)
        return LaurentMatrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        _same_size(self, other)
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            support = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for j in range(n):
                acc = _ZERO
                col = cols[j]
                for k, a in support:
                    b = col[k]
                    if b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix(out)

    __mul__ = __matmul__

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix(list(zip(*self.rows)))

    def _triangularize(self, track_inverse: bool):
        """Euclidean row reduction to upper-triangular form over Q[t, t^-1]."""
        n = self.n
        a = [list(r) for r in self.rows]
        inv = [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)] if track_inverse else None
        sign = 1
        for col in range(n):
            while True:
                live = [r for r in range(col, n) if a[r][col]]
                if not live:
                    return None, None, 0
                piv = min(live, key=lambda r: (a[r][col].span(), r))
                if piv != col:
                    a[col], a[piv] = a[piv], a[col]
                    if inv is not None:
                        inv[col], inv[piv] = inv[piv], inv[col]
                    sign = -sign
                others = [r for r in live if r != piv]
                if piv != col and col in others:
                    others = [piv if r == col else r for r in others]
                if not others:
                    break
                for r in others:
                    q, _ = a[r][col].divmod(a[col][col])
                    if q:
                        a[r] = [x - q * y for x, y in zip(a[r], a[col])]
                        if inv is not None:
                            inv[r] = [x - q * y for x, y in zip(inv[r], inv[col])]
        return a, inv, sign

    def det(self) -> LaurentPoly:
        a, _, sign = self._triangularize(track_inverse=False)
        if a is None:
            return LaurentPoly()
        out = LaurentPoly.const(sign)
        for i in range(self.n):
            out = out * a[i][i]
        return out

    def inverse(self) -> "LaurentMatrix":
        """Inverse over Q[t, t^-1]; requires a monomial determinant."""
        a, inv, _ = self._triangularize(track_inverse=True)
        if a is None:
            raise SingularMatrixError("matrix is singular")
        n = self.n
        for i in range(n):
            if not a[i][i].is_monomial():
                raise SingularMatrixError("determinant is not a unit of Q[t, t^-1]")
        for i in reversed(range(n)):
            u = a[i][i].unit_inverse()
            a[i] = [u * x for x in a[i]]
            inv[i] = [u * x for x in inv[i]]
            for r in range(i):
                c = a[r][i]
                if c:
                    a[r] = [x - c * y for x, y in zip(a[r], a[i])]
                    inv[r] = [x - c * y for x, y in zip(inv[r], inv[i])]
        return LaurentMatrix(inv)

    # -- text and serialization ----------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "entries": [[x.to_triples() for x in r] for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "LaurentMatrix":
        n = int(data["n"])
        rows = [[LaurentPoly.from_triples(x) for x in r] for r in data["entries"]]
        if len(rows) != n:
            raise DomainError("entries do not match n")
        return cls(rows)

    @classmethod
    def from_json(cls, text: str) -> "LaurentMatrix":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        return "\n".join(" ; ".join(str(x) for x in r) for r in self.rows)

    @classmethod
    def parse(cls, text: str) -> "LaurentMatrix":
        """One row per line, entries separated by ``;``, each in the polynomial grammar."""
        lines = [ln for ln in text.strip().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        return cls([[LaurentPoly.parse(x) for x in ln.split(";")] for ln in lines])

    def __str__(self) -> str:
        return self.to_text()

    __repr__ = __str__


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


def _same_size(a: LaurentMatrix, b: LaurentMatrix):
    if a.n != b.n:
        raise DomainError(f"size mismatch: {a.n} vs {b.n}")


# -- monomial matrices and affine permutations -------------------------------


def apm(m: LaurentMatrix) -> AffinePermutation:
    """Drop the scalar coefficients of a monomial matrix and keep the t-orders."""
    n = m.n
    sigma = [0] * n
    exps = [0] * n
    nz = m.nonzero()
    if len(nz) != n:
        raise DomainError("matrix is not a monomial permutation matrix")
    rows_seen = set()
    for i, j, x in nz:
        if not x.is_monomial() or sigma[j] or i in rows_seen:
            raise DomainError("matrix is not a monomial permutation matrix")
        rows_seen.add(i)
        sigma[j] = i + 1
        exps[j] = x.valuation()
    if sum(exps) != 0:
        raise DomainError(f"t-orders sum to {sum(exps)}, not 0")
    return AffinePermutation(n, tuple(sigma), tuple(exps))


def _perm_sign(sigma: Sequence[int]) -> int:
    seen, sign = set(), 1
    for start in range(1, len(sigma) + 1):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = sigma[x - 1]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def lift(w: AffinePermutation, signed: bool = False, coefs: Sequence[object] | None = None) -> LaurentMatrix:
    """A monomial-matrix lift of ``w``.

    ``signed=True`` negates the first column when needed so the lift has
    determinant 1; ``coefs`` supplies arbitrary nonzero scalars per column.
    """
    c = [Fraction(1)] * w.n if coefs is None else [Fraction(x) for x in coefs]
    if any(x == 0 for x in c):
        raise DomainError("lift coefficients must be nonzero")
    if signed:
        prod = Fraction(_perm_sign(w.sigma))
        for x in c:
            prod *= x
        c[0] /= prod
    return LaurentMatrix.from_entries(
        w.n, ((s, i, LaurentPoly.monomial(e, ci)) for i, (s, e, ci) in enumerate(zip(w.sigma, w.exps, c), 1))
    )


# -- subgroup membership ----------------------------------------------------


def _blocks_from_J(n: int, J: Iterable[int]) -> list[int]:
    J = set(J)
    if any(not 1 <= j < n for j in J):
        raise DomainError("parahoric membership needs J inside {1, ..., n-1}")
    block, out = 0, []
    for i in range(1, n + 1):
        out.append(block)
        if i not in J:
            block += 1
    return out


def membership(m: LaurentMatrix, subgroup: str, J: Iterable[int] | None = None) -> bool:
    """Test membership in ``"G0"``, ``"iwahori"``, ``"parahoric"`` (needs ``J``) or ``"opposite_iwahori"``.

    Groups are taken inside GL_n(Q((t))): a matrix lies in G0 when its entries
    have no poles and its determinant is a unit power series, which for such
    entries means ``det(M(0)) != 0``.
    """
    n = m.n
    subgroup = subgroup.lower()
    if subgroup == "opposite_iwahori":
        flipped = LaurentMatrix([[LaurentPoly({-e: c for e, c in x.items()}) for x in r] for r in m.rows])
        return membership(flipped.transpose(), "iwahori")
    if m.valuation() < 0:
        return False
    c0 = m.coefficient_matrix(0)
    from .linalg import rational_det

    if rational_det(c0) == 0:
        return False
    if subgroup == "g0":
        return True
    if subgroup == "iwahori":
        blocks = list(range(n))
    elif subgroup == "parahoric":
        if J is None:
            raise DomainError("parahoric membership needs J")
        blocks = _blocks_from_J(n, J)
    else:
        raise DomainError(f"unknown subgroup {subgroup!r}")
    return all(c0[i][j] == 0 for i in range(n) for j in range(n) if blocks[i] > blocks[j])


# -- Iwahori-Bruhat cells --------------------------------------------------


def _primitive_lines(a: list[list[LaurentPoly]]) -> None:
    """Scale each row, then each column, to integer coefficients with gcd 1, in place.

    Constant diagonal matrices lie in the Iwahori subgroup, so the cell is unchanged.
    """
    n = len(a)

    def factor(polys):
        coefs = [c for p in polys for _, c in p.items()]
        if not coefs:
            return Fraction(1)
        den = math.lcm(*(c.denominator for c in coefs))
        num = math.gcd(*(c.numerator for c in coefs))
        return Fraction(den, num)

    for i in range(n):
        f = factor(a[i])
        if f != 1:
            a[i] = [x * f for x in a[i]]
    for j in range(n):
        f = factor([a[i][j] for i in range(n)])
        if f != 1:
            for i in range(n):
                a[i][j] = a[i][j] * f


def extract_cell(m: LaurentMatrix, budget: int | None = None) -> AffinePermutation:
    """The unique ``w`` with ``m in B w B`` (``B`` the Iwahori subgroup).

    Think of ``m`` as a periodic Z x Z matrix, basis vector ``e_i t^k`` at
    index ``i - n k``; the Iwahori subgroup is then upper triangular and monomial
    matrices act by their windows.  Pivoting at a nonzero entry with nothing
    weakly south-west of it lets its row and column be cleared by Iwahori
    operations alone.  In Laurent terms that pivot minimises
    ``n * val(m_ij) + j - i`` over the remaining entries.  Remaining entries are
    carried as Bareiss-scaled Schur complements (minors of ``m``), so every
    division is exact and the true valuation is ``val(entry) - val(last pivot)``.
    """
    n = m.n
    a = [list(r) for r in m.rows]
    if any(not any(r) for r in a) or any(not any(c) for c in zip(*a)):
        raise SingularMatrixError("matrix has a zero row or column")
    _primitive_lines(a)
    spread = max(1, int(m.degree() - m.valuation()) + 1) if m.nonzero() else 1
    budget = budget if budget is not None else n * n * (spread + 1)
    rows, cols = list(range(n)), list(range(n))
    prev = _ONE
    prev_val = 0
    sigma, exps = [0] * n, [0] * n
    steps = 0
    for _ in range(n):
        best = None
        for j in cols:
            for i in rows:
                x = a[i][j]
                if x:
                    v = x.valuation() - prev_val
                    key = (n * v + j - i, j)
                    if best is None or key < best[0]:
                        best = (key, i, j, v)
        if best is None:
            raise SingularMatrixError("matrix is singular")
        # one row operation per remaining row, one column operation per remaining column
        steps += len(rows) + len(cols) - 1
        if steps > budget:
            raise EliminationBudgetError(f"cell extraction exceeded {budget} steps")
        _, p, q, v = best
        sigma[q], exps[q] = p + 1, v
        piv = a[p][q]
        rows.remove(p)
        cols.remove(q)
        for i in rows:
            aiq = a[i][q]
            for j in cols:
                num = piv * a[i][j]
                if aiq and a[p][j]:
                    num = num - aiq * a[p][j]
                a[i][j] = num.exact_div(prev) if num else num
        prev, prev_val = piv, piv.valuation()
    # the last Bareiss pivot is det(m) up to sign
    if len(prev.items()) != 1:
        raise DomainError(f"det = {prev} is not a unit monomial")
    if sum(exps) != 0:
        raise DomainError(f"det has t-order {sum(exps)}; the cell is not in the affine Weyl group")
    return AffinePermutation(n, tuple(sigma), tuple(exps))


def extract_cell_mod(m: LaurentMatrix, J: Iterable[int]) -> AffinePermutation:
    """Minimal representative of the cell of ``m`` modulo the parahoric of ``J``."""
    return min_coset_rep(extract_cell(m), J, "right")
