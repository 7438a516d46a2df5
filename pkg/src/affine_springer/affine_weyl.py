"""The affine Weyl group of type A_{n-1}^(1) as affine permutations.

An element is stored as its affine permutation matrix ``sum_i t^{c_i} E_{sigma(i), i}``
(``sigma`` a permutation of 1..n, ``sum c_i = 0``).  Matrix multiplication is
composition of the bijections ``Z -> Z`` given by the window

    w(i) = sigma(i) - n * c_i,     w(i + n) = w(i) + n.

With this convention the matrix of ``s_0`` (``t^-1`` at (1, n), ``t`` at (n, 1))
has window ``[0, 2, ..., n-1, n+1]`` and length one.

Real affine roots ``k*delta + (a, b)`` are identified with pairs of integers
``(x, y)``, ``x = a``, ``y = b + n*k``; a root is positive iff ``x < y`` and
``w`` acts by ``(x, y) -> (w(x), w(y))``.  For a translation with diagonal
exponents ``e`` this gives ``(a, b) -> (a, b) + (e_a - e_b) delta``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .errors import DomainError

__all__ = [
    "AffinePermutation",
    "AffineRoot",
    "Coroot",
    "identity",
    "simple_reflection",
    "reflection",
    "root_reflection",
    "tau",
    "translation_length",
    "root_value",
    "act_on_root",
    "is_right_descent",
    "is_left_descent",
    "right_descents",
    "left_descents",
    "bruhat_leq",
    "min_coset_rep",
    "reduced_word",
    "from_word",
    "table_case",
    "TableCase",
    "elements_up_to_length",
    "finite_weyl_group",
]


@dataclass(frozen=True)
class AffinePermutation:
    n: int
    sigma: tuple[int, ...]
    exps: tuple[int, ...]

    def __post_init__(self):
        sigma = tuple(int(x) for x in self.sigma)
        exps = tuple(int(x) for x in self.exps)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "exps", exps)
        if len(sigma) != self.n or len(exps) != self.n:
            raise DomainError("sigma and exps must have length n")
        if sorted(sigma) != list(range(1, self.n + 1)):
            raise DomainError(f"sigma is not a permutation of 1..{self.n}: {sigma}")
        if sum(exps) != 0:
            raise DomainError(f"exponents must sum to zero: {exps}")

    # -- views ---------------------------------------------------------

    @property
    def window(self) -> tuple[int, ...]:
        n = self.n
        return tuple(s - n * c for s, c in zip(self.sigma, self.exps))

    @classmethod
    def from_window(cls, window: Sequence[int]) -> "AffinePermutation":
        n = len(window)
        if n == 0:
            raise DomainError("empty window")
        sigma, exps = [], []
        for x in window:
            q, r = divmod(x - 1, n)
            sigma.append(r + 1)
            exps.append(-q)
        if sum(window) != n * (n + 1) // 2:
            raise DomainError(f"window entries must sum to n(n+1)/2: {list(window)}")
        return cls(n, tuple(sigma), tuple(exps))

    def __call__(self, x: int) -> int:
        q, r = divmod(x - 1, self.n)
        return self.window[r] + q * self.n

    def entries(self) -> list[tuple[int, int, int]]:
        """Nonzero entries of the affine permutation matrix as ``(row, col, exponent)``."""
        return sorted((s, i, c) for i, (s, c) in enumerate(zip(self.sigma, self.exps), 1))

    @property
    def is_finite(self) -> bool:
        """True for elements of the finite Weyl group (all exponents zero)."""
        return not any(self.exps)

    # -- group structure -----------------------------------------------

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        return multiply(self, other)

    def inverse(self) -> "AffinePermutation":
        n = self.n
        inv = [0] * n
        for i, x in enumerate(self.window, start=1):
            q, r = divmod(x - 1, n)
            inv[r] = i - q * n
        return AffinePermutation.from_window(inv)

    def length(self) -> int:
        return _length(self.window)

    # -- serialization -------------------------------------------------

    def window_str(self) -> str:
        return "[" + ",".join(map(str, self.window)) + "]"

    def matrix_str(self) -> str:
        return " ".join(f"t^{c}@({r},{col})" for r, col, c in self.entries())

    def to_dict(self) -> dict:
        return {"n": self.n, "sigma": list(self.sigma), "exps": list(self.exps)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "AffinePermutation":
        return cls(int(data["n"]), tuple(data["sigma"]), tuple(data["exps"]))

    @classmethod
    def from_json(cls, text: str) -> "AffinePermutation":
        return cls.from_dict(json.loads(text))

    @classmethod
    def parse_window(cls, text: str) -> "AffinePermutation":
        body = text.strip().lstrip("[").rstrip("]")
        return cls.from_window([int(x) for x in body.split(",") if x.strip()])

    def __str__(self) -> str:
        return self.window_str()


def multiply(u: AffinePermutation, v: AffinePermutation) -> AffinePermutation:
    """Matrix product ``u v``, i.e. the composition ``u o v``."""
    if u.n != v.n:
        raise DomainError(f"rank mismatch: {u.n} vs {v.n}")
    sigma = tuple(u.sigma[j - 1] for j in v.sigma)
    exps = tuple(cv + u.exps[j - 1] for j, cv in zip(v.sigma, v.exps))
    return AffinePermutation(u.n, sigma, exps)


def identity(n: int) -> AffinePermutation:
    return AffinePermutation(n, tuple(range(1, n + 1)), (0,) * n)


def simple_reflection(n: int, i: int) -> AffinePermutation:
    if n < 2 or not 0 <= i < n:
        raise DomainError(f"simple reflection s_{i} does not exist for n={n}")
    if i == 0:
        window = [0] + list(range(2, n)) + [n + 1]
    else:
        window = list(range(1, n + 1))
        window[i - 1], window[i] = i + 1, i
    return AffinePermutation.from_window(window)


def reflection(n: int, a: int, b: int) -> AffinePermutation:
    """The finite reflection ``s_(a,b)`` (transposition of ``a`` and ``b``)."""
    if not (1 <= a <= n and 1 <= b <= n and a != b):
        raise DomainError(f"({a},{b}) is not a root for n={n}")
    window = list(range(1, n + 1))
    window[a - 1], window[b - 1] = b, a
    return AffinePermutation.from_window(window)


def _length(window: Sequence[int]) -> int:
    n = len(window)
    return sum(abs((window[j] - window[i]) // n) for i, j in combinations(range(n), 2))


# -- roots and coroots -------------------------------------------------------


@dataclass(frozen=True)
class AffineRoot:
    """``level * delta + (a, b)``; ``real_part`` is None for imaginary roots."""

    n: int
    level: int
    real_part: tuple[int, int] | None = None

    def __post_init__(self):
        if self.real_part is None:
            if self.level == 0:
                raise DomainError("0 * delta is not a root")
        else:
            a, b = self.real_part
            if not (1 <= a <= self.n and 1 <= b <= self.n and a != b):
                raise DomainError(f"({a},{b}) is not a finite root for n={self.n}")

    @property
    def is_real(self) -> bool:
        return self.real_part is not None

    @property
    def is_positive(self) -> bool:
        if self.level != 0 or self.real_part is None:
            return self.level > 0
        a, b = self.real_part
        return a < b

    def as_pair(self) -> tuple[int, int]:
        if self.real_part is None:
            raise DomainError("imaginary roots have no integer-pair form")
        a, b = self.real_part
        return a, b + self.n * self.level

    @classmethod
    def from_pair(cls, n: int, x: int, y: int) -> "AffineRoot":
        qa, ra = divmod(x - 1, n)
        qb, rb = divmod(y - 1, n)
        return cls(n, qb - qa, (ra + 1, rb + 1))

    def __neg__(self) -> "AffineRoot":
        if self.real_part is None:
            return AffineRoot(self.n, -self.level)
        a, b = self.real_part
        return AffineRoot(self.n, -self.level, (b, a))

    def __str__(self) -> str:
        if self.real_part is None:
            return f"{self.level}d"
        return f"({self.real_part[0]},{self.real_part[1]})" + (f"{self.level:+d}d" if self.level else "")


@dataclass(frozen=True)
class Coroot:
    """An element ``(z_1, ..., z_n)`` of the coroot lattice, ``sum z_i = 0``."""

    z: tuple[int, ...]

    def __post_init__(self):
        z = tuple(int(x) for x in self.z)
        object.__setattr__(self, "z", z)
        if sum(z) != 0:
            raise DomainError(f"coroot entries must sum to zero: {z}")

    @property
    def n(self) -> int:
        return len(self.z)

    def __add__(self, other: "Coroot") -> "Coroot":
        return Coroot(tuple(a + b for a, b in zip(self.z, other.z)))


def tau(q: Coroot | Sequence[int]) -> AffinePermutation:
    """Translation by ``q``: the diagonal matrix ``sum t^{-q_i} E_ii``.

    The sign makes the lift of a simple coroot ``E_ii - E_{i+1,i+1}`` equal to
    ``diag(..., t^-1, t, ...)`` and ``alpha(q) = <alpha, q>``.
    """
    z = q.z if isinstance(q, Coroot) else Coroot(tuple(q)).z
    n = len(z)
    return AffinePermutation(n, tuple(range(1, n + 1)), tuple(-x for x in z))


def root_value(q: Coroot | Sequence[int], a: int, b: int) -> int:
    """``alpha(q)`` for ``alpha = (a, b)``: ``ord(t_b) - ord(t_a)`` read off ``tau(q)``."""
    e = tau(q).exps
    return e[b - 1] - e[a - 1]


def translation_length(q: Coroot | Sequence[int]) -> int:
    """``sum |alpha(q)|`` over the positive finite roots."""
    z = q.z if isinstance(q, Coroot) else Coroot(tuple(q)).z
    n = len(z)
    return sum(abs(root_value(z, a, b)) for a, b in combinations(range(1, n + 1), 2))


def act_on_root(w: AffinePermutation, beta: AffineRoot) -> AffineRoot:
    if w.n != beta.n:
        raise DomainError("rank mismatch")
    if not beta.is_real:
        return beta
    x, y = beta.as_pair()
    return AffineRoot.from_pair(w.n, w(x), w(y))


def root_reflection(beta: AffineRoot) -> AffinePermutation:
    """The reflection in a real root, any level: swap ``x`` and ``y`` periodically."""
    x, y = beta.as_pair()
    n = beta.n
    window = list(range(1, n + 1))
    for pos, target in ((x, y), (y, x)):
        q, r = divmod(pos - 1, n)
        window[r] = target - q * n
    return AffinePermutation.from_window(window)


def _check_positive_real(alpha: AffineRoot):
    if not alpha.is_real or not alpha.is_positive:
        raise DomainError(f"{alpha} is not a positive real root")


def is_right_descent(w: AffinePermutation, alpha: AffineRoot) -> bool:
    """``w s_alpha < w``, decided by the sign of ``w(alpha)``."""
    _check_positive_real(alpha)
    return not act_on_root(w, alpha).is_positive


def is_left_descent(w: AffinePermutation, alpha: AffineRoot) -> bool:
    _check_positive_real(alpha)
    return not act_on_root(w.inverse(), alpha).is_positive


def _simple_pair(n: int, i: int) -> tuple[int, int]:
    return (n, n + 1) if i == 0 else (i, i + 1)


def right_descents(w: AffinePermutation) -> list[int]:
    return [i for i in range(w.n) if w(_simple_pair(w.n, i)[0]) > w(_simple_pair(w.n, i)[1])]


def left_descents(w: AffinePermutation) -> list[int]:
    return right_descents(w.inverse())


# -- window-level fast paths used by the order computations ----------------


def _w_at(window: tuple[int, ...], x: int) -> int:
    n = len(window)
    q, r = divmod(x - 1, n)
    return window[r] + q * n


def _right_swap(window: tuple[int, ...], i: int) -> tuple[int, ...]:
    n = len(window)
    w = list(window)
    if i == 0:
        w[0], w[n - 1] = window[n - 1] - n, window[0] + n
    else:
        w[i - 1], w[i] = window[i], window[i - 1]
    return tuple(w)


def _left_swap(window: tuple[int, ...], i: int) -> tuple[int, ...]:
    n = len(window)
    out = []
    for x in window:
        q, r = divmod(x - 1, n)
        v = r + 1
        if i == 0:
            if v == 1:
                x = x - 1  # value class 1 -> class n of the previous block
            elif v == n:
                x = x + 1
        elif v == i:
            x += 1
        elif v == i + 1:
            x -= 1
        out.append(x)
    return tuple(out)


def _has_right_descent(window, i) -> bool:
    a, b = _simple_pair(len(window), i)
    return _w_at(window, a) > _w_at(window, b)


def _left_descent_of(window) -> int | None:
    n = len(window)
    pos = {}
    for idx, x in enumerate(window, start=1):
        q, r = divmod(x - 1, n)
        pos[r + 1] = idx - q * n  # w^{-1}(r + 1)
    for i in range(n):
        if i == 0:
            if pos[n] - n > pos[1]:
                return 0
        elif pos[i] > pos[i + 1]:
            return i
    return None


@lru_cache(maxsize=1 << 16)
def _bruhat_leq_windows(v: tuple[int, ...], w: tuple[int, ...]) -> bool:
    lv, lw = _length(v), _length(w)
    if lv > lw:
        return False
    if lw == 0:
        return v == w
    i = _left_descent_of(w)
    sw = _left_swap(w, i)
    sv = _left_swap(v, i)
    smaller = sv if _length(sv) < lv else v
    return _bruhat_leq_windows(smaller, sw)


def bruhat_leq(v: AffinePermutation, w: AffinePermutation) -> bool:
    """Bruhat order via the lifting property.

    For a left descent ``s`` of ``w``: ``v <= w`` iff ``min(v, sv) <= sw``.
    """
    if v.n != w.n:
        raise DomainError(f"rank mismatch: {v.n} vs {w.n}")
    return _bruhat_leq_windows(v.window, w.window)


def min_coset_rep(w: AffinePermutation, J: Iterable[int], side: str = "right") -> AffinePermutation:
    """Minimal-length element of ``w W_J`` (``side="right"``) or ``W_J w`` (``"left"``)."""
    J = sorted(set(J))
    if any(not 0 <= j < w.n for j in J):
        raise DomainError(f"J must be a subset of 0..{w.n - 1}: {J}")
    if len(J) == w.n:
        raise DomainError("J generates an infinite parabolic subgroup")
    if side == "left":
        return min_coset_rep(w.inverse(), J, "right").inverse()
    if side != "right":
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")
    window = w.window
    changed = True
    while changed:
        changed = False
        for j in J:
            if _has_right_descent(window, j):
                window = _right_swap(window, j)
                changed = True
    return AffinePermutation.from_window(window)


def reduced_word(w: AffinePermutation) -> list[int]:
    """A reduced word ``[i_1, ..., i_k]`` with ``w = s_{i_1} ... s_{i_k}``, by peeling right descents."""
    word = []
    window = w.window
    while True:
        for i in range(w.n):
            if _has_right_descent(window, i):
                window = _right_swap(window, i)
                word.append(i)
                break
        else:
            break
    return word[::-1]


def from_word(n: int, word: Sequence[int]) -> AffinePermutation:
    out = identity(n)
    for i in word:
        out = out * simple_reflection(n, i)
    return out


# -- the two-case analysis for w = sigma tau_q ------------------------------


@dataclass(frozen=True)
class TableCase:
    case: int
    minimal: AffinePermutation
    s_left: AffinePermutation
    s_right: AffinePermutation
    chains: tuple[tuple[AffinePermutation, AffinePermutation], ...]
    verified: bool


def table_case(w: AffinePermutation, a: int, b: int) -> TableCase:
    """Compare ``w``, ``s_l w``, ``w s_r`` (and ``s_l w s_r``) for ``s_r = s_(a,b)``.

    ``w`` is read as ``sigma * tau`` with ``tau = diag(t^{exps})``, so ``ord(t_a)``
    is ``w.exps[a - 1]`` and ``s_l = s_(sigma(a), sigma(b))``.

    Equal orders: ``s_l w = w s_r`` and the smaller of ``w, s_l w`` is ``w`` iff
    ``sigma(a) < sigma(b)``.  Different orders, ``k = ord(t_a) - ord(t_b)``:
    ``w(a, b) = (sigma(a), sigma(b)) + k delta`` and
    ``w^-1(sigma(a), sigma(b)) = (a, b) - k delta``, so the unique minimum of the
    four elements depends on the sign of ``k`` and on whether
    ``sigma(a) < sigma(b)``.  ``chains`` lists the strict relations ``x < y``
    asserted; ``verified`` records whether each is confirmed by a length
    difference (each pair differs by a reflection, so lengths decide Bruhat
    comparison).
    """
    n = w.n
    if not 1 <= a < b <= n:
        raise DomainError(f"need 1 <= a < b <= n, got ({a},{b})")
    s_r = reflection(n, a, b)
    s_l = reflection(n, w.sigma[a - 1], w.sigma[b - 1])
    ord_a, ord_b = w.exps[a - 1], w.exps[b - 1]
    ascending = w.sigma[a - 1] < w.sigma[b - 1]
    lw = s_l * w
    if ord_a == ord_b:
        u = w if ascending else lw
        other = lw if u == w else w
        chains = ((u, other),)
        verified = (lw == w * s_r) and u.length() < other.length()
        return TableCase(1, u, s_l, s_r, chains, verified)
    if ord_a > ord_b:
        u = lw if ascending else w
    else:
        u = w * s_r if ascending else lw * s_r
    top = s_l * u * s_r
    chains = ((u, s_l * u), (s_l * u, top), (u, u * s_r), (u * s_r, top))
    verified = lw != w * s_r and all(x.length() < y.length() for x, y in chains)
    return TableCase(2, u, s_l, s_r, chains, verified)


# -- enumeration -------------------------------------------------------------


def elements_up_to_length(n: int, max_length: int) -> list[AffinePermutation]:
    """All elements of length at most ``max_length``, sorted by length then window."""
    seen = {identity(n).window: 0}
    frontier = [identity(n).window]
    for ell in range(1, max_length + 1):
        nxt = []
        for window in frontier:
            for i in range(n):
                if not _has_right_descent(window, i):
                    cand = _right_swap(window, i)
                    if cand not in seen:
                        seen[cand] = ell
                        nxt.append(cand)
        frontier = nxt
    return [AffinePermutation.from_window(x) for x in sorted(seen, key=lambda x: (seen[x], x))]


def finite_weyl_group(n: int) -> Iterator[AffinePermutation]:
    for perm in permutations(range(1, n + 1)):
        yield AffinePermutation(n, perm, (0,) * n)
