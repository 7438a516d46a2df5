"""Named matrices, group elements and maps attached to a parabolic tableau.

Everything is built from :class:`ParabolicTableau` data: the Richardson
element ``Z``, the Iwahori elements ``b`` and ``c`` that bring ``1 - t^-1 Z`` to
a monomial matrix, the affine permutations varpi, kappa, sigma and tau_q, the
finite factors ``w_g`` and ``w_p``, and the maps phi_P, psi and theta.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .affine_weyl import (
    AffinePermutation,
    Coroot,
    bruhat_leq,
    min_coset_rep,
    right_descents,
    simple_reflection,
    tau,
    translation_length,
)
from .errors import DomainError
from .laurent import LaurentMatrix, LaurentPoly, apm, extract_cell_mod, membership
from .linalg import rational_det, rational_inverse, rational_matmul, rational_power_ranks, rational_rank
from .partitions import Partition, conjugate, dominance_leq
from .tableau import ParabolicDescriptor, ParabolicTableau, dim_g_mod_p

__all__ = [
    "build_Z",
    "jordan_type",
    "centralizer_dim",
    "build_bc",
    "build_varpi_lift",
    "build_varpi",
    "build_kappa",
    "build_sigma",
    "build_q",
    "build_tau_q",
    "q_of_partition",
    "build_factorization",
    "kappa_length_formula",
    "CotangentPoint",
    "in_nilradical",
    "in_nilradical_dynamic",
    "phi_P",
    "psi",
    "springer_theta",
    "diagram_commutes",
    "verdicts",
    "report",
    "random_sl",
    "random_nilradical",
    "one_minus_tinv",
]

Rational = list[list[Fraction]]
T_INV = LaurentPoly.monomial(-1)


def _zeros(n: int) -> Rational:
    return [[Fraction(0)] * n for _ in range(n)]


def _from_entries(n: int, entries) -> AffinePermutation:
    """Affine permutation from ``(row, col, exp)`` triples, one per column."""
    sigma, exps = [0] * n, [0] * n
    for r, c, e in entries:
        if sigma[c - 1]:
            raise DomainError(f"column {c} used twice")
        sigma[c - 1], exps[c - 1] = r, e
    return AffinePermutation(n, tuple(sigma), tuple(exps))


def one_minus_tinv(y: Sequence[Sequence[object]]) -> LaurentMatrix:
    """The loop-group element ``1 - t^-1 Y``."""
    n = len(y)
    return LaurentMatrix(
        [[LaurentPoly({0: int(i == j), -1: -Fraction(y[i][j])}) for j in range(n)] for i in range(n)]
    )


# -- nilpotents ----------------------------------------------------------


def build_Z(tab: ParabolicTableau) -> Rational:
    z = _zeros(tab.n)
    for i in range(1, tab.s + 1):
        for j in range(1, tab.nu[i - 1]):
            z[tab.f(i, j) - 1][tab.f(i, j + 1) - 1] = Fraction(1)
    return z


def jordan_type(N: Sequence[Sequence[object]]) -> Partition:
    """Jordan type read off the rank sequence of the powers of ``N``."""
    n = len(N)
    ranks = rational_power_ranks(N, n + 1)
    if ranks[-1] != 0:
        raise DomainError("matrix is not nilpotent")
    # blocks of size >= k number rank(N^{k-1}) - rank(N^k)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    return conjugate(Partition(at_least))


def centralizer_dim(Z: Sequence[Sequence[object]]) -> int:
    """Dimension of ``{X : XZ = ZX}``, as the nullity of ``X -> XZ - ZX``."""
    n = len(Z)
    # row index (a, b) of the equation for entry (a, b), column index (i, j) of X_ij
    rows = [[Fraction(0)] * (n * n) for _ in range(n * n)]
    for a in range(n):
        for b in range(n):
            eq = rows[a * n + b]
            for k in range(n):
                if Z[k][b]:
                    eq[a * n + k] += Fraction(Z[k][b])
                if Z[a][k]:
                    eq[k * n + b] -= Fraction(Z[a][k])
    return n * n - rational_rank(rows)


# -- the lift of varpi ------------------------------------------------------


def build_bc(tab: ParabolicTableau) -> tuple[LaurentMatrix, LaurentMatrix]:
    """Iwahori elements ``b, c`` with ``b (1 - t^-1 Z) c`` a monomial matrix.

    Per column ``i``: ``b_i = sum_{k >= j} t^{k-j} F_{k,j}`` and
    ``c_i = sum_j F_{j,j} + sum_{j >= 2} t^{j-1} F_{j,1}``; the ``t^{j-1} F_{j,1}``
    terms cancel the unwanted ``t^{j-2} F_{j-1,1}`` left by ``b_i (1 - t^-1 Z_i)``.
    """
    n, f = tab.n, tab.f
    b_ent, c_ent = [], []
    for i in range(1, tab.s + 1):
        h = tab.nu[i - 1]
        for j in range(1, h + 1):
            for k in range(j, h + 1):
                b_ent.append((f(i, k), f(i, j), LaurentPoly.monomial(k - j)))
            c_ent.append((f(i, j), f(i, j), LaurentPoly.const(1)))
        for j in range(2, h + 1):
            c_ent.append((f(i, j), f(i, 1), LaurentPoly.monomial(j - 1)))
    return LaurentMatrix.from_entries(n, b_ent), LaurentMatrix.from_entries(n, c_ent)


def build_varpi_lift(tab: ParabolicTableau) -> LaurentMatrix:
    f, ent = tab.f, []
    for i in range(1, tab.s + 1):
        h = tab.nu[i - 1]
        ent.append((f(i, h), f(i, 1), LaurentPoly.monomial(h - 1)))
        for j in range(2, h + 1):
            ent.append((f(i, j - 1), f(i, j), LaurentPoly.monomial(-1, -1)))
    return LaurentMatrix.from_entries(tab.n, ent)


def build_varpi(tab: ParabolicTableau) -> AffinePermutation:
    return apm(build_varpi_lift(tab))


# -- kappa and its factorizations ---------------------------------------------


def build_kappa(tab: ParabolicTableau) -> AffinePermutation:
    s = tab.s
    ent = [(i, tab.l_seq[i - 1], tab.nu[i - 1] - 1) for i in range(1, s + 1)]
    ent += [(i + s, tab.m_seq[i - 1], -1) for i in range(1, tab.n - s + 1)]
    return _from_entries(tab.n, ent)


def build_sigma(tab: ParabolicTableau) -> AffinePermutation:
    """The finite permutation with ``kappa = tau_q * sigma``."""
    s = tab.s
    ent = [(i, tab.l_seq[i - 1], 0) for i in range(1, s + 1)]
    ent += [(i + s, tab.m_seq[i - 1], 0) for i in range(1, tab.n - s + 1)]
    return _from_entries(tab.n, ent)


def q_of_partition(nu: Partition, n: int | None = None) -> Coroot:
    """``q_i = 1 - nu_i`` for ``i <= len(nu)`` and ``1`` beyond."""
    n = nu.n if n is None else n
    if nu.n != n:
        raise DomainError(f"partition of {nu.n} used with n={n}")
    return Coroot(tuple(1 - nu[i] if i < len(nu) else 1 for i in range(n)))


def build_q(tab: ParabolicTableau) -> Coroot:
    return q_of_partition(tab.nu, tab.n)


def build_tau_q(tab: ParabolicTableau) -> AffinePermutation:
    return tau(build_q(tab))


def build_factorization(tab: ParabolicTableau) -> tuple[AffinePermutation, AffinePermutation]:
    """Finite ``w_g`` and row-preserving ``w_p`` with ``varpi = w_g * kappa * w_p``.

    ``w_g`` sends ``f(i, nu_i)`` to ``i`` and ``iota(t(i))`` to ``i + s``; ``w_p``
    sends ``l(i)`` to ``f(i, 1)`` and ``m(i)`` to ``t(i)``.
    """
    n, s, f = tab.n, tab.s, tab.f
    wg = [(f(i, tab.nu[i - 1]), i, 0) for i in range(1, s + 1)]
    wg += [(tab.iota[tab.t_seq[i - 1]], i + s, 0) for i in range(1, n - s + 1)]
    wp = [(tab.l_seq[i - 1], f(i, 1), 0) for i in range(1, s + 1)]
    wp += [(tab.m_seq[i - 1], tab.t_seq[i - 1], 0) for i in range(1, n - s + 1)]
    return _from_entries(n, wg), _from_entries(n, wp)


def kappa_length_formula(tab: ParabolicTableau) -> int:
    """``2 dim G/P + sum_{k' < k} #Row(k) #Blue(k')``."""
    extra = sum(
        len(tab.rows[k]) * len(tab.blue[kp]) for k in range(tab.r) for kp in range(k)
    )
    return 2 * dim_g_mod_p(tab) + extra


# -- cotangent points and maps ------------------------------------------------


def in_nilradical(Y: Sequence[Sequence[object]], desc: ParabolicDescriptor) -> bool:
    """Block pattern test: nonzero entries only strictly above the diagonal blocks."""
    n = desc.n
    blk = [desc.block_of(x) for x in range(1, n + 1)]
    return all(not Y[a][b] or blk[a] < blk[b] for a in range(n) for b in range(n))


def in_nilradical_dynamic(Y: Sequence[Sequence[object]], desc: ParabolicDescriptor) -> bool:
    """Flag test: ``Y V_i`` lies in ``V_{i-1}`` for the standard flag of ``desc``."""
    n = desc.n
    b = desc.breaks
    for k in range(1, len(b)):
        lower = [[Fraction(int(r == c)) for c in range(b[k - 1])] for r in range(n)]
        image = [[Fraction(Y[r][c]) for c in range(b[k])] for r in range(n)]
        stacked = [lo + im for lo, im in zip(lower, image)]
        if rational_rank(stacked) != rational_rank(lower):
            return False
    return True


@dataclass(frozen=True)
class CotangentPoint:
    """A representative ``(g, Y)`` of a point of ``G x^P u``."""

    g: tuple[tuple[Fraction, ...], ...]
    Y: tuple[tuple[Fraction, ...], ...]
    descriptor: ParabolicDescriptor

    def __post_init__(self):
        g = tuple(tuple(Fraction(x) for x in r) for r in self.g)
        Y = tuple(tuple(Fraction(x) for x in r) for r in self.Y)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "Y", Y)
        n = self.descriptor.n
        if len(g) != n or len(Y) != n:
            raise DomainError("matrix size does not match the descriptor")
        if rational_det(g) != 1:
            raise DomainError("g must have determinant 1")
        if not in_nilradical(Y, self.descriptor):
            raise DomainError("Y is not in the nilradical of the parabolic")


def phi_P(pt: CotangentPoint) -> tuple[LaurentMatrix, AffinePermutation]:
    """``g (1 - t^-1 Y)`` and its cell modulo the parahoric."""
    m = LaurentMatrix.from_rational(pt.g) @ one_minus_tinv(pt.Y)
    return m, extract_cell_mod(m, pt.descriptor.simple_roots)


def psi(N: Sequence[Sequence[object]]) -> tuple[LaurentMatrix, AffinePermutation]:
    """``1 - t^-1 N`` and its cell modulo G_0."""
    jordan_type(N)
    n = len(N)
    m = one_minus_tinv(N)
    return m, extract_cell_mod(m, range(1, n))


def springer_theta(pt: CotangentPoint) -> Rational:
    return rational_matmul(rational_matmul(pt.g, pt.Y), rational_inverse(pt.g))


def diagram_commutes(pt: CotangentPoint) -> bool:
    """``g (1 - t^-1 Y) == (1 - t^-1 g Y g^-1) g`` as Laurent matrices."""
    g = LaurentMatrix.from_rational(pt.g)
    return g @ one_minus_tinv(pt.Y) == one_minus_tinv(springer_theta(pt)) @ g


# -- random inputs --------------------------------------------------------------


def random_sl(n: int, rng: random.Random, bound: int = 2) -> Rational:
    """Small-integer matrix rescaled in its first row to determinant 1."""
    while True:
        g = [[Fraction(rng.randint(-bound, bound)) for _ in range(n)] for _ in range(n)]
        det = rational_det(g)
        if det:
            g[0] = [x / det for x in g[0]]
            return g


def random_nilradical(desc: ParabolicDescriptor, rng: random.Random, bound: int = 2) -> Rational:
    n = desc.n
    blk = [desc.block_of(x) for x in range(1, n + 1)]
    return [
        [Fraction(rng.randint(-bound, bound)) if blk[a] < blk[b] else Fraction(0) for b in range(n)]
        for a in range(n)
    ]


# -- verdicts ------------------------------------------------------------------


def _in_levi_weyl(w: AffinePermutation, desc: ParabolicDescriptor) -> bool:
    return w.is_finite and all(desc.block_of(w.sigma[i - 1]) == desc.block_of(i) for i in range(1, w.n + 1))


def verdicts(tab: ParabolicTableau) -> dict:
    """Every identity and order claim about kappa for one tableau, as booleans."""
    n, SP = tab.n, tab.descriptor.simple_roots
    kappa, sigma, tq = build_kappa(tab), build_sigma(tab), build_tau_q(tab)
    varpi = build_varpi(tab)
    wg, wp = build_factorization(tab)
    lk = kappa.length()
    dim = dim_g_mod_p(tab)

    g_stable = True
    for i in range(1, n):
        sk = simple_reflection(n, i) * kappa
        if not (min_coset_rep(sk, SP) == kappa or sk.length() < lk):
            g_stable = False

    b, c = build_bc(tab)
    lift_ok = b @ one_minus_tinv(build_Z(tab)) @ c == build_varpi_lift(tab)
    checks = {
        "kappa_equals_tau_q_sigma": tq * sigma == kappa,
        "varpi_factorization": wg * kappa * wp == varpi,
        "w_g_finite": wg.is_finite,
        "w_p_in_levi": _in_levi_weyl(wp, tab.descriptor),
        "varpi_lift_identity": lift_ok,
        "b_iwahori": membership(b, "iwahori"),
        "c_iwahori": membership(c, "iwahori"),
        "tau_q_length_is_2dim": tq.length() == translation_length(build_q(tab)) == 2 * dim,
        "tau_q_minimal_mod_G0": min_coset_rep(tq, range(1, n)) == tq,
        "kappa_length_additive": lk == tq.length() + sigma.length(),
        "kappa_length_formula": lk == kappa_length_formula(tab),
        "g_stable": g_stable,
        "kappa_minimal_in_WP": not (set(right_descents(kappa)) & SP),
        "varpi_rep_below_kappa": bruhat_leq(min_coset_rep(varpi, SP), kappa),
        "compactification_iff_at_most_two_rows": (lk == 2 * dim) == (tab.r <= 2),
        "red_closed_form_agrees": not tab.closed_form_mismatches(),
    }
    return {
        "g_stable": g_stable,
        "kappa_minimal_in_WP": checks["kappa_minimal_in_WP"],
        "kappa_length": lk,
        "is_compactification": lk == 2 * dim,
        "checks": checks,
    }


def report(tab: ParabolicTableau) -> dict:
    """JSON-ready summary of the constructions and verdicts for one tableau."""
    kappa, sigma, tq = build_kappa(tab), build_sigma(tab), build_tau_q(tab)
    wg, wp = build_factorization(tab)
    v = verdicts(tab)
    return {
        "descriptor": {"n": tab.n, "d": list(tab.descriptor.d)},
        "lambda": list(tab.lam),
        "nu": list(tab.nu.parts),
        "dim_g_mod_p": dim_g_mod_p(tab),
        "kappa": {"window": list(kappa.window), "matrix": kappa.matrix_str()},
        "varpi": {"window": list(build_varpi(tab).window), "matrix": build_varpi(tab).matrix_str()},
        "tau_q": {"q": list(build_q(tab).z), "window": list(tq.window)},
        "sigma": {"window": list(sigma.window)},
        "w_g": {"window": list(wg.window)},
        "w_p": {"window": list(wp.window)},
        "lengths": {"kappa": kappa.length(), "tau_q": tq.length(), "sigma": sigma.length()},
        "kappa_length_formula": kappa_length_formula(tab),
        "g_stable": v["g_stable"],
        "kappa_minimal_in_WP": v["kappa_minimal_in_WP"],
        "is_compactification": v["is_compactification"],
        "checks": v["checks"],
    }


def jordan_below(N: Sequence[Sequence[object]], nu: Partition) -> bool:
    return dominance_leq(jordan_type(N), nu)
