"""Sweep every parabolic of SL_n for small n and collect per-descriptor check results."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .affine_weyl import bruhat_leq
from .constructions import (
    CotangentPoint,
    build_kappa,
    build_varpi,
    build_Z,
    centralizer_dim,
    diagram_commutes,
    jordan_type,
    one_minus_tinv,
    phi_P,
    random_nilradical,
    random_sl,
    springer_theta,
    verdicts,
)
from .laurent import extract_cell
from .partitions import dominance_leq
from .tableau import ParabolicDescriptor, all_descriptors, build_tableau

__all__ = ["DescriptorResult", "check_descriptor", "check_all", "descriptor_rng", "estimated_terms"]

# extraction of 1 - t^-1 Z against varpi is exercised up to this size
EXTRACT_MAX_N = 6


@dataclass
class DescriptorResult:
    descriptor: ParabolicDescriptor
    status: str
    checks: dict[str, bool] = field(default_factory=dict)
    kappa_length: int | None = None

    @property
    def failed(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok]

    def to_dict(self) -> dict:
        return {
            "n": self.descriptor.n,
            "d": list(self.descriptor.d),
            "status": self.status,
            "kappa_length": self.kappa_length,
            "checks": dict(sorted(self.checks.items())),
        }


def descriptor_rng(seed: int, desc: ParabolicDescriptor) -> random.Random:
    """Independent stream per descriptor, so results do not depend on sweep order."""
    return random.Random(f"{seed}:{desc.n}:{','.join(map(str, desc.d))}")


def estimated_terms(desc: ParabolicDescriptor) -> int:
    """Rough count of Laurent terms in the largest product a check forms."""
    tab = build_tableau(desc)
    return desc.n**2 * tab.nu[0]


def check_descriptor(desc: ParabolicDescriptor, trials: int, seed: int) -> DescriptorResult:
    tab = build_tableau(desc)
    v = verdicts(tab)
    checks = dict(v["checks"])
    Z = build_Z(tab)
    lam_sq = sum(x * x for x in tab.lam)
    checks["jordan_type_of_Z"] = jordan_type(Z) == tab.nu
    checks["centralizer_dim"] = centralizer_dim(Z) == lam_sq
    if desc.n <= EXTRACT_MAX_N:
        checks["cell_of_Z_is_varpi"] = extract_cell(one_minus_tinv(Z)) == build_varpi(tab)

    rng = descriptor_rng(seed, desc)
    kappa = build_kappa(tab)
    commutes = below_kappa = dominated = True
    for _ in range(trials):
        pt = CotangentPoint(random_sl(desc.n, rng), random_nilradical(desc, rng), desc)
        commutes &= diagram_commutes(pt)
        dominated &= dominance_leq(jordan_type(springer_theta(pt)), tab.nu)
        below_kappa &= bruhat_leq(phi_P(pt)[1], kappa)
    if trials:
        checks["diagram_commutes"] = commutes
        checks["theta_jordan_dominated"] = dominated
        checks["phi_cell_below_kappa"] = below_kappa
    status = "PASS" if all(checks.values()) else "FAIL"
    return DescriptorResult(desc, status, checks, v["kappa_length"])


def check_all(max_n: int, trials: int, seed: int, term_budget: int | None = None) -> list[DescriptorResult]:
    """Check every descriptor with ``2 <= n <= max_n``, in a fixed order."""
    out = []
    for n in range(2, max_n + 1):
        for desc in all_descriptors(n):
            if term_budget is not None and estimated_terms(desc) > term_budget:
                out.append(DescriptorResult(desc, "SKIPPED"))
                continue
            out.append(check_descriptor(desc, trials, seed))
    return out
