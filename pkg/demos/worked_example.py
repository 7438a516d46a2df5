"""Walk through the n = 17 parabolic with omitted simple roots 1, 5, 9, 11."""

from affine_springer.constructions import (
    build_kappa,
    build_sigma,
    build_tau_q,
    build_Z,
    centralizer_dim,
    jordan_type,
    kappa_length_formula,
    verdicts,
)
from affine_springer.tableau import build_tableau, dim_g_mod_p

tab = build_tableau(17, (1, 5, 9, 11))
print(tab.render())
print()
print("block sizes  ", tab.lam)
print("row lengths  ", tab.nu.parts)
print("red entries  ", sorted(tab.red_set))
print("dim G/P      ", dim_g_mod_p(tab))

Z = build_Z(tab)
print("Jordan type of Z", jordan_type(Z).parts, "centralizer dim", centralizer_dim(Z))

kappa, tq, sigma = build_kappa(tab), build_tau_q(tab), build_sigma(tab)
print("kappa window ", kappa.window_str())
print(f"l(kappa) = {kappa.length()} = l(tau_q) {tq.length()} + l(sigma) {sigma.length()}")
print("closed form  ", kappa_length_formula(tab))

v = verdicts(tab)
print("stable under G:", v["g_stable"], " minimal in coset:", v["kappa_minimal_in_WP"])
print("failed checks:", [k for k, ok in v["checks"].items() if not ok] or "none")
