"""Independent reference constructions used only by the tests.

Two ways to get Hall-Littlewood data without the charge statistic:

* Gram-Schmidt: orthogonalize the monomial basis under the t-deformed
  power-sum inner product; the result is the P basis, and the transition
  coefficients from Schur functions are the charge polynomials evaluated
  at t.
* Branching: build P as an explicit polynomial in finitely many variables
  by peeling one variable at a time with horizontal-strip weights, and
  solve for the Schur transition coefficients by matching monomials.

Both are deliberately different from the production path (charge
enumeration plus unitriangular inversion).
"""

from fractions import Fraction

from fqtraces.partitions import partitions_of, z_factor
from fqtraces.symfunc import PowerSumElement, _strip_removals, kostka, schur_in_p


def t_inner(f: PowerSumElement, g: PowerSumElement, t: Fraction) -> Fraction:
    """Deformed inner product with <p_rho, p_rho> = z_rho / prod (1 - t**rho_i)."""
    total = Fraction(0)
    for rho, a in f.terms.items():
        b = g.terms.get(rho)
        if b is None:
            continue
        w = Fraction(z_factor(rho))
        for part in rho:
            w /= 1 - t**part
        total += a * b * w
    return total


def monomial_in_p(n: int) -> dict:
    """Monomial symmetric functions in the p basis via inverse Kostka."""
    order = partitions_of(n)
    m = len(order)
    K = [[kostka(order[i], order[j]) for j in range(m)] for i in range(m)]
    inv = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        inv[i][i] = Fraction(1)
    for span in range(1, m):
        for i in range(m - span):
            j = i + span
            inv[i][j] = -sum(K[i][k] * inv[k][j] for k in range(i + 1, j + 1))
    out = {}
    for jj, lam in enumerate(order):
        acc = PowerSumElement()
        for ii in range(m):
            if inv[jj][ii]:
                acc = acc + schur_in_p(order[ii]) * inv[jj][ii]
        out[lam] = acc
    return out


def gram_schmidt_hl_p(n: int, t: Fraction) -> dict:
    """The P basis at degree n, orthogonalized smallest-dominance first."""
    order = list(partitions_of(n))[::-1]
    mono = monomial_in_p(n)
    P: dict = {}
    for lam in order:
        f = mono[lam]
        for mu in P:
            c = t_inner(f, P[mu], t) / t_inner(P[mu], P[mu], t)
            if c:
                f = f + P[mu] * (-c)
        P[lam] = f
    return P


def kostka_foulkes_reference(shape, content, t: Fraction) -> Fraction:
    """Charge polynomial value via orthogonality, no tableaux involved."""
    P = gram_schmidt_hl_p(sum(shape), t)
    lam = tuple(content)
    return t_inner(schur_in_p(tuple(shape)), P[lam], t) / t_inner(P[lam], P[lam], t)


def _mult(lam, i):
    return sum(1 for p in lam if p == i)


def _psi_strip(lam, mu, t):
    """Branch weight for the horizontal strip lam / mu."""
    v = Fraction(1)
    for i in range(1, (lam[0] if lam else 0) + 1):
        if _mult(mu, i) == _mult(lam, i) + 1:
            v *= 1 - t ** _mult(mu, i)
    return v


def hl_p_monomials(lam, nvars: int, t: Fraction) -> dict:
    """P as an explicit polynomial: exponent tuple -> coefficient."""
    if nvars == 0:
        return {(): Fraction(1)} if not lam else {}
    out: dict = {}
    for k in range(sum(lam) + 1):
        for mu in _strip_removals(tuple(lam), k):
            w = _psi_strip(tuple(lam), mu, t)
            if not w:
                continue
            for expo, c in hl_p_monomials(mu, nvars - 1, t).items():
                key = expo + (k,)
                out[key] = out.get(key, Fraction(0)) + c * w
    return {k: v for k, v in out.items() if v}


def schur_monomials(lam, nvars: int) -> dict:
    """Schur polynomial by column-strict fillings: exponent tuple -> coeff."""
    if nvars == 0:
        return {(): Fraction(1)} if not lam else {}
    out: dict = {}
    for k in range(sum(lam) + 1):
        for mu in _strip_removals(tuple(lam), k):
            for expo, c in schur_monomials(mu, nvars - 1).items():
                key = expo + (k,)
                out[key] = out.get(key, Fraction(0)) + c
    return out


def kostka_foulkes_branching(shape, t: Fraction) -> dict:
    """Full row {content: K(shape, content)(t)} via monomial matching."""
    n = sum(shape)
    order = partitions_of(n)
    P = {lam: hl_p_monomials(lam, n, t) for lam in order}
    rest = dict(schur_monomials(tuple(shape), n))
    out = {}
    for lam in order:
        key = tuple(lam[i] if i < len(lam) else 0 for i in range(n))
        lead = P[lam].get(key, Fraction(0))
        c = rest.get(key, Fraction(0))
        if lead == 0:
            assert c == 0
            continue
        coef = c / lead
        if coef:
            out[lam] = coef
            for expo, v in P[lam].items():
                rest[expo] = rest.get(expo, Fraction(0)) - coef * v
    assert not any(rest.values()), "branching expansion left a remainder"
    return out
