"""Exact symmetric functions in the power-sum basis.

Everything is expressed through :class:`PowerSumElement`, a finite linear
combination of power-sum products ``p_rho`` with `Fraction` coefficients.
Schur functions enter via the Murnaghan-Nakayama expansion, Hall-Littlewood
P/Q functions via the inverse of the charge-weighted Kostka matrix, and the
modified Q functions by rescaling each ``p_k`` by ``1/(1 - t**k)``.

All basis tables are built lazily per degree and memoized, so repeated
queries at the same degree cost one table construction.
"""

from fractions import Fraction
from functools import cache

from fqtraces.partitions import (
    Partition,
    check_partition,
    format_partition,
    parse_partition,
    partitions_of,
    size,
    z_factor,
)
from fqtraces.tpoly import TPolynomial, one_minus_t_power


class PowerSumElement:
    """A symmetric function stored as {index partition: rational coefficient}.

    The index partition ``rho`` stands for the product ``p_rho1 * p_rho2 * ...``
    of Newton power sums.  Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Partition, Fraction] = {}
        for rho, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[check_partition(rho)] = c
        self.terms = clean

    @classmethod
    def one(cls) -> "PowerSumElement":
        return cls({(): 1})

    @classmethod
    def p(cls, k: int) -> "PowerSumElement":
        return cls({(k,): 1})

    def __eq__(self, other):
        return isinstance(other, PowerSumElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for rho, c in other.terms.items():
            out[rho] = out.get(rho, Fraction(0)) + c
        return PowerSumElement(out)

    def __neg__(self):
        return PowerSumElement({rho: -c for rho, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSumElement({rho: c * other for rho, c in self.terms.items()})
        if not isinstance(other, PowerSumElement):
            return NotImplemented
        out: dict[Partition, Fraction] = {}
        for rho, a in self.terms.items():
            for sigma, b in other.terms.items():
                key = tuple(sorted(rho + sigma, reverse=True))
                out[key] = out.get(key, Fraction(0)) + a * b
        return PowerSumElement(out)

    __rmul__ = __mul__

    def degrees(self) -> set[int]:
        return {size(rho) for rho in self.terms}

    def degree(self) -> int:
        """Degree of a homogeneous element (raises if mixed)."""
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(degs)}")
        return degs.pop() if degs else 0

    def __repr__(self):
        if not self.terms:
            return "PowerSumElement(0)"
        bits = [
            f"{c}*p[{format_partition(rho)}]"
            for rho, c in sorted(self.terms.items(), reverse=True)
        ]
        return "PowerSumElement(" + " + ".join(bits) + ")"

    def to_json_obj(self) -> list[dict]:
        return [
            {"rho": format_partition(rho), "coeff": str(c)}
            for rho, c in sorted(self.terms.items(), reverse=True)
        ]

    @classmethod
    def from_json_obj(cls, records) -> "PowerSumElement":
        return cls(
            {parse_partition(r["rho"]): Fraction(r["coeff"]) for r in records}
        )


# ---------------------------------------------------------------------------
# Symmetric group characters and Schur functions


@cache
def sym_character(lam: Partition, rho: Partition) -> int:
    """Character value of the symmetric group, by border-strip recursion.

    Strips are removed through the first-column hook encoding: removing a
    strip of length k maps one shifted part ``b`` to ``b - k``, with sign
    given by the number of shifted parts jumped over.
    """
    if not rho:
        return 1 if not lam else 0
    k, rest = rho[0], rho[1:]
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(beta)
    total = 0
    for i, b in enumerate(beta):
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted([c for c in beta if c != b] + [nb], reverse=True)
        parts = (new_beta[j] - (ell - 1 - j) for j in range(ell))
        mu = tuple(p for p in parts if p > 0)
        total += (-1) ** height * sym_character(mu, rest)
    return total


@cache
def schur_in_p(lam: Partition) -> PowerSumElement:
    """Schur function expanded over power sums via character values."""
    lam = check_partition(lam)
    n = size(lam)
    terms = {}
    for rho in partitions_of(n):
        chi = sym_character(lam, rho)
        if chi:
            terms[rho] = Fraction(chi, z_factor(rho))
    return PowerSumElement(terms)


def schur_expand(f: PowerSumElement) -> dict[Partition, Fraction]:
    """Coefficients d_lam with f = sum d_lam s_lam, for homogeneous f.

    Uses orthogonality <p_rho, p_sigma> = z_rho delta, under which the
    Schur coefficient is the character-weighted sum of p-coefficients.
    """
    if not f:
        return {}
    n = f.degree()
    out = {}
    for lam in partitions_of(n):
        d = sum(
            (c * sym_character(lam, rho) for rho, c in f.terms.items()),
            Fraction(0),
        )
        if d:
            out[lam] = d
    return out


# ---------------------------------------------------------------------------
# Tableau enumeration, Kostka numbers, charge


def _strip_removals(shape: Partition, m: int) -> list[Partition]:
    """Partitions obtained from ``shape`` by removing a horizontal m-strip."""
    rows = len(shape)
    out: list[Partition] = []

    def rec(i: int, need: int, acc: list[int]):
        if need < 0:
            return
        if i == rows:
            if need == 0:
                out.append(tuple(p for p in acc if p))
            return
        lo = shape[i + 1] if i + 1 < rows else 0
        for t in range(lo, shape[i] + 1):
            acc.append(t)
            rec(i + 1, need - (shape[i] - t), acc)
            acc.pop()

    rec(0, m, [])
    return out


def _ssyt_chains(shape: Partition, content: Partition):
    """All chains of shapes realizing column-strict fillings.

    A filling with ``content[i-1]`` copies of letter i is the same thing as
    a chain () = nu0 <= nu1 <= ... <= nuk = shape where consecutive shapes
    differ by a horizontal strip.
    """

    def rec(cur: Partition, i: int):
        if i == 0:
            if not cur:
                yield ((),)
            return
        for smaller in _strip_removals(cur, content[i - 1]):
            for chain in rec(smaller, i - 1):
                yield chain + (cur,)

    yield from rec(tuple(shape), len(content))


def _reading_word(chain) -> list[int]:
    """Row word of the filling encoded by a chain: rows right to left, top down."""
    shape = chain[-1]
    word: list[int] = []
    for r in range(len(shape)):
        row: list[int] = []
        for i in range(1, len(chain)):
            prev = chain[i - 1][r] if r < len(chain[i - 1]) else 0
            cur = chain[i][r] if r < len(chain[i]) else 0
            row.extend([i] * (cur - prev))
        word.extend(reversed(row))
    return word


def charge(word) -> int:
    """Charge of a word with partition content.

    Extraction pass: scan cyclically to the right, starting at the left
    end; pick the first 1, then the first 2 after it, and so on up to the
    largest remaining letter.  Each letter contributes the number of times
    the scan has wrapped around since the pass started (so on a standard
    word the index of r+1 exceeds that of r exactly when r+1 sits to the
    left of r).  Marked letters are removed and passes repeat until the
    word is exhausted; the charge is the total over all passes.

    This reproduces the charge-weighted Kostka polynomials; the test
    suite pins it against two independent Hall-Littlewood constructions.
    """
    w = list(word)
    nw = len(w)
    alive = [True] * nw
    remaining = nw
    total = 0
    while remaining:
        top = max(w[i] for i in range(nw) if alive[i])
        pos = 0
        index = 0
        for letter in range(1, top + 1):
            while not (alive[pos] and w[pos] == letter):
                pos += 1
                if pos == nw:
                    pos = 0
                    if letter > 1:
                        index += 1
            if letter > 1:
                total += index
            alive[pos] = False
            remaining -= 1
    return total


@cache
def kostka(shape: Partition, content: Partition) -> int:
    """Number of column-strict fillings of ``shape`` with given content."""
    shape = check_partition(shape)
    content = check_partition(content)
    if size(shape) != size(content):
        raise ValueError("kostka requires |shape| = |content|")
    return _kostka_count(shape, content)


@cache
def _kostka_count(shape: Partition, content: Partition) -> int:
    if not content:
        return 1 if not shape else 0
    return sum(
        _kostka_count(smaller, content[:-1])
        for smaller in _strip_removals(shape, content[-1])
    )


@cache
def kostka_foulkes(shape: Partition, content: Partition) -> TPolynomial:
    """Charge generating polynomial over fillings of ``shape`` with ``content``.

    Evaluating at t = 1 recovers :func:`kostka`.
    """
    shape = check_partition(shape)
    content = check_partition(content)
    if size(shape) != size(content):
        raise ValueError("kostka_foulkes requires |shape| = |content|")
    coeffs: dict[int, int] = {}
    for chain in _ssyt_chains(shape, content):
        c = charge(_reading_word(chain))
        coeffs[c] = coeffs.get(c, 0) + 1
    if not coeffs:
        return TPolynomial()
    top = max(coeffs)
    return TPolynomial(coeffs.get(i, 0) for i in range(top + 1))


# ---------------------------------------------------------------------------
# Hall-Littlewood P and Q


@cache
def b_poly(lam: Partition) -> TPolynomial:
    """Normalizing factor between P and Q: product of (1 - t**j) per part multiplicity."""
    out = TPolynomial((1,))
    for part in set(lam):
        for j in range(1, lam.count(part) + 1):
            out = out * one_minus_t_power(j)
    return out


@cache
def _kf_matrix_inverse(n: int):
    """Inverse of the charge-weighted Kostka matrix at degree n.

    Partitions are listed in decreasing lexicographic order, a linear
    extension of dominance, which makes the matrix upper unitriangular.
    Returns (order, inverse rows) with polynomial entries.
    """
    order = partitions_of(n)
    index = {lam: i for i, lam in enumerate(order)}
    m = len(order)
    mat = [[TPolynomial() for _ in range(m)] for _ in range(m)]
    for i, shape in enumerate(order):
        for j in range(i, m):
            mat[i][j] = kostka_foulkes(shape, order[j])
    inv = [[TPolynomial() for _ in range(m)] for _ in range(m)]
    for i in range(m):
        inv[i][i] = TPolynomial((1,))
    for span in range(1, m):
        for i in range(m - span):
            j = i + span
            acc = TPolynomial()
            for k in range(i + 1, j + 1):
                if mat[i][k] and inv[k][j]:
                    acc = acc + mat[i][k] * inv[k][j]
            inv[i][j] = -acc
    return order, index, inv


@cache
def hl_p_in_schur_sym(lam: Partition) -> dict[Partition, TPolynomial]:
    """P_lam expanded over Schur functions, coefficients polynomial in t."""
    lam = check_partition(lam)
    order, index, inv = _kf_matrix_inverse(size(lam))
    i = index[lam]
    return {order[j]: inv[i][j] for j in range(len(order)) if inv[i][j]}


def hl_q_in_schur_sym(lam: Partition) -> dict[Partition, TPolynomial]:
    """Q_lam = b_lam(t) * P_lam over Schur functions, polynomial in t."""
    b = b_poly(lam)
    return {mu: b * c for mu, c in hl_p_in_schur_sym(lam).items()}


def hl_q_in_p(lam: Partition, t) -> PowerSumElement:
    """Hall-Littlewood Q function at an exact rational parameter t."""
    t = Fraction(t)
    out = PowerSumElement()
    for mu, poly in hl_q_in_schur_sym(lam).items():
        c = poly(t)
        if c:
            out = out + schur_in_p(mu) * c
    return out


def modified_hl_q(lam: Partition, t) -> PowerSumElement:
    """Modified Q function: rescale the p_rho coefficient by prod 1/(1 - t**rho_i)."""
    t = Fraction(t)
    for k in range(1, size(check_partition(lam)) + 1):
        if t**k == 1:
            raise ValueError(f"t = {t} has t**{k} = 1; modified Q is undefined")
    out = {}
    for rho, c in hl_q_in_p(lam, t).terms.items():
        for part in rho:
            c /= 1 - t**part
        out[rho] = c
    return PowerSumElement(out)


def plethysm_pl(f: PowerSumElement, n: int) -> PowerSumElement:
    """Index-stretching plethysm: every p_k becomes p_{n k}."""
    if n < 1:
        raise ValueError("plethysm degree must be a positive integer")
    return PowerSumElement(
        {tuple(n * part for part in rho): c for rho, c in f.terms.items()}
    )
