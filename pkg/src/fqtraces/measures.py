"""Central measures on infinite unipotent upper-triangular matrices.

A central measure assigns to every finite unipotent corner a cylinder
probability that depends only on the corner's Jordan type.  The measure
is parameterized by row frequencies ``r`` and column frequencies ``c``
with total mass at most 1; the column side always enters through its
geometric spread with ratio 1/q.

The growth of the Jordan type under adding one row and column is an
explicit Markov chain on Young diagrams whose transition weights combine
the parabolic extension counts with ratios of cylinder probabilities.
Everything except the Monte Carlo summary statistics is exact rational
arithmetic; sampling compares exact cumulative probabilities against a
uniform variate of fixed denominator 2**64.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import sqrt

from fqtraces.partitions import (
    Partition,
    box_additions,
    check_partition,
    conj_prefix,
    n_stat,
    q_power,
    size,
    transpose,
)
from fqtraces.specializations import (
    EMPTY,
    FinitePowerSums,
    GeometricSpread,
    Specialization,
    _check_weakly_decreasing_nonneg,
)
from fqtraces.symfunc import hl_q_in_p, modified_hl_q

# Hall-Littlewood expansions stay practical only through moderate degrees;
# beyond this the named closed-form families must be used.
EXACT_HL_DEGREE_CAP = 12


@dataclass(frozen=True)
class MeasureParams:
    """Row frequencies, column frequencies, and the field size q.

    ``r`` may be an explicit finite tuple or a :class:`GeometricSpread`
    (the latter is how the Haar family is expressed exactly); ``c`` is a
    finite tuple.  The total mass sum(r) + sum(c) may not exceed 1.
    """

    r: object
    c: tuple[Fraction, ...]
    q: Fraction

    def __post_init__(self):
        q = Fraction(self.q)
        if q <= 1:
            raise ValueError("q must exceed 1")
        r = self.r
        if isinstance(r, (tuple, list)):
            r = FinitePowerSums(tuple(Fraction(v) for v in r))
        if isinstance(r, FinitePowerSums):
            _check_weakly_decreasing_nonneg(r.values, "row frequencies")
        elif not isinstance(r, GeometricSpread):
            raise TypeError("r must be a sequence or a GeometricSpread")
        c = tuple(Fraction(v) for v in self.c)
        _check_weakly_decreasing_nonneg(c, "column frequencies")
        if r.power(1) + sum(c) > 1:
            raise ValueError("total frequency mass must not exceed 1")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "q", q)

    @classmethod
    def haar(cls, q) -> "MeasureParams":
        """Geometric row frequencies (1 - 1/q) * q**(1-i): the uniform measure."""
        return cls(GeometricSpread((Fraction(1),), Fraction(q)), (), Fraction(q))

    @classmethod
    def delta_identity(cls, q) -> "MeasureParams":
        """Column frequency 1: the point mass at the identity matrix."""
        return cls((), (Fraction(1),), Fraction(q))

    @classmethod
    def single_row(cls, q) -> "MeasureParams":
        """Row frequency 1: uniform on corners with one full Jordan block."""
        return cls((Fraction(1),), (), Fraction(q))

    def specialization(self) -> Specialization:
        """The multiplicative functional behind the cylinder probabilities."""
        beta = GeometricSpread(self.c, self.q) if self.c else EMPTY
        return Specialization(self.r, beta, Fraction(1))

    def row_frequencies(self, count: int) -> list[Fraction]:
        return self.r.frequencies(count)

    def col_frequencies(self, count: int) -> list[Fraction]:
        out = list(self.c[:count])
        return out + [Fraction(0)] * (count - len(out))


def extension_count(lam: Partition, mu: Partition, q) -> Fraction:
    """Number of one-row parabolic extensions moving Jordan type lam to mu.

    Of the q**n extensions of a unipotent corner of type lam (n = |lam|),
    counts those of type mu.  Nonzero only when mu adds a single box to
    lam; with the new box in column j the count is
    q**n * q**(-lam'_j) * (1 - q**(lam'_j - lam'_{j-1})), where the
    convention lam'_0 = infinity kills the subtracted term at j = 1.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    q = Fraction(q)
    if size(mu) != size(lam) + 1:
        raise ValueError("extension counts need |mu| = |lam| + 1")
    j = _added_column(lam, mu)
    if j is None:
        return Fraction(0)
    n = size(lam)
    col_j = conj_prefix(lam, j)
    base = q_power(q, n - col_j)
    if j == 1:
        return base
    return base - q_power(q, n - conj_prefix(lam, j - 1))


def _added_column(lam: Partition, mu: Partition) -> int | None:
    """Column of the single box of mu \\ lam, or None if not a one-box cover."""
    padded = lam + (0,) * (len(mu) - len(lam))
    if len(mu) < len(lam):
        return None
    diff_rows = [i for i in range(len(mu)) if mu[i] != padded[i]]
    if len(diff_rows) != 1 or mu[diff_rows[0]] != padded[diff_rows[0]] + 1:
        return None
    return mu[diff_rows[0]]


# ---------------------------------------------------------------------------
# Cylinder probabilities


@cache
def hl_weight(params: MeasureParams, lam: Partition) -> Fraction:
    """Specialized Hall-Littlewood Q weight, through the exact expansion."""
    if size(lam) > EXACT_HL_DEGREE_CAP:
        raise ValueError(
            f"exact Hall-Littlewood expansion capped at degree {EXACT_HL_DEGREE_CAP}; "
            "use a closed-form parameter family for longer diagrams"
        )
    return params.specialization().apply(hl_q_in_p(lam, 1 / params.q))


def _closed_form_weight(params: MeasureParams, lam: Partition) -> Fraction | None:
    """Closed-form Q weights for the three named parameter families."""
    q = params.q
    n = size(lam)
    kind = _family_kind(params)
    if kind == "haar":
        return (1 - 1 / q) ** n / q_power(q, n_stat(lam))
    if kind == "delta":
        return (1 - 1 / q) ** n if all(p == 1 for p in lam) else Fraction(0)
    if kind == "row":
        if len(lam) <= 1:
            return (1 - 1 / q) if n >= 1 else Fraction(1)
        return Fraction(0)
    return None


def measure_weight(params: MeasureParams, lam: Partition) -> Fraction:
    """Q weight of a Jordan type: closed form when available, else exact HL."""
    closed = _closed_form_weight(params, lam)
    if closed is not None:
        return closed
    return hl_weight(params, lam)


def cyl_prob(params: MeasureParams, lam: Partition) -> Fraction:
    """Probability of the cylinder over one unipotent corner of type lam."""
    lam = check_partition(lam)
    n = size(lam)
    q = params.q
    pref = q_power(q, -(n * (n - 1)) // 2) / (1 - 1 / q) ** n
    return pref * q_power(q, n_stat(lam)) * measure_weight(params, lam)


def cyl_prob_from_trace(sp: Specialization, lam: Partition, q) -> Fraction:
    """Cylinder probability computed from trace parameters directly.

    Uses the modified Q function at parameter 1/q; agrees with
    :func:`cyl_prob` under the parameter map r = spread(alpha), c = beta.
    """
    if sp.power_sum(1) != 1:
        raise ValueError("cylinder probabilities need gamma = 1")
    lam = check_partition(lam)
    q = Fraction(q)
    n = size(lam)
    pref = q_power(q, -(n * (n - 1)) // 2)
    return pref * q_power(q, n_stat(lam)) * sp.apply(modified_hl_q(lam, 1 / q))


# ---------------------------------------------------------------------------
# The growth chain
#
# The transition probability is N_{lam,mu} * cyl(mu) / cyl(lam).  The huge
# q**(n(n-1)/2) prefactors cancel in the ratio: with the new box in row r
# and column j (so lam'_j = r - 1), the probability simplifies to
#
#     (1 - q**(lam'_j - lam'_{j-1})) * [W(mu) / W(lam)] / (1 - 1/q),
#
# with the j = 1 convention dropping the subtracted term.  The closed-form
# families additionally have small closed-form weight ratios, which keeps
# long trajectories exact and fast.


def _family_kind(params: MeasureParams) -> str | None:
    q = params.q
    if isinstance(params.r, GeometricSpread):
        if params.r.seq == (Fraction(1),) and params.r.q == q and not params.c:
            return "haar"
        return None
    if params.r.values == () and params.c == (Fraction(1),):
        return "delta"
    if params.r.values == (Fraction(1),) and not params.c:
        return "row"
    return None


def _weight_ratio(params: MeasureParams, lam: Partition, mu: Partition, row: int) -> Fraction:
    """W(mu) / W(lam) for a one-box extension with the new box in ``row``."""
    q = params.q
    kind = _family_kind(params)
    if kind == "haar":
        return (1 - 1 / q) * q_power(q, 1 - row)
    if kind == "delta":
        return (1 - 1 / q) if all(p == 1 for p in mu) else Fraction(0)
    if kind == "row":
        if len(mu) > 1:
            return Fraction(0)
        return Fraction(1) if lam else (1 - 1 / q)
    return measure_weight(params, mu) / measure_weight(params, lam)


def _source_weight_positive(params: MeasureParams, lam: Partition) -> bool:
    kind = _family_kind(params)
    if kind == "haar":
        return True
    if kind == "delta":
        return all(p == 1 for p in lam)
    if kind == "row":
        return len(lam) <= 1
    return measure_weight(params, lam) > 0


def transition_distribution(
    params: MeasureParams, lam: Partition
) -> list[tuple[Partition, Fraction]]:
    """All one-box successors with their transition probabilities."""
    if not _source_weight_positive(params, lam):
        raise ValueError(f"source class {lam} has zero probability")
    q = params.q
    out = []
    for mu, col in box_additions(lam):
        row = conj_prefix(lam, col) + 1
        if col == 1:
            count_factor = Fraction(1)
        else:
            count_factor = 1 - q_power(q, conj_prefix(lam, col) - conj_prefix(lam, col - 1))
        p = count_factor * _weight_ratio(params, lam, mu, row) / (1 - 1 / q)
        out.append((mu, p))
    return out


def transition_prob(params: MeasureParams, lam: Partition, mu: Partition) -> Fraction:
    """One-step growth probability from Jordan type lam to mu."""
    mu = check_partition(mu)
    if size(mu) != size(lam) + 1:
        raise ValueError("growth steps add exactly one box")
    for nu, p in transition_distribution(params, lam):
        if nu == mu:
            return p
    return Fraction(0)


_U64 = 2**64


def _trial_rng(seed: int, trial: int) -> random.Random:
    """Deterministic per-trial stream, independent of evaluation order."""
    return random.Random(((seed % _U64) << 64) | (trial % _U64))


def _step(params: MeasureParams, lam: Partition, rng: random.Random) -> Partition:
    # Exact rational thresholds against a uniform variate of denominator
    # 2**64.  The only sampling error is the grid discretization: at most
    # one grid point per successor can be misassigned, so the bias per
    # step is below (corners + 1) * 2**-64 < 2**-60 at every level the
    # experiments reach.
    u = Fraction(rng.getrandbits(64), _U64)
    acc = Fraction(0)
    dist = transition_distribution(params, lam)
    for mu, p in dist:
        acc += p
        if u < acc:
            return mu
    return dist[-1][0]


def sample_trajectory(params: MeasureParams, n_max: int, seed: int) -> list[Partition]:
    """Growth trajectory of Jordan types, from the empty diagram to level n_max."""
    rng = _trial_rng(seed, 0)
    lam: Partition = ()
    out = [lam]
    for _ in range(n_max):
        lam = _step(params, lam, rng)
        out.append(lam)
    return out


# ---------------------------------------------------------------------------
# Law-of-large-numbers experiments


@dataclass(frozen=True)
class LLNRow:
    statistic: str
    index: int
    empirical: float
    predicted: Fraction
    stderr: float


@dataclass(frozen=True)
class LLNReport:
    params_label: str
    n_max: int
    trials: int
    seed: int
    rows: tuple[LLNRow, ...]

    def to_csv(self) -> str:
        lines = ["statistic,i,empirical,predicted,stderr"]
        for row in self.rows:
            lines.append(
                f"{row.statistic},{row.index},{row.empirical!r},"
                f"{row.predicted},{row.stderr!r}"
            )
        return "\n".join(lines) + "\n"


def _mean_stderr(samples: list[Fraction]) -> tuple[float, float]:
    t = len(samples)
    s1 = sum(samples, Fraction(0))
    mean = s1 / t
    if t < 2:
        return float(mean), 0.0
    var = sum(((x - mean) ** 2 for x in samples), Fraction(0)) / (t - 1)
    return float(mean), sqrt(float(var) / t)


def lln_experiment(
    params: MeasureParams,
    n_max: int,
    trials: int,
    seed: int,
    track: int = 4,
) -> LLNReport:
    """Empirical scaled row/column lengths at level n_max versus predictions.

    Each trial uses its own stream derived from (seed, trial index), so the
    report does not depend on scheduling; reports are byte-identical across
    runs with equal inputs.  Only the summary columns are floating point.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    rows: list[list[Fraction]] = [[] for _ in range(track)]
    cols: list[list[Fraction]] = [[] for _ in range(track)]
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        lam: Partition = ()
        for _ in range(n_max):
            lam = _step(params, lam, rng)
        conj = transpose(lam)
        for i in range(track):
            rows[i].append(Fraction(lam[i] if i < len(lam) else 0, n_max))
            cols[i].append(Fraction(conj[i] if i < len(conj) else 0, n_max))
    predicted_r = params.row_frequencies(track)
    predicted_c = params.col_frequencies(track)
    out = []
    for i in range(track):
        mean, err = _mean_stderr(rows[i])
        out.append(LLNRow("lambda_i/n", i + 1, mean, predicted_r[i], err))
    for i in range(track):
        mean, err = _mean_stderr(cols[i])
        out.append(LLNRow("lambda_conj_i/n", i + 1, mean, predicted_c[i], err))
    return LLNReport(repr(params), n_max, trials, seed, tuple(out))
