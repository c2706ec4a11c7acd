"""Closed-form character quantities for invertible matrices over F_q.

Irreducible representations and conjugacy classes are both indexed by
families of Young diagrams: a finite set of blocks, one per irreducible
characteristic-polynomial factor, each carrying the factor's degree and a
nonempty diagram.  Tags are opaque strings; the reserved tag ``"x-1"``
denotes the eigenvalue-one (unipotent) block.

The quantities computed here are rational functions of q evaluated
exactly: dimensions by the q-hook formula, values of the extreme
unipotent traces through modified Hall-Littlewood specializations, and
the coefficient expansions of traces over irreducible characters.
"""

from dataclasses import dataclass
from fractions import Fraction

from fqtraces.partitions import (
    Partition,
    box_removals,
    check_partition,
    format_partition,
    hook_lengths,
    n_stat,
    parse_partition,
    partitions_of,
    q_power,
    size,
)
from fqtraces.specializations import EMPTY, GeometricSpread, Specialization
from fqtraces.symfunc import modified_hl_q, plethysm_pl, schur_in_p

UNIT = "x-1"


@dataclass(frozen=True)
class DiagramFamily:
    """A finitely supported map from tagged polynomial factors to diagrams.

    ``blocks`` is kept sorted by (degree, tag) so that equal families
    compare equal structurally.  Used both for representation labels and
    for conjugacy-class labels.
    """

    blocks: tuple[tuple[str, int, Partition], ...]

    def __post_init__(self):
        canon = []
        seen = set()
        for tag, d, lam in self.blocks:
            lam = check_partition(lam)
            if not lam:
                raise ValueError("family blocks must carry nonempty diagrams")
            if not isinstance(d, int) or d < 1:
                raise ValueError(f"block degree must be a positive integer: {d!r}")
            if tag in seen:
                raise ValueError(f"duplicate tag in family: {tag!r}")
            if tag == UNIT and d != 1:
                raise ValueError("the unit tag always has degree 1")
            seen.add(tag)
            canon.append((str(tag), d, lam))
        canon.sort(key=lambda b: (b[1], b[0]))
        object.__setattr__(self, "blocks", tuple(canon))

    @property
    def degree(self) -> int:
        return sum(d * size(lam) for _, d, lam in self.blocks)

    def diagram(self, tag: str) -> Partition:
        for t, _, lam in self.blocks:
            if t == tag:
                return lam
        return ()

    def without(self, tag: str) -> "DiagramFamily":
        return DiagramFamily(tuple(b for b in self.blocks if b[0] != tag))

    def with_diagram(self, tag: str, d: int, lam: Partition) -> "DiagramFamily":
        rest = tuple(b for b in self.blocks if b[0] != tag)
        if lam:
            rest = rest + ((tag, d, lam),)
        return DiagramFamily(rest)

    def has_unit(self) -> bool:
        return any(tag == UNIT for tag, _, _ in self.blocks)

    def linear_blocks(self) -> list[tuple[str, int, Partition]]:
        return [b for b in self.blocks if b[1] == 1]

    def to_json_obj(self) -> list[dict]:
        return [
            {"tag": tag, "d": d, "lambda": format_partition(lam)}
            for tag, d, lam in self.blocks
        ]

    @classmethod
    def from_json_obj(cls, records) -> "DiagramFamily":
        return cls(
            tuple(
                (r["tag"], int(r["d"]), parse_partition(r["lambda"]))
                for r in records
            )
        )

    def __repr__(self):
        inner = ", ".join(
            f"({tag!r}, {d}, {format_partition(lam)!r})" for tag, d, lam in self.blocks
        )
        return f"DiagramFamily([{inner}])"


# ``ClassLabel`` is the same data read as a conjugacy class (Jordan data per
# irreducible factor) rather than a representation label.
ClassLabel = DiagramFamily

EMPTY_FAMILY = DiagramFamily(())


def family(*blocks) -> DiagramFamily:
    """Convenience constructor: family(("x-1", 1, (2, 1)), ...)."""
    return DiagramFamily(tuple(blocks))


def _check_q(q) -> Fraction:
    q = Fraction(q)
    if q <= 1:
        raise ValueError(f"q must exceed 1, got {q}")
    return q


def _check_linear_capacity(f: DiagramFamily, q: Fraction):
    # families are formula-level objects and do not know q; once q is
    # supplied, only q - 1 distinct linear factors exist
    if q.denominator == 1 and len(f.linear_blocks()) > int(q) - 1:
        raise ValueError(
            f"family uses {len(f.linear_blocks())} degree-1 tags, "
            f"but F_{q} has only {int(q) - 1} linear factors"
        )


def q_hook_weight(lam: Partition, d: int, q: Fraction) -> Fraction:
    """The per-block factor q**(d n(lam)) / prod (q**(d h) - 1)."""
    value = q_power(q, d * n_stat(lam))
    for h in hook_lengths(lam):
        value /= q_power(q, d * h) - 1
    return value


def green_dimension(f: DiagramFamily, q) -> Fraction:
    """Dimension of the irreducible representation labeled by ``f``.

    Computed by the q-hook formula; a positive integer whenever q is a
    prime power (not enforced here -- q is treated as a rational).
    """
    q = _check_q(q)
    _check_linear_capacity(f, q)
    k = f.degree
    value = Fraction(1)
    for i in range(1, k + 1):
        value *= q_power(q, i) - 1
    for _, d, lam in f.blocks:
        value *= q_hook_weight(lam, d, q)
    return value


def branching_predecessors(f: DiagramFamily, variant: str) -> list[DiagramFamily]:
    """Families covered by ``f`` in the branching order.

    ``variant="GLB"``: one box is removed from the unit-tag diagram (the
    embedding that frees the new diagonal entry).  ``variant="GLU"``: one
    box is removed from the diagram at any degree-1 tag (the embedding
    that pins the new diagonal entry to 1).
    """
    if variant not in ("GLB", "GLU"):
        raise ValueError(f"unknown branching variant: {variant!r}")
    out = []
    if variant == "GLB":
        lam = f.diagram(UNIT)
        for smaller in box_removals(lam):
            out.append(f.with_diagram(UNIT, 1, smaller))
    else:
        for tag, d, lam in f.linear_blocks():
            for smaller in box_removals(lam):
                out.append(f.with_diagram(tag, 1, smaller))
    return out


def unipotent_block_value(sp: Specialization, d: int, lam: Partition, q) -> Fraction:
    """Extreme unipotent trace value on a single primary block.

    The block is a Jordan structure ``lam`` attached to an irreducible
    factor of degree ``d``; the value is q**(d n(lam)) times the
    specialization of the degree-stretched modified Q function at
    parameter q**(-d).
    """
    q = _check_q(q)
    if sp.power_sum(1) != 1:
        raise ValueError("unipotent trace values need gamma = 1")
    t = 1 / q_power(q, d)
    f = plethysm_pl(modified_hl_q(lam, t), d)
    return q_power(q, d * n_stat(lam)) * sp.apply(f)


def unipotent_trace_value(sp: Specialization, cls: ClassLabel, q) -> Fraction:
    """Trace value on an arbitrary conjugacy class: product over blocks."""
    _check_linear_capacity(cls, _check_q(q))
    value = Fraction(1)
    for _, d, lam in cls.blocks:
        value *= unipotent_block_value(sp, d, lam, q)
    return value


def trace_coefficients(sp: Specialization, n: int) -> dict[Partition, Fraction]:
    """Decomposition of a unipotent trace over the degree-n unipotent characters.

    The coefficient of the character labeled by ``lam`` is the
    specialization of the Schur function; the same numbers give the
    restriction of the trace to the rank-n Hecke subalgebra.
    """
    if sp.power_sum(1) != 1:
        raise ValueError("trace coefficients need gamma = 1")
    return {lam: sp.apply(schur_in_p(lam)) for lam in partitions_of(n)}


def principal_specialization(q) -> Specialization:
    """All mass smeared geometrically with ratio 1/q, placed on the beta side."""
    q = _check_q(q)
    return Specialization(EMPTY, GeometricSpread((Fraction(1),), q), Fraction(1))


def sp_principal_schur(lam: Partition, q) -> Fraction:
    """Schur value of the geometric beta specialization.

    Equals the closed form (q-1)**|lam| * q**n(lam) / prod (q**h - 1); the
    verification suite checks this identity exactly.
    """
    return principal_specialization(q).apply(schur_in_p(lam))


def _linear_tag_capacity_ok(f: DiagramFamily, q: Fraction, reserve_unit: bool) -> bool:
    if q.denominator != 1:
        return True
    capacity = int(q) - 1 - (1 if reserve_unit and not f.has_unit() else 0)
    return len(f.linear_blocks()) <= capacity


def biregular_coefficient(f: DiagramFamily, q) -> Fraction:
    """Weight of a unit-free family in the biregular decomposition."""
    q = _check_q(q)
    if f.has_unit():
        raise ValueError("biregular weights are indexed by unit-free families")
    if not _linear_tag_capacity_ok(f, q, reserve_unit=True):
        raise ValueError(
            f"family uses more degree-1 tags than F_{q} admits besides the unit"
        )
    value = (q - 1) ** f.degree
    for _, d, lam in f.blocks:
        value *= q_hook_weight(lam, d, q)
    return value


# ---------------------------------------------------------------------------
# Traces for the unit-diagonal tower: one parameter triple per eigenvalue


@dataclass(frozen=True)
class GLUTraceParams:
    """Trace data with one specialization per nonzero field element.

    ``entries`` maps eigenvalue labels (tags of linear factors) to
    specializations; gammas must sum to 1.  ``background`` is the fixed
    part of the family and may not use degree-1 tags at all.
    """

    entries: tuple[tuple[str, Specialization], ...]
    background: DiagramFamily = EMPTY_FAMILY

    def __post_init__(self):
        labels = [label for label, _ in self.entries]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate eigenvalue labels")
        total = sum((sp.power_sum(1) for _, sp in self.entries), Fraction(0))
        if total != 1:
            raise ValueError(f"gammas must sum to 1, got {total}")
        if self.background.linear_blocks():
            raise ValueError("background family may not contain degree-1 blocks")


def _partition_tuples(total: int, slots: int):
    if slots == 0:
        if total == 0:
            yield ()
        return
    for head_size in range(total + 1):
        for head in partitions_of(head_size):
            for tail in _partition_tuples(total - head_size, slots - 1):
                yield (head,) + tail


def glu_trace_coefficients(
    params: GLUTraceParams, n: int
) -> dict[tuple[Partition, ...], Fraction]:
    """Coefficients of a unit-diagonal-tower trace over irreducible characters.

    Keys are tuples of diagrams, one per eigenvalue label in the order of
    ``params.entries``; the key describes the character whose family is
    the background plus those diagrams at the linear tags.  Empty when n
    is smaller than the background degree.
    """
    m = n - params.background.degree
    if m < 0:
        return {}
    out = {}
    sps = [sp for _, sp in params.entries]
    for key in _partition_tuples(m, len(sps)):
        value = Fraction(1)
        for sp, lam in zip(sps, key):
            value *= sp.apply(schur_in_p(lam))
        out[key] = value
    return out
