"""Polarizability and collapsing degrees via Hesselink's combinatorics.

For sp_m and so_m the Richardson (polarizable) orbits, and among them those
whose cotangent-bundle collapsing T*(G/P) -> closure is birational, are
decided by a purely combinatorial test on the partition d:

* a parameter q >= 0 is admissible when q = m (mod 2), with q = 2 excluded
  in the orthogonal case;
* the orbit is polarizable iff for some admissible q the partition passes
  the image test of the Spaltenstein map attached to q;
* when it does, the collapsing degree of the associated polarization is a
  power of 2 whose exponent is computed from the count of odd parts; a
  resolution exists iff some admissible q yields degree 1.

All index sets are evaluated on the zero-padded sequence d_1, d_2, ... with
d_j = 0 for j > N.  The padding matters: zero entries join the marked set J
from position N+1 (orthogonal case) or N+1/N+2 (symplectic case) onwards,
which caps j0 and thereby the usable range of q.  Dropping the padding would
admit (d, q) pairs with a negative degree exponent.

epsilon is 1 for sp_m and 0 for so_m: it is the parity whose parts must
occur with even multiplicity in a valid partition, and it drives every set
definition below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InadmissibleQ, NonIntegralExponent, NotInImage, WrongFamily
from .orbits import ClassicalOrbit, Family, LieType, Partition

NEG_INF: float = float("-inf")
POS_INF: float = float("inf")


@dataclass(frozen=True)
class HesselinkContext:
    """Matrix size and the constrained parity (1 for sp_m, 0 for so_m)."""

    m: int
    epsilon: int

    def __post_init__(self):
        if self.epsilon not in (0, 1):
            raise ValueError(f"epsilon must be 0 or 1, got {self.epsilon}")
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if self.epsilon == 1 and self.m % 2 != 0:
            raise ValueError("epsilon = 1 (symplectic) requires even m")

    @classmethod
    def for_lie_type(cls, lie_type: LieType) -> "HesselinkContext":
        if lie_type.family is Family.SL:
            raise WrongFamily("Hesselink machinery applies to sp and so only")
        return cls(m=lie_type.m, epsilon=1 if lie_type.family is Family.SP else 0)

    @classmethod
    def for_orbit(cls, orbit: ClassicalOrbit) -> "HesselinkContext":
        return cls.for_lie_type(orbit.lie_type)


def is_admissible(ctx: HesselinkContext, q: int) -> bool:
    """q must be non-negative, congruent to m mod 2, and not 2 when so."""
    return q >= 0 and (q - ctx.m) % 2 == 0 and not (ctx.epsilon == 0 and q == 2)


def compute_J(ctx: HesselinkContext, d: Partition) -> frozenset[int]:
    """The marked positions within 1..N.

    A position j is marked when d_j has the constrained parity, or when j
    or j-1 sits at a position congruent to m mod 2 with two equal adjacent
    parts.  On the zero-padded tail every position from
    _first_padded_member(ctx, N) onwards is marked as well; those are not
    materialized here and are accounted for in compute_j1_j0 (they carry
    part 0, so they can only lower j0, never raise j1).
    """
    n = len(d)
    marked = {j for j in range(1, n + 1) if d.part(j) % 2 == ctx.epsilon}
    for j in range(1, n + 1):
        if j % 2 == ctx.m % 2 and d.part(j) == d.part(j + 1):
            marked.update((j, j + 1))
    # j = N never pairs with the padding since d_N > 0 = d_{N+1}
    return frozenset(marked)


def _first_padded_member(ctx: HesselinkContext, n_parts: int) -> int:
    """Smallest padded index belonging to J.

    Zero parts are even: in the orthogonal case they match epsilon = 0
    immediately at N+1; in the symplectic case they enter through an equal
    adjacent pair at the first position past N congruent to m mod 2.
    """
    if ctx.epsilon == 0 or n_parts % 2 == 1:
        return n_parts + 1
    return n_parts + 2


def compute_j1_j0(ctx: HesselinkContext, d: Partition) -> tuple[int | float, int | float]:
    """(largest marked position with odd part, smallest with even part).

    Sentinels: -inf when no marked position carries an odd part.  The
    padded tail always contributes even (zero) parts, so the second value
    is finite, at most N+2.
    """
    marked = compute_J(ctx, d)
    j1 = max((j for j in marked if d.part(j) % 2 == 1), default=NEG_INF)
    j0 = min((j for j in marked if d.part(j) % 2 == 0), default=POS_INF)
    return j1, min(j0, _first_padded_member(ctx, len(d)))


def _pairing_ok(ctx: HesselinkContext, d: Partition) -> bool:
    # adjacent parts must share parity at every position congruent to
    # m+1 mod 2; padded positions beyond N satisfy this trivially
    return all(
        (d.part(j) - d.part(j + 1)) % 2 == 0
        for j in range(1, len(d) + 1)
        if j % 2 == (ctx.m + 1) % 2
    )


def in_image_Sq(ctx: HesselinkContext, d: Partition, q: int) -> bool:
    """Image test for the Spaltenstein map at admissible q.

    The partition lies in the image iff j1 <= q < j0 and the adjacent
    parity-pairing condition holds.  Only the interval depends on q.
    """
    if not is_admissible(ctx, q):
        raise InadmissibleQ(f"q = {q} is not admissible for m = {ctx.m}, epsilon = {ctx.epsilon}")
    j1, j0 = compute_j1_j0(ctx, d)
    return j1 <= q < j0 and _pairing_ok(ctx, d)


def compute_B(ctx: HesselinkContext, d: Partition) -> frozenset[int]:
    """Positions where the partition strictly drops with a part of the
    unconstrained parity (odd parts for so, even parts for sp)."""
    return frozenset(
        j
        for j in range(1, len(d) + 1)
        if d.part(j) > d.part(j + 1) and d.part(j) % 2 == (ctx.epsilon + 1) % 2
    )


def compute_u(ctx: HesselinkContext, d: Partition, q: int) -> Fraction:
    """Exact degree exponent: half of (-1)^epsilon times (#odd parts - q).

    Kept as a rational on purpose; it is converted to an integer exponent
    only after validation, so a convention error can never be silently
    truncated away.
    """
    n_odd = sum(1 for p in d if p % 2 == 1)
    sign = -1 if ctx.epsilon == 1 else 1
    return Fraction(sign * (n_odd - q), 2)


def N_P(ctx: HesselinkContext, d: Partition, q: int) -> int:
    """Collapsing degree of the polarization attached to (d, q).

    2^u in general, 2^(u-1) when q = epsilon = 0 with a strict drop at an
    odd part.  Defined only on the image of the Spaltenstein map; raises
    NonIntegralExponent if the exponent fails to be a non-negative integer
    (empirically impossible for valid classical data, kept as a guard).
    """
    if not in_image_Sq(ctx, d, q):
        raise NotInImage(f"{d} is not in the image of the Spaltenstein map at q = {q}")
    u = compute_u(ctx, d, q)
    if q + ctx.epsilon >= 1 or not compute_B(ctx, d):
        exponent = u
    else:
        exponent = u - 1
    if exponent.denominator != 1 or exponent < 0:
        raise NonIntegralExponent(
            f"degree exponent {exponent} for d = {d}, q = {q}, epsilon = {ctx.epsilon}"
        )
    return 2 ** int(exponent)


@dataclass(frozen=True)
class PolarizationWitness:
    """An admissible q passing the image test, with its collapsing degree."""

    q: int
    N_P: int


@dataclass(frozen=True)
class PolarizabilityResult:
    polarizable: bool
    witnesses: tuple[PolarizationWitness, ...]


def polarizable(orbit: ClassicalOrbit) -> PolarizabilityResult:
    """All admissible q in 0..m passing the image test, with degrees.

    Every sl orbit is polarizable; the result for sl carries no witnesses
    since the q-machinery does not apply there.
    """
    if orbit.family is Family.SL:
        return PolarizabilityResult(polarizable=True, witnesses=())
    ctx = HesselinkContext.for_orbit(orbit)
    d = orbit.partition
    witnesses = tuple(
        PolarizationWitness(q, N_P(ctx, d, q))
        for q in range(ctx.m + 1)
        if is_admissible(ctx, q) and in_image_Sq(ctx, d, q)
    )
    return PolarizabilityResult(polarizable=bool(witnesses), witnesses=witnesses)


def resolution_by_search(orbit: ClassicalOrbit) -> bool:
    """Search verdict: some polarization collapses with degree 1."""
    if orbit.family is Family.SL:
        raise WrongFamily("the search route applies to sp and so orbits only")
    return any(w.N_P == 1 for w in polarizable(orbit).witnesses)


@dataclass(frozen=True)
class HesselinkReport:
    """Everything the image test and degree formula saw for one q."""

    q: int
    J: tuple[int, ...]
    j1: int | float
    j0: int | float
    B: tuple[int, ...]
    u: Fraction
    in_image: bool
    N_P: int | None

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "J": list(self.J),
            "j1": _sentinel_json(self.j1),
            "j0": _sentinel_json(self.j0),
            "B": list(self.B),
            "u": str(self.u),
            "in_image": self.in_image,
            "N_P": self.N_P,
        }


def _sentinel_json(value: int | float) -> int | str:
    if value == NEG_INF:
        return "-inf"
    if value == POS_INF:
        return "+inf"
    return int(value)


def hesselink_report(ctx: HesselinkContext, d: Partition, q: int) -> HesselinkReport:
    """Assemble the per-q record; q must be admissible."""
    if not is_admissible(ctx, q):
        raise InadmissibleQ(f"q = {q} is not admissible for m = {ctx.m}")
    j1, j0 = compute_j1_j0(ctx, d)
    in_image = in_image_Sq(ctx, d, q)
    return HesselinkReport(
        q=q,
        J=tuple(sorted(compute_J(ctx, d))),
        j1=j1,
        j0=j0,
        B=tuple(sorted(compute_B(ctx, d))),
        u=compute_u(ctx, d, q),
        in_image=in_image,
        N_P=N_P(ctx, d, q) if in_image else None,
    )


def admissible_reports(orbit: ClassicalOrbit) -> tuple[HesselinkReport, ...]:
    """Reports for every admissible q in 0..m; empty for sl orbits."""
    if orbit.family is Family.SL:
        return ()
    ctx = HesselinkContext.for_orbit(orbit)
    return tuple(
        hesselink_report(ctx, orbit.partition, q)
        for q in range(ctx.m + 1)
        if is_admissible(ctx, q)
    )
