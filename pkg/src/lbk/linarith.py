"""Exact linear feasibility over the ordered scalars.

Systems have rational coefficients and :class:`~lbk.lexq.LambdaScalar`
bounds; the unknowns range over the scalar group itself.  Because that group
is a densely ordered Q-vector space, Fourier-Motzkin elimination is a
complete decision procedure: a system is satisfiable iff the eliminated
system has no contradictory constant row, and a witness can be rebuilt by
back-substitution.

Witness extraction, per interval shape:

* two-sided interval -> midpoint (or the shared endpoint when degenerate),
* lower bound only   -> bound + 1,
* upper bound only   -> bound - 1,
* free               -> 0.

A second mode ("low") prefers the attained lower endpoint; sector searches
use it so the translates they return are minimal rather than interior.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .lexq import LambdaScalar, Rational

GE = ">="
GT = ">"
EQ = "="

_RELATIONS = (GE, GT, EQ)


@dataclass(frozen=True)
class LinearConstraint:
    """sum_j coeffs[j] * x_j  <relation>  bound."""

    coeffs: tuple[Fraction, ...]
    relation: str
    bound: LambdaScalar

    def __post_init__(self) -> None:
        if self.relation not in _RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def evaluate(self, point: Sequence[LambdaScalar]) -> bool:
        if len(point) != len(self.coeffs):
            raise ValueError("point arity does not match constraint")
        total = self.bound * 0
        for c, x in zip(self.coeffs, point):
            total = total + x * c
        if self.relation == GE:
            return total >= self.bound
        if self.relation == GT:
            return total > self.bound
        return total == self.bound

    def negations(self) -> tuple["LinearConstraint", ...]:
        """Constraints whose disjunction is the complement of this one."""
        neg = tuple(-c for c in self.coeffs)
        if self.relation == GE:
            return (LinearConstraint(neg, GT, -self.bound),)
        if self.relation == GT:
            return (LinearConstraint(neg, GE, -self.bound),)
        return (
            LinearConstraint(self.coeffs, GT, self.bound),
            LinearConstraint(neg, GT, -self.bound),
        )


def constraint(coeffs: Sequence[Rational], relation: str, bound: LambdaScalar) -> LinearConstraint:
    return LinearConstraint(tuple(Fraction(c) for c in coeffs), relation, bound)


@dataclass(frozen=True)
class ConstraintSystem:
    nvars: int
    constraints: tuple[LinearConstraint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "constraints", tuple(self.constraints))
        for c in self.constraints:
            if len(c.coeffs) != self.nvars:
                raise ValueError("constraint arity does not match system")

    def holds_at(self, point: Sequence[LambdaScalar]) -> bool:
        return all(c.evaluate(point) for c in self.constraints)


@dataclass(frozen=True)
class Feasibility:
    sat: bool
    witness: Optional[tuple[LambdaScalar, ...]]


# Internal rows all read "sum_j coeffs[j] x_j >= bound" (strict when flagged).
_Row = tuple[tuple[Fraction, ...], bool, LambdaScalar]


def _normalize(system: ConstraintSystem) -> list[_Row]:
    rows: list[_Row] = []
    for c in system.constraints:
        if c.relation == GE:
            rows.append((c.coeffs, False, c.bound))
        elif c.relation == GT:
            rows.append((c.coeffs, True, c.bound))
        else:
            rows.append((c.coeffs, False, c.bound))
            rows.append((tuple(-a for a in c.coeffs), False, -c.bound))
    return rows


def _constant_row_ok(row: _Row) -> bool:
    coeffs, strict, bound = row
    zero = bound * 0
    return zero > bound if strict else zero >= bound


def _combine(lower: _Row, upper: _Row, idx: int) -> _Row:
    """Eliminate column idx between a lower row (coeff > 0) and an upper one (< 0)."""
    c1 = lower[0][idx]
    c2 = upper[0][idx]
    coeffs = tuple(c1 * b - c2 * a for a, b in zip(lower[0], upper[0]))
    bound = lower[2] * (-c2) + upper[2] * c1
    return (coeffs, lower[1] or upper[1], bound)


def _eliminate_rows(rows: list[_Row], idx: int) -> tuple[list[_Row], list[_Row], list[_Row]]:
    """Split rows on the sign of column idx and return (kept, lowers, uppers).

    ``kept`` is the eliminated system: pass-through rows plus every
    lower/upper combination, deduplicated.
    """
    lowers: list[_Row] = []
    uppers: list[_Row] = []
    kept: list[_Row] = []
    for row in rows:
        c = row[0][idx]
        if c > 0:
            lowers.append(row)
        elif c < 0:
            uppers.append(row)
        else:
            kept.append(row)
    seen = set(kept)
    for lo in lowers:
        for up in uppers:
            combo = _combine(lo, up, idx)
            if combo not in seen:
                seen.add(combo)
                kept.append(combo)
    return kept, lowers, uppers


def _interval_pick(
    lo: Optional[tuple[LambdaScalar, bool]],
    hi: Optional[tuple[LambdaScalar, bool]],
    rank: int,
    mode: str,
) -> Optional[LambdaScalar]:
    one = LambdaScalar.one(rank)
    if lo is None and hi is None:
        return LambdaScalar.zero(rank)
    if hi is None:
        value, strict = lo
        if mode == "low" and not strict:
            return value
        return value + one
    if lo is None:
        return hi[0] - one
    (lval, lstrict), (uval, ustrict) = lo, hi
    if lval > uval:
        return None
    if lval == uval:
        if lstrict or ustrict:
            return None
        return lval
    if mode == "low" and not lstrict:
        return lval
    return (lval + uval) / 2


def _bounds_for(rows: list[_Row], idx: int, partial: dict[int, LambdaScalar], rank: int):
    """Lower/upper bounds on variable idx once later variables are known."""
    lo: Optional[tuple[LambdaScalar, bool]] = None
    hi: Optional[tuple[LambdaScalar, bool]] = None
    for coeffs, strict, bound in rows:
        c = coeffs[idx]
        rest = LambdaScalar.zero(rank)
        for j, a in enumerate(coeffs):
            if j != idx and a != 0:
                rest = rest + partial[j] * a
        limit = (bound - rest) / c
        if c > 0:
            if lo is None or limit > lo[0] or (limit == lo[0] and strict):
                lo = (limit, strict)
        else:
            if hi is None or limit < hi[0] or (limit == hi[0] and strict):
                hi = (limit, strict)
    return lo, hi


def feasible(
    system: ConstraintSystem,
    lex_rank: Optional[int] = None,
    witness_mode: str = "midpoint",
) -> Feasibility:
    """Decide satisfiability exactly; on SAT also return a checkable witness.

    ``lex_rank`` is only needed for systems with no constraints at all (the
    witness has to live somewhere); otherwise it is read off the bounds.
    """
    if lex_rank is None:
        lex_rank = system.constraints[0].bound.rank if system.constraints else 1
    rows = _normalize(system)
    stages: list[tuple[int, list[_Row]]] = []
    for idx in range(system.nvars - 1, -1, -1):
        active = [r for r in rows if r[0][idx] != 0]
        stages.append((idx, active))
        rows, _, _ = _eliminate_rows(rows, idx)
        for row in rows:
            if all(a == 0 for a in row[0]) and not _constant_row_ok(row):
                return Feasibility(False, None)
    for row in rows:
        if not _constant_row_ok(row):
            return Feasibility(False, None)

    partial: dict[int, LambdaScalar] = {}
    for idx, active in reversed(stages):
        lo, hi = _bounds_for(active, idx, partial, lex_rank)
        value = _interval_pick(lo, hi, lex_rank, witness_mode)
        if value is None:
            # Dense order: cannot happen once elimination succeeded.
            return Feasibility(False, None)
        partial[idx] = value
    witness = tuple(partial[i] for i in range(system.nvars))
    if not system.holds_at(witness):
        raise AssertionError("internal error: witness fails re-substitution")
    return Feasibility(True, witness)


def eliminate(system: ConstraintSystem, index: int) -> ConstraintSystem:
    """Project the solution set onto the variables other than ``index``."""
    if not 0 <= index < system.nvars:
        raise ValueError(f"variable index {index} out of range")
    rows, _, _ = _eliminate_rows(_normalize(system), index)
    out = []
    for coeffs, strict, bound in rows:
        reduced = tuple(c for j, c in enumerate(coeffs) if j != index)
        out.append(LinearConstraint(reduced, GT if strict else GE, bound))
    return ConstraintSystem(system.nvars - 1, tuple(dict.fromkeys(out)))


def project_interval(system: ConstraintSystem, index: int, lex_rank: Optional[int] = None):
    """Exact bounds of variable ``index`` over the solution set.

    Returns ``None`` when the system is infeasible, else a pair
    ``(lower, upper)`` where each side is ``None`` (unbounded) or a tuple
    ``(value, strict)``.
    """
    if lex_rank is None:
        lex_rank = system.constraints[0].bound.rank if system.constraints else 1
    rows = _normalize(system)
    for idx in range(system.nvars - 1, -1, -1):
        if idx == index:
            continue
        rows, _, _ = _eliminate_rows(rows, idx)
        for row in rows:
            if all(a == 0 for a in row[0]) and not _constant_row_ok(row):
                return None
    final = []
    for row in rows:
        if row[0][index] != 0:
            final.append(row)
        elif not _constant_row_ok(row):
            return None
    lo, hi = _bounds_for(final, index, {}, lex_rank)
    if lo is not None and hi is not None:
        if lo[0] > hi[0] or (lo[0] == hi[0] and (lo[1] or hi[1])):
            return None
    return lo, hi
