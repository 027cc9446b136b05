"""Exact combinatorics of balanced operator sets.

Everything here is integer or rational arithmetic: slice counts, the
balanced decision, the sign-flip bijection between opposite-sign slices,
and the round-robin style pairing matrix that yields a minimal balanced
set of (2n-1) * 2^(n-1) operators.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .operators import OperatorSet, SignedInvolution, sign_assignments


@dataclass(frozen=True)
class PairingMatrix:
    """Symmetric zero-diagonal matrix whose rows permute {0..2n-1}.

    Row i holds, for each column j, the label of the pairing that matches
    coordinates i and j.  Built by :func:`build_pairing_matrix`; arbitrary
    entries are accepted at construction so invalid matrices can be fed to
    :func:`extract_pairings` for diagnosis.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return 2 * self.n

    def as_text(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)


@dataclass(frozen=True)
class PairingFamily:
    """2n-1 fixed-point-free involutions covering every index pair exactly once."""

    n: int
    pairings: tuple[tuple[int, ...], ...]


@dataclass
class BalanceReport:
    """Exact verdict on the two balance conditions, with every failing slice."""

    balanced: bool
    set_size: int
    # (p, q, observed count, required count as an exact rational)
    condition_i_failures: list[tuple[int, int, int, Fraction]] = field(default_factory=list)
    # (p, q, r, s, count at sign +1, count at sign -1)
    condition_ii_failures: list[tuple[int, int, int, int, int, int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "balanced": self.balanced,
            "set_size": self.set_size,
            "condition_i_failures": [
                {"p": p, "q": q, "observed": obs, "required": str(req)}
                for p, q, obs, req in self.condition_i_failures
            ],
            "condition_ii_failures": [
                {"p": p, "q": q, "r": r, "s": s, "count_plus": cp, "count_minus": cm}
                for p, q, r, s, cp, cm in self.condition_ii_failures
            ],
        }


def _check_index(d: int, name: str, value: int) -> None:
    if not 1 <= value <= d:
        raise ValueError(f"index {name}={value} out of range 1..{d}")


def count_pair_slice(a_set: OperatorSet, p: int, q: int) -> int:
    """Number of members whose pairing matches coordinate p with coordinate q."""
    d = a_set.dim
    _check_index(d, "p", p)
    _check_index(d, "q", q)
    if p == q:
        raise ValueError(f"p and q must differ, both are {p}")
    return sum(1 for u in a_set if u.pairing[p - 1] == q)


def count_sign_slice(a_set: OperatorSet, p: int, q: int, r: int, s: int, sign: int) -> int:
    """Number of members with sign[p]*sign[q] == sign and {k_r, k_s} == {p, q}."""
    d = a_set.dim
    if d < 4:
        raise ValueError("sign slices need four distinct indices, so dimension >= 4")
    for name, value in (("p", p), ("q", q), ("r", r), ("s", s)):
        _check_index(d, name, value)
    if len({p, q, r, s}) != 4:
        raise ValueError(f"indices must be distinct, got p={p} q={q} r={r} s={s}")
    if sign not in (-1, 1):
        raise ValueError(f"sign must be -1 or +1, got {sign!r}")
    return sum(
        1
        for u in a_set
        if u.signs[p - 1] * u.signs[q - 1] == sign
        and {u.pairing[r - 1], u.pairing[s - 1]} == {p, q}
    )


def is_balanced(a_set: OperatorSet) -> BalanceReport:
    """Decide balance exactly.

    Condition i requires every pair slice to hold exactly #A/(2n-1) members;
    the comparison is done as #A_{p,q} * (2n-1) == #A so a non-divisible set
    size fails automatically.  Condition ii compares the two sign slices of
    every four distinct indices; it is vacuous for n = 1.  Slices are
    canonicalized to p < q (and r < s), which loses nothing: pair slices are
    symmetric in (p, q) by involutivity and sign slices are symmetric in
    both (p, q) and (r, s).
    """
    if len(a_set) == 0:
        raise ValueError("balance is undefined for an empty operator set")
    d = a_set.dim
    size = len(a_set)

    pair_counts: Counter = Counter()
    sign_counts: Counter = Counter()
    for u in a_set:
        k = u.pairing
        e = u.signs
        for i, ki in enumerate(k, start=1):
            if i < ki:
                pair_counts[(i, ki)] += 1
        for r in range(1, d + 1):
            for s in range(r + 1, d + 1):
                kr, ks = k[r - 1], k[s - 1]
                if kr in (r, s) or ks in (r, s):
                    continue
                p, q = min(kr, ks), max(kr, ks)
                sign_counts[(p, q, r, s, e[p - 1] * e[q - 1])] += 1

    required = Fraction(size, d - 1)
    cond_i = [
        (p, q, pair_counts.get((p, q), 0), required)
        for p in range(1, d + 1)
        for q in range(p + 1, d + 1)
        if pair_counts.get((p, q), 0) * (d - 1) != size
    ]

    cond_ii = []
    if d >= 4:
        for p in range(1, d + 1):
            for q in range(p + 1, d + 1):
                for r in range(1, d + 1):
                    if r in (p, q):
                        continue
                    for s in range(r + 1, d + 1):
                        if s in (p, q):
                            continue
                        plus = sign_counts.get((p, q, r, s, 1), 0)
                        minus = sign_counts.get((p, q, r, s, -1), 0)
                        if plus != minus:
                            cond_ii.append((p, q, r, s, plus, minus))

    return BalanceReport(
        balanced=not cond_i and not cond_ii,
        set_size=size,
        condition_i_failures=cond_i,
        condition_ii_failures=cond_ii,
    )


def sign_flip_bijection(u: SignedInvolution, p: int) -> SignedInvolution:
    """Flip the signs of coordinate p and its partner, keeping the pairing.

    Restricted to the full operator set this is an involution that maps the
    sign slice at -1 onto the slice at +1, which is how the full set earns
    condition ii.
    """
    _check_index(u.dim, "p", p)
    kp = u.pairing[p - 1]
    signs = tuple(-s if i in (p, kp) else s for i, s in enumerate(u.signs, start=1))
    return SignedInvolution(u.pairing, signs)


def build_pairing_matrix(n: int) -> PairingMatrix:
    """The explicit symmetric scheduling matrix encoding 2n-1 pairings.

    Entry (i, j) with i, j < 2n is ((i+j-2) mod (2n-1)) + 1; the last row
    and column hold ((2i-2) mod (2n-1)) + 1, which runs over all labels
    because 2 and 2n-1 are coprime.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    d = 2 * n
    m = d - 1

    def entry(i: int, j: int) -> int:
        if i == j:
            return 0
        if i < d and j < d:
            return (i + j - 2) % m + 1
        if j == d:
            return (2 * i - 2) % m + 1
        return (2 * j - 2) % m + 1

    rows = tuple(tuple(entry(i, j) for j in range(1, d + 1)) for i in range(1, d + 1))
    return PairingMatrix(n, rows)


def validate_pairing_matrix(matrix: PairingMatrix) -> None:
    """Raise naming the violated invariant: shape, symmetry, diagonal, or rows."""
    d = 2 * matrix.n
    if len(matrix.rows) != d or any(len(row) != d for row in matrix.rows):
        raise ValueError(f"matrix is not {d}x{d}")
    for i in range(d):
        if matrix.rows[i][i] != 0:
            raise ValueError(f"diagonal entry ({i + 1},{i + 1}) is {matrix.rows[i][i]}, not 0")
    for i in range(d):
        for j in range(i + 1, d):
            if matrix.rows[i][j] != matrix.rows[j][i]:
                raise ValueError(
                    f"matrix is not symmetric at ({i + 1},{j + 1}): "
                    f"{matrix.rows[i][j]} != {matrix.rows[j][i]}"
                )
    for i, row in enumerate(matrix.rows, start=1):
        if sorted(row) != list(range(d)):
            raise ValueError(f"row {i} is not a permutation of 0..{d - 1}")


def extract_pairings(matrix: PairingMatrix) -> PairingFamily:
    """Read the pairing family off the matrix: label j pairs i with the column
    of row i whose entry is j."""
    validate_pairing_matrix(matrix)
    d = 2 * matrix.n
    # column of each label per row, so extraction is one scan per row
    position = [{value: col + 1 for col, value in enumerate(row)} for row in matrix.rows]
    pairings = tuple(
        tuple(position[i][label] for i in range(d)) for label in range(1, d)
    )
    family = PairingFamily(matrix.n, pairings)
    _validate_family(family)
    return family


def _validate_family(family: PairingFamily) -> None:
    d = 2 * family.n
    for idx, k in enumerate(family.pairings, start=1):
        for i in range(1, d + 1):
            if k[i - 1] == i:
                raise ValueError(f"pairing {idx} fixes position {i}")
            if k[k[i - 1] - 1] != i:
                raise ValueError(f"pairing {idx} is not an involution at position {i}")
    seen: dict[tuple[int, int], int] = {}
    for idx, k in enumerate(family.pairings, start=1):
        for i in range(1, d + 1):
            if i < k[i - 1]:
                pair = (i, k[i - 1])
                if pair in seen:
                    raise ValueError(
                        f"pair {pair} is matched by pairings {seen[pair]} and {idx}"
                    )
                seen[pair] = idx
    expected = {(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)}
    missing = expected - set(seen)
    if missing:
        raise ValueError(f"pair {min(missing)} is matched by no pairing")
    for i in range(d):
        values = [k[i] for k in family.pairings]
        if len(set(values)) != len(values):
            dup = next(v for v in values if values.count(v) > 1)
            agreeing = [j + 1 for j, v in enumerate(values) if v == dup]
            raise ValueError(
                f"pairings {agreeing[0]} and {agreeing[1]} agree at position {i + 1}"
            )


def build_minimal_balanced(n: int) -> OperatorSet:
    """The balanced set of (2n-1) * 2^(n-1) operators from the pairing matrix.

    Each of the 2n-1 pairings is combined with every antisymmetric sign
    sequence pinned to +1 at coordinate 1; free signs are enumerated in
    binary-counting order with +1 first, so the output is reproducible.
    """
    family = extract_pairings(build_pairing_matrix(n))
    members = [
        SignedInvolution(pairing, signs)
        for pairing in family.pairings
        for signs in sign_assignments(pairing, fix_first=True)
    ]
    return OperatorSet(2 * n, tuple(members))
