"""Quasisymmetric expansions and exact linear algebra.

Generating functions live in one of two bases:

* QSymF — fundamental basis F_D, keyed by descent sets (degree n);
* QSymG — peak basis G_P, keyed by peak sets (degree n).

Schur, Schur-P and Schur-Q functions are produced as F-expansions (or
G-expansions for P) by enumerating the relevant tableaux.  Expanding an
arbitrary F-vector back into Schur functions, or a G-vector into P's, is an
exact integer linear solve; failures return NotSymmetric / NotInSpan reports
carrying a witness key, they never raise.

All arithmetic is int/Fraction.  No floats anywhere.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .core import (
    InternalInvariantError,
    is_peak_set,
    parse_partition,
    partition_str,
    partitions_of,
    peak_of,
    peak_sets,
    spike_of,
    strict_partitions_of,
    subset_str,
)
from .tableaux import (
    descent_set_tab,
    enumerate_shssyt,
    enumerate_shsyt,
    enumerate_signed_standard,
    enumerate_ssyt,
    enumerate_syt,
    monomial_weight,
)


def _clean(coeffs):
    return {frozenset(k): v for k, v in coeffs.items() if v != 0}


@dataclass(frozen=True, eq=False)
class QSymF:
    """An integer combination of fundamental quasisymmetric functions F_D."""

    n: int
    coeffs: dict

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _clean(self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, QSymF)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("degree mismatch")
        total = Counter(self.coeffs)
        total.update(other.coeffs)
        return QSymF(self.n, total)

    def scaled(self, c):
        return QSymF(self.n, {k: c * v for k, v in self.coeffs.items()})

    def terms(self):
        """(key, coeff) pairs sorted by key size then lexicographically."""
        return sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))

    def render(self):
        return [f"{c} F{subset_str(k)}" for k, c in self.terms()]


@dataclass(frozen=True, eq=False)
class QSymG:
    """An integer combination of peak quasisymmetric functions G_P."""

    n: int
    coeffs: dict

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _clean(self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, QSymG)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("degree mismatch")
        total = Counter(self.coeffs)
        total.update(other.coeffs)
        return QSymG(self.n, total)

    def scaled(self, c):
        return QSymG(self.n, {k: c * v for k, v in self.coeffs.items()})

    def terms(self):
        return sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))

    def render(self):
        return [f"{c} G{subset_str(k)}" for k, c in self.terms()]


@dataclass(frozen=True)
class SchurExpansion:
    n: int
    coeffs: dict  # partition -> int (Fraction if non-integral)

    def terms(self):
        """(shape, coeff) pairs, shapes in decreasing lexicographic order."""
        return sorted(self.coeffs.items(), key=lambda kv: kv[0], reverse=True)

    def is_nonnegative_integral(self):
        return all(isinstance(c, int) and c >= 0 for c in self.coeffs.values())

    def unit_shape(self):
        """The unique shape when the expansion is a single coefficient-1 term."""
        if len(self.coeffs) == 1:
            (shape, c), = self.coeffs.items()
            if c == 1:
                return shape
        return None

    def render(self, letter="s"):
        return [f"{c} {letter}{partition_str(sh)}" for sh, c in self.terms()]


@dataclass(frozen=True)
class PExpansion(SchurExpansion):
    def render(self, letter="P"):
        return super().render(letter)


@dataclass(frozen=True)
class NotSymmetric:
    """Residual witness: the F-vector is not in the span of Schur functions."""

    witness: frozenset
    residual: object


@dataclass(frozen=True)
class NotInSpan:
    """Residual witness: the G-vector is not in the span of Schur-P functions."""

    witness: frozenset
    residual: object


@lru_cache(maxsize=None)
def descent_subsets(n):
    """All subsets of {1..n-1}, ordered by size then lexicographically."""
    universe = range(1, n)
    out = [frozenset(c) for k in range(n) for c in combinations(universe, k)]
    out.sort(key=lambda s: (len(s), sorted(s)))
    return tuple(out)


class ExactLinearSolver:
    """Solve A x = rhs exactly for many right-hand sides.

    Forward elimination is fraction-free (Bareiss): every intermediate entry
    is an integer and each division is exact.  The row operations are
    recorded once and replayed on each right-hand side, so repeated solves
    against the same matrix are cheap.  The matrix must have full column
    rank; inconsistent systems are reported via the key of a zero row whose
    transformed right-hand side is nonzero.
    """

    def __init__(self, rows, row_keys, col_keys):
        self.row_keys = list(row_keys)
        self.col_keys = list(col_keys)
        m = [list(r) for r in rows]
        nrows, ncols = len(m), len(self.col_keys)
        ops = []
        pivots = []  # (row, col) positions of the pivots
        prev = 1
        pr = 0
        for pc in range(ncols):
            sel = next((r for r in range(pr, nrows) if m[r][pc] != 0), None)
            if sel is None:
                continue
            if sel != pr:
                m[sel], m[pr] = m[pr], m[sel]
                ops.append(("swap", sel, pr))
            piv = m[pr][pc]
            facs = []
            for r in range(pr + 1, nrows):
                fac = m[r][pc]
                for c in range(ncols):
                    m[r][c] = (piv * m[r][c] - fac * m[pr][c]) // prev
                facs.append(fac)
            ops.append(("elim", pr, piv, prev, facs))
            pivots.append((pr, pc))
            prev = piv
            pr += 1
        if len(pivots) != ncols:
            raise ValueError("matrix does not have full column rank")
        for r in range(pr, nrows):
            if any(m[r][c] != 0 for c in range(ncols)):
                raise InternalInvariantError("nonzero entries below the pivot rows")
        self._m = m
        self._ops = ops
        self._pivots = pivots
        keys = list(self.row_keys)
        for op in ops:
            if op[0] == "swap":
                _, a, b_ = op
                keys[a], keys[b_] = keys[b_], keys[a]
        self._permuted_keys = keys

    def solve(self, rhs_map):
        """Return ({col_key: Fraction}, None) or (None, (row_key, residual))."""
        b = [rhs_map.get(k, 0) for k in self.row_keys]
        for op in self._ops:
            if op[0] == "swap":
                _, r1, r2 = op
                b[r1], b[r2] = b[r2], b[r1]
            else:
                _, pr, piv, prev, facs = op
                for off, fac in enumerate(facs):
                    r = pr + 1 + off
                    b[r] = (piv * b[r] - fac * b[pr]) // prev
        rank = len(self._pivots)
        for r in range(rank, len(b)):
            if b[r] != 0:
                return None, (self._permuted_keys[r], b[r])
        x = {}
        for pr, pc in reversed(self._pivots):
            acc = Fraction(b[pr])
            for pr2, pc2 in self._pivots:
                if pc2 > pc:
                    acc -= self._m[pr][pc2] * x[self.col_keys[pc2]]
            x[self.col_keys[pc]] = acc / self._m[pr][pc]
        return x, None


def _as_int(c):
    return int(c) if isinstance(c, Fraction) and c.denominator == 1 else c


@lru_cache(maxsize=None)
def _schur_solver(n):
    cols = partitions_of(n)
    rows_keys = descent_subsets(n)
    counts = {lam: Counter(descent_set_tab(T) for T in enumerate_syt(lam)) for lam in cols}
    matrix = [[counts[lam].get(D, 0) for lam in cols] for D in rows_keys]
    return ExactLinearSolver(matrix, rows_keys, cols)


@lru_cache(maxsize=None)
def _p_solver(n):
    cols = strict_partitions_of(n)
    rows_keys = peak_sets(n)
    counts = {lam: P_in_G(lam).coeffs for lam in cols}
    matrix = [[counts[lam].get(P, 0) for lam in cols] for P in rows_keys]
    return ExactLinearSolver(matrix, rows_keys, cols)


def expand_in_schur(f: QSymF):
    """Expand an F-vector in Schur functions, or report NotSymmetric."""
    solution, bad = _schur_solver(f.n).solve(f.coeffs)
    if bad is not None:
        return NotSymmetric(witness=bad[0], residual=bad[1])
    coeffs = {lam: _as_int(c) for lam, c in solution.items() if c != 0}
    return SchurExpansion(f.n, coeffs)


def expand_in_P(g: QSymG):
    """Expand a G-vector in Schur-P functions, or report NotInSpan."""
    for key in g.coeffs:
        if not is_peak_set(key, g.n):
            return NotInSpan(witness=key, residual=g.coeffs[key])
    solution, bad = _p_solver(g.n).solve(g.coeffs)
    if bad is not None:
        return NotInSpan(witness=bad[0], residual=bad[1])
    coeffs = {lam: _as_int(c) for lam, c in solution.items() if c != 0}
    return PExpansion(g.n, coeffs)


def schur_in_F(shape) -> QSymF:
    """Schur function s_shape as a sum of F_D over standard Young tableaux."""
    tabs = enumerate_syt(shape)
    return QSymF(sum(shape), Counter(descent_set_tab(T) for T in tabs))


def P_in_F(shape) -> QSymF:
    """Schur-P function as a sum of F_D over signed standard shifted tableaux
    with unprimed diagonal."""
    tabs = enumerate_signed_standard(shape, False)
    return QSymF(sum(shape), Counter(descent_set_tab(T) for T in tabs))


def Q_in_F(shape) -> QSymF:
    """Schur-Q function: 2^length * P, cross-checked against the direct
    enumeration with primed diagonals allowed."""
    scaled = P_in_F(shape).scaled(2 ** len(tuple(shape)))
    direct = QSymF(
        sum(shape),
        Counter(descent_set_tab(T) for T in enumerate_signed_standard(shape, True)),
    )
    if scaled != direct:
        raise InternalInvariantError(
            f"Q_in_F routes disagree for shape {tuple(shape)}"
        )
    return scaled


def P_in_G(shape) -> QSymG:
    """Schur-P function as a sum of G at the peak sets of standard shifted
    tableaux.

    A tableau T of an l-row shape contributes with multiplicity
    2^(|Peak(T)|+1-l): its 2^(n-l) signed variants (unprimed diagonal) have
    descent sets that cover the 2^(n-1-|Peak(T)|) sets whose spike set
    contains Peak(T) that many times each.  The multiplicity is 1 exactly
    when |Peak(T)| = l-1, the minimum over the shape."""
    shape = tuple(shape)
    ell = len(shape)
    acc = Counter()
    for T in enumerate_shsyt(shape):
        P = peak_of(descent_set_tab(T))
        acc[P] += 2 ** (len(P) + 1 - ell)
    return QSymG(sum(shape), acc)


@lru_cache(maxsize=None)
def _spike_table(n):
    return tuple((D, spike_of(D, n)) for D in descent_subsets(n))


def G_to_F(g: QSymG) -> QSymF:
    """Rewrite a G-vector in the F basis: G_P = sum of F_D over descent sets
    D of the same degree whose spike set contains P."""
    acc = Counter()
    for D, spike in _spike_table(g.n):
        for P, c in g.coeffs.items():
            if P <= spike:
                acc[D] += c
    return QSymF(g.n, acc)


def F_specialize(D, n, k):
    """The fundamental quasisymmetric polynomial F_D(x_1..x_k) of degree n.

    Sums x_{i_1}...x_{i_n} over weakly increasing sequences in {1..k} that
    rise strictly at each position in D.  Returns {exponent tuple: coeff}.
    """
    if any(not 1 <= d <= n - 1 for d in D):
        raise ValueError(f"descent set {sorted(D)} out of range for degree {n}")
    if k < 0:
        raise ValueError("number of variables must be nonnegative")
    poly = Counter()
    expts = [0] * k

    def walk(pos, var):
        if pos > n:
            poly[tuple(expts)] += 1
            return
        lo = var + 1 if pos - 1 in D else var
        for v in range(max(lo, 1), k + 1):
            expts[v - 1] += 1
            walk(pos + 1, v)
            expts[v - 1] -= 1

    walk(1, 0)
    return dict(poly)


def qsymf_specialize(f: QSymF, k):
    """Evaluate an F-vector as a polynomial in x_1..x_k."""
    poly = Counter()
    for D, c in f.coeffs.items():
        for mono, cnt in F_specialize(D, f.n, k).items():
            poly[mono] += c * cnt
    return {m: c for m, c in poly.items() if c != 0}


def monomial_series(kind, shape, k):
    """Degree-n polynomial in x_1..x_k by direct tableau enumeration.

    kind "s": straight semistandard tableaux; "Q": shifted semistandard with
    primed diagonals allowed; "P": shifted semistandard, unprimed diagonal.
    """
    if kind == "s":
        tabs = enumerate_ssyt(shape, k)
    elif kind == "Q":
        tabs = enumerate_shssyt(shape, k, True)
    elif kind == "P":
        tabs = enumerate_shssyt(shape, k, False)
    else:
        raise ValueError(f"unknown series kind: {kind!r}")
    poly = Counter()
    for T in tabs:
        w = monomial_weight(T)
        poly[w + (0,) * (k - len(w))] += 1
    return dict(poly)


def poly_render(poly):
    """Render {exponents: coeff} as lines, exponent vectors in decreasing
    lexicographic order: "2 x1^2 x2"."""
    lines = []
    for mono in sorted(poly, reverse=True):
        parts = [
            f"x{i}" if e == 1 else f"x{i}^{e}"
            for i, e in enumerate(mono, 1)
            if e > 0
        ]
        lines.append(f"{poly[mono]} " + (" ".join(parts) if parts else "1"))
    return lines


def parse_expansion(text, n=None):
    """Parse expansion term lines back into a vector.

    Lines look like "2 F{1,3}", "1 G{2}", "1 s[3,1]", "3 P[4,2,1]".  All
    lines must use the same basis letter.  F/G vectors need the degree n
    (subsets do not determine it); s/P vectors infer it from the shapes.
    """
    kinds = set()
    entries = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        coeff_tok, _, key_tok = line.partition(" ")
        coeff = int(coeff_tok)
        key_tok = key_tok.strip()
        letter, body = key_tok[0], key_tok[1:]
        kinds.add(letter)
        if letter in ("F", "G"):
            if not (body.startswith("{") and body.endswith("}")):
                raise ValueError(f"malformed term: {line!r}")
            inner = body[1:-1]
            key = frozenset(int(t) for t in inner.split(",")) if inner else frozenset()
        elif letter in ("s", "P"):
            key = parse_partition(body)
        else:
            raise ValueError(f"unknown basis letter in {line!r}")
        entries.append((key, coeff))
    if len(kinds) != 1:
        raise ValueError("expected exactly one basis letter")
    letter = kinds.pop()
    coeffs = {}
    for key, coeff in entries:
        coeffs[key] = coeffs.get(key, 0) + coeff
    if letter in ("F", "G"):
        if n is None:
            raise ValueError("degree n is required for F/G expansions")
        return QSymF(n, coeffs) if letter == "F" else QSymG(n, coeffs)
    degrees = {sum(sh) for sh in coeffs}
    if len(degrees) != 1:
        raise ValueError("mixed degrees in expansion")
    cls = SchurExpansion if letter == "s" else PExpansion
    return cls(degrees.pop(), coeffs)
