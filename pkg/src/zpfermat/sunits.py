"""
Bounded search for solutions of lambda + mu = 1 in units and {2}-units.

The search box is every numerator alpha with power-basis coordinates in
[-H, H] and every denominator 2^s, s <= t.  A pair (lambda, mu) is reported
when lambda or mu lies in the box, so the output is closed under swapping.

Candidates are screened by their norm modulo a prime ell that splits
completely in the field: with f(r_i) = 0 mod ell,

    N(alpha) = prod_i alpha(r_i)   (mod ell),

which is evaluated vectorised over a whole sub-box at once.  A unit must
have norm = +-1, an S-unit norm = +-2^k with k below an explicit bound, so
the screen never discards a genuine solution.  Survivors are confirmed with
exact resultants.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .numfield import FieldElement, ord_at_q, is_s_unit, _numerator_norm
from .primes import isprime

log = logging.getLogger(__name__)

__all__ = [
    "SearchConfig",
    "SUnitSolution",
    "SearchResult",
    "ConditionReport",
    "enumerate_unit_solutions",
    "enumerate_sunit_solutions",
    "classify_solution",
    "check_theorem4_conditions",
    "symmetry_orbit",
]

CLASSES = ("i", "ii", "iii", "unit-unit", "other")

# sub-boxes hold at most this many candidates
_CHUNK = 1 << 18


@dataclass(frozen=True)
class SearchConfig:
    height: int
    denom: int = 1

    def __post_init__(self):
        if self.height < 1:
            raise ValueError("height bound must be >= 1")
        if self.denom < 0:
            raise ValueError("denominator exponent bound must be >= 0")


@dataclass(frozen=True)
class SUnitSolution:
    lam: FieldElement
    mu: FieldElement
    ord_lambda: int = 0
    ord_mu: int = 0
    lemma9_class: str = "unit-unit"

    def key(self):
        return (self.lam.key(), self.mu.key())

    def __str__(self):
        return "(%s, %s)" % (self.lam, self.mu)


@dataclass
class SearchResult:
    """Solutions in lexicographic order: everything found in the box, closed
    under the six-element symmetry group.

    ``escaped`` lists the orbit members that lie outside the box; a nonempty
    list means the box cuts orbits.  Every entry is verified exactly.
    """

    solutions: list
    escaped: list = field(default_factory=list)
    candidates: int = 0

    def __iter__(self):
        return iter(self.solutions)

    def __len__(self):
        return len(self.solutions)

    def __getitem__(self, i):
        return self.solutions[i]

    @property
    def in_box(self):
        esc = {e.key() for e in self.escaped}
        return [s for s in self.solutions if s.key() not in esc]


# -- screening ----------------------------------------------------------------


class _SplitPrimeScreen:
    """Evaluation of numerators at the d roots of f modulo a split prime."""

    def __init__(self, K, start=20000):
        self.field = K
        d = K.degree
        f = [int(c) for c in K.poly]
        ell = start
        tries = 0
        while True:
            ell += 1
            if not isprime(ell) or K.disc % ell == 0:
                continue
            tries += 1
            if tries > 5000:
                raise RuntimeError("no completely split prime found above %d" % start)
            roots = _roots_mod(f, ell)
            if len(roots) == d:
                break
        self.ell = ell
        self.roots = roots
        # powers[i, j] = r_i^j mod ell
        self.powers = np.array(
            [[pow(int(r), j, ell) for j in range(d)] for r in roots], dtype=np.int64
        )
        log.debug("screen prime %d for %s", ell, K.poly)

    def allowed_table(self, max_two_power):
        """Boolean table of residues +-2^k mod ell, 0 <= k <= max_two_power."""
        ell = self.ell
        table = np.zeros(ell, dtype=bool)
        x = 1
        for _ in range(max_two_power + 1):
            table[x] = True
            table[(-x) % ell] = True
            x = x * 2 % ell
        return table


def _roots_mod(f, ell):
    xs = np.arange(ell, dtype=np.int64)
    acc = np.zeros(ell, dtype=np.int64)
    for c in reversed(f):
        acc = (acc * xs + c) % ell
    return np.flatnonzero(acc == 0)


def _norm_bound_bits(K, coord_bound):
    """Upper bound on log2 |N(alpha)| over numerators with coordinates
    bounded by ``coord_bound``."""
    roots = np.roots([float(c) for c in reversed(K.poly)])
    total = 0.0
    for r in roots:
        s = sum(abs(r) ** j for j in range(K.degree))
        total += math.log2(coord_bound * s * 1.01 + 1e-300)
    return max(0, int(math.ceil(total)) + 1)


def _group_size(ell):
    # residue (< ell) times g unreduced values (< 2 ell) must fit in uint64
    g = 1
    while (ell - 1) * (2 * ell - 1) ** (g + 1) < 2**64:
        g += 1
    return g


def _norms_mod(vals, ell, g):
    """prod over rows of ``vals`` (entries < 2 ell) modulo ell."""
    d = vals.shape[0]
    acc = vals[0] % ell
    i = 1
    while i < d:
        for row in vals[i : i + g]:
            acc = acc * row
        acc %= ell
        i += g
    return acc


def _scan_box(K, H, s, screen, table_lam, table_mu, stats):
    """Yield coordinate tuples alpha in [-H, H]^d surviving the norm screen
    for both alpha and 2^s - alpha."""
    d = K.degree
    ell = screen.ell
    P = screen.powers.astype(np.uint64)
    g = _group_size(ell)
    side = 2 * H + 1
    k = 1
    while k < d and side ** (k + 1) <= _CHUNK:
        k += 1
    grid = np.indices((side,) * k, dtype=np.int64).reshape(k, -1) - H
    # coordinate j varies fastest for j = 0
    grid = grid[::-1]
    inner = (P[:, :k] @ (grid % ell).astype(np.uint64)) % ell  # shape (d, M)
    two_s = pow(2, s, ell)
    for outer in itertools.product(range(-H, H + 1), repeat=d - k):
        if outer:
            base = (P[:, k:] @ (np.array(outer, dtype=np.int64) % ell).astype(np.uint64)) % ell
        else:
            base = np.zeros(d, dtype=np.uint64)
        vals = inner + base[:, None]
        ok = table_lam[_norms_mod(vals, ell, g)]
        stats["scanned"] += vals.shape[1]
        idx = np.flatnonzero(ok)
        if idx.size == 0:
            continue
        sub = (two_s + 2 * ell - vals[:, idx]) % ell
        idx = idx[table_mu[_norms_mod(sub, ell, g)]]
        for j in idx:
            yield tuple(int(x) for x in grid[:, j]) + tuple(outer)


def _box_search(K, H, t, table_bits, ctx=None):
    screen = _SplitPrimeScreen(K)
    tables = screen.allowed_table(table_bits)
    found = {}
    stats = {"scanned": 0}
    for s in range(t + 1):
        two_s = 1 << s
        for alpha in _scan_box(K, H, s, screen, tables, tables, stats):
            if s and all(c % 2 == 0 for c in alpha):
                continue
            lam = FieldElement._normalized(K, list(alpha), s)
            mu = K.one - lam
            if lam.is_zero() or mu.is_zero():
                continue
            if not (_is_two_power(_numerator_norm(lam)) and _is_two_power(_numerator_norm(mu))):
                continue
            if ctx is None and not (lam.is_integral() and abs(_numerator_norm(lam)) == 1 and abs(_numerator_norm(mu)) == 1):
                continue
            for a, b in ((lam, mu), (mu, lam)):
                found[(a.key(), b.key())] = (a, b)
    return found, stats["scanned"]


def _is_two_power(n):
    n = abs(n)
    return n != 0 and n & (n - 1) == 0


def _make_solution(lam, mu, ctx):
    if ctx is None:
        return SUnitSolution(lam, mu, 0, 0, "unit-unit")
    ol, om = ord_at_q(ctx, lam), ord_at_q(ctx, mu)
    sol = SUnitSolution(lam, mu, ol, om, "other")
    return SUnitSolution(lam, mu, ol, om, classify_solution(sol))


def _in_box(sol, H, t):
    lam, mu = sol.lam, sol.mu
    return lam.denom_exp <= t and min(lam.height(), mu.height()) <= H


def symmetry_orbit(lam, mu):
    """The orbit of (lambda, mu) under the group generated by the swap and
    (lambda, mu) -> (1/lambda, -mu/lambda)."""
    pairs = [(lam, mu)]
    seen = {(lam.key(), mu.key())}
    i = 0
    while i < len(pairs):
        a, b = pairs[i]
        i += 1
        for c, e in ((b, a), (1 / a, -b / a)):
            k = (c.key(), e.key())
            if k not in seen:
                seen.add(k)
                pairs.append((c, e))
    return pairs


def _finish(found, H, t, ctx, scanned):
    boxed = [_make_solution(a, b, ctx) for a, b in found.values()]
    have = {s.key() for s in boxed}
    escaped = {}
    for s in boxed:
        for a, b in symmetry_orbit(s.lam, s.mu):
            k = (a.key(), b.key())
            if k in have or k in escaped:
                continue
            escaped[k] = _make_solution(a, b, ctx)
    for e in escaped.values():
        if _in_box(e, H, t):
            # the box scan is exhaustive, so this would be a screening bug
            raise AssertionError("orbit member %s inside the box was missed" % (e,))
    sols = sorted(boxed + list(escaped.values()), key=lambda s: s.key())
    esc = sorted(escaped.values(), key=lambda s: s.key())
    return SearchResult(sols, esc, scanned)


def enumerate_unit_solutions(K, H):
    """All solutions of lambda + mu = 1 in units of Z[theta] with lambda or
    mu of height <= H."""
    if K.degree < 2:
        raise ValueError("field degree must be >= 2")
    found, scanned = _box_search(K, H, 0, 0, ctx=None)
    return _finish(found, H, 0, None, scanned)


def enumerate_sunit_solutions(K, ctx, config):
    """All solutions of lambda + mu = 1 in {2}-units with lambda or mu in the
    box (numerator height <= H, denominator 2^s with s <= t)."""
    if ctx.field != K:
        raise ValueError("context belongs to a different field")
    H, t = config.height, config.denom
    bits = _norm_bound_bits(K, H + (1 << t))
    found, scanned = _box_search(K, H, t, bits, ctx=ctx)
    res = _finish(found, H, t, ctx, scanned)
    for s in res.solutions:
        assert is_s_unit(ctx, s.lam) and is_s_unit(ctx, s.mu)
    return res


def classify_solution(sol):
    """Class of a solution by its 2-adic orders: i, ii, iii, unit-unit, other."""
    pair = (sol.ord_lambda, sol.ord_mu)
    return {(1, 0): "i", (0, 1): "ii", (-1, -1): "iii", (0, 0): "unit-unit"}.get(pair, "other")


@dataclass(frozen=True)
class ConditionReport:
    solution: SUnitSolution
    max_abs_ord: int
    ord_sum_mod3: int

    @property
    def passes(self):
        return self.max_abs_ord <= 4 and self.ord_sum_mod3 == 1


def check_theorem4_conditions(solutions):
    """Check max(|ord lambda|, |ord mu|) <= 4 and ord(lambda mu) = 1 mod 3
    for every solution.  Returns ``(reports, all_pass)``."""
    reports = [
        ConditionReport(s, max(abs(s.ord_lambda), abs(s.ord_mu)), (s.ord_lambda + s.ord_mu) % 3)
        for s in solutions
    ]
    return reports, all(r.passes for r in reports)
