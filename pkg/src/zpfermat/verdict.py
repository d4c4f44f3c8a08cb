"""
Wieferich scanning, asymptotic-FLT verdicts for the layers Q_{n,p}, and the
evidence certifier for general p-extensions.

Every conclusion carries citation tags naming the result it rests on:

    thm:Z2       effective asymptotic FLT over every Q_{n,2}
    thm:Zp       effective asymptotic FLT over every Q_{n,p}, p >= 5 non-Wieferich
    thm:FS       S-unit criterion (2 inert, solutions with bounded 2-adic orders)
    lem:inertZp  q inert in Q_{n,p}  <=>  q^(p-1) != 1 mod p^2
    thm:general  p-extension, p totally ramified, 2 inert  =>  asymptotic FLT
    rem:open     p = 3 and Wieferich p are out of reach
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .arith import (
    distinct_degree_factor,
    modpow,
    poly_derivative,
    poly_discriminant,
    poly_eval,
    poly_shift,
    sturm_real_root_count,
    trim,
    v2,
)
from .errors import NotSquarefreeError
from .primes import isprime, primes_below, segmented_primes

__all__ = [
    "CITATIONS",
    "Verdict",
    "Check",
    "CertificateReport",
    "is_wieferich",
    "wieferich_scan",
    "asymptotic_flt_verdict",
    "certify_general_field",
    "galois_evidence",
    "eisenstein_shift",
    "two_adic_root",
]

CITATIONS = {
    "thm:Z2": "effective asymptotic FLT holds over every layer Q_{n,2} of the cyclotomic Z_2-extension",
    "thm:Zp": "effective asymptotic FLT holds over every layer Q_{n,p} for p >= 5 with 2^(p-1) != 1 mod p^2",
    "thm:FS": "asymptotic FLT over F follows when 2 is inert and every S-unit solution has bounded orders with ord(lambda mu) = 1 mod 3",
    "lem:inertZp": "q is inert in Q_{n,p} iff q^(p-1) != 1 mod p^2",
    "thm:general": "asymptotic FLT holds for a totally real p-extension F (p >= 5) with p totally ramified and 2 inert",
    "rem:open": "p = 3 and Wieferich p are out of reach: unit-equation solutions exist (p = 3) or 2 splits (Wieferich p)",
}

EFFECTIVE_HOLDS = "effective-holds"
HOLDS = "holds"
OPEN = "open"


def is_wieferich(p):
    """True iff 2^(p-1) = 1 mod p^2."""
    if p == 2:
        raise ValueError("p = 2 is excluded (2 is the base)")
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime, got %r" % (p,))
    return modpow(2, p - 1, p * p) == 1


def _wieferich_in(primes):
    out = []
    for p in primes.tolist():
        if p != 2 and pow(2, p - 1, p * p) == 1:
            out.append(p)
    return out


def _segment_job(bounds):
    lo, hi = bounds
    found = []
    for seg in segmented_primes(lo, hi):
        found.extend(_wieferich_in(seg))
    return found


def wieferich_scan(lo, hi, workers=1, segment=1 << 20):
    """All Wieferich primes in [lo, hi], ascending."""
    if lo < 2 or hi < lo:
        raise ValueError("need 2 <= lo <= hi")
    if workers <= 1:
        found = []
        for seg in segmented_primes(lo, hi, segment):
            found.extend(_wieferich_in(seg))
        return found
    step = max(segment, (hi - lo + workers) // workers)
    jobs = [(a, min(hi, a + step - 1)) for a in range(lo, hi + 1, step)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        parts = list(ex.map(_segment_job, jobs))
    return [p for part in parts for p in part]


@dataclass
class Verdict:
    p: int
    n: int
    status: str
    reasons: list = field(default_factory=list)

    @property
    def citations(self):
        return [tag for tag, _ in self.reasons]

    def to_dict(self):
        return {
            "p": self.p,
            "n": self.n,
            "status": self.status,
            "reasons": [{"citation": t, "justification": j} for t, j in self.reasons],
        }


def asymptotic_flt_verdict(p, n):
    """Status of (effective) asymptotic FLT over Q_{n,p}."""
    if not isprime(p):
        raise ValueError("p must be prime, got %r" % (p,))
    if n < 1:
        raise ValueError("n must be >= 1")
    same_for_all_n = ("lem:inertZp", "the verdict depends only on p; it is the same for every layer n")
    if p == 2:
        return Verdict(p, n, EFFECTIVE_HOLDS, [("thm:Z2", CITATIONS["thm:Z2"]), same_for_all_n])
    if p == 3:
        return Verdict(
            p,
            n,
            OPEN,
            [
                ("rem:open", "p = 3: the unit equation already has solutions in Q_{1,3}, hence in every Q_{n,3}; they violate the S-unit criterion"),
                same_for_all_n,
            ],
        )
    if is_wieferich(p):
        return Verdict(
            p,
            n,
            OPEN,
            [
                ("rem:open", "p = %d is Wieferich: 2 splits in Q_{n,p} into at least p primes, so #S >= 2" % p),
                same_for_all_n,
            ],
        )
    return Verdict(
        p,
        n,
        EFFECTIVE_HOLDS,
        [
            ("thm:Zp", "p = %d >= 5 and 2^(p-1) mod p^2 = %d != 1" % (p, modpow(2, p - 1, p * p))),
            ("thm:FS", "2 is inert, and every S-unit solution has ord_q in {(1,0), (0,1), (-1,-1)}"),
            same_for_all_n,
        ],
    )


# -- certifier -----------------------------------------------------------------

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass
class Check:
    status: str
    detail: str = ""


@dataclass
class CertificateReport:
    poly: list
    p: int
    n: object
    checks: dict
    overall: str
    disc: int = 0

    def to_dict(self):
        out = asdict(self)
        out["citations"] = ["thm:general"]
        return out


def _prime_power_exponent(d, p):
    n = 0
    while d > 1 and d % p == 0:
        d //= p
        n += 1
    return n if d == 1 and n >= 1 else None


def _pattern(f, q):
    degs = []
    for d, g in distinct_degree_factor(f, q):
        degs.extend([d] * ((len(g) - 1) // d))
    return sorted(degs)


def galois_evidence(f, disc, sample_bound):
    """Necessary condition for f to define a Galois extension: at every
    sampled unramified prime all residue degrees agree.  Also requires one
    inert prime as a witness of irreducibility."""
    deg = len(f) - 1
    witness = None
    sampled = 0
    for q in primes_below(sample_bound + 1).tolist():
        if disc % q == 0:
            continue
        sampled += 1
        pat = _pattern(f, q)
        if len(set(pat)) != 1:
            return Check(FAIL, "q = %d has residue degrees %s" % (q, pat))
        if pat == [deg] and witness is None:
            witness = q
    if witness is None:
        return Check(INCONCLUSIVE, "equal degrees at %d primes but no inert prime (irreducibility unwitnessed)" % sampled)
    return Check(PASS, "equal residue degrees at all %d sampled primes <= %d; %d inert" % (sampled, sample_bound, witness))


def eisenstein_shift(f, p):
    """Residue c with f(x + c) Eisenstein at p, or None."""
    d = len(f) - 1
    for c in range(p):
        g = poly_shift(f, c)
        if all(x % p == 0 for x in g[:d]) and g[0] % (p * p):
            return c
    return None


def two_adic_root(f, max_bits=64):
    """An integer r that Hensel-lifts to a root of f in Z_2, or None.

    Roots mod 2^k are extended bit by bit; r is returned once
    v2(f(r)) > 2 v2(f'(r)), which guarantees a 2-adic root.
    """
    df = poly_derivative(f)
    level = [r for r in (0, 1) if poly_eval(f, r) % 2 == 0]
    for k in range(1, max_bits + 1):
        nxt = []
        for r in level:
            fr, dr = poly_eval(f, r), poly_eval(df, r)
            if dr and (fr == 0 or v2(fr) > 2 * v2(dr)):
                return r
            for s in (r, r + (1 << k)):
                if poly_eval(f, s) % (1 << (k + 1)) == 0:
                    nxt.append(s)
        if not nxt or len(nxt) > 4096:
            return None
        level = nxt
    return None


def certify_general_field(f, p, sample_bound=100):
    """Evidence that Q[x]/(f) satisfies the hypotheses of thm:general for p."""
    f = [int(c) for c in trim(f)]
    if not isprime(p):
        raise ValueError("p must be prime")
    if len(f) < 2 or f[-1] != 1:
        raise ValueError("f must be monic of degree >= 1")
    deg = len(f) - 1
    disc = poly_discriminant(f)
    checks = {}

    checks["p_at_least_5"] = (
        Check(PASS) if p >= 5 else Check(FAIL, "p = %d excluded by the hypothesis p >= 5" % p)
    )

    n = _prime_power_exponent(deg, p)
    checks["degree_is_prime_power"] = (
        Check(PASS, "degree %d = %d^%d" % (deg, p, n)) if n else Check(FAIL, "degree %d is not a power of %d" % (deg, p))
    )

    if disc == 0:
        checks["galois_evidence"] = Check(FAIL, "f has a repeated root")
        checks["totally_real"] = Check(FAIL, "f has a repeated root")
    else:
        checks["galois_evidence"] = galois_evidence(f, disc, sample_bound)
        try:
            r = sturm_real_root_count(f)
        except NotSquarefreeError:
            r = -1
        checks["totally_real"] = (
            Check(PASS, "%d real roots" % r) if r == deg else Check(FAIL, "%d of %d roots real" % (r, deg))
        )

    c = eisenstein_shift(f, p)
    if c is not None:
        checks["totally_ramified_at_p"] = Check(PASS, "f(x + %d) is Eisenstein at %d" % (c, p))
    elif disc and disc % p:
        checks["totally_ramified_at_p"] = Check(FAIL, "%d does not divide disc(f), so it is unramified" % p)
    else:
        checks["totally_ramified_at_p"] = Check(INCONCLUSIVE, "no Eisenstein shift at %d" % p)

    if disc == 0:
        checks["two_inert"] = Check(INCONCLUSIVE, "f has a repeated root")
    elif disc % 2 == 0:
        r = two_adic_root(f) if deg > 1 else None
        if r is not None:
            checks["two_inert"] = Check(FAIL, "f has a root in Z_2 (Hensel from %d), so a prime above 2 has degree 1" % r)
        else:
            checks["two_inert"] = Check(INCONCLUSIVE, "2 divides disc(f)")
    else:
        pat = _pattern(f, 2)
        checks["two_inert"] = (
            Check(PASS, "f is irreducible mod 2") if pat == [deg] else Check(FAIL, "residue degrees at 2: %s" % pat)
        )

    statuses = [ch.status for ch in checks.values()]
    if FAIL in statuses:
        overall = "failed"
    elif INCONCLUSIVE in statuses:
        overall = "inconclusive"
    else:
        overall = "certified-evidence"
    return CertificateReport(f, p, n, checks, overall, disc)
