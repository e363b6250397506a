"""Decision procedures for d-sequences and p-sequences.

Both notions ask that certain colon ideals of prefixes do not grow when
the divisor picks up an extra factor.  Using (I : ab) = (I : a) : b, each
condition reduces to checking that a cached single colon C = (prefix) : a
absorbs a further colon: C : b is always contained in the target, so only
C : b being inside C needs a computation.

Minimal generation is tested degreewise: entry z_k must stay outside the
ideal of the remaining entries.  That test is only valid for homogeneous
input, which is all this package works with; anything else is rejected.
"""

import itertools
import random
from dataclasses import dataclass, field

from .errors import ComputationLimitError, RingError, UsageError
from .groebner import DEFAULT_CONFIG, Ideal
from .ideal_ops import colon_by_poly, intersect, power_ideal, product_ideal
from .ring import Polynomial, mono_div, mono_gcd, mono_mul, render_poly


@dataclass(frozen=True)
class SequenceReport:
    kind: str
    holds: bool
    length: int
    witness: dict = None

    def to_json(self):
        out = {"kind": self.kind, "holds": self.holds, "length": self.length}
        if self.witness is not None:
            out["witness"] = dict(self.witness)
        return out


class ColonCache:
    """Shared colon results keyed by the generating set, not its order.

    A permutation scan repeats the same prefix ideals in different
    disguises; the ideal only depends on the set of generators, so both
    the Ideal objects (with their Groebner caches) and the colon results
    are reused across orderings.
    """

    def __init__(self, config=DEFAULT_CONFIG):
        self.config = config
        self._ideals = {}
        self._colons = {}

    def ideal_of(self, ring, gens):
        key = (ring, frozenset(gens))
        got = self._ideals.get(key)
        if got is None:
            got = Ideal(ring, list(gens))
            self._ideals[key] = got
        return got

    def colon(self, ideal, f):
        key = (ideal.ring, frozenset(ideal.gens), f)
        got = self._colons.get(key)
        if got is None:
            got = colon_by_poly(ideal, f, config=self.config)
            got = self._ideals.setdefault((got.ring, frozenset(got.gens)), got)
            self._colons[key] = got
        return got


def _validate_sequence(z):
    if not z:
        return None
    ring = None
    for k, p in enumerate(z, 1):
        if not isinstance(p, Polynomial):
            raise UsageError(f"entry {k} is not a polynomial")
        if ring is None:
            ring = p.ring
        elif p.ring != ring:
            raise RingError("sequence entries live in different rings")
        if p.is_zero():
            raise UsageError(f"entry {k} is zero")
        if not p.is_homogeneous():
            raise UsageError(
                f"entry {k} is not homogeneous; the minimal generation test "
                "needs graded input")
    return ring


def minimal_generation_witness(z, cache=None, config=DEFAULT_CONFIG):
    """1-based index of an entry inside the ideal of the others, or None."""
    ring = _validate_sequence(z)
    if ring is None:
        return None
    if cache is None:
        cache = ColonCache(config)
    for k in range(len(z)):
        rest = cache.ideal_of(ring, tuple(z[:k] + z[k + 1:]))
        if rest.member(z[k], config=config):
            return k + 1
    return None


def _colon_condition_witness(z, kind, cache, config):
    """Smallest failing (i, i1, i2) of the colon conditions, or None.

    For kind "p": (z_1..z_i) : z_{i1} z_{i2} = (z_1..z_i) : z_{i1} over
    i < i1 <= i2.  For kind "d": (z_1..z_i) : z_{i+1} z_j = (z_1..z_i) : z_j
    over j >= i+1; here the cached colon is by z_j and the extra factor is
    z_{i+1}.  Both reduce to C : extra being contained in C.
    """
    ring = z[0].ring
    n = len(z)
    for i in range(n):
        prefix = cache.ideal_of(ring, tuple(z[:i]))
        if kind == "p":
            pairs = (((a, b), z[a - 1], z[b - 1])
                     for a in range(i + 1, n + 1)
                     for b in range(a, n + 1))
        else:
            pairs = (((i + 1, j), z[j - 1], z[i])
                     for j in range(i + 1, n + 1))
        for (a, b), first, extra in pairs:
            c1 = cache.colon(prefix, first)
            grown = cache.colon(c1, extra)
            gb = c1.gb(config=config)
            for g in grown.gens:
                if not gb.contains(g, config=config):
                    if kind == "p":
                        return {"condition": "colon", "i": i, "i1": a,
                                "i2": b, "element": str(g)}
                    return {"condition": "colon", "i": i, "j": b,
                            "element": str(g)}
    return None


def _sequence_report(z, kind, cache, config):
    _validate_sequence(z)
    n = len(z)
    if n == 0:
        return SequenceReport(kind, True, 0)
    if cache is None:
        cache = ColonCache(config)
    bad = minimal_generation_witness(z, cache=cache, config=config)
    if bad is not None:
        return SequenceReport(kind, False, n,
                              {"condition": "minimal", "index": bad,
                               "element": str(z[bad - 1])})
    witness = _colon_condition_witness(z, kind, cache, config)
    if witness is not None:
        return SequenceReport(kind, False, n, witness)
    return SequenceReport(kind, True, n)


def is_p_sequence(z, cache=None, config=DEFAULT_CONFIG):
    """Decide the p-sequence conditions for an ordered list of polynomials."""
    return _sequence_report(list(z), "p", cache, config)


def is_d_sequence(z, cache=None, config=DEFAULT_CONFIG):
    """Decide the d-sequence conditions for an ordered list of polynomials."""
    return _sequence_report(list(z), "d", cache, config)


# ---------------------------------------------------------------------------
# permutation scans


@dataclass(frozen=True)
class PermutationScanReport:
    property: str
    length: int
    total_orderings: int
    scanned: int
    any_true: bool
    true_count: int
    sampled: bool
    seed: int = None
    verdicts: tuple = field(default=(), compare=False)

    def to_json(self):
        out = {
            "property": self.property,
            "length": self.length,
            "total_orderings": self.total_orderings,
            "scanned": self.scanned,
            "any_true": self.any_true,
            "true_count": self.true_count,
            "sampled": self.sampled,
        }
        if self.sampled:
            out["seed"] = self.seed
        out["verdicts"] = [
            {"order": list(order), "holds": holds}
            for order, holds in self.verdicts
        ]
        return out


def permutation_scan(z, property="p", sample=None, seed=0, cap=8,
                     config=DEFAULT_CONFIG):
    """Run is_p_sequence or is_d_sequence over orderings of z.

    Scans every permutation by default; pass sample to draw that many
    orderings without replacement (seeded, reported in lexicographic
    order).  Minimality and colon results are shared across orderings
    through one ColonCache, which is what makes full scans affordable.
    """
    z = list(z)
    if property not in ("p", "d"):
        raise UsageError(f"unknown property {property!r}")
    _validate_sequence(z)
    n = len(z)
    if n > cap:
        raise ComputationLimitError(
            f"permutation scan over {n}! orderings exceeds the cap of {cap}")
    orders = list(itertools.permutations(range(n)))
    sampled = sample is not None and sample < len(orders)
    if sampled:
        rng = random.Random(seed)
        orders = sorted(rng.sample(orders, sample))
    cache = ColonCache(config)
    check = is_p_sequence if property == "p" else is_d_sequence
    verdicts = []
    true_count = 0
    for order in orders:
        report = check([z[k] for k in order], cache=cache, config=config)
        verdicts.append((tuple(k + 1 for k in order), report.holds))
        if report.holds:
            true_count += 1
    total = 1
    for k in range(2, n + 1):
        total *= k
    return PermutationScanReport(
        property=property, length=n, total_orderings=total,
        scanned=len(orders), any_true=true_count > 0,
        true_count=true_count, sampled=sampled,
        seed=seed if sampled else None, verdicts=tuple(verdicts))


# ---------------------------------------------------------------------------
# monomial shortcut


def monomial_p_criterion(z):
    """Sufficient gcd test for a monomial sequence to be a p-sequence.

    Checks that no entry divides another, that gcd(z_i, z_i2) divides
    z_i1 whenever i < i1 <= i2, and that gcd(z_i, z_j^2) = gcd(z_i, z_j)
    for i < j.  The last condition is what the squares argument actually
    consumes; a bare divisibility reading of it would hold always.

    A true verdict is sufficient, not necessary, for is_p_sequence.
    """
    z = list(z)
    ring = _validate_sequence(z)
    monos = []
    for k, p in enumerate(z, 1):
        if not p.is_monomial():
            raise UsageError(f"entry {k} is not a monomial")
        monos.append(p.leading_monomial())
    n = len(monos)
    for i in range(n):
        for j in range(n):
            if i != j and mono_div(monos[j], monos[i]) is not None:
                return SequenceReport(
                    "monomial-p", False, n,
                    {"condition": "divisibility", "i": i + 1, "j": j + 1})
    for i in range(n):
        for i1 in range(i + 1, n):
            for i2 in range(i1, n):
                g = mono_gcd(monos[i], monos[i2])
                if mono_div(monos[i1], g) is None:
                    return SequenceReport(
                        "monomial-p", False, n,
                        {"condition": "gcd-product", "i": i + 1,
                         "i1": i1 + 1, "i2": i2 + 1})
    for i in range(n):
        for j in range(i + 1, n):
            square = mono_mul(monos[j], monos[j])
            if mono_gcd(monos[i], square) != mono_gcd(monos[i], monos[j]):
                return SequenceReport(
                    "monomial-p", False, n,
                    {"condition": "gcd-square", "i": i + 1, "j": j + 1})
    return SequenceReport("monomial-p", True, n)


# ---------------------------------------------------------------------------
# the intersection containment behind linearization


@dataclass(frozen=True)
class ContainmentReport:
    holds: bool
    index: int
    power: int
    witness: str = None

    def to_json(self):
        out = {"holds": self.holds, "index": self.index, "power": self.power}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def eq23_containment_check(z, i, s, config=DEFAULT_CONFIG):
    """Decide (z_i) cap (z_1..z_{i-1})^s (z_1..^z_i..z_n) inside
    z_i (z_1..z_{i-1})^{s-1} (z_1..^z_i..z_n).

    i is 1-based; the hat skips z_i.  The zeroth power of any ideal is
    the unit ideal, so s = 1 compares against z_i times the deleted
    ideal.  An empty prefix with s >= 1 makes the left side zero and the
    containment vacuous.  On failure the witness is a generator of the
    left side that misses the right side.
    """
    z = list(z)
    ring = _validate_sequence(z)
    n = len(z)
    if not (1 <= i <= n):
        raise UsageError(f"index {i} out of range 1..{n}")
    if s < 1:
        raise UsageError("the power s must be at least 1")
    prefix = Ideal(ring, z[:i - 1])
    deleted = Ideal(ring, z[:i - 1] + z[i:])
    principal = Ideal(ring, [z[i - 1]])
    left = intersect(
        principal,
        product_ideal(power_ideal(prefix, s), deleted, config=config),
        config=config)
    right = product_ideal(
        product_ideal(principal, power_ideal(prefix, s - 1), config=config),
        deleted, config=config)
    rgb = right.gb(config=config)
    for g in left.gens:
        if not rgb.contains(g, config=config):
            return ContainmentReport(False, i, s, witness=str(g))
    return ContainmentReport(True, i, s)
