"""Buchberger's algorithm with the Gebauer-Moeller pair criteria.

The engine keeps polynomials as lists of (order key, monomial, coefficient)
triples sorted descending, so the leading term is the list head and
subtraction is a linear merge.  Over QQ working coefficients are integers
kept primitive and reduction is fraction free; over a prime field they are
ints mod p.

A slower tracked variant (buchberger_with_syzygies) disables the pair
criteria and records cofactors, so every processed pair contributes a
module syzygy of the final basis; ideal_ops turns those into first
syzygies of the input generators.
"""

import heapq
import math
from dataclasses import dataclass

from .errors import ComputationLimitError, InternalError, RingError, UsageError
from .ring import Polynomial, mono_div, mono_divides, mono_lcm, mono_mul, mpq


@dataclass(frozen=True)
class GBConfig:
    """Caps for a single basis computation."""

    max_pairs: int = 1_000_000
    max_terms: int = 500_000


DEFAULT_CONFIG = GBConfig()


# ---------------------------------------------------------------------------
# internal representation helpers


def _to_internal(p, keyf, char):
    """Internal form of p plus the rescaling that undoes normalization.

    Returns (terms, num, den) with terms sorted descending and, over QQ,
    primitive integer coefficients with positive lead; p equals the
    internal polynomial times num/den.  Over GF(p) num = den = 1.
    """
    if char:
        terms = [(keyf(m), m, c) for m, c in p.terms]
        terms.sort(reverse=True)
        return terms, 1, 1
    den = 1
    for _, c in p.terms:
        d = int(c.denominator)
        den = den * d // math.gcd(den, d)
    ints = [(m, int(c.numerator) * (den // int(c.denominator))) for m, c in p.terms]
    g = 0
    for _, c in ints:
        g = math.gcd(g, c)
    terms = [(keyf(m), m, c) for m, c in ints]
    terms.sort(reverse=True)
    if g == 0:
        return terms, 1, den
    if terms[0][2] < 0:
        g = -g
    if g != 1:
        terms = [(k, m, c // g) for k, m, c in terms]
    return terms, g, den


def _strip_content(terms):
    g = 0
    for _, _, c in terms:
        g = math.gcd(g, c)
        if g == 1:
            break
    if terms and terms[0][2] < 0:
        g = -g
    if g in (0, 1):
        return terms
    return [(k, m, c // g) for k, m, c in terms]


def _from_internal(ring, terms, char):
    if char:
        return ring.from_terms([(m, c) for _, m, c in terms])
    lead = terms[0][2]
    return ring.from_terms([(m, mpq(c, lead)) for _, m, c in terms])


def _shift(terms, u, keyf, factor, char):
    """factor * x^u * terms; result sorted (multiplying by a monomial is
    order preserving)."""
    out = []
    if char:
        for _, m, c in terms:
            mm = mono_mul(m, u)
            out.append((keyf(mm), mm, c * factor % char))
    else:
        for _, m, c in terms:
            mm = mono_mul(m, u)
            out.append((keyf(mm), mm, c * factor))
    return out


def _merge_sub(p, scale_p, shifted, char):
    """scale_p * p - shifted, both sorted descending; scale_p is 1 mod p."""
    out = []
    i = j = 0
    np_, ns = len(p), len(shifted)
    while i < np_ and j < ns:
        kp = p[i][0]
        ks = shifted[j][0]
        if kp > ks:
            t = p[i]
            out.append(t if scale_p == 1 else (kp, t[1], t[2] * scale_p))
            i += 1
        elif kp < ks:
            t = shifted[j]
            c = -t[2] % char if char else -t[2]
            out.append((ks, t[1], c))
            j += 1
        else:
            c = p[i][2] * scale_p - shifted[j][2]
            if char:
                c %= char
            if c:
                out.append((kp, p[i][1], c))
            i += 1
            j += 1
    while i < np_:
        t = p[i]
        out.append(t if scale_p == 1 else (t[0], t[1], t[2] * scale_p))
        i += 1
    while j < ns:
        t = shifted[j]
        c = -t[2] % char if char else -t[2]
        out.append((t[0], t[1], c))
        j += 1
    return out


def _normal_form_internal(p, reducers, keyf, char, config):
    """Fully reduce p against reducers (list of (lm, lc, terms)).

    Returns (remainder, scale): over QQ the field remainder is the integer
    remainder divided by scale; over GF(p) scale is 1.
    """
    out = []
    out_scales = []
    total_scale = 1
    work = p
    wi = 0
    while wi < len(work):
        key, m, c = work[wi]
        hit = None
        for lm, lc, terms in reducers:
            u = mono_div(m, lm)
            if u is not None:
                hit = (u, lc, terms)
                break
        if hit is None:
            out.append((key, m, c))
            out_scales.append(total_scale)
            wi += 1
            continue
        u, lc, terms = hit
        if char:
            b = c * pow(lc, -1, char) % char
            shifted = _shift(terms[1:], u, keyf, b, char)
            work = _merge_sub(work[wi + 1:], 1, shifted, char)
        else:
            d = math.gcd(c, lc)
            a = lc // d
            b = c // d
            if a < 0:
                a, b = -a, -b
            shifted = _shift(terms[1:], u, keyf, b, 0)
            work = _merge_sub(work[wi + 1:], a, shifted, 0)
            if a != 1:
                total_scale *= a
        wi = 0
        if len(work) + len(out) > config.max_terms:
            raise ComputationLimitError(
                f"intermediate polynomial exceeded {config.max_terms} terms")
    if char or total_scale == 1:
        return out, 1
    result = []
    for (key, m, c), s in zip(out, out_scales):
        result.append((key, m, c * (total_scale // s)))
    return result, total_scale


def _spoly_internal(lmi, lci, ti, lmj, lcj, tj, keyf, char):
    l = mono_lcm(lmi, lmj)
    ui = mono_div(l, lmi)
    uj = mono_div(l, lmj)
    if char:
        a, b = lcj, lci
    else:
        d = math.gcd(lci, lcj)
        a, b = lcj // d, lci // d
    pa = _shift(ti, ui, keyf, a, char)
    pb = _shift(tj, uj, keyf, b, char)
    return _merge_sub(pa, 1, pb, char)


# ---------------------------------------------------------------------------
# the main loop


class _Basis:
    """Mutable state of a run: parallel per-element lists plus the queue."""

    __slots__ = ("keyf", "char", "lms", "lcs", "bodies", "alive", "pair_map",
                 "heap", "pairs_done", "config")

    def __init__(self, keyf, char, config):
        self.keyf = keyf
        self.char = char
        self.config = config
        self.lms = []
        self.lcs = []
        self.bodies = []
        self.alive = []
        self.pair_map = {}
        self.heap = []
        self.pairs_done = 0

    def reducers(self):
        return [(self.lms[k], self.lcs[k], self.bodies[k])
                for k in range(len(self.lms)) if self.alive[k]]

    def add(self, terms):
        """Insert a new element whose lead is irreducible, updating the
        pair queue with the Gebauer-Moeller criteria."""
        keyf = self.keyf
        h = len(self.lms)
        lm_h, lc_h = terms[0][1], terms[0][2]

        cand = [(g, mono_lcm(lm_h, self.lms[g]))
                for g in range(h) if self.alive[g]]
        cand.sort(key=lambda t: (sum(t[1]), keyf(t[1])))
        kept = []
        rest = list(cand)
        while rest:
            g1, l1 = rest.pop(0)
            coprime = all(a == 0 or b == 0 for a, b in zip(lm_h, self.lms[g1]))
            if not coprime:
                if any(mono_divides(l2, l1) for _, l2 in rest) or \
                   any(mono_divides(l2, l1) for _, l2, _ in kept):
                    continue
            kept.append((g1, l1, coprime))

        # prune queued pairs whose lcm is a proper multiple of lm_h
        drop = []
        for (i, j), l in self.pair_map.items():
            if mono_divides(lm_h, l) and \
               mono_lcm(lm_h, self.lms[i]) != l and mono_lcm(lm_h, self.lms[j]) != l:
                drop.append((i, j))
        for ij in drop:
            del self.pair_map[ij]

        for g1, l1, coprime in kept:
            if coprime:
                continue
            self.pair_map[(g1, h)] = l1
            heapq.heappush(self.heap, (sum(l1), keyf(l1), g1, h))

        for g in range(h):
            if self.alive[g] and mono_divides(lm_h, self.lms[g]):
                self.alive[g] = False

        self.lms.append(lm_h)
        self.lcs.append(lc_h)
        self.bodies.append(terms)
        self.alive.append(True)

    def run(self):
        keyf, char, config = self.keyf, self.char, self.config
        while self.heap:
            _, _, i, j = heapq.heappop(self.heap)
            if (i, j) not in self.pair_map:
                continue
            del self.pair_map[(i, j)]
            self.pairs_done += 1
            if self.pairs_done > config.max_pairs:
                raise ComputationLimitError(
                    f"pair count exceeded {config.max_pairs}")
            s = _spoly_internal(self.lms[i], self.lcs[i], self.bodies[i],
                                self.lms[j], self.lcs[j], self.bodies[j],
                                keyf, char)
            if not s:
                continue
            r, _ = _normal_form_internal(s, self.reducers(), keyf, char, config)
            if r:
                self.add(_strip_content(r) if not char else r)


def _interreduce(entries, keyf, char, config):
    """Tail-reduce a minimal basis until stable; entries are term lists."""
    entries = list(entries)
    changed = True
    while changed:
        changed = False
        for k in range(len(entries)):
            others = [(e[0][1], e[0][2], e) for x, e in enumerate(entries) if x != k]
            r, _ = _normal_form_internal(entries[k], others, keyf, char, config)
            if not char:
                r = _strip_content(r)
            if r != entries[k]:
                if not r:
                    raise InternalError("minimal basis element reduced to zero")
                entries[k] = r
                changed = True
    return entries


class GroebnerBasis:
    """A reduced Groebner basis: monic, minimal, tail reduced, sorted by
    ascending leading monomial.  Equal ideals under equal orders compare
    equal."""

    __slots__ = ("ring", "order", "polys", "_keyf", "_entries", "_char")

    def __init__(self, ring, order, polys, entries, keyf, char):
        self.ring = ring
        self.order = order
        self.polys = polys
        self._entries = entries
        self._keyf = keyf
        self._char = char

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def leading_monomials(self):
        return [e[0][1] for e in self._entries]

    def reduce(self, p, config=DEFAULT_CONFIG):
        """The normal form of p against this basis."""
        if p.ring != self.ring:
            raise RingError("polynomial from a different ring")
        if not p.terms:
            return p
        internal, num, den = _to_internal(p, self._keyf, self._char)
        reducers = [(e[0][1], e[0][2], e) for e in self._entries]
        r, scale = _normal_form_internal(internal, reducers, self._keyf,
                                         self._char, config)
        if not r:
            return self.ring.zero()
        if self._char:
            return self.ring.from_terms([(m, c) for _, m, c in r])
        # undo the fraction-free scaling and the primitive normalization
        return self.ring.from_terms(
            [(m, mpq(c * num, den * scale)) for _, m, c in r])

    def contains(self, p, config=DEFAULT_CONFIG):
        if p.ring != self.ring:
            raise RingError("polynomial from a different ring")
        if not p.terms:
            return True
        internal, _, _ = _to_internal(p, self._keyf, self._char)
        reducers = [(e[0][1], e[0][2], e) for e in self._entries]
        r, _ = _normal_form_internal(internal, reducers, self._keyf,
                                     self._char, config)
        return not r

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.ring == other.ring
                and self.order == other.order and self.polys == other.polys)

    def __hash__(self):
        return hash((self.ring, self.order, self.polys))

    def __repr__(self):
        return f"GroebnerBasis({len(self.polys)} elements)"


def groebner_basis(gens, order=None, config=DEFAULT_CONFIG):
    """The reduced Groebner basis of the given generators."""
    gens = list(gens)
    if not gens:
        raise UsageError("groebner_basis needs at least one polynomial to fix the ring")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingError("generators from different rings")
    if order is None:
        order = ring.order
    keyf = order.key_func(ring.nvars)
    char = ring.field.char
    state = _Basis(keyf, char, config)
    for g in gens:
        if not g.terms:
            continue
        internal, _, _ = _to_internal(g, keyf, char)
        r, _ = _normal_form_internal(internal, state.reducers(), keyf, char, config)
        if r:
            state.add(_strip_content(r) if not char else r)
            state.run()
    entries = [state.bodies[k] for k in range(len(state.lms)) if state.alive[k]]
    entries.sort(key=lambda e: e[0][0])
    entries = _interreduce(entries, keyf, char, config)
    entries.sort(key=lambda e: e[0][0])
    if char:
        inv_entries = []
        for e in entries:
            inv = pow(e[0][2], -1, char)
            inv_entries.append([(k, m, c * inv % char) for k, m, c in e])
        entries = inv_entries
    polys = tuple(_from_internal(ring, e, char) for e in entries)
    return GroebnerBasis(ring, order, polys, entries, keyf, char)


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """An ideal given by generators, with cached Groebner bases per order."""

    __slots__ = ("ring", "gens", "_gb_cache")

    def __init__(self, ring, gens):
        gens = tuple(g for g in gens if g.terms)
        for g in gens:
            if g.ring != ring:
                raise RingError("generator from a different ring")
        self.ring = ring
        self.gens = gens
        self._gb_cache = {}

    def gb(self, order=None, config=DEFAULT_CONFIG):
        if order is None:
            order = self.ring.order
        cached = self._gb_cache.get(order)
        if cached is None:
            if not self.gens:
                keyf = order.key_func(self.ring.nvars)
                cached = GroebnerBasis(self.ring, order, (), [], keyf,
                                       self.ring.field.char)
            else:
                cached = groebner_basis(self.gens, order, config)
            self._gb_cache[order] = cached
        return cached

    def set_gb(self, basis):
        """Install an externally computed basis (e.g. from elimination)."""
        self._gb_cache[basis.order] = basis

    def member(self, p, order=None, config=DEFAULT_CONFIG):
        if not p.terms:
            return True
        if not self.gens:
            return False
        return self.gb(order, config).contains(p, config)

    def equals(self, other, order=None, config=DEFAULT_CONFIG):
        if self.ring != other.ring:
            raise RingError("ideals in different rings")
        if order is None:
            order = self.ring.order
        return self.gb(order, config).polys == other.gb(order, config).polys

    def __eq__(self, other):
        """Structural equality: same ring and same generator tuple."""
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        return f"Ideal({len(self.gens)} generators)"


def ideal_equal(i1, i2, order=None, config=DEFAULT_CONFIG):
    """True when the two ideals are equal, by reduced basis comparison."""
    return i1.equals(i2, order, config)


def spoly(f, g, order=None):
    """The S-polynomial with both parts normalized monic."""
    if f.ring != g.ring:
        raise RingError("polynomials from different rings")
    if not f.terms or not g.terms:
        raise UsageError("S-polynomial of a zero polynomial")
    ring = f.ring
    if order is None:
        order = ring.order
    lmf, lcf = f.leading_term(order)
    lmg, lcg = g.leading_term(order)
    l = mono_lcm(lmf, lmg)
    uf = ring.monomial(mono_div(l, lmf), ring.field.inv(lcf))
    ug = ring.monomial(mono_div(l, lmg), ring.field.inv(lcg))
    return uf * f - ug * g


# ---------------------------------------------------------------------------
# tracked variant for syzygies


def _f_ops(char):
    if char:
        def sub(a, b):
            return (a - b) % char

        def mul(a, b):
            return (a * b) % char

        def div(a, b):
            return a * pow(b, -1, char) % char

        def neg(a):
            return (-a) % char
    else:
        def sub(a, b):
            return a - b

        def mul(a, b):
            return a * b

        def div(a, b):
            return a / b

        def neg(a):
            return -a
    return sub, mul, div, neg


def _f_shift(terms, u, factor, keyf, mul):
    out = []
    for _, m, c in terms:
        mm = mono_mul(m, u)
        out.append((keyf(mm), mm, mul(c, factor)))
    return out


def _f_merge_sub(p, shifted, sub, neg):
    out = []
    i = j = 0
    np_, ns = len(p), len(shifted)
    while i < np_ and j < ns:
        if p[i][0] > shifted[j][0]:
            out.append(p[i])
            i += 1
        elif p[i][0] < shifted[j][0]:
            t = shifted[j]
            out.append((t[0], t[1], neg(t[2])))
            j += 1
        else:
            c = sub(p[i][2], shifted[j][2])
            if c:
                out.append((p[i][0], p[i][1], c))
            i += 1
            j += 1
    out.extend(p[i:])
    for t in shifted[j:]:
        out.append((t[0], t[1], neg(t[2])))
    return out


def _f_nf_tracked(p, basis, keyf, char, config):
    """Field-coefficient normal form with cofactors.

    Returns (remainder, cof) with p = sum cof[k] * basis[k] + remainder;
    cof maps basis indices to term lists.
    """
    sub, mul, div, neg = _f_ops(char)
    out = []
    cof = {}
    work = p
    wi = 0
    while wi < len(work):
        key, m, c = work[wi]
        hit = None
        for k, terms in enumerate(basis):
            u = mono_div(m, terms[0][1])
            if u is not None:
                hit = (k, u, terms)
                break
        if hit is None:
            out.append((key, m, c))
            wi += 1
            continue
        k, u, terms = hit
        b = div(c, terms[0][2])
        shifted = _f_shift(terms[1:], u, b, keyf, mul)
        work = _f_merge_sub(work[wi + 1:], shifted, sub, neg)
        wi = 0
        ku = keyf(u)
        prev = cof.setdefault(k, [])
        prev.append((ku, u, b))
        if len(work) + len(out) > config.max_terms:
            raise ComputationLimitError(
                f"intermediate polynomial exceeded {config.max_terms} terms")
    return out, cof


def buchberger_with_syzygies(gens, order=None, config=DEFAULT_CONFIG):
    """Buchberger with cofactor tracking and no pair skipping.

    Returns (basis, rows, syzygies):
      basis     list of Polynomials, a Groebner basis containing the gens
                as its first elements, none discarded;
      rows      rows[k][j] with basis[k] == sum_j rows[k][j] * gens[j];
      syzygies  vectors z over basis indices with sum_k z[k]*basis[k] == 0,
                one per processed critical pair (Schreyer generators).
    """
    gens = list(gens)
    if not gens:
        return [], [], []
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingError("generators from different rings")
        if not g.terms:
            raise UsageError("syzygy computation requires nonzero generators")
    if order is None:
        order = ring.order
    keyf = order.key_func(ring.nvars)
    char = ring.field.char
    sub, mul, div, neg = _f_ops(char)
    one = ring.field.coerce(1)
    zerom = (0,) * ring.nvars

    basis = []
    rows = []
    for j, g in enumerate(gens):
        terms = [(keyf(m), m, c) for m, c in g.terms]
        terms.sort(reverse=True)
        basis.append(terms)
        rows.append({j: [(keyf(zerom), zerom, one)]})

    heap = []
    for i in range(len(basis)):
        for j in range(i):
            l = mono_lcm(basis[i][0][1], basis[j][0][1])
            heapq.heappush(heap, (sum(l), keyf(l), j, i))

    syzygies = []
    pairs_done = 0
    while heap:
        _, _, i, j = heapq.heappop(heap)
        pairs_done += 1
        if pairs_done > config.max_pairs:
            raise ComputationLimitError(f"pair count exceeded {config.max_pairs}")
        lmi, lci = basis[i][0][1], basis[i][0][2]
        lmj, lcj = basis[j][0][1], basis[j][0][2]
        l = mono_lcm(lmi, lmj)
        ui, uj = mono_div(l, lmi), mono_div(l, lmj)
        ai, aj = div(one, lci), div(one, lcj)
        pa = _f_shift(basis[i], ui, ai, keyf, mul)
        pb = _f_shift(basis[j], uj, aj, keyf, mul)
        s = _f_merge_sub(pa, pb, sub, neg)
        r, cof = _f_nf_tracked(s, basis, keyf, char, config)
        z = {i: [(keyf(ui), ui, ai)], j: [(keyf(uj), uj, neg(aj))]}
        for k, q in cof.items():
            cur = z.setdefault(k, [])
            for t in q:
                cur.append((t[0], t[1], neg(t[2])))
        if r:
            new = len(basis)
            for x in range(len(basis)):
                ll = mono_lcm(basis[x][0][1], r[0][1])
                heapq.heappush(heap, (sum(ll), keyf(ll), x, new))
            basis.append(r)
            # row of the new element: the same combination without -e_new
            new_row = {}
            for k, q in z.items():
                acc = new_row
                for t in q:
                    _row_axpy(acc, rows[k], t, keyf, mul, sub, neg, char)
            rows.append(_row_clean(new_row))
            z[new] = [(keyf(zerom), zerom, neg(one))]
        syzygies.append({k: _terms_clean(v, char) for k, v in z.items()})

    basis_polys = [ring.from_terms([(m, c) for _, m, c in e]) for e in basis]
    row_polys = []
    for row in rows:
        row_polys.append({j: ring.from_terms([(m, c) for _, m, c in terms])
                          for j, terms in row.items() if terms})
    syz_out = []
    for z in syzygies:
        vec = {k: ring.from_terms([(m, c) for _, m, c in terms])
               for k, terms in z.items() if terms}
        if vec:
            syz_out.append(vec)
    return basis_polys, row_polys, syz_out


def _row_axpy(acc, row, t, keyf, mul, sub, neg, char):
    """acc += t * row where t is a (key, mono, coeff) term and row maps
    generator indices to term lists."""
    _, u, c = t
    for j, terms in row.items():
        shifted = _f_shift(terms, u, c, keyf, mul)
        cur = acc.get(j)
        if cur is None:
            acc[j] = shifted
        else:
            # add = subtract the negation
            acc[j] = _f_merge_sub(cur, [(k, m, neg(x)) for k, m, x in shifted],
                                  sub, neg)


def _row_clean(row):
    return {j: terms for j, terms in row.items() if terms}


def _terms_clean(terms, char):
    """Merge duplicate monomials accumulated in a cofactor list."""
    if len(terms) <= 1:
        return terms
    acc = {}
    for k, m, c in terms:
        if m in acc:
            kc, cc = acc[m]
            acc[m] = (k, cc + c if not char else (cc + c) % char)
        else:
            acc[m] = (k, c)
    out = [(k, m, c) for m, (k, c) in acc.items() if c]
    out.sort(reverse=True)
    return out
