"""Ideal-level operations built on the Groebner engine.

Intersections use a single auxiliary variable w: I meet J is the
elimination of w from w*I + (1-w)*J.  Colon by a polynomial divides the
intersection with the principal ideal; saturation iterates colon until
the chain stabilizes.  Monomial inputs take a combinatorial shortcut that
produces exactly the generators the generic path would.
"""

import itertools

from .errors import InputError, InternalError, RingError, UsageError
from .groebner import (DEFAULT_CONFIG, GroebnerBasis, Ideal,
                       buchberger_with_syzygies, groebner_basis, _to_internal)
from .ring import BlockOrder, Polynomial, mono_div, mono_divides, mono_gcd, mono_lcm, try_exact_div


def _fresh_name(ring, base="w"):
    if base not in ring._index:
        return base
    k = 0
    while f"{base}_{k}" in ring._index:
        k += 1
    return f"{base}_{k}"


def _aux_ring(ring, name):
    """The ring with one fresh variable prepended as its own greatest block."""
    return type(ring)((name,) + ring.names, field=ring.field,
                      blocks=((name,),) + ring.blocks, fiber=ring.fiber)


def _monomial_ideal(ideal):
    """Sorted minimal monomial generators when every generator is a term,
    else None."""
    monos = []
    for g in ideal.gens:
        if len(g.terms) != 1:
            return None
        monos.append(g.terms[0][0])
    minimal = [m for m in monos
               if not any(o != m and mono_divides(o, m) for o in monos)]
    out = []
    for m in sorted(set(minimal), key=ideal.ring.key):
        out.append(ideal.ring.monomial(m))
    return out


def intersect(i1, i2, config=DEFAULT_CONFIG):
    """I meet J via elimination of one auxiliary variable."""
    if i1.ring != i2.ring:
        raise RingError("ideals in different rings")
    ring = i1.ring
    if not i1.gens or not i2.gens:
        return Ideal(ring, ())
    m1 = _monomial_ideal(i1)
    m2 = _monomial_ideal(i2)
    if m1 is not None and m2 is not None:
        lcms = {mono_lcm(a.terms[0][0], b.terms[0][0]) for a in m1 for b in m2}
        minimal = [m for m in lcms
                   if not any(o != m and mono_divides(o, m) for o in lcms)]
        gens = [ring.monomial(m) for m in sorted(minimal, key=ring.key)]
        return Ideal(ring, gens)

    aux = _fresh_name(ring)
    rw = _aux_ring(ring, aux)
    w = rw.var(aux)
    gens = [w * g.map_to(rw) for g in i1.gens]
    gens += [(1 - w) * g.map_to(rw) for g in i2.gens]
    basis = groebner_basis(gens, rw.order, config)
    keep = [p for p in basis if all(m[0] == 0 for m, _ in p.terms)]
    out = [p.map_to(ring) for p in keep]
    result = Ideal(ring, out)
    _transfer_gb(result, rw, (aux,), basis, config)
    return result


def _transfer_gb(ideal, big_ring, dropped, basis, config):
    """Install the eliminated part of a reduced basis as the ideal's own
    reduced basis when the induced order matches the small ring's order."""
    ring = ideal.ring
    keep_idx = tuple(i for i, nm in enumerate(big_ring.names) if nm not in dropped)
    induced = big_ring.order.restrict(keep_idx)
    if induced != ring.order:
        return
    keyf = ring.order.key_func(ring.nvars)
    entries = []
    for p in ideal.gens:
        terms, _, _ = _to_internal(p, keyf, ring.field.char)
        entries.append(terms)
    entries.sort(key=lambda e: e[0][0])
    ideal.set_gb(GroebnerBasis(ring, ring.order, tuple(ideal.gens), entries,
                               keyf, ring.field.char))


def colon_by_poly(ideal, f, config=DEFAULT_CONFIG):
    """(I : f), computed from I meet (f) with exact division by f."""
    if not isinstance(f, Polynomial) or not f.terms:
        raise UsageError("colon divisor must be a nonzero polynomial")
    if f.ring != ideal.ring:
        raise RingError("divisor from a different ring")
    ring = ideal.ring
    if not ideal.gens:
        return Ideal(ring, ())
    inter = intersect(ideal, Ideal(ring, (f,)), config)
    out = []
    for g in inter.gens:
        q = try_exact_div(g, f)
        if q is None:
            raise InternalError("intersection generator not divisible in colon")
        out.append(q)
    return Ideal(ring, out)


def colon_by_ideal(ideal, other, config=DEFAULT_CONFIG):
    """(I : J) as the intersection of (I : g) over the generators of J."""
    if ideal.ring != other.ring:
        raise RingError("ideals in different rings")
    if not other.gens:
        raise UsageError("colon by the zero ideal")
    result = None
    for g in other.gens:
        part = colon_by_poly(ideal, g, config)
        result = part if result is None else intersect(result, part, config)
    return result


def saturate_by_poly(ideal, f, config=DEFAULT_CONFIG, max_steps=1000):
    """(I : f^inf) together with the first k at which I : f^k stabilizes.

    The index counts from 1: it is the least k >= 1 with
    I : f^k == I : f^(k+1).
    """
    cur = colon_by_poly(ideal, f, config)
    k = 1
    while k <= max_steps:
        nxt = colon_by_poly(cur, f, config)
        basis = cur.gb(config=config)
        if all(basis.contains(g, config) for g in nxt.gens):
            return cur, k
        cur = nxt
        k += 1
    raise InternalError("saturation failed to stabilize within the step cap")


def eliminate(ideal, names, config=DEFAULT_CONFIG):
    """The elimination ideal in the ring without the named variables.

    Uses a block order with the eliminated variables greatest, degrevlex
    within blocks; the returned ideal carries the induced reduced basis.
    """
    ring = ideal.ring
    names = tuple(names)
    for nm in names:
        ring.index(nm)
    drop = set(names)
    if len(drop) >= ring.nvars:
        raise UsageError("cannot eliminate every variable")
    elim_idx = tuple(i for i, nm in enumerate(ring.names) if nm in drop)
    blocks = [(elim_idx, "degrevlex")]
    for blk in ring.blocks:
        idxs = tuple(ring.index(nm) for nm in blk if nm not in drop)
        if idxs:
            blocks.append((idxs, "degrevlex"))
    order = BlockOrder(blocks)
    sub = ring.subring([nm for nm in ring.names if nm not in drop])
    if not ideal.gens:
        return Ideal(sub, ())
    basis = groebner_basis(ideal.gens, order, config)
    keep = []
    for p in basis:
        if all(all(m[i] == 0 for i in elim_idx) for m, _ in p.terms):
            keep.append(p.map_to(sub))
    result = Ideal(sub, keep)
    keep_idx = tuple(i for i in range(ring.nvars) if i not in set(elim_idx))
    induced = order.restrict(keep_idx)
    if induced == sub.order:
        keyf = sub.order.key_func(sub.nvars)
        entries = []
        for p in result.gens:
            terms, _, _ = _to_internal(p, keyf, sub.field.char)
            entries.append(terms)
        entries.sort(key=lambda e: e[0][0])
        result.set_gb(GroebnerBasis(sub, sub.order, tuple(result.gens),
                                    entries, keyf, sub.field.char))
    return result


def product_ideal(i1, i2, config=DEFAULT_CONFIG):
    """I*J generated by the pairwise generator products."""
    if i1.ring != i2.ring:
        raise RingError("ideals in different rings")
    gens = [a * b for a in i1.gens for b in i2.gens]
    return Ideal(i1.ring, gens)


def power_ideal(ideal, s, config=DEFAULT_CONFIG):
    """I^s; I^0 is the unit ideal."""
    if not isinstance(s, int) or s < 0:
        raise UsageError("ideal powers take a nonnegative integer")
    if s == 0:
        return Ideal(ideal.ring, (ideal.ring.one(),))
    gens = []
    for combo in itertools.combinations_with_replacement(ideal.gens, s):
        p = combo[0]
        for q in combo[1:]:
            p = p * q
        gens.append(p)
    return Ideal(ideal.ring, gens)


def syzygies_first(polys, order=None, config=DEFAULT_CONFIG):
    """A generating set of the first syzygies of the given polynomials.

    Returns vectors (tuples of Polynomials) s with sum s[j]*polys[j] == 0.
    The set generates the syzygy module but is not minimized.
    """
    polys = list(polys)
    if not polys:
        return []
    ring = polys[0].ring
    for p in polys:
        if p.ring != ring:
            raise RingError("polynomials from different rings")
        if not p.terms:
            raise UsageError("syzygies of a zero polynomial are not supported")
    basis, rows, syz_basis = buchberger_with_syzygies(polys, order, config)
    zero = ring.zero()
    out = []
    seen = set()
    for z in syz_basis:
        vec = [zero] * len(polys)
        for k, coeff in z.items():
            for j, rj in rows[k].items():
                vec[j] = vec[j] + coeff * rj
        tup = tuple(vec)
        if all(v.is_zero() for v in tup):
            continue
        if tup in seen:
            continue
        seen.add(tup)
        check = ring.zero()
        for v, p in zip(tup, polys):
            check = check + v * p
        if not check.is_zero():
            raise InternalError("syzygy translation failed the zero check")
        out.append(tup)
    return out


# ---------------------------------------------------------------------------
# graded membership by exact linear algebra


def _monomials_of_degree(positions, d, nvars):
    """All exponent tuples of total degree d supported on positions."""
    if d == 0:
        yield (0,) * nvars
        return
    for combo in itertools.combinations_with_replacement(positions, d):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        yield tuple(exps)


def graded_membership(p, gens, bidegree=None, config=DEFAULT_CONFIG):
    """Whether p lies in the ideal span at one bidegree, by linear algebra.

    All inputs must be bihomogeneous.  The span checked is
    sum_g { m * g : m a monomial with bidegree(m) + bidegree(g) equal to
    the target }, which for bihomogeneous ideals is exactly the degree
    piece of the ideal.  Exact Gaussian elimination with vectors kept as
    descending sorted term lists.
    """
    ring = p.ring
    if not p.terms:
        return True
    pb = p.bidegree()
    if pb is None:
        raise UsageError("graded membership needs a bihomogeneous polynomial")
    if bidegree is None:
        bidegree = pb
    if tuple(bidegree) != pb:
        return False
    bb, fb = bidegree
    field = ring.field
    fiber_pos = tuple(i for i, nm in enumerate(ring.names) if nm in ring.fiber)
    base_pos = tuple(i for i in range(ring.nvars) if i not in set(fiber_pos))
    keyf = ring.key
    inv, mul, sub, neg = field.inv, field.mul, field.sub, field.neg

    pivots = {}

    def insert(vec):
        """Reduce vec (sorted descending) against the pivots; returns True
        when it reduces to zero, else records it as a new pivot."""
        while vec:
            head = vec[0]
            row = pivots.get(head[1])
            if row is None:
                c = inv(head[2])
                pivots[head[1]] = [(k, m, mul(cc, c)) for k, m, cc in vec]
                return False
            c = head[2]
            scaled = [(k, m, mul(cc, c)) for k, m, cc in row[1:]]
            out = []
            i = j = 0
            a, b = vec, scaled
            na, nb = len(a), len(b)
            i = 1
            while i < na and j < nb:
                if a[i][0] > b[j][0]:
                    out.append(a[i])
                    i += 1
                elif a[i][0] < b[j][0]:
                    out.append((b[j][0], b[j][1], neg(b[j][2])))
                    j += 1
                else:
                    cc = sub(a[i][2], b[j][2])
                    if cc:
                        out.append((a[i][0], a[i][1], cc))
                    i += 1
                    j += 1
            out.extend(a[i:])
            for t in b[j:]:
                out.append((t[0], t[1], neg(t[2])))
            vec = out
        return True

    for g in gens:
        if g.ring != ring:
            raise RingError("generator from a different ring")
        if not g.terms:
            continue
        gb_ = g.bidegree()
        if gb_ is None:
            raise UsageError("graded membership needs bihomogeneous generators")
        db = bb - gb_[0]
        df = fb - gb_[1]
        if db < 0 or df < 0:
            continue
        gterms = [(keyf(m), m, c) for m, c in g.terms]
        for mb in _monomials_of_degree(base_pos, db, ring.nvars):
            for mf in _monomials_of_degree(fiber_pos, df, ring.nvars):
                shift = tuple(x + y for x, y in zip(mb, mf))
                vec = []
                for _, m, c in gterms:
                    mm = tuple(x + y for x, y in zip(m, shift))
                    vec.append((keyf(mm), mm, c))
                vec.sort(reverse=True)
                insert(vec)

    target = [(keyf(m), m, c) for m, c in p.terms]
    target.sort(reverse=True)
    return insert(target)


def membership_by_matrix(p, gens, config=DEFAULT_CONFIG):
    """Ideal membership for homogeneous generators by pure linear algebra.

    Completely independent of any Groebner computation: for each
    homogeneous component p_d of p the span of { m * g : deg m + deg g
    = d } is built monomial by monomial and p_d is reduced against it.
    For a homogeneous ideal that span is the full degree-d piece, so
    the answer is exact.  Intended as a cross-check for gb().contains.
    """
    ring = p.ring
    gens = [g for g in gens if not g.is_zero()]
    for g in gens:
        if g.ring != ring:
            raise RingError("generators live in a different ring")
        if not g.is_homogeneous():
            raise UsageError("matrix membership needs homogeneous generators")
    if p.is_zero():
        return True
    if not gens:
        return False
    field = ring.field
    keyf = ring.key
    inv, mul, sub, neg = field.inv, field.mul, field.sub, field.neg
    positions = tuple(range(ring.nvars))

    # split p by total degree
    by_degree = {}
    for m, c in p.terms:
        by_degree.setdefault(sum(m), []).append((m, c))

    def insert(vec, pivots):
        while vec:
            head = vec[0]
            row = pivots.get(head[1])
            if row is None:
                c = inv(head[2])
                pivots[head[1]] = [(k, m, mul(cc, c)) for k, m, cc in vec]
                return False
            c = head[2]
            scaled = [(k, m, mul(cc, c)) for k, m, cc in row[1:]]
            out = []
            a, b = vec, scaled
            i, j = 1, 0
            na, nb = len(a), len(b)
            while i < na and j < nb:
                if a[i][0] > b[j][0]:
                    out.append(a[i])
                    i += 1
                elif a[i][0] < b[j][0]:
                    out.append((b[j][0], b[j][1], neg(b[j][2])))
                    j += 1
                else:
                    cc = sub(a[i][2], b[j][2])
                    if cc:
                        out.append((a[i][0], a[i][1], cc))
                    i += 1
                    j += 1
            out.extend(a[i:])
            for t in b[j:]:
                out.append((t[0], t[1], neg(t[2])))
            vec = out
        return True

    for d, terms in sorted(by_degree.items()):
        pivots = {}
        for g in gens:
            dg = g.total_degree()
            if dg > d:
                continue
            for exps in _monomials_of_degree(positions, d - dg, ring.nvars):
                vec = []
                for m, c in g.terms:
                    mm = tuple(a + b for a, b in zip(m, exps))
                    vec.append((keyf(mm), mm, c))
                vec.sort(reverse=True)
                insert(vec, pivots)
        target = [(keyf(m), m, c) for m, c in terms]
        target.sort(reverse=True)
        if not insert(target, pivots):
            return False
    return True
