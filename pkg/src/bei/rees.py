"""Rees and symmetric algebra presentations for a list of polynomials.

The kernel of X_k -> f_k t is computed by eliminating t from the ideal
(X_1 - f_1 t, ..., X_m - f_m t) under a block order with t first.  The
symmetric algebra ideal collects the linear forms sum c_k X_k over the
first syzygies of f.  Comparing the two decides linear type; the
relation type falls out of the kernel's reduced basis by a graded
Nakayama scan over fiber degrees, which is valid because the kernel is
bihomogeneous whenever all f_k share one base degree.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import InputError, InternalError, RingError, UsageError
from .graphs import analyze
from .groebner import DEFAULT_CONFIG, Ideal
from .ideal_ops import eliminate, graded_membership, syzygies_first
from .ring import PolyRing, Polynomial


def edge_fiber_labels(edges):
    """Fiber variable names for a list of edges: X_12 style while vertex
    labels stay single digits, X_3_10 style otherwise."""
    labels = []
    for i, j in edges:
        if i > j:
            i, j = j, i
        labels.append(f"X_{i}{j}" if j <= 9 else f"X_{i}_{j}")
    if len(set(labels)) != len(labels):
        raise InputError("duplicate edges give duplicate fiber labels")
    return tuple(labels)


def generic_fiber_labels(m):
    return tuple(f"X_{k}" for k in range(1, m + 1))


def presentation_ring(base_ring, labels):
    """Fiber block before the base block, degrevlex inside each."""
    labels = tuple(labels)
    clash = set(labels) & set(base_ring.names)
    if clash:
        raise RingError(f"fiber labels collide with base variables: {sorted(clash)}")
    return PolyRing(labels + base_ring.names, field=base_ring.field,
                    blocks=(labels, base_ring.names), fiber=labels)


def _t_ring(base_ring, labels):
    return PolyRing(("t",) + tuple(labels) + base_ring.names,
                    field=base_ring.field,
                    blocks=(("t",), tuple(labels), base_ring.names),
                    fiber=labels)


def _check_input(f, labels):
    if not f:
        raise UsageError("need at least one polynomial")
    ring = f[0].ring
    for p in f:
        if not isinstance(p, Polynomial) or p.ring != ring:
            raise RingError("polynomials must share one ring")
        if p.is_zero():
            raise UsageError("zero entries have no presentation variable")
    if "t" in ring._index:
        raise RingError("the base ring may not contain a variable named t")
    if labels is None:
        labels = generic_fiber_labels(len(f))
    labels = tuple(labels)
    if len(labels) != len(f):
        raise UsageError(f"{len(f)} polynomials but {len(labels)} labels")
    return ring, labels


def rees_ideal(f, labels=None, config=DEFAULT_CONFIG):
    """Defining ideal of the Rees algebra of (f_1..f_m), as an Ideal in
    the fiber-over-base presentation ring with its basis already reduced."""
    ring, labels = _check_input(f, labels)
    rt = _t_ring(ring, labels)
    t = rt.var("t")
    gens = [rt.var(lab) - p.map_to(rt) * t for lab, p in zip(labels, f)]
    out = eliminate(Ideal(rt, gens), ["t"], config=config)
    return out


def _bihomogeneous_parts(p):
    """Split a polynomial by bidegree, largest part key last."""
    ring = p.ring
    buckets = {}
    for mono, coeff in p.terms:
        base = fib = 0
        for i, e in enumerate(mono):
            if e:
                vb, vf = ring.var_bidegree(ring.names[i])
                base += e * vb
                fib += e * vf
        buckets.setdefault((base, fib), []).append((mono, coeff))
    return [ring.from_terms(items) for _, items in sorted(buckets.items())]


def sym_ideal(f, labels=None, config=DEFAULT_CONFIG):
    """Symmetric algebra ideal: linear fiber forms from first syzygies.

    When all f_k are homogeneous of one degree, each syzygy splits into
    graded pieces that are syzygies themselves; the generators returned
    are those bihomogeneous pieces, which downstream membership checks
    rely on.
    """
    ring, labels = _check_input(f, labels)
    target = presentation_ring(ring, labels)
    degrees = {p.total_degree() for p in f}
    equigenerated = all(p.is_homogeneous() for p in f) and len(degrees) == 1
    forms = []
    for vec in syzygies_first(list(f), config=config):
        form = target.zero()
        for lab, c in zip(labels, vec):
            if not c.is_zero():
                form = form + c.map_to(target) * target.var(lab)
        if form.is_zero():
            continue
        parts = _bihomogeneous_parts(form) if equigenerated else [form]
        for part in parts:
            if part not in forms:
                forms.append(part)
    return Ideal(target, forms)


def evaluate_relation(F, f, labels=None):
    """Substitute X_k -> f_k into a polynomial of the presentation ring."""
    ring, labels = _check_input(list(f), labels)
    if not isinstance(F, Polynomial):
        raise UsageError("the relation must be a polynomial")
    known = dict(zip(labels, f))
    used = set()
    for mono, _ in F.terms:
        for i, e in enumerate(mono):
            if e:
                used.add(F.ring.names[i])
    assignments = {}
    for nm in used:
        if nm in ring._index:
            continue
        if nm not in known:
            raise UsageError(f"variable {nm} is neither a base variable nor "
                             "a labeled fiber variable")
        assignments[nm] = known[nm]
    if not assignments:
        return F.map_to(ring)
    return F.substitute(assignments)


def _by_fiber_degree(basis_polys):
    out = []
    for g in basis_polys:
        bd = g.bidegree()
        if bd is None:
            raise InternalError("kernel basis element is not bihomogeneous")
        out.append((bd[1], bd[0], g))
    out.sort(key=lambda t: (t[0], t[1]))
    return out


def relation_type_from_kernel(kernel, cap=None, config=DEFAULT_CONFIG):
    """Max fiber degree of a minimal generator of the kernel.

    An element of fiber degree d is a minimal generator iff it escapes
    the ideal generated by the basis elements of smaller fiber degree;
    by graded Nakayama this is a finite-dimensional membership question
    at the element's own bidegree.  An empty kernel has relation type 1.

    With a cap, certification stops at the first minimal generator found
    above it and the result is the string ">= c" for the cap value c;
    basis elements of still higher fiber degree are left unexamined.
    """
    basis = list(kernel.gb(config=config))
    if not basis:
        return 1
    graded = _by_fiber_degree(basis)
    rtype = 1
    for fd, _, g in graded:
        if fd <= rtype:
            continue
        lower = [h for d, _, h in graded if d < fd]
        if not graded_membership(g, lower, bidegree=g.bidegree(), config=config):
            rtype = fd
            if cap is not None and rtype > cap:
                return f">= {cap}"
    return rtype


def _require_common_degree(f):
    degs = {p.total_degree() for p in f}
    if len(degs) > 1:
        raise UsageError("graded analysis needs generators of one common degree")


def relation_type(f, cap=None, labels=None, config=DEFAULT_CONFIG):
    _require_common_degree(f)
    return relation_type_from_kernel(rees_ideal(f, labels=labels, config=config),
                                     cap=cap, config=config)


@dataclass(frozen=True)
class ReesResult:
    labels: tuple
    kernel: Ideal
    sym: Ideal
    linear_type: bool
    relation_type: object
    certificate: dict = None

    def __bool__(self):
        return self.linear_type

    def to_json(self):
        out = {
            "labels": list(self.labels),
            "kernel": [str(g) for g in self.kernel.gens],
            "kernel_bidegrees": [list(g.bidegree()) for g in self.kernel.gens],
            "sym": [str(g) for g in self.sym.gens],
            "linear_type": self.linear_type,
            "relation_type": self.relation_type,
        }
        if self.certificate is not None:
            out["certificate"] = dict(self.certificate)
        return out


def rees_analysis(f, labels=None, cap=None, config=DEFAULT_CONFIG):
    """Kernel, symmetric ideal, linear type, relation type, certificate.

    The certificate on a non-linear-type input is a bihomogeneous kernel
    basis element that evaluates to zero on f but fails membership in
    the symmetric ideal at its own bidegree.
    """
    f = list(f)
    ring, labels = _check_input(f, labels)
    _require_common_degree(f)
    kernel = rees_ideal(f, labels=labels, config=config)
    sym = sym_ideal(f, labels=labels, config=config)
    kgb = kernel.gb(config=config)
    for g in sym.gens:
        if not kgb.contains(g, config=config):
            raise InternalError("syzygy form escaped the Rees kernel")
    rtype = relation_type_from_kernel(kernel, cap=cap, config=config)
    linear = rtype == 1
    cert = None
    if not linear:
        for fd, based, g in _by_fiber_degree(list(kgb)):
            if fd < 2:
                continue
            if not graded_membership(g, list(sym.gens), bidegree=g.bidegree(),
                                     config=config):
                value = evaluate_relation(g, f, labels=labels)
                if not value.is_zero():
                    raise InternalError("kernel element does not evaluate to zero")
                cert = {"element": str(g), "bidegree": [based, fd]}
                break
        if cert is None:
            raise InternalError("non-linear type but no certificate found")
    return ReesResult(labels, kernel, sym, linear, rtype, cert)


def is_linear_type(f, labels=None, config=DEFAULT_CONFIG):
    return rees_analysis(f, labels=labels, config=config)


# ---------------------------------------------------------------------------
# the explicit generator set for trees


def tree_rees_generators(graph, ring=None, config=DEFAULT_CONFIG):
    """Koszul pairs plus one claw relation per vertex and leaf triple.

    For edges e < e' the Koszul relation is f_e X_{e'} - f_{e'} X_e.  For
    a claw with center c and leaves a < b < d the relation is

        s(a) f_bd X_{ca} - s(b) f_ad X_{cb} + s(d) f_ab X_{cd}

    with s(v) = 1 if c < v and -1 otherwise; the signs compensate for
    reading every binomial in its sorted orientation.  Each relation is
    certified by evaluating to zero before being returned.
    """
    from .edge_ideals import default_ring, edge_binomial

    info = analyze(graph)
    if not info.is_tree:
        raise UsageError("the explicit generator set is for trees")
    if ring is None:
        ring = default_ring(graph.n)
    edges = list(graph.edges)
    labels = edge_fiber_labels(edges)
    label_of = dict(zip(edges, labels))
    f_of = {e: edge_binomial(ring, *e) for e in edges}
    target = presentation_ring(ring, labels)
    xvar = {e: target.var(label_of[e]) for e in edges}
    f_in = {e: f_of[e].map_to(target) for e in edges}
    gens = []
    for e, e2 in combinations(edges, 2):
        gens.append(f_in[e] * xvar[e2] - f_in[e2] * xvar[e])

    def sorted_binomial(u, v):
        u, v = min(u, v), max(u, v)
        return edge_binomial(ring, u, v).map_to(target)

    for c in range(1, graph.n + 1):
        for a, b, d in combinations(graph.neighbors(c), 3):
            def sgn(v):
                return 1 if c < v else -1

            rel = (sgn(a) * sorted_binomial(b, d) * xvar[(min(c, a), max(c, a))]
                   - sgn(b) * sorted_binomial(a, d) * xvar[(min(c, b), max(c, b))]
                   + sgn(d) * sorted_binomial(a, b) * xvar[(min(c, d), max(c, d))])
            gens.append(rel)
    fs = [f_of[e] for e in edges]
    for g in gens:
        if not evaluate_relation(g, fs, labels=labels).is_zero():
            raise InternalError("generator fails to evaluate to zero")
    return Ideal(target, gens)
