"""Sparse multivariate polynomial arithmetic over QQ or a prime field.

Monomials are plain exponent tuples indexed by the ring's variable list;
polynomials are immutable tuples of (monomial, coefficient) terms kept
sorted in descending order under the ring's canonical monomial order.
All arithmetic is exact.
"""

from fractions import Fraction

from .errors import InputError, ParseError, RingError, UsageError

try:
    from gmpy2 import mpq, mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    mpq = Fraction
    mpz = int


# ---------------------------------------------------------------------------
# coefficient fields


class RationalField:
    """The rationals, represented as gmpy2.mpq values."""

    char = 0

    def coerce(self, value):
        if isinstance(value, (int, type(mpz(0)))):
            return mpq(value)
        if isinstance(value, (Fraction, type(mpq(0)))):
            return mpq(value)
        raise RingError(f"cannot coerce {value!r} into QQ")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return a / b

    def inv(self, a):
        return 1 / a

    def render(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Z/p for a prime p, represented as ints in [0, p)."""

    def __init__(self, p):
        if p < 2:
            raise RingError(f"prime field modulus must be at least 2, got {p}")
        self.char = p

    def coerce(self, value):
        if isinstance(value, (int, type(mpz(0)))):
            return int(value) % self.char
        if isinstance(value, (Fraction, type(mpq(0)))):
            num = int(value.numerator) % self.char
            den = int(value.denominator) % self.char
            return num * pow(den, -1, self.char) % self.char
        raise RingError(f"cannot coerce {value!r} into GF({self.char})")

    def add(self, a, b):
        return (a + b) % self.char

    def sub(self, a, b):
        return (a - b) % self.char

    def mul(self, a, b):
        return (a * b) % self.char

    def neg(self, a):
        return (-a) % self.char

    def div(self, a, b):
        return a * pow(b, -1, self.char) % self.char

    def inv(self, a):
        return pow(a, -1, self.char)

    def render(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.char == self.char

    def __hash__(self):
        return hash(("GF", self.char))

    def __repr__(self):
        return f"GF({self.char})"


QQ = RationalField()


# ---------------------------------------------------------------------------
# monomials: exponent tuples


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when a divides b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a):
    """b / a as a monomial, or None when a does not divide b."""
    out = []
    for x, y in zip(b, a):
        d = x - y
        if d < 0:
            return None
        out.append(d)
    return tuple(out)

def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


# ---------------------------------------------------------------------------
# monomial orders
#
# An order exposes key_func(nvars) returning a function from exponent
# tuples to sortable keys; bigger key means bigger monomial.


class Lex:
    def key_func(self, nvars):
        return lambda m: m

    def restrict(self, keep):
        return Lex()

    def __eq__(self, other):
        return isinstance(other, Lex)

    def __hash__(self):
        return hash("lex")

    def __repr__(self):
        return "lex"


class DegRevLex:
    def key_func(self, nvars):
        def key(m):
            return (sum(m), tuple(-e for e in reversed(m)))

        return key

    def restrict(self, keep):
        return DegRevLex()

    def __eq__(self, other):
        return isinstance(other, DegRevLex)

    def __hash__(self):
        return hash("degrevlex")

    def __repr__(self):
        return "degrevlex"


class BlockOrder:
    """Compare block by block; earlier blocks dominate.

    blocks is a tuple of (variable index tuple, inner order) pairs where
    the inner order is "lex" or "degrevlex".  Used for elimination: put
    the variables to eliminate in the first block.
    """

    def __init__(self, blocks):
        cleaned = []
        for idxs, inner in blocks:
            if inner not in ("lex", "degrevlex"):
                raise RingError(f"unknown inner order {inner!r}")
            cleaned.append((tuple(idxs), inner))
        self.blocks = tuple(cleaned)

    def key_func(self, nvars):
        blocks = self.blocks

        def key(m):
            parts = []
            for idxs, inner in blocks:
                sub = tuple(m[i] for i in idxs)
                if inner == "degrevlex":
                    parts.append((sum(sub), tuple(-e for e in reversed(sub))))
                else:
                    parts.append(sub)
            return tuple(parts)

        return key

    def restrict(self, keep):
        """Induced order after deleting all variables not in keep.

        keep is an ordered tuple of old indices; positions in it are the
        new indices.
        """
        pos = {old: new for new, old in enumerate(keep)}
        blocks = []
        for idxs, inner in self.blocks:
            kept = tuple(pos[i] for i in idxs if i in pos)
            if kept:
                blocks.append((kept, inner))
        if not blocks:
            return DegRevLex()
        return BlockOrder(blocks)

    def __eq__(self, other):
        return isinstance(other, BlockOrder) and other.blocks == self.blocks

    def __hash__(self):
        return hash(("block", self.blocks))

    def __repr__(self):
        return f"block{self.blocks!r}"


def monomial_cmp(order, a, b):
    """-1, 0 or 1 comparing monomials a, b under the given order."""
    if len(a) != len(b):
        raise UsageError("monomials live in rings of different sizes")
    key = order.key_func(len(a))
    ka, kb = key(a), key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# rings


_NAME_OK = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


class PolyRing:
    """A polynomial ring with named variables, a block structure and a
    canonical monomial order.

    fiber lists the variables that count toward the second component of
    the bidegree; all other variables count toward the first.
    """

    __slots__ = ("field", "names", "blocks", "fiber", "order", "_index", "_key", "_hash")

    def __init__(self, names, field=QQ, blocks=None, fiber=(), order=None):
        names = tuple(names)
        if not names:
            raise RingError("a ring needs at least one variable")
        for nm in names:
            if not nm or nm[0].isdigit() or not set(nm) <= _NAME_OK:
                raise RingError(f"bad variable name {nm!r}")
        if len(set(names)) != len(names):
            raise RingError("duplicate variable names")
        if blocks is None:
            blocks = (names,)
        else:
            blocks = tuple(tuple(b) for b in blocks)
            flat = tuple(nm for b in blocks for nm in b)
            if flat != names:
                raise RingError("blocks must partition the variables in declaration order")
        fiber = frozenset(fiber)
        if not fiber <= set(names):
            raise RingError("fiber variables must be ring variables")
        if order is None:
            if len(blocks) == 1:
                order = DegRevLex()
            else:
                idx = {nm: i for i, nm in enumerate(names)}
                order = BlockOrder(tuple((tuple(idx[nm] for nm in b), "degrevlex") for b in blocks))
        self.field = field
        self.names = names
        self.blocks = blocks
        self.fiber = fiber
        self.order = order
        self._index = {nm: i for i, nm in enumerate(names)}
        self._key = order.key_func(len(names))
        self._hash = hash((field, names, blocks, fiber, order))

    @property
    def nvars(self):
        return len(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise RingError(f"{name!r} is not a variable of this ring") from None

    def key(self, mono):
        return self._key(mono)

    def var_bidegree(self, name):
        return (0, 1) if name in self.fiber else (1, 0)

    def zero(self):
        return Polynomial(self, ())

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.field.coerce(c)
        if not c:
            return Polynomial(self, ())
        return Polynomial(self, (((0,) * self.nvars, c),))

    def var(self, name):
        i = self.index(name)
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((exps, self.field.coerce(1)),))

    def gens(self):
        return [self.var(nm) for nm in self.names]

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise RingError("bad exponent vector")
        c = self.field.coerce(coeff)
        if not c:
            return self.zero()
        return Polynomial(self, ((exps, c),))

    def from_terms(self, terms):
        """Build a polynomial from (exponent tuple, coefficient) pairs."""
        acc = {}
        f = self.field
        for exps, c in terms:
            exps = tuple(exps)
            if len(exps) != self.nvars or any(e < 0 for e in exps):
                raise RingError("bad exponent vector")
            c = f.coerce(c)
            prev = acc.get(exps)
            acc[exps] = c if prev is None else f.add(prev, c)
        return Polynomial(self, _sorted_terms(self, acc))

    def parse(self, text):
        return _parse_poly(self, text)

    def subring(self, keep_names, order=None):
        """The ring on a subset of the variables, keeping declaration order.

        The block structure and fiber flags restrict; the canonical order
        restricts too unless one is given.
        """
        keep = set(keep_names)
        if not keep <= set(self.names):
            raise RingError("subring variables must be ring variables")
        names = tuple(nm for nm in self.names if nm in keep)
        blocks = tuple(tuple(nm for nm in b if nm in keep) for b in self.blocks)
        blocks = tuple(b for b in blocks if b)
        if order is None:
            keep_idx = tuple(i for i, nm in enumerate(self.names) if nm in keep)
            order = self.order.restrict(keep_idx)
        return PolyRing(names, field=self.field, blocks=blocks,
                        fiber=self.fiber & keep, order=order)

    def __eq__(self, other):
        return (isinstance(other, PolyRing)
                and self.field == other.field and self.names == other.names
                and self.blocks == other.blocks and self.fiber == other.fiber
                and self.order == other.order)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)}; {self.field!r}; {self.order!r})"


def _sorted_terms(ring, acc):
    key = ring._key
    items = [(m, c) for m, c in acc.items() if c]
    items.sort(key=lambda t: key(t[0]), reverse=True)
    return tuple(items)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial attached to a PolyRing.

    terms are (exponent tuple, coefficient) pairs, nonzero coefficients
    only, sorted descending under the ring's canonical order.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic queries

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def num_terms(self):
        return len(self.terms)

    def total_degree(self):
        """Largest term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m, _ in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {sum(m) for m, _ in self.terms}
        return len(degs) == 1

    def bidegree(self):
        """(base degree, fiber degree) when bihomogeneous, else None.

        The zero polynomial returns None: it has no well defined bidegree.
        """
        if not self.terms:
            return None
        ring = self.ring
        fiber_idx = [i for i, nm in enumerate(ring.names) if nm in ring.fiber]
        base_idx = [i for i in range(ring.nvars) if i not in set(fiber_idx)]
        seen = set()
        for m, _ in self.terms:
            seen.add((sum(m[i] for i in base_idx), sum(m[i] for i in fiber_idx)))
            if len(seen) > 1:
                return None
        return next(iter(seen))

    def is_monomial(self):
        return len(self.terms) == 1

    def leading_term(self, order=None):
        """(monomial, coefficient) of the largest term; error on zero."""
        if not self.terms:
            raise UsageError("the zero polynomial has no leading term")
        if order is None or order == self.ring.order:
            return self.terms[0]
        key = order.key_func(self.ring.nvars)
        return max(self.terms, key=lambda t: key(t[0]))

    def leading_monomial(self, order=None):
        return self.leading_term(order)[0]

    def leading_coeff(self, order=None):
        return self.leading_term(order)[1]

    def coeff(self, mono):
        for m, c in self.terms:
            if m == mono:
                return c
        return self.ring.field.coerce(0)

    def monic(self, order=None):
        if not self.terms:
            return self
        f = self.ring.field
        lc = self.leading_coeff(order)
        inv = f.inv(lc)
        return Polynomial(self.ring, tuple((m, f.mul(c, inv)) for m, c in self.terms))

    # -- arithmetic

    def _coerce_other(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingError("polynomials from different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce_other(other)
        f = self.ring.field
        acc = dict(self.terms)
        for m, c in other.terms:
            prev = acc.get(m)
            acc[m] = c if prev is None else f.add(prev, c)
        return Polynomial(self.ring, _sorted_terms(self.ring, acc))

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, tuple((m, f.neg(c)) for m, c in self.terms))

    def __sub__(self, other):
        other = self._coerce_other(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.ring.const(other) - self

    def __mul__(self, other):
        other = self._coerce_other(other)
        f = self.ring.field
        acc = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                m = tuple(x + y for x, y in zip(ma, mb))
                c = f.mul(ca, cb)
                prev = acc.get(m)
                acc[m] = c if prev is None else f.add(prev, c)
        return Polynomial(self.ring, _sorted_terms(self.ring, acc))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise UsageError("polynomial powers take a nonnegative integer")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return out

    # -- structure

    def map_to(self, target, rename=None):
        """Reinterpret in another ring, matching variables by name.

        rename maps source names to target names.  Fails if a variable
        with a nonzero exponent has no image.
        """
        rename = rename or {}
        src = self.ring
        positions = []
        for i, nm in enumerate(src.names):
            tnm = rename.get(nm, nm)
            positions.append(target._index.get(tnm))
        out = []
        for m, c in self.terms:
            exps = [0] * target.nvars
            for i, e in enumerate(m):
                if not e:
                    continue
                j = positions[i]
                if j is None:
                    raise RingError(f"variable {src.names[i]!r} has no image in the target ring")
                exps[j] += e
            out.append((tuple(exps), c))
        return target.from_terms(out)

    def substitute(self, assignments):
        """Evaluate with variables replaced by polynomials of one common ring.

        assignments maps variable names to Polynomial values; unassigned
        variables map to their namesakes in the target ring.
        """
        if not assignments:
            return self
        target = next(iter(assignments.values())).ring
        cache = {}

        def image(i):
            if i not in cache:
                nm = self.ring.names[i]
                cache[i] = assignments.get(nm) or target.var(nm)
            return cache[i]

        total = target.zero()
        for m, c in self.terms:
            part = target.const(c)
            for i, e in enumerate(m):
                if e:
                    part = part * image(i) ** e
            total = total + part
        return total

    # -- equality, rendering

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction, type(mpq(0)), type(mpz(0)))):
                return self == self.ring.const(other)
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"<{render_poly(self)}>"


# ---------------------------------------------------------------------------
# division helpers


def try_exact_div(p, d):
    """p / d when the division is exact, else None."""
    if not isinstance(d, Polynomial):
        d = p.ring.const(d)
    if d.is_zero():
        raise UsageError("division by the zero polynomial")
    if p.ring != d.ring:
        raise RingError("polynomials from different rings")
    ring = p.ring
    f = ring.field
    key = ring._key
    dlm, dlc = d.terms[0]
    dtail = d.terms[1:]
    work = dict(p.terms)
    quo = {}
    while work:
        m = max(work, key=key)
        c = work[m]
        q = mono_div(m, dlm)
        if q is None:
            return None
        qc = f.div(c, dlc)
        prev = quo.get(q)
        quo[q] = qc if prev is None else f.add(prev, qc)
        del work[m]
        for dm, dc in dtail:
            mm = mono_mul(q, dm)
            sub = f.mul(qc, dc)
            prev = work.get(mm)
            val = f.neg(sub) if prev is None else f.sub(prev, sub)
            if val:
                work[mm] = val
            elif prev is not None:
                del work[mm]
    return Polynomial(ring, _sorted_terms(ring, quo))


# ---------------------------------------------------------------------------
# parsing and rendering


def _parse_poly(ring, text):
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    names_by_len = sorted(ring.names, key=len, reverse=True)
    n = len(text)
    pos = 0
    zero = ring.monomial((0,) * ring.nvars, 0)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_int():
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ParseError("expected a number", start)
        return int(text[start:pos])

    def read_name():
        nonlocal pos
        for nm in names_by_len:
            if text.startswith(nm, pos):
                end = pos + len(nm)
                # do not split a longer identifier
                if end < n and (text[end].isalnum() or text[end] == "_"):
                    continue
                pos = end
                return nm
        raise ParseError("expected a variable name", pos)

    def read_atom():
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise ParseError("expected a term", pos)
        ch = text[pos]
        if ch == "(":
            pos += 1
            inner = read_expr()
            skip_ws()
            if pos >= n or text[pos] != ")":
                raise ParseError("expected a closing parenthesis", pos)
            pos += 1
            return inner
        if ch.isdigit():
            num = read_int()
            save = pos
            skip_ws()
            if pos < n and text[pos] == "/":
                pos += 1
                skip_ws()
                den = read_int()
                if den == 0:
                    raise ParseError("zero denominator", pos)
                return ring.monomial((0,) * ring.nvars, Fraction(num, den))
            pos = save
            return ring.monomial((0,) * ring.nvars, num)
        if ch.isalpha() or ch == "_":
            return ring.var(read_name())
        raise ParseError("expected a term", pos)

    def read_factor():
        nonlocal pos
        base = read_atom()
        skip_ws()
        if pos < n and text[pos] == "^":
            pos += 1
            skip_ws()
            neg = False
            if pos < n and text[pos] == "-":
                neg = True
                pos += 1
            e = read_int()
            if neg:
                raise ParseError("negative exponent", pos)
            return base ** e
        return base

    def read_term():
        nonlocal pos
        prod = read_factor()
        while True:
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                prod = prod * read_factor()
                continue
            # juxtaposition like 2x_1y_2 keeps working
            if pos < n and (text[pos].isalpha() or text[pos] == "_"):
                prod = prod * read_factor()
                continue
            return prod

    def read_expr():
        nonlocal pos
        skip_ws()
        sign = 1
        if pos < n and text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
        total = read_term()
        if sign < 0:
            total = -total
        while True:
            skip_ws()
            if pos < n and text[pos] in "+-":
                sign = -1 if text[pos] == "-" else 1
                pos += 1
                t = read_term()
                total = total + (-t if sign < 0 else t)
                continue
            return total

    skip_ws()
    if pos >= n:
        raise ParseError("empty polynomial text", pos)
    result = read_expr()
    skip_ws()
    if pos < n:
        raise ParseError(f"unexpected character {text[pos]!r}", pos)
    return result if result.terms else zero


def _coeff_is_negative(field, c):
    if field.char == 0:
        return c < 0
    return False


def render_poly(p):
    """Canonical text form; parse(render(p)) == p."""
    if not p.terms:
        return "0"
    ring = p.ring
    f = ring.field
    pieces = []
    for i, (m, c) in enumerate(p.terms):
        neg = _coeff_is_negative(f, c)
        mag = f.neg(c) if neg else c
        factors = []
        for j, e in enumerate(m):
            if e == 1:
                factors.append(ring.names[j])
            elif e > 1:
                factors.append(f"{ring.names[j]}^{e}")
        if not factors:
            body = f.render(mag)
        elif mag == f.coerce(1):
            body = "*".join(factors)
        else:
            body = f.render(mag) + "*" + "*".join(factors)
        if i == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)
