"""Oriented rewriting modulo a two-sided relation ideal, diamond-lemma overlap
auditing with degree-bounded completion, and degree-sliced span comparison.

Rules are stored as ``lhs word -> rhs SuperPoly`` with every right-hand
monomial strictly below the left side in the alphabet's monomial order, so
rewriting terminates and normal forms certify ideal membership.  Span tools
compare Scalar-linear spans of shifted relation families inside a degree
slice, with seeded rational evaluations of p as an accelerator and one fully
symbolic pass over Q(p) as the certificate.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Scalar
from .freealg import SuperPoly


class OrientationError(ValueError):
    """A relation cannot be oriented with a unit leading coefficient."""


def primitive_part(poly):
    """Divide out the polynomial content of the coefficients (p-only case).

    Derived relations can arrive as p-multiples of a primitive relation; over
    the polynomial coefficient ring those are weaker, so span certification is
    run against the primitive form.  Coefficients involving symbols other than
    p are left untouched.
    """
    if poly.is_zero:
        return poly
    content = None
    for _, c in poly._terms.items():
        try:
            cp = RatP.from_scalar(c)
        except ValueError:
            return poly
        content = dict(cp.num) if content is None else _poly_gcd(content, cp.num)
        if _poly_deg(content) == 0:
            return poly
    out = poly
    g = Scalar.zero()
    for deg, coeff in content.items():
        g = g + Scalar.rational(coeff) * Scalar.var("p") ** deg
    return poly.map_scalars(lambda c: c.divide_exact(g))


def orient(polys):
    """Turn relation polynomials into oriented rules {lhs: rhs}.

    Each polynomial is scaled so its leading monomial has coefficient 1 and
    rewritten as lhs -> lhs - poly.  Raises OrientationError if a leading
    coefficient is not an invertible constant.
    """
    rules = {}
    for f in polys:
        if f.is_zero:
            continue
        lead = f.leading_word()
        lc = f.coefficient(lead)
        if not lc.is_constant:
            raise OrientationError(
                f"leading coefficient {lc} of {f!r} is not a unit")
        rhs = (SuperPoly.word(f.alphabet, lead, lc) - f).scale(lc.unit_inverse())
        rules[lead] = rhs
    return rules


class RewriteSystem:
    """Oriented, terminating rewrite system over a graded alphabet."""

    def __init__(self, alphabet, rules):
        self.alphabet = alphabet
        self.rules = dict(rules)
        self._cache = {}
        key = alphabet.word_key
        by_first = {}
        for lhs, rhs in self.rules.items():
            if not lhs:
                raise ValueError("empty left side")
            lk = key(lhs)
            for w in rhs.words():
                if key(w) >= lk:
                    raise OrientationError(
                        f"rule {lhs} is not order-decreasing (rhs word {w})")
            by_first.setdefault(lhs[0], []).append(lhs)
        # longer left sides first, so the most specific rule matches
        self._by_first = {x: sorted(ls, key=len, reverse=True)
                          for x, ls in by_first.items()}

    def __len__(self):
        return len(self.rules)

    def rule_polys(self):
        """The rules as relation polynomials lhs - rhs."""
        return [SuperPoly.word(self.alphabet, lhs) - rhs
                for lhs, rhs in self.rules.items()]

    def _first_match(self, word):
        by_first = self._by_first
        n = len(word)
        for i in range(n):
            cands = by_first.get(word[i])
            if not cands:
                continue
            for lhs in cands:
                if word[i:i + len(lhs)] == lhs:
                    return i, lhs
        return None

    def nf_word(self, word) -> SuperPoly:
        """Normal form of a single word (iterative, memoized)."""
        cache = self._cache
        hit = cache.get(word)
        if hit is not None:
            return hit
        stack = [word]
        while stack:
            w = stack[-1]
            if w in cache:
                stack.pop()
                continue
            m = self._first_match(w)
            if m is None:
                cache[w] = SuperPoly.word(self.alphabet, w)
                stack.pop()
                continue
            i, lhs = m
            pre, post = w[:i], w[i + len(lhs):]
            rhs = self.rules[lhs]
            deps = [pre + w2 + post for w2 in rhs.words()]
            missing = [d for d in deps if d not in cache]
            if missing:
                stack.extend(missing)
                continue
            acc = {}
            for w2, c2 in rhs._terms.items():
                red = cache[pre + w2 + post]
                for w3, c3 in red._terms.items():
                    cur = acc.get(w3)
                    s = cur + c2 * c3 if cur is not None else c2 * c3
                    if s.is_zero:
                        if cur is not None:
                            del acc[w3]
                    else:
                        acc[w3] = s
            cache[w] = SuperPoly(self.alphabet, acc, _internal=True)
            stack.pop()
        return cache[word]

    def normal_form(self, poly: SuperPoly) -> SuperPoly:
        out = {}
        for w, c in poly._terms.items():
            for w2, c2 in self.nf_word(w)._terms.items():
                cur = out.get(w2)
                s = cur + c * c2 if cur is not None else c * c2
                if s.is_zero:
                    if cur is not None:
                        del out[w2]
                else:
                    out[w2] = s
        return SuperPoly(self.alphabet, out, _internal=True)

    def reduces_to_zero(self, poly: SuperPoly) -> bool:
        return self.normal_form(poly).is_zero

    # -- confluence audit ---------------------------------------------

    def _overlap_words(self, max_degree):
        seen = set()
        lhss = list(self.rules)
        for l1 in lhss:
            for l2 in lhss:
                for k in range(1, min(len(l1), len(l2))):
                    if l1[len(l1) - k:] == l2[:k]:
                        w = l1 + l2[k:]
                        if len(w) <= max_degree:
                            item = (w, l1, 0, l2, len(l1) - k)
                            if item not in seen:
                                seen.add(item)
                                yield item
                if l1 != l2 and len(l2) < len(l1):
                    for i in range(len(l1) - len(l2) + 1):
                        if l1[i:i + len(l2)] == l2 and len(l1) <= max_degree:
                            item = (l1, l1, 0, l2, i)
                            if item not in seen:
                                seen.add(item)
                                yield item

    def _apply_rule_at(self, word, lhs, i):
        pre, post = word[:i], word[i + len(lhs):]
        out = {}
        for w2, c2 in self.rules[lhs]._terms.items():
            key = pre + w2 + post
            cur = out.get(key)
            s = cur + c2 if cur is not None else c2
            if s.is_zero:
                if cur is not None:
                    del out[key]
            else:
                out[key] = s
        return SuperPoly(self.alphabet, out, _internal=True)

    def overlap_check(self, max_degree: int):
        """All ambiguities up to ``max_degree``; returns the unresolved ones.

        For each overlap or inclusion word both one-step reducts are taken to
        normal form; a nonempty result lists (word, difference) pairs whose
        difference is a new ideal element not joinable by this system.
        """
        if max_degree < 3:
            raise ValueError("max_degree must be at least 3")
        bad = []
        for w, l1, i1, l2, i2 in self._overlap_words(max_degree):
            r1 = self.normal_form(self._apply_rule_at(w, l1, i1))
            r2 = self.normal_form(self._apply_rule_at(w, l2, i2))
            d = r1 - r2
            if not d.is_zero:
                bad.append((w, d))
        return bad


def interreduce(alphabet, rules):
    """Reduce every rule by the others until stable; drops redundant rules."""
    rules = dict(rules)
    for _ in range(200):
        changed = False
        for lhs in sorted(rules, key=alphabet.word_key):
            rhs = rules.pop(lhs)
            others = RewriteSystem(alphabet, rules)
            f = others.normal_form(SuperPoly.word(alphabet, lhs)) - others.normal_form(rhs)
            f = primitive_part(f)
            if f.is_zero:
                changed = True
                continue
            new = orient([f])
            (new_lhs, new_rhs), = new.items()
            if new_lhs != lhs or new_rhs != rhs:
                changed = True
            rules[new_lhs] = new_rhs
        if not changed:
            return rules
    raise RuntimeError("interreduction did not stabilize")


def complete(alphabet, relations, max_degree: int, max_rounds: int = 30) -> RewriteSystem:
    """Degree-bounded Buchberger-style completion of a relation list.

    Overlap differences (and interreduction remainders) are normalized to
    their primitive parts before orientation: a difference can emerge as a
    p-multiple of the rule it forces, and the compiled system presents the
    ideal saturated with respect to p.  Flatness of the quotient (normal-word
    counts matching the classical algebra) certifies that the saturation adds
    nothing in the audited degrees.
    """
    rules = interreduce(alphabet, orient([primitive_part(f) for f in relations]))
    for _ in range(max_rounds):
        system = RewriteSystem(alphabet, rules)
        bad = system.overlap_check(max_degree)
        if not bad:
            return system
        polys = system.rule_polys() + [primitive_part(d) for _, d in bad]
        rules = interreduce(alphabet, orient(polys))
    raise RuntimeError(f"completion did not converge in {max_rounds} rounds")


# ----------------------------------------------------------------------
# Rational functions in p over Q (internal helper for the symbolic pass).
# ----------------------------------------------------------------------

def _poly_norm(d):
    return {k: v for k, v in d.items() if v}


def _poly_mul(a, b):
    out = {}
    for i, u in a.items():
        for j, v in b.items():
            out[i + j] = out.get(i + j, Fraction(0)) + u * v
    return _poly_norm(out)


def _poly_add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
    return _poly_norm(out)


def _poly_sub(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) - v
    return _poly_norm(out)


def _poly_deg(a):
    return max(a) if a else -1


def _poly_divmod(a, b):
    q = {}
    r = dict(a)
    db = _poly_deg(b)
    lb = b[db]
    while r and _poly_deg(r) >= db:
        dr = _poly_deg(r)
        c = r[dr] / lb
        q[dr - db] = q.get(dr - db, Fraction(0)) + c
        for k, v in b.items():
            kk = k + dr - db
            r[kk] = r.get(kk, Fraction(0)) - c * v
            if r[kk] == 0:
                del r[kk]
    return q, r


def _poly_gcd(a, b):
    a, b = _poly_norm(a), _poly_norm(b)
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    if a:
        lc = a[_poly_deg(a)]
        a = {k: v / lc for k, v in a.items()}
    return a


class RatP:
    """Rational function in p over Q, gcd-reduced, denominator monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = {0: Fraction(1)}
        num = _poly_norm(num)
        if not num:
            den = {0: Fraction(1)}
        else:
            g = _poly_gcd(num, den)
            if _poly_deg(g) > 0:
                num = _poly_divmod(num, g)[0]
                den = _poly_divmod(den, g)[0]
            lc = den[_poly_deg(den)]
            if lc != 1:
                num = {k: v / lc for k, v in num.items()}
                den = {k: v / lc for k, v in den.items()}
        self.num = num
        self.den = den

    @classmethod
    def from_scalar(cls, s: Scalar) -> "RatP":
        num = {}
        for exp, coeff in s._terms.items():
            if any(exp[1:]) or coeff[1] != 0:
                raise ValueError("span coefficients must be rational polynomials in p")
            num[exp[0]] = coeff[0]
        return cls(num)

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        return RatP(_poly_add(_poly_mul(self.num, other.den),
                              _poly_mul(other.num, self.den)),
                    _poly_mul(self.den, other.den))

    def __sub__(self, other):
        return RatP(_poly_sub(_poly_mul(self.num, other.den),
                              _poly_mul(other.num, self.den)),
                    _poly_mul(self.den, other.den))

    def __mul__(self, other):
        return RatP(_poly_mul(self.num, other.num), _poly_mul(self.den, other.den))

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError
        return RatP(_poly_mul(self.num, other.den), _poly_mul(self.den, other.num))

    def __neg__(self):
        return RatP({k: -v for k, v in self.num.items()}, dict(self.den))

    def __eq__(self, other):
        return self.num == other.num and self.den == other.den


_RATP_ONE = RatP({0: Fraction(1)})


# ----------------------------------------------------------------------
# Degree-sliced span comparison.
# ----------------------------------------------------------------------

def shift_family(gens, degree_bound: int):
    """All u*f*v with f in gens and total degree <= degree_bound."""
    gens = [f for f in gens if not f.is_zero]
    if not gens:
        return []
    alphabet = gens[0].alphabet
    words = alphabet.words_up_to(degree_bound)
    out = []
    for f in gens:
        d = f.degree()
        if d > degree_bound:
            raise ValueError("generator exceeds the degree bound")
        for u in words:
            lu = len(u)
            if lu + d > degree_bound:
                continue
            uf = SuperPoly.word(alphabet, u) * f if u else f
            for v in words:
                if lu + d + len(v) <= degree_bound:
                    out.append(uf * SuperPoly.word(alphabet, v) if v else uf)
    return out


def _evaluation_points(seed: int, count: int):
    """Deterministic distinct integer evaluation points for p, never 0 or 1."""
    points = []
    state = (seed * 6364136223846793005 + 1442695040888963407) % (1 << 64)
    while len(points) < count:
        state = (state * 6364136223846793005 + 1442695040888963407) % (1 << 64)
        cand = (state >> 23) % 89 + 2
        if cand not in points:
            points.append(cand)
    return points


def _word_ranks(alphabet, degree_bound):
    words = alphabet.words_up_to(degree_bound)
    words.sort(key=alphabet.word_key)
    return {w: i for i, w in enumerate(words)}


def _gcd_all(values):
    from math import gcd
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            return 1
    return g or 1


def _int_rows(polys, ranks, pval):
    """Rows as {rank: int}: coefficients evaluated at integer p, denominators
    cleared row-wise, content stripped."""
    rows = []
    for f in polys:
        row = {}
        denom = 1
        for w, c in f._terms.items():
            q = c.substitute(p=pval).as_rational()
            if q:
                row[ranks[w]] = q
                denom = denom * q.denominator // _gcd_int(denom, q.denominator)
        if not row:
            rows.append({})
            continue
        irow = {k: int(v * denom) for k, v in row.items()}
        g = _gcd_all(irow.values())
        rows.append({k: v // g for k, v in irow.items()})
    return rows


def _gcd_int(a, b):
    from math import gcd
    return gcd(a, b)


def _int_insert(basis, row):
    """Fraction-free insertion into an integer echelon basis."""
    while row:
        lead = max(row)
        piv = basis.get(lead)
        if piv is None:
            g = _gcd_all(row.values())
            basis[lead] = {k: v // g for k, v in row.items()}
            return True
        a = piv[lead]
        b = row[lead]
        new = {k: a * v for k, v in row.items()}
        for k, v in piv.items():
            cur = new.get(k, 0) - b * v
            if cur:
                new[k] = cur
            elif k in new:
                del new[k]
        row = new
        if row:
            g = _gcd_all(row.values())
            if g > 1:
                row = {k: v // g for k, v in row.items()}
    return False


def _int_reduces_to_zero(basis, row):
    return not _int_insert_probe(basis, dict(row))


def _int_insert_probe(basis, row):
    while row:
        lead = max(row)
        piv = basis.get(lead)
        if piv is None:
            return row
        a = piv[lead]
        b = row[lead]
        new = {k: a * v for k, v in row.items()}
        for k, v in piv.items():
            cur = new.get(k, 0) - b * v
            if cur:
                new[k] = cur
            elif k in new:
                del new[k]
        row = new
        if row:
            g = _gcd_all(row.values())
            if g > 1:
                row = {k: v // g for k, v in row.items()}
    return row


# -- integer-coefficient univariate polynomials (for the symbolic pass) ----

def _ip_norm(d):
    return {k: v for k, v in d.items() if v}


def _ip_mul(a, b):
    out = {}
    for i, u in a.items():
        for j, v in b.items():
            out[i + j] = out.get(i + j, 0) + u * v
    return _ip_norm(out)


def _ip_scale_sub(a, ca, b, cb):
    """ca*a - cb*b for int polys a, b and int-poly scalars ca, cb."""
    out = {}
    for i, u in a.items():
        for j, v in ca.items():
            out[i + j] = out.get(i + j, 0) + u * v
    for i, u in b.items():
        for j, v in cb.items():
            out[i + j] = out.get(i + j, 0) - u * v
    return _ip_norm(out)


def _ip_content(a):
    return _gcd_all(a.values())


def _ip_primitive(a):
    g = _ip_content(a)
    return {k: v // g for k, v in a.items()} if g > 1 else a


def _ip_deg(a):
    return max(a) if a else -1


def _ip_pseudo_rem(a, b):
    """Pseudo-remainder of primitive int polys (Euclid step)."""
    db = _ip_deg(b)
    lb = b[db]
    r = dict(a)
    while r and _ip_deg(r) >= db:
        dr = _ip_deg(r)
        lr = r[dr]
        new = {}
        for k, v in r.items():
            new[k] = v * lb
        for k, v in b.items():
            kk = k + dr - db
            new[kk] = new.get(kk, 0) - v * lr
        r = _ip_norm(new)
        if r:
            r = _ip_primitive(r)
    return r


def _ip_gcd(a, b):
    a, b = _ip_norm(a), _ip_norm(b)
    if not a:
        return _ip_primitive(b) if b else {}
    if not b:
        return _ip_primitive(a)
    a, b = _ip_primitive(a), _ip_primitive(b)
    while b:
        a, b = b, _ip_pseudo_rem(a, b)
    return a


def _ip_div_exact(a, g):
    """Exact division of an int poly by a primitive divisor."""
    if _ip_deg(g) == 0:
        c = g[0]
        return {k: v // c for k, v in a.items()}
    out = {}
    r = dict(a)
    dg = _ip_deg(g)
    lg = g[dg]
    while r:
        dr = _ip_deg(r)
        q, rem = divmod(r[dr], lg)
        if rem:
            raise ValueError("inexact division")
        out[dr - dg] = q
        for k, v in g.items():
            kk = k + dr - dg
            cur = r.get(kk, 0) - q * v
            if cur:
                r[kk] = cur
            elif kk in r:
                del r[kk]
    return out


def _sym_rows(polys, ranks):
    """Rows as {rank: int-poly in p}; no sqrt2 or extra symbols allowed."""
    rows = []
    for f in polys:
        row = {}
        denom = 1
        for w, c in f._terms.items():
            for exp, coeff in c._terms.items():
                if any(exp[1:]) or coeff[1] != 0:
                    raise ValueError("span coefficients must be rational in p")
            poly = {exp[0]: coeff[0] for exp, coeff in c._terms.items()}
            if poly:
                row[ranks[w]] = poly
                for v in poly.values():
                    denom = denom * v.denominator // _gcd_int(denom, v.denominator)
        irow = {}
        for k, poly in row.items():
            irow[k] = {d: int(v * denom) for d, v in poly.items()}
        rows.append(irow)
    return rows


def _row_content(row):
    """(integer content, polynomial content) of a symbolic row."""
    ig = 0
    from math import gcd
    for poly in row.values():
        for v in poly.values():
            ig = gcd(ig, v)
            if ig == 1:
                break
    pg = None
    for poly in row.values():
        pg = dict(poly) if pg is None else _ip_gcd(pg, poly)
        if _ip_deg(pg) == 0:
            pg = None
            break
    return (ig or 1), pg


def _sym_strip(row):
    if not row:
        return row
    ig, pg = _row_content(row)
    if ig > 1:
        row = {k: {d: v // ig for d, v in poly.items()} for k, poly in row.items()}
    if pg is not None and _ip_deg(pg) > 0:
        row = {k: _ip_div_exact(poly, pg) for k, poly in row.items()}
    return row


def _sym_insert(basis, row):
    row = _sym_strip(row)
    while row:
        lead = max(row)
        piv = basis.get(lead)
        if piv is None:
            basis[lead] = row
            return True
        a = piv[lead]
        b = row[lead]
        new = {}
        for k, poly in row.items():
            new[k] = _ip_mul(poly, a)
        for k, poly in piv.items():
            sub = _ip_mul(poly, b)
            cur = new.get(k)
            if cur is None:
                new[k] = {d: -v for d, v in sub.items()}
            else:
                for d, v in sub.items():
                    nv = cur.get(d, 0) - v
                    if nv:
                        cur[d] = nv
                    elif d in cur:
                        del cur[d]
                if not cur:
                    del new[k]
        row = _sym_strip({k: v for k, v in new.items() if v})
    return False


def _sym_reduces_to_zero(basis, row):
    row = _sym_strip(dict(row))
    while row:
        lead = max(row)
        piv = basis.get(lead)
        if piv is None:
            return False
        a = piv[lead]
        b = row[lead]
        new = {}
        for k, poly in row.items():
            new[k] = _ip_mul(poly, a)
        for k, poly in piv.items():
            sub = _ip_mul(poly, b)
            cur = new.get(k)
            if cur is None:
                new[k] = {d: -v for d, v in sub.items()}
            else:
                for d, v in sub.items():
                    nv = cur.get(d, 0) - v
                    if nv:
                        cur[d] = nv
                    elif d in cur:
                        del cur[d]
                if not cur:
                    del new[k]
        row = _sym_strip({k: v for k, v in new.items() if v})
    return True


_ECHELON_CACHE = {}


def _cached_echelons(gens, degree_bound, seed, points, symbolic):
    key = (tuple(gens), degree_bound, seed, points, symbolic)
    hit = _ECHELON_CACHE.get(key)
    if hit is not None:
        return hit
    alphabet = gens[0].alphabet
    ranks = _word_ranks(alphabet, degree_bound)
    shifts = shift_family(list(gens), degree_bound)
    # inserting rows with small leading words first keeps later reductions
    # from cascading through unfinished rows (large constant-factor win)
    eval_bases = []
    for pval in _evaluation_points(seed, points):
        basis = {}
        rows = _int_rows(shifts, ranks, pval)
        rows.sort(key=lambda r: max(r) if r else -1)
        for row in rows:
            _int_insert(basis, row)
        eval_bases.append((pval, basis))
    sym_basis = None
    if symbolic:
        sym_basis = {}
        rows = _sym_rows(shifts, ranks)
        rows.sort(key=lambda r: max(r) if r else -1)
        for row in rows:
            _sym_insert(sym_basis, row)
    out = (ranks, eval_bases, sym_basis, len(shifts))
    _ECHELON_CACHE[key] = out
    return out


def span_contains(gens, targets, degree_bound: int, seed: int = 0,
                  points: int = 3, symbolic: bool = True):
    """Is every target in the Scalar-linear span of degree-bounded shifts of gens?

    Seeded integer evaluations of p run first (fast negative witnesses), then
    one fully symbolic pass over Q[p] confirms membership exactly.  Returns
    (ok, detail).
    """
    targets = [t for t in targets if not t.is_zero]
    gens = [g for g in gens if not g.is_zero]
    if not targets:
        return True, "no targets"
    if not gens:
        return False, "empty generating family"
    ranks, eval_bases, sym_basis, nshifts = _cached_echelons(
        tuple(gens), degree_bound, seed, points, symbolic)
    for pval, basis in eval_bases:
        for i, t in enumerate(targets):
            row = _int_rows([t], ranks, pval)[0]
            if not _int_reduces_to_zero(basis, row):
                return False, f"target #{i} escapes the span at p={pval}"
    if sym_basis is not None:
        for i, t in enumerate(targets):
            row = _sym_rows([t], ranks)[0]
            if not _sym_reduces_to_zero(sym_basis, row):
                return False, f"target #{i} escapes the span symbolically"
    return True, f"{len(targets)} targets inside span of {nshifts} shifts"


def span_equal(set1, set2, degree_bound: int, seed: int = 0,
               points: int = 3, symbolic: bool = True) -> bool:
    """Mutual degree-sliced span containment of two relation families."""
    ok1, _ = span_contains(set2, set1, degree_bound, seed=seed,
                           points=points, symbolic=symbolic)
    if not ok1:
        return False
    ok2, _ = span_contains(set1, set2, degree_bound, seed=seed,
                           points=points, symbolic=symbolic)
    return ok2
