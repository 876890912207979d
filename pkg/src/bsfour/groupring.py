"""Integral group rings: Z[B(k)] and the free ring Z[F(a, b)].

Elements are sparse integer combinations of group elements.  Relator
calculus (Fox derivatives, geometric series) happens in the free ring
and lands in Z[B(k)] through project(), which evaluates each word to
its normal form.

The involution extends g -> g^-1 linearly; it is an anti-automorphism.
The augmentation sums coefficients; it is the ring map to Z induced by
collapsing the group.
"""

from . import _kernel, bsgroup
from .bsgroup import BSElement, _json_int
from .errors import GroupMismatchError, SchemaError

_IDENT = (0, 0, 0)


class GroupRingElt:
    """Element of Z[B(k)].  terms maps reduced (num, pow, t) to nonzero
    coefficients; the parameter k rides along and must match between
    operands."""

    __slots__ = ("k", "terms")

    def __init__(self, k, terms=None):
        self.k = k
        clean = {}
        if terms:
            for g, c in terms.items():
                if not c:
                    continue
                key = _kernel.bs_reduce(g[0], g[1], g[2], k)
                c0 = clean.get(key, 0) + c
                if c0:
                    clean[key] = c0
                elif key in clean:
                    del clean[key]
        self.terms = clean

    @classmethod
    def _raw(cls, k, terms):
        # trusted path: terms already reduced and zero-free
        obj = object.__new__(cls)
        obj.k = k
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, k):
        return cls._raw(k, {})

    @classmethod
    def one(cls, k):
        return cls._raw(k, {_IDENT: 1})

    @classmethod
    def monomial(cls, k, g, coeff=1):
        return cls(k, {tuple(g): coeff})

    @classmethod
    def from_word(cls, k, word, coeff=1):
        return cls.monomial(k, bsgroup.eval_word(word, k), coeff)

    def _check(self, other):
        if self.k != other.k:
            raise GroupMismatchError(
                "mixed group parameters k=%d and k=%d" % (self.k, other.k))

    def _coerce(self, other):
        if isinstance(other, int):
            return self._raw(self.k, {_IDENT: other} if other else {})
        if isinstance(other, GroupRingElt):
            self._check(other)
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for g, c in other.terms.items():
            c0 = out.get(g, 0) + c
            if c0:
                out[g] = c0
            elif g in out:
                del out[g]
        return self._raw(self.k, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self._raw(self.k, {g: -c for g, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self.zero(self.k)
            return self._raw(self.k,
                             {g: c * other for g, c in self.terms.items()})
        if isinstance(other, GroupRingElt):
            self._check(other)
            return self._raw(self.k,
                             _kernel.ring_mul(self.terms, other.terms, self.k))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return (isinstance(other, GroupRingElt) and self.k == other.k
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def involute(self):
        """Linear extension of g -> g^-1."""
        return self._raw(self.k, _kernel.ring_involute(self.terms, self.k))

    def augment(self):
        return sum(self.terms.values())

    def identity_coefficient(self):
        return self.terms.get(_IDENT, 0)

    def map_coefficients(self, fn):
        out = {}
        for g, c in self.terms.items():
            c = fn(c)
            if c:
                out[g] = c
        return self._raw(self.k, out)

    def sorted_terms(self):
        """Pairs (element, coefficient) in canonical (t, pow, num) order."""
        return [(BSElement(*g), self.terms[g])
                for g in sorted(self.terms, key=bsgroup.sort_key)]

    def support(self):
        return [g for g, _ in self.sorted_terms()]

    def coefficients(self):
        return [c for _, c in self.sorted_terms()]

    def to_json(self):
        return {"k": self.k,
                "terms": [{"coeff": str(c), "elt": g.to_json()}
                          for g, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, doc):
        if not isinstance(doc, dict):
            raise SchemaError("ring element must be a JSON object")
        k = doc.get("k")
        if not isinstance(k, int) or isinstance(k, bool):
            raise SchemaError("ring element needs an integer field 'k'")
        terms = doc.get("terms")
        if not isinstance(terms, list):
            raise SchemaError("ring element needs a list field 'terms'")
        acc = {}
        for item in terms:
            if not isinstance(item, dict) or set(item) != {"coeff", "elt"}:
                raise SchemaError("each term needs exactly 'coeff' and 'elt'")
            c = _json_int(item["coeff"], "coeff")
            g = BSElement.from_json(item["elt"], k)
            acc[tuple(g)] = acc.get(tuple(g), 0) + c
        return cls(k, acc)

    @classmethod
    def parse(cls, k, text):
        """Small human syntax: integer coefficients and words over
        a, A, b, B joined by '*', combined with '+'/'-'."""
        if not isinstance(text, str) or not text.strip():
            raise SchemaError("empty ring expression")
        tokens = _tokenize(text)
        total = cls.zero(k)
        i, n = 0, len(tokens)
        first = True
        while i < n:
            sign = 1
            if first:
                if tokens[i] == "-":
                    sign = -1
                    i += 1
                elif tokens[i] == "+":
                    raise SchemaError("leading '+' in ring expression")
            else:
                if tokens[i] == "+":
                    sign = 1
                elif tokens[i] == "-":
                    sign = -1
                else:
                    raise SchemaError("expected '+' or '-' between terms")
                i += 1
            coeff = sign
            parts = []
            saw = False
            while i < n and tokens[i] not in ("+", "-"):
                tok = tokens[i]
                if tok == "*":
                    if not saw or i + 1 >= n or tokens[i + 1] in ("+", "-", "*"):
                        raise SchemaError("misplaced '*' in ring expression")
                    i += 1
                    continue
                if isinstance(tok, int):
                    coeff *= tok
                else:
                    parts.append(tok)
                saw = True
                i += 1
            if not saw:
                raise SchemaError("empty term in ring expression")
            g = bsgroup.eval_word("".join(parts), k)
            total = total + cls.monomial(k, g, coeff)
            first = False
        return total

    def __str__(self):
        return _render(self.sorted_terms(),
                       lambda g: _elt_str(g, self.k))

    def __repr__(self):
        return "GroupRingElt(k=%d, %s)" % (self.k, self)


def _tokenize(text):
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*":
            out.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(int(text[i:j]))
            i = j
        elif ch in "aAbB":
            j = i
            while j < n and text[j] in "aAbB":
                j += 1
            out.append(text[i:j])
            i = j
        else:
            raise SchemaError("unexpected character %r in ring expression" % ch)
    return out


def _elt_str(g, k):
    num, pw, t = g
    parts = []
    if num:
        if pw == 0:
            parts.append("b" if num == 1 else "b^%d" % num)
        else:
            parts.append("b^(%d/%d)" % (num, abs(k) ** pw))
    if t:
        parts.append("a" if t == 1 else "a^%d" % t)
    return "*".join(parts) if parts else "1"


def _render(pairs, show):
    if not pairs:
        return "0"
    bits = []
    for g, c in pairs:
        s = show(g)
        mag = abs(c)
        if s == "1":
            body = str(mag)
        elif mag == 1:
            body = s
        else:
            body = "%d*%s" % (mag, s)
        if not bits:
            bits.append(body if c > 0 else "-" + body)
        else:
            bits.append(("+ " if c > 0 else "- ") + body)
    return " ".join(bits)


class FreeRingElt:
    """Element of Z[F(a, b)], keyed by freely reduced words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                if not c:
                    continue
                w = bsgroup.free_reduce(w)
                c0 = clean.get(w, 0) + c
                if c0:
                    clean[w] = c0
                elif w in clean:
                    del clean[w]
        self.terms = clean

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({"": 1})

    @classmethod
    def from_word(cls, word, coeff=1):
        return cls({word: coeff})

    def __add__(self, other):
        if not isinstance(other, FreeRingElt):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            c0 = out.get(w, 0) + c
            if c0:
                out[w] = c0
            elif w in out:
                del out[w]
        return self._raw(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._raw({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self.zero()
            return self._raw({w: c * other for w, c in self.terms.items()})
        if not isinstance(other, FreeRingElt):
            return NotImplemented
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = bsgroup.free_reduce(w1 + w2)
                c0 = out.get(w, 0) + c1 * c2
                if c0:
                    out[w] = c0
                elif w in out:
                    del out[w]
        return self._raw(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, FreeRingElt) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def project(self, k):
        """Image in Z[B(k)] by evaluating each word."""
        acc = {}
        for w, c in self.terms.items():
            g = tuple(bsgroup.eval_word(w, k))
            acc[g] = acc.get(g, 0) + c
        return GroupRingElt(k, acc)

    def sorted_terms(self):
        return [(w, self.terms[w])
                for w in sorted(self.terms, key=lambda w: (len(w), w))]

    def __str__(self):
        return _render(self.sorted_terms(), lambda w: w or "1")

    def __repr__(self):
        return "FreeRingElt(%s)" % self


def geometric_series(k):
    """(b^k - 1)/(b - 1) as an element of the free ring.

    1 + b + ... + b^(k-1) for k > 0, zero for k = 0, and
    -(b^-1 + ... + b^k) for k < 0; in every case
    (b - 1) * geometric_series(k) = b^k - 1.
    """
    if k > 0:
        return FreeRingElt._raw({"b" * i: 1 for i in range(k)})
    if k == 0:
        return FreeRingElt.zero()
    return FreeRingElt._raw({"B" * i: -1 for i in range(1, -k + 1)})
