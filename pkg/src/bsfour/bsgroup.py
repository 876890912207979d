"""Normal forms in the solvable Baumslag-Solitar group B(k).

B(k) = <a, b | a b a^-1 = b^k>.  For k != 0 every element is b^x a^t
with x in Z[1/k], and multiplication twists the x-part:

    (x1, t1) (x2, t2) = (x1 + k^t1 * x2, t1 + t2).

x is stored as num / |k|^pow with pow == 0 or |k| not dividing num, so
each element has exactly one representation.  The degenerate parameters
ride along: B(0) = Z (b dies), B(1) = Z^2, B(-1) is the Klein bottle
group; all are handled by the same reduction.

Words are strings over a, A, b, B with A = a^-1 and B = b^-1.
"""

from fractions import Fraction
from typing import NamedTuple

from . import _kernel
from .errors import SchemaError, WordSyntaxError

_LETTERS = frozenset("aAbB")
_INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}


class BSElement(NamedTuple):
    """Reduced normal form b^(num / |k|^pow) a^t."""

    num: int
    pow: int
    t: int

    def is_identity(self):
        return self.num == 0 and self.t == 0

    def to_json(self):
        return {"num": str(self.num), "pow": self.pow, "t": str(self.t)}

    @classmethod
    def from_json(cls, doc, k):
        if not isinstance(doc, dict):
            raise SchemaError("group element must be a JSON object")
        for field in ("num", "pow", "t"):
            if field not in doc:
                raise SchemaError("group element missing field %r" % field)
        num = _json_int(doc["num"], "num")
        t = _json_int(doc["t"], "t")
        pw = doc["pow"]
        if not isinstance(pw, int) or isinstance(pw, bool) or pw < 0:
            raise SchemaError("pow must be a non-negative integer")
        return element(num, pw, t, k)


def _json_int(value, field):
    if isinstance(value, bool):
        raise SchemaError("field %r must be an integer string" % field)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        text = value.strip()
        stripped = text[1:] if text[:1] in "+-" else text
        if stripped.isdigit():
            return int(text)
    raise SchemaError("field %r must be a decimal integer string" % field)


def element(num, pow, t, k):
    """Canonical element with x = num / |k|^pow, reducing as needed."""
    if pow < 0:
        raise ValueError("pow must be non-negative")
    return BSElement(*_kernel.bs_reduce(num, pow, t, k))


def identity():
    return BSElement(0, 0, 0)


def gen_a():
    return BSElement(0, 0, 1)


def gen_b(k):
    return element(1, 0, 0, k)


def multiply(g, h, k):
    return BSElement(*_kernel.bs_mul(tuple(g), tuple(h), k))


def invert(g, k):
    return BSElement(*_kernel.bs_inv(tuple(g), k))


def conjugated_b(i, k):
    """a^-i b a^i, the generator of |k|^-i Z inside Z[1/k]."""
    if i < 0:
        raise ValueError("i must be non-negative")
    return element(-1 if (k < 0 and i & 1) else 1, i, 0, k)


def check_word(word):
    if not isinstance(word, str):
        raise WordSyntaxError("word must be a string")
    bad = set(word) - _LETTERS
    if bad:
        raise WordSyntaxError("invalid letters %s; use a, A, b, B"
                              % "".join(sorted(bad)))
    return word


def eval_word(word, k):
    """Image of a free word under F(a, b) -> B(k)."""
    return BSElement(*_kernel.eval_word(check_word(word), k))


def free_reduce(word):
    """Cancel adjacent inverse pairs until none remain."""
    out = []
    for ch in check_word(word):
        if out and out[-1] == _INVERSE[ch]:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def invert_word(word):
    return check_word(word)[::-1].swapcase()


def x_fraction(g, k):
    """The x-part as an exact rational."""
    kq = -k if k < 0 else k
    return Fraction(g[0], (kq or 1) ** g[1])


def sort_key(g):
    """Canonical term order: by t, then pow, then num."""
    return (g[2], g[1], g[0])
