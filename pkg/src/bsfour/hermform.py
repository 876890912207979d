"""Hermitian forms over the group ring of B(k).

A form is a square matrix A over Z[B(k)] equal to its conjugate
transpose (involute entries, then transpose), evaluating on row
vectors by s(x, y) = x A involute(y)^T, linear in x.

Invertibility over the group ring is never decided heuristically:
either a certificate C with A C = C A = 1 is produced and checked by
exact multiplication, or the answer is unknown.  Parity reads the
identity coefficients of the diagonal; cross terms contribute
lambda + conjugate(lambda), which has even identity coefficient, so
the diagonal rule agrees with evaluation parity.  The augmented form
is the integer Gram matrix obtained by applying the augmentation
entrywise; its signature is the signature invariant of the form.
"""

from dataclasses import dataclass
from enum import Enum

from . import _kernel, bsgroup, intlinalg
from .errors import CertificateError, GroupMismatchError, SchemaError
from .groupring import GroupRingElt

ARF_EXTENDED = "extended-from-Z"
ARF_ASSERTED = "asserted"


class Parity(Enum):
    ODD = "odd"
    EVEN = "even"


@dataclass(frozen=True)
class ArfTag:
    """Provenance-carried Arf invariant of an even form.

    No algorithm computes Arf from the matrix here; the value is 0 for
    forms extended from the integers and otherwise only what the caller
    asserts."""

    mode: str
    value: int

    def __post_init__(self):
        if self.mode not in (ARF_EXTENDED, ARF_ASSERTED):
            raise SchemaError("arf mode must be %r or %r"
                              % (ARF_EXTENDED, ARF_ASSERTED))
        if self.value not in (0, 1):
            raise SchemaError("arf value must be 0 or 1")
        if self.mode == ARF_EXTENDED and self.value != 0:
            raise SchemaError("forms extended from Z have arf 0")

    def to_json(self):
        return {"mode": self.mode, "value": self.value}

    @classmethod
    def from_json(cls, doc):
        if not isinstance(doc, dict) or set(doc) != {"mode", "value"}:
            raise SchemaError("arf tag needs exactly 'mode' and 'value'")
        return cls(doc["mode"], doc["value"])


def _zero(k):
    return GroupRingElt.zero(k)


def _one(k):
    return GroupRingElt.one(k)


def _freeze(rows):
    return tuple(tuple(row) for row in rows)


def mat_mul(A, B, k):
    if not A or not B:
        return ()
    w = len(B[0])
    h = len(B)
    out = []
    for row in A:
        new = []
        for j in range(w):
            acc = {}
            for p in range(h):
                _kernel.ring_addmul(acc, row[p].terms, B[p][j].terms, k)
            new.append(GroupRingElt._raw(k, acc))
        out.append(tuple(new))
    return tuple(out)


def mat_transpose(A):
    return tuple(zip(*A)) if A else ()


def mat_involute(A):
    return tuple(tuple(p.involute() for p in row) for row in A)


def mat_is_identity(A):
    for i, row in enumerate(A):
        for j, p in enumerate(row):
            if i == j:
                if p.terms != {(0, 0, 0): 1}:
                    return False
            elif p.terms:
                return False
    return True


def _star(A):
    # conjugate transpose; an anti-automorphism of the matrix ring
    return mat_transpose(mat_involute(A))


def _check_entries(k, rows, what):
    for row in rows:
        for p in row:
            if not isinstance(p, GroupRingElt):
                raise SchemaError("%s entries must be ring elements" % what)
            if p.k != k:
                raise GroupMismatchError(
                    "%s entry over k=%d inside a form over k=%d"
                    % (what, p.k, k))


class HermitianForm:
    """Hermitian matrix over Z[B(k)] with an optional verified inverse
    and optional Arf provenance."""

    __slots__ = ("k", "matrix", "inverse", "arf")

    def __init__(self, k, matrix, inverse=None, arf=None):
        matrix = _freeze(matrix)
        n = len(matrix)
        if any(len(row) != n for row in matrix):
            raise SchemaError("form matrix must be square")
        _check_entries(k, matrix, "form")
        for i in range(n):
            for j in range(n):
                if matrix[j][i] != matrix[i][j].involute():
                    raise SchemaError(
                        "matrix is not hermitian at (%d, %d)" % (i, j))
        self.k = k
        self.matrix = matrix
        if inverse is not None:
            inverse = _freeze(inverse)
            _check_entries(k, inverse, "certificate")
            if not (len(inverse) == n and all(len(r) == n for r in inverse)
                    and mat_is_identity(mat_mul(matrix, inverse, k))
                    and mat_is_identity(mat_mul(inverse, matrix, k))):
                raise CertificateError("inverse certificate failed"
                                       " verification")
        self.inverse = inverse
        if arf is not None and not isinstance(arf, ArfTag):
            raise SchemaError("arf must be an ArfTag")
        self.arf = arf

    @property
    def rank(self):
        return len(self.matrix)

    def with_inverse(self, inverse):
        return HermitianForm(self.k, self.matrix, inverse, self.arf)

    def with_arf(self, arf):
        return HermitianForm(self.k, self.matrix, self.inverse, arf)

    def to_json(self):
        doc = {"k": self.k,
               "matrix": [[p.to_json() for p in row] for row in self.matrix]}
        if self.inverse is not None:
            doc["inverse"] = [[p.to_json() for p in row]
                              for row in self.inverse]
        if self.arf is not None:
            doc["arf"] = self.arf.to_json()
        return doc

    @classmethod
    def from_json(cls, doc):
        if not isinstance(doc, dict):
            raise SchemaError("form must be a JSON object")
        k = doc.get("k")
        if not isinstance(k, int) or isinstance(k, bool):
            raise SchemaError("form needs an integer field 'k'")
        matrix = _json_matrix(doc.get("matrix"), k, "matrix")
        inverse = None
        if "inverse" in doc:
            inverse = _json_matrix(doc["inverse"], k, "inverse")
        arf = ArfTag.from_json(doc["arf"]) if "arf" in doc else None
        return cls(k, matrix, inverse, arf)


def _json_matrix(rows, k, what):
    if not isinstance(rows, list) or any(not isinstance(r, list)
                                         for r in rows):
        raise SchemaError("%s must be a list of rows" % what)
    out = []
    for row in rows:
        entries = []
        for cell in row:
            p = GroupRingElt.from_json(cell)
            if p.k != k:
                raise SchemaError("%s entry has k=%d, form has k=%d"
                                  % (what, p.k, k))
            entries.append(p)
        out.append(tuple(entries))
    return tuple(out)


def matrix_from_json(doc):
    """Parse {"k": int, "matrix": [[ring-elt JSON]]} into (k, rows)."""
    if not isinstance(doc, dict) or set(doc) != {"k", "matrix"}:
        raise SchemaError("matrix document needs exactly 'k' and 'matrix'")
    k = doc["k"]
    if not isinstance(k, int) or isinstance(k, bool):
        raise SchemaError("matrix document needs an integer 'k'")
    return k, _json_matrix(doc["matrix"], k, "matrix")


def matrix_to_json(M, k):
    return {"k": k, "matrix": [[p.to_json() for p in row] for row in M]}


def parity(f):
    """Odd iff some diagonal entry has odd identity coefficient."""
    for i in range(f.rank):
        if f.matrix[i][i].identity_coefficient() % 2:
            return Parity.ODD
    return Parity.EVEN


def sesquilinear(f, x, y):
    """s(x, y) = x A involute(y)^T for row vectors over the ring."""
    n = f.rank
    if len(x) != n or len(y) != n:
        raise ValueError("vector length must match the rank")
    ybar = [p.involute() for p in y]
    total = _zero(f.k)
    for i in range(n):
        row = _zero(f.k)
        for j in range(n):
            row = row + f.matrix[i][j] * ybar[j]
        total = total + x[i] * row
    return total


def augment_form(f):
    """Integer Gram matrix: the augmentation applied entrywise."""
    return [[p.augment() for p in row] for row in f.matrix]


def hyperbolic(k, r):
    """Orthogonal sum of r hyperbolic planes (0 1; 1 0); self-inverse."""
    n = 2 * r
    rows = [[_zero(k)] * n for _ in range(n)]
    for i in range(r):
        rows[2 * i][2 * i + 1] = _one(k)
        rows[2 * i + 1][2 * i] = _one(k)
    M = _freeze(rows)
    return HermitianForm(k, M, inverse=M,
                         arf=ArfTag(ARF_EXTENDED, 0))


def from_integer_matrix(k, M, arf="auto"):
    """Embed a symmetric integer matrix as constants.  Unimodular
    matrices get their integer inverse as certificate; integer forms
    carry the extended-from-Z arf tag."""
    rows = [[_one(k) * int(x) for x in row] for row in M]
    cert = None
    inv = intlinalg.rational_inverse(M) if M else []
    if inv is not None and all(x.denominator == 1 for r in inv for x in r):
        cert = [[_one(k) * int(x) for x in row] for row in inv]
    if arf == "auto":
        arf = ArfTag(ARF_EXTENDED, 0)
    return HermitianForm(k, rows, inverse=cert, arf=arf)


def orthogonal_sum(f, g):
    if f.k != g.k:
        raise GroupMismatchError("orthogonal sum across different k")
    k = f.k
    n, m = f.rank, g.rank
    z = _zero(k)

    def block(A, B):
        rows = [list(row) + [z] * m for row in A]
        rows += [[z] * n + list(row) for row in B]
        return rows

    cert = None
    if f.inverse is not None and g.inverse is not None:
        cert = block(f.inverse, g.inverse)
    arf = None
    if f.arf is not None and g.arf is not None:
        mode = (ARF_EXTENDED if f.arf.mode == g.arf.mode == ARF_EXTENDED
                else ARF_ASSERTED)
        arf = ArfTag(mode, f.arf.value ^ g.arf.value)
    return HermitianForm(k, block(f.matrix, g.matrix), cert, arf)


def _is_trivial_unit(p):
    if len(p.terms) != 1:
        return False
    return next(iter(p.terms.values())) in (1, -1)


def _trivial_unit_inverse(p, k):
    (g, c), = p.terms.items()
    return GroupRingElt.monomial(k, bsgroup.invert(g, k), c)


def invert_matrix(mat, k):
    """Invert a square matrix over the group ring by Gaussian
    elimination with trivial-unit pivots (+-g only).  Sound but not
    complete: returns a verified inverse or None."""
    n = len(mat)
    if n == 0:
        return ()
    B = [list(row) for row in mat]
    C = [[_one(k) if i == j else _zero(k) for j in range(n)]
         for i in range(n)]
    perm = list(range(n))
    for i in range(n):
        found = None
        for r in range(i, n):
            for c in range(i, n):
                if _is_trivial_unit(B[r][c]):
                    found = (r, c)
                    break
            if found:
                break
        if found is None:
            return None
        r, c = found
        if r != i:
            B[i], B[r] = B[r], B[i]
            C[i], C[r] = C[r], C[i]
        if c != i:
            for row in B:
                row[i], row[c] = row[c], row[i]
            perm[i], perm[c] = perm[c], perm[i]
        pinv = _trivial_unit_inverse(B[i][i], k)
        B[i] = [pinv * x for x in B[i]]
        C[i] = [pinv * x for x in C[i]]
        for r2 in range(n):
            if r2 != i and B[r2][i].terms:
                f = B[r2][i]
                B[r2] = [x - f * y for x, y in zip(B[r2], B[i])]
                C[r2] = [x - f * y for x, y in zip(C[r2], C[i])]
    inv = [None] * n
    for q in range(n):
        inv[perm[q]] = tuple(C[q])
    inv = tuple(inv)
    if (mat_is_identity(mat_mul(mat, inv, k))
            and mat_is_identity(mat_mul(inv, mat, k))):
        return inv
    return None


def try_invert(f):
    """Verified inverse of the form matrix, or None (unknown).  The
    augmented determinant must be a unit in Z, which rejects most
    non-invertible forms immediately."""
    if f.rank == 0:
        return ()
    if abs(intlinalg.int_det(augment_form(f))) != 1:
        return None
    return invert_matrix(f.matrix, f.k)


def verify_inverse(f, C):
    C = _freeze(C)
    n = f.rank
    if len(C) != n or any(len(r) != n for r in C):
        return False
    return (mat_is_identity(mat_mul(f.matrix, C, f.k))
            and mat_is_identity(mat_mul(C, f.matrix, f.k)))


def _is_unit_triangular(M, upper):
    n = len(M)
    for i in range(n):
        if M[i][i].terms != {(0, 0, 0): 1}:
            return False
        rng = range(i) if upper else range(i + 1, n)
        for j in rng:
            if M[i][j].terms:
                return False
    return True


def unit_triangular_inverse(M, k):
    """Back-substitution inverse of a unit upper or lower triangular
    matrix."""
    M = _freeze(M)
    n = len(M)
    if _is_unit_triangular(M, upper=True):
        X = [[_one(k) if i == j else _zero(k) for j in range(n)]
             for i in range(n)]
        for j in range(n):
            for i in range(j - 1, -1, -1):
                s = _zero(k)
                for p in range(i + 1, j + 1):
                    s = s + M[i][p] * X[p][j]
                X[i][j] = -s
        return _freeze(X)
    if _is_unit_triangular(M, upper=False):
        X = [[_one(k) if i == j else _zero(k) for j in range(n)]
             for i in range(n)]
        for j in range(n):
            for i in range(j + 1, n):
                s = _zero(k)
                for p in range(j, i):
                    s = s + M[i][p] * X[p][j]
                X[i][j] = -s
        return _freeze(X)
    raise ValueError("matrix is not unit triangular")


def _invert_any(M, k):
    M = _freeze(M)
    if _is_unit_triangular(M, True) or _is_unit_triangular(M, False):
        return unit_triangular_inverse(M, k)
    return invert_matrix(M, k)


def congruence(f, U):
    """The form U^T A involute(U), certificate transported when
    possible.  U must be square of matching rank."""
    U = _freeze(U)
    n = f.rank
    if len(U) != n or any(len(r) != n for r in U):
        raise ValueError("congruence matrix must match the rank")
    _check_entries(f.k, U, "congruence")
    k = f.k
    ubar = mat_involute(U)
    A2 = mat_mul(mat_mul(mat_transpose(U), f.matrix, k), ubar, k)
    cert = None
    if f.inverse is not None:
        W = _invert_any(ubar, k)
        if W is not None:
            cert = mat_mul(mat_mul(W, f.inverse, k), _star(W), k)
    return HermitianForm(k, A2, cert, f.arf)


def verify_isometry(f, g, U):
    """True iff U^T A_g involute(U) = A_f exactly.  U must carry a
    verifiable inverse; shape or invertibility problems raise."""
    if f.k != g.k:
        raise GroupMismatchError("isometry across different k")
    U = _freeze(U)
    n = f.rank
    if g.rank != n or len(U) != n or any(len(r) != n for r in U):
        raise CertificateError("isometry certificate has wrong shape")
    _check_entries(f.k, U, "certificate")
    if _invert_any(U, f.k) is None:
        raise CertificateError("isometry certificate is not invertible"
                               " by trivial-unit elimination")
    lhs = mat_mul(mat_mul(mat_transpose(U), g.matrix, f.k),
                  mat_involute(U), f.k)
    return lhs == f.matrix


def isometry_inverse(U, k):
    """The certificate for the reversed isometry: if U carries f ~ g
    then this matrix carries g ~ f."""
    W = _invert_any(mat_involute(U), k)
    if W is None:
        raise CertificateError("certificate is not invertible"
                               " by trivial-unit elimination")
    return mat_involute(W)


def random_unit_triangular(rng, k, n, max_terms=2):
    """Random unit upper triangular matrix with small sparse entries;
    always invertible, used to generate certificated forms."""
    rows = [[_one(k) if i == j else _zero(k) for j in range(n)]
            for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.6:
                p = _zero(k)
                for _ in range(rng.randint(1, max_terms)):
                    w = "".join(rng.choice("aAbB")
                                for _ in range(rng.randint(0, 4)))
                    p = p + GroupRingElt.from_word(
                        k, w, rng.choice((-2, -1, 1, 2)))
                rows[i][j] = p
    return _freeze(rows)


def even_reference_form(k, hyperbolics=1, e8_blocks=0):
    """H^r orthogonal-sum E8^s: the even certificated building blocks."""
    f = hyperbolic(k, hyperbolics)
    for _ in range(e8_blocks):
        f = orthogonal_sum(f, from_integer_matrix(k, intlinalg.e8_matrix()))
    return f
