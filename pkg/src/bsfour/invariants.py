"""Closed-form invariants of B(k) and the classification rules.

Homology, L-groups, Whitehead group, and the stable bordism group of
B(k) all admit closed forms; the chain-complex pipeline doubles as an
independent oracle for the homological ones.  On top of these sit the
descriptor type for a closed oriented 4-manifold with fundamental
group B(k) (intersection form, w2-type, Kirby-Siebenmann invariant),
the realization rule saying which descriptors occur and how often, and
the three-valued homeomorphism classifier.

The cyclic factor Z/(k-1) that recurs below is read degenerately:
trivial when |k-1| = 1 and infinite cyclic when k = 1.  Both readings
are pinned by the k = 0 and k = 1 groups (Z and Z^2), whose invariants
are classical.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from . import foxchain, hermform, intlinalg
from .errors import (
    DescriptorError,
    GroupMismatchError,
    InconsistentDescriptorError,
    SchemaError,
)
from .hermform import HermitianForm, Parity
from .intlinalg import AbelianGroup


class W2Type(Enum):
    """How the second Stiefel-Whitney class behaves: nonzero on the
    universal cover (I), zero on the manifold (II), or zero on the
    universal cover but not the manifold (III)."""

    I = "I"
    II = "II"
    III = "III"


def homology_closed_form(k, degree, modulus=0):
    """Group homology of B(k) with trivial coefficients, degrees 0-3.

    Integral: H0 = Z, H1 = Z + Z/(k-1), H2 = Z iff k = 1, nothing above
    degree 2.  Mod 2 the same groups tensored down; in degree 2 this
    also equals the mod-2 cohomology, nonzero exactly for odd k."""
    if degree not in (0, 1, 2, 3):
        raise ValueError("degree must be one of 0, 1, 2, 3")
    if modulus not in (0, 2):
        raise ValueError("modulus must be 0 or 2")
    if modulus == 0:
        if degree == 0:
            return AbelianGroup.free(1)
        if degree == 1:
            return AbelianGroup.free(1).direct_sum(AbelianGroup.cyclic(k - 1))
        if degree == 2:
            return AbelianGroup.free(1) if k == 1 else AbelianGroup.trivial()
        return AbelianGroup.trivial()
    if degree == 0:
        return AbelianGroup.elementary(2, 1)
    if degree == 1:
        return AbelianGroup.elementary(2, 2 if k % 2 else 1)
    if degree == 2:
        return AbelianGroup.elementary(2, 1 if k % 2 else 0)
    return AbelianGroup.trivial()


@dataclass(frozen=True)
class LGroupTable:
    """Quadratic L-groups in dimensions 0 and 1 mod 4, the symmetric
    L-group in dimension 0, and the Whitehead group."""

    l4: AbelianGroup
    l5: AbelianGroup
    l0_symmetric: AbelianGroup
    whitehead: AbelianGroup

    def to_json(self):
        return {"L4": self.l4.to_json(),
                "L5": self.l5.to_json(),
                "L0_symmetric": self.l0_symmetric.to_json(),
                "whitehead": self.whitehead.to_json()}


def lgroup_table(k):
    l4 = (AbelianGroup.free(1).direct_sum(AbelianGroup.cyclic(2))
          if k % 2 else AbelianGroup.free(1))
    l5 = AbelianGroup.free(1).direct_sum(AbelianGroup.cyclic(k - 1))
    return LGroupTable(l4, l5, AbelianGroup.free(1), AbelianGroup.trivial())


@dataclass(frozen=True)
class AssemblyStatus:
    """Rank-and-torsion comparison of the assembly-map domains
    (homology with L-theory coefficients) against the L-groups."""

    k: int
    degree4_domain: AbelianGroup
    degree4_codomain: AbelianGroup
    degree5_domain: AbelianGroup
    degree5_codomain: AbelianGroup
    consistent: bool

    def to_json(self):
        return {"k": self.k,
                "degree4": {"domain": self.degree4_domain.to_json(),
                            "codomain": self.degree4_codomain.to_json(),
                            "isomorphic":
                                self.degree4_domain == self.degree4_codomain},
                "degree5": {"domain": self.degree5_domain.to_json(),
                            "codomain": self.degree5_codomain.to_json(),
                            "isomorphic":
                                self.degree5_domain == self.degree5_codomain},
                "consistent": self.consistent}


def assembly_status(k):
    """Domains H0 + H2(;Z/2) against L4 and H1 against L5."""
    table = lgroup_table(k)
    dom4 = homology_closed_form(k, 0).direct_sum(
        homology_closed_form(k, 2, modulus=2))
    dom5 = homology_closed_form(k, 1)
    consistent = dom4 == table.l4 and dom5 == table.l5
    return AssemblyStatus(k, dom4, table.l4, dom5, table.l5, consistent)


@dataclass(frozen=True)
class BordismDescription:
    """Stable bordism group for a non-type-I normal 1-type: an index-8
    copy of Z detected by the signature, plus 2-torsion."""

    k: int
    w2: "W2Type"
    signature_multiple: int
    torsion: AbelianGroup

    def __str__(self):
        base = "%dZ" % self.signature_multiple
        if self.torsion.is_trivial():
            return base
        return base + " + " + str(self.torsion)

    def to_json(self):
        return {"k": self.k, "w2": self.w2.value,
                "signature_multiple": self.signature_multiple,
                "torsion": self.torsion.to_json()}


def stable_bordism_group(k, w2):
    """8Z plus H2(B(k); Z/2), the latter computed from the chain
    complex rather than the closed form."""
    if not isinstance(w2, W2Type):
        raise SchemaError("w2 must be a W2Type")
    if w2 is W2Type.I:
        raise DescriptorError("type I has no such bordism description;"
                              " use stable_classify_typeI")
    if w2 is W2Type.III and k % 2 == 0:
        raise DescriptorError("type III requires odd k")
    d2, d1 = foxchain.tensor_trivial(foxchain.build_complex(k), modulus=2)
    torsion = intlinalg.homology_of_complex(d2, d1, modulus=2)[2]
    return BordismDescription(k, w2, 8, torsion)


@dataclass(frozen=True)
class KSVerdict:
    """What the Kirby-Siebenmann invariant must be: forced to a value,
    free, or inconsistent input."""

    status: str
    value: Optional[int]
    note: Optional[str] = None

    def to_json(self):
        doc = {"status": self.status, "value": self.value}
        if self.note is not None:
            doc["note"] = self.note
        return doc


def ks_constraint(w2, sign, arf=None):
    """KS rules by type: free for type I, sign/8 for type II,
    sign/8 + Arf for type III (free with a warning when the Arf
    invariant is unknown).  Even types need sign divisible by 8."""
    if not isinstance(w2, W2Type):
        raise SchemaError("w2 must be a W2Type")
    if arf not in (None, 0, 1):
        raise SchemaError("arf must be 0, 1 or None")
    if w2 is W2Type.I:
        return KSVerdict("free", None)
    if sign % 8:
        return KSVerdict("inconsistent", None,
                         "an even form has signature divisible by 8")
    if w2 is W2Type.II:
        return KSVerdict("forced", (sign // 8) % 2)
    if arf is None:
        return KSVerdict("free", None,
                         "KS = sign/8 + Arf, undetermined while the Arf"
                         " invariant is unknown")
    return KSVerdict("forced", (sign // 8 + arf) % 2)


class ManifoldDescriptor:
    """Invariant tuple of a closed oriented 4-manifold with fundamental
    group B(k): certificated intersection form, w2-type, and KS.

    Construction enforces realizability: type I needs an odd form,
    types II/III an even one, type III odd k, and a forced KS relation
    must hold.  ks may be None only for type III with unknown Arf."""

    __slots__ = ("k", "form", "w2", "ks", "_parity", "_signature")

    def __init__(self, k, form, w2, ks):
        if not isinstance(form, HermitianForm):
            raise SchemaError("form must be a HermitianForm")
        if not isinstance(w2, W2Type):
            raise SchemaError("w2 must be a W2Type")
        if form.k != k:
            raise GroupMismatchError(
                "descriptor k=%d but the form is over k=%d" % (k, form.k))
        if form.inverse is None:
            raise DescriptorError(
                "descriptor forms must carry a verified inverse")
        par = hermform.parity(form)
        if w2 is W2Type.I and par is not Parity.ODD:
            raise InconsistentDescriptorError("type I requires an odd form")
        if w2 is not W2Type.I and par is not Parity.EVEN:
            raise InconsistentDescriptorError(
                "types II and III require an even form")
        if w2 is W2Type.III and k % 2 == 0:
            raise InconsistentDescriptorError("type III requires odd k")
        sign = intlinalg.signature(hermform.augment_form(form))
        arf = form.arf.value if form.arf is not None else None
        verdict = ks_constraint(w2, sign, arf)
        if verdict.status == "inconsistent":
            raise InconsistentDescriptorError(verdict.note)
        if ks is None:
            if not (w2 is W2Type.III and form.arf is None):
                raise DescriptorError(
                    "ks may be omitted only for type III forms with"
                    " unknown Arf invariant")
        elif isinstance(ks, bool) or ks not in (0, 1):
            raise DescriptorError("ks must be 0 or 1")
        elif verdict.status == "forced" and ks != verdict.value:
            raise InconsistentDescriptorError(
                "KS must be %d for this type and signature" % verdict.value)
        self.k = k
        self.form = form
        self.w2 = w2
        self.ks = ks
        self._parity = par
        self._signature = sign

    @property
    def parity(self):
        return self._parity

    @property
    def signature(self):
        return self._signature

    @property
    def arf_provenance(self):
        return self.form.arf

    def invariant_snapshot(self):
        return {"w2": self.w2.value, "ks": self.ks,
                "rank": self.form.rank, "parity": self.parity.value,
                "signature": self.signature}

    def to_json(self):
        return {"k": self.k, "form": self.form.to_json(),
                "w2": self.w2.value, "ks": self.ks}

    @classmethod
    def from_json(cls, doc):
        if not isinstance(doc, dict) or set(doc) != {"k", "form", "w2", "ks"}:
            raise SchemaError(
                "descriptor needs exactly 'k', 'form', 'w2' and 'ks'")
        k = doc["k"]
        if not isinstance(k, int) or isinstance(k, bool):
            raise SchemaError("descriptor k must be an integer")
        try:
            w2 = W2Type(doc["w2"])
        except ValueError:
            raise SchemaError("w2 must be 'I', 'II' or 'III'") from None
        ks = doc["ks"]
        if ks is not None and (isinstance(ks, bool) or ks not in (0, 1)):
            raise SchemaError("ks must be 0, 1 or null")
        return cls(k, HermitianForm.from_json(doc["form"]), w2, ks)


@dataclass(frozen=True)
class ClassifyResult:
    verdict: str
    reasons: tuple
    invariants: dict

    def to_json(self):
        return {"verdict": self.verdict, "reasons": list(self.reasons),
                "invariants": self.invariants}


def classify(d1, d2, isometry=None):
    """Three-valued homeomorphism test.

    NotHomeomorphic when a necessary invariant (w2-type, KS, rank,
    parity, augmented signature) differs; Homeomorphic when all agree
    and a supplied isometry certificate verifies; Unknown otherwise.
    No isometry search is attempted."""
    if not isinstance(d1, ManifoldDescriptor) \
            or not isinstance(d2, ManifoldDescriptor):
        raise SchemaError("classify takes two manifold descriptors")
    if d1.k != d2.k:
        raise GroupMismatchError("descriptors are over different k")
    invariants = {"first": d1.invariant_snapshot(),
                  "second": d2.invariant_snapshot()}
    reasons = []
    if d1.w2 is not d2.w2:
        reasons.append("w2 type differs: %s vs %s"
                       % (d1.w2.value, d2.w2.value))
    if d1.ks is not None and d2.ks is not None and d1.ks != d2.ks:
        reasons.append("Kirby-Siebenmann invariant differs: %d vs %d"
                       % (d1.ks, d2.ks))
    if d1.form.rank != d2.form.rank:
        reasons.append("rank differs: %d vs %d"
                       % (d1.form.rank, d2.form.rank))
    if d1.parity is not d2.parity:
        reasons.append("parity differs: %s vs %s"
                       % (d1.parity.value, d2.parity.value))
    if d1.signature != d2.signature:
        reasons.append("signature differs: %d vs %d"
                       % (d1.signature, d2.signature))
    if reasons:
        return ClassifyResult("NotHomeomorphic", tuple(reasons), invariants)
    ks_known = d1.ks is not None and d2.ks is not None
    if isometry is None:
        return ClassifyResult(
            "Unknown", ("no isometry certificate supplied",), invariants)
    try:
        ok = hermform.verify_isometry(d1.form, d2.form, isometry)
    except hermform.CertificateError as exc:
        return ClassifyResult(
            "Unknown", ("isometry certificate is unusable: %s" % exc,),
            invariants)
    if not ok:
        return ClassifyResult(
            "Unknown", ("isometry certificate does not verify",), invariants)
    if not ks_known:
        return ClassifyResult(
            "Unknown",
            ("forms are isometric but the Kirby-Siebenmann invariant is"
             " undetermined",), invariants)
    return ClassifyResult(
        "Homeomorphic",
        ("all invariants agree and the isometry certificate verifies",),
        invariants)


def realize(k, form):
    """Descriptors of the manifolds carrying a given certificated
    form: two for odd forms (KS free), one for even forms when k is
    even (type II), two when k is odd (types II and III)."""
    if not isinstance(form, HermitianForm):
        raise SchemaError("realize takes a HermitianForm")
    if form.k != k:
        raise GroupMismatchError(
            "realize called with k=%d but the form is over k=%d"
            % (k, form.k))
    if form.inverse is None:
        raise DescriptorError("realize requires a verified inverse")
    if hermform.parity(form) is Parity.ODD:
        return [ManifoldDescriptor(k, form, W2Type.I, 0),
                ManifoldDescriptor(k, form, W2Type.I, 1)]
    sign = intlinalg.signature(hermform.augment_form(form))
    if sign % 8:
        raise InconsistentDescriptorError(
            "even certificated forms have signature divisible by 8")
    ks2 = (sign // 8) % 2
    out = [ManifoldDescriptor(k, form, W2Type.II, ks2)]
    if k % 2:
        arf = form.arf.value if form.arf is not None else None
        ks3 = None if arf is None else (sign // 8 + arf) % 2
        out.append(ManifoldDescriptor(k, form, W2Type.III, ks3))
    return out


def stable_classify_typeI(d1, d2):
    """Stable comparison for type I: equal signature and KS decide.
    The remaining stable invariant lives in H4 of the group, which
    vanishes, so it imposes no condition."""
    if not isinstance(d1, ManifoldDescriptor) \
            or not isinstance(d2, ManifoldDescriptor):
        raise SchemaError("expected two manifold descriptors")
    if d1.w2 is not W2Type.I or d2.w2 is not W2Type.I:
        raise DescriptorError("stable comparison applies to type I only")
    if d1.k != d2.k:
        raise GroupMismatchError("descriptors are over different k")
    return d1.signature == d2.signature and d1.ks == d2.ks


@dataclass(frozen=True)
class RadicalDescription:
    """Symbolic description of H^2 of the group with group-ring
    coefficients: infinitely generated for k != 0, so no matrix form."""

    k: int
    is_zero: bool
    surjects_onto: Optional[str]

    def __str__(self):
        if self.is_zero:
            return "0"
        return "free abelian, surjects onto %s" % self.surjects_onto

    def to_json(self):
        return {"k": self.k, "free_abelian": not self.is_zero,
                "surjects_onto": self.surjects_onto}


def radical_description(k):
    if k == 0:
        return RadicalDescription(0, True, None)
    if abs(k) == 1:
        return RadicalDescription(k, False, "Z")
    return RadicalDescription(k, False, "Z[1/%d]" % abs(k))
