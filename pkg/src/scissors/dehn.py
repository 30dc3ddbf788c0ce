"""The length⊗angle invariant in ℝ⊗ℤ ℝ/ℤ, in certified normal form.

A tensor is a list of (length, angle) terms.  Normalization drops rational
multiples of π (ℓ⊗(p/q)π = 0), merges equal angles by summing lengths, and
eliminates angles through certified integer relations ∑ m_j θ_j ≡ 0 (mod π):
solving for the pivot pushes rational coefficients through the length slot,
which is legal because lengths form a ℚ-vector space.  Every "nonzero"
verdict is certified; "equal/zero" verdicts are conditional on the height
bound of the relation search and say so.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebraic import as_scalar, scalar_sign
from .angles import AnglePair, find_angle_relations, is_rational_angle
from .geom import Polytope, dihedral_edges
from .numbers import format_number, parse_number

DEFAULT_HEIGHT_BOUND = 20


@dataclass
class DehnTensor:
    terms: list  # [(length scalar, AnglePair)], normal form
    relations_used: list = field(default_factory=list)
    height_bound: int = DEFAULT_HEIGHT_BOUND
    rational_drops: list = field(default_factory=list)

    def is_empty(self) -> bool:
        return not self.terms

    def to_json(self):
        return {
            "terms": [{"length": format_number(as_scalar(l)),
                       **a.to_json()} for l, a in self.terms],
            "height_bound": self.height_bound,
            "relations": [r.to_json() for r in self.relations_used],
            "rational_angles_dropped": self.rational_drops,
        }

    @classmethod
    def from_json(cls, obj) -> "DehnTensor":
        raw = [(parse_number(t["length"]),
                AnglePair(parse_number(t["cos"]), parse_number(t["sin"])))
               for t in obj["terms"]]
        return tensor_normalize(raw, obj.get("height_bound",
                                             DEFAULT_HEIGHT_BOUND))

    def __repr__(self):
        return f"DehnTensor({len(self.terms)} terms, h<={self.height_bound})"


def _merge(raw):
    """Merge terms with equal angles; drop zero lengths and dead angles."""
    acc = {}
    drops = []
    for length, angle in raw:
        length = as_scalar(length)
        if scalar_sign(length) == 0:
            continue
        if angle.is_straight():
            continue  # θ ∈ {0, π}
        q = is_rational_angle(angle)
        if q is not None:
            drops.append({"q": format_number(Fraction(q)),
                          "cos": format_number(as_scalar(angle.cos))})
            continue
        k = angle.key()
        if k in acc:
            old_len, _ = acc[k]
            acc[k] = (old_len + length, angle)
        else:
            acc[k] = (length, angle)
    out = []
    for k in sorted(acc):
        length, angle = acc[k]
        if scalar_sign(length) != 0:
            out.append((length, angle))
    return out, drops


def tensor_normalize(raw_terms, height_bound: int = DEFAULT_HEIGHT_BOUND,
                     _search=True) -> DehnTensor:
    """Canonical form of a raw (length, angle) term list."""
    terms, drops = _merge(raw_terms)
    used = []
    while _search and len(terms) >= 1:
        angles = [a for _, a in terms]
        rels = find_angle_relations(angles, height_bound)
        if not rels:
            break
        rel = rels[0]
        used.append(rel)
        ms = rel.coefficients
        # pivot: smallest nonzero |m|, then largest index (deterministic)
        pivot = min((abs(m), -j)
                    for j, m in enumerate(ms) if m != 0)[1] * -1
        mk = ms[pivot]
        new_raw = []
        for i, (length, angle) in enumerate(terms):
            if i != pivot:
                new_raw.append((length, angle))
                continue
            for j, mj in enumerate(ms):
                if j == pivot or mj == 0:
                    continue
                new_raw.append((length * Fraction(-mj, mk), terms[j][1]))
        terms, extra = _merge(new_raw)
        drops.extend(extra)
    return DehnTensor(terms, used, height_bound, drops)


def tensor_add(a: DehnTensor, b: DehnTensor,
               height_bound=None) -> DehnTensor:
    hb = height_bound or max(a.height_bound, b.height_bound)
    return tensor_normalize(list(a.terms) + list(b.terms), hb)


def tensor_neg(t: DehnTensor) -> DehnTensor:
    out = DehnTensor([(-l, a) for l, a in t.terms],
                     list(t.relations_used), t.height_bound,
                     list(t.rational_drops))
    return out


def dehn_invariant(p: Polytope,
                   height_bound: int = DEFAULT_HEIGHT_BOUND) -> DehnTensor:
    """Σ edge-length ⊗ dihedral angle over the boundary, in normal form."""
    raw = [(e.length, e.angle) for e in dihedral_edges(p)]
    return tensor_normalize(raw, height_bound)


def is_zero(t: DehnTensor) -> str:
    """'Zero' | 'NonzeroCertified' | 'Unknown' for a normalized tensor.

    The single-angle case is complete: a lone surviving term has nonzero
    length and a certified π-irrational angle, which is exactly nonvanishing
    in ℝ⊗ℝ/ℤ.  With several surviving angles, independence rests only on the
    height-bounded search, so the verdict stays Unknown.
    """
    if not t.terms:
        return "Zero"
    if len(t.terms) == 1:
        return "NonzeroCertified"
    return "Unknown"


def nonzero_certificate(t: DehnTensor):
    """Re-checkable evidence for a NonzeroCertified verdict."""
    if is_zero(t) != "NonzeroCertified":
        return None
    length, angle = t.terms[0]
    two_cos = 2 * as_scalar(angle.cos)
    if isinstance(two_cos, Fraction):
        minpoly = [-two_cos.numerator, two_cos.denominator]
    else:
        minpoly = list(two_cos.minpoly())
    return {
        "length": format_number(as_scalar(length)),
        "angle": angle.to_json(),
        "two_cos_minpoly": [str(c) for c in minpoly],
        "monic": minpoly[-1] == 1,
        "reason": ("angle is no rational multiple of π: complete check via "
                   "the algebraic-integer test on 2cosθ"),
    }


@dataclass
class CongruenceVerdict:
    tag: str  # NotCongruent_Volume | NotCongruent_Dehn | Congruent_DSJ | Unknown
    witness: dict
    height_bound: int

    def to_json(self):
        return {"tag": self.tag, "witness": self.witness,
                "height_bound": self.height_bound}


def compare_polytopes(a: Polytope, b: Polytope,
                      height_bound: int = DEFAULT_HEIGHT_BOUND
                      ) -> CongruenceVerdict:
    """Scissors-congruence verdict from volume and the edge-angle tensor."""
    va, vb = a.volume(), b.volume()
    if scalar_sign(va - vb) != 0:
        return CongruenceVerdict(
            "NotCongruent_Volume",
            {"volume_a": format_number(as_scalar(va)),
             "volume_b": format_number(as_scalar(vb))},
            height_bound)
    da = dehn_invariant(a, height_bound)
    db = dehn_invariant(b, height_bound)
    diff = tensor_add(da, tensor_neg(db), height_bound)
    verdict = is_zero(diff)
    if verdict == "NonzeroCertified":
        return CongruenceVerdict(
            "NotCongruent_Dehn",
            {"difference": diff.to_json(),
             "certificate": nonzero_certificate(diff)},
            height_bound)
    if verdict == "Zero":
        return CongruenceVerdict(
            "Congruent_DSJ",
            {"volume": format_number(as_scalar(va)),
             "relations": [r.to_json() for r in diff.relations_used]},
            height_bound)
    return CongruenceVerdict(
        "Unknown",
        {"difference": diff.to_json()},
        height_bound)
