"""Deterministic machine-readable reports with recheckable certificates.

The digest covers every field except the timing (and the digest itself), so
repeated invocations with equal inputs and seeds are byte-identical after
dropping `timing_ms`, and their digests coincide.
"""

import hashlib
import json
import time


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False)


def digest_of(obj) -> str:
    return hashlib.sha256(canonical_json(obj).encode()).hexdigest()


class ReportTimer:
    def __init__(self):
        self.start = time.monotonic()

    def ms(self) -> int:
        return int((time.monotonic() - self.start) * 1000)


def make_report(command, inputs_digest, results, certificates=None,
                seed=None, timer: ReportTimer = None) -> dict:
    body = {
        "schema": "scissors-report/1",
        "command": list(command),
        "inputs_digest": inputs_digest,
        "results": results,
        "certificates": certificates or [],
    }
    if seed is not None:
        body["seed"] = seed
    body["digest"] = digest_of(body)
    body["timing_ms"] = timer.ms() if timer else 0
    return body


def digest_inputs(paths_and_blobs) -> str:
    h = hashlib.sha256()
    for item in paths_and_blobs:
        if isinstance(item, bytes):
            h.update(item)
        else:
            with open(item, "rb") as fh:
                h.update(fh.read())
        h.update(b"\x00")
    return h.hexdigest()


def strip_timing(report: dict) -> dict:
    out = dict(report)
    out.pop("timing_ms", None)
    return out


def verify_report_digest(report: dict) -> bool:
    body = strip_timing(report)
    claimed = body.pop("digest", None)
    return claimed == digest_of(body)


# -- certificate rechecking ---------------------------------------------------------

def recheck_certificates(report: dict):
    """Re-verify every embedded certificate with exact arithmetic only."""
    from .angles import AnglePair, is_rational_angle, verify_relation
    from .numbers import parse_number

    checks = []
    for cert in report.get("certificates", []):
        kind = cert.get("type")
        if kind == "angle-relations":
            for rel in cert.get("relations", []):
                angles = [AnglePair.from_json(a)
                          for a in rel["witness"]["angles"]]
                ok = verify_relation(angles, rel["coefficients"])
                checks.append({"certificate": kind,
                               "coefficients": rel["coefficients"],
                               "pass": ok})
        elif kind == "rational-angles":
            for drop in cert.get("dropped", []):
                cos = parse_number(drop["cos"])
                pair = AnglePair.from_cos(cos)
                q = is_rational_angle(pair)
                want = parse_number(drop["q"])
                checks.append({"certificate": kind, "cos": drop["cos"],
                               "pass": q is not None and q == want})
        elif kind == "nonzero-dehn":
            angle = AnglePair.from_json(cert["angle"])
            length = parse_number(cert["length"])
            from .algebraic import as_scalar, scalar_sign
            irrational = is_rational_angle(angle) is None
            nonzero_len = scalar_sign(as_scalar(length)) != 0
            monic_claim = bool(cert.get("monic"))
            two_cos = 2 * as_scalar(angle.cos)
            from fractions import Fraction
            if isinstance(two_cos, Fraction):
                minpoly = [-two_cos.numerator, two_cos.denominator]
            else:
                minpoly = list(two_cos.minpoly())
            poly_matches = [str(c) for c in minpoly] == \
                cert["two_cos_minpoly"]
            monic_actual = minpoly[-1] == 1
            checks.append({
                "certificate": kind,
                "pass": irrational and nonzero_len and poly_matches
                and monic_actual == monic_claim,
            })
        elif kind == "volume-mismatch":
            from .algebraic import as_scalar, scalar_sign
            va = as_scalar(parse_number(cert["volume_a"]))
            vb = as_scalar(parse_number(cert["volume_b"]))
            checks.append({"certificate": kind,
                           "pass": scalar_sign(va - vb) != 0})
        else:
            checks.append({"certificate": str(kind), "pass": False,
                           "note": "unknown certificate type"})
    digest_ok = verify_report_digest(report)
    return {
        "digest_ok": digest_ok,
        "checks": checks,
        "recheck_passed": digest_ok and all(c["pass"] for c in checks),
    }
