"""Bottom-up classification of self-orthogonal codes up to monomial equivalence.

Classes of ``[n, k]`` codes are generated from two sources and deduplicated
by canonical certificate:

* lengthening every representative of ``[n-1, k-1]`` (new first coordinate);
* appending a zero coordinate to every representative of ``[n-1, k]``.

Each finished class list is audited against the mass formula.
"""
from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from . import __version__, gf3
from .code import (CodeRecord, LinearCode, dual_distance, is_maximal_self_orthogonal,
                   is_self_orthogonal, make_code, maximal_dimension, minimum_weight,
                   weight_distribution, zero_code, zero_extend)
from .equivalence import CanonicalCertificate, canonical_data
from .errors import AuditError, IntegrityError, ParseError
from .extension import lengthen_all
from .mass import MassAudit, audit, expected_count

log = logging.getLogger(__name__)

# weights of nonzero self-orthogonal codewords are multiples of 3
PIPELINE_D_MIN = 3


@dataclass
class ClassifyConfig:
    threads: int = 1
    out_dir: Path | None = None
    resume: bool = False
    cap: int | None = None
    verify_sample: int = 8


@dataclass
class ClassificationManifest:
    n: int
    k: int
    representatives: list[CodeRecord]
    audit: MassAudit
    maximal_only: bool = False
    provenance: dict[str, str] = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return self.audit.residual == 0

    @property
    def counts_by_min_weight(self) -> dict[int, int]:
        return dict(sorted(Counter(r.min_weight for r in self.representatives).items()))

    def __len__(self) -> int:
        return len(self.representatives)


class IncompleteClassification(AuditError):
    def __init__(self, manifest: ClassificationManifest):
        self.manifest = manifest
        super().__init__(f"[{manifest.n},{manifest.k}]: mass residual {manifest.audit.residual}")


# -- dedup -----------------------------------------------------------------

def fingerprint(c: LinearCode) -> tuple:
    return (c.n, c.k, tuple(sorted(weight_distribution(c).items())))


def _canon_job(c: LinearCode):
    d = canonical_data(c)
    return d.certificate.data, d.aut.order


def _init_worker(cap):
    gf3.set_cap(cap)


def _unique(candidates: Iterable[LinearCode]) -> list[LinearCode]:
    return list(dict.fromkeys(candidates))


def dedupe_batch(candidates: Iterable[LinearCode], threads: int = 1) -> list[CodeRecord]:
    """One record per equivalence class, sorted by certificate bytes."""
    codes = _unique(candidates)
    buckets: dict[tuple, list[LinearCode]] = {}
    for c in codes:
        buckets.setdefault(fingerprint(c), []).append(c)
    flat = [c for key in sorted(buckets) for c in buckets[key]]
    if threads > 1 and len(flat) > 1:
        with ProcessPoolExecutor(threads, initializer=_init_worker,
                                 initargs=(gf3.get_cap(),)) as pool:
            results = list(pool.map(_canon_job, flat, chunksize=8))
    else:
        results = [_canon_job(c) for c in flat]
    # digest map; full certificates compared on digest collision
    seen: dict[bytes, list[tuple[bytes, LinearCode, int]]] = {}
    for c, (cert, order) in zip(flat, results):
        slot = seen.setdefault(CanonicalCertificate(cert).digest(), [])
        if any(cert == other for other, _, _ in slot):
            continue
        slot.append((cert, c, order))
    reps = sorted((item for slot in seen.values() for item in slot), key=lambda t: t[0])
    return [_record(c, order, cert) for cert, c, order in reps]


def _record(c: LinearCode, order: int, cert: bytes) -> CodeRecord:
    if c.k == 0:
        return CodeRecord(c, 0, 1, order, cert)
    dd = dual_distance(c) if c.k < c.n else 0
    return CodeRecord(c, minimum_weight(c), dd, order, cert)


# -- pipeline --------------------------------------------------------------

class Classifier:
    """Memoizing driver; one instance shares sub-results across calls."""

    def __init__(self, config: ClassifyConfig | None = None):
        self.config = config or ClassifyConfig()
        self.memo: dict[tuple[int, int], ClassificationManifest] = {}
        if self.config.cap is not None:
            gf3.set_cap(self.config.cap)

    def _path(self, n: int, k: int) -> Path | None:
        if self.config.out_dir is None:
            return None
        return Path(self.config.out_dir) / f"so_n{n}_k{k}.manifest"

    def so(self, n: int, k: int) -> ClassificationManifest:
        key = (n, k)
        if key in self.memo:
            return self.memo[key]
        path = self._path(n, k)
        if path is not None and self.config.resume and path.exists():
            m = load_manifest(path, self.config.verify_sample)
            if m.complete:
                self.memo[key] = m
                return m
        m = self._build(n, k)
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            save_manifest(m, path)
        if not m.complete:
            raise IncompleteClassification(m)
        self.memo[key] = m
        return m

    def _build(self, n: int, k: int) -> ClassificationManifest:
        if k < 0 or k > n:
            raise ValueError(f"no [{n},{k}] codes")
        if k == 0:
            reps = dedupe_batch([zero_code(n)])
        elif k > maximal_dimension(n) or n < 3:
            reps = []
        else:
            cands: list[LinearCode] = []
            for rec in self.so(n - 1, k - 1).representatives:
                cands.extend(lengthen_all(rec.code, PIPELINE_D_MIN))
            if k <= maximal_dimension(n - 1):
                cands.extend(zero_extend(rec.code) for rec in self.so(n - 1, k).representatives)
            gf3.check_cap(k)
            log.info("[%d,%d]: %d candidates", n, k, len(cands))
            reps = dedupe_batch(cands, self.config.threads)
        a = audit([r.aut_order for r in reps], n, k)
        m = ClassificationManifest(n, k, reps, a, provenance=self._provenance(n, k))
        log.info("[%d,%d]: %d classes, residual %d", n, k, len(reps), a.residual)
        return m

    def _provenance(self, n: int, k: int) -> dict[str, str]:
        return {"version": __version__, "d_min": str(PIPELINE_D_MIN)}

    def maximal(self, n: int) -> ClassificationManifest:
        k = maximal_dimension(n)
        base = self.so(n, k)
        for rec in base.representatives:
            if rec.code.k and not is_maximal_self_orthogonal(rec.code):
                raise AuditError(f"{rec.code} has maximal dimension but is not maximal")
        m = ClassificationManifest(n, k, base.representatives, base.audit, True,
                                   dict(base.provenance))
        if self.config.out_dir is not None:
            save_manifest(m, Path(self.config.out_dir) / f"max_n{n}.manifest")
        return m


def classify_so(n: int, k: int, config: ClassifyConfig | None = None) -> ClassificationManifest:
    return Classifier(config).so(n, k)


def classify_maximal(n: int, config: ClassifyConfig | None = None) -> ClassificationManifest:
    return Classifier(config).maximal(n)


# -- manifest files --------------------------------------------------------

def format_manifest(m: ClassificationManifest) -> str:
    lines = [
        f"MANIFEST n={m.n} k={m.k} classes={len(m.representatives)} complete={int(m.complete)}",
        f"MASS expected={m.audit.expected} accumulated={m.audit.accumulated}",
    ]
    for r in m.representatives:
        lines.append(f"CLASS d={r.min_weight} dd={r.dual_distance} aut={r.aut_order} "
                     f"cert={r.certificate.hex()}")
        lines.extend("".join(map(str, row)) for row in r.code.rows)
    prov = " ".join(f"{k}={v}" for k, v in sorted(m.provenance.items()))
    lines.append(f"# maximal_only={int(m.maximal_only)} {prov}".rstrip())
    return "\n".join(lines) + "\n"


def save_manifest(m: ClassificationManifest, path: str | Path) -> None:
    Path(path).write_text(format_manifest(m))


def _fields(text: str, lineno: int, tag: str, names: list[str]) -> dict[str, str]:
    parts = text.split()
    if not parts or parts[0] != tag:
        raise ParseError(f"expected {tag} line", lineno)
    out = {}
    for p in parts[1:]:
        key, sep, val = p.partition("=")
        if not sep:
            raise ParseError(f"malformed field {p!r}", lineno)
        out[key] = val
    missing = [nm for nm in names if nm not in out]
    if missing:
        raise ParseError(f"missing {', '.join(missing)}", lineno)
    return out


def _int(v: str, lineno: int) -> int:
    try:
        return int(v)
    except ValueError:
        raise ParseError(f"not an integer: {v!r}", lineno) from None


def parse_manifest(text: str, verify_sample: int = 8) -> ClassificationManifest:
    """Parse and re-verify a manifest; ``verify_sample`` classes get full checks."""
    raw = text.splitlines()
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(raw) if ln.strip()]
    comments = [ln for _, ln in lines if ln.startswith("#")]
    lines = [(i, ln) for i, ln in lines if not ln.startswith("#")]
    if len(lines) < 2:
        raise ParseError("manifest needs MANIFEST and MASS lines", len(raw) or 1)
    i0, head = lines[0]
    h = _fields(head, i0, "MANIFEST", ["n", "k", "classes", "complete"])
    n, k = _int(h["n"], i0), _int(h["k"], i0)
    classes, complete = _int(h["classes"], i0), _int(h["complete"], i0)
    i1, mass_line = lines[1]
    ml = _fields(mass_line, i1, "MASS", ["expected", "accumulated"])
    expected, accumulated = _int(ml["expected"], i1), _int(ml["accumulated"], i1)

    reps: list[CodeRecord] = []
    pos = 2
    while pos < len(lines):
        li, ln = lines[pos]
        f = _fields(ln, li, "CLASS", ["d", "dd", "aut", "cert"])
        rows = lines[pos + 1:pos + 1 + k]
        if len(rows) != k:
            raise ParseError(f"class needs {k} generator rows", li)
        mat = []
        for ri, row in rows:
            if len(row) != n or set(row) - set("012"):
                raise ParseError(f"bad generator row {row!r}", ri)
            mat.append(tuple(int(ch) for ch in row))
        try:
            cert = bytes.fromhex(f["cert"])
        except ValueError:
            raise ParseError("certificate is not hex", li) from None
        code = LinearCode(n, tuple(mat))
        reps.append(CodeRecord(code, _int(f["d"], li), _int(f["dd"], li),
                               _int(f["aut"], li), cert))
        pos += 1 + k
    if len(reps) != classes:
        raise ParseError(f"header says {classes} classes, found {len(reps)}", i0)

    maximal_only = False
    prov: dict[str, str] = {}
    for c in comments:
        for tok in c.lstrip("#").split():
            key, _, val = tok.partition("=")
            if key == "maximal_only":
                maximal_only = val == "1"
            elif key:
                prov[key] = val

    if expected != expected_count(n, k):
        raise IntegrityError(f"stated mass {expected} != T({n},{k})")
    for r in reps:
        if (make_code(r.code.generator, n) if k else zero_code(n)) != r.code:
            raise IntegrityError(f"class {r.certificate.hex()[:16]}: generator not in RREF")
        if not is_self_orthogonal(r.code):
            raise IntegrityError(f"class {r.code}: not self-orthogonal")
    if len({r.certificate for r in reps}) != len(reps):
        raise IntegrityError("duplicate certificates")
    try:
        a = audit([r.aut_order for r in reps], n, k)
    except AuditError as e:
        raise IntegrityError(str(e)) from e
    if a.accumulated != accumulated:
        raise IntegrityError(f"recomputed mass {a.accumulated} != stated {accumulated}")
    if complete != int(a.complete):
        raise IntegrityError("complete flag disagrees with the mass audit")
    for r in reps[:verify_sample]:
        d = canonical_data(r.code)
        if d.certificate.data != r.certificate or d.aut.order != r.aut_order:
            raise IntegrityError(f"class {r.code}: certificate or |Aut| mismatch")
        if k and r.min_weight != minimum_weight(r.code):
            raise IntegrityError(f"class {r.code}: minimum weight mismatch")
    return ClassificationManifest(n, k, reps, a, maximal_only, prov)


def load_manifest(path: str | Path, verify_sample: int = 8) -> ClassificationManifest:
    return parse_manifest(Path(path).read_text(), verify_sample)
