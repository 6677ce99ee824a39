"""Batch verification: closed forms vs the universal route vs the oracle.

For every quiver in a mutation class (or a deterministic sample of it),
the suite generates relations, builds the algebra, computes the
closed-form series by type dispatch and by the universal (HH^1, det C)
route, runs the brute-force oracle over each requested field, and demands
exact agreement coefficient by coefficient, plus vanishing HH^2.
"""

from __future__ import annotations

import hashlib
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .algebra import build_algebra, cartan
from .classify import classify_D, hh_closed_form, hh_universal
from .errors import UnclassifiedDError
from .fields import QQ, FieldSpec
from .oracle import hh1_dim, hh_dims
from .quiver import Quiver, canonical_form, dynkin_seed, enumerate_class
from .relations import generate_relations
from .series import hh_dim


@dataclass(frozen=True)
class QuiverRecord:
    canonical: str
    family: str
    rank: int
    zero_relations: int
    commutativity_relations: int
    cartan_det: int
    assoc_poly: tuple
    closed_form: str
    subtype: str
    oracle_dims: tuple  # tuple of (field name, dims tuple)
    passed: bool
    messages: tuple

    def to_dict(self):
        return {
            "canonical": self.canonical,
            "family": self.family,
            "rank": self.rank,
            "zero_relations": self.zero_relations,
            "commutativity_relations": self.commutativity_relations,
            "cartan_det": self.cartan_det,
            "assoc_poly": list(self.assoc_poly),
            "closed_form": self.closed_form,
            "subtype": self.subtype,
            "oracle_dims": {name: list(d) for name, d in self.oracle_dims},
            "passed": self.passed,
            "messages": list(self.messages),
        }


@dataclass
class VerifyReport:
    family: str
    rank: int
    fields: tuple
    max_i: int
    sample: int | None
    records: list = dc_field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.records)

    def summary(self):
        npass = sum(1 for r in self.records if r.passed)
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status}: {self.family}{self.rank}, {npass}/{len(self.records)} quivers ok, "
            f"fields {', '.join(self.fields)}, i <= {self.max_i}"
        )

    def to_dict(self):
        return {
            "family": self.family,
            "rank": self.rank,
            "fields": list(self.fields),
            "max_i": self.max_i,
            "sample": self.sample,
            "passed": self.passed,
            "records": [r.to_dict() for r in self.records],
        }


def check_quiver(q: Quiver, family: str, rank: int, fieldspecs, max_i: int) -> QuiverRecord:
    """Full closed-form/universal/oracle reconciliation for one quiver."""
    messages = []
    rels = generate_relations(q)
    nzero = sum(1 for _, r in rels if r.is_zero_relation)
    ncomm = len(rels) - nzero
    base = build_algebra(q, rels, QQ)
    cd = cartan(base)
    universal = hh_universal(hh1_dim(base), cd.det)
    closed = hh_closed_form(q, family, rank, algebra=base)
    if closed != universal:
        messages.append(f"closed form {closed} != universal {universal}")
    subtype = ""
    if family == "D":
        try:
            subtype = classify_D(q).subtype
        except UnclassifiedDError:
            subtype = "unclassified"

    oracle_dims = []
    for fs in fieldspecs:
        alg = base if fs == QQ else build_algebra(q, rels, fs)
        dims = hh_dims(alg, max_i=max_i).dims
        oracle_dims.append((str(fs), dims))
        expected_closed = tuple(hh_dim(closed, i, fs) for i in range(max_i + 1))
        expected_universal = tuple(hh_dim(universal, i, fs) for i in range(max_i + 1))
        if dims != expected_closed:
            messages.append(f"{fs}: oracle {dims} != closed form {expected_closed}")
        if dims != expected_universal:
            messages.append(f"{fs}: oracle {dims} != universal {expected_universal}")
        if max_i >= 2 and dims[2] != 0:
            messages.append(f"{fs}: HH^2 = {dims[2]} is nonzero")

    return QuiverRecord(
        canonical=canonical_form(q).decode("ascii"),
        family=family,
        rank=rank,
        zero_relations=nzero,
        commutativity_relations=ncomm,
        cartan_det=cd.det,
        assoc_poly=cd.assoc_poly,
        closed_form=str(closed),
        subtype=subtype,
        oracle_dims=tuple(oracle_dims),
        passed=not messages,
        messages=tuple(messages),
    )


def sample_by_canonical(quivers, size):
    """Deterministic pseudo-random sample: order by the SHA-256 digest of the
    canonical form and take a prefix."""
    if size is None or size >= len(quivers):
        return list(quivers)
    keyed = sorted(quivers, key=lambda q: hashlib.sha256(canonical_form(q)).hexdigest())
    return keyed[:size]


def _worker(args):
    q, family, rank, chars, max_i = args
    fieldspecs = [FieldSpec(c) for c in chars]
    return check_quiver(q, family, rank, fieldspecs, max_i)


def default_jobs():
    env = os.environ.get("CT_HH_THREADS")
    if env:
        return max(1, int(env))
    return min(os.cpu_count() or 1, 8)


def verify_suite(family: str, rank: int, fieldspecs, max_i: int,
                 sample: int | None = None, cap: int = 100000,
                 jobs: int | None = None) -> VerifyReport:
    seed = dynkin_seed(family, rank)
    quivers = enumerate_class(seed, cap=cap)
    quivers = sample_by_canonical(quivers, sample)
    if jobs is None:
        jobs = default_jobs()
    chars = tuple(fs.characteristic for fs in fieldspecs)
    tasks = [(q, family, rank, chars, max_i) for q in quivers]
    records = None
    if jobs > 1 and len(tasks) > 1:
        try:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                records = list(pool.map(_worker, tasks, chunksize=4))
        except (OSError, PermissionError):
            records = None  # no subprocess support; fall back to serial
    if records is None:
        records = [_worker(t) for t in tasks]
    records.sort(key=lambda r: r.canonical)
    report = VerifyReport(
        family=family,
        rank=rank,
        fields=tuple(str(fs) for fs in fieldspecs),
        max_i=max_i,
        sample=sample,
        records=records,
    )
    return report
