"""Persistence for enumerated braces.

Binary layout: magic "SBRC", 2-byte little-endian version, 4-byte
little-endian record count; each record stores the order (2 bytes), the
catalog ids of the additive and multiplicative groups (1-byte length +
ASCII each), the dot and circle tables row-major as 2-byte little-endian
indices, a flags byte, and an 8-byte canonical hash. A JSON mirror exists
for interchange; the binary form is authoritative for hashes.
"""

from __future__ import annotations

import hashlib
import json
import struct
from dataclasses import dataclass, field

import numpy as np

from .brace import (
    SkewBrace,
    from_assignment,
    is_two_sided,
    make_brace,
    socle,
    is_ideal,
)
from .catalog import catalog_id
from .counts import classes_of_order
from .errors import CorruptDatabase, SkewbraceError, UnknownRecord
from .groups import AutGroup, automorphism_group, center
from .ybe import (
    check_braiding_operator,
    check_yang_baxter,
    from_brace,
    is_involutive,
    is_nondegenerate,
)

MAGIC = b"SBRC"
VERSION = 1

FLAG_CLASSICAL = 1
FLAG_TWO_SIDED = 2
FLAG_INVOLUTIVE = 4


def canonical_hash(brace: SkewBrace, aut: AutGroup | None = None) -> bytes:
    """Digest of the lexicographically least relabeling of the table pair
    over the automorphisms of the dot group (which fix the dot table, so
    only the circle table varies)."""
    aut = aut or automorphism_group(brace.dot)
    c = np.asarray(brace.circle.table, dtype="<i2")
    best = None
    for i in range(aut.size):
        p = aut.perms[i]
        pinv = aut.inverse_perms[i]
        relabeled = np.ascontiguousarray(p[c[np.ix_(pinv, pinv)]].astype("<i2"))
        buf = relabeled.tobytes()
        if best is None or buf < best:
            best = buf
    dot_bytes = np.ascontiguousarray(
        np.asarray(brace.dot.table, dtype="<i2")
    ).tobytes()
    return hashlib.sha256(dot_bytes + best).digest()[:8]


@dataclass(frozen=True, eq=False)
class BraceRecord:
    order: int
    additive_class: str
    multiplicative_class: str
    dot_table: np.ndarray = field(repr=False)
    circle_table: np.ndarray = field(repr=False)
    flags: int
    canonical_hash: bytes

    def brace(self) -> SkewBrace:
        return make_brace(self.dot_table, self.circle_table)

    @classmethod
    def from_brace(cls, brace: SkewBrace, aut: AutGroup | None = None):
        classical = brace.is_classical()
        flags = 0
        if classical:
            flags |= FLAG_CLASSICAL
            if is_two_sided(brace):
                flags |= FLAG_TWO_SIDED
        if is_involutive(from_brace(brace)):
            flags |= FLAG_INVOLUTIVE
        return cls(
            order=brace.order,
            additive_class=catalog_id(brace.dot),
            multiplicative_class=catalog_id(brace.circle),
            dot_table=np.asarray(brace.dot.table),
            circle_table=np.asarray(brace.circle.table),
            flags=flags,
            canonical_hash=canonical_hash(brace, aut),
        )


def build_records(
    n: int,
    classical: bool = False,
    stretch: bool = False,
    threads: int | None = None,
    kernel: str | None = None,
) -> list[BraceRecord]:
    records = []
    for group, reps in classes_of_order(
        n, classical=classical, stretch=stretch, threads=threads, kernel=kernel
    ):
        aut = reps[0].aut if reps else None
        for rep in reps:
            records.append(BraceRecord.from_brace(from_assignment(rep), aut))
    return records


# ---------------------------------------------------------------------------
# binary format


def _encode_record(r: BraceRecord) -> bytes:
    n = r.order
    add_id = r.additive_class.encode("ascii")
    mul_id = r.multiplicative_class.encode("ascii")
    parts = [
        struct.pack("<H", n),
        struct.pack("B", len(add_id)),
        add_id,
        struct.pack("B", len(mul_id)),
        mul_id,
        np.ascontiguousarray(r.dot_table, dtype="<i2").tobytes(),
        np.ascontiguousarray(r.circle_table, dtype="<i2").tobytes(),
        struct.pack("B", r.flags),
        r.canonical_hash,
    ]
    return b"".join(parts)


class _Reader:
    def __init__(self, buf: bytes):
        self.buf = buf
        self.pos = 0

    def take(self, k: int) -> bytes:
        if self.pos + k > len(self.buf):
            raise CorruptDatabase("unexpected end of file")
        out = self.buf[self.pos : self.pos + k]
        self.pos += k
        return out


def _decode_record(rd: _Reader) -> BraceRecord:
    n = struct.unpack("<H", rd.take(2))[0]
    add_len = rd.take(1)[0]
    add_id = rd.take(add_len).decode("ascii")
    mul_len = rd.take(1)[0]
    mul_id = rd.take(mul_len).decode("ascii")
    dot = np.frombuffer(rd.take(2 * n * n), dtype="<i2").reshape(n, n).copy()
    circle = np.frombuffer(rd.take(2 * n * n), dtype="<i2").reshape(n, n).copy()
    flags = rd.take(1)[0]
    digest = rd.take(8)
    return BraceRecord(
        order=n,
        additive_class=add_id,
        multiplicative_class=mul_id,
        dot_table=dot,
        circle_table=circle,
        flags=flags,
        canonical_hash=digest,
    )


def write_db(records: list[BraceRecord], path: str) -> None:
    if str(path).endswith(".json"):
        _write_json(records, path)
        return
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<H", VERSION))
        fh.write(struct.pack("<I", len(records)))
        for r in records:
            fh.write(_encode_record(r))


def read_db(path: str) -> list[BraceRecord]:
    if str(path).endswith(".json"):
        return _read_json(path)
    with open(path, "rb") as fh:
        buf = fh.read()
    rd = _Reader(buf)
    if rd.take(4) != MAGIC:
        raise CorruptDatabase("bad magic")
    version = struct.unpack("<H", rd.take(2))[0]
    if version != VERSION:
        raise CorruptDatabase(f"unsupported version {version}")
    count = struct.unpack("<I", rd.take(4))[0]
    records = [_decode_record(rd) for _ in range(count)]
    if rd.pos != len(buf):
        raise CorruptDatabase("trailing bytes after last record")
    return records


def _write_json(records: list[BraceRecord], path: str) -> None:
    payload = {
        "format": MAGIC.decode("ascii"),
        "version": VERSION,
        "records": [
            {
                "order": r.order,
                "additive_class": r.additive_class,
                "multiplicative_class": r.multiplicative_class,
                "dot_table": np.asarray(r.dot_table).tolist(),
                "circle_table": np.asarray(r.circle_table).tolist(),
                "flags": r.flags,
                "canonical_hash": r.canonical_hash.hex(),
            }
            for r in records
        ],
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")


def _read_json(path: str) -> list[BraceRecord]:
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except json.JSONDecodeError as exc:
        raise CorruptDatabase(f"bad JSON: {exc}")
    if payload.get("format") != MAGIC.decode("ascii"):
        raise CorruptDatabase("bad format marker")
    return [
        BraceRecord(
            order=item["order"],
            additive_class=item["additive_class"],
            multiplicative_class=item["multiplicative_class"],
            dot_table=np.array(item["dot_table"]),
            circle_table=np.array(item["circle_table"]),
            flags=item["flags"],
            canonical_hash=bytes.fromhex(item["canonical_hash"]),
        )
        for item in payload["records"]
    ]


# ---------------------------------------------------------------------------
# verification


def verify_record(r: BraceRecord) -> list[str]:
    """All invariant failures for one stored record (empty when clean)."""
    problems: list[str] = []
    try:
        brace = r.brace()
    except SkewbraceError as exc:
        return [f"tables do not form a brace: {exc}"]
    if brace.order != r.order:
        problems.append("stored order disagrees with table size")
    if catalog_id(brace.dot) != r.additive_class:
        problems.append("additive class mislabeled")
    if catalog_id(brace.circle) != r.multiplicative_class:
        problems.append("multiplicative class mislabeled")

    flags = 0
    classical = brace.is_classical()
    if classical:
        flags |= FLAG_CLASSICAL
        if is_two_sided(brace):
            flags |= FLAG_TWO_SIDED
    solution = from_brace(brace)
    involutive = is_involutive(solution)
    if involutive:
        flags |= FLAG_INVOLUTIVE
    if flags != r.flags:
        problems.append(f"flags {r.flags} differ from recomputed {flags}")
    if involutive != classical:
        problems.append("involutivity does not match abelian additive group")

    aut = automorphism_group(brace.dot)
    if canonical_hash(brace, aut) != r.canonical_hash:
        problems.append("canonical hash mismatch")

    lam = brace.lambda_matrix()
    for a in range(brace.order):
        if lam[a].tobytes() not in aut.index_of:
            problems.append(f"lambda[{a}] is not a dot automorphism")
            break
    pf = aut.perms[[aut.index_of[row.tobytes()] for row in lam]]
    circ = np.asarray(brace.circle.table)
    if not np.array_equal(pf[:, pf], pf[circ]):
        problems.append("lambda is not a homomorphism from the circle group")

    soc = socle(brace)
    if not is_ideal(brace, soc):
        problems.append("socle is not an ideal")
    if not set(soc) <= set(center(brace.dot)):
        problems.append("socle is not central")

    witness = check_yang_baxter(solution)
    if witness is not None:
        problems.append(f"braid relation fails at {witness}")
    if not is_nondegenerate(solution):
        problems.append("solution is degenerate")
    if not check_braiding_operator(solution, brace.circle):
        problems.append("braiding-operator conditions fail")
    return problems


def verify_records(records: list[BraceRecord]) -> list[tuple[int, str]]:
    failures = []
    for i, r in enumerate(records):
        for problem in verify_record(r):
            failures.append((i, problem))
    return failures


def record_by_index(records: list[BraceRecord], index: int) -> BraceRecord:
    if not 0 <= index < len(records):
        raise UnknownRecord(index)
    return records[index]
