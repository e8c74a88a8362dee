"""Block grid, cell labels and the re-partitioning certificate.

Given vertex partitions G_0..G_{k-1} of G and H_0..H_{l-1} of H and a
dominating set D of G □ H, block (i, j) is G_i x H_j. It is a *G-cell* block
when the horizontal strip G x H_j holds at least |H_j| vertices of D, and an
*H-cell* block when the vertical strip G_i x H holds at least |G_i| of them.
Every block is one or the other: if the strip G x H_j is short, some row
G x {h*} with h* in H_j is free of D, and each (u, h*) with u in G_i must then
be dominated from inside its own column {u} x H. Those dominators sit in
|G_i| distinct columns of G_i x H. :func:`verify_observation` builds exactly
that witness.

:func:`run_repartitioning` replays the counting procedure on a concrete
minimum dominating set D and writes a :class:`RepartitionTrace`. Indices in
the trace are 0-based: round r works on column H_r and freezes part r.

Choices the procedure leaves open, fixed here for reproducible traces:

* Initial partitions come from :func:`build_partition` (index-order deal).
* The exchange map sends the active part's non-projection vertices, in
  ascending order, to projection vertices of the other active parts taken
  in ascending (part index, vertex index) order.
* Displaced vertices go, one at a time in ascending order, to the currently
  smallest remaining active part (ties: lowest part index).
* The last round (r = l - 1) sweeps the column's projections into part r
  but performs no exchange: no later round reads the partition, and the
  row tally only needs every D vertex of G x H_r inside the staircase.
* Where the narrative says "This leaves us with the case when B_{2,2}^1 is a
  G-cell block" in its third round, the staircase pattern (B_{3,3}^2) is
  followed.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .errors import InvalidInputError, PreconditionError
from .graph import is_dominating, members
from .product import cartesian_product, transposed
from .solver import gamma_exact

TRACE_SCHEMA = "vizing-repartition-trace/1"


class Outcome(str, Enum):
    CERTIFIED_BY_ROUNDS = "CERTIFIED_BY_ROUNDS"
    CERTIFIED_ALL_H_CELL_COLUMN = "CERTIFIED_ALL_H_CELL_COLUMN"
    CERTIFIED_PARTS_EXHAUSTED = "CERTIFIED_PARTS_EXHAUSTED"
    DIAGNOSTIC_FAILURE = "DIAGNOSTIC_FAILURE"

    @property
    def certified(self):
        return self is not Outcome.DIAGNOSTIC_FAILURE


@dataclass(frozen=True)
class Partition:
    """Ordered disjoint cover of 0..n-1.

    Parts listed in ``frozen`` have been retired by re-partitioning and are
    exempt from the ``min_part_size`` requirement.
    """

    parts: tuple
    min_part_size: int
    frozen: tuple = ()

    def is_partition_of(self, n):
        seen = 0
        for p in self.parts:
            if p & seen or p < 0:
                return False
            seen |= p
        return seen == (1 << n) - 1

    def undersized(self):
        return [i for i, p in enumerate(self.parts)
                if i not in self.frozen and p.bit_count() < self.min_part_size]

    def as_lists(self):
        return [members(p) for p in self.parts]


def build_partition(g, parts, min_size):
    """Deal vertices 0..n-1 in index order: fill each part to ``min_size``,
    then hand out the remainder round-robin starting at part 0."""
    n = g if isinstance(g, int) else g.n
    if parts < 1:
        raise InvalidInputError("need at least one part")
    if n < parts * min_size:
        raise PreconditionError(
            f"theorem precondition violated: order {n} < {parts} parts x {min_size}")
    out = [0] * parts
    v = 0
    for i in range(parts):
        for _ in range(min_size):
            out[i] |= 1 << v
            v += 1
    i = 0
    while v < n:
        out[i] |= 1 << v
        v += 1
        i = (i + 1) % parts
    return Partition(tuple(out), min_size)


def projection_set(pg, d, g_part, h_part):
    """{u in g_part : (u, v) in d for some v in h_part}."""
    out = 0
    hs = pg.h_size
    for u in members(g_part):
        if (d >> (u * hs)) & h_part:
            out |= 1 << u
    return out


@dataclass(frozen=True)
class HCellWitness:
    """Empty row h* of the block plus, for each u in G_i, a D-vertex (u, v)
    in column u adjacent to (u, h*)."""

    empty_row: int
    dominators: tuple  # ((u, v), ...) ascending in u


@dataclass(frozen=True)
class BlockLabel:
    i: int
    j: int
    is_g_cell: bool
    is_h_cell: bool
    d_count_in_block: int
    strip_g_count: int   # |D ∩ (G x H_j)|
    strip_h_count: int   # |D ∩ (G_i x H)|
    witness: Optional[HCellWitness] = None


def _label(pg, d, g_part, h_part, i, j):
    g_all = (1 << pg.g_size) - 1
    h_all = (1 << pg.h_size) - 1
    strip_g = (pg.rectangle(g_all, h_part) & d).bit_count()
    strip_h = (pg.rectangle(g_part, h_all) & d).bit_count()
    inside = (pg.rectangle(g_part, h_part) & d).bit_count()
    return BlockLabel(i, j,
                      is_g_cell=strip_g >= h_part.bit_count(),
                      is_h_cell=strip_h >= g_part.bit_count(),
                      d_count_in_block=inside,
                      strip_g_count=strip_g,
                      strip_h_count=strip_h)


def _h_cell_witness(pg, d, g_part, h_part):
    hs = pg.h_size
    rows = pg.graph.rows
    empty_row = None
    for v in members(h_part):
        if not pg.row(v) & d:
            empty_row = v
            break
    if empty_row is None:
        return None
    doms = []
    for u in members(g_part):
        x = u * hs + empty_row
        column_d = rows[x] & d & pg.column(u)
        if not column_d:
            return None
        y = (column_d & -column_d).bit_length() - 1
        doms.append((u, y % hs))
    return HCellWitness(empty_row, tuple(doms))


def _require_dominating(pg, d):
    pg.graph.check_set(d)
    if not is_dominating(pg.graph, d):
        raise PreconditionError("D is not a dominating set of the product")


def classify_block(pg, d, partition_g, partition_h, i, j):
    _require_dominating(pg, d)
    if not (0 <= i < len(partition_g.parts) and 0 <= j < len(partition_h.parts)):
        raise InvalidInputError(f"block ({i}, {j}) out of range")
    return _label(pg, d, partition_g.parts[i], partition_h.parts[j], i, j)


@dataclass
class ObservationResult:
    labels: list
    failures: list = field(default_factory=list)   # [(i, j, reason), ...]

    @property
    def ok(self):
        return not self.failures


def verify_observation(pg, d, partition_g, partition_h):
    """Label every block and attach the constructive H-cell witness to each
    block that is not G-cell. Blocks that get no label, or whose witness cannot
    be built, are reported in ``failures``; they would contradict the
    dichotomy and are never dropped silently."""
    _require_dominating(pg, d)
    labels = []
    failures = []
    for j, h_part in enumerate(partition_h.parts):
        for i, g_part in enumerate(partition_g.parts):
            lab = _label(pg, d, g_part, h_part, i, j)
            if not lab.is_g_cell:
                w = _h_cell_witness(pg, d, g_part, h_part)
                if w is None:
                    failures.append((i, j, "no H-cell witness"))
                else:
                    lab = BlockLabel(lab.i, lab.j, lab.is_g_cell, lab.is_h_cell,
                                     lab.d_count_in_block, lab.strip_g_count,
                                     lab.strip_h_count, w)
            if not (lab.is_g_cell or lab.is_h_cell):
                failures.append((i, j, "neither G-cell nor H-cell"))
            labels.append(lab)
    return ObservationResult(labels, failures)


def audit_witness(pg, d, label, partition_g, partition_h):
    """Re-check an H-cell witness: empty row in H_j, one D-dominator per
    column of G_i, each adjacent to (u, h*)."""
    w = label.witness
    if w is None:
        return False
    g_part = partition_g.parts[label.i]
    h_part = partition_h.parts[label.j]
    hs = pg.h_size
    if not h_part >> w.empty_row & 1:
        return False
    if pg.row(w.empty_row) & d:
        return False
    cols = [u for u, _ in w.dominators]
    if cols != members(g_part):
        return False
    for u, v in w.dominators:
        y = u * hs + v
        if not d >> y & 1:
            return False
        if not pg.graph.rows[u * hs + w.empty_row] >> y & 1:
            return False
    return True


# -- re-partitioning ---------------------------------------------------------

@dataclass(frozen=True)
class Region:
    """Rectangle a_vertices x b_vertices of the oriented product, with the
    number of D vertices it is claimed to hold."""

    kind: str          # "staircase" or "h_cell_strip"
    a_vertices: int
    b_vertices: int
    d_count: int


@dataclass
class RoundRecord:
    round: int
    column: int
    active_part: int
    g_cell_column: bool
    labels: list
    projections: dict          # part index -> bitmask of P_{i,r}
    exchange: list             # [(source, target), ...]
    reassigned: list           # [(vertex, part index), ...]
    swept: int                 # projection vertices moved without an exchange partner
    partition_before: Partition
    partition_after: Partition
    counted: list              # [Region, ...]
    undersized_after: list = field(default_factory=list)


@dataclass
class RepartitionTrace:
    swapped: bool
    a_size: int                # order of the factor partitioned into k parts
    b_size: int
    gamma_a: int               # k
    gamma_b: int               # l
    d: int                     # in the original (G, H) flat indexing
    partition_b: Partition
    initial_partition_a: Partition
    rounds: list
    outcome: Outcome
    certified_count: int
    diagnostic: Optional[dict] = None

    @property
    def target(self):
        return self.gamma_a * self.gamma_b

    def counted_regions(self):
        return [reg for rnd in self.rounds for reg in rnd.counted]

    def to_dict(self):
        return _trace_to_dict(self)

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)

    @classmethod
    def from_dict(cls, data):
        return _trace_from_dict(data)


def _oriented(g, h, gamma_g, gamma_h):
    """Swap so the first factor has the larger domination number."""
    if gamma_g >= gamma_h:
        return g, h, gamma_g, gamma_h, False
    return h, g, gamma_h, gamma_g, True


def run_repartitioning(g, h, d=None, gamma_g=None, gamma_h=None):
    """Run the re-partitioning procedure and return its full trace.

    ``d`` is a minimum dominating set of ``cartesian_product(g, h)`` in that
    product's flat indexing; None selects the canonical one. The procedure
    works on the orientation with gamma(first) >= gamma(second) and records
    whether it swapped.
    """
    if gamma_g is None:
        gamma_g = gamma_exact(g).gamma
    if gamma_h is None:
        gamma_h = gamma_exact(h).gamma
    need = gamma_g * gamma_h
    if g.n < need or h.n < need:
        raise PreconditionError(
            f"theorem precondition violated: |G|={g.n}, |H|={h.n}, gamma(G)gamma(H)={need}")
    pg = cartesian_product(g, h)
    if d is None:
        d = gamma_exact(pg.graph).witness
    else:
        pg.graph.check_set(d)
        if not is_dominating(pg.graph, d):
            raise InvalidInputError("D is not a dominating set of G x H")
        if d.bit_count() != gamma_exact(pg.graph, canonical=False).gamma:
            raise InvalidInputError("D is not a minimum dominating set of G x H")

    a, b, k, l, swapped = _oriented(g, h, gamma_g, gamma_h)
    apg = transposed(pg) if swapped else pg
    dn = pg.transpose_set(d) if swapped else d
    return _engine(apg, dn, d, a.n, b.n, k, l, swapped)


def _engine(apg, dn, d_original, a_size, b_size, k, l, swapped):
    part_a = build_partition(a_size, k, l)
    part_b = build_partition(b_size, l, k)
    parts = list(part_a.parts)
    frozen = []
    rounds = []
    total = 0
    outcome = None
    diagnostic = None
    b_all = (1 << b_size) - 1

    def snapshot():
        return Partition(tuple(parts), l, tuple(frozen))

    for r in range(l):
        h_r = part_b.parts[r]
        before = snapshot()
        active = [i for i in range(k) if i not in frozen]
        labels = []
        for i in active:
            lab = _label(apg, dn, parts[i], h_r, i, r)
            if not lab.is_g_cell:
                w = _h_cell_witness(apg, dn, parts[i], h_r)
                lab = BlockLabel(lab.i, lab.j, lab.is_g_cell, lab.is_h_cell,
                                 lab.d_count_in_block, lab.strip_g_count,
                                 lab.strip_h_count, w)
            labels.append(lab)
        g_cell = (apg.rectangle((1 << a_size) - 1, h_r) & dn).bit_count() >= h_r.bit_count()
        proj = {i: projection_set(apg, dn, parts[i], h_r) for i in active}
        record = RoundRecord(r + 1, r, r, g_cell, labels, proj, [], [], 0,
                             before, before, [])
        rounds.append(record)

        broken = [lab for lab in labels if not (lab.is_g_cell or lab.is_h_cell)
                  or (not lab.is_g_cell and lab.witness is None)]
        if broken:
            outcome = Outcome.DIAGNOSTIC_FAILURE
            diagnostic = {"round": r + 1, "block": [broken[0].i, broken[0].j],
                          "reason": "block has no valid label", "missing": 1}
            break

        if not g_cell:
            # every remaining block of this column is H-cell: count the vertical strips
            for i in active:
                if parts[i]:
                    region = apg.rectangle(parts[i], b_all)
                    c = (region & dn).bit_count()
                    record.counted.append(Region("h_cell_strip", parts[i], b_all, c))
                    total += c
            outcome = Outcome.CERTIFIED_ALL_H_CELL_COLUMN
            break

        others = [i for i in active if i != r]
        sources = members(parts[r] & ~proj[r])
        targets = [(i, u) for i in others for u in members(proj[i])]
        last_round = r == l - 1
        if not last_round:
            if len(sources) > len(targets):
                outcome = Outcome.DIAGNOSTIC_FAILURE
                diagnostic = {
                    "round": r + 1, "block": [r, r],
                    "reason": "injection f has too few projection targets",
                    "sources": len(sources), "targets": len(targets),
                    "missing": len(sources) - len(targets)}
                break
            record.exchange = [(v, u) for v, (_, u) in zip(sources, targets)]

        swept = 0
        for i in others:
            parts[i] &= ~proj[i]
            swept |= proj[i]
        images = 0
        for _, u in record.exchange:
            images |= 1 << u
        record.swept = swept & ~images
        if last_round:
            parts[r] |= swept
        else:
            parts[r] = proj[r] | swept
            for v in sources:
                dest = min(others, key=lambda i: (parts[i].bit_count(), i))
                parts[dest] |= 1 << v
                record.reassigned.append((v, dest))
        frozen.append(r)

        staircase = 0
        for i in frozen:
            staircase |= parts[i]
        c = (apg.rectangle(staircase, h_r) & dn).bit_count()
        record.counted.append(Region("staircase", staircase, h_r, c))
        total += c
        record.partition_after = snapshot()
        record.undersized_after = record.partition_after.undersized()

        if last_round:
            outcome = Outcome.CERTIFIED_BY_ROUNDS
            break
        if not any(parts[i] for i in others):
            outcome = Outcome.CERTIFIED_PARTS_EXHAUSTED
            break

    if outcome is not Outcome.DIAGNOSTIC_FAILURE and total < k * l:
        diagnostic = {"round": len(rounds), "block": None,
                      "reason": "tally below gamma(G)gamma(H)",
                      "missing": k * l - total}
        outcome = Outcome.DIAGNOSTIC_FAILURE
    return RepartitionTrace(swapped, a_size, b_size, k, l, d_original, part_b,
                            part_a, rounds, outcome, total, diagnostic)


# -- audit -------------------------------------------------------------------

@dataclass(frozen=True)
class AuditResult:
    ok: bool
    failure: Optional[str] = None

    def __bool__(self):
        return self.ok


def audit_trace(trace, pg, d):
    """Independently re-check a trace against the product and D.

    Verifies the partitions, every exchange map, every H-cell witness, each
    counted region's tally, pairwise disjointness of counted regions, and the
    final inequality on certified outcomes.
    """
    def fail(msg):
        return AuditResult(False, msg)

    if trace.d != d:
        return fail("trace D differs from the supplied D")
    if not is_dominating(pg.graph, d):
        return fail("D is not dominating")
    sizes = (pg.h_size, pg.g_size) if trace.swapped else (pg.g_size, pg.h_size)
    if (trace.a_size, trace.b_size) != sizes:
        return fail("factor orders do not match the product")
    apg = transposed(pg) if trace.swapped else pg
    dn = pg.transpose_set(d) if trace.swapped else d
    k, l = trace.gamma_a, trace.gamma_b

    if not trace.partition_b.is_partition_of(trace.b_size) or len(trace.partition_b.parts) != l:
        return fail("partition of the second factor is invalid")
    if not trace.initial_partition_a.is_partition_of(trace.a_size):
        return fail("initial partition is invalid")
    if len(trace.initial_partition_a.parts) != k:
        return fail("initial partition has the wrong number of parts")
    if len(trace.rounds) > l:
        return fail(f"{len(trace.rounds)} rounds exceed the bound l={l}")

    prev = trace.initial_partition_a
    for rnd in trace.rounds:
        tag = f"round {rnd.round}"
        if rnd.partition_before != prev:
            return fail(f"{tag}: partition_before does not continue the previous round")
        if not rnd.partition_after.is_partition_of(trace.a_size):
            return fail(f"{tag}: partition_after is not a partition")
        active = [i for i in range(len(prev.parts)) if i not in prev.frozen]
        h_r = trace.partition_b.parts[rnd.column]
        for lab in rnd.labels:
            expect = _label(apg, dn, prev.parts[lab.i], h_r, lab.i, rnd.column)
            if (lab.is_g_cell, lab.is_h_cell, lab.strip_g_count, lab.strip_h_count,
                    lab.d_count_in_block) != (expect.is_g_cell, expect.is_h_cell,
                                              expect.strip_g_count, expect.strip_h_count,
                                              expect.d_count_in_block):
                return fail(f"{tag}: label of block ({lab.i}, {lab.j}) is wrong")
            if not lab.is_g_cell and not audit_witness(apg, dn, lab, prev, trace.partition_b):
                return fail(f"{tag}: H-cell witness of block ({lab.i}, {lab.j}) fails")
        for i, p in rnd.projections.items():
            if p != projection_set(apg, dn, prev.parts[i], h_r):
                return fail(f"{tag}: projection of part {i} is wrong")
        srcs = [s for s, _ in rnd.exchange]
        tgts = [t for _, t in rnd.exchange]
        if len(set(srcs)) != len(srcs) or len(set(tgts)) != len(tgts):
            return fail(f"{tag}: exchange map is not injective")
        if set(srcs) & set(tgts):
            return fail(f"{tag}: exchange sources and targets overlap")
        act = rnd.active_part
        for s in srcs:
            if not prev.parts[act] >> s & 1:
                return fail(f"{tag}: exchange source {s} not in the active part")
        for t in tgts:
            owner = [i for i in active if i != act and prev.parts[i] >> t & 1]
            if not owner or not rnd.projections.get(owner[0], 0) >> t & 1:
                return fail(f"{tag}: exchange target {t} is not a projection vertex")
        prev = rnd.partition_after

    regions = trace.counted_regions()
    union = 0
    supports = 0
    total = 0
    for reg in regions:
        cells = apg.rectangle(reg.a_vertices, reg.b_vertices)
        got = (cells & dn).bit_count()
        if got != reg.d_count:
            return fail(f"{reg.kind} region claims {reg.d_count} D vertices, holds {got}")
        if cells & union:
            return fail("counted regions overlap")
        union |= cells
        supports |= cells & dn
        total += reg.d_count
    if supports.bit_count() != total:
        return fail("tallies double-count a vertex of D")
    if total != trace.certified_count:
        return fail(f"certified_count {trace.certified_count} != sum of tallies {total}")
    if trace.certified_count > d.bit_count():
        return fail("certified_count exceeds |D|")
    if trace.outcome.certified and trace.certified_count < k * l:
        return fail(f"certified outcome with count {trace.certified_count} < {k * l}")
    return AuditResult(True)


# -- serialisation -----------------------------------------------------------

def _partition_to_dict(p):
    return {"parts": p.as_lists(), "min_part_size": p.min_part_size,
            "frozen": list(p.frozen)}


def _partition_from_dict(data):
    parts = tuple(sum(1 << v for v in part) for part in data["parts"])
    return Partition(parts, data["min_part_size"], tuple(data["frozen"]))


def _label_to_dict(lab):
    out = {"i": lab.i, "j": lab.j, "is_g_cell": lab.is_g_cell, "is_h_cell": lab.is_h_cell,
           "d_count_in_block": lab.d_count_in_block, "strip_g_count": lab.strip_g_count,
           "strip_h_count": lab.strip_h_count, "witness": None}
    if lab.witness is not None:
        out["witness"] = {"empty_row": lab.witness.empty_row,
                          "dominators": [list(p) for p in lab.witness.dominators]}
    return out


def _label_from_dict(data):
    w = data.get("witness")
    if w is not None:
        w = HCellWitness(w["empty_row"], tuple(tuple(p) for p in w["dominators"]))
    return BlockLabel(data["i"], data["j"], data["is_g_cell"], data["is_h_cell"],
                      data["d_count_in_block"], data["strip_g_count"],
                      data["strip_h_count"], w)


def _trace_to_dict(t):
    return {
        "schema": TRACE_SCHEMA,
        "swapped": t.swapped,
        "a_size": t.a_size,
        "b_size": t.b_size,
        "gamma_a": t.gamma_a,
        "gamma_b": t.gamma_b,
        "d": members(t.d),
        "partition_b": _partition_to_dict(t.partition_b),
        "initial_partition_a": _partition_to_dict(t.initial_partition_a),
        "rounds": [{
            "round": r.round,
            "column": r.column,
            "active_part": r.active_part,
            "g_cell_column": r.g_cell_column,
            "labels": [_label_to_dict(lab) for lab in r.labels],
            "projections": {str(i): members(p) for i, p in sorted(r.projections.items())},
            "exchange": [list(e) for e in r.exchange],
            "reassigned": [list(e) for e in r.reassigned],
            "swept": members(r.swept),
            "partition_before": _partition_to_dict(r.partition_before),
            "partition_after": _partition_to_dict(r.partition_after),
            "counted": [{"kind": c.kind, "a_vertices": members(c.a_vertices),
                         "b_vertices": members(c.b_vertices), "d_count": c.d_count}
                        for c in r.counted],
            "undersized_after": r.undersized_after,
        } for r in t.rounds],
        "outcome": t.outcome.value,
        "certified_count": t.certified_count,
        "diagnostic": t.diagnostic,
    }


def _trace_from_dict(data):
    if data.get("schema") != TRACE_SCHEMA:
        raise InvalidInputError(f"unsupported trace schema {data.get('schema')!r}")

    def mask(xs):
        return sum(1 << v for v in xs)

    rounds = []
    for r in data["rounds"]:
        rounds.append(RoundRecord(
            round=r["round"], column=r["column"], active_part=r["active_part"],
            g_cell_column=r["g_cell_column"],
            labels=[_label_from_dict(x) for x in r["labels"]],
            projections={int(i): mask(p) for i, p in r["projections"].items()},
            exchange=[tuple(e) for e in r["exchange"]],
            reassigned=[tuple(e) for e in r["reassigned"]],
            swept=mask(r["swept"]),
            partition_before=_partition_from_dict(r["partition_before"]),
            partition_after=_partition_from_dict(r["partition_after"]),
            counted=[Region(c["kind"], mask(c["a_vertices"]), mask(c["b_vertices"]),
                            c["d_count"]) for c in r["counted"]],
            undersized_after=list(r["undersized_after"]),
        ))
    return RepartitionTrace(
        swapped=data["swapped"], a_size=data["a_size"], b_size=data["b_size"],
        gamma_a=data["gamma_a"], gamma_b=data["gamma_b"], d=mask(data["d"]),
        partition_b=_partition_from_dict(data["partition_b"]),
        initial_partition_a=_partition_from_dict(data["initial_partition_a"]),
        rounds=rounds, outcome=Outcome(data["outcome"]),
        certified_count=data["certified_count"], diagnostic=data["diagnostic"])


def certify(g, h, retry_limit=0):
    """Run the procedure on the canonical D; on a diagnostic, optionally retry
    other minimum dominating sets (lexicographic order, up to ``retry_limit``).

    Returns ``(trace, pg, attempts)``.
    """
    from .solver import enumerate_minimum_dominating_sets

    gg = gamma_exact(g).gamma
    gh = gamma_exact(h).gamma
    pg = cartesian_product(g, h)
    trace = run_repartitioning(g, h, None, gg, gh)
    attempts = 1
    if trace.outcome.certified or retry_limit <= 0:
        return trace, pg, attempts
    for d in enumerate_minimum_dominating_sets(pg.graph, retry_limit):
        if d == trace.d:
            continue
        attempts += 1
        candidate = run_repartitioning(g, h, d, gg, gh)
        if candidate.outcome.certified:
            return candidate, pg, attempts
    return trace, pg, attempts


def default_partitions(g, h, gamma_g, gamma_h):
    """Partitions used when labelling blocks outside a certificate run.

    G gets gamma(G) parts of minimum size gamma(H) and H gets gamma(H) parts
    of minimum size gamma(G), as in the order condition. When a factor is too
    small for that, the minimum size drops to ``order // parts`` so every part
    is still nonempty.
    """
    def one(n, parts, want):
        return build_partition(n, parts, want if n >= parts * want else n // parts)

    return one(g.n, gamma_g, gamma_h), one(h.n, gamma_h, gamma_g)
