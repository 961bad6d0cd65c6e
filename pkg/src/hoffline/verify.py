"""Reproduction suite: the forbidden-subgraph catalog and claim checkers.

The central object is the catalog of minimal forbidden subgraphs for the
class of slim {H2, H3, H5}-line graphs: connected slim graphs that are
not line graphs of the family although every one-vertex-deleted induced
subgraph is.  ``build_catalog`` derives it from scratch for
5 <= n <= n_max by exhaustive recognition over all connected graphs,
cross-checking two independent minimality filters (per-vertex deletion
versus containment of a smaller member), and attaches per-member
certificates: a strict cover of every one-vertex deletion and a certified
smallest-eigenvalue interval with its threshold verdict.

``screen`` decides line-graph membership purely by forbidden-subgraph
containment, which the test suite checks against direct cover-search
recognition on every connected graph up to 7 vertices.

The ``verify_*`` functions reproduce the published computational claims:
per-size counts of the catalog (2 / 28 / 7 / 1 / 0 for n = 5..9), the
spectral dichotomy (exactly one member, on 5 vertices, has smallest
eigenvalue below -1-sqrt(2)), cover uniqueness at n >= 8, the three
constrained fat-graph enumerations, and the composition table.

The composition table needs a correspondence between the published
member names (G5,1 .. G8,1) and computed canonical forms.  The published
numbering is not derivable from the catalog itself, but the table pins
it: each name's *row signature* (the set of rows listing it) must match
the computed occurrence signature of its form, and the one 5-vertex name
singled out spectrally identifies itself.  ``verify_table1`` solves this
correspondence by counting signature classes.  Two rows of the published
table (c and d) list fewer members than actually occur under the stated
row constraints; the checker verifies the guarantee itself (every
composed graph contains some catalog member), verifies the signature
structure restricted to the five clean rows, and reports the extra
occurrences of rows c/d exactly.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing
import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .core import (
    HoffmanGraph,
    HoffmanGraphError,
    canonical_form,
    find_embedding,
)
from .enumeration import (
    FatConstraints,
    connected_slim_graphs,
    enumerate_sums,
    fat_hoffman_graphs,
    parse_graph6,
    write_graph6,
)
from .families import TranscriptionMissing, family_graph
from .recognition import enumerate_strict_covers, is_h_line, is_h_line_cached
from .spectral import (
    EigenInterval,
    Verdict,
    compare_threshold,
    equals_threshold,
    smallest_eigenvalue,
)


class IncompleteCatalog(HoffmanGraphError):
    """The catalog does not reach the size needed for screening."""


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------


@dataclass
class CatalogEntry:
    graph: HoffmanGraph
    form: bytes
    eigen: EigenInterval
    verdict: Verdict
    equals_threshold: bool
    witnesses: dict  # deleted vertex -> strict cover json dict of the deletion


@dataclass
class MfsCatalog:
    """Minimal forbidden subgraphs by size, with certificates."""

    n_max: int
    entries: dict[int, list[CatalogEntry]] = field(default_factory=dict)

    def members(self, up_to=None):
        out = []
        for n in sorted(self.entries):
            if up_to is None or n <= up_to:
                out.extend(self.entries[n])
        return out

    def counts(self):
        return {n: len(es) for n, es in sorted(self.entries.items())}

    def total(self):
        return sum(len(es) for es in self.entries.values())

    def checksum(self):
        h = hashlib.sha256()
        for e in sorted(self.members(), key=lambda e: (e.graph.n, e.form)):
            h.update(e.form)
        return h.hexdigest()

    # -- persistence: catalog.json + g6/ + witness/ ---------------------

    def save(self, directory):
        os.makedirs(directory, exist_ok=True)
        g6dir = os.path.join(directory, "g6")
        wdir = os.path.join(directory, "witness")
        os.makedirs(g6dir, exist_ok=True)
        os.makedirs(wdir, exist_ok=True)
        for n, entries in sorted(self.entries.items()):
            with open(os.path.join(g6dir, f"mfs{n}.g6"), "w") as fh:
                for e in entries:
                    fh.write(write_graph6(e.graph) + "\n")
            for i, e in enumerate(entries):
                doc = {
                    "graph6": write_graph6(e.graph),
                    "eigen": {
                        "lower": str(e.eigen.lower),
                        "upper": str(e.eigen.upper),
                        "char_poly": list(e.eigen.poly),
                        "verdict": e.verdict.value,
                        "equals_threshold": e.equals_threshold,
                    },
                    "deletions": {str(v): w for v, w in sorted(e.witnesses.items())},
                }
                with open(os.path.join(wdir, f"mfs{n}_{i}.json"), "w") as fh:
                    json.dump(doc, fh, indent=1, sort_keys=True)
        meta = {
            "n_max": self.n_max,
            "counts": {str(n): c for n, c in self.counts().items()},
            "total": self.total(),
            "checksum": self.checksum(),
        }
        with open(os.path.join(directory, "catalog.json"), "w") as fh:
            json.dump(meta, fh, indent=1, sort_keys=True)

    @staticmethod
    def load(directory):
        with open(os.path.join(directory, "catalog.json")) as fh:
            meta = json.load(fh)
        cat = MfsCatalog(n_max=meta["n_max"])
        for n_str in sorted(meta["counts"], key=int):
            n = int(n_str)
            entries = []
            for i in range(meta["counts"][n_str]):
                with open(os.path.join(directory, "witness", f"mfs{n}_{i}.json")) as fh:
                    doc = json.load(fh)
                g = parse_graph6(doc["graph6"])
                eig = doc["eigen"]
                interval = EigenInterval(
                    Fraction(eig["lower"]),
                    Fraction(eig["upper"]),
                    tuple(eig["char_poly"]),
                )
                entries.append(
                    CatalogEntry(
                        graph=g,
                        form=canonical_form(g),
                        eigen=interval,
                        verdict=Verdict(eig["verdict"]),
                        equals_threshold=eig["equals_threshold"],
                        witnesses={int(v): w for v, w in doc["deletions"].items()},
                    )
                )
            cat.entries[n] = entries
        if cat.checksum() != meta["checksum"]:
            raise HoffmanGraphError("catalog checksum mismatch")
        return cat


def _recognize_form(g):
    return canonical_form(g), is_h_line(g) is not None


def _pool_map(fn, items, jobs):
    if jobs <= 1:
        return [fn(x) for x in items]
    with multiprocessing.Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=64)


def build_catalog(n_max, jobs=1, progress=None):
    """Derive the catalog for 5 <= n <= n_max (5 <= n_max <= 9).

    For every size: recognize all connected graphs, keep the non-line
    ones whose one-vertex deletions are all line graphs, and cross-check
    that filter against containment of a smaller member.  Results are
    deterministic and independent of ``jobs``.
    """
    if not 5 <= n_max <= 9:
        raise HoffmanGraphError("catalog sizes run from 5 to 9")
    cat = MfsCatalog(n_max=n_max)
    smaller = []
    for n in range(5, n_max + 1):
        t0 = time.time()
        graphs = list(connected_slim_graphs(n))
        flags = _pool_map(_recognize_form, graphs, jobs)
        entries = []
        for g, (form, is_line) in zip(graphs, flags):
            if is_line:
                continue
            deletions = {}
            minimal = True
            for v in range(n):
                sub = g.delete_slim({v})
                cover = is_h_line(sub)
                if cover is None:
                    minimal = False
                    break
                deletions[v] = cover.to_json_dict()
            contains_smaller = any(
                find_embedding(m.graph, g) is not None for m in smaller
            )
            if minimal == contains_smaller:
                raise HoffmanGraphError(
                    "minimality filters disagree on " + write_graph6(g)
                )
            if not minimal:
                continue
            interval = smallest_eigenvalue(g)
            entries.append(
                CatalogEntry(
                    graph=g,
                    form=form,
                    eigen=interval,
                    verdict=compare_threshold(interval),
                    equals_threshold=equals_threshold(interval),
                    witnesses=deletions,
                )
            )
        entries.sort(key=lambda e: e.form)
        cat.entries[n] = entries
        smaller.extend(entries)
        if progress:
            progress(
                f"n={n}: {len(graphs)} graphs, {len(entries)} minimal forbidden "
                f"({time.time() - t0:.1f}s)"
            )
    return cat


def screen(g, catalog):
    """Is the slim graph ``g`` a line graph of the family, by catalog?

    True iff no catalog member embeds into ``g`` as an induced subgraph.
    The catalog must reach min(|V(g)|, 9); beyond 9 vertices the catalog
    is complete at n_max = 9 because no larger minimal forbidden
    subgraph exists.
    """
    if g.fat_count:
        raise HoffmanGraphError("screening expects a slim graph")
    needed = min(g.slim_count, 9)
    if catalog.n_max < needed:
        raise IncompleteCatalog(
            f"screening a {g.slim_count}-vertex graph needs catalog n_max >= {needed}"
        )
    for entry in catalog.members(up_to=g.slim_count):
        if find_embedding(entry.graph, g) is not None:
            return False
    return True


# ---------------------------------------------------------------------------
# Verification reports
# ---------------------------------------------------------------------------


@dataclass
class VerificationReport:
    claim: str
    status: str  # "confirmed" | "refuted"
    counts: dict
    details: dict = field(default_factory=dict)
    counterexample: str | None = None
    runtime_s: float = 0.0

    @property
    def ok(self):
        return self.status == "confirmed"

    def to_json(self, pretty=False):
        doc = {
            "claim": self.claim,
            "status": self.status,
            "counts": self.counts,
            "details": self.details,
            "counterexample": self.counterexample,
            "runtime_s": round(self.runtime_s, 3),
        }
        return json.dumps(doc, indent=2 if pretty else None, sort_keys=True)


def _report(claim, ok, counts, t0, details=None, counterexample=None):
    return VerificationReport(
        claim=claim,
        status="confirmed" if ok else "refuted",
        counts=counts,
        details=details or {},
        counterexample=counterexample,
        runtime_s=time.time() - t0,
    )


def verify_eq2():
    """Classes of connected non-line graphs per size: none for n <= 4 and
    exactly two at n = 5."""
    t0 = time.time()
    expected = {1: 0, 2: 0, 3: 0, 4: 0, 5: 2}
    counts = {}
    bad = None
    for n in range(1, 6):
        non = [g for g in connected_slim_graphs(n) if is_h_line(g) is None]
        counts[n] = len(non)
        if counts[n] != expected[n] and bad is None:
            bad = write_graph6(non[0]) if non else None
    ok = counts == expected
    return _report("eq2", ok, counts, t0, counterexample=None if ok else bad)


def verify_prop21(catalog):
    """Catalog counts 2 / 28 / 7 / 1 per size 5..8 (and 0 at 9)."""
    t0 = time.time()
    expected = {5: 2, 6: 28, 7: 7, 8: 1, 9: 0}
    counts = catalog.counts()
    ok = all(counts.get(n, None) == expected[n] for n in range(5, catalog.n_max + 1))
    total_expected = sum(expected[n] for n in range(5, catalog.n_max + 1))
    details = {
        "total": catalog.total(),
        "total_expected": total_expected,
        "checksum": catalog.checksum(),
    }
    ok = ok and catalog.total() == total_expected
    bad = None
    if not ok:
        off = next(
            n for n in range(5, catalog.n_max + 1)
            if counts.get(n, None) != expected[n]
        )
        bad = f"size {off}: " + " ".join(
            write_graph6(e.graph) for e in catalog.entries.get(off, [])
        )
    return _report("prop2.1", ok, counts, t0, details, bad)


def verify_eigen_claims(catalog, check_line_graphs_to=7):
    """Exactly one catalog member certifies smallest eigenvalue below
    -1-sqrt(2), and it has 5 vertices; all others certify at-or-above.
    Line graphs of the family up to the given size all certify
    at-or-above as well."""
    t0 = time.time()
    below = [e for e in catalog.members() if e.verdict is Verdict.BELOW]
    above = [e for e in catalog.members() if e.verdict is Verdict.AT_OR_ABOVE]
    counts = {"below": len(below), "at_or_above": len(above)}
    ok = len(below) == 1 and below[0].graph.n == 5
    bad = None
    checked = 0
    for n in range(1, check_line_graphs_to + 1):
        for g in connected_slim_graphs(n):
            if not is_h_line_cached(g):
                continue
            checked += 1
            if compare_threshold(smallest_eigenvalue(g)) is not Verdict.AT_OR_ABOVE:
                ok = False
                bad = write_graph6(g)
    counts["line_graphs_checked"] = checked
    details = {
        "below_member_graph6": write_graph6(below[0].graph) if len(below) == 1 else None,
        "below_member_vertices": below[0].graph.n if len(below) == 1 else None,
    }
    return _report("eigen", ok, counts, t0, details, bad)


def _cover_class_count(g):
    return len(enumerate_strict_covers(g))


def verify_cover_uniqueness(n, sample_size=None, seed=2026, jobs=1):
    """Strict-cover equivalence-class counts over connected line graphs
    with ``n`` vertices.  The published uniqueness claim applies from 8
    vertices on; below that the distribution is only reported."""
    t0 = time.time()
    if not 5 <= n <= 9:
        raise HoffmanGraphError("uniqueness audit covers 5 <= n <= 9")
    graphs = list(connected_slim_graphs(n))
    if sample_size is not None and sample_size < len(graphs):
        rng = random.Random(seed)
        graphs = rng.sample(graphs, sample_size)
    class_counts = _pool_map(_cover_class_count, graphs, jobs)
    dist = {}
    worst = None
    line_count = 0
    for g, k in zip(graphs, class_counts):
        if k == 0:
            continue
        line_count += 1
        dist[k] = dist.get(k, 0) + 1
        if worst is None or k > worst[0]:
            worst = (k, write_graph6(g))
    ok = True
    if n >= 8:
        ok = set(dist) <= {1}
    counts = {"line_graphs": line_count, "classes_distribution": dict(sorted(dist.items()))}
    details = {"n": n, "sampled": sample_size is not None, "max_classes": worst[0] if worst else 0}
    bad = worst[1] if (n >= 8 and not ok and worst) else None
    return _report("uniqueness", ok, counts, t0, details, bad)


# ---------------------------------------------------------------------------
# Constrained fat-graph enumerations
# ---------------------------------------------------------------------------

_LEMMA_BUNDLES = {
    "4.10": FatConstraints(
        slim_min=2, slim_max=2, fat_max=4, max_fat_degree=2,
        nonadjacent_slim_pair=True, non_line=True,
    ),
    "4.11": FatConstraints(
        slim_min=3, slim_max=4, fat_max=2, pivot_structure=True, non_line=True,
    ),
    "4.12": FatConstraints(
        slim_min=3, slim_max=6, fat_min=1, fat_max=1, exact_fat_degree=1,
        overlapping_cover_pair=True, non_line=True,
    ),
}

_LEMMA_CONCLUSIONS = {
    "4.10": ("F1", "F3", "F4"),
    "4.11": ("F2", "F5", "F8"),
    "4.12": ("F6", "F7", "F9"),
}


def verify_lemma(lemma_id):
    """Check one constrained fat-graph enumeration.

    4.10 and 4.11 must yield exactly the three named graphs; for 4.12
    every enumerated graph must contain one of the three named graphs as
    an induced subgraph.
    """
    t0 = time.time()
    if lemma_id not in _LEMMA_BUNDLES:
        raise HoffmanGraphError(f"unknown lemma id {lemma_id!r}")
    names = _LEMMA_CONCLUSIONS[lemma_id]
    targets = {name: family_graph(name) for name in names}  # TranscriptionMissing if absent
    found = list(fat_hoffman_graphs(_LEMMA_BUNDLES[lemma_id]))
    counts = {"enumerated": len(found)}
    if lemma_id in ("4.10", "4.11"):
        got = {canonical_form(g) for g in found}
        want = {canonical_form(g) for g in targets.values()}
        ok = got == want
        details = {"expected": sorted(names)}
        bad = None
        if not ok:
            extra = [g for g in found if canonical_form(g) not in want]
            bad = extra[0].to_text() if extra else None
        return _report(f"lemma{lemma_id}", ok, counts, t0, details, bad)
    ok = True
    bad = None
    for g in found:
        if not any(find_embedding(t, g) for t in targets.values()):
            ok = False
            bad = g.to_text()
            break
    details = {"containment_targets": sorted(names)}
    return _report("lemma4.12", ok, counts, t0, details, bad)


# ---------------------------------------------------------------------------
# The composition table
# ---------------------------------------------------------------------------

#: rows: identifier -> (F name, c(K), |V_s(K)|)
TABLE1_ROWS = {
    "a": ("F1", 1, 5),
    "b": ("F1", 2, 4),
    "c": ("F3", 1, 5),
    "d": ("F4", 1, 4),
    "e": ("F6", 1, 4),
    "f": ("F7", 1, 2),
    "g": ("F9", 1, 4),
}

#: published member names per row
TABLE1_LABELS = {
    "a": ("G5,1", "G5,2", "G6,3", "G6,6", "G6,12", "G6,14", "G6,21", "G7,5"),
    "b": ("G5,1", "G5,2", "G6,3", "G6,21"),
    "c": ("G5,1", "G6,5", "G6,7", "G6,9", "G6,11", "G6,12", "G6,13",
          "G6,17", "G6,19", "G6,23", "G6,24", "G6,25", "G6,27", "G7,6"),
    "d": ("G5,1", "G6,5", "G6,8", "G6,15", "G6,18"),
    "e": ("G5,2", "G6,14", "G6,19", "G6,22", "G6,26", "G6,28", "G7,3"),
    "f": ("G6,1", "G6,6", "G6,16"),
    "g": ("G6,2", "G6,3", "G7,1", "G7,2"),
}

ALL_MEMBER_LABELS = (
    ("G5,1", "G5,2")
    + tuple(f"G6,{i}" for i in range(1, 29))
    + tuple(f"G7,{i}" for i in range(1, 8))
    + ("G8,1",)
)

#: rows whose published lists exactly equal the occurring members under
#: the stated row constraints; rows c and d occur with a few extra
#: members beyond their published lists (see verify_table1)
TABLE1_EXACT_ROWS = "abefg"


def _label_size(label):
    return int(label.split(",")[0][1:])


def table1_row_occurrence(row_id, catalog):
    """Enumerate one row; returns (occurrence forms, uncovered, n_graphs).

    occurrence = canonical forms of catalog members embedding into the
    slim part of at least one composed graph; uncovered = graph6 of the
    first composed graph containing no member at all (None when the
    row's guarantee holds).
    """
    fname, ck, vsk = TABLE1_ROWS[row_id]
    f_graph = family_graph(fname)
    members = catalog.members()
    occ = set()
    uncovered = None
    count = 0
    for g in enumerate_sums(f_graph, vsk, component_count_k=ck):
        count += 1
        gs = g.slim_subgraph()
        hit = {
            m.form for m in members
            if m.graph.n <= gs.n and find_embedding(m.graph, gs) is not None
        }
        if not hit and uncovered is None:
            uncovered = write_graph6(gs)
        occ |= hit
    return occ, uncovered, count


def _signature_census(occs, rows):
    """(member size, signature within ``rows``) -> count, over all forms
    occurring anywhere; plus per-form signatures."""
    form_sig = {}
    for occ in occs.values():
        for f in occ:
            form_sig.setdefault(f, "")
    for f in list(form_sig):
        form_sig[f] = "".join(r for r in rows if f in occs.get(r, ()))
    census = {}
    for f, s in form_sig.items():
        key = (f[0], s)
        census[key] = census.get(key, 0) + 1
    return census, form_sig


def _expected_census(rows):
    """Expected (size, signature) census from the published lists,
    counting every catalog member (absent labels sign as empty)."""
    census = {}
    for label in ALL_MEMBER_LABELS:
        sig = "".join(r for r in rows if label in TABLE1_LABELS[r])
        key = (_label_size(label), sig)
        census[key] = census.get(key, 0) + 1
    return census


def verify_table1(catalog):
    """Check the composition table.

    Three levels, strongest first:

    1. guarantee: in every row, every composed graph G = F (+) K contains
       at least one catalog member in its slim part;
    2. label structure: restricted to the five rows whose published lists
       are exact (a, b, e, f, g), the census of (member size, row
       signature) classes matches the published lists, and the two
       5-vertex names are pinned individually by the spectral dichotomy;
    3. full lists: rows c and d occur with extra members beyond their
       published lists; the extras are counted and reported.  The
       published lists themselves are covered (occurrence is never
       below the published census).

    The report confirms when levels 1 and 2 hold and the published lists
    are covered; the row c/d extras appear under details.
    """
    t0 = time.time()
    if catalog.n_max < 8:
        raise IncompleteCatalog("the composition table needs the catalog up to n = 8")
    occs = {}
    covered = {}
    ngraphs = {}
    first_uncovered = None
    for row_id in TABLE1_ROWS:
        occ, uncovered, cnt = table1_row_occurrence(row_id, catalog)
        occs[row_id] = occ
        covered[row_id] = uncovered is None
        ngraphs[row_id] = cnt
        if uncovered is not None and first_uncovered is None:
            first_uncovered = f"row {row_id}: {uncovered}"
    ok = all(covered.values())

    exact = TABLE1_EXACT_ROWS
    census5, form_sig5 = _signature_census(occs, exact)
    # members occurring in no exact row still count with empty signature
    all_forms = {m.form for m in catalog.members()}
    for f in all_forms:
        sig = "".join(r for r in exact if f in occs[r])
        key = (f[0], sig)
        if f not in form_sig5:
            census5[key] = census5.get(key, 0) + 1
    expected5 = _expected_census(exact)
    structure_ok = census5 == expected5

    # spectral pins: the below-threshold 5-vertex member carries the
    # signature of the second 5-vertex name, the other one the first
    below = [e for e in catalog.members() if e.verdict is Verdict.BELOW]
    pins_ok = len(below) == 1
    if pins_ok:
        g52_form = below[0].form
        sig_52 = "".join(r for r in exact if g52_form in occs[r])
        want_52 = "".join(r for r in exact if "G5,2" in TABLE1_LABELS[r])
        g51_form = next(
            e.form for e in catalog.members() if e.graph.n == 5 and e.form != g52_form
        )
        sig_51 = "".join(r for r in exact if g51_form in occs[r])
        want_51 = "".join(r for r in exact if "G5,1" in TABLE1_LABELS[r])
        pins_ok = sig_52 == want_52 and sig_51 == want_51

    censusF, _ = _signature_census(occs, "abcdefg")
    for f in all_forms:
        sig = "".join(r for r in "abcdefg" if f in occs[r])
        if all(f not in occs[r] for r in "abcdefg"):
            key = (f[0], sig)
            censusF[key] = censusF.get(key, 0) + 1
    expectedF = _expected_census("abcdefg")
    extra_memberships = {}
    list_covered = True
    for row_id in TABLE1_ROWS:
        published = len(TABLE1_LABELS[row_id])
        occurring = len(occs[row_id])
        extra_memberships[row_id] = occurring - published
        if occurring < published:
            list_covered = False

    status_ok = ok and structure_ok and pins_ok and list_covered
    counts = {
        "rows_checked": len(TABLE1_ROWS),
        "graphs_per_row": ngraphs,
        "occurring_per_row": {r: len(occs[r]) for r in sorted(occs)},
        "published_per_row": {r: len(TABLE1_LABELS[r]) for r in sorted(TABLE1_LABELS)},
    }
    details = {
        "guarantee_rows_ok": {r: covered[r] for r in sorted(covered)},
        "label_structure_exact_rows": exact,
        "label_structure_ok": structure_ok,
        "spectral_pins_ok": pins_ok,
        "extra_members_per_row": extra_memberships,
        "full_census_mismatches": sorted(
            f"size {k[0]} sig {k[1] or '-'}: occurring {censusF.get(k, 0)}, published {expectedF.get(k, 0)}"
            for k in set(censusF) | set(expectedF)
            if censusF.get(k, 0) != expectedF.get(k, 0)
        ),
    }
    return _report("table1", status_ok, counts, t0, details, first_uncovered)


def table1_label_groups(catalog):
    """The published-name correspondence as far as the table pins it.

    Returns a list of (sorted label tuple, sorted graph6 tuple) pairs:
    each published name in the first component maps to one of the member
    graphs in the second (a bijection within every group).  Singleton
    groups are exact identifications.
    """
    occs = {}
    for row_id in TABLE1_ROWS:
        occs[row_id], _, _ = table1_row_occurrence(row_id, catalog)
    exact = TABLE1_EXACT_ROWS
    below = {e.form for e in catalog.members() if e.verdict is Verdict.BELOW}
    groups = {}
    for label in ALL_MEMBER_LABELS:
        sig = "".join(r for r in exact if label in TABLE1_LABELS[r])
        spectral = "below" if label == "G5,2" else ("above" if label == "G5,1" else "")
        groups.setdefault((_label_size(label), sig, spectral), [[], []])[0].append(label)
    by_form = {}
    for e in catalog.members():
        sig = "".join(r for r in exact if e.form in occs[r])
        spectral = ""
        if e.graph.n == 5:
            spectral = "below" if e.form in below else "above"
        key = (e.graph.n, sig, spectral)
        if key in groups:
            groups[key][1].append(write_graph6(e.graph))
    return [
        (tuple(sorted(v[0])), tuple(sorted(v[1])))
        for k, v in sorted(groups.items())
    ]


def verify_claim(claim, catalog=None, n=None, sample_size=None, jobs=1):
    """Dispatch a named claim to its checker."""
    if claim == "eq2":
        return verify_eq2()
    if claim == "prop2.1":
        if catalog is None:
            raise HoffmanGraphError("prop2.1 needs a catalog")
        return verify_prop21(catalog)
    if claim == "table1":
        if catalog is None:
            raise HoffmanGraphError("table1 needs a catalog")
        return verify_table1(catalog)
    if claim in ("lemma4.10", "lemma4.11", "lemma4.12"):
        return verify_lemma(claim.removeprefix("lemma"))
    if claim == "uniqueness":
        return verify_cover_uniqueness(n or 8, sample_size=sample_size, jobs=jobs)
    if claim == "eigen":
        if catalog is None:
            raise HoffmanGraphError("eigen needs a catalog")
        return verify_eigen_claims(catalog)
    raise HoffmanGraphError(f"unknown claim {claim!r}")
