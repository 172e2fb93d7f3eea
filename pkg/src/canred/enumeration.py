"""Exhaustive enumeration of numerical semigroups by genus, and the survey harness."""

import csv
import io
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .errors import BoundExceeded, GuardExceeded, TheoremViolation
from .idealization import check_idealization
from .invariants import CHECKS, check_report, compute_report
from .semigroup import NumericalSemigroup

GENUS_GUARD = 30
ALL_CHECKS = CHECKS + ("idealization",)

CSV_FIELDS = ("generators", "genus", "multiplicity", "type", "can_red",
              "e0", "e1", "gor", "ag", "ng")


def children(H):
    """Semigroups H \\ {g} for minimal generators g > frobenius, by g ascending."""
    out = []
    gens = H.generators
    for g in gens:
        if g <= H.frobenius:
            continue
        rest = [a for a in gens if a != g]
        new = rest + [g + a for a in rest] + [2 * g, 3 * g]
        out.append(NumericalSemigroup(new))
    return out


def _check_guard(genus_max):
    if not 0 <= genus_max <= GENUS_GUARD:
        raise GuardExceeded(f"genus_max must be in [0, {GENUS_GUARD}], got {genus_max}")


def genus_tree(genus_max, root=None):
    """Every numerical semigroup of genus <= genus_max, once each, depth first."""
    _check_guard(genus_max)
    stack = [root or NumericalSemigroup([1])]
    while stack:
        H = stack.pop()
        yield H
        if H.genus < genus_max:
            stack.extend(reversed(children(H)))


def semigroups_by_gaps(genus):
    """Brute force: all semigroups of the given genus as sets of gaps.

    Gaps of a genus-g semigroup lie in [1, 2g - 1]; keep every g-subset whose
    complement is closed under addition.  Independent of :func:`genus_tree`.
    """
    if genus == 0:
        return [()]
    top = 2 * genus - 1
    out = []
    for gaps in combinations(range(1, top + 1), genus):
        gapset = set(gaps)
        members = [z for z in range(1, top + 1) if z not in gapset]
        if all(a + b not in gapset for a in members for b in members if a <= b):
            out.append(gaps)
    return out


@dataclass
class SurveyReport:
    genus_max: int
    checks: tuple
    total: int = 0
    visits: dict = field(default_factory=dict)
    per_genus: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    can_red_histogram: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    rows: list = field(default_factory=list, repr=False)

    def to_dict(self):
        return {
            "genus_max": self.genus_max,
            "checks": list(self.checks),
            "total": self.total,
            "visits": {k: self.visits[k] for k in sorted(self.visits)},
            "per_genus": {str(k): self.per_genus[k] for k in sorted(self.per_genus)},
            "counts": {k: self.counts[k] for k in sorted(self.counts)},
            "can_red_histogram": {str(k): self.can_red_histogram[k]
                                  for k in sorted(self.can_red_histogram)},
            "violations": [v.to_dict() for v in self.violations],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, delimiter=";", lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for row in self.rows:
            w.writerow(row)
        return buf.getvalue()


def _classify_one(H, checks):
    """(csv row or None, tally keys, violations) for one semigroup."""
    violations = []
    try:
        rep = compute_report(H)
    except (TheoremViolation, BoundExceeded, AssertionError) as exc:
        if isinstance(exc, TheoremViolation):
            violations.append(exc)
        else:
            violations.append(TheoremViolation("bound", H.generators, str(exc), None,
                                               type(exc).__name__))
        return None, violations
    base = [c for c in checks if c != "idealization"]
    violations.extend(check_report(rep, base))
    if "idealization" in checks:
        violations.extend(check_idealization(H))
    row = (",".join(map(str, H.generators)), H.genus, H.multiplicity, rep.cm_type,
           rep.can_red, rep.e0, rep.e1, int(rep.gorenstein),
           int(rep.almost_gorenstein), int(rep.nearly_gorenstein))
    return (rep, row), violations


def _survey_nodes(nodes, checks):
    tallies = Counter()
    per_genus = Counter()
    hist = Counter()
    rows = []
    violations = []
    for H in nodes:
        per_genus[H.genus] += 1
        result, viol = _classify_one(H, checks)
        violations.extend(viol)
        if result is None:
            tallies["failed"] += 1
            continue
        rep, row = result
        rows.append(row)
        hist[rep.can_red] += 1
        if rep.gorenstein:
            tallies["gorenstein"] += 1
        elif rep.almost_gorenstein:
            tallies["ag_not_gorenstein"] += 1
        elif rep.nearly_gorenstein:
            tallies["ng_not_ag"] += 1
        else:
            tallies["neither"] += 1
    return tallies, per_genus, hist, rows, violations


def _subtree_task(args):
    generators, genus_max, checks = args
    root = NumericalSemigroup(generators)
    return _survey_nodes(genus_tree(genus_max, root), checks)


def _split_units(genus_max, split):
    """Nodes above the split genus, and the roots of the subtrees below it."""
    top, roots = [], []
    for H in genus_tree(min(genus_max, split)):
        if H.genus < split or genus_max == split:
            top.append(H)
        else:
            roots.append(H)
    return top, roots


def survey(genus_max, checks=ALL_CHECKS, jobs=1):
    """Run the selected checks on every semigroup of genus <= genus_max."""
    _check_guard(genus_max)
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    checks = tuple(c for c in ALL_CHECKS if c in set(checks))

    parts = []
    if jobs <= 1 or genus_max < 6:
        parts.append(_survey_nodes(genus_tree(genus_max), checks))
    else:
        top, roots = _split_units(genus_max, 5)
        parts.append(_survey_nodes(top, checks))
        tasks = [(H.generators, genus_max, checks) for H in roots]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts.extend(ex.map(_subtree_task, tasks))

    report = SurveyReport(genus_max, checks)
    tallies, per_genus, hist = Counter(), Counter(), Counter()
    for t, pg, h, rows, viol in parts:
        tallies += t
        per_genus += pg
        hist += h
        report.rows.extend(rows)
        report.violations.extend(viol)
    report.total = sum(per_genus.values())
    report.per_genus = dict(per_genus)
    report.can_red_histogram = dict(hist)
    report.counts = {k: tallies.get(k, 0) for k in
                     ("gorenstein", "ag_not_gorenstein", "ng_not_ag", "neither", "failed")}
    report.visits = {c: report.total for c in checks}
    report.rows.sort(key=lambda r: (r[1], tuple(map(int, r[0].split(",")))))
    report.violations.sort(key=lambda v: (len(v.generators), v.generators, v.check, v.detail))
    return report
