"""Precision of predicted relations and enrichments against gold annotations."""

from __future__ import annotations

import csv
import io
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable


class ItemKind(str, Enum):
    RELATION = "relation"
    CLASS_LINKING = "class_linking"
    PROPERTY_VALUE = "property_value"
    SAMEAS = "sameas"
    SUBJECT_VALUE = "subject_value"
    HYPERNYM = "hypernym"


ROW_LABELS = {
    ItemKind.RELATION: "Inferred relations",
    ItemKind.CLASS_LINKING: "New class linkings",
    ItemKind.PROPERTY_VALUE: "New properties",
    ItemKind.SAMEAS: "owl:sameAs",
    ItemKind.SUBJECT_VALUE: "dcterms:subject",
    ItemKind.HYPERNYM: "lingg:hypernym",
}

PROPERTY_TABLE = (ItemKind.CLASS_LINKING, ItemKind.PROPERTY_VALUE)
VALUE_TABLE = (ItemKind.SAMEAS, ItemKind.SUBJECT_VALUE, ItemKind.HYPERNYM)
GROUPS = ("std", "org")


class DuplicateAnnotation(ValueError):
    pass


class GoldFileError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Prediction:
    kind: ItemKind
    key1: str
    key2: str = ""
    group: str = ""

    @property
    def item(self) -> tuple[str, str, str]:
        return (self.kind.value, self.key1, self.key2)


@dataclass(frozen=True)
class GoldAnnotation:
    kind: ItemKind
    key1: str
    key2: str
    verdict: bool
    source: str = ""

    @property
    def item(self) -> tuple[str, str, str]:
        return (self.kind.value, self.key1, self.key2)


def _verdict(text: str) -> bool:
    v = text.strip().lower()
    if v in ("true", "1", "yes"):
        return True
    if v in ("false", "0", "no"):
        return False
    raise GoldFileError(f"verdict must be true or false, got {text!r}")


def read_gold(path: str | Path) -> list[GoldAnnotation]:
    """Per-item gold CSV with columns kind, key1, key2, verdict, source."""
    out = []
    with open(path, newline="", encoding="utf-8") as fh:
        for n, row in enumerate(csv.DictReader(fh), start=2):
            try:
                out.append(GoldAnnotation(ItemKind(row["kind"].strip()), row["key1"].strip(), (row["key2"] or "").strip(),
                                          _verdict(row["verdict"]), (row.get("source") or "").strip()))
            except (KeyError, ValueError) as exc:
                raise GoldFileError(f"{path}:{n}: {exc}") from None
    return out


@dataclass(frozen=True)
class PrecisionRow:
    total: int
    true_positive: int
    false_positive: int
    unannotated: int

    def __post_init__(self) -> None:
        if min(self.true_positive, self.false_positive, self.unannotated) < 0:
            raise ValueError("counts must be non-negative")
        if self.true_positive + self.false_positive + self.unannotated != self.total:
            raise ValueError(f"tp + fp + unannotated != total ({self})")

    @property
    def precision(self) -> float | None:
        judged = self.true_positive + self.false_positive
        return self.true_positive / judged if judged else None

    def __add__(self, other: PrecisionRow) -> PrecisionRow:
        return PrecisionRow(self.total + other.total, self.true_positive + other.true_positive,
                            self.false_positive + other.false_positive, self.unannotated + other.unannotated)


@dataclass
class PrecisionReport:
    rows: dict[tuple[ItemKind, str], PrecisionRow] = field(default_factory=dict)
    unannotated_items: list[Prediction] = field(default_factory=list)

    def get(self, kind: ItemKind, group: str = "") -> PrecisionRow | None:
        if (kind, group) in self.rows:
            return self.rows[(kind, group)]
        if group == "":
            parts = [r for (k, _), r in sorted(self.rows.items()) if k == kind]
            if parts:
                total = parts[0]
                for r in parts[1:]:
                    total = total + r
                return total
        return None

    def precision(self, kind: ItemKind, group: str = "") -> float | None:
        row = self.get(kind, group)
        return row.precision if row else None

    def overall(self) -> PrecisionRow | None:
        rows = list(self.rows.values())
        if not rows:
            return None
        total = rows[0]
        for r in rows[1:]:
            total = total + r
        return total

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "group", "total", "tp", "fp", "unannotated", "precision"])
        for (kind, group), r in sorted(self.rows.items()):
            p = r.precision
            w.writerow([kind.value, group, r.total, r.true_positive, r.false_positive, r.unannotated,
                        "" if p is None else f"{p:.4f}"])
        return buf.getvalue()


def compute_precision(predictions: Iterable[Prediction], gold: Iterable[GoldAnnotation]) -> PrecisionReport:
    """Join predictions to gold by item identity; unannotated ones are set aside."""
    verdicts: dict[tuple[str, str, str], bool] = {}
    for g in gold:
        if g.item in verdicts and verdicts[g.item] != g.verdict:
            raise DuplicateAnnotation(f"conflicting verdicts for {g.item}")
        verdicts[g.item] = g.verdict
    counts: dict[tuple[ItemKind, str], list[int]] = defaultdict(lambda: [0, 0, 0])
    unannotated = []
    for p in sorted(set(predictions)):
        c = counts[(p.kind, p.group)]
        v = verdicts.get(p.item)
        if v is None:
            c[2] += 1
            unannotated.append(p)
        else:
            c[0 if v else 1] += 1
    rows = {k: PrecisionRow(sum(c), c[0], c[1], c[2]) for k, c in sorted(counts.items())}
    return PrecisionReport(rows, unannotated)


def read_summary_gold(path: str | Path) -> PrecisionReport:
    """Aggregate gold CSV: criterion, group, total, tp, fp, source."""
    rows = {}
    with open(path, newline="", encoding="utf-8") as fh:
        for n, row in enumerate(csv.DictReader(fh), start=2):
            try:
                kind = ItemKind(row["criterion"].strip())
                group = (row["group"] or "").strip()
                total, tp, fp = int(row["total"]), int(row["tp"]), int(row["fp"])
                key = (kind, group)
                if key in rows:
                    raise DuplicateAnnotation(f"duplicate summary row for {kind.value}/{group}")
                rows[key] = PrecisionRow(total, tp, fp, total - tp - fp)
            except (KeyError, ValueError) as exc:
                if isinstance(exc, DuplicateAnnotation):
                    raise
                raise GoldFileError(f"{path}:{n}: {exc}") from None
    return PrecisionReport(dict(sorted(rows.items())))


def _fmt(p: float | None) -> str:
    return "-" if p is None else f"{p:.2f}"


def _table(report: PrecisionReport, kinds: tuple[ItemKind, ...]) -> list[str]:
    lines = ["Criteria Total_Std Total_Org Precision_Std Precision_Org"]
    for kind in kinds:
        rows = [report.rows.get((kind, g)) for g in GROUPS]
        if not any(rows):
            continue
        totals = [str(r.total) if r else "-" for r in rows]
        precisions = [_fmt(r.precision if r else None) for r in rows]
        lines.append(" ".join([ROW_LABELS[kind], *totals, *precisions]))
    return lines


def precision_tables(report: PrecisionReport) -> str:
    """Enrichment precision in two tables: properties of the templates, then property values.

    Ungrouped kinds (inferred relations) are listed after the tables.
    """
    out = _table(report, PROPERTY_TABLE) + [""] + _table(report, VALUE_TABLE)
    for (kind, group), r in sorted(report.rows.items()):
        if group == "":
            out.append("")
            out.append(f"{ROW_LABELS[kind]}: {r.true_positive}/{r.true_positive + r.false_positive} "
                       f"precision {_fmt(r.precision)} ({r.precision:.4f})" if r.precision is not None
                       else f"{ROW_LABELS[kind]}: no annotated items")
    return "\n".join(out) + "\n"
