"""End-to-end batch run: populate, integrate, reason, measure, interlink, check, evaluate."""

from __future__ import annotations

import hashlib
import json
import logging
import platform
import time
from dataclasses import dataclass, field
from importlib import metadata
from pathlib import Path

import requests

from .analytics import (
    MetricDelta, MetricsReport, SimpleGraph, compare_reports, deltas_to_csv, metrics_report,
    project_relation_graph, report_json, to_dot, to_edge_list,
)
from .config import ConfigError, PipelineConfig
from .conflicts import ConflictReport, ConflictSummary, LayerAlignment, detect_all, informational_reports
from .evaluation import (
    GoldAnnotation, ItemKind, Prediction, PrecisionReport, compute_precision, precision_tables, read_gold,
    read_summary_gold,
)
from .interlink import InterlinkReport, SparqlError, interlink
from .model import fuse_all, find_equivalents, load_organizations, load_standards, read_alias_table
from .rdf import (
    DBC, DBO, DBP, DBR, DCTERMS, DEFAULT_PREFIXES, GOLD, OWL, RDF_TYPE, STO, YAGO, Graph, Iri, RdfSyntaxError,
    UnresolvedPrefix, parse_turtle, serialize_turtle,
)
from .reasoner import InferenceResult, RelationSummary, apply_closure, load_rules, relation_pairs, rules_from_ontology
from .store import MoleculeStore, compute_mts, mts_to_csv

log = logging.getLogger(__name__)

EXIT_OK, EXIT_INPUT, EXIT_ENDPOINT, EXIT_INVARIANT = 0, 1, 2, 3

OUTPUT_PREFIXES = dict(DEFAULT_PREFIXES, dbo=str(DBO), dbr=str(DBR), dbc=str(DBC), dbp=str(DBP), yago=str(YAGO),
                       gold=str(GOLD))
MT_CLASS = {"std": STO.Standard, "org": STO.StandardOrganization}
VALUE_KINDS = {OWL.sameAs: ItemKind.SAMEAS, DCTERMS.subject: ItemKind.SUBJECT_VALUE, GOLD.hypernym: ItemKind.HYPERNYM}
UNDECLARED_SOURCE = "property not declared as a property by the remote knowledge graph"


class PipelineError(Exception):
    def __init__(self, stage: str, message: str, exit_code: int):
        super().__init__(f"{stage}: {message}")
        self.stage = stage
        self.exit_code = exit_code


class InvariantViolation(AssertionError):
    pass


@dataclass
class PipelineResult:
    kg: Graph
    store: MoleculeStore
    merges: list[tuple[Iri, Iri]] = field(default_factory=list)
    inference: InferenceResult | None = None
    relations: RelationSummary | None = None
    before: MetricsReport | None = None
    after: MetricsReport | None = None
    before_graph: SimpleGraph | None = None
    after_graph: SimpleGraph | None = None
    deltas: list[MetricDelta] = field(default_factory=list)
    interlink: InterlinkReport | None = None
    conflicts: ConflictSummary | None = None
    predictions: list[Prediction] = field(default_factory=list)
    precision: PrecisionReport | None = None
    summary_precision: PrecisionReport | None = None
    outputs: dict[str, str] = field(default_factory=dict)
    stages: list[str] = field(default_factory=list)


def sha256_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def file_digest(path: Path) -> str:
    return sha256_bytes(Path(path).read_bytes())


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise InvariantViolation(message)


# -- stages ---------------------------------------------------------------------

def populate(cfg: PipelineConfig) -> tuple[Graph, Graph]:
    """Parse every input document into one KG; the ontology stays separate."""
    kg = Graph(prefixes=dict(OUTPUT_PREFIXES))
    for path in cfg.inputs:
        kg.update(_parse(path))
    ontology = _parse(cfg.ontology) if cfg.ontology else Graph()
    return kg, ontology


def _parse(path: Path) -> Graph:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return parse_turtle(text)
    except RdfSyntaxError as exc:
        raise exc.with_source(str(path)) from None


def integrate(kg: Graph, cfg: PipelineConfig) -> tuple[MoleculeStore, list[tuple[Iri, Iri]]]:
    store = MoleculeStore.from_graph(kg)
    aliases = read_alias_table(cfg.aliases) if cfg.aliases else []
    pairs = find_equivalents(store, aliases)
    for a, b in pairs.unknown_rows:
        log.warning("alias row names no local entity: %s / %s", a, b)
    merges = fuse_all(store, pairs)
    log.info("integrate: %d merges", len(merges))
    return store, merges


def reason(fused: Graph, ontology: Graph, cfg: PipelineConfig) -> InferenceResult:
    overrides = load_rules(cfg.rules) if cfg.rules else []
    rules = rules_from_ontology(ontology, overrides)
    result = apply_closure(fused, rules)
    _check(result.explicit <= result.closure.triple_set, "closure lost explicit triples")
    _check(not (result.inferred & result.explicit), "inferred and explicit overlap")
    return result


def measure(fused: Graph, closure: Graph, cfg: PipelineConfig):
    before_g = project_relation_graph(fused, cfg.predicates, STO.Standard)
    after_g = project_relation_graph(closure, cfg.predicates, STO.Standard)
    before, after = metrics_report(before_g), metrics_report(after_g)
    for rep in (before, after):
        for name in ("density", "transitivity", "avg_clustering", "degree_centralization"):
            v = rep.scalars()[name]
            _check(0.0 <= v <= 1.0 + 1e-12, f"{name} out of range: {v}")
    _check(set(before_g.edges) <= set(after_g.edges), "closure removed relation edges")
    return before_g, after_g, before, after


def predictions_for(result: PipelineResult, records_kind: dict[Iri, str]) -> tuple[list[Prediction], list[GoldAnnotation]]:
    """Items to validate, plus automatic false verdicts for undeclared properties."""
    preds: list[Prediction] = []
    auto: list[GoldAnnotation] = []
    if result.relations is not None:
        for pair in result.relations.inferred_pairs:
            a, b = sorted(pair)
            preds.append(Prediction(ItemKind.RELATION, a.value, b.value))
    report = result.interlink
    if report is None:
        return sorted(set(preds)), auto
    for stats in report.stats:
        group = records_kind.get(stats.local, "std")
        mt = MT_CLASS[group].value
        for c in stats.new_classes:
            preds.append(Prediction(ItemKind.CLASS_LINKING, mt, c.value, group))
        for p in stats.new_properties:
            preds.append(Prediction(ItemKind.PROPERTY_VALUE, mt, p.value, group))
        for p in stats.false_positive_properties:
            preds.append(Prediction(ItemKind.PROPERTY_VALUE, mt, p.value, group))
            auto.append(GoldAnnotation(ItemKind.PROPERTY_VALUE, mt, p.value, False, UNDECLARED_SOURCE))
        remote = result.store.molecules.get(stats.remote)
        if remote is None:
            continue
        for t in remote.triples:
            kind = VALUE_KINDS.get(t.predicate)
            if kind is not None and isinstance(t.object, Iri):
                preds.append(Prediction(kind, stats.local.value, t.object.value, group))
    return sorted(set(preds)), sorted(set(auto), key=lambda g: g.item)


# -- outputs --------------------------------------------------------------------

def _interlink_json(report: InterlinkReport, kinds: dict[Iri, str]) -> str:
    groups = {g: report.totals({i for i, k in kinds.items() if k == g}) for g in ("std", "org")}
    doc = {
        "totals": report.totals(),
        "totals_by_group": groups,
        "candidates": [{"local": c.local.value, "remote": c.remote.value, "method": c.method.name, "probe": c.probe}
                       for c in report.candidates],
        "unmatched": [i.value for i in report.unmatched],
        "flagged": [[t.subject.value, t.predicate.value, t.object.value] for t in report.flagged],
        "filtered_predicates": {p.value: n for p, n in report.filtered_predicates.items()},
        "truncated": [i.value for i in report.truncated],
        "empty": [i.value for i in report.empty],
        "enrichment": [{
            "local": s.local.value, "remote": s.remote.value, "new_classes": [c.value for c in s.new_classes],
            "new_properties": [p.value for p in s.new_properties],
            "false_positive_properties": [p.value for p in s.false_positive_properties],
            "added_triples": s.added_triples,
        } for s in report.stats],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _relations_json(summary: RelationSummary, result: InferenceResult) -> str:
    doc = dict(summary.as_dict())
    doc.update({"explicit_triples": result.stats.explicit_count, "inferred_triples": result.stats.inferred_count,
                "iterations": result.stats.iterations})
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _unannotated_csv(items: list[Prediction]) -> str:
    lines = ["kind,group,key1,key2"]
    lines += [f"{p.kind.value},{p.group},{p.key1},{p.key2}" for p in items]
    return "\n".join(lines) + "\n"


def render_outputs(result: PipelineResult) -> dict[str, str]:
    out: dict[str, str] = {}
    pfx = OUTPUT_PREFIXES
    out["fused.ttl"] = serialize_turtle(_fused_graph(result), pfx)
    if result.inference is not None:
        out["closure.ttl"] = serialize_turtle(result.inference.closure, pfx)
        out["inferred.ttl"] = serialize_turtle(result.inference.inferred_graph(), pfx)
        out["relations.json"] = _relations_json(result.relations, result.inference)
    if result.before is not None:
        out["metrics_before.csv"] = result.before.to_csv()
        out["metrics_after.csv"] = result.after.to_csv()
        out["metrics_delta.csv"] = deltas_to_csv(result.deltas)
        out["centrality_before.csv"] = result.before.centrality_csv(pfx)
        out["centrality_after.csv"] = result.after.centrality_csv(pfx)
        out["metrics.json"] = report_json(result.before, result.after, pfx)
        out["relations_before.dot"] = to_dot(result.before_graph, "explicit", pfx)
        out["relations_after.dot"] = to_dot(result.after_graph, "closure", pfx)
        out["edges_before.tsv"] = to_edge_list(result.before_graph, pfx)
        out["edges_after.tsv"] = to_edge_list(result.after_graph, pfx)
    out["mts.csv"] = mts_to_csv(compute_mts(result.store.to_graph()), pfx)
    if result.interlink is not None:
        kinds = _kinds(result.store)
        out["interlink.json"] = _interlink_json(result.interlink, kinds)
        out["enriched.ttl"] = serialize_turtle(result.store.to_graph(), pfx)
    if result.conflicts is not None:
        out["conflicts.json"] = result.conflicts.to_json()
        out["conflicts.txt"] = result.conflicts.to_text()
    if result.precision is not None:
        out["precision.csv"] = result.precision.to_csv()
        out["precision.txt"] = precision_tables(result.precision)
        out["unannotated.csv"] = _unannotated_csv(result.precision.unannotated_items)
    if result.summary_precision is not None:
        out["precision_summary.csv"] = result.summary_precision.to_csv()
        out["precision_summary.txt"] = precision_tables(result.summary_precision)
    return out


def _partial_outputs(result: PipelineResult | None) -> dict[str, str]:
    if result is None:
        return {}
    try:
        return render_outputs(result)
    except Exception:  # half-built result; the manifest still records the failure
        log.exception("could not render partial outputs")
        return {}


def _fused_graph(result: PipelineResult) -> Graph:
    if result.inference is not None:
        return Graph(result.inference.explicit)
    return result.store.to_graph()


def _kinds(store: MoleculeStore) -> dict[Iri, str]:
    g = store.to_graph()
    kinds = {s: "org" for s in g.subjects(RDF_TYPE, STO.StandardOrganization) if isinstance(s, Iri)}
    kinds.update({s: "std" for s in g.subjects(RDF_TYPE, STO.Standard) if isinstance(s, Iri)})
    return kinds


def _version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "unknown"


def build_manifest(cfg: PipelineConfig, result: PipelineResult | None, outputs: dict[str, str],
                   status: str, error: str | None = None) -> dict:
    inputs = {}
    for p in list(cfg.inputs) + [cfg.ontology, cfg.aliases, cfg.synonyms, cfg.alignment, cfg.rules, cfg.gold,
                                 cfg.gold_summary]:
        if p is not None and Path(p).exists():
            inputs[str(p)] = file_digest(p)
    return {
        "tool": "stoforge",
        "version": _version(),
        "python": platform.python_version(),
        "dependencies": {"requests": requests.__version__},
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "status": status,
        "error": error,
        "stages": result.stages if result else [],
        "parameters": cfg.describe(),
        "inputs": inputs,
        "outputs": {name: sha256_bytes(text.encode("utf-8")) for name, text in sorted(outputs.items())},
    }


def write_outputs(out_dir: Path, outputs: dict[str, str], manifest: dict) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, text in sorted(outputs.items()):
        (out_dir / name).write_text(text, encoding="utf-8")
    (out_dir / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")


# -- driver ---------------------------------------------------------------------

def _stage_error(stage: str, exc: Exception) -> PipelineError:
    if isinstance(exc, InvariantViolation):
        return PipelineError(stage, str(exc), EXIT_INVARIANT)
    if isinstance(exc, SparqlError):
        return PipelineError(stage, f"{type(exc).__name__}: {exc}", EXIT_ENDPOINT)
    if isinstance(exc, (OSError, ValueError, KeyError, RdfSyntaxError, UnresolvedPrefix, ConfigError)):
        return PipelineError(stage, f"{type(exc).__name__}: {exc}", EXIT_INPUT)
    return PipelineError(stage, f"{type(exc).__name__}: {exc}", EXIT_INVARIANT)


def run_pipeline(cfg: PipelineConfig, session: requests.Session | None = None, write: bool = True,
                 interlink_enabled: bool | None = None) -> PipelineResult:
    """Run all stages in order. On failure a partial manifest is written and PipelineError raised."""
    missing = cfg.missing_paths()
    if missing:
        raise PipelineError("validate", "missing input: " + ", ".join(map(str, missing)), EXIT_INPUT)
    result: PipelineResult | None = None
    stage = "populate"
    try:
        kg, ontology = populate(cfg)
        result = PipelineResult(kg=kg, store=MoleculeStore())
        result.stages.append(stage)

        stage = "integrate"
        result.store, result.merges = integrate(kg, cfg)
        fused = result.store.to_graph()
        result.stages.append(stage)

        stage = "reason"
        result.inference = reason(fused, ontology, cfg)
        result.relations = relation_pairs(result.inference, cfg.predicates, STO.Standard)
        result.stages.append(stage)

        stage = "metrics"
        result.before_graph, result.after_graph, result.before, result.after = measure(
            fused, result.inference.closure, cfg)
        result.deltas = compare_reports(result.before, result.after)
        result.stages.append(stage)

        stage = "interlink"
        enabled = cfg.interlink if interlink_enabled is None else interlink_enabled
        if enabled and cfg.endpoint is not None:
            records = load_standards(fused, result.store) + load_organizations(fused, result.store)
            aliases = read_alias_table(cfg.aliases) if cfg.aliases else []
            result.interlink = interlink(result.store, records, cfg.endpoint, aliases=aliases, session=session)
            result.stages.append(stage)

        stage = "conflicts"
        alignment = LayerAlignment.from_csv(cfg.alignment) if cfg.alignment else LayerAlignment()
        names = (read_alias_table(cfg.aliases) if cfg.aliases else []) + \
                (read_alias_table(cfg.synonyms) if cfg.synonyms else [])
        # naming and classification conflicts are reported on the input KG, before integration
        # resolves them; descriptive findings on the final (possibly enriched) graph
        result.conflicts = detect_all(kg, alignment, names, informational=False)
        if cfg.informational:
            extra = informational_reports(result.store.to_graph())
            result.conflicts = ConflictSummary(sorted(result.conflicts.reports + extra, key=ConflictReport.sort_key))
        result.stages.append(stage)

        stage = "eval"
        result.predictions, auto_gold = predictions_for(result, _kinds(result.store))
        gold = (read_gold(cfg.gold) if cfg.gold else []) + auto_gold
        result.precision = compute_precision(result.predictions, gold)
        if cfg.gold_summary:
            result.summary_precision = read_summary_gold(cfg.gold_summary)
        result.stages.append(stage)

        stage = "write"
        result.outputs = render_outputs(result)
    except PipelineError:
        raise
    except Exception as exc:
        err = _stage_error(stage, exc)
        if write and cfg.out_dir is not None:
            partial = _partial_outputs(result)
            write_outputs(cfg.out_dir, partial, build_manifest(cfg, result, partial, "failed", str(err)))
        raise err from exc
    if write and cfg.out_dir is not None:
        write_outputs(cfg.out_dir, result.outputs, build_manifest(cfg, result, result.outputs, "ok"))
    return result


__all__ = [
    "EXIT_ENDPOINT", "EXIT_INPUT", "EXIT_INVARIANT", "EXIT_OK", "InvariantViolation", "PipelineConfig",
    "PipelineError", "PipelineResult", "build_manifest", "integrate", "measure", "populate", "predictions_for",
    "reason", "render_outputs", "run_pipeline",
]
