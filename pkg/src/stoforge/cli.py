"""Batch command line: ``stoforge <command> [flags]``.

Without ``--config`` or ``--input`` the bundled snapshot configuration is used,
replaying DBpedia answers from the recorded cache.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .config import BUNDLED_CONFIG, ConfigError, PipelineConfig, load_config
from .evaluation import precision_tables
from .pipeline import (
    EXIT_INPUT, EXIT_OK, PipelineError, PipelineResult, build_manifest, populate, run_pipeline, write_outputs,
)
from .rdf import RDF_TYPE, STO, RdfSyntaxError, UnresolvedPrefix, serialize_ntriples
from .store import compute_mts

log = logging.getLogger("stoforge")

# files each subcommand writes; the pipeline writes everything
COMMAND_OUTPUTS = {
    "reason": ("closure.ttl", "inferred.ttl", "relations.json"),
    "metrics": ("metrics_before.csv", "metrics_after.csv", "metrics_delta.csv", "centrality_before.csv",
                "centrality_after.csv", "metrics.json"),
    "interlink": ("interlink.json", "enriched.ttl"),
    "conflicts": ("conflicts.json", "conflicts.txt"),
    "eval": ("precision.csv", "precision.txt", "unannotated.csv", "precision_summary.csv", "precision_summary.txt"),
    "export-dot": ("relations_before.dot", "relations_after.dot", "edges_before.tsv", "edges_after.tsv"),
    "mt": ("mts.csv",),
}
NEEDS_ENDPOINT = {"pipeline", "interlink", "eval"}


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", type=Path, help="flat key = value config file")
    p.add_argument("--input", action="append", type=Path, help="KG Turtle file (repeatable)")
    p.add_argument("--ontology", type=Path, help="ontology Turtle file declaring property characteristics")
    p.add_argument("--out", type=Path, help="output directory")
    p.add_argument("--offline", action="store_true", default=None, help="answer SPARQL only from the cache")
    p.add_argument("--endpoint", help="SPARQL endpoint URL")
    p.add_argument("--cache-dir", type=Path, help="SPARQL response cache directory")
    p.add_argument("--rules", type=Path, help="rule override file")
    p.add_argument("--alias", type=Path, help="alias CSV (name_a,name_b)")
    p.add_argument("--alignment", type=Path, help="framework layer alignment CSV")
    p.add_argument("--gold", type=Path, help="per-item gold CSV")
    p.add_argument("--predicates", help="comma separated relation predicate IRIs or qnames")
    p.add_argument("-v", "--verbose", action="count", default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="stoforge", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    helps = {
        "validate": "parse all inputs and print counts",
        "pipeline": "run every stage and write all reports",
        "reason": "closure of the integrated KG",
        "metrics": "network metrics before and after closure",
        "interlink": "link standards and organizations to DBpedia and enrich them",
        "conflicts": "semantic interoperability conflict report",
        "eval": "precision of predictions against gold annotations",
        "export-dot": "relation graphs as DOT and edge lists",
        "mt": "RDF molecule templates as CSV",
    }
    for name, text in helps.items():
        _common(sub.add_parser(name, help=text))
    return ap


def config_from_args(args: argparse.Namespace) -> PipelineConfig:
    path = args.config
    if path is None and not args.input:
        path = BUNDLED_CONFIG
    overrides = {
        "input": ",".join(str(p) for p in args.input) if args.input else None,
        "ontology": _s(args.ontology), "out": _s(args.out), "endpoint": args.endpoint,
        "cache_dir": _s(args.cache_dir), "rules": _s(args.rules), "alias": _s(args.alias),
        "alignment": _s(args.alignment), "gold": _s(args.gold), "predicates": args.predicates,
        "offline": "true" if args.offline else None,
    }
    return load_config(path, overrides=overrides)


def _s(p: Path | None) -> str | None:
    return None if p is None else str(p)


def cmd_validate(cfg: PipelineConfig) -> int:
    missing = cfg.missing_paths()
    if missing:
        print("missing input: " + ", ".join(map(str, missing)), file=sys.stderr)
        return EXIT_INPUT
    kg, ontology = populate(cfg)
    for path in cfg.inputs:
        print(f"{path}: ok")
    print(f"triples: {len(kg)}")
    print(f"ntriples lines: {serialize_ntriples(kg).count(chr(10))}")
    print(f"ontology triples: {len(ontology)}")
    print(f"standards: {len(kg.subjects(RDF_TYPE, STO.Standard))}")
    print(f"organizations: {len(kg.subjects(RDF_TYPE, STO.StandardOrganization))}")
    mts = compute_mts(kg)
    print(f"molecule templates: {len(mts)} classes, {mts.link_count()} links")
    return EXIT_OK


def _summary(result: PipelineResult) -> list[str]:
    lines = []
    if result.relations is not None:
        r = result.relations.as_dict()
        lines.append(f"relations: {r['explicit_pairs']} explicit, {r['inferred_pairs']} inferred, "
                     f"{r['closure_pairs']} after closure")
    if result.before is not None:
        b, a = result.before.scalars(), result.after.scalars()
        for k in b:
            lines.append(f"{k}: {b[k]:.4g} -> {a[k]:.4g}")
    if result.interlink is not None:
        t = result.interlink.totals()
        lines.append(f"interlink: {t['linked']} linked, {len(result.interlink.unmatched)} unmatched, "
                     f"{len(result.interlink.flagged)} flagged types")
    if result.conflicts is not None:
        lines.append("conflicts: " + ", ".join(f"{k}={v}" for k, v in result.conflicts.counts().items()))
    return lines


def run_command(command: str, cfg: PipelineConfig) -> int:
    if command == "validate":
        return cmd_validate(cfg)
    write_all = command == "pipeline"
    result = run_pipeline(cfg, write=write_all, interlink_enabled=command in NEEDS_ENDPOINT and cfg.interlink)
    if write_all:
        for line in _summary(result):
            print(line)
        if cfg.out_dir is not None:
            print(f"wrote {len(result.outputs) + 1} files to {cfg.out_dir}")
        return EXIT_OK
    selected = {k: v for k, v in result.outputs.items() if k in COMMAND_OUTPUTS[command]}
    if cfg.out_dir is not None:
        write_outputs(cfg.out_dir, selected, build_manifest(cfg, result, selected, "ok"))
        print(f"wrote {len(selected) + 1} files to {cfg.out_dir}")
    else:
        sys.stdout.write(_stdout_view(command, result, selected))
    return EXIT_OK


def _stdout_view(command: str, result: PipelineResult, selected: dict[str, str]) -> str:
    if command == "conflicts":
        return selected.get("conflicts.txt", "")
    if command == "eval":
        text = precision_tables(result.precision) if result.precision else ""
        if result.summary_precision is not None:
            text += "\n" + precision_tables(result.summary_precision)
        return text
    if command == "mt":
        return selected["mts.csv"]
    if command == "export-dot":
        return selected.get("relations_after.dot", "")
    if command == "metrics":
        return selected.get("metrics_delta.csv", "")
    return "\n".join(_summary(result)) + "\n"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(args)
        return run_command(args.command, cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (RdfSyntaxError, UnresolvedPrefix, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PipelineError as exc:
        print(f"error in {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
