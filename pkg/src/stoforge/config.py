"""Flat ``key = value`` run configuration.

Precedence, lowest first: built-in defaults, the config file, ``STOFORGE_*``
environment variables, explicit overrides (command-line flags). Relative
paths in a config file resolve against the file's directory.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping

from .interlink import EndpointConfig
from .model import RELATION_PREDICATES
from .rdf import DEFAULT_PREFIXES, Iri, expand_qname

ENV_PREFIX = "STOFORGE_"
DATA_DIR = Path(__file__).resolve().parent / "data"
BUNDLED_CONFIG = DATA_DIR / "stoforge.conf"

PATH_KEYS = ("input", "ontology", "alias", "synonyms", "alignment", "rules", "gold", "gold_summary", "out", "cache_dir")
LIST_KEYS = ("input", "predicates")
KNOWN_KEYS = PATH_KEYS + ("predicates", "endpoint", "offline", "timeout", "max_parallel", "min_interval_ms",
                          "max_triples", "interlink", "informational")


class ConfigError(ValueError):
    pass


def parse_config_text(text: str, origin: str = "<config>") -> dict[str, str]:
    values: dict[str, str] = {}
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip().lower()
        if not sep or not key:
            raise ConfigError(f"{origin}:{n}: expected key = value")
        if key not in KNOWN_KEYS:
            raise ConfigError(f"{origin}:{n}: unknown key {key!r}")
        values[key] = value.strip()
    return values


def _split(value: str) -> list[str]:
    return [v.strip() for v in value.split(",") if v.strip()]


def _bool(key: str, value: str) -> bool:
    v = value.strip().lower()
    if v in ("1", "true", "yes", "on"):
        return True
    if v in ("0", "false", "no", "off", ""):
        return False
    raise ConfigError(f"{key}: expected a boolean, got {value!r}")


def _resolve(base: Path | None, value: str) -> Path:
    p = Path(value).expanduser()
    return p if p.is_absolute() or base is None else base / p


@dataclass
class PipelineConfig:
    inputs: list[Path] = field(default_factory=list)
    ontology: Path | None = None
    aliases: Path | None = None
    synonyms: Path | None = None
    alignment: Path | None = None
    rules: Path | None = None
    gold: Path | None = None
    gold_summary: Path | None = None
    out_dir: Path | None = None
    predicates: tuple[Iri, ...] = RELATION_PREDICATES
    endpoint: EndpointConfig | None = None
    interlink: bool = True
    informational: bool = True

    @classmethod
    def from_values(cls, values: Mapping[str, str], base: Path | None = None) -> PipelineConfig:
        """Build from already merged string values (file, environment, flags)."""
        def path(key: str) -> Path | None:
            v = values.get(key)
            return _resolve(base, v) if v else None

        try:
            inputs = [_resolve(base, v) for v in _split(values.get("input", ""))]
            predicates = tuple(_predicate(p) for p in _split(values.get("predicates", ""))) or RELATION_PREDICATES
            endpoint = None
            if values.get("endpoint"):
                endpoint = EndpointConfig(
                    url=values["endpoint"],
                    timeout=float(values.get("timeout") or 30.0),
                    max_parallel=int(values.get("max_parallel") or 4),
                    min_interval=int(float(values.get("min_interval_ms") or 1000)),
                    cache_dir=str(path("cache_dir")) if values.get("cache_dir") else None,
                    offline=_bool("offline", values.get("offline", "")),
                    max_triples=int(values.get("max_triples") or 2000),
                )
            return cls(
                inputs=inputs, ontology=path("ontology"), aliases=path("alias"), synonyms=path("synonyms"),
                alignment=path("alignment"), rules=path("rules"), gold=path("gold"),
                gold_summary=path("gold_summary"), out_dir=path("out"), predicates=predicates, endpoint=endpoint,
                interlink=_bool("interlink", values.get("interlink", "true")),
                informational=_bool("informational", values.get("informational", "true")),
            )
        except ConfigError:
            raise
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    @classmethod
    def bundled(cls, out_dir: str | Path | None = None, **overrides) -> PipelineConfig:
        """The configuration shipped with the package: pinned snapshot and offline cache."""
        cfg = load_config(BUNDLED_CONFIG, env={})
        return replace(cfg, out_dir=Path(out_dir) if out_dir else None, **overrides)

    def missing_paths(self) -> list[Path]:
        paths = list(self.inputs) + [p for p in (self.ontology, self.aliases, self.synonyms, self.alignment,
                                                 self.rules, self.gold, self.gold_summary) if p is not None]
        return [p for p in paths if not p.exists()]

    def describe(self) -> dict:
        ep = self.endpoint
        return {
            "inputs": [str(p) for p in self.inputs],
            "ontology": str(self.ontology) if self.ontology else None,
            "aliases": str(self.aliases) if self.aliases else None,
            "synonyms": str(self.synonyms) if self.synonyms else None,
            "alignment": str(self.alignment) if self.alignment else None,
            "rules": str(self.rules) if self.rules else None,
            "gold": str(self.gold) if self.gold else None,
            "gold_summary": str(self.gold_summary) if self.gold_summary else None,
            "predicates": [p.value for p in self.predicates],
            "endpoint": None if ep is None else {
                "url": ep.url, "offline": ep.offline, "cache_dir": ep.cache_dir, "timeout": ep.timeout,
                "max_parallel": ep.max_parallel, "min_interval_ms": ep.min_interval, "max_triples": ep.max_triples,
            },
            "interlink": self.interlink,
        }


def _predicate(text: str) -> Iri:
    if text.startswith("<") and text.endswith(">"):
        return Iri(text[1:-1])
    if "://" in text:
        return Iri(text)
    return expand_qname(DEFAULT_PREFIXES, text)


def env_values(env: Mapping[str, str] | None = None) -> dict[str, str]:
    env = os.environ if env is None else env
    return {k[len(ENV_PREFIX):].lower(): v for k, v in env.items()
            if k.startswith(ENV_PREFIX) and k[len(ENV_PREFIX):].lower() in KNOWN_KEYS}


def load_config(path: str | Path | None = None, env: Mapping[str, str] | None = None,
                overrides: Mapping[str, str | None] | None = None) -> PipelineConfig:
    """Merge defaults, ``path``, environment and ``overrides`` (None values are skipped).

    Override and environment paths resolve against the working directory.
    """
    file_values: dict[str, str] = {}
    base = None
    if path is not None:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
        file_values = parse_config_text(text, str(path))
        base = path.resolve().parent
        file_values = {k: _absolutize(k, v, base) for k, v in file_values.items()}
    values = dict(file_values)
    values.update(env_values(env))
    for k, v in (overrides or {}).items():
        if v is not None:
            values[k] = v
    return PipelineConfig.from_values(values, base=Path.cwd())


def _absolutize(key: str, value: str, base: Path) -> str:
    if key not in PATH_KEYS or not value:
        return value
    if key in LIST_KEYS:
        return ",".join(str(_resolve(base, v)) for v in _split(value))
    return str(_resolve(base, value))
