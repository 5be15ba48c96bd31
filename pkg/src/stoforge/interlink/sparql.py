"""SPARQL 1.1 protocol client with a record/replay response cache.

Every successful response is stored verbatim under a digest of
``(endpoint url, query)``. In offline mode only the cache is consulted and a
miss raises :class:`CacheMiss`, which keeps test runs deterministic.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import threading
import time
from dataclasses import dataclass, replace
from pathlib import Path

import requests

from ..rdf import BNode, Graph, Iri, Literal, RdfSyntaxError, UnresolvedPrefix, parse_turtle

log = logging.getLogger(__name__)

RESULTS_JSON = "application/sparql-results+json"
TURTLE = "text/turtle"


class SparqlError(Exception):
    pass


class HttpError(SparqlError):
    def __init__(self, status: int, body: str = ""):
        self.status = status
        super().__init__(f"endpoint returned HTTP {status}: {body[:200]}")


class SparqlTimeout(SparqlError):
    pass


class EndpointUnreachable(SparqlError):
    def __init__(self, message: str, completed: list | None = None):
        self.completed = list(completed or [])
        super().__init__(message)


class MalformedResults(SparqlError):
    pass


class CacheMiss(SparqlError):
    pass


@dataclass(frozen=True)
class EndpointConfig:
    url: str = "https://dbpedia.org/sparql"
    timeout: float = 30.0
    max_parallel: int = 4
    min_interval: int = 1000  # milliseconds between live requests
    cache_dir: str | None = None
    offline: bool = False
    resource_namespace: str = "http://dbpedia.org/resource/"
    max_triples: int = 2000

    def __post_init__(self) -> None:
        if self.max_parallel < 1:
            raise ValueError("max_parallel must be >= 1")
        if self.min_interval < 0:
            raise ValueError("min_interval must be >= 0")
        if self.offline and not self.cache_dir:
            raise ValueError("offline mode requires a cache_dir")

    def with_overrides(self, **kwargs) -> EndpointConfig:
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def cache_key(url: str, query: str) -> str:
    return hashlib.sha256(f"{url}\n{query}".encode("utf-8")).hexdigest()


class ResponseCache:
    """One file per query digest: a JSON metadata line, then the raw body."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def path(self, key: str) -> Path:
        return self.directory / f"{key}.rq.cache"

    def get(self, key: str) -> tuple[dict, str] | None:
        p = self.path(key)
        if not p.exists():
            return None
        raw = p.read_bytes().decode("utf-8")
        header, _, body = raw.partition("\n")
        return json.loads(header), body

    def put(self, key: str, body: str, *, status: int, content_type: str, query: str, url: str,
            timestamp: float | None = None) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        meta = {
            "content_type": content_type,
            "query": query,
            "status": status,
            "timestamp": round(time.time() if timestamp is None else timestamp, 3),
            "url": url,
        }
        tmp = self.path(key).with_suffix(".tmp")
        tmp.write_bytes((json.dumps(meta, sort_keys=True) + "\n" + body).encode("utf-8"))
        os.replace(tmp, self.path(key))


class RateLimiter:
    """Spaces consecutive calls at least ``interval`` seconds apart."""

    def __init__(self, interval: float, clock=time.monotonic, sleep=time.sleep):
        self.interval = interval
        self._clock = clock
        self._sleep = sleep
        self._lock = threading.Lock()
        self._last: float | None = None

    def wait(self) -> float:
        with self._lock:
            now = self._clock()
            if self._last is not None:
                delay = self._last + self.interval - now
                if delay > 0:
                    self._sleep(delay)
                    now = self._clock()
            self._last = now
            return now


def _decode_term(binding: dict):
    kind = binding.get("type")
    value = binding.get("value")
    if not isinstance(value, str):
        raise MalformedResults(f"binding without string value: {binding!r}")
    if kind == "uri":
        return Iri(value)
    if kind == "bnode":
        return BNode(value)
    if kind in ("literal", "typed-literal"):
        if "xml:lang" in binding:
            return Literal(value, language=binding["xml:lang"])
        if "datatype" in binding:
            return Literal(value, Iri(binding["datatype"]))
        return Literal(value)
    raise MalformedResults(f"unknown binding type {kind!r}")


def decode_results(body: str):
    """Decode a SPARQL JSON results document: rows for SELECT, bool for ASK."""
    try:
        doc = json.loads(body)
    except ValueError as exc:
        raise MalformedResults(f"results body is not JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MalformedResults("results document must be a JSON object")
    if "boolean" in doc:
        if not isinstance(doc["boolean"], bool):
            raise MalformedResults("ASK result is not a boolean")
        return doc["boolean"]
    try:
        variables = doc["head"]["vars"]
        bindings = doc["results"]["bindings"]
    except (KeyError, TypeError):
        raise MalformedResults("missing head.vars or results.bindings") from None
    if not isinstance(bindings, list):
        raise MalformedResults("results.bindings must be a list")
    rows = []
    for b in bindings:
        if not isinstance(b, dict):
            raise MalformedResults("binding row must be an object")
        rows.append({var: _decode_term(b[var]) for var in variables if var in b})
    return rows


class SparqlClient:
    def __init__(self, config: EndpointConfig, session: requests.Session | None = None,
                 limiter: RateLimiter | None = None):
        self.config = config
        self.session = session or requests.Session()
        self.cache = ResponseCache(config.cache_dir) if config.cache_dir else None
        self.limiter = limiter or RateLimiter(config.min_interval / 1000.0)
        self.live_requests: list[float] = []

    def _fetch(self, query: str, accept: str) -> tuple[str, bool, str]:
        """Return ``(body, from_cache, key)``."""
        key = cache_key(self.config.url, query)
        if self.cache is not None:
            hit = self.cache.get(key)
            if hit is not None:
                return hit[1], True, key
        if self.config.offline:
            raise CacheMiss(f"offline and no cached response for query digest {key[:12]}")
        self.live_requests.append(self.limiter.wait())
        try:
            resp = self.session.get(
                self.config.url,
                params={"query": query},
                headers={"Accept": accept},
                timeout=self.config.timeout,
            )
        except requests.Timeout as exc:
            raise SparqlTimeout(str(exc)) from None
        except requests.ConnectionError as exc:
            raise EndpointUnreachable(str(exc)) from None
        if resp.status_code != 200:
            raise HttpError(resp.status_code, resp.text)
        resp.encoding = resp.encoding or "utf-8"
        return resp.text, False, key

    def _record(self, key: str, query: str, body: str, accept: str) -> None:
        if self.cache is not None:
            self.cache.put(key, body, status=200, content_type=accept, query=query, url=self.config.url)

    def query(self, query: str):
        body, cached, key = self._fetch(query, RESULTS_JSON)
        result = decode_results(body)
        if not cached:
            self._record(key, query, body, RESULTS_JSON)
        return result

    def select(self, query: str) -> list[dict]:
        result = self.query(query)
        if isinstance(result, bool):
            raise MalformedResults("expected SELECT bindings, got an ASK boolean")
        return result

    def ask(self, query: str) -> bool:
        result = self.query(query)
        if not isinstance(result, bool):
            raise MalformedResults("expected an ASK boolean, got SELECT bindings")
        return result

    def graph(self, query: str) -> Graph:
        """Run a CONSTRUCT or DESCRIBE query and parse the Turtle answer."""
        body, cached, key = self._fetch(query, TURTLE)
        try:
            g = parse_turtle(body)
        except (RdfSyntaxError, UnresolvedPrefix) as exc:
            raise MalformedResults(f"unparseable graph response: {exc}") from None
        if not cached:
            self._record(key, query, body, TURTLE)
        return g


def sparql_select(config: EndpointConfig, query: str, session: requests.Session | None = None):
    """One-shot SELECT/ASK: rows of bindings, or a boolean for ASK."""
    return SparqlClient(config, session).query(query)
