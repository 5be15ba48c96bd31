"""In-process stand-in for a remote SPARQL endpoint.

The fixture answers the handful of query shapes the linker issues, from a
directory of N-Triples files (one per remote resource). It is mounted on a
``requests.Session`` as a transport adapter, so the real client code path
(URL encoding, headers, status handling, caching) is exercised unchanged.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from urllib.parse import parse_qs, urlsplit

import requests
from requests.adapters import BaseAdapter

from ..rdf import RDF_TYPE, Graph, Iri, parse_ntriples, serialize_turtle
from .sparql import RESULTS_JSON, TURTLE

_ASK_RESOURCE = re.compile(r"^\s*ASK\s*\{\s*<([^>\s]+)>\s+\?p\s+\?o\s*\}\s*$", re.I)
_ASK_DECLARED = re.compile(r"^\s*ASK\s*\{\s*<([^>\s]+)>\s+a\s+\?t\s*\.\s*FILTER\s*\(\s*\?t\s+IN\s*\(([^)]*)\)\s*\)\s*\}\s*$", re.I)
_DESCRIBE = re.compile(r"^\s*DESCRIBE\s+<([^>\s]+)>\s*$", re.I)


def load_fixture_graph(directory: str | Path) -> Graph:
    g = Graph()
    for path in sorted(Path(directory).glob("*.nt")):
        g.update(parse_ntriples(path.read_text(encoding="utf-8")))
    return g


class FixtureEndpoint(BaseAdapter):
    def __init__(self, graph: Graph, *, fail_status: int | None = None, malformed: bool = False):
        super().__init__()
        self.graph = graph
        self.fail_status = fail_status
        self.malformed = malformed
        self.queries: list[str] = []

    @classmethod
    def from_directory(cls, directory: str | Path, **kwargs) -> FixtureEndpoint:
        return cls(load_fixture_graph(directory), **kwargs)

    def session(self, url: str) -> requests.Session:
        s = requests.Session()
        s.mount(url, self)
        return s

    def answer(self, query: str) -> tuple[str, str]:
        if m := _ASK_RESOURCE.match(query):
            found = self.graph.has_subject(Iri(m.group(1)))
            return json.dumps({"head": {}, "boolean": found}), RESULTS_JSON
        if m := _ASK_DECLARED.match(query):
            allowed = {Iri(x) for x in re.findall(r"<([^>\s]+)>", m.group(2))}
            found = any(o in allowed for o in self.graph.objects(Iri(m.group(1)), RDF_TYPE))
            return json.dumps({"head": {}, "boolean": found}), RESULTS_JSON
        if m := _DESCRIBE.match(query):
            sub = Graph(self.graph.triples(Iri(m.group(1)), None, None))
            return serialize_turtle(sub), TURTLE
        raise ValueError(f"fixture endpoint cannot answer: {query!r}")

    def send(self, request, **kwargs):
        query = parse_qs(urlsplit(request.url).query).get("query", [""])[0]
        self.queries.append(query)
        resp = requests.Response()
        resp.url = request.url
        resp.request = request
        resp.encoding = "utf-8"
        if self.fail_status is not None:
            resp.status_code = self.fail_status
            resp._content = b"fixture failure"
            return resp
        try:
            body, ctype = self.answer(query)
        except ValueError as exc:
            resp.status_code = 400
            resp._content = str(exc).encode("utf-8")
            return resp
        if self.malformed:
            body = body[: len(body) // 2]
        resp.status_code = 200
        resp.headers["Content-Type"] = ctype
        resp._content = body.encode("utf-8")
        return resp

    def close(self) -> None:
        pass
