from __future__ import annotations

import json
import time

import pytest
import requests
from requests.adapters import BaseAdapter

from stoforge.interlink import EndpointConfig, FixtureEndpoint
from stoforge.interlink.sparql import (
    CacheMiss, EndpointUnreachable, HttpError, MalformedResults, RateLimiter, ResponseCache, SparqlClient,
    SparqlTimeout, cache_key, decode_results, sparql_select,
)
from stoforge.rdf import DBR, BNode, Iri, Literal

ASK_AML = f"ASK {{ <{DBR.AutomationML.value}> ?p ?o }}"


class Raising(BaseAdapter):
    def __init__(self, exc):
        super().__init__()
        self.exc = exc

    def send(self, request, **kwargs):
        raise self.exc

    def close(self):
        pass


def test_config_invariants(tmp_path):
    with pytest.raises(ValueError):
        EndpointConfig(max_parallel=0)
    with pytest.raises(ValueError):
        EndpointConfig(offline=True)
    assert EndpointConfig().with_overrides(timeout=5, url=None).timeout == 5


def test_decode_results_select_and_ask():
    body = json.dumps({"head": {"vars": ["s", "l", "b"]}, "results": {"bindings": [
        {"s": {"type": "uri", "value": "http://x/a"}, "l": {"type": "literal", "value": "A", "xml:lang": "en"},
         "b": {"type": "bnode", "value": "n1"}},
        {"s": {"type": "uri", "value": "http://x/b"},
         "l": {"type": "typed-literal", "value": "3", "datatype": "http://www.w3.org/2001/XMLSchema#int"}},
    ]}})
    rows = decode_results(body)
    assert rows[0] == {"s": Iri("http://x/a"), "l": Literal("A", language="en"), "b": BNode("n1")}
    assert rows[1]["l"].datatype == Iri("http://www.w3.org/2001/XMLSchema#int")
    assert decode_results('{"head": {}, "boolean": false}') is False
    for bad in ("{", "[]", '{"head": {}}', '{"boolean": "yes"}',
                '{"head": {"vars": ["s"]}, "results": {"bindings": [{"s": {"type": "x", "value": "v"}}]}}'):
        with pytest.raises(MalformedResults):
            decode_results(bad)


def test_record_then_replay_offline(endpoint, live_config):
    client = SparqlClient(live_config, endpoint.session(live_config.url))
    assert client.ask(ASK_AML) is True
    assert len(endpoint.queries) == 1
    key = cache_key(live_config.url, ASK_AML)
    meta, body = ResponseCache(live_config.cache_dir).get(key)
    assert meta["query"] == ASK_AML and meta["status"] == 200
    offline = SparqlClient(live_config.with_overrides(offline=True), requests.Session())
    assert offline.ask(ASK_AML) is True
    assert offline.live_requests == []
    with pytest.raises(CacheMiss):
        offline.ask(f"ASK {{ <{DBR.Nothing_here.value}> ?p ?o }}")


def test_graph_query_round_trips_through_cache(endpoint, live_config):
    client = SparqlClient(live_config, endpoint.session(live_config.url))
    g = client.graph(f"DESCRIBE <{DBR.AutomationML.value}>")
    assert len(g) > 5
    replay = SparqlClient(live_config.with_overrides(offline=True)).graph(f"DESCRIBE <{DBR.AutomationML.value}>")
    assert replay.triple_set == g.triple_set


def test_http_error_and_malformed_are_not_cached(fixture_graph, live_config):
    failing = FixtureEndpoint(fixture_graph, fail_status=503)
    with pytest.raises(HttpError) as err:
        SparqlClient(live_config, failing.session(live_config.url)).ask(ASK_AML)
    assert err.value.status == 503
    broken = FixtureEndpoint(fixture_graph, malformed=True)
    with pytest.raises(MalformedResults):
        SparqlClient(live_config, broken.session(live_config.url)).ask(ASK_AML)
    with pytest.raises(MalformedResults):
        SparqlClient(live_config, broken.session(live_config.url)).graph(f"DESCRIBE <{DBR.AutomationML.value}>")
    assert not ResponseCache(live_config.cache_dir).directory.exists() or \
        not list(ResponseCache(live_config.cache_dir).directory.iterdir())


@pytest.mark.parametrize("exc, expected", [
    (requests.ConnectionError("refused"), EndpointUnreachable),
    (requests.Timeout("slow"), SparqlTimeout),
])
def test_transport_failures(live_config, exc, expected):
    s = requests.Session()
    s.mount(live_config.url, Raising(exc))
    with pytest.raises(expected):
        sparql_select(live_config, ASK_AML, s)


def test_rate_limiter_with_fake_clock():
    now = [100.0]
    slept = []

    def sleep(d):
        slept.append(d)
        now[0] += d

    lim = RateLimiter(1.0, clock=lambda: now[0], sleep=sleep)
    stamps = [lim.wait()]
    now[0] += 0.25
    stamps.append(lim.wait())
    now[0] += 3.0
    stamps.append(lim.wait())
    assert slept == [0.75]
    assert [b - a for a, b in zip(stamps, stamps[1:])] == [1.0, 3.0]


def test_live_requests_respect_min_interval(endpoint, tmp_path):
    cfg = EndpointConfig(url="http://fixture.test/sparql", cache_dir=str(tmp_path), min_interval=30)
    client = SparqlClient(cfg, endpoint.session(cfg.url))
    for name in ("AutomationML", "MQTT", "OPC_Unified_Architecture", "PROFINET"):
        client.ask(f"ASK {{ <{DBR[name].value}> ?p ?o }}")
    gaps = [b - a for a, b in zip(client.live_requests, client.live_requests[1:])]
    assert len(gaps) == 3 and min(gaps) >= 0.030 - 1e-6


def test_monotonic_clock_is_default():
    assert RateLimiter(0.1)._clock is time.monotonic
