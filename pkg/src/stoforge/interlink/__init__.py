"""Linking local entities to an external knowledge graph over SPARQL."""

from .fixture import FixtureEndpoint, load_fixture_graph
from .linking import (
    DEFAULT_ORGANIZATION_DISALLOWED,
    DEFAULT_STANDARD_DISALLOWED,
    Blacklist,
    CandidateSet,
    EnrichmentBundle,
    EnrichmentStats,
    InterlinkReport,
    LinkCandidate,
    Method,
    RemoteDescription,
    declared_property_set,
    drop_flagged,
    enrich,
    fetch_enrichment,
    filter_properties,
    generate_candidates,
    interlink,
    probe_record,
    resource_iri,
    semantic_error_check,
)
from .sparql import (
    CacheMiss,
    EndpointConfig,
    EndpointUnreachable,
    HttpError,
    MalformedResults,
    RateLimiter,
    ResponseCache,
    SparqlClient,
    SparqlError,
    SparqlTimeout,
    cache_key,
    decode_results,
    sparql_select,
)
