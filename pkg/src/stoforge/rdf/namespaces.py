from __future__ import annotations

from .terms import Iri


class Namespace(str):
    """IRI prefix; attribute and item access mint IRIs in the namespace.

    >>> STO.Standard
    Iri(value='https://w3id.org/i40/sto#Standard')
    """

    def __getattr__(self, name: str) -> Iri:
        if name.startswith("__"):
            raise AttributeError(name)
        return Iri(str(self) + name)

    def __getitem__(self, name) -> Iri:  # type: ignore[override]
        if isinstance(name, str):
            return Iri(str(self) + name)
        return str.__getitem__(self, name)


RDF = Namespace("http://www.w3.org/1999/02/22-rdf-syntax-ns#")
RDFS = Namespace("http://www.w3.org/2000/01/rdf-schema#")
OWL = Namespace("http://www.w3.org/2002/07/owl#")
XSD = Namespace("http://www.w3.org/2001/XMLSchema#")
DCTERMS = Namespace("http://purl.org/dc/terms/")
FOAF = Namespace("http://xmlns.com/foaf/0.1/")
SKOS = Namespace("http://www.w3.org/2004/02/skos/core#")
PROV = Namespace("http://www.w3.org/ns/prov#")
STO = Namespace("https://w3id.org/i40/sto#")
RAMI = Namespace("https://w3id.org/i40/rami#")
DBO = Namespace("http://dbpedia.org/ontology/")
DBR = Namespace("http://dbpedia.org/resource/")
DBC = Namespace("http://dbpedia.org/resource/Category:")
DBP = Namespace("http://dbpedia.org/property/")
YAGO = Namespace("http://dbpedia.org/class/yago/")
GOLD = Namespace("http://purl.org/linguistics/gold/")

RDF_TYPE = RDF.type

DEFAULT_PREFIXES: dict[str, str] = {
    "rdf": str(RDF),
    "rdfs": str(RDFS),
    "owl": str(OWL),
    "xsd": str(XSD),
    "dcterms": str(DCTERMS),
    "foaf": str(FOAF),
    "skos": str(SKOS),
    "prov": str(PROV),
    "sto": str(STO),
    "rami": str(RAMI),
}
