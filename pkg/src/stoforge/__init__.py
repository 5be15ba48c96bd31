"""Standards knowledge graph construction, reasoning, interlinking and evaluation."""

__version__ = "0.1.0"
