"""Privacy-by-design advisor for IoT data-flow diagrams.

A small RDF engine carrying a knowledge base of privacy-by-design schemes
(principles, strategies, guidelines, goals, and a 74-pattern catalog with
Hoepman strategy tags), a recommender that annotates data-flow diagram
nodes with the privacy patterns they entail, an ontology pitfall linter,
and a competency-question harness.
"""

__version__ = "0.1.0"
