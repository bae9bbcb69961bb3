from hdastar.domains.base import Domain
from hdastar.domains.grid import GridMap
from hdastar.domains.sas import DomainTransitionGraph, SasPlanningDomain, SasTask, extract_dtg, parse_sas
from hdastar.domains.tiles import TilePuzzle

__all__ = [
    "Domain",
    "DomainTransitionGraph",
    "GridMap",
    "SasPlanningDomain",
    "SasTask",
    "TilePuzzle",
    "extract_dtg",
    "parse_sas",
]
