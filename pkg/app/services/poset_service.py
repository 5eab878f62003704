"""
Immaculate Hecke Toolkit - Poset Service
The immaculate Hecke poset on SIT(alpha) built from row-strict covers
"""
import json
import logging
from typing import Dict, List, Set

import networkx as nx

from app.models import (
    Composition, Tableau, BoundsReport, DescentVariant, ActionOutcome,
    SpecialKind, TableauClass, ModuleStructureError
)
from app.services.tableau_service import tableau_service
from app.services.hecke_service import hecke_service

logger = logging.getLogger(__name__)


class HassePoset:
    """Vertices are tableaux in reading-word order; edges carry the generator label"""

    def __init__(self, shape: Composition, vertices: List[Tableau], graph: nx.DiGraph, ninv: List[int]):
        self.shape = shape
        self.vertices = vertices
        self.graph = graph
        self.index = {t: k for k, t in enumerate(vertices)}
        low = min(ninv) if ninv else 0
        self.rank = {k: value - low for k, value in enumerate(ninv)}

    @property
    def covers(self) -> List[tuple]:
        return sorted((u, v, d['gen']) for u, v, d in self.graph.edges(data=True))

    @property
    def height(self) -> int:
        return max(self.rank.values()) if self.rank else 0

    def rank_sizes(self) -> List[int]:
        sizes = [0] * (self.height + 1)
        for value in self.rank.values():
            sizes[value] += 1
        return sizes

    def minimal(self) -> List[Tableau]:
        return [self.vertices[k] for k in self.graph.nodes if self.graph.in_degree(k) == 0]

    def maximal(self) -> List[Tableau]:
        return [self.vertices[k] for k in self.graph.nodes if self.graph.out_degree(k) == 0]

    def le(self, lower: Tableau, upper: Tableau) -> bool:
        s, t = self.index[lower], self.index[upper]
        return s == t or nx.has_path(self.graph, s, t)


class PosetService:
    """Build and inspect immaculate Hecke posets"""

    def __init__(self, tableaux=None, hecke=None):
        self.tableaux = tableaux or tableau_service
        self.hecke = hecke or hecke_service

    def build_poset(self, alpha: Composition) -> HassePoset:
        vertices = self.tableaux.standard_immaculate(alpha)
        index = {t: k for k, t in enumerate(vertices)}
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(vertices)))

        for k, tableau in enumerate(vertices):
            for i in range(1, alpha.n):
                result = self.hecke.apply_pi(DescentVariant.ROW_STRICT, i, tableau)
                if result.outcome == ActionOutcome.SWAPPED:
                    graph.add_edge(k, index[result.tableau], gen=i)

        ninv = [self.tableaux.inversions(t) for t in vertices]
        poset = HassePoset(alpha, vertices, graph, ninv)
        logger.debug(f"Poset {alpha}: {len(vertices)} vertices, {graph.number_of_edges()} covers")
        return poset

    def check_bounds(self, poset: HassePoset) -> BoundsReport:
        graded = all(poset.rank[v] == poset.rank[u] + 1 for u, v in poset.graph.edges)
        minimal, maximal = poset.minimal(), poset.maximal()
        if len(minimal) != 1 or len(maximal) != 1:
            raise ModuleStructureError(
                f"Poset {poset.shape} has {len(minimal)} minimal and {len(maximal)} maximal elements"
            )
        bottom = self.tableaux.special(poset.shape, SpecialKind.S0)
        top = self.tableaux.special(poset.shape, SpecialKind.SROW)
        if minimal[0] != bottom or maximal[0] != top:
            raise ModuleStructureError(
                f"Poset {poset.shape} is bounded by {minimal[0]} and {maximal[0]}, not S0 and Srow"
            )
        return BoundsReport(shape=list(poset.shape.parts), min=str(bottom), max=str(top), graded=graded)

    def interval(self, poset: HassePoset, lower: Tableau, upper: Tableau) -> Set[Tableau]:
        """{U : lower <= U <= upper}; empty when lower and upper are incomparable"""
        s, t = poset.index[lower], poset.index[upper]
        if s == t:
            return {lower}
        if not nx.has_path(poset.graph, s, t):
            return set()
        above = nx.descendants(poset.graph, s) | {s}
        below = nx.ancestors(poset.graph, t) | {t}
        return {poset.vertices[k] for k in above & below}

    def chain_length(self, poset: HassePoset) -> bool:
        """Every maximal chain from S0 to Srow has length ninv(Srow) - ninv(S0)"""
        if len(poset.vertices) == 1:
            return True
        s = poset.index[self.tableaux.special(poset.shape, SpecialKind.S0)]
        t = poset.index[self.tableaux.special(poset.shape, SpecialKind.SROW)]
        expected = poset.rank[t] - poset.rank[s]
        longest = nx.dag_longest_path_length(poset.graph)
        shortest = nx.shortest_path_length(poset.graph, s, t)
        return longest == expected and shortest == expected

    def check_duality(self, alpha: Composition, poset: HassePoset = None) -> bool:
        """Reversed covers relabeled through the dual immaculate action give the same edge set"""
        poset = poset or self.build_poset(alpha)
        reversed_edges = set()
        for k, tableau in enumerate(poset.vertices):
            for i in range(1, alpha.n):
                result = self.hecke.apply_pi(DescentVariant.DUAL_IMM, i, tableau)
                if result.outcome == ActionOutcome.SWAPPED:
                    reversed_edges.add((poset.index[result.tableau], k, i))
        return reversed_edges == set(poset.covers)

    def check_closure(self, alpha: Composition) -> bool:
        """SET is closed under row-strict swaps and NSET under dual immaculate swaps"""
        checks = (
            (DescentVariant.ROW_STRICT, TableauClass.SET),
            (DescentVariant.DUAL_IMM, TableauClass.NSET),
        )
        for variant, cls in checks:
            for tableau in self.tableaux.enumerate_standard(alpha, cls):
                for i in range(1, alpha.n):
                    result = self.hecke.apply_pi(variant, i, tableau)
                    if result.outcome == ActionOutcome.SWAPPED and not self.tableaux.in_class(result.tableau, cls):
                        logger.warning(f"{cls.value} is not closed: pi_{i} sends {tableau} to {result.tableau}")
                        return False
        return True

    def to_dot(self, poset: HassePoset) -> str:
        lines = [f'digraph "P_{poset.shape}" {{', '  rankdir=BT;']
        for k, tableau in enumerate(poset.vertices):
            lines.append(f'  n{k} [label="{tableau}"];')
        for u, v, gen in poset.covers:
            lines.append(f'  n{u} -> n{v} [label="pi_{gen}"];')
        lines.append('}')
        return '\n'.join(lines) + '\n'

    def to_dict(self, poset: HassePoset) -> Dict:
        return {
            'shape': list(poset.shape.parts),
            'vertices': [str(t) for t in poset.vertices],
            'covers': [{'src': u, 'dst': v, 'gen': gen} for u, v, gen in poset.covers],
            'ranks': [poset.rank[k] for k in range(len(poset.vertices))],
        }

    def to_json(self, poset: HassePoset) -> str:
        return json.dumps(self.to_dict(poset))


# Create service instance
poset_service = PosetService()
