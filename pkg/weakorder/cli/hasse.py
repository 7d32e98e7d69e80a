# -*- coding: utf-8 -*-
"""
Cover graphs of the weak orders as networkx digraphs, and their DOT text.
"""
import logging

import networkx as nx

from .families import get_family

logger = logging.getLogger(__name__)


def cover_graph(family_name: str, n: int) -> nx.DiGraph:
    """
    Digraph on the grade-n elements with an edge ``x -> y`` for each cover
    ``x < y``. Nodes are added in canonical order.

    :raises ValueError: on an unknown family or a negative grade.
    """
    family = get_family(family_name)
    if n < 0:
        raise ValueError('Grade must be non-negative, got {}'.format(n))
    elements = family.enumerate(n)
    graph = nx.DiGraph(family=family.name, grade=n)
    for x in elements:
        graph.add_node(x, label=str(x))
    for x in elements:
        for y in family.up_covers(x):
            graph.add_edge(x, y)
    if not nx.is_directed_acyclic_graph(graph):
        raise RuntimeError('Cover graph of {} in grade {} has a cycle'.format(family_name, n))
    logger.debug('Cover graph %s/%s: %s nodes, %s edges', family_name, n,
                 graph.number_of_nodes(), graph.number_of_edges())
    return graph


def _quote(text: str) -> str:
    return '"{}"'.format(text.replace('\\', '\\\\').replace('"', '\\"'))


def to_dot(graph: nx.DiGraph) -> str:
    """DOT text with nodes and edges in insertion order, minimum at the bottom."""
    name = '{}_{}'.format(graph.graph.get('family', 'poset'), graph.graph.get('grade', ''))
    lines = ['digraph {} {{'.format(name), '    rankdir=BT;']
    index = {node: k for k, node in enumerate(graph.nodes)}
    for node, data in graph.nodes(data=True):
        lines.append('    n{} [label={}];'.format(index[node], _quote(data.get('label', str(node)))))
    for source, target in graph.edges:
        lines.append('    n{} -> n{};'.format(index[source], index[target]))
    lines.append('}')
    return '\n'.join(lines)
