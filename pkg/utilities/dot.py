"""
GraphViz export of models, drawn the usual way for S5 models: undirected edges, the agents of
an edge merged into one label ("a,b"), reflexive loops left out.
Output depends only on the model, so the same model always gives the same bytes.
"""
from __future__ import annotations
from pathlib import Path
from typing import Hashable, Iterator, Mapping, Sequence

from configs.config_dot import DotStyle
from utilities.action_update import ActionModel
from utilities.dynamic import DynamicModel
from utilities.exceptions import ExportError
from utilities.kripke import EpistemicModel, worldLabel
from utilities.parser import renderFormula
from utilities.partition import Partition


def _quote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r'\"'))


def _mergedEdges(nodes: Sequence[Hashable], agents: Sequence[str], partitions: Mapping[str, Partition]) -> list[tuple[Hashable, Hashable, str]]:
    position = {node: i for i, node in enumerate(nodes)}
    labels: dict[tuple[int, int], list[str]] = {}
    for agent in agents:
        for block in partitions[agent]:
            for x in block:
                for y in block:
                    if position[x] < position[y]:
                        labels.setdefault((position[x], position[y]), []).append(agent)
    return [(nodes[i], nodes[j], ",".join(agents_)) for (i, j), agents_ in sorted(labels.items())]


def _graph(name: str, nodes: list[str], edges: list[tuple[Hashable, Hashable, str]], extra: Sequence[str] = ()) -> Iterator[str]:
    yield f"graph {_quote(name)} {{\n"
    for line in nodes:
        yield f"  {line}\n"
    for first, second, label in edges:
        yield f"  {_quote(worldLabel(first))} -- {_quote(worldLabel(second))} [label={_quote(label)}, style={DotStyle.EDGE_STYLE}];\n"
    for line in extra:
        yield f"  {line}\n"
    yield "}\n"


def _worldNodes(M: EpistemicModel) -> list[str]:
    # label: world name, then the atoms true there
    nodes = []
    for w in M.worlds:
        atoms = ",".join(M.trueAtoms(w))
        label = f"{worldLabel(w)}\\n{atoms}" if atoms else worldLabel(w)
        nodes.append(f"{_quote(worldLabel(w))} [shape={DotStyle.WORLD_SHAPE}, label={_quote(label)}];")
    return nodes


def epistemicDot(M: EpistemicModel, name: str = "M") -> str:
    """
    DOT text of an epistemic model. Nodes are labelled with their name and the atoms true there.
    """
    return "".join(_graph(name, _worldNodes(M), _mergedEdges(M.worlds, M.agents, M.indist)))


def actionDot(A: ActionModel) -> str:
    """
    DOT text of an action model. Nodes are labelled with their name and precondition.
    """
    nodes = [
        f"{_quote(a)} [shape={DotStyle.ACTION_SHAPE}, label={_quote(a + ': ' + renderFormula(A.pre[a]))}];"
        for a in A.actions
    ]
    partitions = {agent: A.partition(agent) for agent in A.agents}
    return "".join(_graph(A.name, nodes, _mergedEdges(A.actions, A.agents, partitions)))


def dynamicDot(D: DynamicModel, name: str = "D") -> str:
    """
    DOT text of a dynamic model: the base model, plus one note per agent listing f_j on each ∼_j class.
    """
    base = D.base
    notes = []
    for agent in base.agents:
        rows = [f"f_{agent}"]
        for world_class in base.partition(agent):
            blocks = " ".join("{" + ",".join(block) + "}" for block in D.actionPartition(agent, world_class[0]))
            rows.append("{" + ",".join(worldLabel(w) for w in world_class) + "}: " + blocks)
        label = ''.join(row + r'\l' for row in rows)
        notes.append(f"{_quote('f_' + agent)} [shape=note, label={_quote(label)}];")
    return "".join(_graph(name, _worldNodes(base), _mergedEdges(base.worlds, base.agents, base.indist), notes))


def writeDot(text: str, path: str | Path):
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise ExportError(f"Cannot write {path}: {e}") from e
