"""DOT and GraphML export of analyzed partition graphs.

Every vertex carries its partition label, a class describing its
position relative to the symmetric core, its degree and local clique
number, and its distances to axis and spine (-1 when undefined).
"""

from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import escape, quoteattr

from .axial import central_region
from .graph import UNREACHABLE
from .invariants import DEG, OMEGA_LOC
from .partitions import format_partition
from .pipeline import GraphAnalysis, analyze

CLASS_AXIS = "axis"
CLASS_SPINE_OFF_AXIS = "spine_off_axis"
CLASS_CENTRAL_OFF_SPINE = "central_off_spine"
CLASS_OUTER = "outer"
VERTEX_CLASSES = (CLASS_AXIS, CLASS_SPINE_OFF_AXIS, CLASS_CENTRAL_OFF_SPINE, CLASS_OUTER)

FORMATS = ("dot", "graphml")


def vertex_classes(analysis: GraphAnalysis) -> list[str]:
    """Partition of the vertex set: axis, spine off axis, first central
    shell off spine, and everything else. All outer for axisless n."""
    geom = analysis.geometry
    p = analysis.graph.num_vertices
    if not geom.is_axial:
        return [CLASS_OUTER] * p
    narrow = central_region(geom, 1)
    classes = []
    for v in range(p):
        if v in geom.axis:
            classes.append(CLASS_AXIS)
        elif v in geom.spine:
            classes.append(CLASS_SPINE_OFF_AXIS)
        elif v in narrow:
            classes.append(CLASS_CENTRAL_OFF_SPINE)
        else:
            classes.append(CLASS_OUTER)
    return classes


def _vertex_attributes(analysis: GraphAnalysis) -> list[dict[str, object]]:
    geom = analysis.geometry
    classes = vertex_classes(analysis)
    deg = analysis.profiles[DEG].values
    omega = analysis.profiles[OMEGA_LOC].values
    ax_dist = geom.ax_dist if geom.is_axial else None
    sp_dist = geom.sp_dist if geom.is_axial else None
    rows = []
    for v, parts in enumerate(analysis.graph.vertices):
        rows.append(
            {
                "label": format_partition(parts),
                "class": classes[v],
                "deg": deg[v],
                "omega_loc": omega[v],
                "ax_dist": ax_dist[v] if ax_dist is not None else UNREACHABLE,
                "sp_dist": sp_dist[v] if sp_dist is not None else UNREACHABLE,
            }
        )
    return rows


def _edges(analysis: GraphAnalysis) -> list[tuple[int, int]]:
    return [
        (u, v)
        for u, row in enumerate(analysis.graph.adjacency)
        for v in row
        if u < v
    ]


def render_dot(analysis: GraphAnalysis) -> str:
    lines = [f"graph g{analysis.n} {{"]
    if not analysis.geometry.is_axial:
        lines.append('  graph [axisless="true"];')
    for v, attrs in enumerate(_vertex_attributes(analysis)):
        lines.append(
            f'  v{v} [label="{attrs["label"]}", class="{attrs["class"]}", '
            f'deg={attrs["deg"]}, omega_loc={attrs["omega_loc"]}, '
            f'ax_dist={attrs["ax_dist"]}, sp_dist={attrs["sp_dist"]}];'
        )
    for u, v in _edges(analysis):
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_GRAPHML_KEYS = [
    ("d_axisless", "graph", "axisless", "boolean"),
    ("d_label", "node", "label", "string"),
    ("d_class", "node", "class", "string"),
    ("d_deg", "node", "deg", "int"),
    ("d_omega", "node", "omega_loc", "int"),
    ("d_axdist", "node", "ax_dist", "int"),
    ("d_spdist", "node", "sp_dist", "int"),
]

_NODE_KEY_IDS = {
    "label": "d_label",
    "class": "d_class",
    "deg": "d_deg",
    "omega_loc": "d_omega",
    "ax_dist": "d_axdist",
    "sp_dist": "d_spdist",
}


def render_graphml(analysis: GraphAnalysis) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
    ]
    for key_id, domain, name, typ in _GRAPHML_KEYS:
        lines.append(
            f'  <key id="{key_id}" for="{domain}" '
            f'attr.name={quoteattr(name)} attr.type="{typ}"/>'
        )
    lines.append(f'  <graph id="g{analysis.n}" edgedefault="undirected">')
    if not analysis.geometry.is_axial:
        lines.append('    <data key="d_axisless">true</data>')
    for v, attrs in enumerate(_vertex_attributes(analysis)):
        lines.append(f'    <node id="v{v}">')
        for name, key_id in _NODE_KEY_IDS.items():
            lines.append(f'      <data key="{key_id}">{escape(str(attrs[name]))}</data>')
        lines.append("    </node>")
    for i, (u, v) in enumerate(_edges(analysis)):
        lines.append(f'    <edge id="e{i}" source="v{u}" target="v{v}"/>')
    lines.append("  </graph>")
    lines.append("</graphml>")
    return "\n".join(lines) + "\n"


def export_graph(n: int, fmt: str, path: Path) -> Path:
    """Write the analyzed graph for n to ``path`` in the given format."""
    if fmt not in FORMATS:
        raise ValueError(f"unsupported format {fmt!r}, expected one of {FORMATS}")
    analysis = analyze(n)
    text = render_dot(analysis) if fmt == "dot" else render_graphml(analysis)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, newline="\n")
    return path
