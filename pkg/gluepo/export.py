# Copyright (c) 2026 The gluepo authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Export module

Graphviz DOT rendering and versioned JSON documents for computations, glued computations,
witnesses and check reports.
"""
import json
import logging
from typing import Any, Union

from gluepo.core_po import GluedLpo, Lpo, element_depths
from gluepo.settings import Settings

logger = logging.getLogger('gluepo.export')

TEMPLATE = """digraph {name} {{
  rankdir = "TB" ;
  node [fontname="Helvetica", fontsize=10] ;

  // nodes
  {nodes}

  // edges
  {edges}

  // order
  {arrows}
}}
"""


def _quote(text: Any) -> str:
    return str(text).replace('\\', '\\\\').replace('"', '\\"')


def export_dot(x: Union[Lpo, GluedLpo], name: str = 'G') -> str:
    """DOT text of a computation.

    Nodes are ellipses labelled with their label and depth, edges are boxes. Communication
    arrows are solid, interleaving arrows dashed, and glue pairs are drawn as coloured arrows
    annotated with the label owning them. Ids are assigned in key order.

    Args:
        x (Lpo or GluedLpo): What to draw
        name (str): Graph name

    Returns:
        str: the DOT document
    """
    lpo = x.base if isinstance(x, GluedLpo) else x
    depths = element_depths(lpo)
    ids = {node: f'v{i}' for i, node in enumerate(sorted(lpo.nodes))}
    ids.update({edge: f'e{i}' for i, edge in enumerate(sorted(lpo.edges))})

    nodes = [f'{ids[node]} [shape=ellipse, label="{_quote(lpo.node_label[node])}\\nd={depths[node]}"] ;'
             for node in sorted(lpo.nodes)]
    edges = [f'{ids[edge]} [shape=box, label="{_quote(lpo.edge_label[edge])}"] ;' for edge in sorted(lpo.edges)]
    arrows = [f'{ids[a]} -> {ids[b]} ;' for a, b in sorted(lpo.comm)]
    arrows += [f'{ids[a]} -> {ids[b]} [style=dashed] ;' for a, b in sorted(lpo.interleave)]
    if isinstance(x, GluedLpo):
        for i, (label, relation) in enumerate(sorted(x.assignment.items(), key=lambda item: str(item[0]))):
            color = Settings.glue_colors[i % len(Settings.glue_colors)]
            arrows += [f'{ids[a]} -> {ids[b]} [color={color}, fontcolor={color}, label="glue:{_quote(label)}", '
                       f'constraint=false] ;' for a, b in relation]
    return TEMPLATE.format(name=name, nodes='\n  '.join(nodes), edges='\n  '.join(edges),
                           arrows='\n  '.join(arrows))


def report_document(command: str, **payload) -> dict:
    """A versioned report envelope for the command line."""
    document = dict(schema=Settings.REPORT_SCHEMA, command=command)
    document.update(payload)
    return document


def to_json(x: Any) -> str:
    """Serialize anything with an `as_dict` method, or a plain document, in a stable layout."""
    document = x.as_dict() if hasattr(x, 'as_dict') else x
    return json.dumps(document, indent=2)
