"""
Text renderings of growth diagrams and tableaux.

``ascii_diagram`` draws the grid top row first, with horizontal edge labels
between permutations, vertical edge labels under each permutation and the
fired tag in the middle of each cell.  ``tikz_diagram`` emits a ``tikzcd``
environment (package ``tikz-cd``) with the same content.
"""

from __future__ import annotations

from .growth import GrowthDiagram
from .perms import ValueTransposition

__all__ = ["ascii_diagram", "tikz_diagram", "tex_transposition"]


def ascii_diagram(d: GrowthDiagram) -> str:
    labels = [str(d.sigma(i, j)) for i in range(d.p) for j in range(d.q + 1)]
    labels += [str(d.tau(i, j)) for i in range(d.p + 1) for j in range(d.q)]
    lab_w = max((len(s) for s in labels), default=3)
    cell_w = max(len(str(d.grid[0][0])), lab_w)
    edge_w = lab_w + 6
    tags = d.tags()
    lines = []
    for j in range(d.q, -1, -1):
        row = ""
        for i in range(d.p + 1):
            row += str(d.grid[i][j]).ljust(cell_w)
            if i < d.p:
                row += " --" + str(d.sigma(i, j)).center(lab_w) + "-- "
        lines.append(row.rstrip() + (f"    k={' '.join(map(str, d.k_seq))}" if j == d.q and d.p else ""))
        if j == 0:
            break
        mid = ""
        for i in range(d.p + 1):
            mid += str(d.tau(i, j - 1)).ljust(cell_w)
            if i < d.p:
                mid += f"[{tags.get((i, j - 1), '?')}]".center(edge_w)
        lines.append(mid.rstrip() + f"    l={d.l_seq[j - 1]}")
    return "\n".join(lines)


def tex_transposition(t: ValueTransposition) -> str:
    return f"{t.a}_{{{t.b}}}" if t.b >= 10 else f"{t.a}_{t.b}"


def _tex_tag(tag: str) -> str:
    return r"\mathrm{" + tag.replace("'", "}'") + ("" if "'" in tag else "}")


def tikz_diagram(d: GrowthDiagram) -> str:
    """A ``tikzcd`` matrix; arrows point up and right, along the covers."""
    tags = d.tags()
    rows = []
    for j in range(d.q, -1, -1):
        cells = []
        for i in range(d.p + 1):
            arrows = []
            if i < d.p:
                arrows.append(rf'\arrow[r, "{tex_transposition(d.sigma(i, j))}"]')
            if j < d.q:
                arrows.append(rf'\arrow[u, "{tex_transposition(d.tau(i, j))}"]')
            if i < d.p and j > 0:
                tag = tags.get((i, j - 1))
                if tag is not None:
                    arrows.append(rf'\arrow[dr, phantom, "{_tex_tag(tag)}" description]')
            cells.append(" ".join([str(d.grid[i][j])] + arrows))
        rows.append(" & ".join(cells))
    body = " \\\\\n  ".join(rows)
    return "\\begin{tikzcd}\n  " + body + "\n\\end{tikzcd}"
