"""Rendering of multiplication tables with the witness cells marked.

For construction-branch groups the rows and columns follow the witness
layout (generator block over the fixed part first, then the moved blocks),
which puts both diagonal cell families on the main diagonal. Other groups
render in element order with their near transversal marked.

ASCII marks cells, not colors: ``[s]`` for ladder cells, ``{s}`` for prism
cells. LaTeX emits ``\\lad{...}`` / ``\\pri{...}`` macro calls so the two
styles stay user-definable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .construction import ConstructionResult, display_orders


@dataclass(frozen=True, eq=False)
class RenderModel:
    """Grid of symbol names plus the marked display coordinates."""

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    grid: tuple[tuple[str, ...], ...]
    ladder_marks: frozenset[tuple[int, int]]
    prism_marks: frozenset[tuple[int, int]]


def render_model(result: ConstructionResult) -> RenderModel:
    group = result.group
    if result.witness is not None:
        rows, cols = display_orders(result.witness)
        ladder = result.witness.ladder_cells
        prisms = result.witness.prism_cells
    else:
        rows = cols = tuple(group.elements())
        ladder = result.cells
        prisms = ()
    row_pos = {g: i for i, g in enumerate(rows)}
    col_pos = {g: j for j, g in enumerate(cols)}
    grid = tuple(
        tuple(group.names[group.table[r][c]] for c in cols) for r in rows
    )
    return RenderModel(
        row_labels=tuple(group.names[g] for g in rows),
        col_labels=tuple(group.names[g] for g in cols),
        grid=grid,
        ladder_marks=frozenset((row_pos[r], col_pos[c]) for r, c in ladder),
        prism_marks=frozenset((row_pos[r], col_pos[c]) for r, c in prisms),
    )


def ascii_table(model: RenderModel) -> str:
    n = len(model.grid)
    texts = [["" for _ in range(n + 1)] for _ in range(n + 1)]
    texts[0][0] = "*"
    for j, lab in enumerate(model.col_labels):
        texts[0][j + 1] = lab
    for i in range(n):
        texts[i + 1][0] = model.row_labels[i]
        for j in range(n):
            s = model.grid[i][j]
            if (i, j) in model.ladder_marks:
                s = f"[{s}]"
            elif (i, j) in model.prism_marks:
                s = f"{{{s}}}"
            texts[i + 1][j + 1] = s
    widths = [max(len(texts[i][j]) for i in range(n + 1)) for j in range(n + 1)]
    lines = [
        " ".join(texts[i][j].rjust(widths[j]) for j in range(n + 1))
        for i in range(n + 1)
    ]
    return "\n".join(lines) + "\n"


def latex_table(model: RenderModel) -> str:
    n = len(model.grid)
    out = [
        r"% \lad{} and \pri{} mark the two cell families; define e.g.",
        r"% \newcommand{\lad}[1]{\textcolor{red}{\underline{#1}}}",
        r"% \newcommand{\pri}[1]{\textcolor{blue}{\mathbf{#1}}}",
        r"\begin{tabular}{|" + "c|" * n + "}",
        r"\hline",
    ]
    for i in range(n):
        parts = []
        for j in range(n):
            s = model.grid[i][j]
            if (i, j) in model.ladder_marks:
                parts.append(r"\lad{" + s + "}")
            elif (i, j) in model.prism_marks:
                parts.append(r"\pri{" + s + "}")
            else:
                parts.append(s)
        out.append(" & ".join(parts) + r" \\\hline")
    out.append(r"\end{tabular}")
    return "\n".join(out) + "\n"
