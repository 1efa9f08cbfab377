"""Latin squares, partial transversals, and the brute-force oracles.

A partial transversal is kept as a plain tuple of ``(row, column)`` cells;
the symbols are implied by the square. Searches branch row-major with
ascending column index, so every witness they return is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DuplicateCell, InvalidInput, NotLatin, NotPermutation
from .guards import ensure_within
from .groups import Group

Cell = tuple[int, int]

ROLES = ("row", "column", "symbol")


@dataclass(frozen=True)
class LatinSquare:
    n: int
    cells: tuple[tuple[int, ...], ...]
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    sym_labels: tuple[str, ...]


@dataclass(frozen=True)
class Violation:
    """First at-most-once failure in a cell collection."""

    kind: str  # one of ROLES
    first: Cell
    second: Cell

    def __str__(self):
        return f"cells {self.first} and {self.second} share a {self.kind}"


def latin_square(cells: Sequence[Sequence[int]],
                 row_labels: Sequence[str] | None = None,
                 col_labels: Sequence[str] | None = None,
                 sym_labels: Sequence[str] | None = None) -> LatinSquare:
    """Validate rows/columns as permutations and build a LatinSquare."""
    rows = [tuple(int(x) for x in row) for row in cells]
    n = len(rows)
    if n == 0:
        raise NotLatin("empty square")
    full = frozenset(range(n))
    for i, row in enumerate(rows):
        if len(row) != n:
            raise NotLatin(f"row {i} has length {len(row)}, expected {n}")
        if set(row) != full:
            raise NotLatin(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if {row[j] for row in rows} != full:
            raise NotLatin(f"column {j} is not a permutation of 0..{n - 1}")

    def _labels(given):
        if given is None:
            return tuple(str(i) for i in range(n))
        out = tuple(str(x) for x in given)
        if len(out) != n:
            raise ValueError(f"expected {n} labels, got {len(out)}")
        return out

    return LatinSquare(n, tuple(rows), _labels(row_labels),
                       _labels(col_labels), _labels(sym_labels))


def cayley_square(group: Group) -> LatinSquare:
    """The multiplication table of ``group`` viewed as a latin square."""
    return LatinSquare(group.n, group.table, group.names, group.names, group.names)


# ---------------------------------------------------------------------------
# partial transversals

def is_partial_transversal(square: LatinSquare,
                           cells: Iterable[Cell]) -> tuple[bool, Violation | None]:
    """True iff rows, columns and symbols are pairwise distinct.

    On failure the returned :class:`Violation` names the clashing pair and
    which of the three classes they share.
    """
    n = square.n
    seen_rows: dict[int, Cell] = {}
    seen_cols: dict[int, Cell] = {}
    seen_syms: dict[int, Cell] = {}
    for cell in cells:
        r, c = cell
        if not (0 <= r < n and 0 <= c < n):
            raise InvalidInput(f"cell {cell} outside the {n}x{n} square")
        if r in seen_rows:
            return False, Violation("row", seen_rows[r], cell)
        if c in seen_cols:
            return False, Violation("column", seen_cols[c], cell)
        s = square.cells[r][c]
        if s in seen_syms:
            return False, Violation("symbol", seen_syms[s], cell)
        seen_rows[r] = seen_cols[c] = seen_syms[s] = cell
    return True, None


def triples(square: LatinSquare, cells: Iterable[Cell]) -> list[tuple[int, int, int]]:
    """Row-sorted (row, column, symbol) triples of a cell collection."""
    return sorted((r, c, square.cells[r][c]) for r, c in cells)


def cells_to_json(square: LatinSquare, cells: Iterable[Cell]) -> list[list[int]]:
    return [list(t) for t in triples(square, cells)]


def cells_from_json(data: Iterable[Sequence[int]],
                    square: LatinSquare | None = None) -> tuple[Cell, ...]:
    out = []
    for item in data:
        r, c = int(item[0]), int(item[1])
        if square is not None and len(item) > 2 and square.cells[r][c] != int(item[2]):
            raise InvalidInput(
                f"stored symbol {item[2]} disagrees with square at ({r},{c})"
            )
        out.append((r, c))
    return tuple(out)


# ---------------------------------------------------------------------------
# exhaustive oracles (row-major, ascending-column branching throughout)

def brute_force_transversal(square: LatinSquare, *,
                            guard: int | None = None) -> tuple[Cell, ...] | None:
    """Lexicographically first transversal, or None when none exists."""
    n = square.n
    ensure_within("transversal", n, guard)
    rows = square.cells
    picked: list[Cell] = []

    def dfs(r: int, used_cols: int, used_syms: int) -> bool:
        if r == n:
            return True
        row = rows[r]
        for c in range(n):
            if used_cols >> c & 1:
                continue
            s = row[c]
            if used_syms >> s & 1:
                continue
            picked.append((r, c))
            if dfs(r + 1, used_cols | 1 << c, used_syms | 1 << s):
                return True
            picked.pop()
        return False

    return tuple(picked) if dfs(0, 0, 0) else None


def count_transversals(square: LatinSquare, *, guard: int | None = None) -> int:
    """Exact number of transversals, by exhaustive backtracking."""
    n = square.n
    ensure_within("count", n, guard)
    rows = square.cells

    def dfs(r: int, used_cols: int, used_syms: int) -> int:
        if r == n:
            return 1
        total = 0
        row = rows[r]
        for c in range(n):
            if used_cols >> c & 1:
                continue
            s = row[c]
            if used_syms >> s & 1:
                continue
            total += dfs(r + 1, used_cols | 1 << c, used_syms | 1 << s)
        return total

    return dfs(0, 0, 0)


def max_partial_transversal(square: LatinSquare, *,
                            guard: int | None = None) -> tuple[int, tuple[Cell, ...]]:
    """Exact maximum partial transversal size, with a witness attaining it."""
    n = square.n
    ensure_within("max_partial", n, guard)
    rows = square.cells
    best_size = 0
    best_cells: tuple[Cell, ...] = ()
    acc: list[Cell] = []

    def dfs(r: int, used_cols: int, used_syms: int) -> None:
        nonlocal best_size, best_cells
        if len(acc) + (n - r) <= best_size:
            return
        if r == n:
            if len(acc) > best_size:
                best_size = len(acc)
                best_cells = tuple(acc)
            return
        row = rows[r]
        for c in range(n):
            if used_cols >> c & 1:
                continue
            s = row[c]
            if used_syms >> s & 1:
                continue
            acc.append((r, c))
            dfs(r + 1, used_cols | 1 << c, used_syms | 1 << s)
            acc.pop()
        dfs(r + 1, used_cols, used_syms)  # leave row r uncovered

    dfs(0, 0, 0)
    return best_size, best_cells


def is_extendable(square: LatinSquare, cells: Sequence[Cell]) -> bool:
    """True iff some cell outside the used rows/columns/symbols can be added."""
    ok, violation = is_partial_transversal(square, cells)
    if not ok:
        raise InvalidInput(f"not a partial transversal: {violation}")
    n = square.n
    used_rows = {r for r, _ in cells}
    used_cols = {c for _, c in cells}
    used_syms = {square.cells[r][c] for r, c in cells}
    for r in range(n):
        if r in used_rows:
            continue
        row = square.cells[r]
        for c in range(n):
            if c not in used_cols and row[c] not in used_syms:
                return True
    return False


# ---------------------------------------------------------------------------
# main-class transformations

def _check_perm(perm: Sequence[int], n: int, what: str) -> tuple[int, ...]:
    p = tuple(int(x) for x in perm)
    if sorted(p) != list(range(n)):
        raise NotPermutation(f"{what} is not a permutation of 0..{n - 1}")
    return p


def apply_isotopy(square: LatinSquare,
                  row_perm: Sequence[int],
                  col_perm: Sequence[int],
                  sym_perm: Sequence[int]) -> LatinSquare:
    """Relabel rows, columns and symbols by the three permutations."""
    n = square.n
    rp = _check_perm(row_perm, n, "row permutation")
    cp = _check_perm(col_perm, n, "column permutation")
    sp = _check_perm(sym_perm, n, "symbol permutation")
    cells = [[0] * n for _ in range(n)]
    row_labels = [""] * n
    col_labels = [""] * n
    sym_labels = [""] * n
    for r in range(n):
        row_labels[rp[r]] = square.row_labels[r]
        col_labels[cp[r]] = square.col_labels[r]
        sym_labels[sp[r]] = square.sym_labels[r]
        for c in range(n):
            cells[rp[r]][cp[c]] = sp[square.cells[r][c]]
    return LatinSquare(n, tuple(tuple(row) for row in cells),
                       tuple(row_labels), tuple(col_labels), tuple(sym_labels))


def map_cells(cells: Iterable[Cell],
              row_perm: Sequence[int],
              col_perm: Sequence[int]) -> tuple[Cell, ...]:
    """Image of a cell collection under an isotopy's row/column permutations."""
    return tuple((row_perm[r], col_perm[c]) for r, c in cells)


def conjugate_square(square: LatinSquare,
                     role_perm: Sequence[str]) -> LatinSquare:
    """Permute the roles played by rows, columns and symbols.

    ``role_perm`` lists, for the new (row, column, symbol) slots, which old
    role feeds each one: ``("column", "row", "symbol")`` is the transpose.
    The result is always a valid latin square.
    """
    order = tuple(role_perm)
    if sorted(order) != sorted(ROLES):
        raise InvalidInput(f"role permutation must rearrange {ROLES}, got {order}")
    src = tuple(ROLES.index(role) for role in order)
    n = square.n
    cells = [[-1] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            t = (r, c, square.cells[r][c])
            cells[t[src[0]]][t[src[1]]] = t[src[2]]
    labels = (square.row_labels, square.col_labels, square.sym_labels)
    return latin_square(cells, labels[src[0]], labels[src[1]], labels[src[2]])


def conjugate_cells(square: LatinSquare, cells: Iterable[Cell],
                    role_perm: Sequence[str]) -> tuple[Cell, ...]:
    """Image of a cell collection in the role-permuted square."""
    order = tuple(role_perm)
    if sorted(order) != sorted(ROLES):
        raise InvalidInput(f"role permutation must rearrange {ROLES}, got {order}")
    src = tuple(ROLES.index(role) for role in order)
    out = []
    for r, c in cells:
        t = (r, c, square.cells[r][c])
        out.append((t[src[0]], t[src[1]]))
    return tuple(out)


# ---------------------------------------------------------------------------
# plain-text square format: line 1 = n, then n rows of n symbol indices

def square_to_text(square: LatinSquare) -> str:
    lines = [str(square.n)]
    lines.extend(" ".join(map(str, row)) for row in square.cells)
    return "\n".join(lines) + "\n"


def square_from_text(text: str) -> LatinSquare:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise NotLatin("empty square file")
    n = int(lines[0])
    if len(lines) != n + 1:
        raise NotLatin(f"expected {n} rows, found {len(lines) - 1}")
    return latin_square([[int(x) for x in lines[1 + i].split()] for i in range(n)])


def load_square(path: str | Path) -> LatinSquare:
    return square_from_text(Path(path).read_text())


def save_square(square: LatinSquare, path: str | Path) -> None:
    Path(path).write_text(square_to_text(square))
