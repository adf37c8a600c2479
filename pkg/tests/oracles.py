"""Independent brute-force implementations used to validate the library.

These deliberately avoid the library's own algorithms: conjugation is
done by transposing an explicit cell set, transfers by trying every
(donor index, receiver index) pair, and corners by checking that the
cell set stays downward-closed.
"""

from __future__ import annotations


def cells(parts):
    return {(i, j) for i, p in enumerate(parts, start=1) for j in range(1, p + 1)}


def cells_to_partition(cell_set):
    rows = {}
    for i, _ in cell_set:
        rows[i] = rows.get(i, 0) + 1
    return tuple(rows[i] for i in sorted(rows))


def conjugate_by_transposition(parts):
    return cells_to_partition({(j, i) for i, j in cells(parts)})


def naive_transfer_neighbors(parts):
    n = sum(parts)
    out = set()
    for i in range(len(parts)):
        for j in range(len(parts) + 1):  # the extra slot is a fresh zero part
            if i == j:
                continue
            moved = list(parts) + [0]
            moved[i] -= 1
            moved[j] += 1
            cand = tuple(sorted((x for x in moved if x > 0), reverse=True))
            if cand != parts:
                assert sum(cand) == n
                out.add(cand)
    return out


def is_downward_closed(cell_set):
    return all(
        (i == 1 or (i - 1, j) in cell_set) and (j == 1 or (i, j - 1) in cell_set)
        for i, j in cell_set
    )


def removable_cells(parts):
    """Cells whose removal keeps the diagram downward-closed."""
    diagram = cells(parts)
    return {c for c in diagram if is_downward_closed(diagram - {c})}


def addable_cells(parts):
    """Missing cells whose addition keeps the diagram downward-closed."""
    diagram = cells(parts)
    candidates = {
        (i, j)
        for i in range(1, len(parts) + 2)
        for j in range(1, parts[0] + 2)
        if (i, j) not in diagram
    }
    return {c for c in candidates if is_downward_closed(diagram | {c})}
