"""ASCII pictures of paths and trees.  Decorative; not a stable format."""

from __future__ import annotations

from .core import MultiEdgeTree


def render_path(steps: str) -> str:
    """Draw a path on a height grid, one text row per level, highest first.

    Up steps are ``/``, down steps ``\\``, level steps their colour letter.
    """
    heights = []
    h = 0
    for s in steps:
        if s == "D":
            h -= 1
            heights.append(h)  # a down step is drawn on the row it lands on
        else:
            heights.append(h)
            if s == "U":
                h += 1
    top = max(heights, default=0)
    width = len(str(top))
    rows = []
    for level in range(top, -1, -1):
        cells = []
        for s, at in zip(steps, heights):
            if at != level:
                cells.append(" ")
            elif s == "U":
                cells.append("/")
            elif s == "D":
                cells.append("\\")
            else:
                cells.append(s)
        rows.append(f"{level:>{width}} |{''.join(cells)}".rstrip())
    return "\n".join(rows)


def render_tree(t: MultiEdgeTree) -> str:
    """Indented outline, one line per node, each child labelled with its multiplicity."""
    lines = ["*"]
    depth = 0
    for a in t.walk():
        if a is None:
            depth -= 1
        else:
            lines.append("    " * depth + f"+--{a}--*")
            depth += 1
    return "\n".join(lines)
