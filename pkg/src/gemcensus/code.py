"""String codes for 4-colored graphs.

A connected bipartite graph on 2p vertices is written as 3 rows of p
uppercase letters.  Vertices split into pairs b1..bp / w1..wp along the
color-0 matching (bi joined to wi); row c spells the permutation pi_c
with bi joined to w_{pi_c(i)}, letters A=1, B=2, ...  This is the
interchange format of the command line tools and catalogs.

Non-bipartite graphs use a lowercase format with one row of 2p letters
per color, row c spelling the color-c involution (a = vertex 0).  The
two formats cannot collide.

``canonical_code`` picks, over all vertex labelings reachable by a fixed
traversal rule and all 24 color permutations, the lexicographically
smallest such string, so equal canonical codes mean isomorphic graphs
(as colored graphs, up to recoloring).
"""

from __future__ import annotations

from dataclasses import dataclass

from gemcensus import _kernel
from gemcensus.core import ColoredGraph


class CodeError(ValueError):
    """Malformed code text; ``row`` is the offending 0-based row index
    when one can be named."""

    def __init__(self, message: str, row: int | None = None):
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class GemCode:
    """A code string together with the order it describes."""

    text: str

    def __post_init__(self):
        _parse(self.text)  # validate eagerly

    @property
    def order(self) -> int:
        if self.text.isupper():
            return 2 * (len(self.text) // 3)
        return len(self.text) // 4

    @property
    def bipartite(self) -> bool:
        return self.text.isupper()

    def __str__(self):
        return self.text


def _parse(text: str) -> list[list[int]]:
    if not text or not text.isalpha():
        raise CodeError("code must be a non-empty string of letters")
    if text.isupper():
        if len(text) % 3:
            raise CodeError("bipartite code length must be divisible by 3")
        p = len(text) // 3
        perms = []
        for r in range(3):
            row = text[r * p:(r + 1) * p]
            perm = [ord(ch) - 65 for ch in row]
            if sorted(perm) != list(range(p)):
                raise CodeError(f"{row!r} is not a permutation of "
                                f"the first {p} letters", row=r)
            perms.append(perm)
        matchings = [[0] * (2 * p) for _ in range(4)]
        for i in range(p):
            matchings[0][i] = p + i
            matchings[0][p + i] = i
        for c, perm in enumerate(perms, start=1):
            for i in range(p):
                matchings[c][i] = p + perm[i]
                matchings[c][p + perm[i]] = i
        return matchings
    if text.islower():
        if len(text) % 4:
            raise CodeError("involution code length must be divisible by 4")
        n = len(text) // 4
        matchings = []
        for r in range(4):
            row = text[r * n:(r + 1) * n]
            m = [ord(ch) - 97 for ch in row]
            for v, u in enumerate(m):
                if not 0 <= u < n or u == v or m[u] != v:
                    raise CodeError(
                        f"{row!r} is not a fixed-point-free involution",
                        row=r)
            matchings.append(m)
        return matchings
    raise CodeError("mixed-case code text")


def decode(code: str | GemCode) -> ColoredGraph:
    """Build the labeled graph a code describes.

    Raises CodeError for malformed text (with the row index) and when the
    described graph is not connected.
    """
    text = code.text if isinstance(code, GemCode) else code
    matchings = _parse(text)
    try:
        return ColoredGraph.from_matchings(matchings)
    except ValueError as exc:
        raise CodeError(str(exc)) from exc


def encode_labeled(g: ColoredGraph) -> str:
    """Read the code off a bipartite graph whose vertices are already
    laid out as b1..bp, w1..wp with color 0 joining bi to wi.  Together
    with ``decode`` this is an exact inverse on well-formed codes."""
    p = g.order // 2
    m0 = g.matchings[0]
    if any(m0[i] != p + i for i in range(p)):
        raise ValueError("vertices are not in code layout "
                         "(color 0 must join i to p+i)")
    rows = []
    for c in (1, 2, 3):
        m = g.matchings[c]
        rows.append("".join(chr(65 + m[i] - p) for i in range(p)))
    return "".join(rows)


def canonical_code(g: ColoredGraph) -> GemCode:
    """The canonical code of a graph: equal for two graphs exactly when
    they are isomorphic as colored graphs (vertex bijection composed with
    a permutation of the four colors)."""
    return GemCode(_kernel.canonical_code(g.matchings))
