"""Deciding and constructing arrows between diversified form sequences in
the strict category generated by intermutation (c^k) alone.

``check_legitimate`` is the combinatorial criterion, ``exists_bfs`` the
brute-force search it is tested against, and ``synthesize`` builds a
strict arrow term for a legitimate pair.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from . import strict as st
from . import terms as tm
from .strict import Node, node


class NotLegitimate(ValueError):
    pass


@dataclass(frozen=True)
class Witness:
    """The surjections of the legitimacy conditions.  ``merge`` sends each &
    occurrence of X to one of Y; ``split`` sends each | occurrence of Y to
    one of X."""
    merge: dict
    split: dict


@dataclass(frozen=True)
class Profile:
    """Per-sequence data used by the legitimacy check."""
    letters: frozenset
    and_flanks: tuple       # ((L, R), ...)
    or_flanks: tuple        # ((T, B), ...)
    and_index: dict         # letter -> index of the & occurrence whose L holds it
    or_index: dict          # letter -> index of the | occurrence whose T holds it


@lru_cache(maxsize=None)
def profile(x) -> Profile:
    af = tuple(f for _, f in st.flanks(x, "&"))
    of = tuple(f for _, f in st.flanks(x, "|"))
    and_index = {n: i for i, (l, _) in enumerate(af) for n in l}
    or_index = {n: i for i, (t, _) in enumerate(of) for n in t}
    return Profile(st.letter_set(x), af, of, and_index, or_index)


def _onto(src_flanks, dst_flanks, dst_index):
    """Find the surjection forced by first-letter lookup and check the
    concatenation laws.  Returns the map or a reason string."""
    groups: dict = {}
    for i, (first, second) in enumerate(src_flanks):
        j = dst_index.get(first[0])
        if j is None:
            return None, f"no target occurrence for the one with flank {''.join(first)}"
        groups.setdefault(j, []).append(i)
    if len(groups) != len(dst_flanks):
        missing = next(j for j in range(len(dst_flanks)) if j not in groups)
        return None, f"target occurrence {missing} has no preimage"
    for j, members in groups.items():
        want_a, want_b = dst_flanks[j]
        pos = {n: k for k, n in enumerate(want_a)}
        try:
            members.sort(key=lambda i: pos[src_flanks[i][0][0]])
        except KeyError:
            return None, "flank letters do not line up"
        got_a = tuple(n for i in members for n in src_flanks[i][0])
        got_b = tuple(n for i in members for n in src_flanks[i][1])
        if got_a != want_a or got_b != want_b:
            return None, f"concatenation fails at target occurrence {j}"
    return {i: j for j, members in groups.items() for i in members}, None


def legitimacy_report(x, y):
    """(Witness or None, reason)."""
    st.require_diversified(x, y)
    px, py = profile(x), profile(y)
    if px.letters != py.letters:
        return None, "letter sets differ"
    if len(px.and_flanks) < len(py.and_flanks) or len(py.or_flanks) < len(px.or_flanks):
        return None, "occurrence counts rule out surjections"
    merge, reason = _onto(px.and_flanks, py.and_flanks, py.and_index)
    if merge is None:
        return None, "condition &: " + reason
    split, reason = _onto(py.or_flanks, px.or_flanks, px.or_index)
    if split is None:
        return None, "condition |: " + reason
    ax, ay = st.occurrences(x, "&"), st.occurrences(y, "&")
    ox, oy = st.occurrences(x, "|"), st.occurrences(y, "|")
    return Witness({ax[i]: ay[j] for i, j in merge.items()},
                   {oy[i]: ox[j] for i, j in split.items()}), "legitimate"


def check_legitimate(x, y):
    """The witness when (X, Y) is legitimate, else None."""
    return legitimacy_report(x, y)[0]


def is_legitimate(x, y) -> bool:
    return check_legitimate(x, y) is not None


def delete_sub(x, sub):
    """X with the letters of ``sub`` deleted."""
    return st.delete_letters(x, st.letter_set(sub), allow_empty=True)


# --------------------------------------------------------- interpolation

def interpolate_or(x1, x2, y):
    """For a legitimate (X1 | X2, Y) return (Y without X2, Y without X1)."""
    x = node("|", (x1, x2))
    if not is_legitimate(x, y):
        raise NotLegitimate(f"({st.seq_str(x)}, {st.seq_str(y)}) is not legitimate")
    return delete_sub(y, x2), delete_sub(y, x1)


def interpolate_and(x, y1, y2):
    """For a legitimate (X, Y1 & Y2) return (X without Y2, X without Y1)."""
    y = node("&", (y1, y2))
    if not is_legitimate(x, y):
        raise NotLegitimate(f"({st.seq_str(x)}, {st.seq_str(y)}) is not legitimate")
    return delete_sub(x, y2), delete_sub(x, y1)


# ------------------------------------------------------------- synthesis

def _split_at(x, gap):
    kids = x.children
    return node(x.conn, kids[:gap + 1]), node(x.conn, kids[gap + 1:])


def synthesize(x, y):
    """A strict arrow term X -> Y built from c^k alone, following the proof
    of the legitimacy criterion.  Raises NotLegitimate otherwise."""
    if check_legitimate(x, y) is None:
        raise NotLegitimate(f"({st.seq_str(x)}, {st.seq_str(y)}) is not legitimate")
    return tm.simplify(_synth(x, y))


def _synth(x, y):
    if x == y:
        return tm.Id(st.to_formula(x))
    if isinstance(y, Node) and y.conn == "|":
        # the first top gap of Y comes from a top | gap of X
        w = check_legitimate(x, y)
        gap = w.split[st.ConnOccurrence("|", (), 0)]
        if gap.path != ():
            raise AssertionError("split map does not send a top gap to a top gap")
        x1, x2 = _split_at(x, gap.gap)
        y1, y2 = _split_at(y, 0)
        return tm.DisjPar(_synth(x1, y1), _synth(x2, y2))
    if isinstance(x, Node) and x.conn == "&":
        w = check_legitimate(x, y)
        gap = w.merge[st.ConnOccurrence("&", (), 0)]
        if gap.path != ():
            raise AssertionError("merge map does not send a top gap to a top gap")
        x1, x2 = _split_at(x, 0)
        y1, y2 = _split_at(y, gap.gap)
        return tm.ConjPar(_synth(x1, y1), _synth(x2, y2))
    if not (isinstance(x, Node) and x.conn == "|" and isinstance(y, Node)):
        raise NotLegitimate(f"({st.seq_str(x)}, {st.seq_str(y)}) is not legitimate")
    # X = X1 | X2 and Y a conjunction
    x1, x2 = _split_at(x, 0)
    z1, z2 = delete_sub(y, x2), delete_sub(y, x1)
    f1, f2 = _synth(x1, z1), _synth(x2, z2)
    if not (tm.is_identity_term(f1) and tm.is_identity_term(f2)):
        g = _synth(node("|", (z1, z2)), y)
        return tm.Comp(g, tm.DisjPar(f1, f2))
    y_a, y_b = _split_at(y, 0)
    parts = [delete_sub(y_a, x2), delete_sub(y_b, x2), delete_sub(y_a, x1), delete_sub(y_b, x1)]
    if any(p is None for p in parts):
        raise AssertionError("interpolant lost a conjunct")
    a1, b1, a2, b2 = parts
    head = tm.prim("ck", *(st.to_formula(p) for p in parts))
    tail = tm.ConjPar(_synth(node("|", (a1, a2)), y_a), _synth(node("|", (b1, b2)), y_b))
    return tm.Comp(tail, head)


# ------------------------------------------------------------ BFS oracle

def ck_steps(x):
    """Every form sequence reachable from X by one c^k, with the factor
    (a strict arrow term) realising the step."""
    out = []
    for path, v in _nodes(x):
        if v.conn != "|":
            continue
        kids = v.children
        for i in range(len(kids) - 1):
            p, q = kids[i], kids[i + 1]
            if not (isinstance(p, Node) and p.conn == "&" and isinstance(q, Node) and q.conn == "&"):
                continue
            for g1 in range(len(p.children) - 1):
                a, b = _split_at(p, g1)
                for g2 in range(len(q.children) - 1):
                    c, d = _split_at(q, g2)
                    merged = node("&", (node("|", (a, c)), node("|", (b, d))))
                    new_v = node("|", kids[:i] + (merged,) + kids[i + 2:])
                    head = tm.prim("ck", *(st.to_formula(z) for z in (a, b, c, d)))
                    factor = _wrap(x, path, i, head)
                    out.append((_replace(x, path, new_v), factor))
    return out


def _nodes(x, path=()):
    if isinstance(x, Node):
        yield path, x
        for i, c in enumerate(x.children):
            yield from _nodes(c, path + (i,))


def _replace(x, path, new):
    if not path:
        return new
    kids = list(x.children)
    kids[path[0]] = _replace(kids[path[0]], path[1:], new)
    return node(x.conn, kids)


def _wrap(x, path, i, head):
    """Put a c^k acting on children i and i+1 of the node at ``path`` into
    identity context."""
    v = st.subsequence(x, path)
    kids = v.children
    pieces = [tm.Id(st.to_formula(k)) for k in kids[:i]] + [head]
    pieces += [tm.Id(st.to_formula(k)) for k in kids[i + 2:]]
    term = pieces[0]
    for p in pieces[1:]:
        term = tm.DisjPar(term, p)
    for depth in range(len(path) - 1, -1, -1):
        parent = st.subsequence(x, path[:depth])
        j = path[depth]
        pk = parent.children
        pieces = [tm.Id(st.to_formula(k)) for k in pk[:j]] + [term]
        pieces += [tm.Id(st.to_formula(k)) for k in pk[j + 1:]]
        term = pieces[0]
        for p in pieces[1:]:
            term = tm.par(parent.conn, term, p)
    return term


@lru_cache(maxsize=4096)
def reachable(x) -> frozenset:
    seen = {x}
    queue = deque([x])
    while queue:
        cur = queue.popleft()
        for nxt, _ in ck_steps(cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def exists_bfs(x, y) -> bool:
    """Breadth-first search over single c^k steps.  Every step removes one
    binary &, so the search is finite."""
    st.require_diversified(x, y)
    if st.letter_set(x) != st.letter_set(y):
        return False
    if st.binary_count(y, "&") > st.binary_count(x, "&"):
        return False
    return y in reachable(x)


def all_paths(x, y):
    """Every sequence of c^k steps from X to Y, as strict arrow terms."""
    target_and = st.binary_count(y, "&")

    def rec(cur, acc):
        if cur == y:
            yield tm.compose(*reversed(acc)) if acc else tm.Id(st.to_formula(cur))
            return
        if st.binary_count(cur, "&") <= target_and:
            return
        for nxt, factor in ck_steps(cur):
            if y in reachable(nxt):
                yield from rec(nxt, acc + [factor])
    yield from rec(x, [])
