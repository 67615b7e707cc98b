"""Pure-Python acceptance search over byte-encoded tapes.

A compiled program is ``(start, finals, rules)`` where ``finals`` is a
tuple of bools indexed by state and ``rules[p]`` is a tuple of
``(word, target)`` pairs with ``word`` a ``bytes`` of symbol indices.

For a rule word ``x`` the admissible split under a rightward scan is
unique: the first occurrence of ``x`` (an earlier one would either sit in
the skipped part or straddle the boundary).  The move is enabled iff no
other rule word's first occurrence ends at or before it.  Leftward scans
mirror this with last occurrences.
"""

from collections import deque

ROWJ, LOWJ, GRL, GLL, GRC, GLC, GJFA = range(7)


def _right_moves(rules, tape, strict):
    firsts = [tape.find(w) for w, _ in rules]
    for (x, q), fx in zip(rules, firsts):
        if fx < 0:
            continue
        for (w, _), fw in zip(rules, firsts):
            if fw >= 0 and (fw < fx if strict else fw + len(w) <= fx):
                break
        else:
            yield fx, fx + len(x), q


def _left_moves(rules, tape, strict):
    lasts = [tape.rfind(w) for w, _ in rules]
    for (x, q), lx in zip(rules, lasts):
        if lx < 0:
            continue
        ex = lx + len(x)
        for (w, _), lw in zip(rules, lasts):
            if lw >= 0 and (lw + len(w) > ex if strict else lw >= ex):
                break
        else:
            yield lx, ex, q


def _letter_right(rules, tape):
    readable = {w[0]: q for w, q in rules}
    for i, c in enumerate(tape):
        if c in readable:
            yield i, i + 1, readable[c]
            return


def _letter_left(rules, tape):
    readable = {w[0]: q for w, q in rules}
    for i in range(len(tape) - 1, -1, -1):
        if tape[i] in readable:
            yield i, i + 1, readable[tape[i]]
            return


def _contains_any(rules, tape):
    for w, _ in rules:
        if w in tape:
            return True
    return False


def successors(program, model, config, strict=False):
    """Successor configurations of ``config`` as ``(state, left, right)`` triples.

    Circular configurations use ``left`` for the tape and ``right`` empty.
    """
    _, _, table = program
    p, left, right = config
    rules = table[p]
    if model == GRC:
        for s, e, q in _right_moves(rules, left, strict):
            yield q, left[e:] + left[:s], b""
    elif model == GLC:
        for s, e, q in _left_moves(rules, left, strict):
            yield q, left[e:] + left[:s], b""
    elif model == ROWJ:
        for s, e, q in _letter_right(rules, left):
            yield q, left[e:] + left[:s], b""
    elif model == LOWJ:
        for s, e, q in _letter_left(rules, left):
            yield q, left[e:] + left[:s], b""
    elif model == GJFA:
        for x, q in rules:
            i = left.find(x)
            while i >= 0:
                yield q, left[:i] + left[i + len(x):], b""
                i = left.find(x, i + 1)
    elif model == GRL:
        # left is the jumped-over prefix, right the part ahead of the head
        moved = False
        for s, e, q in _right_moves(rules, right, strict):
            moved = True
            yield q, left + right[:s], right[e:]
        if not moved and left and not _contains_any(rules, right):
            yield p, b"", left + right
    elif model == GLL:
        moved = False
        for s, e, q in _left_moves(rules, left, strict):
            moved = True
            yield q, left[:s], left[e:] + right
        if not moved and right and not _contains_any(rules, left):
            yield p, left + right, b""
    else:
        raise ValueError(f"unknown model code {model}")


def search(program, model, tape, strict=False):
    """Breadth-first acceptance search.

    Returns ``(accepted, configurations_visited, max_frontier)``.
    """
    start, finals, _ = program
    if model == GLL:
        init = (start, tape, b"")
    elif model == GRL:
        init = (start, b"", tape)
    else:
        init = (start, tape, b"")
    seen = {init}
    frontier = deque([init])
    widest = 1
    while frontier:
        config = frontier.popleft()
        p, left, right = config
        if not left and not right and finals[p]:
            return True, len(seen), widest
        for nxt in successors(program, model, config, strict):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
        if len(frontier) > widest:
            widest = len(frontier)
    return False, len(seen), widest


def prepare(program):
    return program
