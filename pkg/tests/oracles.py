"""Independent reference computations built on sympy.

Nothing here imports the package's polynomial, action or elimination code;
quivers are given as plain ``(tail, head)`` edge lists.
"""
from itertools import combinations_with_replacement, product

import sympy as sp


def generic_matrices(edges, n, frame=None, m=0):
    """Symbol matrices per arrow: upper triangular n x n, plus an n x m framing matrix."""
    mats = {}
    for k, (t, h) in enumerate(edges, 1):
        mats[k] = sp.Matrix(
            n, n, lambda i, j: sp.Symbol(f"A{k}_{i + 1}{j + 1}") if i <= j else 0
        )
    if frame is not None:
        mats[0] = sp.Matrix(n, m, lambda i, j: sp.Symbol(f"X_{i + 1}{j + 1}"))
    return mats


def lie_vector_fields(edges, n, frame=None, m=0):
    """Derivations for E_{i,i+1} at every nonframed vertex, as lists of (symbol, image)."""
    mats = generic_matrices(edges, n, frame, m)
    ends = {k: e for k, e in enumerate(edges, 1)}
    if frame is not None:
        ends[0] = ("*", frame)
    vertices = sorted({v for e in edges for v in e} | ({frame} if frame is not None else set()))
    fields = []
    for v in vertices:
        for i in range(n - 1):
            E = sp.zeros(n, n)
            E[i, i + 1] = 1
            field = []
            for k, M in mats.items():
                t, h = ends[k]
                delta = sp.zeros(M.rows, M.cols)
                if h == v:
                    delta += E * M
                if t == v:
                    delta -= M * E
                for s in range(M.rows):
                    for c in range(M.cols):
                        if M[s, c] != 0 and delta[s, c] != 0:
                            field.append((M[s, c], sp.expand(delta[s, c])))
            fields.append(field)
    symbols = sorted(
        {x for M in mats.values() for x in M if x != 0}, key=lambda s: s.name
    )
    return mats, symbols, fields


def monomials(symbols, e):
    return [sp.Mul(*c) for c in combinations_with_replacement(symbols, e)]


def kernel_dims(edges, n, d, frame=None, m=0):
    """Dimension of the invariant subspace in each degree 0..d."""
    _, symbols, fields = lie_vector_fields(edges, n, frame, m)
    dims = []
    for e in range(d + 1):
        basis = monomials(symbols, e)
        if not fields:
            dims.append(len(basis))
            continue
        rows_index = {}
        entries = {}
        for col, mono in enumerate(basis):
            for fi, field in enumerate(fields):
                image = sp.expand(sum(img * sp.diff(mono, x) for x, img in field))
                if image == 0:
                    continue
                for term, coeff in sp.Poly(image, *symbols).terms():
                    key = (fi, term)
                    r = rows_index.setdefault(key, len(rows_index))
                    entries[(r, col)] = coeff
        M = sp.zeros(max(len(rows_index), 1), len(basis))
        for (r, c), v in entries.items():
            M[r, c] = v
        dims.append(len(basis) - M.rank())
    return dims


def span_rank(polys, symbols):
    """Rank of the rational span of sympy polynomials."""
    index = {}
    rows = []
    for f in polys:
        row = {}
        for term, coeff in sp.Poly(sp.expand(f), *symbols).terms():
            row[index.setdefault(term, len(index))] = coeff
        rows.append(row)
    if not rows:
        return 0
    M = sp.zeros(len(rows), max(len(index), 1))
    for r, row in enumerate(rows):
        for c, v in row.items():
            M[r, c] = v
    return M.rank()


def square_free_bruteforce(word):
    n = len(word)
    for start in range(n):
        for k in range(1, (n - start) // 2 + 1):
            if list(word[start : start + k]) == list(word[start + k : start + 2 * k]):
                return False
    return True


def pathway_counts_bruteforce(vertices, edges, max_len):
    """Count square-free composable words per (source, target) up to ``max_len`` arrows.

    Words are in application order; arrows are edge indices.
    """
    counts = {(v, w): (1 if v == w else 0) for v in vertices for w in vertices}
    for length in range(1, max_len + 1):
        for word in product(range(len(edges)), repeat=length):
            if any(edges[a][1] != edges[b][0] for a, b in zip(word, word[1:])):
                continue
            if not square_free_bruteforce(word):
                continue
            counts[(edges[word[0]][0], edges[word[-1]][1])] += 1
    return counts


def pathway_counts_dfs(vertices, edges, max_len, stop_above=None):
    """Square-free walk counts by depth-first extension, pruning non-square-free prefixes.

    Returns ``(counts, overflow)``; with ``stop_above`` set, the search
    halts as soon as some pair's count exceeds it and ``overflow`` is True.
    """
    counts = {(v, w): (1 if v == w else 0) for v in vertices for w in vertices}
    out = {v: [k for k, e in enumerate(edges) if e[0] == v] for v in vertices}
    stack = [[k] for k in range(len(edges))]
    while stack:
        word = stack.pop()
        if not square_free_bruteforce(word):
            continue
        pair = (edges[word[0]][0], edges[word[-1]][1])
        counts[pair] += 1
        if stop_above is not None and counts[pair] > stop_above:
            return counts, True
        if len(word) < max_len:
            stack.extend(word + [k] for k in out[edges[word[-1]][1]])
    return counts, False
