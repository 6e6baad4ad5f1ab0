#!/usr/bin/env python3
"""Build the bundled graph fixtures from classical constructions, certify
each one (exact strong-regularity identity, spectra, and small exact
invariants), and write graph6 files plus manifest.json into the package.

Run from the repository root:  python3 scripts/make_fixtures.py [names...]
"""

from __future__ import annotations

import itertools
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from thetakit.exact import chromatic_number, clique_number, independence_number
from thetakit.graphs import Graph
from thetakit.io import to_graph6
from thetakit.spectra import eigenvalues
from thetakit.srg import SrgParams, srg_check
from thetakit.theta import theta_srg

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "src" / "thetakit" / "fixtures"


# ---------------------------------------------------------------------
# Hoffman-Singleton: five pentagons and five pentagrams over Z5.
# ---------------------------------------------------------------------


def hoffman_singleton() -> Graph:
    # vertex layout: P[h][j] -> 5*h + j, Q[i][j] -> 25 + 5*i + j
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))          # pentagon
            edges.append((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))  # pentagram
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return Graph.from_edge_list(50, edges)


# ---------------------------------------------------------------------
# Schlafli: complement of the line-intersection graph of a double six
# plus the 15 diagonal lines (the 27 lines of a cubic surface).
# ---------------------------------------------------------------------


def schlafli() -> Graph:
    names = [("a", i) for i in range(6)] + [("b", i) for i in range(6)] \
        + [("c", frozenset(p)) for p in itertools.combinations(range(6), 2)]
    idx = {v: k for k, v in enumerate(names)}

    def meets(u, v):
        (tu, xu), (tv, xv) = u, v
        if tu == "a" and tv == "a":
            return False
        if tu == "b" and tv == "b":
            return False
        if {tu, tv} == {"a", "b"}:
            return xu != xv
        if tu == "c" and tv == "c":
            return not (xu & xv)
        # one of them is the diagonal line c_{jk}
        if tu == "c":
            return xv in xu
        return xu in xv

    edges = [(idx[u], idx[v]) for u, v in itertools.combinations(names, 2)
             if meets(u, v)]
    meet_graph = Graph.from_edge_list(27, edges)
    return meet_graph.complement()


# ---------------------------------------------------------------------
# Gosset: signed 2-subsets of an 8-set; equal signs join when the pairs
# share one element, opposite signs join when the pairs are disjoint.
# ---------------------------------------------------------------------


def gosset() -> Graph:
    pairs = [frozenset(p) for p in itertools.combinations(range(8), 2)]
    verts = [(s, p) for s in (0, 1) for p in pairs]
    edges = []
    for i, (s1, p1) in enumerate(verts):
        for j in range(i + 1, len(verts)):
            s2, p2 = verts[j]
            common = len(p1 & p2)
            if (s1 == s2 and common == 1) or (s1 != s2 and common == 0):
                edges.append((i, j))
    return Graph.from_edge_list(56, edges)


# ---------------------------------------------------------------------
# Chang graphs: Seidel switching of the triangular graph T(8) about
# three kinds of edge sets of K8 (a perfect matching, an 8-cycle, and
# a triangle plus a pentagon).
# ---------------------------------------------------------------------


def _triangular8():
    verts = [frozenset(p) for p in itertools.combinations(range(8), 2)]
    idx = {v: k for k, v in enumerate(verts)}
    a = np.zeros((28, 28), dtype=bool)
    for u, v in itertools.combinations(verts, 2):
        if u & v:
            a[idx[u], idx[v]] = a[idx[v], idx[u]] = True
    return verts, idx, a

def _switch(a: np.ndarray, subset) -> Graph:
    b = a.copy()
    s = np.zeros(a.shape[0], dtype=bool)
    s[list(subset)] = True
    cross = np.outer(s, ~s) | np.outer(~s, s)
    b[cross] = ~b[cross]
    np.fill_diagonal(b, False)
    return Graph(b)

def chang(which: int) -> Graph:
    verts, idx, a = _triangular8()
    if which == 1:
        switch_edges = [(0, 1), (2, 3), (4, 5), (6, 7)]
    elif which == 2:
        switch_edges = [(i, (i + 1) % 8) for i in range(8)]
    elif which == 3:
        switch_edges = [(0, 1), (1, 2), (2, 0)] \
            + [(3 + i, 3 + (i + 1) % 5) for i in range(5)]
    else:
        raise ValueError(which)
    subset = [idx[frozenset(e)] for e in switch_edges]
    return _switch(a, subset)


# ---------------------------------------------------------------------
# PG(2,4), its hyperoval orbits, and the Steiner system S(3,6,22):
# the ingredients for the Mesner/M22, Sims-Gewirtz, and Cameron graphs.
# ---------------------------------------------------------------------

# F4 arithmetic: elements 0,1,2,3 with 2*2=3, 2*3=1, 3*3=2 (2 = w, 3 = w^2)
_F4_MUL = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]


def _f4_add(x, y):
    return x ^ y


def _pg24_points():
    pts = []
    seen = set()
    for v in itertools.product(range(4), repeat=3):
        if v == (0, 0, 0) or v in seen:
            continue
        pts.append(v)
        for c in (1, 2, 3):
            seen.add(tuple(_F4_MUL[c][x] for x in v))
    assert len(pts) == 21
    return pts


def _pg24_lines(pts):
    # lines = kernels of nonzero linear forms, up to scalar
    lines = set()
    for form in _pg24_points():
        on = frozenset(
            i for i, p in enumerate(pts)
            if _f4_add(_f4_add(_F4_MUL[form[0]][p[0]], _F4_MUL[form[1]][p[1]]),
                       _F4_MUL[form[2]][p[2]]) == 0)
        assert len(on) == 5
        lines.add(on)
    assert len(lines) == 21
    return sorted(lines, key=sorted)


def _hyperovals(pts, lines):
    collinear = np.zeros((21, 21, 21), dtype=bool)
    for ln in lines:
        for a, b, c in itertools.combinations(sorted(ln), 3):
            for x, y, z in itertools.permutations((a, b, c)):
                collinear[x, y, z] = True
    ovals = []
    for six in itertools.combinations(range(21), 6):
        ok = True
        for a, b, c in itertools.combinations(six, 3):
            if collinear[a, b, c]:
                ok = False
                break
        if ok:
            ovals.append(frozenset(six))
    assert len(ovals) == 168
    return ovals


def _psl34_generators(pts):
    """Permutations of the 21 points from determinant-1 matrices."""
    idx = {}
    for i, p in enumerate(pts):
        for c in (1, 2, 3):
            idx[tuple(_F4_MUL[c][x] for x in p)] = i
    mats = [
        [[1, 1, 0], [0, 1, 0], [0, 0, 1]],   # transvection by 1
        [[1, 2, 0], [0, 1, 0], [0, 0, 1]],   # transvection by w
        [[0, 0, 1], [1, 0, 0], [0, 1, 0]],   # coordinate 3-cycle
    ]
    perms = []
    for m in mats:
        perm = []
        for p in pts:
            q = tuple(
                _f4_add(_f4_add(_F4_MUL[m[r][0]][p[0]], _F4_MUL[m[r][1]][p[1]]),
                        _F4_MUL[m[r][2]][p[2]]) for r in range(3))
            perm.append(idx[q])
        perms.append(perm)
    return perms


def _hyperoval_orbit(ovals, perms):
    """Orbit of the first hyperoval under the generated group; must have
    size 56 (the three orbits of the determinant-1 group each have 56)."""
    oval_idx = {o: i for i, o in enumerate(ovals)}
    start = 0
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for oi in frontier:
            for perm in perms:
                img = frozenset(perm[x] for x in ovals[oi])
                j = oval_idx[img]
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        frontier = nxt
    orbit = sorted(seen)
    assert len(orbit) == 56, len(orbit)
    return [ovals[i] for i in orbit]


def steiner_3_6_22():
    """Blocks of S(3,6,22) on points 0..21 (21 = the extension point)."""
    pts = _pg24_points()
    lines = _pg24_lines(pts)
    ovals = _hyperovals(pts, lines)
    perms = _psl34_generators(pts)
    orbit = _hyperoval_orbit(ovals, perms)
    blocks = [frozenset(ln) | {21} for ln in lines] + orbit
    assert len(blocks) == 77
    # defining property: every 3-subset of the 22 points in exactly one block
    cover = {}
    for b in blocks:
        for t in itertools.combinations(sorted(b), 3):
            cover[t] = cover.get(t, 0) + 1
    assert len(cover) == 1540 and set(cover.values()) == {1}
    return blocks


def m22_graph(blocks=None) -> Graph:
    blocks = blocks or steiner_3_6_22()
    a = np.zeros((77, 77), dtype=bool)
    for i, j in itertools.combinations(range(77), 2):
        if not (blocks[i] & blocks[j]):
            a[i, j] = a[j, i] = True
    return Graph(a)


def gewirtz(blocks=None) -> Graph:
    blocks = blocks or steiner_3_6_22()
    ovals = [b for b in blocks if 21 not in b]
    assert len(ovals) == 56
    a = np.zeros((56, 56), dtype=bool)
    for i, j in itertools.combinations(range(56), 2):
        if not (ovals[i] & ovals[j]):
            a[i, j] = a[j, i] = True
    return Graph(a)


def cameron(blocks=None) -> Graph:
    blocks = blocks or steiner_3_6_22()
    pairs = [frozenset(p) for p in itertools.combinations(range(22), 2)]
    assert len(pairs) == 231
    in_block = {}
    for bi, b in enumerate(blocks):
        for p in itertools.combinations(sorted(b), 2):
            in_block.setdefault(frozenset(p), set()).add(bi)
    a = np.zeros((231, 231), dtype=bool)
    for i, j in itertools.combinations(range(231), 2):
        p, q = pairs[i], pairs[j]
        if p & q:
            continue
        if in_block[p] & in_block[q]:
            a[i, j] = a[j, i] = True
    return Graph(a)


# ---------------------------------------------------------------------
# Perkel: the valency-6 orbital of PSL(2,19) on the 57 cosets of an
# icosahedral (order 60) subgroup.
# ---------------------------------------------------------------------


def _psl_2_19_perms():
    """PSL(2,19) as permutations of the projective line (20 points,
    index 19 = the point at infinity), generated by x -> x+1, x -> -1/x."""
    p = 19
    inf = p

    def shift(x):
        return inf if x == inf else (x + 1) % p

    def flip(x):
        if x == inf:
            return 0
        if x == 0:
            return inf
        return (-pow(x, p - 2, p)) % p

    g1 = tuple(shift(x) for x in range(p + 1))
    g2 = tuple(flip(x) for x in range(p + 1))
    gens = (g1, g2)
    ident = tuple(range(p + 1))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                c = tuple(g[h[x]] for x in range(p + 1))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    elems = sorted(seen)
    assert len(elems) == 3420
    return elems, gens


def _perm_order(g):
    n = len(g)
    seen = [False] * n
    order = 1
    for s in range(n):
        if seen[s]:
            continue
        ln = 0
        x = s
        while not seen[x]:
            seen[x] = True
            x = g[x]
            ln += 1
        order = order * ln // _gcd(order, ln)
    return order


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _closure(gens, limit):
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                c = tuple(g[h[x]] for x in range(len(h)))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
                    if len(seen) > limit:
                        return None
        frontier = nxt
    return seen


def _find_icosahedral(elems):
    """A subgroup of order 60: generated by an order-2 and an order-3
    element whose product has order 5."""
    twos = [g for g in elems if _perm_order(g) == 2]
    threes = [g for g in elems if _perm_order(g) == 3]
    for a in twos[:40]:
        for b in threes:
            c = tuple(a[b[x]] for x in range(len(b)))
            if _perm_order(c) != 5:
                continue
            sub = _closure((a, b), 60)
            if sub is not None and len(sub) == 60:
                return sub
    raise RuntimeError("no icosahedral subgroup found")


def perkel() -> Graph:
    elems, gens = _psl_2_19_perms()
    sub = _find_icosahedral(elems)
    elem_idx = {g: i for i, g in enumerate(elems)}
    n = len(elems[0])

    # cosets g*sub, keyed by their sorted element-index tuple
    def coset_key(g):
        return min(elem_idx[tuple(g[h[x]] for x in range(n))] for h in sub)

    key_of = {}
    for g in elems:
        key_of[elem_idx[g]] = coset_key(g)
    coset_ids = sorted(set(key_of.values()))
    assert len(coset_ids) == 57
    cid = {k: i for i, k in enumerate(coset_ids)}

    # left action of the generators on cosets
    gen_action = []
    for h in gens:
        act = [0] * 57
        for k in coset_ids:
            g = elems[k]
            img = tuple(h[g[x]] for x in range(n))
            act[cid[k]] = cid[key_of[elem_idx[img]]]
        gen_action.append(act)

    # suborbits of the identity-coset stabilizer = orbits of sub on cosets
    home = cid[key_of[elem_idx[tuple(range(n))]]]
    sub_action = []
    for h in sub:
        act = [0] * 57
        for k in coset_ids:
            g = elems[k]
            img = tuple(h[g[x]] for x in range(n))
            act[cid[k]] = cid[key_of[elem_idx[img]]]
        sub_action.append(act)
    orbit_of = [-1] * 57
    for s in range(57):
        if orbit_of[s] >= 0:
            continue
        comp = {s}
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for act in sub_action:
                    y = act[x]
                    if y not in comp:
                        comp.add(y)
                        nxt.append(y)
            frontier = nxt
        for x in comp:
            orbit_of[x] = s
    sizes = {}
    for s in range(57):
        sizes[orbit_of[s]] = sizes.get(orbit_of[s], 0) + 1
    six = [root for root, size in sizes.items() if size == 6]
    assert len(six) == 1, sizes
    seed_orbit = {x for x in range(57) if orbit_of[x] == six[0]}

    # orbital graph: edge orbit of {home, x} for x in the valency-6 suborbit
    edges = set()
    frontier = [(home, x) for x in seed_orbit]
    for u, v in frontier:
        edges.add((min(u, v), max(u, v)))
    work = list(edges)
    while work:
        nxt = []
        for u, v in work:
            for act in gen_action:
                e = (min(act[u], act[v]), max(act[u], act[v]))
                if e not in edges:
                    edges.add(e)
                    nxt.append(e)
        work = nxt
    return Graph.from_edge_list(57, sorted(edges))


# ---------------------------------------------------------------------
# Hall-Janko: 1 + 36 + 63 points. The 63 are the nonisotropic points of
# the unitary plane over F9, the 36 are the cosets of a PSL(2,7)
# subgroup of the special unitary group; adjacency comes from the group
# orbitals, fixed by strong-regularity certification.
# ---------------------------------------------------------------------

# F9 = F3[i]/(i^2+1), element a+b*i encoded as a+3b, so 0,1,2 are the
# prime field and 2 = -1.


def _f9_tables():
    add = [[0] * 9 for _ in range(9)]
    mul = [[0] * 9 for _ in range(9)]
    for x in range(9):
        b, a = divmod(x, 3)
        for y in range(9):
            d, c = divmod(y, 3)
            add[x][y] = (a + c) % 3 + 3 * ((b + d) % 3)
            # (a+bi)(c+di) = (ac - bd) + (ad + bc) i
            mul[x][y] = (a * c - b * d) % 3 + 3 * ((a * d + b * c) % 3)
    conj = [a + 3 * ((3 - b) % 3) for x in range(9) for b, a in [divmod(x, 3)]]
    return add, mul, conj


_F9_ADD, _F9_MUL, _F9_CONJ = _f9_tables()


def _f9_dot_hermitian(u, v):
    """Hermitian form conj(u)^T J v with J the antidiagonal identity."""
    s = 0
    for k in range(3):
        s = _F9_ADD[s][_F9_MUL[_F9_CONJ[u[k]]][v[2 - k]]]
    return s


def _mat_mul(m1, m2):
    out = [[0] * 3 for _ in range(3)]
    for r in range(3):
        for c in range(3):
            s = 0
            for k in range(3):
                s = _F9_ADD[s][_F9_MUL[m1[r][k]][m2[k][c]]]
            out[r][c] = s
    return tuple(tuple(row) for row in out)


def _mat_vec(m, v):
    return tuple(
        _F9_ADD[_F9_ADD[_F9_MUL[m[r][0]][v[0]]][_F9_MUL[m[r][1]][v[1]]]]
        [_F9_MUL[m[r][2]][v[2]]] for r in range(3))


def _is_special_unitary(m):
    # conj(M)^T J M = J, J antidiagonal
    for r in range(3):
        for c in range(3):
            s = 0
            for k in range(3):
                for l in range(3):
                    j_kl = 1 if k + l == 2 else 0
                    if j_kl:
                        s = _F9_ADD[s][_F9_MUL[_F9_MUL[_F9_CONJ[m[k][r]]][j_kl]]
                                       [m[l][c]]]
            want = 1 if r + c == 2 else 0
            if s != want:
                return False
    return _det(m) == 1


def _det(m):
    def mul(x, y):
        return _F9_MUL[x][y]

    def add(x, y):
        return _F9_ADD[x][y]

    def neg(x):
        return _F9_MUL[x][2]  # -1 is 2

    t1 = mul(m[0][0], add(mul(m[1][1], m[2][2]), neg(mul(m[1][2], m[2][1]))))
    t2 = mul(m[0][1], add(mul(m[1][0], m[2][2]), neg(mul(m[1][2], m[2][0]))))
    t3 = mul(m[0][2], add(mul(m[1][0], m[2][1]), neg(mul(m[1][1], m[2][0]))))
    return add(add(t1, neg(t2)), t3)


def _su33_generators():
    """All upper-unitriangular special unitary matrices plus the
    scaled antidiagonal flip (determinant fixed to 1)."""
    gens = []
    for a in range(9):
        for b in range(9):
            for c in range(9):
                m = ((1, a, b), (0, 1, c), (0, 0, 1))
                if _is_special_unitary(m):
                    gens.append(m)
    # -J: antidiagonal of -1 = 2
    w = ((0, 0, 2), (0, 2, 0), (2, 0, 0))
    assert _is_special_unitary(w)
    gens.append(w)
    return gens


def _projective_points():
    pts = []
    seen = set()
    for v in itertools.product(range(9), repeat=3):
        if v == (0, 0, 0) or v in seen:
            continue
        pts.append(v)
        for c in range(1, 9):
            seen.add(tuple(_F9_MUL[c][x] for x in v))
    assert len(pts) == 91
    return pts


def _su33_on_nonisotropic():
    """The 6048-element group as permutations of the 63 nonisotropic
    points, returned with its generators (in the same encoding)."""
    pts = _projective_points()
    noniso = [p for p in pts if _f9_dot_hermitian(p, p) != 0]
    assert len(noniso) == 63
    canon = {}
    for i, p in enumerate(noniso):
        for c in range(1, 9):
            canon[tuple(_F9_MUL[c][x] for x in p)] = i

    def to_perm(m):
        return tuple(canon[_mat_vec(m, p)] for p in noniso)

    gen_perms = []
    seen_g = set()
    for m in _su33_generators():
        pm = to_perm(m)
        if pm not in seen_g:
            seen_g.add(pm)
            gen_perms.append(pm)
    ident = tuple(range(63))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gen_perms:
                c = tuple(g[h[x]] for x in range(63))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    assert len(seen) == 6048, len(seen)
    return sorted(seen), gen_perms


def _find_l27(elems):
    """A PSL(2,7) subgroup of order 168: a (2,3)-generated subgroup with
    product of order 7 that closes at 168 elements."""
    twos = [g for g in elems if _perm_order(g) == 2]
    threes = [g for g in elems if _perm_order(g) == 3]
    for a in twos[:60]:
        for b in threes:
            c = tuple(a[b[x]] for x in range(63))
            if _perm_order(c) != 7:
                continue
            sub = _closure((a, b), 168)
            if sub is not None and len(sub) == 168:
                return sorted(sub)
    raise RuntimeError("no PSL(2,7) subgroup found")


def hall_janko() -> Graph:
    elems, gens = _su33_on_nonisotropic()
    sub = _find_l27(elems)
    elem_idx = {g: i for i, g in enumerate(elems)}

    # 36 cosets g*sub
    def coset_key(g):
        return min(elem_idx[tuple(g[h[x]] for x in range(63))] for h in sub)

    key_of = [0] * len(elems)
    for g in elems:
        key_of[elem_idx[g]] = coset_key(g)
    coset_ids = sorted(set(key_of))
    assert len(coset_ids) == 36, len(coset_ids)
    cid = {k: i for i, k in enumerate(coset_ids)}

    def act_on_cosets(h):
        out = [0] * 36
        for k in coset_ids:
            g = elems[k]
            img = tuple(h[g[x]] for x in range(63))
            out[cid[k]] = cid[key_of[elem_idx[img]]]
        return out

    gen_coset = [act_on_cosets(h) for h in gens]
    sub_coset = [act_on_cosets(h) for h in sub]

    # orbits of sub on the 36 cosets: expect sizes 1 + 14 + 21
    orbit_root = [-1] * 36
    for s in range(36):
        if orbit_root[s] >= 0:
            continue
        comp = {s}
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for act in sub_coset:
                    y = act[x]
                    if y not in comp:
                        comp.add(y)
                        nxt.append(y)
            frontier = nxt
        for x in comp:
            orbit_root[x] = s
    home = cid[key_of[elem_idx[tuple(range(63))]]]
    suborbits = {}
    for x in range(36):
        suborbits.setdefault(orbit_root[x], set()).add(x)
    nontrivial = [o for o in suborbits.values() if home not in o]
    # the 14-valent orbit union: one size-14 suborbit, or two of size 7
    # when the coset action has rank 4
    a_seeds = []
    for r in range(1, len(nontrivial) + 1):
        for combo in itertools.combinations(nontrivial, r):
            if sum(len(o) for o in combo) == 14:
                seed = set()
                for o in combo:
                    seed |= o
                a_seeds.append(seed)
    assert a_seeds, sorted(len(o) for o in suborbits.values())

    # A-graph on the 36 cosets: orbit closure of {home} x orb14
    def orbital_edges(seed_pairs, actions, n):
        edges = set()
        work = []
        for u, v in seed_pairs:
            e = (min(u, v), max(u, v))
            if e not in edges:
                edges.add(e)
                work.append(e)
        while work:
            nxt = []
            for u, v in work:
                for act in actions:
                    e = (min(act[u], act[v]), max(act[u], act[v]))
                    if e not in edges:
                        edges.add(e)
                        nxt.append(e)
            work = nxt
        return edges

    a_cands = []
    for seed in a_seeds:
        edges = orbital_edges([(home, x) for x in seed], gen_coset, 36)
        deg = [0] * 36
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if set(deg) == {14} and edges not in a_cands:
            a_cands.append(edges)
    assert a_cands

    # orbits of sub on the 63 points; the union of size 21 links a coset
    # to its B-side neighbors
    pt_orbits = {}
    root = [-1] * 63
    for s in range(63):
        if root[s] >= 0:
            continue
        comp = {s}
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for h in sub:
                    y = h[x]
                    if y not in comp:
                        comp.add(y)
                        nxt.append(y)
            frontier = nxt
        for x in comp:
            root[x] = s
    for x in range(63):
        pt_orbits.setdefault(root[x], set()).add(x)
    pt_sizes = sorted(len(o) for o in pt_orbits.values())

    ab_candidates = []
    orbs = list(pt_orbits.values())
    for r in range(1, len(orbs) + 1):
        for combo in itertools.combinations(orbs, r):
            if sum(len(o) for o in combo) == 21:
                union = set()
                for o in combo:
                    union |= o
                ab_candidates.append(union)
    assert ab_candidates, pt_sizes

    # orbits of the point stabilizer of point 0 on the 63 points, for the
    # B-graph: unions with valency 24
    stab0 = [g for g in elems if g[0] == 0]
    assert len(stab0) == 96
    rootp = [-1] * 63
    for s in range(63):
        if rootp[s] >= 0:
            continue
        comp = {s}
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for h in stab0:
                    y = h[x]
                    if y not in comp:
                        comp.add(y)
                        nxt.append(y)
            frontier = nxt
        for x in comp:
            rootp[x] = s
    stab_orbits = [o for o in
                   ({x for x in range(63) if rootp[x] == r}
                    for r in sorted(set(rootp))) if 0 not in o]
    bb_candidates = []
    for r in range(1, len(stab_orbits) + 1):
        for combo in itertools.combinations(stab_orbits, r):
            if sum(len(o) for o in combo) == 24:
                seed = set()
                for o in combo:
                    seed |= o
                bb_candidates.append(seed)
    assert bb_candidates

    # assemble candidates; keep the one that certifies as SRG(100,36,14,12)
    ab_sets = []
    for ab_set in ab_candidates:
        # A-B edges: coset with representative g joins points g(ab_set)
        ab_edges = set()
        for k in coset_ids:
            g = elems[k]
            ci = cid[k]
            for p in ab_set:
                ab_edges.add((ci, g[p]))
        # each coset must reach exactly 21 points, each point 12 cosets
        from_c = {}
        from_p = {}
        for ci, p in ab_edges:
            from_c[ci] = from_c.get(ci, 0) + 1
            from_p[p] = from_p.get(p, 0) + 1
        if set(from_c.values()) == {21} and set(from_p.values()) == {12}:
            ab_sets.append(ab_edges)
    bb_sets = []
    for bb_seed in bb_candidates:
        bb_edges = orbital_edges([(0, x) for x in bb_seed], gens, 63)
        deg = [0] * 63
        for u, v in bb_edges:
            deg[u] += 1
            deg[v] += 1
        if set(deg) == {24} and bb_edges not in bb_sets:
            bb_sets.append(bb_edges)
    for a_edges in a_cands:
        for ab_edges in ab_sets:
            for bb_edges in bb_sets:
                a = np.zeros((100, 100), dtype=bool)
                for x in range(36):                  # hub to all of A
                    a[0, 1 + x] = a[1 + x, 0] = True
                for u, v in a_edges:
                    a[1 + u, 1 + v] = a[1 + v, 1 + u] = True
                for ci, p in ab_edges:
                    a[1 + ci, 37 + p] = a[37 + p, 1 + ci] = True
                for u, v in bb_edges:
                    a[37 + u, 37 + v] = a[37 + v, 37 + u] = True
                g100 = Graph(a)
                p = srg_check(g100)
                if p is not None and p.as_tuple() == (100, 36, 14, 12):
                    return g100
    raise RuntimeError("no orbital combination certified as Hall-Janko")


# ---------------------------------------------------------------------
# certification and output
# ---------------------------------------------------------------------


def _expected_theta(p: SrgParams):
    t, tc = theta_srg(p)
    out = {}
    if isinstance(t, Fraction) and t.denominator == 1:
        out["theta"] = int(t)
    if isinstance(tc, Fraction) and tc.denominator == 1:
        out["theta_complement"] = int(tc)
    return out


def _certify_srg(name, g, want_params):
    p = srg_check(g)
    assert p is not None, f"{name}: not strongly regular"
    assert p.as_tuple() == want_params, f"{name}: got {p.as_tuple()}"
    s = eigenvalues(g)
    p1, p2 = p.eigenvalues()
    got = sorted(v for v, _ in s.groups)
    want = sorted([float(p.d), p1, p2])
    assert all(abs(a - b) < 1e-8 for a, b in zip(got, want)), (name, got)
    return p


FIXTURES = {}


def fixture(name, srg=None, flags=None, expected=None, source="", solve=()):
    def wrap(fn):
        FIXTURES[name] = {
            "builder": fn, "srg": srg, "flags": flags or {},
            "expected": expected or {}, "source": source, "solve": solve,
        }
        return fn
    return wrap


fixture("hoffman_singleton", srg=(50, 7, 0, 1),
        flags={"vertex_transitive": True, "edge_transitive": True},
        expected={"omega": 2, "chi": 4},
        source="five pentagons joined to five pentagrams over Z5",
        solve=("alpha", "omega"))(hoffman_singleton)
fixture("schlafli", srg=(27, 16, 10, 8),
        flags={"vertex_transitive": True, "edge_transitive": True},
        expected={"chi": 9},
        source="non-intersection graph of the 27 lines on a cubic surface",
        solve=("alpha", "omega", "chi"))(schlafli)
fixture("gosset", srg=None,
        flags={"vertex_transitive": True, "edge_transitive": True},
        expected={"chi": 14},
        source="signed 2-subsets of an 8-set (the 56 rays of the E7 polytope)",
        solve=("alpha", "omega"))(gosset)
fixture("chang1", srg=(28, 12, 6, 4),
        source="Seidel switching of the triangular graph T(8) about a perfect matching",
        solve=("alpha", "omega", "chi"))(lambda: chang(1))
fixture("chang2", srg=(28, 12, 6, 4),
        source="Seidel switching of T(8) about an 8-cycle",
        solve=("alpha", "omega", "chi"))(lambda: chang(2))
fixture("chang3", srg=(28, 12, 6, 4),
        source="Seidel switching of T(8) about a triangle plus a pentagon",
        solve=("alpha", "omega", "chi"))(lambda: chang(3))
fixture("m22", srg=(77, 16, 0, 4),
        flags={"vertex_transitive": True, "edge_transitive": True},
        expected={"omega": 2},
        source="disjointness graph of the 77 blocks of the Steiner system S(3,6,22)",
        solve=("alpha",))(m22_graph)
fixture("gewirtz", srg=(56, 10, 0, 2),
        flags={"vertex_transitive": True, "edge_transitive": True},
        expected={"omega": 2},
        source="disjointness graph of one 56-orbit of hyperovals in PG(2,4)",
        solve=("alpha",))(gewirtz)
fixture("cameron", srg=(231, 30, 9, 3),
        flags={"vertex_transitive": True, "edge_transitive": True},
        source="pairs of S(3,6,22) points, joined when disjoint inside a common block",
        solve=())(cameron)
fixture("perkel", srg=None,
        flags={"vertex_transitive": True, "edge_transitive": True},
        expected={"omega": 2, "chi": 3},
        source="valency-6 orbital of PSL(2,19) on the 57 cosets of an icosahedral subgroup",
        solve=("alpha", "omega", "chi"))(perkel)
fixture("hall_janko", srg=(100, 36, 14, 12),
        flags={"vertex_transitive": True, "edge_transitive": True},
        source="1 + 36 + 63 orbital assembly over the special unitary group of degree 3 over F9",
        solve=("alpha", "omega"))(hall_janko)


def build(names=None):
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    manifest_path = FIXTURE_DIR / "manifest.json"
    manifest = {"fixtures": []}
    if manifest_path.exists():
        manifest = json.loads(manifest_path.read_text())
    todo = names or list(FIXTURES)
    shared_blocks = None
    for name in todo:
        spec = FIXTURES[name]
        t0 = time.time()
        print(f"[{name}] building...", flush=True)
        if name in ("m22", "gewirtz", "cameron"):
            if shared_blocks is None:
                shared_blocks = steiner_3_6_22()
            g = spec["builder"](shared_blocks)
        else:
            g = spec["builder"]()
        entry = {
            "name": name,
            "file": f"{name}.g6",
            "order": g.n,
            "srg": list(spec["srg"]) if spec["srg"] else None,
            "flags": spec["flags"],
            "expected": dict(spec["expected"]),
            "source": spec["source"],
            "description": spec["source"],
        }
        if spec["srg"]:
            p = _certify_srg(name, g, tuple(spec["srg"]))
            entry["expected"].update(_expected_theta(p))
        else:
            assert srg_check(g) is None, f"{name}: unexpectedly strongly regular"
        if "alpha" in spec["solve"]:
            r = independence_number(g, budget=300.0)
            assert r.status == "exact", f"{name}: alpha timed out"
            entry["expected"]["alpha"] = r.value
            print(f"  alpha = {r.value} ({r.elapsed:.1f}s)")
        if "omega" in spec["solve"]:
            r = clique_number(g, budget=300.0)
            assert r.status == "exact", f"{name}: omega timed out"
            entry["expected"]["omega"] = r.value
            print(f"  omega = {r.value} ({r.elapsed:.1f}s)")
        if "chi" in spec["solve"]:
            r = chromatic_number(g, budget=300.0)
            assert r.status == "exact", f"{name}: chi timed out"
            if "chi" in spec["expected"]:
                assert r.value == spec["expected"]["chi"], \
                    f"{name}: chi = {r.value}"
            entry["expected"]["chi"] = r.value
            print(f"  chi = {r.value} ({r.elapsed:.1f}s)")
        for k, v in spec["expected"].items():
            if k in entry["expected"] and entry["expected"][k] != v:
                raise AssertionError(f"{name}: {k} mismatch")
        (FIXTURE_DIR / entry["file"]).write_text(to_graph6(g) + "\n")
        manifest["fixtures"] = [e for e in manifest["fixtures"]
                                if e["name"] != name]
        manifest["fixtures"].append(entry)
        manifest["fixtures"].sort(key=lambda e: e["name"])
        manifest_path.write_text(json.dumps(manifest, indent=2) + "\n")
        print(f"[{name}] done in {time.time() - t0:.1f}s: n={g.n}, "
              f"m={g.edge_count()}")


if __name__ == "__main__":
    build(sys.argv[1:] or None)
