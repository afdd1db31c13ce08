"""Builders for every presentation family, plus the homomorphisms between
them.

Families: standard Coxeter, Bourbaki/Moore (vertex generators R_i),
edge-generator presentations (one generator per oriented edge of a
connected extension), Carmichael-style presentations, the VV variant for
type A, the spinor extensions (tilde and tilde-prime, Bourbaki and edge
styles), and the universal central extensions of A5+ and A6+.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coxeter import (CoxeterMatrix, CoxeterGraph, ConnectedExtension, INFINITY,
                      graph_from_matrix, connected_extension, cycle_basis,
                      standard_matrix)
from .words import Word, Presentation, commutator
from . import engine


class BuildError(ValueError):
    pass


# ---------------------------------------------------------------------------
# plain Coxeter and Bourbaki presentations

def coxeter_presentation(m: CoxeterMatrix) -> Presentation:
    """Generators s0..s{n-1}; relators (s_i s_j)^m_ij for i <= j, infinite
    labels omitted."""
    n = m.n
    gens = tuple(f"s{i}" for i in range(n))
    relators = []
    for i in range(n):
        for j in range(i, n):
            mij = m.entry(i, j)
            if mij == INFINITY:
                continue
            relators.append((Word.gen(i) * Word.gen(j)) ** mij)
    return Presentation(gens, tuple(relators))


def bourbaki_presentation(m: CoxeterMatrix, base: int = 0) -> Presentation:
    """Generators R_i = s_base s_i for i != base; relators R_i^m_{base,i}
    and (R_i^-1 R_j)^m_ij."""
    n = m.n
    if not 0 <= base < n:
        raise BuildError(f"base vertex {base} out of range")
    verts = [i for i in range(n) if i != base]
    gens = tuple(f"R{v}" for v in verts)
    pos = {v: k for k, v in enumerate(verts)}
    relators = []
    for v in verts:
        mv = m.entry(base, v)
        if mv != INFINITY:
            relators.append(Word.gen(pos[v]) ** mv)
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            mij = m.entry(verts[a], verts[b])
            if mij == INFINITY:
                continue
            relators.append((Word.gen(pos[verts[a]], -1) * Word.gen(pos[verts[b]])) ** mij)
    return Presentation(gens, tuple(relators))


# ---------------------------------------------------------------------------
# edge presentations

@dataclass(frozen=True)
class EdgeGeneratorMap:
    """Bijection between oriented edges (i<j) of an extension and generators."""

    extension: ConnectedExtension
    edges: tuple[tuple[int, int], ...]  # sorted (i, j); generator k is edges[k]
    _pos: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_pos", {e: k for k, e in enumerate(self.edges)})

    def gen_word(self, p, q) -> Word:
        """Word for the oriented-edge symbol r_pq: the generator if p < q,
        its formal inverse if p > q."""
        if p < q:
            return Word.gen(self._pos[(p, q)])
        return Word.gen(self._pos[(q, p)], -1)

    def generator_names(self):
        return tuple(f"r{i}_{j}" for i, j in self.edges)


def _path_words(ext: ConnectedExtension, length):
    """Simple paths of the given edge count, first vertex < last vertex,
    in deterministic order."""
    adj = {v: sorted(ws) for v, ws in ext.adjacency().items()}
    paths = []

    def grow(path):
        if len(path) == length + 1:
            if path[0] < path[-1]:
                paths.append(tuple(path))
            return
        for w in adj[path[-1]]:
            if w not in path:
                grow(path + [w])

    for v in range(ext.n):
        grow([v])
    paths.sort()
    return paths


def edge_presentation(ext: ConnectedExtension):
    """Edge-generator presentation of the alternating subgroup.

    Relator families, in order: edge powers, cycle relators for a
    fundamental cycle basis, squared 2-paths, squared 3-paths, and
    commutators of not-connected generator pairs.
    """
    edges = [(i, j) for i, j, _, _ in ext.all_edges()]
    emap = EdgeGeneratorMap(ext, tuple(edges))
    labels = {(i, j): (2 if virt else lab) for i, j, lab, virt in ext.all_edges()}
    m = ext.graph.matrix
    relators = []
    for k, (i, j) in enumerate(edges):
        lab = labels[(i, j)]
        if lab != INFINITY:
            relators.append(Word.gen(k) ** lab)
    for cyc in cycle_basis(ext):
        w = Word()
        for p, q in zip(cyc, cyc[1:]):
            w = w * emap.gen_word(p, q)
        relators.append(w)
    for i, j, k in _path_words(ext, 2):
        if m.entry(i, k) == 2:
            relators.append((emap.gen_word(i, j) * emap.gen_word(j, k)) ** 2)
    for i, j, k, l in _path_words(ext, 3):
        if m.entry(i, l) == 2:
            relators.append((emap.gen_word(i, j) * emap.gen_word(j, k)
                             * emap.gen_word(k, l)) ** 2)
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            if _not_connected(ext, edges[a], edges[b]):
                relators.append(commutator(Word.gen(a), Word.gen(b)))
    p = Presentation(emap.generator_names(), tuple(relators))
    return p, emap


def _not_connected(ext, e1, e2):
    if set(e1) & set(e2):
        return False
    return not any(ext.connected(u, v) for u in e1 for v in e2)


def edge_presentation_for_matrix(m: CoxeterMatrix):
    return edge_presentation(connected_extension(graph_from_matrix(m)))


# ---------------------------------------------------------------------------
# chain presentations (types A, B, D in three variants)

_CHAIN_MINIMUM = {
    ("A", "carmichael"): 2, ("A", "bourbaki"): 2, ("A", "edge"): 2,
    ("B", "carmichael"): 2, ("B", "bourbaki"): 2, ("B", "edge"): 2,
    ("D", "carmichael"): 3, ("D", "bourbaki"): 3, ("D", "edge"): 3,
}


def chain_presentation(family: str, variant: str, n: int) -> Presentation:
    """The displayed A/B/D presentation in the given variant at rank n.

    Generators are a1.., R1.., or r1.. (n-1 of them).
    """
    family = family.upper()
    if (family, variant) not in _CHAIN_MINIMUM:
        raise BuildError(f"unsupported chain ({family}, {variant})")
    if n < _CHAIN_MINIMUM[(family, variant)]:
        raise BuildError(f"rank {n} below minimum for ({family}, {variant})")
    g = lambda i, k=1: Word.gen(i - 1, k)  # 1-based generator helper
    rel = []
    if variant == "carmichael":
        names = tuple(f"a{i}" for i in range(1, n))
        if family == "A":
            rel += [g(i) ** 3 for i in range(1, n)]
            rel += [(g(i) * g(j)) ** 2 for i in range(1, n) for j in range(i + 1, n)]
        elif family == "B":
            rel += [g(i) ** 4 for i in range(1, n)]
            rel += [(g(1) * g(i)) ** 3 for i in range(2, n)]
            rel += [(g(1, 2) * g(i)) ** 2 for i in range(2, n)]
            rel += [(g(1) * g(i) * g(1) * g(j)) ** 2
                    for i in range(2, n) for j in range(i + 1, n)]
        else:
            rel += [g(i) ** 3 for i in range(1, n)]
            rel += [(g(1) * g(i)) ** 2 for i in range(2, n)]
            rel += [(g(2, 2) * g(i)) ** 2 for i in range(3, n)]
            rel += [(g(i) * g(j)) ** 2 for i in range(3, n) for j in range(i + 1, n)]
    elif variant == "bourbaki":
        return _rename(bourbaki_presentation(standard_matrix(family, n), 0),
                       tuple(f"R{i}" for i in range(1, n)))
    elif variant == "edge":
        names = tuple(f"r{i}" for i in range(1, n))
        if family == "A":
            rel += [g(i) ** 3 for i in range(1, n)]
            rel += [(g(i) * g(i + 1)) ** 2 for i in range(1, n - 1)]
            rel += [(g(i) * g(i + 1) * g(i + 2)) ** 2 for i in range(1, n - 2)]
            rel += [commutator(g(i), g(j)) for i in range(1, n)
                    for j in range(i + 3, n)]
        elif family == "B":
            rel += [g(1) ** 4]
            rel += [g(i) ** 3 for i in range(2, n)]
            rel += [(g(i) * g(i + 1)) ** 2 for i in range(1, n - 1)]
            rel += [(g(i) * g(i + 1) * g(i + 2)) ** 2 for i in range(1, n - 2)]
            rel += [commutator(g(i), g(j)) for i in range(1, n)
                    for j in range(i + 3, n)]
        else:
            rel += [g(i) ** 3 for i in range(1, n)]
            if n >= 3:
                rel += [(g(1) * g(2, 2)) ** 2]
            if n >= 4:
                rel += [(g(1) * g(3)) ** 2]
            rel += [(g(i) * g(i + 1)) ** 2 for i in range(2, n - 1)]
            if n >= 5:
                rel += [(g(1) * g(3) * g(4)) ** 2]
            rel += [(g(i) * g(i + 1) * g(i + 2)) ** 2 for i in range(2, n - 2)]
            rel += [commutator(g(1), g(i)) for i in range(5, n)]
            rel += [commutator(g(i), g(j)) for i in range(2, n)
                    for j in range(i + 3, n)]
    else:
        raise BuildError(f"unknown variant {variant!r}")
    return Presentation(names, tuple(rel))


def _rename(p: Presentation, names):
    if len(names) != p.rank:
        raise BuildError("rename arity mismatch")
    return Presentation(names, p.relators, p.central)


def vv_presentation(n: int) -> Presentation:
    """The type-A variant with the squared 3-path relator replaced by
    rho_i rho_{i+1}^2 rho_{i+2} = rho_{i+2} rho_i."""
    if n < 2:
        raise BuildError("vv presentation needs n >= 2")
    g = lambda i, k=1: Word.gen(i - 1, k)
    rel = [g(i) ** 3 for i in range(1, n)]
    rel += [(g(i) * g(i + 1)) ** 2 for i in range(1, n - 1)]
    rel += [g(i) * g(i + 1, 2) * g(i + 2) * g(i, -1) * g(i + 2, -1)
            for i in range(1, n - 2)]
    rel += [commutator(g(i), g(j)) for i in range(1, n) for j in range(i + 3, n)]
    return Presentation(tuple(f"rho{i}" for i in range(1, n)), tuple(rel))


def carmichael_generators(family: str, n: int):
    """Carmichael-style generator words over the Coxeter generators s_i.

    Type A/B: a1 = s0 s1, a_i = s_i a_{i-1} s_i.  Type D (edge (0,2)):
    a1 = s0 s2, a2 = s1 a1 s1, a3 = s3 a1 s3, a_i = s_i a_{i-1} s_i.
    """
    family = family.upper()
    s = lambda i: Word.gen(i)
    if family in ("A", "B"):
        if n < 2:
            raise BuildError("need rank >= 2")
        words = [s(0) * s(1)]
        for i in range(2, n):
            words.append(s(i) * words[-1] * s(i))
        return words
    if family == "D":
        if n < 3:
            raise BuildError("type D needs rank >= 3")
        words = [s(0) * s(2)]
        if n >= 3:
            words.append(s(1) * words[0] * s(1))
        if n >= 4:
            words.append(s(3) * words[0] * s(3))
        for i in range(4, n):
            words.append(s(i) * words[-1] * s(i))
        return words
    raise BuildError(f"unsupported family {family!r}")


# ---------------------------------------------------------------------------
# spinor extensions

def spinor_presentation(m: CoxeterMatrix, variant: str) -> Presentation:
    """Central extension of the full Coxeter group by alpha (order 2).

    tilde: (ts_i ts_j)^m_ij = 1 for odd m_ij, = alpha for even.
    tilde_prime: every (ts_i ts_j)^m_ij = alpha.
    """
    n = m.n
    gens = tuple(f"ts{i}" for i in range(n)) + ("alpha",)
    alpha = Word.gen(n)
    relators = []
    for i in range(n):
        for j in range(i, n):
            mij = m.entry(i, j)
            if mij == INFINITY:
                continue
            braid = (Word.gen(i) * Word.gen(j)) ** mij
            if variant == "tilde":
                relators.append(braid if mij % 2 else braid * alpha.inverse())
            elif variant == "tilde_prime":
                relators.append(braid * alpha.inverse())
            else:
                raise BuildError(f"unknown spinor variant {variant!r}")
    return Presentation.build(gens, relators, central=(("alpha", 2),))


def spinor_plus_presentation(m: CoxeterMatrix, style: str, variant: str) -> Presentation:
    """Spinor extension of the alternating subgroup, with central z (tilde)
    or zp (tilde_prime); Bourbaki or edge style."""
    if variant not in ("tilde", "tilde_prime"):
        raise BuildError(f"unknown spinor variant {variant!r}")
    zname = "z" if variant == "tilde" else "zp"

    def power_rhs(mij):
        # z^(m-1) for tilde, z for tilde_prime; z^2 = 1 folded in
        k = (mij - 1) % 2 if variant == "tilde" else 1
        return k

    if style == "bourbaki":
        n = m.n
        verts = list(range(1, n))
        gens = tuple(f"tR{v}" for v in verts) + (zname,)
        z = Word.gen(len(verts))
        pos = {v: k for k, v in enumerate(verts)}
        relators = []
        for v in verts:
            mv = m.entry(0, v)
            if mv != INFINITY:
                relators.append(Word.gen(pos[v]) ** mv * z ** (-power_rhs(mv)))
        for a in range(len(verts)):
            for b in range(a + 1, len(verts)):
                mij = m.entry(verts[a], verts[b])
                if mij == INFINITY:
                    continue
                relators.append((Word.gen(pos[verts[a]], -1) * Word.gen(pos[verts[b]])) ** mij
                                * z ** (-power_rhs(mij)))
        return Presentation.build(gens, relators, central=((zname, 2),))

    if style != "edge":
        raise BuildError(f"unknown spinor style {style!r}")
    ext = connected_extension(graph_from_matrix(m))
    edges = [(i, j) for i, j, _, _ in ext.all_edges()]
    labels = {(i, j): (2 if virt else lab) for i, j, lab, virt in ext.all_edges()}
    emap = EdgeGeneratorMap(ext, tuple(edges))
    gens = tuple(f"tr{i}_{j}" for i, j in edges) + (zname,)
    z = Word.gen(len(edges))
    relators = []
    for k, (i, j) in enumerate(edges):
        lab = labels[(i, j)]
        if lab != INFINITY:
            relators.append(Word.gen(k) ** lab * z ** (-power_rhs(lab)))
    for cyc in cycle_basis(ext):
        w = Word()
        nedges = len(cyc) - 1
        for p, q in zip(cyc, cyc[1:]):
            w = w * emap.gen_word(p, q)
        rhs = 0 if variant == "tilde" else nedges % 2
        relators.append(w * z ** (-rhs))
    mtx = ext.graph.matrix
    for i, j, k in _path_words(ext, 2):
        if mtx.entry(i, k) == 2:
            relators.append((emap.gen_word(i, j) * emap.gen_word(j, k)) ** 2
                            * z.inverse())
    for i, j, k, l in _path_words(ext, 3):
        if mtx.entry(i, l) == 2:
            relators.append((emap.gen_word(i, j) * emap.gen_word(j, k)
                             * emap.gen_word(k, l)) ** 2 * z.inverse())
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            if _not_connected(ext, edges[a], edges[b]):
                relators.append(commutator(Word.gen(a), Word.gen(b)))
    return Presentation.build(gens, relators, central=((zname, 2),))


def spinor_chain_presentation(family: str, n: int, variant: str = "tilde") -> Presentation:
    """Edge-style spinor presentation with chain generator names tr1..tr{n-1}."""
    p = spinor_plus_presentation(standard_matrix(family, n), "edge", variant)
    zname = p.generators[-1]
    return _rename(p, tuple(f"tr{i}" for i in range(1, n)) + (zname,))


def universal_extension(which: str) -> Presentation:
    """Universal central extensions of A5+ / A6+ (kernel C2 x C3).

    Generators tr1.. plus z (order 2) and zeta (order 3).
    """
    if which not in ("A5", "A6"):
        raise BuildError(f"unknown extension {which!r}")
    n = 5 if which == "A5" else 6
    ngen = n - 1
    names = tuple(f"tr{i}" for i in range(1, n)) + ("z", "zeta")
    g = lambda i, k=1: Word.gen(i - 1, k)
    z = Word.gen(ngen)
    zeta = Word.gen(ngen + 1)
    rel = [g(i) ** 3 for i in range(1, n)]
    if which == "A5":
        rel += [(g(1) * g(2)) ** 2 * z.inverse(),
                (g(2) * g(3)) ** 2 * (z * zeta).inverse(),
                (g(3) * g(4)) ** 2 * z.inverse()]
        rel += [(g(1) * g(2) * g(3)) ** 2 * z.inverse(),
                (g(2) * g(3) * g(4)) ** 2 * z.inverse()]
        # tr1 tr4 = zeta^2 tr4 tr1
        rel += [g(1) * g(4) * g(1, -1) * g(4, -1) * zeta ** (-2)]
    else:
        rel += [(g(i) * g(i + 1)) ** 2 * z.inverse() for i in range(1, 5)]
        rel += [(g(1) * g(2) * g(3)) ** 2 * z.inverse(),
                (g(2) * g(3) * g(4)) ** 2 * (z * zeta).inverse(),
                (g(3) * g(4) * g(5)) ** 2 * z.inverse()]
        rel += [g(1) * g(4) * g(1, -1) * g(4, -1) * zeta.inverse(),
                g(2) * g(5) * g(2, -1) * g(5, -1) * zeta.inverse(),
                g(1) * g(5) * g(1, -1) * g(5, -1) * zeta ** (-2)]
    return Presentation.build(names, rel, central=(("z", 2), ("zeta", 3)))


def quotient_by_generators(p: Presentation, names) -> Presentation:
    """Add relators killing the named generators."""
    extra = tuple(p.gen(name) for name in names)
    return Presentation(p.generators, p.relators + extra, p.central)


# ---------------------------------------------------------------------------
# homomorphisms

@dataclass
class GroupHom:
    """Map between presented groups, given by one target word per source
    generator.  ``verified`` is set by :meth:`verify` only after every
    source relator maps to the target identity."""

    source: Presentation
    target: Presentation
    images: tuple[Word, ...]  # one target word per source generator
    verified: bool = False

    def apply(self, w: Word) -> Word:
        out = Word()
        for x in w:
            img = self.images[abs(x) - 1]
            out = out * (img if x > 0 else img.inverse())
        return out

    def verify(self, target_result=None, cap=engine.DEFAULT_CAP) -> bool:
        """Check all source relators die in the target, via the target's
        regular coset table."""
        if target_result is None:
            target_result = engine.enumerate(self.target, (), cap)
        if not target_result.completed:
            raise BuildError("target enumeration did not complete")
        ok = all(engine.word_in_subgroup(target_result, self.apply(rel))
                 for rel in self.source.relators)
        self.verified = ok
        return ok


def compose(f: GroupHom, g: GroupHom) -> GroupHom:
    """g after f (f applied first)."""
    if f.target.generators != g.source.generators:
        raise BuildError("homs not composable")
    images = tuple(g.apply(w) for w in f.images)
    return GroupHom(f.source, g.target, images)


def is_identity_hom(h: GroupHom, source_result=None, cap=engine.DEFAULT_CAP) -> bool:
    """True iff h fixes every generator modulo the source relations."""
    if source_result is None:
        source_result = engine.enumerate(h.source, (), cap)
    return all(engine.words_equal(source_result, h.images[k], Word.gen(k))
               for k in range(h.source.rank))


def spinor_iso(m: CoxeterMatrix):
    """The isomorphism pair between the tilde and tilde-prime edge-style
    spinor extensions: tr_ij -> zp * tr'_ij, z -> zp (and its inverse)."""
    src = spinor_plus_presentation(m, "edge", "tilde")
    dst = spinor_plus_presentation(m, "edge", "tilde_prime")
    nedges = src.rank - 1
    zp = Word.gen(nedges)
    fwd = GroupHom(src, dst,
                   tuple(zp * Word.gen(k) for k in range(nedges)) + (zp,))
    z = Word.gen(nedges)
    bwd = GroupHom(dst, src,
                   tuple(z * Word.gen(k) for k in range(nedges)) + (z,))
    return fwd, bwd


def bourbaki_edge_homs(m: CoxeterMatrix):
    """The mutually inverse maps phi: edge -> Bourbaki (r_ij -> R_i^-1 R_j,
    with R_0 read as 1) and psi: Bourbaki -> edge (R_i -> product of edge
    generators along the BFS shortest path from vertex 0)."""
    ext = connected_extension(graph_from_matrix(m))
    edge_p, emap = edge_presentation(ext)
    bour_p = bourbaki_presentation(m, 0)

    def R(v):  # word for R_v in the Bourbaki presentation, R_0 = 1
        return Word() if v == 0 else Word.gen(v - 1)

    phi_images = tuple(R(i).inverse() * R(j) for i, j in emap.edges)
    phi = GroupHom(edge_p, bour_p, phi_images)

    # BFS shortest paths from 0 in the extension, smallest-vertex tie-break
    adj = {v: sorted(ws) for v, ws in ext.adjacency().items()}
    parent = {0: None}
    queue = [0]
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                queue.append(w)

    def path_word(v):
        verts = [v]
        while parent[verts[-1]] is not None:
            verts.append(parent[verts[-1]])
        verts.reverse()
        w = Word()
        for p, q in zip(verts, verts[1:]):
            w = w * emap.gen_word(p, q)
        return w

    psi_images = tuple(path_word(v) for v in range(1, m.n))
    psi = GroupHom(bour_p, edge_p, psi_images)
    return phi, psi
