"""Minimal graded free resolutions, complex minimization, syzygy data.

A ``FreeComplex`` stores free modules G_0 .. G_L with maps phi_j : G_j ->
G_{j-1} given as column lists.  ``resolve`` builds a minimal resolution one
kernel at a time: syzygy generators of phi_j are pruned to a minimal
generating set, which keeps every matrix entry inside the irrelevant ideal.
Syzygies use the image convention Omega_i = im(phi_i), with Omega_0 = M.
"""

from .errors import NotHomogeneous
from .groebner import (
    INFINITE,
    SubmodulePresentation,
    column_degree,
    syzygy_generators,
)


def matrix_multiply(A, B, target_rank, ring):
    """Columns of A @ B where A maps G_j -> G_{j-1} and B maps G_{j+1} -> G_j."""
    out = []
    for col in B:
        acc = [ring.zero] * target_rank
        for pos, entry in enumerate(col):
            if entry.is_zero():
                continue
            src = A[pos]
            acc = [a + entry * b for a, b in zip(acc, src)]
        out.append(acc)
    return out


def _copy_matrix(mat):
    return [list(col) for col in mat]


class FreeComplex:
    """A chain complex of free modules over a quotient ring.

    ``maps[j]`` (j = 1..L) is the list of columns of phi_j; each column has
    ``ranks[j-1]`` entries.  ``row_degrees[j]`` carries the grading twists of
    G_j, so column c of phi_j is homogeneous of degree ``row_degrees[j][c]``.
    """

    __slots__ = ("ring", "ranks", "row_degrees", "maps")

    def __init__(self, ring, ranks, row_degrees, maps):
        self.ring = ring
        self.ranks = list(ranks)
        self.row_degrees = [list(d) for d in row_degrees]
        self.maps = [None] + [_copy_matrix(m) for m in maps]
        for j in range(1, len(self.ranks)):
            mat = self.maps[j]
            if len(mat) != self.ranks[j]:
                raise ValueError("phi_%d has %d columns, expected %d" % (j, len(mat), self.ranks[j]))
            for col in mat:
                if len(col) != self.ranks[j - 1]:
                    raise ValueError("phi_%d column length mismatch" % j)

    @property
    def length(self):
        return len(self.ranks) - 1

    def matrix(self, j):
        """Columns of phi_j; the empty matrix outside the stored range."""
        if 1 <= j < len(self.maps):
            return self.maps[j]
        return []

    def rank(self, i):
        if 0 <= i < len(self.ranks):
            return self.ranks[i]
        return 0

    def degrees(self, i):
        if 0 <= i < len(self.row_degrees):
            return self.row_degrees[i]
        return []

    def check_complex(self):
        """Every consecutive composition is zero modulo the defining ideal."""
        ring = self.ring
        for j in range(1, self.length):
            prod = matrix_multiply(self.maps[j], self.maps[j + 1], self.rank(j - 1), ring)
            for col in prod:
                for entry in col:
                    if not ring.is_zero_mod(entry):
                        return False
        return True

    def check_homogeneous(self):
        for j in range(1, len(self.maps)):
            for c, col in enumerate(self.maps[j]):
                deg = column_degree(col, self.row_degrees[j - 1])
                if deg is not None and deg != self.row_degrees[j][c]:
                    raise NotHomogeneous(
                        "column %d of phi_%d has degree %s, twist says %d"
                        % (c, j, deg, self.row_degrees[j][c])
                    )
        return True

    def has_unit_entry(self):
        return self._find_unit() is not None

    def _find_unit(self):
        for j in range(1, len(self.maps)):
            for c, col in enumerate(self.maps[j]):
                for r, entry in enumerate(col):
                    if entry.constant_term():
                        return (j, r, c)
        return None

    def copy(self):
        return FreeComplex(self.ring, self.ranks, self.row_degrees, self.maps[1:])

    def __repr__(self):
        return "<complex of free modules, ranks %s>" % (tuple(self.ranks),)


def minimize(complex_):
    """Split off unit entries by row/column operations; homology is unchanged."""
    C = complex_.copy()
    ring = C.ring
    while True:
        found = C._find_unit()
        if found is None:
            return C
        j, r, c = found
        mat = C.maps[j]
        u = mat[c][r].constant_term()
        w = ring.inverse(u)
        nxt = C.maps[j + 1] if j + 1 < len(C.maps) else None
        prv = C.maps[j - 1] if j - 1 >= 1 else None
        # Clear row r with column operations; mirror as row operations on phi_{j+1}.
        for c2 in range(len(mat)):
            if c2 == c:
                continue
            a = mat[c2][r]
            if a.is_zero():
                continue
            t = a * w
            mat[c2] = [x - t * y for x, y in zip(mat[c2], mat[c])]
            if nxt is not None:
                for col in nxt:
                    col[c] = col[c] + t * col[c2]
        # Clear column c with row operations; mirror as column operations on phi_{j-1}.
        for r2 in range(C.ranks[j - 1]):
            if r2 == r:
                continue
            b = mat[c][r2]
            if b.is_zero():
                continue
            s = b * w
            for col in mat:
                col[r2] = col[r2] - s * col[r]
            if prv is not None:
                prv[r] = [x + s * y for x, y in zip(prv[r], prv[r2])]
        # Drop the split summands.
        del mat[c]
        for col in mat:
            del col[r]
        if nxt is not None:
            for col in nxt:
                del col[c]
        if prv is not None:
            del prv[r]
        C.ranks[j] -= 1
        C.ranks[j - 1] -= 1
        del C.row_degrees[j][c]
        del C.row_degrees[j - 1][r]


class MinimalResolution(FreeComplex):
    """A minimal free resolution through a requested homological degree.

    ``betti`` equals the ranks; minimality means no matrix entry has a
    nonzero constant term, which ``resolve`` guarantees by pruning each
    kernel to a minimal generating set.
    """

    __slots__ = ("module", "minimal")

    def __init__(self, ring, ranks, row_degrees, maps, module, minimal):
        super().__init__(ring, ranks, row_degrees, maps)
        self.module = module
        self.minimal = minimal

    @property
    def betti(self):
        return tuple(self.ranks)

    def syzygy(self, i):
        return _syzygy_from_resolution(self, i)

    def __repr__(self):
        return "<%sresolution, betti %s>" % ("minimal " if self.minimal else "", self.betti)


class _ResolutionState:
    """Growing resolution data cached on a module presentation."""

    __slots__ = ("ranks", "row_degrees", "maps", "terminated")

    def __init__(self):
        self.ranks = []
        self.row_degrees = []
        self.maps = [None]
        self.terminated = False


def _minimize_presentation(ring, rank, row_degrees, columns):
    """Split unit entries out of a presentation; returns (rank, degrees, columns)."""
    pres = FreeComplex(
        ring,
        [rank, len(columns)],
        [list(row_degrees), [column_degree(c, row_degrees) or 0 for c in columns]],
        [columns],
    )
    reduced = minimize(pres)
    return reduced.ranks[0], reduced.row_degrees[0], reduced.maps[1]


def resolve(module, steps, minimize_flag=True):
    """Minimal free resolution of a cokernel presentation through ``steps``.

    The returned complex has ranks G_0..G_steps and matrices phi_1..phi_steps;
    exactness ker(phi_j) = im(phi_{j+1}) holds for j < steps by construction.
    With ``minimize_flag`` off, raw syzygy generators are kept, which yields a
    generally non-minimal resolution (useful as input to :func:`minimize`).
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    if module.mode != "cokernel":
        raise ValueError("resolve expects a cokernel presentation")
    if not minimize_flag:
        return _resolve_fresh(module, steps, False)
    state = module._resolution
    if state is None:
        state = _init_state(module)
        module._resolution = state
    _extend_state(module.ring, state, steps)
    return _truncate(module, state, steps)


def _init_state(module):
    ring = module.ring
    state = _ResolutionState()
    mingens = SubmodulePresentation(
        ring, module.columns, module.ambient_rank, module.row_degrees
    ).minimal_generators()
    rank, rowdegs, cols = _minimize_presentation(
        ring, module.ambient_rank, module.row_degrees, mingens
    )
    state.ranks = [rank]
    state.row_degrees = [list(rowdegs)]
    if rank == 0:
        state.terminated = True
        return state
    state.maps.append(cols)
    state.ranks.append(len(cols))
    state.row_degrees.append([column_degree(c, rowdegs) for c in cols])
    if not cols:
        state.terminated = True
    return state


def _extend_state(ring, state, steps):
    while len(state.ranks) - 1 < steps and not state.terminated:
        j = len(state.ranks) - 1
        ker = syzygy_generators(
            state.maps[j],
            ring,
            ambient_rank=state.ranks[j - 1],
            row_degrees=state.row_degrees[j - 1],
            over_quotient=True,
        )
        span = SubmodulePresentation(ring, ker, state.ranks[j], state.row_degrees[j])
        cols = span.minimal_generators()
        state.maps.append(cols)
        state.ranks.append(len(cols))
        state.row_degrees.append([column_degree(c, state.row_degrees[j]) for c in cols])
        if not cols:
            state.terminated = True


def _truncate(module, state, steps):
    ranks = list(state.ranks[: steps + 1])
    rowdegs = [list(d) for d in state.row_degrees[: steps + 1]]
    maps = [state.maps[j] for j in range(1, min(len(state.maps), steps + 1))]
    while len(ranks) < steps + 1:
        ranks.append(0)
        rowdegs.append([])
        maps.append([])
    return MinimalResolution(module.ring, ranks, rowdegs, maps, module, True)


def _resolve_fresh(module, steps, minimize_flag):
    ring = module.ring
    cols = [c for c in module.columns if any(not p.is_zero() for p in c)]
    rank = module.ambient_rank
    rowdegs = list(module.row_degrees)
    ranks = [rank]
    degs = [rowdegs]
    maps = []
    if cols or rank:
        maps.append(cols)
        ranks.append(len(cols))
        degs.append([column_degree(c, rowdegs) for c in cols])
    terminated = not cols
    while len(ranks) - 1 < steps and not terminated:
        j = len(ranks) - 1
        ker = syzygy_generators(
            maps[j - 1], ring, ambient_rank=ranks[j - 1], row_degrees=degs[j - 1], over_quotient=True
        )
        if minimize_flag:
            ker = SubmodulePresentation(ring, ker, ranks[j], degs[j]).minimal_generators()
        maps.append(ker)
        ranks.append(len(ker))
        degs.append([column_degree(c, degs[j]) for c in ker])
        if not ker:
            terminated = True
    while len(ranks) < steps + 1:
        ranks.append(0)
        degs.append([])
        maps.append([])
    return MinimalResolution(ring, ranks[: steps + 1], degs[: steps + 1], maps[:steps], module, minimize_flag)


class SyzygyPresentation:
    """Omega_i = im(phi_i) with its cached length and dimension.

    The numerical data comes from the isomorphism Omega_i = coker(phi_{i+1})
    inside G_i, so a resolution through step i+1 is required.
    """

    __slots__ = ("index", "ambient_rank", "row_degrees", "generators", "presentation", "length", "dimension")

    def __init__(self, index, ambient_rank, row_degrees, generators, presentation):
        self.index = index
        self.ambient_rank = ambient_rank
        self.row_degrees = row_degrees
        self.generators = generators
        self.presentation = presentation
        self.length = presentation.length()
        self.dimension = presentation.dimension()

    def __repr__(self):
        lam = "oo" if self.length is INFINITE else self.length
        return "<syzygy %d: %d generators, length %s, dim %d>" % (
            self.index,
            len(self.generators),
            lam,
            self.dimension,
        )


def _syzygy_from_resolution(res, i):
    ring = res.ring
    pres = SubmodulePresentation(
        ring, res.matrix(i + 1), res.rank(i), res.degrees(i), "cokernel"
    )
    if i == 0:
        ambient_rank, rowdegs, gens = res.rank(0), res.degrees(0), []
    else:
        ambient_rank, rowdegs, gens = res.rank(i - 1), res.degrees(i - 1), res.matrix(i)
    return SyzygyPresentation(i, ambient_rank, rowdegs, gens, pres)


def syzygy(module, i):
    """Presentation of the i-th syzygy (image convention) of the module."""
    if i < 0:
        raise ValueError("syzygy index must be nonnegative")
    res = resolve(module, i + 1)
    return res.syzygy(i)
