"""Homology lengths of complexes over R; Tor and Ext against Frobenius twists.

The subquotient H = ker(out)/im(in) is presented on the kernel generators K:
columns of the incoming map are lifted through K, and H becomes the cokernel
of those lift coefficients together with the syzygies of K.  A degreewise
linear-algebra oracle recomputes the same lengths one internal degree at a
time and is kept fully independent of the Groebner route.
"""

from .errors import InfiniteLength, LiftFailure
from .frobenius import twist_complex
from .groebner import SubmodulePresentation, column_degree, syzygy_generators
from .resolution import resolve

_coeff_ring_cache = {}


def coefficient_ring(ring, extra_gens):
    """R/(extra) as a fresh quotient ring S/(I + extra); cached by content."""
    from .ring import make_ring

    key = (
        ring.p,
        ring.variables,
        tuple(str(g) for g in ring.ideal_gens),
        tuple(sorted(str(ring.poly(g)) for g in extra_gens)),
    )
    got = _coeff_ring_cache.get(key)
    if got is None:
        gens = [str(g) for g in ring.ideal_gens] + [str(ring.poly(g)) for g in extra_gens]
        got = make_ring(ring.p, ring.variables, gens)
        _coeff_ring_cache[key] = got
    return got


def _convert_columns(cols, ring):
    return [[ring.convert(entry) for entry in col] for col in cols]


def subquotient_presentation(ring, ambient_rank, ambient_degs, out_cols, out_target_degs, in_cols):
    """Present ker(out)/im(in) inside R^ambient_rank as a cokernel.

    ``out_cols`` is the matrix of the outgoing map (None for the zero map to
    the zero module); ``in_cols`` are the incoming images, which must lift
    through the kernel or the input was not a complex.
    """
    if ambient_rank == 0:
        return SubmodulePresentation(ring, [], 0, (), "cokernel")
    if out_cols is None:
        kernel = []
        for pos in range(ambient_rank):
            col = [ring.zero] * ambient_rank
            col[pos] = ring.one
            kernel.append(col)
    else:
        kernel = syzygy_generators(
            out_cols,
            ring,
            ambient_rank=len(out_cols[0]) if out_cols else 0,
            row_degrees=out_target_degs,
            over_quotient=True,
        )
        kernel = SubmodulePresentation(ring, kernel, ambient_rank, ambient_degs).minimal_generators()
    if not kernel:
        from .groebner import _quotient_span

        zero_span = _quotient_span(ring, ambient_rank, ambient_degs)
        for col in in_cols:
            if not zero_span.contains(col):
                raise LiftFailure("incoming column does not lie in the kernel; not a complex")
        return SubmodulePresentation(ring, [], 0, (), "cokernel")
    kspan = SubmodulePresentation(ring, kernel, ambient_rank, ambient_degs)
    lifted = []
    for col in in_cols:
        coeffs = kspan.lift(col)
        if coeffs is None:
            raise LiftFailure("incoming column does not lie in the kernel; not a complex")
        lifted.append(coeffs)
    relations = lifted + syzygy_generators(
        kernel, ring, ambient_rank=ambient_rank, row_degrees=ambient_degs, over_quotient=True
    )
    degs = [column_degree(c, ambient_degs) or 0 for c in kernel]
    return SubmodulePresentation(ring, relations, len(kernel), degs, "cokernel")


def homology_presentation(C, i, ring=None):
    """Cokernel presentation of H_i(C), over C's ring or a quotient of it."""
    base = C.ring
    target = ring or base
    if i < 0 or i > C.length:
        return SubmodulePresentation(target, [], 0, (), "cokernel")
    if i == 0:
        out_cols = None
        out_degs = ()
    else:
        out_cols = _convert_columns(C.matrix(i), target)
        out_degs = C.degrees(i - 1)
    in_cols = _convert_columns(C.matrix(i + 1), target)
    return subquotient_presentation(
        target, C.rank(i), C.degrees(i), out_cols, out_degs, in_cols
    )


def homology_length(C, i, ring=None):
    """Length of H_i(C); Infinite when the homology has positive dimension."""
    return homology_presentation(C, i, ring).length()


def _twisted_resolution(module, steps, e):
    res = resolve(module, steps)
    return twist_complex(res, e)


def tor_length(module, i, e, coefficients="R"):
    """lambda(Tor_i(M, e-th Frobenius twist of N)) for N = R or N = R/p.

    ``coefficients`` is "R" or a list of generators of a homogeneous prime
    containing the defining ideal (primality is the caller's responsibility).
    The length is computed from the bracket-powered minimal resolution, so
    no twist module is ever materialized.
    """
    if module.dimension() > 0:
        raise InfiniteLength("tor_length requires a finite-length module")
    twisted = _twisted_resolution(module, i + 1, e)
    if coefficients == "R":
        return homology_length(twisted, i)
    ring = coefficient_ring(module.ring, coefficients)
    return homology_length(twisted, i, ring)


def _transpose(cols, source_rank):
    """Columns of the dual map: transpose of a column-major matrix."""
    if not cols:
        return [[] for _ in range(source_rank)] if source_rank else []
    target_rank = len(cols[0])
    return [[cols[c][r] for c in range(len(cols))] for r in range(target_rank)]


def ext_length(module, i, e, coefficients="R"):
    """lambda(Ext^i(M, e-th twist of N)) via the transposed bracket complex."""
    if module.dimension() > 0:
        raise InfiniteLength("ext_length requires a finite-length module")
    twisted = _twisted_resolution(module, i + 1, e)
    base = module.ring
    ring = base if coefficients == "R" else coefficient_ring(base, coefficients)
    amb_rank = twisted.rank(i)
    amb_degs = [-d for d in twisted.degrees(i)]
    # out = transpose(phi_{i+1}) from Hom(G_i); in = transpose(phi_i) into Hom(G_i).
    nxt = twisted.matrix(i + 1)
    out_cols = _transpose(_convert_columns(nxt, ring), amb_rank) if nxt else None
    out_degs = [-d for d in twisted.degrees(i + 1)]
    if i == 0:
        in_cols = []
    else:
        in_cols = _transpose(_convert_columns(twisted.matrix(i), ring), twisted.rank(i - 1))
    pres = subquotient_presentation(ring, amb_rank, amb_degs, out_cols, out_degs, in_cols)
    return pres.length()


# -- degreewise linear-algebra oracle ------------------------------------------


def _rank_mod_p(rows, p):
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(cols):
        pivot = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] % p:
                pivot = r
                break
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        inv = pow(rows[pivot_row][col] % p, p - 2, p)
        prow = rows[pivot_row]
        for r in range(pivot_row + 1, len(rows)):
            factor = (rows[r][col] * inv) % p
            if factor:
                rows[r] = [(a - factor * b) % p for a, b in zip(rows[r], prow)]
        pivot_row += 1
        rank += 1
        if pivot_row == len(rows):
            break
    return rank


def _degree_basis(ring, rank, degs, t):
    basis = []
    for k in range(rank):
        d = t - degs[k]
        if d < 0:
            continue
        for m in ring.standard_monomials(d):
            basis.append((k, m))
    return basis


def _degree_matrix(ring, cols, src_basis, tgt_basis_index, tgt_count):
    """F_p matrix of the map on degree slices, rows = target coordinates."""
    matrix = [[0] * len(src_basis) for _ in range(tgt_count)]
    for j, (k, m) in enumerate(src_basis):
        col = cols[k]
        for r, entry in enumerate(col):
            if entry.is_zero():
                continue
            prod = ring.nf(entry.scale_term(1, m))
            for mm, c in prod.terms.items():
                row = tgt_basis_index.get((r, mm))
                if row is None:
                    raise AssertionError("image term escaped the degree slice")
                matrix[row][j] = c
    return matrix


class OracleResult:
    __slots__ = ("value", "stabilized", "degree_bound", "contributions")

    def __init__(self, value, stabilized, degree_bound, contributions):
        self.value = value
        self.stabilized = stabilized
        self.degree_bound = degree_bound
        self.contributions = contributions

    def __repr__(self):
        return "OracleResult(value=%d, stabilized=%s, D=%d)" % (
            self.value,
            self.stabilized,
            self.degree_bound,
        )


def default_oracle_bound(C):
    maxdeg = 0
    for j in range(1, len(C.maps)):
        for col in C.maps[j]:
            for entry in col:
                maxdeg = max(maxdeg, entry.degree())
    return maxdeg * max(C.length, 1) + 10


def degreewise_homology_oracle(C, i, degree_bound=None, window=3, ring=None):
    """Sum over internal degrees of dim ker - dim im at spot i.

    This is linear algebra on standard-monomial coordinates, independent of
    the Groebner subquotient route.  The result carries a flag telling
    whether the last ``window`` degrees contributed nothing.
    """
    base = ring or C.ring
    D = default_oracle_bound(C) if degree_bound is None else degree_bound
    rank_i = C.rank(i)
    degs_i = C.degrees(i)
    out_cols = _convert_columns(C.matrix(i), base) if i >= 1 else None
    in_cols = _convert_columns(C.matrix(i + 1), base)
    rank_prev = C.rank(i - 1) if i >= 1 else 0
    degs_prev = C.degrees(i - 1) if i >= 1 else []
    rank_next = C.rank(i + 1)
    degs_next = C.degrees(i + 1)
    total = 0
    contributions = []
    exhausted = False
    min_deg = min(degs_i + degs_prev + degs_next, default=0)
    all_degs = degs_i + degs_next
    for t in range(min_deg, D + 1):
        src = _degree_basis(base, rank_i, degs_i, t)
        nxt_src = _degree_basis(base, rank_next, degs_next, t)
        if not src and not nxt_src:
            contributions.append(0)
            if t >= max(all_degs, default=0):
                # Standard monomials vanish degreewise-monotonically, so both
                # slices stay empty and every later contribution is zero.
                exhausted = True
                break
            continue
        ker_dim = len(src)
        if out_cols is not None and src:
            tgt = _degree_basis(base, rank_prev, degs_prev, t)
            tgt_index = {b: r for r, b in enumerate(tgt)}
            mat = _degree_matrix(base, out_cols, src, tgt_index, len(tgt))
            ker_dim = len(src) - _rank_mod_p(mat, base.p)
        im_dim = 0
        if in_cols and nxt_src:
            tgt_index = {b: r for r, b in enumerate(src)}
            mat = _degree_matrix(base, in_cols, nxt_src, tgt_index, len(src))
            im_dim = _rank_mod_p(mat, base.p)
        contributions.append(ker_dim - im_dim)
        total += ker_dim - im_dim
    tail = contributions[-window:] if len(contributions) >= window else contributions
    stabilized = exhausted or (bool(tail) and all(c == 0 for c in tail))
    return OracleResult(total, stabilized, D, contributions)


def finite_pd_certificate(module, e, ring_depth):
    """Koh-Lee certificate: depth+1 consecutive vanishing twisted Tors.

    True means Tor_i(M, eR) = 0 for i = t+1 .. 2t+1, which certifies finite
    projective dimension; False decides nothing by itself.
    """
    t = ring_depth
    for i in range(t + 1, 2 * t + 2):
        if tor_length(module, i, e, "R") != 0:
            return False
    return True
