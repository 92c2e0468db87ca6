"""Buchberger engine for submodules of graded free modules over F_p[x]/I.

Module elements are flattened to dictionaries keyed by ``(position, exponents)``
with the position-over-term order (lower position wins, ties broken by
degrevlex).  Computations over a quotient ring reduce to the polynomial ring
by adjoining ``g * e_k`` for every Groebner generator g of the defining ideal
and every ambient position k; syzygies and lifts are then projected back to
the original generator coordinates.
"""

import heapq

from .errors import (
    AmbientMismatch,
    NotHomogeneous,
    ResourceBound,
    ZeroDivisorQuery,
)
from .ring import Polynomial, monomial_divides

INFINITE = float("inf")

MAX_BASIS_SIZE = 20000


def _vec_key(t):
    pos, e = t
    return (-pos, sum(e), tuple(-x for x in reversed(e)))


def column_to_vec(col):
    vec = {}
    for pos, poly in enumerate(col):
        for m, c in poly.terms.items():
            vec[(pos, m)] = c
    return vec


def vec_to_column(vec, rank, ring):
    comps = [{} for _ in range(rank)]
    for (pos, m), c in vec.items():
        comps[pos][m] = c
    return [Polynomial(ring, t) for t in comps]


def column_degree(col, row_degrees):
    """Module degree of a homogeneous column, or None for the zero column."""
    degs = set()
    for pos, poly in enumerate(col):
        for m in poly.terms:
            degs.add(sum(m) + row_degrees[pos])
    if not degs:
        return None
    if len(degs) > 1:
        raise NotHomogeneous("column %s is not homogeneous" % ([str(c) for c in col],))
    return degs.pop()


def _scalar_mul(a, b, p):
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            nc = (out.get(m, 0) + ca * cb) % p
            if nc:
                out[m] = nc
            elif m in out:
                del out[m]
    return out


def _rep_submul(target, q, rep, p):
    """target -= q * rep, where q is a scalar term dict and rep a tracked rep."""
    for idx, poly in rep.items():
        prod = _scalar_mul(q, poly, p)
        cur = target.get(idx)
        if cur is None:
            cur = {}
            target[idx] = cur
        for m, c in prod.items():
            nc = (cur.get(m, 0) - c) % p
            if nc:
                cur[m] = nc
            elif m in cur:
                del cur[m]
        if not cur:
            del target[idx]


def _rep_shift(rep, coeff, shift, p):
    out = {}
    for idx, poly in rep.items():
        out[idx] = {
            tuple(x + y for x, y in zip(m, shift)): (c * coeff) % p for m, c in poly.items()
        }
    return out


def _reduce_vec(vec, leads, basis, p, quotients=None):
    """Full normal form of ``vec`` against a list of monic basis vectors.

    When ``quotients`` is a list it receives the division quotients as scalar
    term dicts aligned with the basis.  Terms introduced by a reduction step
    are strictly smaller than the term being cleared, so a single descending
    sweep terminates.
    """
    work = dict(vec)
    rem = {}
    while work:
        t = max(work, key=_vec_key)
        c = work.pop(t)
        tpos, te = t
        hit = -1
        for i, lead in enumerate(leads):
            if lead[0] == tpos and all(a <= b for a, b in zip(lead[1], te)):
                hit = i
                break
        if hit < 0:
            rem[t] = c
            continue
        shift = tuple(b - a for a, b in zip(leads[hit][1], te))
        for (gpos, ge), gc in basis[hit].items():
            key = (gpos, tuple(x + y for x, y in zip(ge, shift)))
            if key == t:
                continue
            nc = (work.get(key, 0) - c * gc) % p
            if nc:
                work[key] = nc
            elif key in work:
                del work[key]
        if quotients is not None:
            q = quotients[hit]
            q[shift] = (q.get(shift, 0) + c) % p
    return rem


class _Engine:
    """Buchberger with normal pair selection and tracked representations.

    ``n_tracked`` marks how many of the input generators keep their syzygy
    coordinates; columns adjoined for quotient-ring arithmetic are untracked
    and silently projected away from every representation.
    """

    def __init__(self, ring, n_tracked=0, limit=None):
        self.ring = ring
        self.p = ring.p
        self.n_tracked = n_tracked
        self.limit = MAX_BASIS_SIZE if limit is None else limit
        self.basis = []
        self.leads = []
        self.reps = []
        self.single_pos = []
        self.pairs = []
        self.pending = set()

    def seed(self, vec, index):
        rep = {index: {self.ring._zero_exps: 1}} if index < self.n_tracked else {}
        self._insert(vec, rep)

    def _insert(self, vec, rep):
        if len(self.basis) >= self.limit:
            raise ResourceBound("Groebner basis exceeded %d elements" % self.limit)
        lead = max(vec, key=_vec_key)
        c = vec[lead]
        if c != 1:
            inv = self.ring.inverse(c)
            vec = {t: (v * inv) % self.p for t, v in vec.items()}
            rep = {i: {m: (v * inv) % self.p for m, v in pol.items()} for i, pol in rep.items()}
        new = len(self.basis)
        pos = lead[0]
        self.basis.append(vec)
        self.leads.append(lead)
        self.reps.append(rep)
        self.single_pos.append(all(t[0] == pos for t in vec))
        for i in range(new):
            li = self.leads[i]
            if li[0] != pos:
                continue
            lcm = tuple(max(a, b) for a, b in zip(li[1], lead[1]))
            heapq.heappush(self.pairs, (sum(lcm), i, new))
            self.pending.add((i, new))

    def _spair_parts(self, i, j):
        li, lj = self.leads[i], self.leads[j]
        lcm = tuple(max(a, b) for a, b in zip(li[1], lj[1]))
        si = tuple(a - b for a, b in zip(lcm, li[1]))
        sj = tuple(a - b for a, b in zip(lcm, lj[1]))
        return si, sj

    def _shifted(self, i, shift):
        out = {}
        for (pos, m), c in self.basis[i].items():
            out[(pos, tuple(x + y for x, y in zip(m, shift)))] = c
        return out

    def _spoly(self, i, j):
        si, sj = self._spair_parts(i, j)
        p = self.p
        vec = self._shifted(i, si)
        for t, c in self._shifted(j, sj).items():
            nc = (vec.get(t, 0) - c) % p
            if nc:
                vec[t] = nc
            elif t in vec:
                del vec[t]
        return vec, si, sj

    def _skip_by_criteria(self, i, j):
        li, lj = self.leads[i], self.leads[j]
        lcm = tuple(max(a, b) for a, b in zip(li[1], lj[1]))
        # Product criterion is only valid when both elements live entirely in
        # the shared lead position.
        if (
            self.single_pos[i]
            and self.single_pos[j]
            and lcm == tuple(a + b for a, b in zip(li[1], lj[1]))
        ):
            return True
        pos = li[0]
        pending = self.pending
        for k, lk in enumerate(self.leads):
            if k == i or k == j or lk[0] != pos:
                continue
            if all(a <= b for a, b in zip(lk[1], lcm)):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a not in pending and b not in pending:
                    return True
        return False

    def run(self):
        track = self.n_tracked > 0
        while self.pairs:
            _, i, j = heapq.heappop(self.pairs)
            if (i, j) not in self.pending:
                continue
            self.pending.discard((i, j))
            if self._skip_by_criteria(i, j):
                continue
            vec, si, sj = self._spoly(i, j)
            if not vec:
                continue
            quotients = [{} for _ in self.basis] if track else None
            rem = _reduce_vec(vec, self.leads, self.basis, self.p, quotients)
            if not rem:
                continue
            rep = {}
            if track:
                rep = _rep_shift(self.reps[i], 1, si, self.p)
                _rep_submul(rep, {sj: 1}, self.reps[j], self.p)
                for k, q in enumerate(quotients):
                    if q:
                        _rep_submul(rep, q, self.reps[k], self.p)
            self._insert(rem, rep)

    def reduced(self):
        """Minimalize and tail-reduce; returns (vecs, leads, reps) sorted."""
        order = sorted(range(len(self.basis)), key=lambda i: _vec_key(self.leads[i]))
        kept = []
        for i in order:
            li = self.leads[i]
            if any(
                self.leads[k][0] == li[0] and monomial_divides(self.leads[k][1], li[1])
                for k in kept
            ):
                continue
            kept.append(i)
        vecs = [dict(self.basis[i]) for i in kept]
        leads = [self.leads[i] for i in kept]
        reps = [
            {idx: dict(pol) for idx, pol in self.reps[i].items()} for i in kept
        ]
        track = self.n_tracked > 0
        for a in range(len(vecs)):
            others_leads = leads[:a] + leads[a + 1 :]
            others_vecs = vecs[:a] + vecs[a + 1 :]
            quotients = [{} for _ in others_vecs] if track else None
            rem = _reduce_vec(vecs[a], others_leads, others_vecs, self.p, quotients)
            vecs[a] = rem
            if track:
                rep = reps[a]
                for k, q in enumerate(quotients):
                    if q:
                        src = reps[k] if k < a else reps[k + 1]
                        _rep_submul(rep, q, src, self.p)
        return vecs, leads, reps


class GroebnerBasis:
    """A reduced Groebner basis of a submodule span (plus I per position).

    ``columns`` lists the basis elements as columns of polynomials; the
    internal vector form drives normal forms and membership tests.
    """

    __slots__ = ("ring", "ambient_rank", "row_degrees", "vecs", "leads", "reps", "n_tracked")

    def __init__(self, ring, ambient_rank, row_degrees, vecs, leads, reps=None, n_tracked=0):
        self.ring = ring
        self.ambient_rank = ambient_rank
        self.row_degrees = tuple(row_degrees)
        self.vecs = vecs
        self.leads = leads
        self.reps = reps
        self.n_tracked = n_tracked

    @property
    def columns(self):
        return [vec_to_column(v, self.ambient_rank, self.ring) for v in self.vecs]

    def normal_form_vec(self, vec, quotients=None):
        return _reduce_vec(vec, self.leads, self.vecs, self.ring.p, quotients)

    def normal_form(self, column):
        if len(column) != self.ambient_rank:
            raise AmbientMismatch(
                "column has %d components, ambient rank is %d" % (len(column), self.ambient_rank)
            )
        return vec_to_column(self.normal_form_vec(column_to_vec(column)), self.ambient_rank, self.ring)

    def contains(self, column):
        return not self.normal_form_vec(column_to_vec(column))

    def lead_exponents(self):
        """Per-position lists of leading exponent tuples."""
        out = [[] for _ in range(self.ambient_rank)]
        for pos, e in self.leads:
            out[pos].append(e)
        return out

    def same_basis(self, other):
        return (
            self.ambient_rank == other.ambient_rank
            and sorted(self.leads, key=_vec_key) == sorted(other.leads, key=_vec_key)
            and sorted(self.vecs, key=lambda v: _vec_key(max(v, key=_vec_key)))
            == sorted(other.vecs, key=lambda v: _vec_key(max(v, key=_vec_key)))
        )

    def __len__(self):
        return len(self.vecs)


def _normalize_columns(columns, ambient_rank, ring):
    cols = []
    for col in columns:
        if isinstance(col, Polynomial):
            col = [col]
        if len(col) != ambient_rank:
            raise AmbientMismatch("matrix column has wrong number of rows")
        cols.append([ring.convert(c) for c in col])
    return cols


def _quotient_columns(ring, ambient_rank):
    out = []
    for pos in range(ambient_rank):
        for g in ring.ideal_groebner:
            col = [ring.zero] * ambient_rank
            col[pos] = g
            out.append(col)
    return out


def _run_engine(columns, ring, ambient_rank, over_quotient, n_tracked=0, limit=None):
    engine = _Engine(ring, n_tracked=n_tracked, limit=limit)
    index = 0
    zero_indices = []
    for col in columns:
        vec = column_to_vec(col)
        if vec:
            engine.seed(vec, index)
        elif index < n_tracked:
            zero_indices.append(index)
        index += 1
    if over_quotient:
        for col in _quotient_columns(ring, ambient_rank):
            vec = column_to_vec(col)
            if vec:
                engine.seed(vec, index)
            index += 1
    engine.run()
    return engine, zero_indices


def groebner_basis(gens, ring, over_quotient=True, ambient_rank=None, row_degrees=None):
    """Reduced Groebner basis of the span of ``gens``.

    With ``over_quotient`` the defining ideal is adjoined per ambient
    position, so normal forms answer membership in the span as a submodule
    over R = S/I.
    """
    if ambient_rank is None:
        ambient_rank = _infer_rank(gens)
    cols = _normalize_columns(gens, ambient_rank, ring)
    row_degrees = tuple(row_degrees) if row_degrees else (0,) * ambient_rank
    for col in cols:
        column_degree(col, row_degrees)
    engine, _ = _run_engine(cols, ring, ambient_rank, over_quotient)
    vecs, leads, _ = engine.reduced()
    return GroebnerBasis(ring, ambient_rank, row_degrees, vecs, leads)


def _tracked_groebner(columns, ring, ambient_rank, row_degrees, over_quotient=True):
    engine, zero_indices = _run_engine(
        columns, ring, ambient_rank, over_quotient, n_tracked=len(columns)
    )
    vecs, leads, reps = engine.reduced()
    gb = GroebnerBasis(ring, ambient_rank, row_degrees, vecs, leads, reps, len(columns))
    return gb, zero_indices


def _infer_rank(gens):
    for col in gens:
        if isinstance(col, Polynomial):
            return 1
        return len(col)
    return 1


def normal_form(column, gb):
    """Normal form of a column against a Groebner basis; idempotent."""
    return gb.normal_form(column)


def reduced_ideal_groebner(gens, ring):
    """Reduced Groebner basis of an ideal of the underlying polynomial ring."""
    engine, _ = _run_engine([[g] for g in gens], ring, 1, over_quotient=False)
    vecs, leads, _ = engine.reduced()
    return [vec_to_column(v, 1, ring)[0] for v in vecs]


def syzygy_generators(columns, ring, ambient_rank=None, row_degrees=None, over_quotient=True):
    """Generators of the syzygy module of the given columns over the ring.

    Over a quotient ring the relations of the defining ideal are adjoined
    before the Schreyer pass and projected away afterwards, so the result
    satisfies ``matrix * result == 0`` modulo the ideal, exactly.
    """
    if ambient_rank is None:
        ambient_rank = _infer_rank(columns)
    cols = _normalize_columns(columns, ambient_rank, ring)
    row_degrees = tuple(row_degrees) if row_degrees else (0,) * ambient_rank
    for col in cols:
        column_degree(col, row_degrees)
    n = len(cols)
    if n == 0:
        return []

    engine, zero_indices = _run_engine(cols, ring, ambient_rank, over_quotient, n_tracked=n)
    vecs, leads, reps = engine.reduced()
    p = ring.p
    syz_vecs = []

    def push(rep):
        vec = {}
        for idx, poly in rep.items():
            for m, c in poly.items():
                vec[(idx, m)] = c
        if vec:
            syz_vecs.append(vec)

    # Zero input columns are syzygies outright.
    for idx in zero_indices:
        push({idx: {ring._zero_exps: 1}})

    # Columns of (Id - T U): each original generator minus its expression in
    # the reduced basis.  Untracked (ideal) columns contribute relations too.
    all_cols = cols + (_quotient_columns(ring, ambient_rank) if over_quotient else [])
    for idx, col in enumerate(all_cols):
        vec = column_to_vec(col)
        if not vec:
            continue
        quotients = [{} for _ in vecs]
        rem = _reduce_vec(vec, leads, vecs, p, quotients)
        if rem:
            raise AssertionError("span generator failed to reduce to zero against its own basis")
        rep = {idx: {ring._zero_exps: 1}} if idx < n else {}
        for k, q in enumerate(quotients):
            if q:
                _rep_submul(rep, q, reps[k], p)
        push(rep)

    # Schreyer pass: every same-position S-pair of the reduced basis yields a
    # syzygy; no pair criteria here, completeness needs them all.
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            li, lj = leads[i], leads[j]
            if li[0] != lj[0]:
                continue
            lcm = tuple(max(a, b) for a, b in zip(li[1], lj[1]))
            si = tuple(a - b for a, b in zip(lcm, li[1]))
            sj = tuple(a - b for a, b in zip(lcm, lj[1]))
            vec = {}
            for (pos, m), c in vecs[i].items():
                vec[(pos, tuple(x + y for x, y in zip(m, si)))] = c
            for (pos, m), c in vecs[j].items():
                t = (pos, tuple(x + y for x, y in zip(m, sj)))
                nc = (vec.get(t, 0) - c) % p
                if nc:
                    vec[t] = nc
                elif t in vec:
                    del vec[t]
            quotients = [{} for _ in vecs]
            rem = _reduce_vec(vec, leads, vecs, p, quotients)
            if rem:
                raise AssertionError("S-polynomial of a Groebner basis did not reduce to zero")
            rep = _rep_shift(reps[i], 1, si, p)
            _rep_submul(rep, {sj: 1}, reps[j], p)
            for k, q in enumerate(quotients):
                if q:
                    _rep_submul(rep, q, reps[k], p)
            push(rep)

    columns_out = [vec_to_column(v, n, ring) for v in _dedupe_vecs(syz_vecs)]
    return columns_out


def _dedupe_vecs(vecs):
    seen = set()
    out = []
    for v in vecs:
        key = tuple(sorted(v.items()))
        if key not in seen:
            seen.add(key)
            out.append(v)
    return out


def kernel_over_quotient(matrix_columns, ring, ambient_rank=None, row_degrees=None):
    """Columns generating the kernel of the matrix as a map of free R-modules."""
    return syzygy_generators(
        matrix_columns, ring, ambient_rank=ambient_rank, row_degrees=row_degrees, over_quotient=True
    )


class SubmodulePresentation:
    """A finitely presented graded module over R.

    ``mode`` is "submodule" (the span of the columns inside the ambient free
    module) or "cokernel" (ambient modulo the span).  Length and dimension
    queries answer for the cokernel interpretation.
    """

    __slots__ = (
        "ring",
        "ambient_rank",
        "row_degrees",
        "columns",
        "mode",
        "_gb",
        "_tracked",
        "_mingens",
        "_resolution",
    )

    def __init__(self, ring, columns, ambient_rank=None, row_degrees=None, mode="submodule"):
        if ambient_rank is None:
            ambient_rank = _infer_rank(columns)
        self.ring = ring
        self.ambient_rank = ambient_rank
        self.row_degrees = tuple(row_degrees) if row_degrees else (0,) * ambient_rank
        self.columns = _normalize_columns(columns, ambient_rank, ring)
        for col in self.columns:
            column_degree(col, self.row_degrees)
        if mode not in ("submodule", "cokernel"):
            raise ValueError("mode must be 'submodule' or 'cokernel'")
        self.mode = mode
        self._gb = None
        self._tracked = None
        self._mingens = None
        self._resolution = None

    # -- basic structure -------------------------------------------------------

    def gb(self):
        if self._gb is None:
            self._gb = groebner_basis(
                self.columns,
                self.ring,
                over_quotient=True,
                ambient_rank=self.ambient_rank,
                row_degrees=self.row_degrees,
            )
        return self._gb

    def _tracked_gb(self):
        if self._tracked is None:
            self._tracked, _ = _tracked_groebner(
                self.columns, self.ring, self.ambient_rank, self.row_degrees
            )
        return self._tracked

    def contains(self, column):
        if isinstance(column, Polynomial):
            column = [column]
        return self.gb().contains(column)

    def same_span(self, other):
        if self.ambient_rank != other.ambient_rank:
            return False
        return self.gb().same_basis(other.gb())

    def is_zero_submodule(self):
        """True when the span is contained in I * ambient."""
        amb = _quotient_span(self.ring, self.ambient_rank, self.row_degrees)
        return all(amb.contains(col) for col in self.columns)

    # -- lifts ------------------------------------------------------------------

    def lift(self, column):
        """Coefficients c with columns * c = column over R, or None."""
        if isinstance(column, Polynomial):
            column = [column]
        if len(column) != self.ambient_rank:
            raise AmbientMismatch("lift target has wrong ambient rank")
        gb = self._tracked_gb()
        quotients = [{} for _ in gb.vecs]
        rem = gb.normal_form_vec(column_to_vec(column), quotients)
        if rem:
            return None
        p = self.ring.p
        rep = {}
        for k, q in enumerate(quotients):
            if q:
                _rep_submul(rep, q, gb.reps[k], p)
        out = []
        for idx in range(len(self.columns)):
            poly = rep.get(idx)
            out.append(Polynomial(self.ring, {m: (p - c) % p for m, c in poly.items()}) if poly else self.ring.zero)
        return out

    # -- generators ---------------------------------------------------------------

    def minimal_generators(self):
        """A minimal generating set of the span, lowest degree first."""
        if self._mingens is not None:
            return self._mingens
        ranked = []
        for col in self.columns:
            vec = column_to_vec(col)
            if not vec:
                continue
            deg = column_degree(col, self.row_degrees)
            ranked.append((deg, _vec_key(max(vec, key=_vec_key)), col))
        # Lowest degree first; within a degree, larger leading term first, so
        # the irrelevant ideal of F_p[x,y] presents as [x y].
        ranked.sort(key=lambda t: t[1], reverse=True)
        ranked.sort(key=lambda t: t[0])
        kept = []
        for _, _, col in ranked:
            if kept:
                span = SubmodulePresentation(
                    self.ring, kept, self.ambient_rank, self.row_degrees
                )
                if span.contains(col):
                    continue
            else:
                if _quotient_span(self.ring, self.ambient_rank, self.row_degrees).contains(col):
                    continue
            kept.append(col)
        self._mingens = kept
        return kept

    # -- syzygies -------------------------------------------------------------------

    def syzygies(self):
        """Generators of the syzygy module of ``columns`` over R."""
        return syzygy_generators(
            self.columns,
            self.ring,
            ambient_rank=self.ambient_rank,
            row_degrees=self.row_degrees,
            over_quotient=True,
        )

    # -- colon and saturation ----------------------------------------------------------

    def colon(self, element):
        """(N : f) as a submodule of the same ambient free module."""
        element = self.ring.poly(element)
        if element.is_zero():
            raise ZeroDivisorQuery("colon by zero is rejected")
        return self.colon_by_elements([element])

    def colon_by_elements(self, elements):
        elements = [self.ring.poly(f) for f in elements]
        if any(f.is_zero() for f in elements):
            raise ZeroDivisorQuery("colon by zero is rejected")
        for f in elements:
            if not f.is_homogeneous():
                raise NotHomogeneous("colon element %s is not homogeneous" % f)
        r = self.ambient_rank
        k = len(elements)
        big_rank = r * k
        degs = [f.homogeneous_degree() for f in elements]
        dmax = max(degs)
        big_rowdegs = []
        for i in range(k):
            for pos in range(r):
                big_rowdegs.append(self.row_degrees[pos] + dmax - degs[i])
        cols = []
        zero = self.ring.zero
        for j in range(r):
            col = [zero] * big_rank
            for i, f in enumerate(elements):
                col[i * r + j] = f
            cols.append(col)
        for i in range(k):
            for gen in self.columns:
                col = [zero] * big_rank
                for pos in range(r):
                    col[i * r + pos] = gen[pos]
                cols.append(col)
        syz = syzygy_generators(
            cols, self.ring, ambient_rank=big_rank, row_degrees=big_rowdegs, over_quotient=True
        )
        out_cols = []
        for s in syz:
            head = s[:r]
            if any(not poly.is_zero() for poly in head):
                out_cols.append(head)
        result = SubmodulePresentation(
            self.ring, out_cols + self.columns, r, self.row_degrees, self.mode
        )
        return result

    def saturate(self):
        """(N : m^infinity), computed by iterating colon with the variables."""
        current = self
        while True:
            step = current.colon_by_elements(self.ring.gens())
            if step.same_span(current):
                return current
            current = step

    # -- numerical invariants -----------------------------------------------------------

    def _cokernel_lead_ideals(self):
        """Minimal monomial generators of the leading-term module, per position."""
        per_pos = [[] for _ in range(self.ambient_rank)]
        for pos, e in self.gb().leads:
            per_pos[pos].append(e)
        return [minimalize_monomials(gens) for gens in per_pos]

    def length(self):
        """Length of the cokernel; Infinite exactly when its dimension is positive."""
        total = 0
        for gens in self._cokernel_lead_ideals():
            val = monomial_quotient_length(gens, self.ring.n)
            if val is INFINITE:
                return INFINITE
            total += val
        return total

    def dimension(self):
        """Krull dimension of the cokernel; -1 for the zero module."""
        best = -1
        for gens in self._cokernel_lead_ideals():
            best = max(best, monomial_quotient_dimension(gens, self.ring.n))
        return best

    def hilbert_function(self, degree):
        """K-dimension of the cokernel in the given internal degree."""
        count = 0
        for pos, gens in enumerate(self._cokernel_lead_ideals()):
            d = degree - self.row_degrees[pos]
            if d < 0:
                continue
            from .ring import monomials_of_degree

            for m in monomials_of_degree(self.ring.n, d):
                if not any(monomial_divides(g, m) for g in gens):
                    count += 1
        return count

    def __repr__(self):
        return "<%s presentation: ambient R^%d, %d generators over %r>" % (
            self.mode,
            self.ambient_rank,
            len(self.columns),
            self.ring,
        )


def _quotient_span(ring, ambient_rank, row_degrees):
    """The submodule I * R^rank, used for zero tests modulo the ideal."""
    return SubmodulePresentation(
        ring, _quotient_columns(ring, ambient_rank), ambient_rank, row_degrees
    )


def ideal(ring, gens):
    """The span of ring elements inside R itself (rank-one submodule mode)."""
    return SubmodulePresentation(ring, [[ring.poly(g)] for g in gens], 1, None, "submodule")


def quotient_module(ring, gens):
    """R/(gens) as a cokernel presentation."""
    return SubmodulePresentation(ring, [[ring.poly(g)] for g in gens], 1, None, "cokernel")


def cokernel_presentation(ring, columns, ambient_rank=None, row_degrees=None):
    return SubmodulePresentation(ring, columns, ambient_rank, row_degrees, "cokernel")


def ideal_quotient(N, f):
    """(N : f); contains N and equals N when f is a unit."""
    return N.colon(f)


def saturate_at_irrelevant(N):
    return N.saturate()


def membership_lift(column, N):
    return N.lift(column)


def length(N):
    return N.length()


def dimension(N):
    return N.dimension()


# -- monomial combinatorics ---------------------------------------------------------


def minimalize_monomials(gens):
    """Inclusion-minimal exponent tuples."""
    out = []
    for g in sorted(set(gens), key=lambda e: (sum(e), e)):
        if not any(monomial_divides(h, g) for h in out):
            out.append(g)
    return out


def monomial_quotient_dimension(gens, n):
    """dim of S/(monomial ideal); -1 when the ideal is the unit ideal."""
    gens = minimalize_monomials(gens)
    if any(not any(g) for g in gens):
        return -1
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    best = 0
    for mask in range(2**n):
        t = frozenset(i for i in range(n) if mask >> i & 1)
        if len(t) <= best:
            continue
        if all(not s <= t for s in supports):
            best = len(t)
    return best


def monomial_quotient_length(gens, n):
    """Number of standard monomials of S/(monomial ideal); Infinite if dim > 0."""
    gens = minimalize_monomials(gens)
    if any(not any(g) for g in gens):
        return 0
    for var in range(n):
        if not any(g[var] and all(e == 0 for i, e in enumerate(g) if i != var) for g in gens):
            return INFINITE
    if n == 1:
        return min(g[0] for g in gens)
    if n == 2:
        return _staircase_count(gens)
    return _recursive_count(frozenset(gens), n, {})


def _staircase_count(gens):
    pairs = sorted(gens)
    total = 0
    prev_a = 0
    height = None
    for a, b in pairs:
        if height is not None:
            total += (a - prev_a) * height
        height = b if height is None else min(height, b)
        prev_a = a
    return total


def _recursive_count(gens, n, memo):
    got = memo.get(gens)
    if got is not None:
        return got
    glist = list(gens)
    pivot = None
    for g in glist:
        nz = [i for i, e in enumerate(g) if e]
        if len(nz) > 1:
            pivot = nz[0]
            break
    if pivot is None:
        # All generators are pure powers: the quotient is a box.
        result = 1
        for var in range(n):
            result *= min(g[var] for g in glist if g[var])
        memo[gens] = result
        return result
    # Split along x_pivot: lam(S/L) = lam(S/(L : x)) + lam(S/(L + (x))).
    colon = []
    for g in glist:
        e = list(g)
        if e[pivot]:
            e[pivot] -= 1
        colon.append(tuple(e))
    var_gen = tuple(1 if i == pivot else 0 for i in range(n))
    plus = [g for g in glist if not g[pivot]] + [var_gen]
    result = _recursive_count(
        frozenset(minimalize_monomials(colon)), n, memo
    ) + _recursive_count(frozenset(minimalize_monomials(plus)), n, memo)
    memo[gens] = result
    return result
