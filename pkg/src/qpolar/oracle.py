"""Definition-level brute force over finite carriers.

Everything in this module works straight from the definitions by
enumeration: commutants by scanning the whole carrier, units by looking
for two-sided inverses, quasinilpotence by testing 1 + a*x against every
commuting x, radicals by the quasi-regularity test.  None of it consults
the constructive engines or the shape-specific unit rules; that
independence is what makes it usable as ground truth for them.

A :class:`FiniteRingView` is built once per (ring, shape) pair; it
tabulates scalar arithmetic and represents each matrix as a tuple of
scalar indices over the shape's mask, which keeps the big sweeps inside
plain tuple and list operations.  Carriers are capped at 10^6 elements.
"""

from __future__ import annotations

from itertools import product

from .matrices import Shape, ShapedMatrix
from .rings import InfiniteRing, LocalRing, QpolarError, RingElement

CARRIER_CAP = 10**6


class NotIdempotent(QpolarError):
    """corner_validate was handed an e with e*e != e."""


class _Corner:
    """Carrier, units, and radical of a corner ring e*R*e, identity e."""

    __slots__ = ("identity", "carrier", "units", "_jacobson", "_view")

    def __init__(self, view: FiniteRingView, e_key):
        self._view = view
        self.identity = e_key
        mul = view._mul
        seen = {}
        for k in view.keys:
            c = mul(mul(e_key, k), e_key)
            if c not in seen:
                seen[c] = None
        self.carrier = tuple(seen)
        # Two-sided inverse scan within the corner.
        rights = set()
        lefts = set()
        for a in self.carrier:
            for b in self.carrier:
                if mul(a, b) == e_key:
                    rights.add(a)
                    lefts.add(b)
        self.units = frozenset(rights & lefts)
        self._jacobson = None

    @property
    def jacobson(self) -> frozenset:
        # x radical iff e - x*y is a corner unit for every corner y.
        if self._jacobson is None:
            view = self._view
            mul, sub = view._mul, view._sub
            e_key = self.identity
            units = self.units
            out = []
            for x in self.carrier:
                if all(sub(e_key, mul(x, y)) in units for y in self.carrier):
                    out.append(x)
            self._jacobson = frozenset(out)
        return self._jacobson


class FiniteRingView:
    """Exhaustive arithmetic over a finite shaped-matrix (or scalar) ring."""

    def __init__(self, ring: LocalRing, shape: Shape | None = None):
        if not ring.is_finite:
            raise InfiniteRing(f"cannot enumerate a view over {ring}")
        self.ring = ring
        self.shape = shape
        self.scalars = list(ring.elements())
        ns = len(self.scalars)
        sidx = {s: i for i, s in enumerate(self.scalars)}
        self._sidx = sidx
        self._add_s = [[sidx[a + b] for b in self.scalars] for a in self.scalars]
        self._mul_s = [[sidx[a * b] for b in self.scalars] for a in self.scalars]
        self._neg_s = [sidx[-a] for a in self.scalars]
        self._zero_s = sidx[ring.zero]
        self._one_s = sidx[ring.one]

        if shape is None:
            self.positions = [(0, 0)]
            self._prod_terms = [[(0, 0)]]
            npos = 1
            diag = [0]
        else:
            self.positions = shape.positions
            pos_index = {p: i for i, p in enumerate(self.positions)}
            terms = shape.product_terms()
            self._prod_terms = [
                [(pos_index[(i, k)], pos_index[(k, j)]) for k in terms[(i, j)]]
                for (i, j) in self.positions
            ]
            npos = len(self.positions)
            diag = [pos_index[(i, i)] for i in range(shape.n)]
        self._diag_slots = diag

        if ns**npos > CARRIER_CAP:
            raise InfiniteRing(
                f"carrier of {ring} / {shape.name if shape else 'scalars'} "
                f"exceeds {CARRIER_CAP} elements"
            )
        self.keys = [tuple(k) for k in product(range(ns), repeat=npos)]
        self.key_index = {k: i for i, k in enumerate(self.keys)}
        z, o = self._zero_s, self._one_s
        self.zero_key = tuple(z for _ in range(npos))
        self.one_key = tuple(o if i in diag else z for i in range(npos))

        self._comm_cache: dict = {}
        self._qnil_cache: dict = {}
        self._units: frozenset | None = None
        self._inverse_map: dict = {}
        self._idempotents: tuple | None = None
        self._jacobson: frozenset | None = None
        self._corners: dict = {}

    # -- key arithmetic ----------------------------------------------------

    def _mul(self, a, b):
        at, mt = self._add_s, self._mul_s
        z = self._zero_s
        out = []
        for terms in self._prod_terms:
            acc = z
            for ia, ib in terms:
                acc = at[acc][mt[a[ia]][b[ib]]]
            out.append(acc)
        return tuple(out)

    def _add(self, a, b):
        at = self._add_s
        return tuple(at[x][y] for x, y in zip(a, b))

    def _sub(self, a, b):
        at, nt = self._add_s, self._neg_s
        return tuple(at[x][nt[y]] for x, y in zip(a, b))

    # -- conversions ---------------------------------------------------------

    def key_of(self, value):
        if isinstance(value, ShapedMatrix):
            if self.shape is None or value.shape.name != self.shape.name:
                raise QpolarError(f"{value!r} does not live in this view")
            sidx = self._sidx
            return tuple(sidx[value.rows[i][j]] for (i, j) in self.positions)
        if isinstance(value, RingElement):
            if self.shape is not None:
                raise QpolarError("scalar passed to a matrix view")
            return (self._sidx[value],)
        raise QpolarError(f"cannot interpret {value!r} in this view")

    def value_of(self, key):
        if self.shape is None:
            return self.scalars[key[0]]
        n = self.shape.n
        zero = self.ring.zero
        grid = [[zero] * n for _ in range(n)]
        for slot, (i, j) in enumerate(self.positions):
            grid[i][j] = self.scalars[key[slot]]
        return ShapedMatrix(self.ring, self.shape, tuple(tuple(r) for r in grid))

    # -- lazily built global structure ----------------------------------------

    @property
    def units(self) -> frozenset:
        if self._units is None:
            mul = self._mul
            one = self.one_key
            rights = {}
            lefts = set()
            for a in self.keys:
                for b in self.keys:
                    if mul(a, b) == one:
                        rights.setdefault(a, b)
                        lefts.add(b)
            units = frozenset(set(rights) & lefts)
            self._units = units
            self._inverse_map = {a: rights[a] for a in units}
        return self._units

    def inverse_key(self, key):
        self.units
        return self._inverse_map.get(key)

    @property
    def idempotent_keys(self) -> tuple:
        if self._idempotents is None:
            mul = self._mul
            self._idempotents = tuple(k for k in self.keys if mul(k, k) == k)
        return self._idempotents

    @property
    def jacobson_keys(self) -> frozenset:
        if self._jacobson is None:
            mul, sub = self._mul, self._sub
            one = self.one_key
            units = self.units
            self._jacobson = frozenset(
                x
                for x in self.keys
                if all(sub(one, mul(x, y)) in units for y in self.keys)
            )
        return self._jacobson

    # -- key-level queries (cached) --------------------------------------------

    def commutant_keys(self, a) -> tuple:
        got = self._comm_cache.get(a)
        if got is None:
            mul = self._mul
            got = tuple(x for x in self.keys if mul(a, x) == mul(x, a))
            self._comm_cache[a] = got
        return got

    def double_commutant_keys(self, a) -> tuple:
        comm = self.commutant_keys(a)
        mul = self._mul
        return tuple(
            x for x in self.keys if all(mul(x, y) == mul(y, x) for y in comm)
        )

    def in_double_commutant(self, p, a) -> bool:
        mul = self._mul
        return all(mul(p, y) == mul(y, p) for y in self.commutant_keys(a))

    def is_qnil_key(self, a) -> bool:
        got = self._qnil_cache.get(a)
        if got is None:
            mul, add = self._mul, self._add
            one = self.one_key
            units = self.units
            got = all(add(one, mul(a, x)) in units for x in self.commutant_keys(a))
            self._qnil_cache[a] = got
        return got

    def quasipolar_search_keys(self, a) -> tuple:
        mul, add = self._mul, self._add
        units = self.units
        found = []
        comm = self.commutant_keys(a)
        for p in self.idempotent_keys:
            if mul(p, a) != mul(a, p):
                continue
            if any(mul(p, y) != mul(y, p) for y in comm):
                continue
            if add(a, p) not in units:
                continue
            if not self.is_qnil_key(mul(a, p)):
                continue
            found.append(p)
        return tuple(found)

    def rad_clean_search_keys(self, a) -> tuple:
        mul, sub = self._mul, self._sub
        units = self.units
        found = []
        for e in self.idempotent_keys:
            if mul(e, a) != mul(a, e):
                continue
            if sub(a, e) not in units:
                continue
            corner = self._corner(e)
            if mul(mul(e, a), e) in corner.jacobson:
                found.append(e)
        return tuple(found)

    def _corner(self, e_key) -> _Corner:
        got = self._corners.get(e_key)
        if got is None:
            got = self._corners[e_key] = _Corner(self, e_key)
        return got

    def corner_validate_key(self, a, e) -> bool:
        mul, sub = self._mul, self._sub
        if mul(e, e) != e:
            raise NotIdempotent(f"{self.value_of(e)!r} is not idempotent")
        if mul(e, a) != mul(a, e):
            raise QpolarError("corner_validate needs e commuting with a")
        f = sub(self.one_key, e)
        ae = mul(a, e)
        corner_e = self._corner(e)
        if ae not in corner_e.units:
            return False
        af = mul(a, f)
        corner_f = self._corner(f)
        f_units = corner_f.units
        add = self._add
        for x in corner_f.carrier:
            if mul(x, af) != mul(af, x):
                continue
            if add(f, mul(af, x)) not in f_units:
                return False
        return True


# -- public wrappers over matrices and ring elements ---------------------------


def commutant(view: FiniteRingView, a) -> list:
    return [view.value_of(k) for k in view.commutant_keys(view.key_of(a))]


def double_commutant(view: FiniteRingView, a) -> list:
    return [view.value_of(k) for k in view.double_commutant_keys(view.key_of(a))]


def is_quasinilpotent(view: FiniteRingView, a) -> bool:
    return view.is_qnil_key(view.key_of(a))


def quasipolar_search(view: FiniteRingView, a) -> list:
    return [view.value_of(k) for k in view.quasipolar_search_keys(view.key_of(a))]


def rad_clean_search(view: FiniteRingView, a) -> list:
    return [view.value_of(k) for k in view.rad_clean_search_keys(view.key_of(a))]


def corner_validate(view: FiniteRingView, a, e) -> bool:
    return view.corner_validate_key(view.key_of(a), view.key_of(e))


_VIEW_CACHE: dict = {}


def get_view(ring: LocalRing, shape: Shape | None = None) -> FiniteRingView:
    """Shared, memoized view per (ring, shape); views are expensive to build."""
    key = (ring, shape.name if shape is not None else None)
    got = _VIEW_CACHE.get(key)
    if got is None:
        got = _VIEW_CACHE[key] = FiniteRingView(ring, shape)
    return got
