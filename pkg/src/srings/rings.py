"""Finite ring construction, validation and element arithmetic.

Element codes are canonical integers 0..cardinality-1.  Structured rings
use a mixed-radix little-endian codec over their components/coefficients
(component 0 least significant), so reports are stable across runs.  The
zero element always has code 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .bits import contains, elements_of
from .config import DEFAULT_LIMITS, EngineLimits
from .errors import CapacityError, ValidationError
from .structures import CayleyStructure


class RingHandle:
    """A finite ring: evaluators over element codes plus cached op tables."""

    def __init__(
        self,
        cardinality: int,
        construction: str,
        name: str,
        *,
        one: int | None,
        add_table: np.ndarray | None = None,
        mul_table: np.ndarray | None = None,
        add_fn: Callable[[int, int], int] | None = None,
        mul_fn: Callable[[int, int], int] | None = None,
        neg_fn: Callable[[int], int] | None = None,
        table_builder: Callable[[], tuple[np.ndarray, np.ndarray]] | None = None,
        labeler: Callable[[int], str] | None = None,
        meta: dict | None = None,
        limits: EngineLimits = DEFAULT_LIMITS,
    ):
        self.cardinality = cardinality
        self.construction = construction
        self.name = name
        self.zero = 0
        self.one = one
        self.limits = limits
        self.meta = meta or {}
        self._add_table = add_table
        self._mul_table = mul_table
        self._neg_vec: np.ndarray | None = None
        self._add_fn = add_fn
        self._mul_fn = mul_fn
        self._neg_fn = neg_fn
        self._table_builder = table_builder
        self._labeler = labeler
        self._cache: dict = {}

    # -- arithmetic ----------------------------------------------------------

    @property
    def enumerable(self) -> bool:
        return self.cardinality <= self.limits.enumeration_cap

    def _require_tables(self) -> None:
        if self._add_table is not None:
            return
        if not self.enumerable:
            raise CapacityError(
                f"{self.name}: cardinality {self.cardinality} exceeds the "
                f"enumeration cap {self.limits.enumeration_cap}"
            )
        if self._table_builder is not None:
            self._add_table, self._mul_table = self._table_builder()
        else:
            n = self.cardinality
            self._add_table = np.fromfunction(
                np.vectorize(lambda a, b: self._add_fn(int(a), int(b))), (n, n), dtype=int
            ).astype(np.int32)
            self._mul_table = np.fromfunction(
                np.vectorize(lambda a, b: self._mul_fn(int(a), int(b))), (n, n), dtype=int
            ).astype(np.int32)

    @property
    def add_table(self) -> np.ndarray:
        self._require_tables()
        return self._add_table

    @property
    def mul_table(self) -> np.ndarray:
        self._require_tables()
        return self._mul_table

    @property
    def neg_vec(self) -> np.ndarray:
        if self._neg_vec is None:
            zero_pos = self.add_table == self.zero
            if not zero_pos.any(axis=1).all():
                raise ValidationError(f"{self.name}: some element has no additive inverse")
            self._neg_vec = np.argmax(zero_pos, axis=1).astype(np.int32)
        return self._neg_vec

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return int(self._add_table[a, b])
        if self._add_fn is not None:
            return self._add_fn(a, b)
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return int(self._mul_table[a, b])
        if self._mul_fn is not None:
            return self._mul_fn(a, b)
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        if self._neg_fn is not None:
            return self._neg_fn(a)
        return int(self.neg_vec[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def power(self, a: int, k: int) -> int:
        if k < 1:
            raise ValueError("power needs k >= 1")
        acc = a
        for _ in range(k - 1):
            acc = self.mul(acc, a)
        return acc

    def elements(self) -> range:
        if not self.enumerable:
            raise CapacityError(f"{self.name}: not enumerable")
        return range(self.cardinality)

    def label(self, code: int) -> str:
        return self._labeler(code) if self._labeler else str(code)

    def __repr__(self) -> str:
        return f"RingHandle({self.name}, |R|={self.cardinality})"


# -- mixed-radix codec --------------------------------------------------------


def _weights(radices: list[int]) -> list[int]:
    w, acc = [], 1
    for r in radices:
        w.append(acc)
        acc *= r
    return w


def _decode(code: int, radices: list[int]) -> list[int]:
    out = []
    for r in radices:
        out.append(code % r)
        code //= r
    return out


def _encode(digits, radices: list[int]) -> int:
    code = 0
    for d, w in zip(digits, _weights(radices)):
        code += int(d) * w
    return code


def _digit_matrix(n: int, radices: list[int]) -> np.ndarray:
    codes = np.arange(n, dtype=np.int64)
    out = np.empty((n, len(radices)), dtype=np.int64)
    for i, r in enumerate(radices):
        out[:, i] = codes % r
        codes //= r
    return out


# -- validation ----------------------------------------------------------------


@dataclass
class AxiomViolation:
    axiom: str
    witness: tuple[int, ...]


@dataclass
class AuditReport:
    ring: str
    method: str  # "exhaustive" | "sampled"
    triples_checked: int
    violations: list[AxiomViolation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def _audit_tables(R: RingHandle) -> list[AxiomViolation]:
    n = R.cardinality
    add, mul = R.add_table, R.mul_table
    out: list[AxiomViolation] = []
    idx = np.arange(n)

    def first_bad(diff: np.ndarray, a: int) -> tuple[int, int, int]:
        b, c = np.argwhere(diff)[0]
        return a, int(b), int(c)

    if not np.array_equal(add, add.T):
        b, c = np.argwhere(add != add.T)[0]
        out.append(AxiomViolation("additive-commutativity", (int(b), int(c))))
    if not np.array_equal(add[R.zero], idx):
        out.append(AxiomViolation("zero-element", (int(np.argmax(add[R.zero] != idx)),)))
    if not (add == R.zero).any(axis=1).all():
        out.append(AxiomViolation("additive-inverse", (int(np.argmin((add == R.zero).any(axis=1))),)))
    for a in range(n):
        d = add[add[a], :] != add[a][add]
        if d.any():
            out.append(AxiomViolation("additive-associativity", first_bad(d, a)))
            break
    for a in range(n):
        d = mul[mul[a], :] != mul[a][mul]
        if d.any():
            out.append(AxiomViolation("multiplicative-associativity", first_bad(d, a)))
            break
    for a in range(n):
        row = mul[a]
        d = row[add] != add[np.ix_(row, row)]
        if d.any():
            out.append(AxiomViolation("left-distributivity", first_bad(d, a)))
            break
    for c in range(n):
        col = mul[:, c]
        d = col[add] != add[np.ix_(col, col)]
        if d.any():
            a, b = np.argwhere(d)[0]
            out.append(AxiomViolation("right-distributivity", (int(a), int(b), c)))
            break
    if R.one is not None:
        if not (np.array_equal(mul[R.one], idx) and np.array_equal(mul[:, R.one], idx)):
            out.append(AxiomViolation("unit-element", (R.one,)))
    return out


def _audit_sampled(R: RingHandle, samples: int, seed: int = 0) -> list[AxiomViolation]:
    rng = np.random.default_rng(seed)
    n = R.cardinality
    out: list[AxiomViolation] = []
    for _ in range(samples):
        a, b, c = (int(rng.integers(0, n)) for _ in range(3))
        if R.add(a, b) != R.add(b, a):
            out.append(AxiomViolation("additive-commutativity", (a, b)))
        if R.add(R.add(a, b), c) != R.add(a, R.add(b, c)):
            out.append(AxiomViolation("additive-associativity", (a, b, c)))
        if R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)):
            out.append(AxiomViolation("multiplicative-associativity", (a, b, c)))
        if R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)):
            out.append(AxiomViolation("left-distributivity", (a, b, c)))
        if R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c)):
            out.append(AxiomViolation("right-distributivity", (a, b, c)))
        if out:
            break
    return out


def ring_axiom_audit(R: RingHandle, samples: int | None = None) -> AuditReport:
    """Axiom report: exhaustive up to the check cap, sampled triples above it."""
    lim = R.limits
    if R.enumerable and R.cardinality <= lim.ring_check_cap:
        return AuditReport(R.name, "exhaustive", R.cardinality**3, _audit_tables(R))
    count = samples if samples is not None else lim.audit_samples
    return AuditReport(R.name, "sampled", count, _audit_sampled(R, count))


def _validate_on_construction(R: RingHandle) -> None:
    lim = R.limits
    if R.enumerable and R.cardinality <= lim.ring_check_cap:
        violations = _audit_tables(R)
    else:
        violations = _audit_sampled(R, lim.construction_samples)
    if violations:
        v = violations[0]
        raise ValidationError(f"{R.name}: {v.axiom} fails at {v.witness}")


# -- constructors ---------------------------------------------------------------


def zn(n: int, limits: EngineLimits = DEFAULT_LIMITS, validate: bool = True) -> RingHandle:
    if n < 1:
        raise ValueError("Zn needs n >= 1")
    if n <= limits.table_cap:
        r = np.arange(n)
        add = (np.add.outer(r, r) % n).astype(np.int32)
        mul = (np.multiply.outer(r, r) % n).astype(np.int32)
        R = RingHandle(n, "zn", f"Z{n}", one=(1 if n > 1 else 0), add_table=add, mul_table=mul, limits=limits, meta={"n": n})
    else:
        R = RingHandle(
            n, "zn", f"Z{n}", one=(1 if n > 1 else 0),
            add_fn=lambda a, b: (a + b) % n, mul_fn=lambda a, b: (a * b) % n,
            neg_fn=lambda a: (-a) % n, limits=limits, meta={"n": n},
        )
    if validate:
        _validate_on_construction(R)
    return R


def product_ring(factors: list[RingHandle], limits: EngineLimits = DEFAULT_LIMITS, validate: bool = True) -> RingHandle:
    if not factors:
        raise ValueError("product needs at least one factor")
    radices = [f.cardinality for f in factors]
    n = math.prod(radices)
    one = None
    if all(f.one is not None for f in factors):
        one = _encode([f.one for f in factors], radices)

    def add_fn(a, b):
        da, db = _decode(a, radices), _decode(b, radices)
        return _encode([f.add(x, y) for f, x, y in zip(factors, da, db)], radices)

    def mul_fn(a, b):
        da, db = _decode(a, radices), _decode(b, radices)
        return _encode([f.mul(x, y) for f, x, y in zip(factors, da, db)], radices)

    def neg_fn(a):
        return _encode([f.neg(x) for f, x in zip(factors, _decode(a, radices))], radices)

    def builder():
        digits = _digit_matrix(n, radices)
        w = _weights(radices)
        add = np.zeros((n, n), dtype=np.int64)
        mul = np.zeros((n, n), dtype=np.int64)
        for i, f in enumerate(factors):
            ci = digits[:, i]
            add += f.add_table[np.ix_(ci, ci)].astype(np.int64) * w[i]
            mul += f.mul_table[np.ix_(ci, ci)].astype(np.int64) * w[i]
        return add.astype(np.int32), mul.astype(np.int32)

    def labeler(code):
        return "(" + ",".join(f.label(x) for f, x in zip(factors, _decode(code, radices))) + ")"

    meta = {"factors": factors}
    R = RingHandle(
        n, "product", " x ".join(f.name for f in factors), one=one,
        add_fn=add_fn, mul_fn=mul_fn, neg_fn=neg_fn,
        table_builder=builder if n <= limits.enumeration_cap else None,
        labeler=labeler, meta=meta, limits=limits,
    )
    if n <= limits.table_cap:
        R._require_tables()
    if validate:
        _validate_on_construction(R)
    return R


def matrix_ring(base: RingHandle, k: int, limits: EngineLimits = DEFAULT_LIMITS, validate: bool = True) -> RingHandle:
    """k x k matrices over base; entries stored row-major as little-endian digits."""
    if k < 1:
        raise ValueError("matrix ring needs k >= 1")
    m = base.cardinality
    radices = [m] * (k * k)
    n = m ** (k * k)

    def mat(code):
        d = _decode(code, radices)
        return [[d[r * k + c] for c in range(k)] for r in range(k)]

    def unmat(rows):
        return _encode([rows[r][c] for r in range(k) for c in range(k)], radices)

    def add_fn(a, b):
        A, B = mat(a), mat(b)
        return unmat([[base.add(A[r][c], B[r][c]) for c in range(k)] for r in range(k)])

    def mul_fn(a, b):
        A, B = mat(a), mat(b)
        out = [[0] * k for _ in range(k)]
        for r in range(k):
            for c in range(k):
                acc = base.zero
                for l in range(k):
                    acc = base.add(acc, base.mul(A[r][l], B[l][c]))
                out[r][c] = acc
        return unmat(out)

    def neg_fn(a):
        A = mat(a)
        return unmat([[base.neg(A[r][c]) for c in range(k)] for r in range(k)])

    one = None
    if base.one is not None:
        one = unmat([[base.one if r == c else base.zero for c in range(k)] for r in range(k)])

    def builder():
        if base.construction != "zn":
            raise CapacityError(f"no dense table builder for matrices over {base.name}")
        digits = _digit_matrix(n, radices)
        mats = digits.reshape(n, k, k)
        add = np.zeros((n, n), dtype=np.int64)
        w = _weights(radices)
        for i in range(k * k):
            ci = digits[:, i]
            add += ((ci[:, None] + ci[None, :]) % m).astype(np.int64) * w[i]
        mul = np.zeros((n, n), dtype=np.int64)
        prod = np.einsum("aij,bjk->abik", mats, mats) % m
        for r in range(k):
            for c in range(k):
                mul += prod[:, :, r, c].astype(np.int64) * w[r * k + c]
        return add.astype(np.int32), mul.astype(np.int32)

    def labeler(code):
        A = mat(code)
        return "[" + ";".join(",".join(base.label(x) for x in row) for row in A) + "]"

    R = RingHandle(
        n, "matrix", f"M{k}({base.name})", one=one,
        add_fn=add_fn, mul_fn=mul_fn, neg_fn=neg_fn,
        table_builder=builder if n <= limits.enumeration_cap else None,
        labeler=labeler, meta={"base": base, "k": k}, limits=limits,
    )
    if validate:
        _validate_on_construction(R)
    return R


def _structure_ring(
    base: RingHandle, S: CayleyStructure, construction: str,
    limits: EngineLimits, validate: bool,
) -> RingHandle:
    """Common core of group rings and semigroup rings: coefficient vectors over
    base indexed by structure elements, with convolution multiplication."""
    m = base.cardinality
    s = S.size
    radices = [m] * s
    n = m**s

    def add_fn(a, b):
        da, db = _decode(a, radices), _decode(b, radices)
        return _encode([base.add(x, y) for x, y in zip(da, db)], radices)

    def neg_fn(a):
        return _encode([base.neg(x) for x in _decode(a, radices)], radices)

    table = S.table

    def mul_fn(a, b):
        da, db = _decode(a, radices), _decode(b, radices)
        out = [base.zero] * s
        for g in range(s):
            cg = da[g]
            if cg == base.zero:
                continue
            for h in range(s):
                ch = db[h]
                if ch == base.zero:
                    continue
                k = int(table[g, h])
                out[k] = base.add(out[k], base.mul(cg, ch))
        return _encode(out, radices)

    one = None
    if base.one is not None and S.identity is not None:
        coeffs = [base.zero] * s
        coeffs[S.identity] = base.one
        one = _encode(coeffs, radices)

    def builder():
        if base.construction != "zn":
            raise CapacityError(f"no dense table builder over {base.name}")
        digits = _digit_matrix(n, radices)
        w = _weights(radices)
        add = np.zeros((n, n), dtype=np.int64)
        for i in range(s):
            ci = digits[:, i]
            add += ((ci[:, None] + ci[None, :]) % m).astype(np.int64) * w[i]
        res = np.zeros((n, n, s), dtype=np.int64)
        for g in range(s):
            for h in range(s):
                k = int(table[g, h])
                res[:, :, k] += np.multiply.outer(digits[:, g], digits[:, h])
        res %= m
        mul = np.zeros((n, n), dtype=np.int64)
        for i in range(s):
            mul += res[:, :, i] * w[i]
        return add.astype(np.int32), mul.astype(np.int32)

    def labeler(code):
        terms = []
        for g, c in enumerate(_decode(code, radices)):
            if c == base.zero:
                continue
            gl = S.label(g)
            if S.identity is not None and g == S.identity:
                terms.append(base.label(c))
            elif c == base.one:
                terms.append(f"[{gl}]")
            else:
                terms.append(f"{base.label(c)}[{gl}]")
        return "+".join(terms) if terms else "0"

    R = RingHandle(
        n, construction, f"{base.name}{S.name}", one=one,
        add_fn=add_fn, mul_fn=mul_fn, neg_fn=neg_fn,
        table_builder=builder if n <= limits.enumeration_cap else None,
        labeler=labeler, meta={"base": base, "structure": S}, limits=limits,
    )
    if validate:
        _validate_on_construction(R)
    return R


def group_ring(base: RingHandle, G: CayleyStructure, limits: EngineLimits = DEFAULT_LIMITS, validate: bool = True) -> RingHandle:
    if G.kind != "group":
        raise ValueError("group_ring needs a group")
    return _structure_ring(base, G, "group_ring", limits, validate)


def semigroup_ring(base: RingHandle, S: CayleyStructure, limits: EngineLimits = DEFAULT_LIMITS, validate: bool = True) -> RingHandle:
    return _structure_ring(base, S, "semigroup_ring", limits, validate)


def quaternion_ring(n: int, limits: EngineLimits = DEFAULT_LIMITS, validate: bool = True) -> RingHandle:
    """Coefficient 4-tuples over Z_n with i2 = j2 = k2 = ijk = n-1.

    Multiplication is derived from the generator relations (ij = k,
    ji = (n-1)k, jk = i, kj = (n-1)i, ki = j, ik = (n-1)j) extended
    bilinearly.
    """
    if n < 2:
        raise ValueError("quaternion ring needs modulus n >= 2")
    radices = [n] * 4
    size = n**4

    def mul_vec(p, q):
        p0, p1, p2, p3 = p
        q0, q1, q2, q3 = q
        return (
            (p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3) % n,
            (p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2) % n,
            (p0 * q2 + p2 * q0 + p3 * q1 - p1 * q3) % n,
            (p0 * q3 + p3 * q0 + p1 * q2 - p2 * q1) % n,
        )

    def add_fn(a, b):
        da, db = _decode(a, radices), _decode(b, radices)
        return _encode([(x + y) % n for x, y in zip(da, db)], radices)

    def mul_fn(a, b):
        return _encode(mul_vec(_decode(a, radices), _decode(b, radices)), radices)

    def neg_fn(a):
        return _encode([(-x) % n for x in _decode(a, radices)], radices)

    def builder():
        d = _digit_matrix(size, radices)
        w = _weights(radices)
        add = np.zeros((size, size), dtype=np.int64)
        for i in range(4):
            ci = d[:, i]
            add += ((ci[:, None] + ci[None, :]) % n).astype(np.int64) * w[i]
        p = [d[:, i][:, None] for i in range(4)]
        q = [d[:, i][None, :] for i in range(4)]
        comps = [
            (p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3]) % n,
            (p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2]) % n,
            (p[0] * q[2] + p[2] * q[0] + p[3] * q[1] - p[1] * q[3]) % n,
            (p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]) % n,
        ]
        mul = np.zeros((size, size), dtype=np.int64)
        for i in range(4):
            mul += comps[i].astype(np.int64) * w[i]
        return add.astype(np.int32), mul.astype(np.int32)

    def labeler(code):
        p = _decode(code, radices)
        units = ["", "i", "j", "k"]
        terms = [f"{c}{u}" if u else str(c) for c, u in zip(p, units) if c]
        return "+".join(terms) if terms else "0"

    R = RingHandle(
        size, "quaternion", f"Q(Z{n})", one=_encode([1, 0, 0, 0], radices),
        add_fn=add_fn, mul_fn=mul_fn, neg_fn=neg_fn,
        table_builder=builder if size <= limits.enumeration_cap else None,
        labeler=labeler, meta={"n": n}, limits=limits,
    )
    if validate:
        _validate_on_construction(R)
    return R


def table_ring(
    add_rows, mul_rows, name: str = "table", one: int | None = None,
    limits: EngineLimits = DEFAULT_LIMITS, validate: bool = True,
    labeler: Callable[[int], str] | None = None,
) -> RingHandle:
    add = np.asarray(add_rows, dtype=np.int32)
    mul = np.asarray(mul_rows, dtype=np.int32)
    n = add.shape[0]
    if one is None:
        idx = np.arange(n)
        for e in range(n):
            if np.array_equal(mul[e], idx) and np.array_equal(mul[:, e], idx):
                one = e
                break
    R = RingHandle(n, "table", name, one=one, add_table=add, mul_table=mul, limits=limits, labeler=labeler)
    if validate:
        _validate_on_construction(R)
    return R


def subring_as_ring(R: RingHandle, mask: int, name: str | None = None, validate: bool = False) -> RingHandle:
    """The induced ring on a (pre-verified) subring subset; codes are positions
    in the ascending member list, zero stays at code 0."""
    members = elements_of(mask)
    if members[0] != R.zero:
        raise ValueError("subring subset must contain zero")
    arr = np.array(members)
    pos = {m: i for i, m in enumerate(members)}
    add = np.array([[pos[R.add(a, b)] for b in members] for a in members], dtype=np.int32)
    mul = np.array([[pos[R.mul(a, b)] for b in members] for a in members], dtype=np.int32)
    sub = table_ring(add, mul, name=name or f"{R.name}|{mask:x}", limits=R.limits,
                     validate=validate, labeler=lambda c: R.label(int(arr[c])))
    sub.meta["parent"] = R
    sub.meta["parent_elements"] = members
    return sub


# -- quotients -----------------------------------------------------------------


def is_two_sided_ideal(R: RingHandle, mask: int) -> bool:
    """Direct definition check: additive subgroup absorbing both-sided products."""
    if not contains(mask, R.zero):
        return False
    members = elements_of(mask)
    for a in members:
        for b in members:
            if not contains(mask, R.add(a, b)):
                return False
        if not contains(mask, R.neg(a)):
            return False
    for r in R.elements():
        for a in members:
            if not contains(mask, R.mul(r, a)) or not contains(mask, R.mul(a, r)):
                return False
    return True


def quotient_ring(R: RingHandle, ideal_mask: int, validate: bool = True) -> RingHandle:
    """R/I with canonical coset representatives (least element code per coset)."""
    if not R.enumerable:
        raise CapacityError(f"{R.name}: quotient needs an enumerable ring")
    if not is_two_sided_ideal(R, ideal_mask):
        raise ValueError("subset is not a two-sided ideal")
    members = elements_of(ideal_mask)
    rep = np.full(R.cardinality, -1, dtype=np.int64)
    for x in R.elements():
        if rep[x] >= 0:
            continue
        coset = sorted(R.add(x, i) for i in members)
        for y in coset:
            rep[y] = coset[0]
    reps = sorted(set(int(r) for r in rep))
    pos = {r: i for i, r in enumerate(reps)}
    k = len(reps)
    add = np.array([[pos[int(rep[R.add(a, b)])] for b in reps] for a in reps], dtype=np.int32)
    mul = np.array([[pos[int(rep[R.mul(a, b)])] for b in reps] for a in reps], dtype=np.int32)
    one = pos[int(rep[R.one])] if R.one is not None else None
    Q = RingHandle(
        k, "quotient", f"{R.name}/I{ideal_mask:x}", one=one,
        add_table=add, mul_table=mul, limits=R.limits,
        meta={"parent": R, "ideal": ideal_mask, "reps": reps},
        labeler=lambda c: f"{R.label(reps[c])}+I",
    )
    if validate:
        _validate_on_construction(Q)
    return Q


# -- characteristic --------------------------------------------------------------


def characteristic(R: RingHandle) -> int:
    """Least m >= 1 with m.x = 0 for every x: the additive exponent."""
    if R.enumerable:
        n = R.cardinality
        idx = np.arange(n)
        acc = idx.copy()
        m = 1
        add = R.add_table
        while not (acc == R.zero).all():
            acc = add[acc, idx]
            m += 1
            if m > n:
                raise ValidationError(f"{R.name}: additive structure is not a group")
        return m
    # above the cap: derive from the construction
    if R.construction == "zn":
        return R.meta["n"]
    if R.construction == "quaternion":
        return R.meta["n"]
    if R.construction == "product":
        return math.lcm(*(characteristic(f) for f in R.meta["factors"]))
    if R.construction in ("group_ring", "semigroup_ring", "matrix"):
        return characteristic(R.meta["base"])
    raise CapacityError(f"{R.name}: characteristic needs an enumerable ring")


# -- hyperrings -------------------------------------------------------------------


@dataclass(frozen=True)
class HyperPairSet:
    """Pairs (x op y, x op y op q) over Z_n for one operation and shift q."""

    n: int
    q: int
    op_kind: str  # "additive" | "multiplicative"
    pairs: frozenset
    is_subring: bool


def hyperring(n: int, q: int, op_kind: str) -> HyperPairSet:
    if not 0 <= q < n:
        raise ValueError("shift q must satisfy 0 <= q < n")
    if op_kind not in ("additive", "multiplicative"):
        raise ValueError("op_kind must be additive or multiplicative")
    pairs = set()
    for x in range(n):
        for y in range(n):
            if op_kind == "additive":
                t = (x + y) % n
                pairs.add((t, (t + q) % n))
            else:
                t = (x * y) % n
                pairs.add((t, (t * q) % n))
    frozen = frozenset(pairs)

    def member(p):
        return p in frozen

    closed = True
    for a in frozen:
        for b in frozen:
            diff = ((a[0] - b[0]) % n, (a[1] - b[1]) % n)
            prod = ((a[0] * b[0]) % n, (a[1] * b[1]) % n)
            if not member(diff) or not member(prod):
                closed = False
                break
        if not closed:
            break
    return HyperPairSet(n, q, op_kind, frozen, closed)


def hyperring_family_partition(n: int, op_kind: str) -> tuple[bool, bool]:
    """(pairwise disjoint, union covers Z_n x Z_n) over all shifts q."""
    seen: dict[tuple[int, int], int] = {}
    disjoint = True
    for q in range(n):
        for p in hyperring(n, q, op_kind).pairs:
            if p in seen and seen[p] != q:
                disjoint = False
            seen[p] = q
    covers = len(seen) == n * n
    return disjoint, covers
