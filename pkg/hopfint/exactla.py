"""Exact scalars and dense matrices over ℚ and prime fields 𝔽_p.

Rational entries are ``Fraction`` objects held in numpy object arrays; 𝔽_p
entries are int64 residues in [0, p), reduced after every operation.

Conventions used throughout the package:
  - e_i ⊗ e_j in V ⊗ W sits at flat index i·dim W + j (the ``np.kron`` order).
  - a linear map V → W is a (dim W × dim V) matrix whose column j is f(e_j).
  - vec(F) of a matrix F is its row-major flattening.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Generic, Iterable, Sequence, TypeVar

import numpy as np

from hopfint.errors import InvalidInput

log = logging.getLogger(__name__)

# p·p must fit in int64 with room for a sum of products
MAX_PRIME = 1 << 20


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


# ── Fields ────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Field:
    kind: str            # "Q" or "Fp"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise InvalidInput("the rational field takes no modulus")
        elif self.kind == "Fp":
            if isinstance(self.p, bool) or not isinstance(self.p, int):
                raise InvalidInput(f"prime field needs an integer modulus, got {self.p!r}")
            if not _is_prime(self.p):
                raise InvalidInput(f"{self.p} is not prime")
            if self.p >= MAX_PRIME:
                raise InvalidInput(f"prime {self.p} is too large (limit {MAX_PRIME})")
        else:
            raise InvalidInput(f"unknown field type {self.kind!r}")

    @classmethod
    def rationals(cls) -> Field:
        return cls("Q")

    @classmethod
    def prime(cls, p: int) -> Field:
        return cls("Fp", p)

    @property
    def is_rational(self) -> bool:
        return self.kind == "Q"

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "Q" else self.p

    @property
    def dtype(self):
        return object if self.kind == "Q" else np.int64

    def __str__(self) -> str:
        return "Q" if self.kind == "Q" else f"F{self.p}"

    # ── raw elements ──

    def coerce(self, value: Any) -> Any:
        """Map an int, Fraction, string "a/b", or FieldScalar to a raw element."""
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise InvalidInput(f"mixed fields: {value.field} and {self}")
            return value.value
        if isinstance(value, str):
            text = value.strip().replace("−", "-")
            try:
                value = Fraction(text)
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidInput(f"cannot parse {value!r} as a field element") from exc
        if isinstance(value, (bool, np.bool_)):
            value = int(value)
        if isinstance(value, np.integer):
            value = int(value)
        if isinstance(value, (float, np.floating)):
            raise InvalidInput(f"floating-point value {value!r} is not an exact scalar")
        try:
            value = Fraction(value)
        except TypeError as exc:
            raise InvalidInput(f"{value!r} is not a field element") from exc
        if self.kind == "Q":
            return value
        den = value.denominator % self.p
        if den == 0:
            raise InvalidInput(f"{value} has no image in {self}")
        return value.numerator % self.p * pow(den, -1, self.p) % self.p

    def one(self) -> Any:
        return Fraction(1) if self.kind == "Q" else 1

    def zero(self) -> Any:
        return Fraction(0) if self.kind == "Q" else 0

    def inv(self, value: Any) -> Any:
        if value == 0:
            raise InvalidInput("division by zero")
        if self.kind == "Q":
            return 1 / Fraction(value)
        return pow(int(value), -1, self.p)

    def format(self, value: Any) -> str:
        if self.kind == "Q":
            return str(Fraction(value))
        return str(int(value) % self.p)

    def parse(self, text: str) -> Any:
        return self.coerce(str(text))

    def scalar(self, value: Any) -> FieldScalar:
        return FieldScalar(self, value)

    # ── arrays ──

    def asarray(self, values: Any) -> np.ndarray:
        """A fresh array of raw elements with this field's dtype."""
        if isinstance(values, np.ndarray):
            if self.kind == "Q" and values.dtype == object:
                return np.array(values, dtype=object)
            if self.kind == "Fp" and np.issubdtype(values.dtype, np.integer):
                return np.mod(values.astype(np.int64), self.p)
        arr = np.asarray(values, dtype=object)
        out = np.empty(arr.size, dtype=object)
        for k, v in enumerate(arr.flat):
            out[k] = self.coerce(v)
        out = out.reshape(arr.shape)
        return out if self.kind == "Q" else out.astype(np.int64)

    def zeros(self, shape: int | tuple[int, ...]) -> np.ndarray:
        if self.kind == "Q":
            return np.full(shape, Fraction(0), dtype=object)
        return np.zeros(shape, dtype=np.int64)

    def ones(self, shape: int | tuple[int, ...]) -> np.ndarray:
        if self.kind == "Q":
            return np.full(shape, Fraction(1), dtype=object)
        return np.ones(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        np.fill_diagonal(out, self.one())
        return out

    def reduce(self, arr: Any) -> Any:
        if self.kind == "Q":
            return arr
        return np.mod(arr, self.p)

    def tensordot(self, a: np.ndarray, b: np.ndarray, axes) -> np.ndarray:
        left, right = axes
        if any(a.shape[i] == 0 for i in left):
            shape = tuple(s for i, s in enumerate(a.shape) if i not in left) + \
                tuple(s for i, s in enumerate(b.shape) if i not in right)
            return self.zeros(shape)
        return self.reduce(np.tensordot(a, b, axes=axes))

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[-1] == 0:
            return self.zeros(a.shape[:-1] + b.shape[1:])
        return self.reduce(a @ b)

    def kron(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        ra, ca = a.shape
        rb, cb = b.shape
        out = np.multiply.outer(a, b).transpose(0, 2, 1, 3).reshape(ra * rb, ca * cb)
        return self.reduce(out)

    def format_array(self, arr: np.ndarray) -> list:
        return np.frompyfunc(self.format, 1, 1)(arr).tolist()


# ── Scalars ───────────────────────────────────────────────────────────────────

@dataclass(frozen=True, eq=False)
class FieldScalar:
    field: Field
    value: Any

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.coerce(self.value))

    def _other(self, other: Any) -> Any:
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise InvalidInput(f"mixed fields: {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, Fraction, np.integer, str)):
            return self.field.coerce(other)
        return NotImplemented

    def _new(self, value: Any) -> FieldScalar:
        return FieldScalar(self.field, value)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * self.field.inv(o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._new(o * self.field.inv(self.value))

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if self.field.kind == "Q":
            return self._new(self.value ** k)
        return self._new(pow(int(self.value), k, self.field.p))

    def inverse(self) -> FieldScalar:
        return self._new(self.field.inv(self.value))

    def __eq__(self, other):
        try:
            o = self._other(other)
        except InvalidInput:
            return NotImplemented
        if o is NotImplemented:
            return NotImplemented
        return self.value == o

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    @property
    def numerator(self) -> int:
        return Fraction(self.value).numerator

    @property
    def denominator(self) -> int:
        return Fraction(self.value).denominator

    @property
    def residue(self) -> int:
        if self.field.kind != "Fp":
            raise InvalidInput("residue is defined for prime fields only")
        return int(self.value)

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return f"FieldScalar({self.field}, {self})"


# ── Matrices ──────────────────────────────────────────────────────────────────

@dataclass(frozen=True, eq=False)
class Matrix:
    field: Field
    data: np.ndarray

    def __post_init__(self):
        data = self.field.asarray(self.data)
        if data.ndim != 2:
            raise InvalidInput(f"a matrix must be 2-dimensional, got shape {data.shape}")
        data.flags.writeable = False
        object.__setattr__(self, "data", data)

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence[Any]]) -> Matrix:
        rows = [list(r) for r in rows]
        if len({len(r) for r in rows}) > 1:
            raise InvalidInput("rows have different lengths")
        if not rows:
            return cls(field, field.zeros((0, 0)))
        return cls(field, field.asarray(rows))

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        return cls(field, field.eye(n))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> Matrix:
        return cls(field, field.zeros((rows, cols)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def _check(self, other: Matrix):
        if not isinstance(other, Matrix):
            raise InvalidInput(f"expected a Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise InvalidInput(f"mixed fields: {self.field} and {other.field}")

    def __matmul__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.cols != other.rows:
            raise InvalidInput(f"cannot compose {self.shape} with {other.shape}")
        return Matrix(self.field, self.field.matmul(self.data, other.data))

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.shape != other.shape:
            raise InvalidInput(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(self.field, self.field.reduce(self.data + other.data))

    def __sub__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.shape != other.shape:
            raise InvalidInput(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(self.field, self.field.reduce(self.data - other.data))

    def __neg__(self) -> Matrix:
        return Matrix(self.field, self.field.reduce(-self.data))

    def scale(self, c: Any) -> Matrix:
        return Matrix(self.field, self.field.reduce(self.data * self.field.coerce(c)))

    @property
    def T(self) -> Matrix:
        return Matrix(self.field, self.data.T)

    def kron(self, other: Matrix) -> Matrix:
        return kron(self, other)

    def entry(self, i: int, j: int) -> FieldScalar:
        return FieldScalar(self.field, self.data[i, j])

    def apply(self, vector: Any) -> np.ndarray:
        v = self.field.asarray(vector)
        if v.shape != (self.cols,):
            raise InvalidInput(f"vector of length {v.shape} does not fit a {self.shape} matrix")
        return self.field.matmul(self.data, v.reshape(-1, 1)).reshape(-1)

    def is_zero(self) -> bool:
        return not np.any(self.data != 0)

    def is_identity(self) -> bool:
        return self.rows == self.cols and bool(np.array_equal(self.data, self.field.eye(self.rows)))

    def rank(self) -> int:
        return rank(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and bool(np.array_equal(self.data, other.data)))

    __hash__ = None

    def to_strings(self) -> list[list[str]]:
        return [[self.field.format(x) for x in row] for row in self.data]

    def __repr__(self) -> str:
        return f"Matrix({self.field}, {self.to_strings()})"


S = TypeVar("S")
T = TypeVar("T")


@dataclass(frozen=True, eq=False)
class LinearMap(Generic[S, T]):
    source: S
    target: T
    matrix: Matrix


# ── Elimination ───────────────────────────────────────────────────────────────

_numerators = np.frompyfunc(lambda x: x.numerator, 1, 1)
_denominators = np.frompyfunc(lambda x: x.denominator, 1, 1)


def _integer_rows(data: np.ndarray) -> np.ndarray:
    """Rational rows scaled by the lcm of their denominators, as Python ints."""
    out = np.empty(data.shape, dtype=object)
    if not data.size:
        return out
    num, den = _numerators(data), _denominators(data)
    for i in range(data.shape[0]):
        out[i] = num[i] * (math.lcm(*den[i]) // den[i])
    return out


def _make_primitive(block: np.ndarray) -> None:
    for i in range(block.shape[0]):
        g = math.gcd(*block[i])
        if g > 1:
            block[i] = block[i] // g


def _eliminate(a: np.ndarray, clear: Callable[[np.ndarray, int, int], None]) -> list[int]:
    """Gauss-Jordan in place; clear(a, r, c) zeroes column c outside pivot row r."""
    n, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == n:
            break
        hits = np.flatnonzero(a[r:, c] != 0)
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        clear(a, r, c)
        pivots.append(c)
        r += 1
    return pivots


def _others(a: np.ndarray, r: int, c: int) -> np.ndarray:
    rows = np.flatnonzero(a[:, c] != 0)
    return rows[rows != r]


def _clear_integers(a: np.ndarray, r: int, c: int) -> None:
    # fraction-free: other rows become lead·row − row[c]·pivot row, then primitive
    others = _others(a, r, c)
    if others.size:
        block = a[others] * a[r, c] - np.multiply.outer(a[others, c], a[r])
        _make_primitive(block)
        a[others] = block


def _rref(field: Field, data: np.ndarray) -> tuple[np.ndarray, list[int]]:
    rows, cols = data.shape
    live = np.flatnonzero(np.any(data != 0, axis=1)) if data.size else np.arange(0)
    out = field.zeros((rows, cols))
    if field.is_rational:
        a = _integer_rows(data[live])
        pivots = _eliminate(a, _clear_integers)
        for i, c in enumerate(pivots):
            lead = a[i, c]
            out[i] = [Fraction(x, lead) for x in a[i]]
        return out, pivots

    def clear_residues(a: np.ndarray, r: int, c: int) -> None:
        a[r] = field.reduce(a[r] * field.inv(a[r, c]))
        others = _others(a, r, c)
        if others.size:
            a[others] = field.reduce(a[others] - np.multiply.outer(a[others, c], a[r]))

    a = np.array(data[live], dtype=np.int64)
    pivots = _eliminate(a, clear_residues)
    out[:a.shape[0]] = a
    return out, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row echelon form, pivot columns and rank."""
    red, pivots = _rref(m.field, m.data)
    return Matrix(m.field, red), pivots, len(pivots)


def rank(m: Matrix) -> int:
    return len(_rref(m.field, m.data)[1])


def kernel_basis(m: Matrix) -> list[np.ndarray]:
    """One kernel vector per free column; length = cols − rank."""
    field = m.field
    red, pivots = _rref(field, m.data)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = field.zeros(m.cols)
        v[f] = field.one()
        if pivots:
            v[pivots] = field.reduce(-red[:len(pivots), f])
        basis.append(v)
    log.debug("kernel of %dx%d matrix: rank %d, nullity %d",
              m.rows, m.cols, len(pivots), len(basis))
    return basis


def solve_linear(m: Matrix, b: Any) -> np.ndarray | None:
    """Some x with m·x = b, or None when the system is inconsistent."""
    field = m.field
    rhs = field.asarray(b)
    if rhs.shape != (m.rows,):
        raise InvalidInput(f"right-hand side of length {rhs.shape} for a {m.shape} system")
    x = solve_columns(m, rhs.reshape(-1, 1))
    return None if x is None else x.reshape(-1)


def solve_columns(m: Matrix, rhs: np.ndarray) -> np.ndarray | None:
    """Solve m·X = rhs for a block of right-hand sides at once."""
    field = m.field
    cols = m.cols
    aug = np.concatenate([m.data, field.asarray(rhs)], axis=1)
    red, pivots = _rref(field, aug)
    if pivots and pivots[-1] >= cols:
        return None
    x = field.zeros((cols, rhs.shape[1]))
    for i, pc in enumerate(pivots):
        x[pc] = red[i, cols:]
    return x


def coordinates(field: Field, basis: Sequence[np.ndarray], targets: Sequence[np.ndarray]
                ) -> np.ndarray | None:
    """Coordinates of each target in an independent basis, column by column."""
    length = targets[0].size if targets else (basis[0].size if basis else 0)
    b = column_stack(field, [v.reshape(-1) for v in basis], length)
    t = column_stack(field, [v.reshape(-1) for v in targets], length)
    return solve_columns(Matrix(field, b), t)


def column_stack(field: Field, vectors: Iterable[np.ndarray], length: int) -> np.ndarray:
    vectors = list(vectors)
    if not vectors:
        return field.zeros((length, 0))
    return np.stack(vectors, axis=1)


def kron(a: Matrix, b: Matrix) -> Matrix:
    a._check(b)
    return Matrix(a.field, a.field.kron(a.data, b.data))


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise InvalidInput(f"only square matrices are invertible, got {m.shape}")
    n = m.rows
    red, pivots = _rref(m.field, np.concatenate([m.data, m.field.eye(n)], axis=1))
    if len(pivots) < n or (pivots and pivots[-1] >= n):
        raise InvalidInput("matrix is singular")
    return Matrix(m.field, red[:, n:])


def matrix_power(m: Matrix, k: int) -> Matrix:
    if m.rows != m.cols:
        raise InvalidInput(f"only square matrices have powers, got {m.shape}")
    if k < 0:
        m, k = inverse(m), -k
    result = Matrix.identity(m.field, m.rows)
    base = m
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result


# ── Intertwiners ──────────────────────────────────────────────────────────────

def intertwiners(field: Field, source_ops: np.ndarray, target_ops: np.ndarray) -> list[Matrix]:
    """Basis of {F : F·A_s = B_s·F for all s}, A_s = source_ops[s], B_s = target_ops[s].

    Unknowns are vec(F); vec(F·A) = (I ⊗ Aᵀ)·vec F and vec(B·F) = (B ⊗ I)·vec F.
    """
    count, d, _ = source_ops.shape
    e = target_ops.shape[1]
    eye_d, eye_e = field.eye(d), field.eye(e)
    blocks = [field.reduce(field.kron(eye_e, a.T) - field.kron(b, eye_d))
              for a, b in zip(source_ops, target_ops)]
    system = np.concatenate(blocks) if blocks else field.zeros((0, e * d))
    return [Matrix(field, v.reshape(e, d)) for v in kernel_basis(Matrix(field, system))]
