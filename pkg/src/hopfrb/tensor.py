"""Sparse multi-index tensors and square linear operators over an exact field.

Tensor products of spaces are flattened row-major: the pair ``(i, j)`` of
``V (dim m) ⊗ W (dim n)`` is the index ``i * n + j``.  This is the only pairing
convention used anywhere in the package.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import product
from typing import Iterable, Mapping, Sequence

Index = tuple


class SparseTensor:
    """An immutable map from multi-indices to nonzero exact coefficients."""

    __slots__ = ("dims", "_entries", "_fibers")

    def __init__(self, dims: Sequence[int], entries: Mapping[Index, object] | None = None):
        self.dims = tuple(int(d) for d in dims)
        clean = {}
        if entries:
            for key, c in entries.items():
                key = tuple(key)
                if len(key) != len(self.dims):
                    raise ValueError(f"index {key} has arity {len(key)}, expected {len(self.dims)}")
                for k, d in zip(key, self.dims):
                    if not 0 <= k < d:
                        raise ValueError(f"index {key} out of range for dims {self.dims}")
                if c:
                    clean[key] = c
        self._entries = clean
        self._fibers = {}

    # -- construction ---------------------------------------------------
    @classmethod
    def zeros(cls, dims: Sequence[int]) -> "SparseTensor":
        return cls(dims)

    @classmethod
    def basis(cls, dim: int, i: int, one=1) -> "SparseTensor":
        return cls((dim,), {(i,): one})

    @classmethod
    def from_dense(cls, rows) -> "SparseTensor":
        """Build from nested lists (any arity)."""
        dims = []
        probe = rows
        while isinstance(probe, (list, tuple)):
            dims.append(len(probe))
            probe = probe[0] if probe else None
        entries = {}
        for key in product(*(range(d) for d in dims)):
            v = rows
            for k in key:
                v = v[k]
            if v:
                entries[key] = v
        return cls(dims, entries)

    @classmethod
    def _raw(cls, dims, entries: dict) -> "SparseTensor":
        t = cls.__new__(cls)
        t.dims = tuple(dims)
        t._entries = {k: v for k, v in entries.items() if v}
        t._fibers = {}
        return t

    # -- access -----------------------------------------------------------
    @property
    def arity(self) -> int:
        return len(self.dims)

    def __getitem__(self, key) -> object:
        if not isinstance(key, tuple):
            key = (key,)
        return self._entries.get(key, 0)

    def items(self):
        return self._entries.items()

    def keys(self):
        return self._entries.keys()

    def __len__(self):
        return len(self._entries)

    def nnz(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def support(self) -> list:
        return sorted(self._entries)

    def to_dense(self):
        def build(prefix, depth):
            if depth == len(self.dims):
                return self._entries.get(tuple(prefix), 0)
            return [build(prefix + [i], depth + 1) for i in range(self.dims[depth])]

        return build([], 0)

    def fibers(self, n_in: int) -> dict:
        """Group entries by their first ``n_in`` indices: ``{in_key: [(out_key, c), ...]}``.

        Cached, since a structure tensor is typically applied many times.
        """
        cached = self._fibers.get(n_in)
        if cached is None:
            cached = defaultdict(list)
            for key, c in sorted(self._entries.items()):
                cached[key[:n_in]].append((key[n_in:], c))
            cached = dict(cached)
            self._fibers[n_in] = cached
        return cached

    # -- algebra --------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, SparseTensor):
            return NotImplemented
        return self.dims == other.dims and self._entries == other._entries

    def __hash__(self):
        return hash((self.dims, frozenset(self._entries.items())))

    def _check_same(self, other: "SparseTensor"):
        if self.dims != other.dims:
            raise ValueError(f"dimension mismatch: {self.dims} vs {other.dims}")

    def __add__(self, other: "SparseTensor") -> "SparseTensor":
        self._check_same(other)
        out = dict(self._entries)
        for k, c in other._entries.items():
            out[k] = out.get(k, 0) + c
        return SparseTensor._raw(self.dims, out)

    def __sub__(self, other: "SparseTensor") -> "SparseTensor":
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "SparseTensor":
        if not c:
            return SparseTensor._raw(self.dims, {})
        return SparseTensor._raw(self.dims, {k: c * v for k, v in self._entries.items()})

    def outer(self, other: "SparseTensor") -> "SparseTensor":
        out = {}
        for k1, c1 in self._entries.items():
            for k2, c2 in other._entries.items():
                out[k1 + k2] = c1 * c2
        return SparseTensor._raw(self.dims + other.dims, out)

    def transpose(self, perm: Sequence[int]) -> "SparseTensor":
        """Reorder indices: new index position ``p`` holds old index ``perm[p]``."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.arity)):
            raise ValueError(f"{perm} is not a permutation of {self.arity} indices")
        dims = tuple(self.dims[p] for p in perm)
        return SparseTensor._raw(dims, {tuple(k[p] for p in perm): c for k, c in self._entries.items()})

    def flatten(self) -> "SparseTensor":
        """Collapse all indices into one, row-major."""
        n = 1
        for d in self.dims:
            n *= d
        out = {}
        for key, c in self._entries.items():
            flat = 0
            for k, d in zip(key, self.dims):
                flat = flat * d + k
            out[(flat,)] = c
        return SparseTensor._raw((n,), out)

    def map_values(self, f) -> "SparseTensor":
        return SparseTensor._raw(self.dims, {k: f(c) for k, c in self._entries.items()})

    def __repr__(self):
        body = ", ".join(f"{k}: {c}" for k, c in sorted(self._entries.items()))
        return f"SparseTensor({self.dims}, {{{body}}})"


def tensor_contract(t: SparseTensor, u: SparseTensor, pairs: Iterable[tuple[int, int]]) -> SparseTensor:
    """Contract index ``p`` of ``t`` against index ``q`` of ``u`` for each ``(p, q)``.

    The free indices of ``t`` (in order) come first in the result, then those of ``u``.
    """
    pairs = list(pairs)
    tp = [p for p, _ in pairs]
    uq = [q for _, q in pairs]
    if len(set(tp)) != len(tp) or len(set(uq)) != len(uq):
        raise ValueError("an index may be contracted only once")
    for p, q in pairs:
        if not (0 <= p < t.arity and 0 <= q < u.arity):
            raise ValueError(f"contraction pair {(p, q)} out of range")
        if t.dims[p] != u.dims[q]:
            raise ValueError(f"dimension mismatch contracting {p}↔{q}: {t.dims[p]} vs {u.dims[q]}")
    t_free = [k for k in range(t.arity) if k not in tp]
    u_free = [k for k in range(u.arity) if k not in uq]
    by_key = defaultdict(list)
    for key, c in u.items():
        by_key[tuple(key[q] for q in uq)].append((tuple(key[k] for k in u_free), c))
    out = defaultdict(int)
    for key, c in t.items():
        rows = by_key.get(tuple(key[p] for p in tp))
        if not rows:
            continue
        head = tuple(key[k] for k in t_free)
        for tail, d in rows:
            out[head + tail] += c * d
    dims = tuple(t.dims[k] for k in t_free) + tuple(u.dims[k] for k in u_free)
    return SparseTensor._raw(dims, out)


class LinearOperator:
    """A square matrix; column ``j`` is the image of basis vector ``j``."""

    __slots__ = ("dim", "matrix", "_columns")

    def __init__(self, dim: int, matrix: SparseTensor | Mapping[tuple[int, int], object]):
        if not isinstance(matrix, SparseTensor):
            matrix = SparseTensor((dim, dim), matrix)
        if matrix.dims != (dim, dim):
            raise ValueError(f"operator matrix has dims {matrix.dims}, expected {(dim, dim)}")
        self.dim = dim
        self.matrix = matrix
        self._columns = None

    @classmethod
    def identity(cls, dim: int, one=1) -> "LinearOperator":
        return cls(dim, {(i, i): one for i in range(dim)})

    @classmethod
    def zero(cls, dim: int) -> "LinearOperator":
        return cls(dim, {})

    @classmethod
    def from_columns(cls, columns: Sequence[SparseTensor]) -> "LinearOperator":
        dim = len(columns)
        entries = {}
        for j, col in enumerate(columns):
            if col.dims != (dim,):
                raise ValueError(f"column {j} has dims {col.dims}, expected {(dim,)}")
            for (i,), c in col.items():
                entries[(i, j)] = c
        return cls(dim, entries)

    @classmethod
    def from_function_map(cls, images: Sequence[int], one=1) -> "LinearOperator":
        """Linear extension of a set map on basis indices."""
        return cls(len(images), {(img, j): one for j, img in enumerate(images)})

    def column(self, j: int) -> SparseTensor:
        if self._columns is None:
            cols = [dict() for _ in range(self.dim)]
            for (i, jj), c in self.matrix.items():
                cols[jj][(i,)] = c
            self._columns = [SparseTensor._raw((self.dim,), col) for col in cols]
        return self._columns[j]

    def columns(self) -> list[SparseTensor]:
        return [self.column(j) for j in range(self.dim)]

    def apply(self, v: SparseTensor) -> SparseTensor:
        if v.dims != (self.dim,):
            raise ValueError(f"cannot apply a {self.dim}-dim operator to a vector of dims {v.dims}")
        out = defaultdict(int)
        for (j,), c in v.items():
            for (i,), d in self.column(j).items():
                out[(i,)] += d * c
        return SparseTensor._raw((self.dim,), out)

    __call__ = apply

    def compose(self, other: "LinearOperator") -> "LinearOperator":
        """``self ∘ other``."""
        if self.dim != other.dim:
            raise ValueError(f"cannot compose {self.dim}-dim and {other.dim}-dim operators")
        return LinearOperator(self.dim, tensor_contract(self.matrix, other.matrix, [(1, 0)]))

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        return self.compose(other)

    def add(self, other: "LinearOperator") -> "LinearOperator":
        if self.dim != other.dim:
            raise ValueError(f"cannot add {self.dim}-dim and {other.dim}-dim operators")
        return LinearOperator(self.dim, self.matrix + other.matrix)

    __add__ = add

    def scale(self, c) -> "LinearOperator":
        return LinearOperator(self.dim, self.matrix.scale(c))

    def transpose(self) -> "LinearOperator":
        return LinearOperator(self.dim, self.matrix.transpose((1, 0)))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __eq__(self, other):
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return self.dim == other.dim and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"LinearOperator({self.dim}, {self.matrix!r})"


def compose(*ops: LinearOperator) -> LinearOperator:
    """``ops[0] ∘ ops[1] ∘ ...``."""
    out = ops[0]
    for op in ops[1:]:
        out = out.compose(op)
    return out


def add(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    return a.add(b)


def scale(c, a: LinearOperator) -> LinearOperator:
    return a.scale(c)


def kron(*ops: LinearOperator) -> LinearOperator:
    """Operator on the row-major tensor product space, ``(i, j) ↦ i * dim₂ + j``."""
    if not ops:
        raise ValueError("kron needs at least one operator")
    out = ops[0]
    for op in ops[1:]:
        n = op.dim
        entries = {}
        for (i1, j1), c1 in out.matrix.items():
            for (i2, j2), c2 in op.matrix.items():
                entries[(i1 * n + i2, j1 * n + j2)] = c1 * c2
        out = LinearOperator(out.dim * n, SparseTensor._raw((out.dim * n, out.dim * n), entries))
    return out


def apply(op: LinearOperator, v: SparseTensor) -> SparseTensor:
    return op.apply(v)


class Legs:
    """A tensor whose legs carry names, for evaluating Sweedler-style expressions.

    Every operation consumes some named legs and produces new ones; the final
    :meth:`result` call fixes the output leg order.  Multilinear maps are given as
    structure tensors whose leading indices are inputs and trailing ones outputs
    (e.g. a multiplication ``m(i, j; k)`` or a coproduct ``Δ(i; j, k)``).
    """

    __slots__ = ("names", "t")

    def __init__(self, names: Sequence[str], t: SparseTensor):
        names = tuple(names)
        if len(names) != t.arity or len(set(names)) != len(names):
            raise ValueError(f"bad leg names {names} for a tensor of arity {t.arity}")
        self.names = names
        self.t = t

    @classmethod
    def of(cls, name: str, v: SparseTensor) -> "Legs":
        return cls((name,), v)

    @classmethod
    def of_tensor(cls, names: Sequence[str], t: SparseTensor) -> "Legs":
        return cls(names, t)

    def attach(self, name: str, v: SparseTensor) -> "Legs":
        return Legs(self.names + (name,), self.t.outer(v))

    def join(self, other: "Legs") -> "Legs":
        return Legs(self.names + other.names, self.t.outer(other.t))

    def map(self, inputs: Sequence[str], tensor: SparseTensor, outputs: Sequence[str]) -> "Legs":
        inputs, outputs = tuple(inputs), tuple(outputs)
        n_in = len(inputs)
        if tensor.arity != n_in + len(outputs):
            raise ValueError(f"map tensor arity {tensor.arity} ≠ {n_in} inputs + {len(outputs)} outputs")
        try:
            pos = [self.names.index(n) for n in inputs]
        except ValueError as exc:
            raise KeyError(f"unknown leg among {inputs}; legs are {self.names}") from exc
        for p, d in zip(pos, tensor.dims[:n_in]):
            if self.t.dims[p] != d:
                raise ValueError(f"leg {self.names[p]} has dim {self.t.dims[p]}, map expects {d}")
        keep = [k for k in range(len(self.names)) if k not in pos]
        table = tensor.fibers(n_in)
        out = defaultdict(int)
        for key, c in self.t.items():
            rows = table.get(tuple(key[p] for p in pos))
            if not rows:
                continue
            base = tuple(key[k] for k in keep)
            for tail, d in rows:
                out[base + tail] += c * d
        names = tuple(self.names[k] for k in keep) + outputs
        dims = tuple(self.t.dims[k] for k in keep) + tensor.dims[n_in:]
        return Legs(names, SparseTensor._raw(dims, out))

    def apply(self, name: str, op: LinearOperator, out: str | None = None) -> "Legs":
        # op.matrix is (row, col); the map tensor wants (input, output).
        return self.map([name], _op_tensor(op), [out or name])

    def split(self, name: str, tensor: SparseTensor, out1: str, out2: str) -> "Legs":
        return self.map([name], tensor, [out1, out2])

    def fuse(self, first: str, second: str, tensor: SparseTensor, out: str) -> "Legs":
        return self.map([first, second], tensor, [out])

    def drop(self, name: str, functional: SparseTensor) -> "Legs":
        return self.map([name], functional, [])

    def rename(self, old: str, new: str) -> "Legs":
        return Legs(tuple(new if n == old else n for n in self.names), self.t)

    def result(self, *order: str) -> SparseTensor:
        if sorted(order) != sorted(self.names):
            raise ValueError(f"result order {order} does not match legs {self.names}")
        return self.t.transpose([self.names.index(n) for n in order])


def _op_tensor(op: LinearOperator) -> SparseTensor:
    cached = op.matrix._fibers.get("T")
    if cached is None:
        cached = op.matrix.transpose((1, 0))
        op.matrix._fibers["T"] = cached
    return cached
