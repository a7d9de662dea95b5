"""Truncated formal power series over GF(2).

A series is a bit vector of its first `n_terms` coefficients, packed
little-endian into a single Python int (bit k = coefficient of q^k).
The support (sorted list of exponents with coefficient 1) is derived
lazily and cached.

Multiplication dispatches between two paths:

  * sparse x sparse: toggle the parity of every pair sum i+j < N
    (vectorized as an outer sum + bincount).  This is the workhorse for
    theta-function products, whose supports have ~sqrt(N/m) density.
  * shift-xor comb: acc ^= dense_bits << i over the sparser operand's
    support, for products with a dense operand such as the partition
    parity series.

Both are truncation-first: no coefficient at or beyond n_terms is ever
reported, and all identity claims are "below N" claims.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

# mul() uses the sparse path while |support(f)| * |support(g)| <= factor * N.
SPARSE_THRESHOLD_FACTOR = 64


class Gf2Series:
    """Immutable GF(2) power series truncated to n_terms coefficients."""

    __slots__ = ("n_terms", "_bits", "_support")

    def __init__(self, n_terms: int, bits: int = 0, _support=None):
        if n_terms < 1:
            raise ValueError("n_terms must be >= 1")
        if bits < 0 or bits >> n_terms:
            raise ValueError("bits outside the first n_terms coefficients")
        self.n_terms = n_terms
        self._bits = bits
        self._support = _support

    @classmethod
    def from_support(cls, indices: Sequence[int], n_terms: int) -> "Gf2Series":
        """Series with coefficient 1 exactly at `indices` (strictly increasing)."""
        indices = list(indices)
        prev = -1
        for k in indices:
            if k <= prev:
                raise ValueError("support indices must be strictly increasing")
            prev = k
        if indices and (indices[0] < 0 or indices[-1] >= n_terms):
            raise ValueError("support index out of range")
        bits = 0
        for k in indices:
            bits |= 1 << k
        return cls(n_terms, bits, tuple(indices))

    @classmethod
    def zero(cls, n_terms: int) -> "Gf2Series":
        return cls(n_terms, 0, ())

    @classmethod
    def one(cls, n_terms: int) -> "Gf2Series":
        return cls(n_terms, 1, (0,))

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def support(self) -> tuple:
        """Sorted exponents with coefficient 1."""
        if self._support is None:
            n = self.n_terms
            raw = self._bits.to_bytes((n + 7) // 8, "little")
            arr = np.unpackbits(np.frombuffer(raw, dtype=np.uint8),
                                count=n, bitorder="little")
            self._support = tuple(int(k) for k in np.flatnonzero(arr))
        return self._support

    def coeff(self, k: int) -> int:
        if not 0 <= k < self.n_terms:
            raise IndexError(f"coefficient index {k} outside [0, {self.n_terms})")
        return (self._bits >> k) & 1

    def is_zero(self) -> bool:
        return self._bits == 0

    def _check_same_length(self, other: "Gf2Series"):
        if self.n_terms != other.n_terms:
            raise ValueError(
                f"truncation mismatch: {self.n_terms} vs {other.n_terms}")

    def add(self, other: "Gf2Series") -> "Gf2Series":
        """Coefficient-wise XOR."""
        self._check_same_length(other)
        return Gf2Series(self.n_terms, self._bits ^ other._bits)

    def mul(self, other: "Gf2Series",
            threshold_factor: int = SPARSE_THRESHOLD_FACTOR) -> "Gf2Series":
        """Truncated product: coefficient k is the pair-sum parity below N."""
        self._check_same_length(other)
        n = self.n_terms
        sa, sb = self.support, other.support
        if not sa or not sb:
            return Gf2Series.zero(n)
        if len(sa) * len(sb) <= threshold_factor * n:
            return self._mul_sparse(sa, sb, n)
        return self._mul_comb(other)

    @staticmethod
    def _mul_sparse(sa, sb, n) -> "Gf2Series":
        sums = np.add.outer(np.asarray(sa, dtype=np.int64),
                            np.asarray(sb, dtype=np.int64)).ravel()
        sums = sums[sums < n]
        counts = np.bincount(sums, minlength=n)[:n]
        arr = (counts & 1).astype(np.uint8)
        bits = int.from_bytes(np.packbits(arr, bitorder="little").tobytes(),
                              "little")
        return Gf2Series(n, bits, tuple(int(k) for k in np.flatnonzero(arr)))

    def _mul_comb(self, other: "Gf2Series") -> "Gf2Series":
        # comb over the sparser operand, shifting the denser bit vector
        n = self.n_terms
        f, g = (self, other) if len(self.support) <= len(other.support) else (other, self)
        acc = 0
        gb = g._bits
        for i in f.support:
            acc ^= gb << i
        acc &= (1 << n) - 1
        return Gf2Series(n, acc)

    def square(self) -> "Gf2Series":
        """Frobenius: coefficient at 2k equals this series' coefficient at k."""
        n = self.n_terms
        doubled = [2 * k for k in self.support if 2 * k < n]
        return Gf2Series.from_support(doubled, n)

    def first_difference(self, other: "Gf2Series") -> Optional[int]:
        """Smallest index with differing coefficients, or None if equal below N."""
        self._check_same_length(other)
        d = self._bits ^ other._bits
        if d == 0:
            return None
        return (d & -d).bit_length() - 1

    def __eq__(self, other):
        if not isinstance(other, Gf2Series):
            return NotImplemented
        return self.n_terms == other.n_terms and self._bits == other._bits

    def __hash__(self):
        return hash((self.n_terms, self._bits))

    def __repr__(self):
        sup = self.support
        shown = list(sup[:12]) + (["..."] if len(sup) > 12 else [])
        return f"Gf2Series(n_terms={self.n_terms}, support={shown})"


def convolve_parity(support_a: Iterable[int], support_b: Iterable[int],
                    n_terms: int) -> Gf2Series:
    """Product of two support-defined series (convenience wrapper)."""
    fa = Gf2Series.from_support(list(support_a), n_terms)
    fb = Gf2Series.from_support(list(support_b), n_terms)
    return fa.mul(fb)
