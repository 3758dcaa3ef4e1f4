"""Power series in x truncated at a fixed order, with MultiPoly coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .poly import MultiPoly


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[MultiPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(MultiPoly.coerce(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_iterable(cls, coeffs: Iterable, order: int) -> "TruncatedSeries":
        cs = list(coeffs)[: order + 1]
        cs += [MultiPoly()] * (order + 1 - len(cs))
        return cls(tuple(cs))

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls.from_iterable([c], order)

    @classmethod
    def monomial(cls, c, k: int, order: int) -> "TruncatedSeries":
        """``c * x^k``."""
        cs = [MultiPoly()] * (order + 1)
        if k <= order:
            cs[k] = MultiPoly.coerce(c)
        return cls(tuple(cs))

    def __getitem__(self, n: int) -> MultiPoly:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                n = min(self.order, other.order)
                return other.truncate(n)
            return other
        return TruncatedSeries.constant(other, self.order)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_iterable(self.coeffs, order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            return TruncatedSeries(tuple(c * other for c in self.coeffs))
        other = self._coerce(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = MultiPoly()
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by x^k, keeping the order."""
        zeros = [MultiPoly()] * k
        return TruncatedSeries.from_iterable(zeros + list(self.coeffs), self.order)

    def inverse(self) -> "TruncatedSeries":
        """1/f; the constant term must be a nonzero number."""
        c0 = self.coeffs[0]
        if not c0.is_constant() or c0.is_zero():
            raise ZeroDivisionError("constant term must be a nonzero number")
        a0 = c0.constant_value()
        inv0 = 1 if a0 == 1 else (-1 if a0 == -1 else Fraction(1) / Fraction(a0))
        out = [MultiPoly.const(inv0)]
        for n in range(1, self.order + 1):
            acc = MultiPoly()
            for k in range(1, n + 1):
                if self.coeffs[k] and out[n - k]:
                    acc = acc + self.coeffs[k] * out[n - k]
            out.append(acc * (-inv0))
        return TruncatedSeries(tuple(out))

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def map(self, fn) -> "TruncatedSeries":
        return TruncatedSeries(tuple(fn(c) for c in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"({c})*x^{k}" if k else f"({c})")
        return " + ".join(parts) + f" + O(x^{self.order + 1})" if parts else f"O(x^{self.order + 1})"
