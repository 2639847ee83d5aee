"""Dense univariate polynomials over Python's arbitrary-precision integers.

An IntPolynomial doubles as an exact integer sequence: coefficient k is
the number of independent sets of size k when the polynomial came out of
one of the counting routines.  All arithmetic is exact; nothing here ever
touches floating point.

Multiplication is exact convolution, delegated to the active kernel
backend (compiled extension when built, pure Python otherwise): schoolbook
below a coefficient-count threshold, Karatsuba above it.
"""

from __future__ import annotations

from . import _backend


def kernel_backend() -> str:
    """Name of the active kernel backend: "c" (compiled) or "py"."""
    return _backend.name


def _strip(coeffs):
    """Drop trailing zeros; the zero polynomial keeps a single 0."""
    end = len(coeffs)
    while end > 1 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end]) if end != len(coeffs) else tuple(coeffs)


class IntPolynomial:
    """Immutable dense polynomial with int coefficients.

    ``coeffs[k]`` is the coefficient of x^k.  Canonical form: the highest
    stored coefficient is nonzero, except the zero polynomial which is
    stored as the single coefficient 0.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=(0,)):
        cs = list(coeffs)
        if not cs:
            cs = [0]
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(
                    "coefficients must be int, got %s" % type(c).__name__
                )
        self._coeffs = _strip(cs)

    @classmethod
    def _raw(cls, coeffs):
        # trusted constructor: coeffs is a list of ints, possibly padded
        self = object.__new__(cls)
        self._coeffs = _strip(coeffs)
        return self

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        if len(self._coeffs) == 1 and self._coeffs[0] == 0:
            return -1
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self._coeffs == (0,)

    def coeff(self, k: int) -> int:
        """Coefficient of x^k; 0 beyond the degree."""
        if k < 0:
            raise ValueError("coefficient index must be >= 0, got %d" % k)
        return self._coeffs[k] if k < len(self._coeffs) else 0

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return add(self, other)

    def __mul__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return mul(self, other)

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        return poly_pow(self, e)

    def __repr__(self):
        cs = self._coeffs
        if len(cs) > 8:
            shown = ", ".join(str(c) for c in cs[:4])
            return "IntPolynomial([%s, ... deg=%d])" % (shown, len(cs) - 1)
        return "IntPolynomial([%s])" % ", ".join(str(c) for c in cs)


ZERO = IntPolynomial((0,))
ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Coefficient-wise sum."""
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPolynomial._raw(out)


def mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Exact convolution product."""
    if p.is_zero or q.is_zero:
        return ZERO
    return IntPolynomial._raw(
        _backend.kernels.convolve(list(p.coeffs), list(q.coeffs))
    )


def poly_pow(p: IntPolynomial, e: int) -> IntPolynomial:
    """p**e by binary exponentiation; p**0 == 1 for every p."""
    if e < 0:
        raise ValueError("exponent must be >= 0, got %d" % e)
    result = ONE
    base = p
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def coeff(p: IntPolynomial, k: int) -> int:
    """Coefficient of x^k in p; 0 beyond the degree."""
    return p.coeff(k)
