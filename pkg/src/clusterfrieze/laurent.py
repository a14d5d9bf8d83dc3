"""Exact sparse multivariate Laurent polynomials over the integers.

A Laurent polynomial in variables x1..xn is stored as a dictionary mapping
exponent tuples (one signed integer per variable) to nonzero integer
coefficients.  The zero polynomial has an empty term map.  Coefficients are
plain Python ints, so they never overflow; everything here is exact.

  x1^-1 + x2*x1^-1   ->   LaurentPoly(2, {(-1, 0): 1, (-1, 1): 1})

Values are immutable after construction and safe to hash, compare and share.
The fixed monomial order used for printing and for division compares exponent
vectors lexicographically with the *last* variable most significant, ascending;
this is the order all deterministic output in the package relies on.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union


class NotExactlyDivisible(ArithmeticError):
    """Raised when a quotient does not exist in the integer Laurent ring."""


class DivisionByZeroValue(ZeroDivisionError):
    """Raised when 0 is substituted for a variable occurring with a negative exponent."""


def _term_key(exponents: tuple[int, ...]) -> tuple[int, ...]:
    # Sort key realizing the fixed monomial order (see module docstring).
    return tuple(reversed(exponents))


class LaurentPoly:
    """An exact Laurent polynomial with integer coefficients in a fixed number of variables."""

    __slots__ = ("_nvars", "_terms", "_hash", "_key")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        normalized: dict[tuple[int, ...], int] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has length {len(exps)}, expected {nvars}")
            if not all(isinstance(e, int) for e in exps):
                raise ValueError(f"non-integer exponent in {exps}")
            if not isinstance(coeff, int):
                raise ValueError(f"non-integer coefficient {coeff!r}")
            if coeff != 0:
                normalized[exps] = normalized.get(exps, 0) + coeff
                if normalized[exps] == 0:
                    del normalized[exps]
        self._nvars = nvars
        self._terms = normalized
        self._hash: int | None = None
        self._key: tuple | None = None

    # ------------------------------------------------------------------ constructors

    @classmethod
    def zero(cls, nvars: int) -> LaurentPoly:
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: int) -> LaurentPoly:
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars: int) -> LaurentPoly:
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, j: int) -> LaurentPoly:
        """The generator x_j, with j counted from 1."""
        if not 1 <= j <= nvars:
            raise ValueError(f"variable index {j} out of range 1..{nvars}")
        exps = [0] * nvars
        exps[j - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, nvars: int, exponents: Iterable[int], coeff: int = 1) -> LaurentPoly:
        return cls(nvars, {tuple(exponents): coeff})

    @classmethod
    def generators(cls, nvars: int) -> tuple[LaurentPoly, ...]:
        """All generators (x_1, ..., x_n)."""
        return tuple(cls.variable(nvars, j) for j in range(1, nvars + 1))

    # ------------------------------------------------------------------ basic queries

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[tuple[int, ...], int]:
        """Read-only view of the normalized term map."""
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_polynomial_in(self, j: int) -> bool:
        """True iff no term carries a negative exponent of x_j (j counted from 1)."""
        if not 1 <= j <= self._nvars:
            raise ValueError(f"variable index {j} out of range 1..{self._nvars}")
        return all(exps[j - 1] >= 0 for exps in self._terms)

    def constant_value(self) -> int:
        """The value of a constant polynomial, as a plain int."""
        if not self._terms:
            return 0
        if len(self._terms) == 1:
            exps, coeff = next(iter(self._terms.items()))
            if all(e == 0 for e in exps):
                return coeff
        raise ValueError(f"not a constant: {self}")

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(self._nvars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def sort_key(self) -> tuple:
        """A total-order key; used wherever deterministic listings are required."""
        if self._key is None:
            self._key = (
                len(self._terms),
                tuple(sorted((_term_key(e), c) for e, c in self._terms.items())),
            )
        return self._key

    # ------------------------------------------------------------------ ring operations

    def _coerce(self, other: Union[int, LaurentPoly]) -> LaurentPoly | None:
        if isinstance(other, int):
            return LaurentPoly.constant(self._nvars, other)
        if isinstance(other, LaurentPoly):
            if other._nvars != self._nvars:
                raise ValueError(
                    f"ambient mismatch: {self._nvars} vs {other._nvars} variables"
                )
            return other
        return None

    def __add__(self, other: Union[int, LaurentPoly]) -> LaurentPoly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in q._terms.items():
            s = out.get(exps, 0) + coeff
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return _raw(self._nvars, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return _raw(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union[int, LaurentPoly]) -> LaurentPoly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: Union[int, LaurentPoly]) -> LaurentPoly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other: Union[int, LaurentPoly]) -> LaurentPoly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if not self._terms or not q._terms:
            return LaurentPoly.zero(self._nvars)
        # Convolution of the term maps; exponent vectors add componentwise.
        a, b = self._terms, q._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[tuple[int, ...], int] = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    del out[key]
        return _raw(self._nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = LaurentPoly.one(self._nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # ------------------------------------------------------------------ exact division

    def exact_div(self, divisor: Union[int, LaurentPoly]) -> LaurentPoly:
        """Return q with q * divisor == self, exactly.

        Raises NotExactlyDivisible when no such Laurent polynomial exists.  The
        algorithm shifts both operands so every variable has minimal exponent
        zero, then runs leading-term division under the fixed monomial order;
        over the integers a failed leading-coefficient division or a stuck
        leading monomial certifies non-divisibility.
        """
        d = self._coerce(divisor)
        if d is None:
            raise TypeError(f"cannot divide by {divisor!r}")
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self._nvars)

        n = self._nvars
        shift_p = [min(e[v] for e in self._terms) for v in range(n)]
        shift_d = [min(e[v] for e in d._terms) for v in range(n)]
        num = {tuple(x - s for x, s in zip(e, shift_p)): c for e, c in self._terms.items()}
        den = {tuple(x - s for x, s in zip(e, shift_d)): c for e, c in d._terms.items()}

        lead_d = max(den, key=_term_key)
        lead_d_coeff = den[lead_d]
        quotient: dict[tuple[int, ...], int] = {}
        remainder = dict(num)
        while remainder:
            lead_r = max(remainder, key=_term_key)
            step = tuple(a - b for a, b in zip(lead_r, lead_d))
            coeff_q, rem = divmod(remainder[lead_r], lead_d_coeff)
            if rem != 0 or any(e < 0 for e in step):
                raise NotExactlyDivisible(f"({self}) is not divisible by ({d})")
            quotient[step] = coeff_q
            for e, c in den.items():
                key = tuple(a + b for a, b in zip(e, step))
                s = remainder.get(key, 0) - coeff_q * c
                if s:
                    remainder[key] = s
                else:
                    del remainder[key]

        offset = [a - b for a, b in zip(shift_p, shift_d)]
        return _raw(n, {tuple(x + o for x, o in zip(e, offset)): c for e, c in quotient.items()})

    # ------------------------------------------------------------------ substitution

    def substitute(self, assignment: Mapping[int, Union[int, LaurentPoly]]) -> LaurentPoly:
        """Replace assigned variables (keys counted from 1) by integers or polynomials.

        The variable count of the ambient ring is unchanged; assigned variables
        simply no longer occur.  Substituting 0 where a variable appears with a
        negative exponent raises DivisionByZeroValue.  A nonzero integer with a
        negative exponent is handled exactly; if the final result fails to have
        integer coefficients the substitution has left the integer Laurent ring
        and NotExactlyDivisible is raised.  A polynomial value may appear with
        a negative exponent only when it is a unit (a +/- monomial).
        """
        n = self._nvars
        int_assign: dict[int, int] = {}
        poly_assign: dict[int, LaurentPoly] = {}
        for j, value in assignment.items():
            if not 1 <= j <= n:
                raise ValueError(f"variable index {j} out of range 1..{n}")
            if isinstance(value, LaurentPoly):
                if value._nvars != n:
                    raise ValueError(f"ambient mismatch: {n} vs {value._nvars} variables")
                poly_assign[j - 1] = value
            elif isinstance(value, int):
                int_assign[j - 1] = value
            else:
                raise TypeError(f"cannot substitute {value!r}")
        if not int_assign and not poly_assign:
            return self

        for pos, value in int_assign.items():
            if value == 0 and any(e[pos] < 0 for e in self._terms):
                raise DivisionByZeroValue(
                    f"x{pos + 1} = 0 substituted where it occurs with a negative exponent"
                )

        units_only = all(v in (1, -1) for v in int_assign.values())
        acc: dict[tuple[int, ...], int | Fraction] = {}
        for exps, coeff in self._terms.items():
            scalar: int | Fraction = coeff
            for pos, value in int_assign.items():
                k = exps[pos]
                if k == 0:
                    continue
                if value == 0:
                    scalar = 0
                    break
                if units_only:
                    scalar = scalar if value == 1 or k % 2 == 0 else -scalar
                else:
                    scalar = scalar * Fraction(value) ** k
            if scalar == 0:
                continue

            base = [0] * n
            for pos, e in enumerate(exps):
                if pos not in int_assign and pos not in poly_assign:
                    base[pos] = e
            piece = LaurentPoly.monomial(n, base)
            for pos, value in poly_assign.items():
                k = exps[pos]
                if k == 0:
                    continue
                if k > 0:
                    piece = piece * value**k
                else:
                    piece = piece * _invert_unit(value) ** (-k)

            for e, c in piece._terms.items():
                s = acc.get(e, 0) + scalar * c
                if s:
                    acc[e] = s
                else:
                    acc.pop(e, None)

        out: dict[tuple[int, ...], int] = {}
        for e, c in acc.items():
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise NotExactlyDivisible(
                        f"substitution produced a non-integer coefficient {c} in ({self})"
                    )
                c = c.numerator
            out[e] = c
        return _raw(n, out)

    # ------------------------------------------------------------------ rendering

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        ordered = {e: self._terms[e] for e in sorted(self._terms, key=_term_key)}
        return f"LaurentPoly({self._nvars}, {ordered})"

    def to_text(self) -> str:
        """Canonical expanded rendering, e.g. ``x1^-1 + x2*x1^-1``.

        Terms appear in the fixed monomial order; within a term, variables with
        positive exponents come first, then the negative-exponent ones, each
        group by ascending index.  ``^1`` and a ``1*`` coefficient are elided.
        """
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exps in sorted(self._terms, key=_term_key):
            coeff = self._terms[exps]
            body = _monomial_text(exps)
            if body:
                mag = body if abs(coeff) == 1 else f"{abs(coeff)}*{body}"
            else:
                mag = str(abs(coeff))
            if not parts:
                parts.append(f"-{mag}" if coeff < 0 else mag)
            else:
                parts.append(f"{'-' if coeff < 0 else '+'} {mag}")
        return " ".join(parts)

    def to_factored_text(self) -> str:
        """Numerator-times-monomial rendering, e.g. ``(1 + x2)*x1^-1``.

        The common negative part of every variable is pulled out as a trailing
        inverse monomial; a one-term numerator collapses back to to_text().
        """
        if not self._terms:
            return "0"
        n = self._nvars
        pulled = [min(0, min(e[v] for e in self._terms)) for v in range(n)]
        if all(m == 0 for m in pulled):
            return self.to_text()
        numerator = _raw(
            n, {tuple(x - m for x, m in zip(e, pulled)): c for e, c in self._terms.items()}
        )
        if len(numerator._terms) == 1:
            return self.to_text()
        denom = "*".join(f"x{v + 1}^{pulled[v]}" for v in range(n) if pulled[v] < 0)
        return f"({numerator.to_text()})*{denom}"


def _monomial_text(exps: tuple[int, ...]) -> str:
    positive = [f"x{i + 1}" + (f"^{e}" if e != 1 else "") for i, e in enumerate(exps) if e > 0]
    negative = [f"x{i + 1}^{e}" for i, e in enumerate(exps) if e < 0]
    return "*".join(positive + negative)


def _invert_unit(p: LaurentPoly) -> LaurentPoly:
    if len(p._terms) == 1:
        exps, coeff = next(iter(p._terms.items()))
        if coeff in (1, -1):
            return LaurentPoly.monomial(p.nvars, tuple(-e for e in exps), coeff)
    raise NotExactlyDivisible(f"({p}) is not a unit of the Laurent ring")


def _raw(nvars: int, terms: dict[tuple[int, ...], int]) -> LaurentPoly:
    # Internal fast path: terms are already normalized tuples with nonzero int coefficients.
    p = LaurentPoly.__new__(LaurentPoly)
    p._nvars = nvars
    p._terms = terms
    p._hash = None
    p._key = None
    return p
