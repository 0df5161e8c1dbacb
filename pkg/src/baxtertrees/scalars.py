"""Exact arithmetic in Z[l], the scalar ring of every algebra here.

``l`` is the formal weight of the Baxter operator.  All identities in
this package are verified symbolically in ``l``, which is strictly
stronger than checking them at sample integer weights; evaluating at a
concrete integer weight is an explicit operation (`LambdaPoly.eval_at`).

Coefficients are arbitrary-precision Python integers, so products never
overflow silently.  Values are immutable and safe to share.
"""

from __future__ import annotations

from .errors import ParseError

__all__ = ["LambdaPoly", "ZERO", "ONE", "LAMBDA", "parse_poly"]


class LambdaPoly:
    """An integer polynomial in the weight symbol ``l``.

    ``coeffs[k]`` holds the coefficient of ``l^k``.  Trailing zeros are
    never stored, so two equal polynomials have identical tuples; the
    zero polynomial is the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, value: int) -> "LambdaPoly":
        return cls((value,))

    @classmethod
    def weight(cls, power: int = 1, coeff: int = 1) -> "LambdaPoly":
        """coeff * l^power."""
        if power < 0:
            raise ValueError(f"power must be >= 0, got {power}")
        return cls((0,) * power + (coeff,))

    @staticmethod
    def _coerce(value) -> "LambdaPoly":
        if isinstance(value, LambdaPoly):
            return value
        if isinstance(value, int):
            return LambdaPoly((value,))
        return NotImplemented

    # -- ring structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree in l; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return LambdaPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ci in enumerate(a):
            if ci:
                for j, cj in enumerate(b):
                    out[i + j] += ci * cj
        return LambdaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError(f"exponent must be >= 0, got {exponent}")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def eval_at(self, value: int) -> int:
        """Evaluate at l = value by Horner's rule (exact)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- display -----------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                body = "l" if k == 1 else f"l^{k}"
                if abs(c) != 1:
                    body = f"{abs(c)}*{body}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LambdaPoly({self.coeffs!r})"

    @property
    def is_single_term(self) -> bool:
        """True when at most one coefficient is nonzero (display helper)."""
        return sum(1 for c in self.coeffs if c) <= 1

    @property
    def lead_coeff(self) -> int:
        """Coefficient of the highest power (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0


ZERO = LambdaPoly()
ONE = LambdaPoly((1,))
LAMBDA = LambdaPoly((0, 1))


def parse_poly(text: str) -> LambdaPoly:
    """Parse the textual polynomial grammar.

    poly := ['+'|'-'] term (('+'|'-') term)*
    term := int | int '*' 'l' ('^' nat)? | 'l' ('^' nat)?

    Whitespace is insignificant.  Round-trips everything `__str__` emits.
    """
    s = text
    i = 0
    n = len(s)

    def skip_ws(j):
        while j < n and s[j].isspace():
            j += 1
        return j

    def read_nat(j):
        k = j
        while k < n and s[k].isdigit():
            k += 1
        if k == j:
            raise ParseError("expected a number", s, j)
        return int(s[j:k]), k

    coeffs: dict[int, int] = {}
    i = skip_ws(i)
    if i == n:
        raise ParseError("empty polynomial", s, 0)
    first = True
    while True:
        i = skip_ws(i)
        sign = 1
        if i < n and s[i] in "+-":
            if s[i] == "-":
                sign = -1
            i = skip_ws(i + 1)
        elif not first:
            raise ParseError("expected '+' or '-' between terms", s, i)
        first = False
        # term: optional integer part, optional l-part
        mag = None
        if i < n and s[i].isdigit():
            mag, i = read_nat(i)
            i = skip_ws(i)
            if i < n and s[i] == "*":
                i = skip_ws(i + 1)
                if i >= n or s[i] != "l":
                    raise ParseError("expected 'l' after '*'", s, i)
        if i < n and s[i] == "l":
            i = skip_ws(i + 1)
            power = 1
            if i < n and s[i] == "^":
                power, i = read_nat(skip_ws(i + 1))
            if mag is None:
                mag = 1
        else:
            if mag is None:
                raise ParseError("expected a term", s, i)
            power = 0
        coeffs[power] = coeffs.get(power, 0) + sign * mag
        i = skip_ws(i)
        if i == n:
            break
        if s[i] not in "+-":
            raise ParseError("unexpected character in polynomial", s, i)
    if not coeffs:
        return ZERO
    top = max(coeffs)
    return LambdaPoly(tuple(coeffs.get(k, 0) for k in range(top + 1)))
