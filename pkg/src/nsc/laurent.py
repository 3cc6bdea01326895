"""Truncated Laurent series and tangent-preserving parameter changes.

A series stores exact coefficients on an explicit window [low, cut): below
``low`` everything is identically zero, at or above ``cut`` nothing is known.
``cut is None`` marks a Laurent polynomial (identically zero beyond the stored
window).  Every operation produces the tightest sound truncation of its
operands; reading a coefficient beyond the window raises, it is never
fabricated.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import TruncationError, ValidationError


def _coerce(domain, x):
    if domain is None:
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise ValidationError(f"cannot coerce {x!r} into QQ")
    if isinstance(x, (int, Fraction)):
        return domain.const(x)
    if getattr(x, "ring", None) == domain and domain is not None:
        return x
    return domain.const(x)


def _zero(domain):
    return Fraction(0) if domain is None else domain.zero()


class LaurentSeries:
    __slots__ = ("domain", "var", "low", "coeffs", "cut")

    def __init__(self, domain, var: str, low: int, coeffs, cut: int | None = None):
        coeffs = [_coerce(domain, c) for c in coeffs]
        if cut is not None:
            if cut < low:
                cut = low
            # pad/trim the stored window to exactly [low, cut)
            coeffs = coeffs[: cut - low]
            coeffs += [_zero(domain)] * (cut - low - len(coeffs))
        # strip known-zero leading coefficients
        while coeffs and not coeffs[0]:
            coeffs.pop(0)
            low += 1
        if cut is None:
            while coeffs and not coeffs[-1]:
                coeffs.pop()
        if not coeffs:
            low = 0 if cut is None else min(0, cut)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "cut", cut)

    def __setattr__(self, *a):
        raise AttributeError("LaurentSeries is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, domain, var, cut=None):
        return cls(domain, var, 0, [], cut)

    @classmethod
    def monomial(cls, domain, var, exponent, coeff=1, cut=None):
        return cls(domain, var, exponent, [coeff], cut)

    # -- inspection -----------------------------------------------------------

    def known_high(self) -> int | None:
        """Exclusive upper bound of known exponents (None = everything known)."""
        return self.cut

    def coefficient(self, exponent: int):
        if self.cut is not None and exponent >= self.cut:
            raise TruncationError(
                f"coefficient of {self.var}^{exponent} is beyond the truncation "
                f"window [{self.low}, {self.cut}) of {self}"
            )
        if exponent < self.low or exponent >= self.low + len(self.coeffs):
            return _zero(self.domain)
        return self.coeffs[exponent - self.low]

    def known_items(self):
        """(exponent, coefficient) pairs over the stored window, ascending."""
        return [(self.low + i, c) for i, c in enumerate(self.coeffs)]

    def valuation(self) -> int | None:
        """Exponent of the first nonzero known coefficient; None if all known are zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return self.low + i
        return None

    def is_known_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    # -- arithmetic -------------------------------------------------------------

    def _check_compatible(self, other):
        if self.domain != other.domain or self.var != other.var:
            raise ValidationError("series live in different rings")

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries.monomial(self.domain, self.var, 0, other)
        self._check_compatible(other)
        cuts = [c for c in (self.cut, other.cut) if c is not None]
        cut = min(cuts) if cuts else None
        low = min(self.low, other.low) if (self.coeffs or other.coeffs) else 0
        high = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        if cut is not None:
            high = cut
        coeffs = []
        for e in range(low, high):
            a = self.coeffs[e - self.low] if 0 <= e - self.low < len(self.coeffs) else _zero(self.domain)
            b = other.coeffs[e - other.low] if 0 <= e - other.low < len(other.coeffs) else _zero(self.domain)
            coeffs.append(a + b)
        return LaurentSeries(self.domain, self.var, low, coeffs, cut)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.domain, self.var, self.low, [-c for c in self.coeffs], self.cut)

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries.monomial(self.domain, self.var, 0, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _coerce(self.domain, c)
        return LaurentSeries(self.domain, self.var, self.low, [c * x for x in self.coeffs], self.cut)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        self._check_compatible(other)
        cuts = []
        if self.cut is not None:
            cuts.append(self.cut + other.low)
        if other.cut is not None:
            cuts.append(other.cut + self.low)
        cut = min(cuts) if cuts else None
        low = self.low + other.low
        high = (self.low + len(self.coeffs)) + (other.low + len(other.coeffs)) - 1
        if cut is not None:
            high = cut
        if not self.coeffs or not other.coeffs:
            return LaurentSeries.zero(self.domain, self.var, cut)
        acc = {e: _zero(self.domain) for e in range(low, max(high, low))}
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                e = self.low + i + other.low + j
                if cut is not None and e >= cut:
                    break
                if b:
                    acc[e] = acc[e] + a * b
        coeffs = [acc.get(e, _zero(self.domain)) for e in range(low, high)]
        return LaurentSeries(self.domain, self.var, low, coeffs, cut)

    __rmul__ = __mul__

    def truncate(self, cut: int) -> "LaurentSeries":
        """Narrow the known window to exponents < cut."""
        if self.cut is None and self.low + len(self.coeffs) <= cut:
            return self
        if self.cut is not None and cut >= self.cut:
            return self
        return LaurentSeries(self.domain, self.var, self.low, list(self.coeffs)[: max(0, cut - self.low)], cut)

    def with_cut(self, cut: int) -> "LaurentSeries":
        """Forget everything at exponents >= cut, marking the window explicitly
        (unlike truncate, this turns an exact series into a truncated one)."""
        return LaurentSeries(self.domain, self.var, self.low, list(self.coeffs)[: max(0, cut - self.low)], cut)

    def inverse(self, cut: int | None = None) -> "LaurentSeries":
        """Multiplicative inverse; the lowest coefficient must be a unit."""
        v = self.valuation()
        if v is None:
            raise ZeroDivisionError("inverse of a (known-)zero series")
        lead = self.coefficient(v)
        inv_lead = _inv_coeff(self.domain, lead)
        bounds = []
        if self.cut is not None:
            bounds.append(self.cut - 2 * v)
        if cut is not None:
            bounds.append(cut)
        if not bounds:
            if len(self.coeffs) == 1:
                return LaurentSeries.monomial(self.domain, self.var, -v, inv_lead)
            raise ValidationError("inverse of a polynomial is an infinite series; pass cut")
        out_cut = min(bounds)
        n = out_cut + v  # coefficients of the inverse unit part needed: [0, n)
        a = [self.coefficient(v + i) * inv_lead for i in range(max(n, 0))]
        b = []
        for k in range(max(n, 0)):
            if k == 0:
                b.append(_coerce(self.domain, 1))
                continue
            s = _zero(self.domain)
            for i in range(1, k + 1):
                s = s + a[i] * b[k - i]
            b.append(-s)
        coeffs = [inv_lead * c for c in b]
        return LaurentSeries(self.domain, self.var, -v, coeffs, out_cut)

    def pow(self, n: int, cut: int | None = None) -> "LaurentSeries":
        if n == 0:
            one = LaurentSeries.monomial(self.domain, self.var, 0, 1)
            return one if cut is None else one.truncate(cut)
        if n > 0:
            # ascending powers: intermediate truncation at cut is sound only
            # when multiplying by a series with nonnegative valuation
            safe_trunc = cut is not None and self.low >= 0
            out = self
            for _ in range(n - 1):
                out = out * self
                if safe_trunc:
                    out = out.truncate(cut)
            return out if cut is None else out.truncate(cut)
        v = self.valuation()
        if v is None:
            raise ZeroDivisionError("negative power of a (known-)zero series")
        base = self.inverse(cut=None if cut is None else cut + (abs(n) - 1) * v)
        out = base
        for _ in range(abs(n) - 1):
            out = out * base  # sound windows narrow by themselves
        return out if cut is None else out.truncate(cut)

    # -- comparison / printing ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.var == other.var
            and self.low == other.low
            and self.cut == other.cut
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.domain, self.var, self.low, self.cut, self.coeffs))

    def _fmt_coeff(self, c) -> str:
        if isinstance(c, Fraction):
            from .rational import format_rational

            return format_rational(c)
        s = str(c)
        return f"({s})" if (" " in s or "*" in s) else s

    def __str__(self):
        parts = []
        for e, c in self.known_items():
            if not c:
                continue
            cs = self._fmt_coeff(c)
            if e == 0:
                parts.append(cs)
            else:
                mono = self.var if e == 1 else f"{self.var}^{e}"
                parts.append(mono if cs == "1" else f"{cs}*{mono}")
        body = " + ".join(parts) if parts else "0"
        tail = "" if self.cut is None else f" + O({self.var}^{self.cut})"
        return body + tail

    def __repr__(self):
        return f"LaurentSeries({self})"


def _inv_coeff(domain, c):
    if domain is None:
        return Fraction(1) / c
    const = c.constant_value_or_none()
    if const is None or const == 0:
        raise ValidationError(f"coefficient {c} is not a unit")
    return domain.const(Fraction(1) / const)


class ParamChange:
    """Substitution t = u + c2*u^2 + ... with leading coefficient exactly 1."""

    __slots__ = ("series",)

    def __init__(self, series: LaurentSeries):
        if series.low < 1:
            raise ValidationError("parameter change must have positive valuation")
        if series.coefficient(1) != _coerce(series.domain, 1):
            raise ValidationError("parameter change must be tangent-preserving (leading coefficient 1)")
        object.__setattr__(self, "series", series)

    def __setattr__(self, *a):
        raise AttributeError("ParamChange is immutable")

    @classmethod
    def identity(cls, domain, var: str, order: int | None = None):
        return cls(LaurentSeries.monomial(domain, var, 1, 1, cut=order))

    @classmethod
    def from_coeffs(cls, domain, var: str, tail, order: int | None = None):
        """Build t = u + tail[0]*u^2 + tail[1]*u^3 + ..."""
        return cls(LaurentSeries(domain, var, 1, [1, *tail], cut=order))

    def order(self) -> int | None:
        return self.series.cut

    def coefficient(self, exponent: int):
        return self.series.coefficient(exponent)

    def is_identity(self) -> bool:
        return all(not c for e, c in self.series.known_items() if e != 1)

    def compose(self, inner: "ParamChange") -> "ParamChange":
        """Substitution for t = self(inner(w)): apply inner inside self."""
        return ParamChange(series_substitute(self.series, inner))

    def __eq__(self, other):
        return isinstance(other, ParamChange) and self.series == other.series

    def __repr__(self):
        return f"ParamChange({self.series})"


def series_substitute(s: LaurentSeries, pc: ParamChange, cut: int | None = None) -> LaurentSeries:
    """Exact coefficients of s(t) with t = pc(u), on the tightest sound window.

    Negative powers of the substitution expand through the geometric series of
    its unit part.  Raises when the requested window cannot be determined from
    the operands' truncations.
    """
    p = pc.series
    if s.domain != p.domain:
        raise ValidationError("series and parameter change live in different rings")
    bounds = []
    if s.cut is not None:
        bounds.append(s.cut)
    if p.cut is not None:
        bounds.append(p.cut - 1 + s.low)
    if cut is not None:
        bounds.append(cut)
    if bounds:
        out_cut = min(bounds)
    else:
        if s.low < 0:
            raise TruncationError(
                "composition has an infinite tail; pass an explicit cut"
            )
        out_cut = None
    out = LaurentSeries.zero(s.domain, p.var, out_cut)
    items = [(e, c) for e, c in s.known_items() if c]
    if not items:
        return out
    k0 = items[0][0]
    power = p.pow(k0, cut=out_cut)
    k_prev = k0
    for e, c in items:
        if out_cut is not None and e >= out_cut:
            break
        while k_prev < e:
            power = power * p
            if out_cut is not None:
                power = power.truncate(out_cut)
            k_prev += 1
        out = out + power.scale(c)
    return out


def revert(pc: ParamChange, order: int | None = None) -> ParamChange:
    """Compositional inverse: pc(revert(pc)) = identity to the truncation order."""
    T = order if order is not None else pc.order()
    if T is None:
        if pc.is_identity():
            return ParamChange.identity(pc.series.domain, pc.series.var)
        raise TruncationError("reversion of an exact polynomial change needs an explicit order")
    domain, var = pc.series.domain, pc.series.var
    r = LaurentSeries.monomial(domain, var, 1, 1, cut=T)
    while True:
        err = series_substitute(pc.series, ParamChange(r), cut=T) - LaurentSeries.monomial(domain, var, 1, 1, cut=T)
        v = err.valuation()
        if v is None:
            break
        r = r - LaurentSeries.monomial(domain, var, v, err.coefficient(v), cut=T)
    return ParamChange(r)
