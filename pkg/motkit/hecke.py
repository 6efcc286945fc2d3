#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (c) 2023 motkit developers

# motkit is free software: you can redistribute it and/or modify it under the
# terms of the GNU General Public License as published by the Free Software
# Foundation, either version 3 of the License, or (at your option) any later
# version.
#
# motkit is distributed in the hope that it will be useful, but WITHOUT ANY
# WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR
# A PARTICULAR PURPOSE. See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with
# motkit. If not, see <http://www.gnu.org/licenses/>.
"""Define the Hecke algebra of a Weyl group over Z[v, v^-1].

Normalization: H_s^2 = H_e + (v^-1 - v) H_s and b_s = H_s + v H_e.
"""

import functools
import threading

from sympy import Rational

from motkit.alias import KL_LENGTH_BOUND
from motkit.checks import PreconditionError, _check_generator, _check_same_datum
from motkit.coxeter import _right_mul, bruhat_leq, identity, simple_reflection

####--------------------------------------------------------------------------.
#### Laurent polynomials


class LaurentPoly:
    """Integer Laurent polynomial, stored as {degree: coefficient} without zeros."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._coeffs = {int(k): int(c) for k, c in dict(coeffs).items() if c != 0}

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls({degree: coeff})

    @classmethod
    def from_list(cls, pairs):
        """Build from [[degree, coeff], ...]."""
        coeffs = {}
        for degree, coeff in pairs:
            coeffs[int(degree)] = coeffs.get(int(degree), 0) + int(coeff)
        return cls(coeffs)

    @property
    def coeffs(self):
        return dict(self._coeffs)

    @property
    def degrees(self):
        return sorted(self._coeffs)

    def coefficient(self, degree):
        return self._coeffs.get(degree, 0)

    def items(self):
        return sorted(self._coeffs.items())

    def is_zero(self):
        return not self._coeffs

    def is_nonnegative(self):
        return all(c >= 0 for c in self._coeffs.values())

    def is_palindromic(self):
        """Return True if the coefficients are symmetric about their centre."""
        if not self._coeffs:
            return True
        low, high = min(self._coeffs), max(self._coeffs)
        return all(self.coefficient(low + k) == self.coefficient(high - k) for k in range(high - low + 1))

    def bar(self):
        """Return the image under v -> v^-1."""
        return LaurentPoly({-k: c for k, c in self._coeffs.items()})

    def shift(self, degree):
        """Return v^degree * self."""
        return LaurentPoly({k + degree: c for k, c in self._coeffs.items()})

    def evaluate(self, value=1):
        """Return the exact value at v = value (a sympy Rational unless integral)."""
        value = Rational(value)
        total = sum((c * value**k for k, c in self._coeffs.items()), Rational(0))
        return int(total) if total.is_integer else total

    def to_list(self):
        return [[k, c] for k, c in self.items()]

    def __add__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        coeffs = dict(self._coeffs)
        for k, c in other._coeffs.items():
            coeffs[k] = coeffs.get(k, 0) + c
        return LaurentPoly(coeffs)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        coeffs = {}
        for k1, c1 in self._coeffs.items():
            for k2, c2 in other._coeffs.items():
                coeffs[k1 + k2] = coeffs.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(coeffs)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        result = LaurentPoly.monomial(0)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    def to_string(self, variable="v"):
        if not self._coeffs:
            return "0"
        terms = []
        for k, c in self.items():
            if k == 0:
                term = str(abs(c))
            else:
                power = variable if k == 1 else f"{variable}^{k}"
                term = power if abs(c) == 1 else f"{abs(c)}{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, term))
        first_sign, first_term = terms[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in terms[1:]:
            text += f" {sign} {term}"
        return text

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"LaurentPoly({self.to_string()!r})"


def _as_laurent(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly(value)
    return None


V = LaurentPoly.monomial(1)
V_INV = LaurentPoly.monomial(-1)
ONE = LaurentPoly.monomial(0)

####--------------------------------------------------------------------------.
#### Hecke algebra elements


class HeckeElt:
    """Element sum_w p_w(v) H_w of the Hecke algebra."""

    __slots__ = ("datum", "terms")

    def __init__(self, datum, terms=None):
        self.datum = datum
        self.terms = {}
        for w, coeff in (terms or {}).items():
            coeff = _as_laurent(coeff)
            if coeff:
                self.terms[w] = coeff

    def coefficient(self, w):
        return self.terms.get(w, LaurentPoly())

    @property
    def support(self):
        return sorted(self.terms, key=lambda w: w.sort_key)

    def is_zero(self):
        return not self.terms

    def bar(self):
        return bar(self)

    def to_dict(self):
        """Return {canonical label: [[degree, coeff], ...]}."""
        return {w.label: self.terms[w].to_list() for w in self.support}

    def __add__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        terms = dict(self.terms)
        for w, coeff in other.terms.items():
            terms[w] = terms.get(w, LaurentPoly()) + coeff
        return HeckeElt(self.datum, terms)

    def __neg__(self):
        return HeckeElt(self.datum, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return hecke_mul(self, other)
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return HeckeElt(self.datum, {w: c * other for w, c in self.terms.items()})

    def __rmul__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return HeckeElt(self.datum, {w: other * c for w, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.datum == other.datum and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in self.support:
            subscript = "e" if w.length == 0 else "".join(str(i + 1) for i in w.word)
            parts.append(f"({self.terms[w]})H_{subscript}")
        return " + ".join(parts)

    def __repr__(self):
        return f"HeckeElt({self.datum.label}: {self})"


def standard_basis(w):
    """Return the standard basis element H_w."""
    return HeckeElt(w.datum, {w: ONE})


def _right_mul_simple(a, s):
    """Return a * H_s."""
    terms = {}
    for x, coeff in a.terms.items():
        xs = _right_mul(x, s)
        terms[xs] = terms.get(xs, LaurentPoly()) + coeff
        if xs.length < x.length:
            terms[x] = terms.get(x, LaurentPoly()) + coeff * (V_INV - V)
    return HeckeElt(a.datum, terms)


def _right_mul_kl_simple(a, s):
    """Return a * b_s."""
    return _right_mul_simple(a, s) + a * V


def hecke_mul(a, b):
    """Return the product a*b in the Hecke algebra."""
    if a.datum != b.datum:
        raise ValueError(f"Hecke elements of {a.datum.label} and {b.datum.label} cannot be multiplied.")
    result = HeckeElt(a.datum)
    for y, coeff in b.terms.items():
        partial = a
        for s in y.word:
            partial = _right_mul_simple(partial, s)
        result = result + partial * coeff
    return result


####--------------------------------------------------------------------------.
#### Bar involution and Kazhdan-Lusztig basis


class _HeckeCache:
    """Memo tables of one Weyl group, guarded by a lock."""

    def __init__(self, datum):
        self.datum = datum
        self.lock = threading.RLock()
        self.bar_standard = {}
        self.kl = {}


@functools.lru_cache(maxsize=None)
def _get_cache(datum):
    return _HeckeCache(datum)


def _bar_standard(w):
    """Return bar(H_w) = H_{s1}^-1 ... H_{sk}^-1."""
    cache = _get_cache(w.datum)
    with cache.lock:
        if w in cache.bar_standard:
            return cache.bar_standard[w]
        if w.length == 0:
            result = standard_basis(w)
        else:
            s = w.word[-1]
            previous = _bar_standard(_right_mul(w, s))
            result = _right_mul_simple(previous, s) + previous * (V - V_INV)
        cache.bar_standard[w] = result
        return result


def bar(a):
    """Return the bar involution of a: v -> v^-1 and H_w -> (H_{w^-1})^-1."""
    result = HeckeElt(a.datum)
    for w, coeff in a.terms.items():
        result = result + _bar_standard(w) * coeff.bar()
    return result


def kl_basis(w, bound=KL_LENGTH_BOUND):
    """Return the Kazhdan-Lusztig basis element b_w.

    Computed by the recursion b_w = b_y b_s - sum_{z < y, zs < z} mu(z, y) b_z
    with w = ys > y, where mu(z, y) is the coefficient of v in h_{z,y}.
    """
    if w.length > bound:
        raise PreconditionError(f"KL basis elements are computed up to length {bound}.")
    cache = _get_cache(w.datum)
    with cache.lock:
        if w in cache.kl:
            return cache.kl[w]
        if w.length == 0:
            result = standard_basis(w)
        else:
            s = w.word[-1]
            y = _right_mul(w, s)
            b_y = kl_basis(y, bound=bound)
            result = _right_mul_kl_simple(b_y, s)
            for z in b_y.support:
                if z == y or s not in z.right_descents:
                    continue
                mu = b_y.terms[z].coefficient(1)
                if mu != 0:
                    result = result - kl_basis(z, bound=bound) * mu
        cache.kl[w] = result
        return result


def kl_polynomial(y, w):
    """Return h_{y,w}, the coefficient of H_y in b_w."""
    _check_same_datum(y, w)
    return kl_basis(w).coefficient(y)


def mu_coefficient(y, w):
    """Return the coefficient of v in h_{y,w}."""
    return kl_polynomial(y, w).coefficient(1)


def express_in_kl_basis(a):
    """Return {w: p_w} with a = sum_w p_w b_w.

    The expansion peels off maximal-length terms using unitriangularity.
    """
    remainder = a
    expansion = {}
    while not remainder.is_zero():
        w = max(remainder.terms, key=lambda x: x.sort_key)
        coeff = remainder.terms[w]
        expansion[w] = coeff
        remainder = remainder - kl_basis(w) * coeff
    return expansion


def bs_character(datum, word):
    """Return b_{s1} b_{s2} ... b_{sl}, the character of the Bott-Samelson module.

    The empty word gives H_e.
    """
    result = standard_basis(identity(datum))
    for s in word:
        s = _check_generator(s, datum.rank)
        result = _right_mul_kl_simple(result, s)
    return result


def kl_simple(datum, s):
    """Return b_s = H_s + v H_e."""
    return standard_basis(simple_reflection(datum, s)) + standard_basis(identity(datum)) * V


def is_unitriangular(a, w):
    """Return True if a = H_w + sum_{y < w} p_y H_y."""
    if a.coefficient(w) != ONE:
        return False
    return all(y == w or (y.length < w.length and bruhat_leq(y, w)) for y in a.terms)
