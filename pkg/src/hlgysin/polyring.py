"""Exact sparse polynomial arithmetic over the integers.

Polynomials live in Z[x_1, ..., x_n, t]: n ordinary variables plus one
distinguished parameter t that is never substituted implicitly.  Terms are
stored sparsely as a dict mapping exponent tuples (a_1, ..., a_n, k) -- the
x-exponents followed by the t-exponent -- to nonzero integer coefficients.
Instances are immutable by convention: no operation mutates its operands,
so values may be shared and memoized freely.

Exact division is the one subtle algorithm.  Divisors of the shape
x_i - x_j go through univariate synthetic division (the hot path: quotients
by a Vandermonde determinant divide by one linear factor at a time),
divisors involving only t go through univariate long division over the
x-monomials, and general divisors fall back to leading-term reduction in
graded-lex order.  A division that leaves a remainder raises
NotDivisibleError; callers treat that as a correctness probe and never
catch it to paper over a failure.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache


class ArityMismatchError(ValueError):
    """Operands live in rings with different numbers of x-variables."""


class NotDivisibleError(ArithmeticError):
    """Exact division left a nonzero remainder."""


def _validated_terms(arity, terms):
    clean = {}
    for key, coeff in terms.items():
        key = tuple(key)
        if len(key) != arity + 1:
            raise ValueError(f"exponent tuple {key!r} does not match arity {arity}")
        if any(e < 0 or not isinstance(e, int) for e in key):
            raise ValueError(f"exponents must be nonnegative integers, got {key!r}")
        if not isinstance(coeff, int):
            raise ValueError(f"coefficients must be integers, got {coeff!r}")
        if coeff:
            clean[key] = clean.get(key, 0) + coeff
            if not clean[key]:
                del clean[key]
    return clean


class Polynomial:
    """Sparse integer polynomial in x_1..x_n and the parameter t."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        if not isinstance(arity, int) or arity < 0:
            raise ValueError(f"arity must be a nonnegative integer, got {arity!r}")
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", _validated_terms(arity, terms or {}))

    @classmethod
    def _raw(cls, arity, terms):
        """Trusted constructor: ``terms`` already canonical (no zero coefficients)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "arity", arity)
        object.__setattr__(obj, "terms", terms)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # ------------------------------------------------------------------ #
    # constructors

    @classmethod
    def zero(cls, arity):
        return cls._raw(arity, {})

    @classmethod
    def constant(cls, arity, value):
        if not value:
            return cls.zero(arity)
        return cls._raw(arity, {(0,) * (arity + 1): int(value)})

    @classmethod
    def one(cls, arity):
        return cls.constant(arity, 1)

    @classmethod
    def x(cls, arity, index):
        """The variable x_index (1-based)."""
        if not 1 <= index <= arity:
            raise ValueError(f"variable index {index} out of range 1..{arity}")
        key = [0] * (arity + 1)
        key[index - 1] = 1
        return cls._raw(arity, {tuple(key): 1})

    @classmethod
    def t(cls, arity):
        """The parameter t as an element of the arity-n ring."""
        key = (0,) * arity + (1,)
        return cls._raw(arity, {key: 1})

    @classmethod
    def monomial(cls, arity, x_exponents, t_exponent=0, coeff=1):
        x_exponents = tuple(x_exponents)
        if len(x_exponents) != arity:
            raise ArityMismatchError(
                f"{len(x_exponents)} x-exponents for arity {arity}"
            )
        return cls(arity, {x_exponents + (t_exponent,): coeff})

    # ------------------------------------------------------------------ #
    # basic queries

    @property
    def is_zero(self):
        return not self.terms

    def x_degree(self):
        """Total degree in the x-variables (-1 for the zero polynomial)."""
        n = self.arity
        return max((sum(k[:n]) for k in self.terms), default=-1)

    def t_degree(self):
        n = self.arity
        return max((k[n] for k in self.terms), default=-1)

    def is_homogeneous_in_x(self):
        n = self.arity
        degrees = {sum(k[:n]) for k in self.terms}
        return len(degrees) <= 1

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # ------------------------------------------------------------------ #
    # ring operations

    def _coerce(self, other):
        if isinstance(other, int):
            return Polynomial.constant(self.arity, other)
        if isinstance(other, Polynomial):
            if other.arity != self.arity:
                raise ArityMismatchError(
                    f"arity {self.arity} vs {other.arity}"
                )
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return Polynomial._raw(self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Polynomial.zero(self.arity)
            return Polynomial._raw(
                self.arity, {k: c * other for k, c in self.terms.items()}
            )
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return Polynomial.zero(self.arity)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        for kb, cb in b.items():
            for ka, ca in a.items():
                key = tuple(map(int.__add__, ka, kb))
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    del out[key]
        return Polynomial._raw(self.arity, out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Polynomial.one(self.arity)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    # ------------------------------------------------------------------ #
    # variable permutation, substitution, evaluation, embedding

    def permute_vars(self, w):
        """Apply x_i |-> x_{w(i)}; ``w`` is a Permutation of degree arity."""
        images = w.images
        n = self.arity
        if len(images) != n:
            raise ArityMismatchError(
                f"permutation degree {len(images)} vs arity {n}"
            )
        src = [0] * (n + 1)
        for i, img in enumerate(images):
            src[img - 1] = i
        src[n] = n
        out = {}
        for key, c in self.terms.items():
            out[tuple(key[s] for s in src)] = c
        return Polynomial._raw(n, out)

    def substitute_t(self, value):
        """Substitute an integer for t."""
        n = self.arity
        out = {}
        for key, c in self.terms.items():
            nc = c * value ** key[n]
            if not nc:
                continue
            key0 = key[:n] + (0,)
            s = out.get(key0, 0) + nc
            if s:
                out[key0] = s
            else:
                del out[key0]
        return Polynomial._raw(n, out)

    def eval_at(self, point, t_value):
        """Evaluate at integer x-values ``point`` and integer ``t_value``."""
        point = tuple(point)
        n = self.arity
        if len(point) != n:
            raise ArityMismatchError(f"{len(point)} values for arity {n}")
        total = 0
        for key, c in self.terms.items():
            v = c
            for base, e in zip(point, key):
                if e:
                    v *= base ** e
            if key[n]:
                v *= t_value ** key[n]
            total += v
        return total

    def embed(self, arity, offset=0):
        """Reinterpret in a larger ring, x_i |-> x_{i+offset}; t is shared."""
        n = self.arity
        if offset < 0 or offset + n > arity:
            raise ArityMismatchError(
                f"cannot embed arity {n} at offset {offset} into arity {arity}"
            )
        pre = (0,) * offset
        post = (0,) * (arity - offset - n)
        out = {}
        for key, c in self.terms.items():
            out[pre + key[:n] + post + (key[n],)] = c
        return Polynomial._raw(arity, out)

    # ------------------------------------------------------------------ #
    # exact division

    def divide_exact(self, divisor):
        """Exact quotient self/divisor; raises NotDivisibleError on remainder."""
        divisor = self._coerce(divisor)
        if divisor is None or not isinstance(divisor, Polynomial):
            raise TypeError("divisor must be a Polynomial or int")
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return self
        pair = divisor._as_linear_difference()
        if pair is not None:
            return self._div_linear_difference(*pair)
        if divisor._is_t_only():
            return self._div_t_only(divisor)
        return self._div_general(divisor)

    def _as_linear_difference(self):
        """Return 0-based (i, j) when self == x_{i+1} - x_{j+1}, else None."""
        if len(self.terms) != 2:
            return None
        plus = minus = None
        n = self.arity
        for key, c in self.terms.items():
            if key[n] or sum(key[:n]) != 1:
                return None
            pos = key.index(1)
            if c == 1:
                plus = pos
            elif c == -1:
                minus = pos
            else:
                return None
        if plus is None or minus is None:
            return None
        return plus, minus

    def _is_t_only(self):
        n = self.arity
        return all(not any(key[:n]) for key in self.terms)

    def _div_linear_difference(self, i, j):
        """Synthetic division by (x_{i+1} - x_{j+1})."""
        n = self.arity
        levels = {}
        for key, c in self.terms.items():
            rest = key[:i] + (0,) + key[i + 1:]
            levels.setdefault(key[i], {})[rest] = c
        d = max(levels)
        if d == 0:
            raise NotDivisibleError(f"no x{i + 1} present in dividend")
        quotient = {}
        cur = {}
        for k in range(d, 0, -1):
            nxt = {}
            for rest, c in cur.items():
                shifted = rest[:j] + (rest[j] + 1,) + rest[j + 1:]
                nxt[shifted] = nxt.get(shifted, 0) + c
            for rest, c in levels.get(k, {}).items():
                s = nxt.get(rest, 0) + c
                if s:
                    nxt[rest] = s
                else:
                    nxt.pop(rest, None)
            cur = nxt
            if cur:
                exp = k - 1
                for rest, c in cur.items():
                    quotient[rest[:i] + (exp,) + rest[i + 1:]] = c
        remainder = {}
        for rest, c in cur.items():
            shifted = rest[:j] + (rest[j] + 1,) + rest[j + 1:]
            remainder[shifted] = remainder.get(shifted, 0) + c
        for rest, c in levels.get(0, {}).items():
            s = remainder.get(rest, 0) + c
            if s:
                remainder[rest] = s
            else:
                remainder.pop(rest, None)
        if any(remainder.values()):
            raise NotDivisibleError(f"remainder after dividing by x{i + 1} - x{j + 1}")
        return Polynomial._raw(n, quotient)

    def _div_t_only(self, divisor):
        """Long division in t with coefficients in Z[x_1..x_n]."""
        n = self.arity
        qlev = {key[n]: c for key, c in divisor.terms.items()}
        deg = max(qlev)
        lead = qlev.pop(deg)
        work = {}
        top = 0
        for key, c in self.terms.items():
            k = key[n]
            work.setdefault(k, {})[key[:n]] = c
            top = max(top, k)
        if top < deg:
            raise NotDivisibleError("dividend has lower t-degree than divisor")
        out = {}
        for k in range(top, deg - 1, -1):
            ck = work.pop(k, None)
            if not ck:
                continue
            b = {}
            for xk, c in ck.items():
                if c % lead:
                    raise NotDivisibleError("leading t-coefficient does not divide")
                b[xk] = c // lead
            for xk, c in b.items():
                out[xk + (k - deg,)] = c
            for e, a in qlev.items():
                tgt = work.setdefault(k - deg + e, {})
                for xk, bc in b.items():
                    s = tgt.get(xk, 0) - a * bc
                    if s:
                        tgt[xk] = s
                    else:
                        tgt.pop(xk, None)
        if any(work.values()):
            raise NotDivisibleError("nonzero remainder in t-division")
        return Polynomial._raw(n, out)

    def _order_key(self, key):
        n = self.arity
        return (sum(key[:n]), key[:n], key[n])

    def _div_general(self, divisor):
        """Leading-term reduction in graded-lex order."""
        okey = self._order_key
        dlead = max(divisor.terms, key=okey)
        dc = divisor.terms[dlead]
        rem = dict(self.terms)
        out = {}
        width = self.arity + 1
        while rem:
            plead = max(rem, key=okey)
            mono = tuple(map(int.__sub__, plead, dlead))
            if any(e < 0 for e in mono):
                raise NotDivisibleError("leading monomial not divisible")
            c = rem[plead]
            if c % dc:
                raise NotDivisibleError("leading coefficient not divisible")
            f = c // dc
            out[mono] = out.get(mono, 0) + f
            for dkey, dv in divisor.terms.items():
                key = tuple(map(int.__add__, mono, dkey))
                s = rem.get(key, 0) - f * dv
                if s:
                    rem[key] = s
                else:
                    rem.pop(key, None)
        return Polynomial._raw(self.arity, {k: c for k, c in out.items() if c})

    # ------------------------------------------------------------------ #
    # serialization

    def sorted_terms(self):
        """Terms in canonical order: graded-lex descending on x, then t ascending."""
        n = self.arity
        return sorted(
            self.terms.items(),
            key=lambda kv: (
                -sum(kv[0][:n]),
                tuple(-e for e in kv[0][:n]),
                kv[0][n],
            ),
        )

    def to_text(self):
        if not self.terms:
            return "0"
        n = self.arity
        pieces = []
        for key, c in self.sorted_terms():
            xs = [f"x{i + 1}^{e}" for i, e in enumerate(key[:n]) if e]
            k = key[n]
            if not xs:
                if not k:
                    pieces.append(str(c))
                else:
                    tpart = "t" if k == 1 else f"t^{k}"
                    if c == 1:
                        pieces.append(tpart)
                    elif c == -1:
                        pieces.append("-" + tpart)
                    else:
                        pieces.append(f"{c}*{tpart}")
            else:
                body = f"{c} * " + " ".join(xs)
                if k:
                    body += f" * t^{k}"
                pieces.append(body)
        return " + ".join(pieces)

    __str__ = to_text

    def __repr__(self):
        return f"Polynomial({self.arity}, {self.to_text()!r})"

    def to_latex(self):
        if not self.terms:
            return "0"
        n = self.arity
        pieces = []
        for key, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(key[:n]):
                if e == 1:
                    factors.append(f"x_{{{i + 1}}}")
                elif e:
                    factors.append(f"x_{{{i + 1}}}^{{{e}}}")
            k = key[n]
            if k == 1:
                factors.append("t")
            elif k:
                factors.append(f"t^{{{k}}}")
            mag = abs(c)
            if factors:
                body = " ".join(factors)
                if mag != 1:
                    body = f"{mag} {body}"
            else:
                body = str(mag)
            pieces.append((c < 0, body))
        first_neg, first = pieces[0]
        text = ("-" if first_neg else "") + first
        for neg, body in pieces[1:]:
            text += (" - " if neg else " + ") + body
        return text

    def to_json_terms(self):
        n = self.arity
        return [
            {"coeff": c, "x_exponents": list(key[:n]), "t_exponent": key[n]}
            for key, c in self.sorted_terms()
        ]

    _T_TERM = re.compile(r"(?:(-)|(-?\d+)\*)?t(?:\^(\d+))?$")
    _X_FACTOR = re.compile(r"x(\d+)\^(\d+)$")

    @classmethod
    def parse(cls, text, arity):
        """Inverse of to_text for the given arity."""
        text = text.strip()
        if text == "0":
            return cls.zero(arity)
        terms = {}

        def put(key, c):
            s = terms.get(key, 0) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)

        for piece in text.split(" + "):
            piece = piece.strip()
            if not piece:
                raise ValueError("empty term")
            if re.fullmatch(r"-?\d+", piece):
                put((0,) * arity + (0,), int(piece))
                continue
            m = cls._T_TERM.fullmatch(piece)
            if m:
                neg, num, exp = m.groups()
                c = -1 if neg else int(num) if num else 1
                k = int(exp) if exp else 1
                put((0,) * arity + (k,), c)
                continue
            parts = piece.split(" * ")
            if len(parts) < 2:
                raise ValueError(f"cannot parse term {piece!r}")
            c = int(parts[0])
            k = 0
            rest = parts[1:]
            tm = cls._T_TERM.fullmatch(rest[-1])
            if tm and tm.group(1) is None and tm.group(2) is None:
                k = int(tm.group(3)) if tm.group(3) else 1
                rest = rest[:-1]
            if len(rest) != 1:
                raise ValueError(f"cannot parse term {piece!r}")
            exps = [0] * arity
            for factor in rest[0].split():
                fm = cls._X_FACTOR.fullmatch(factor)
                if not fm:
                    raise ValueError(f"cannot parse factor {factor!r}")
                idx, e = int(fm.group(1)), int(fm.group(2))
                if not 1 <= idx <= arity:
                    raise ValueError(f"variable x{idx} out of range for arity {arity}")
                exps[idx - 1] += e
            put(tuple(exps) + (k,), c)
        return cls(arity, terms)


# ---------------------------------------------------------------------- #
# module-level helpers


def difference_product(arity, pairs):
    """prod (x_i - x_j) over the given 1-based index pairs."""
    out = Polynomial.one(arity)
    for i, j in pairs:
        out = out * (Polynomial.x(arity, i) - Polynomial.x(arity, j))
    return out


@lru_cache(maxsize=None)
def vandermonde(arity):
    """prod_{i<j} (x_i - x_j)."""
    return difference_product(
        arity, tuple(itertools.combinations(range(1, arity + 1), 2))
    )


def divide_by_vandermonde(p):
    """Exact quotient p / prod_{i<j}(x_i - x_j), one linear factor at a time."""
    n = p.arity
    for i, j in itertools.combinations(range(n), 2):
        if p.is_zero:
            return p
        p = p._div_linear_difference(i, j)
    return p
