"""Multivariate polynomials over Q or F_p with the operator set the rest of
the package leans on: initial forms, divided-power (Hasse) derivatives,
variable translations, and p-th power roots.

Monomials are dense exponent tuples. Terms live in a dict keyed by Monomial.
The canonical printing order is graded lex, descending, so serialized output
is stable across runs.
"""

import math
import re

from .arith import SlopelabError, field_of_characteristic

VARIABLE_CAP = 8


class ZeroPolynomial(SlopelabError):
    """Raised when an operation needs a nonzero polynomial."""


class IllegalSubstitution(SlopelabError):
    """Raised when a translation would substitute a variable into itself."""


class Monomial:
    """Exponent vector of fixed length (one slot per ring variable)."""

    __slots__ = ("exps",)

    def __init__(self, exps):
        exps = tuple(int(e) for e in exps)
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent in %r" % (exps,))
        self.exps = exps

    def degree(self):
        return sum(self.exps)

    def degree_in(self, indices):
        return sum(self.exps[i] for i in indices)

    def mul(self, other):
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other):
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def div(self, other):
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def lcm(self, other):
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def grlex_key(self):
        return (self.degree(), self.exps)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return "Monomial%r" % (self.exps,)


class Ring:
    """A polynomial ring: named variables plus a coefficient field."""

    def __init__(self, variables, char=0):
        variables = tuple(variables)
        if len(variables) > VARIABLE_CAP:
            raise ValueError("at most %d variables supported" % VARIABLE_CAP)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        for name in variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ValueError("bad variable name %r" % name)
        self.variables = variables
        self.field = field_of_characteristic(char)
        self.char = self.field.char

    def index(self, name):
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError("no variable %r in %r" % (name, self.variables))

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, n):
        c = self.field.from_int(n) if isinstance(n, int) else n
        if not c:
            return self.zero()
        unit = Monomial((0,) * len(self.variables))
        return Polynomial(self, {unit: c})

    def var(self, name, exp=1):
        exps = [0] * len(self.variables)
        exps[self.index(name)] = exp
        return Polynomial(self, {Monomial(exps): self.field.one})

    def monomial(self, exps, coeff=1):
        c = self.field.from_int(coeff) if isinstance(coeff, int) else coeff
        if not c:
            return self.zero()
        return Polynomial(self, {Monomial(exps): c})

    def parse(self, text):
        return _parse(self, text)

    def extend(self, extra):
        return Ring(self.variables + tuple(extra), self.char)

    def lift(self, poly):
        """Carry a polynomial from a ring whose variables are a subset of ours."""
        src = poly.ring
        pos = [self.index(name) for name in src.variables]
        terms = {}
        for mono, c in poly.terms.items():
            exps = [0] * len(self.variables)
            for i, e in enumerate(mono.exps):
                exps[pos[i]] = e
            terms[Monomial(exps)] = c
        return Polynomial(self, terms)

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.variables == other.variables
                and self.field == other.field)

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return "%r[%s]" % (self.field, ",".join(self.variables))


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(m.degree() == 0 for m in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def constant_term(self):
        unit = Monomial((0,) * len(self.ring.variables))
        return self.terms.get(unit, self.ring.field.zero)

    def degree(self):
        if self.is_zero():
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(m.degree() for m in self.terms)

    def min_degree(self):
        if self.is_zero():
            raise ZeroPolynomial("order of the zero polynomial")
        return min(m.degree() for m in self.terms)

    def min_degree_in(self, indices):
        """Smallest total degree of a term in the given variable slots."""
        if self.is_zero():
            raise ZeroPolynomial("order of the zero polynomial")
        return min(m.degree_in(indices) for m in self.terms)

    def degree_of_var(self, name):
        i = self.ring.index(name)
        if self.is_zero():
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(m.exps[i] for m in self.terms)

    def vars_used(self):
        used = set()
        for m in self.terms:
            for i, e in enumerate(m.exps):
                if e:
                    used.add(i)
        return used

    def _same_ring(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial) or other.ring != self.ring:
            raise TypeError("polynomials from different rings")
        return other

    def __add__(self, other):
        other = self._same_ring(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, self.ring.field.zero) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._same_ring(other))

    def __rsub__(self, other):
        return self._same_ring(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(self.ring.field.from_int(other))
        other = self._same_ring(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                s = terms.get(m, self.ring.field.zero) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def scale(self, c):
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def initial_form(self):
        """Homogeneous part of lowest total degree."""
        d = self.min_degree()
        return Polynomial(self.ring,
                          {m: c for m, c in self.terms.items() if m.degree() == d})

    def initial_form_in(self, indices):
        """Terms of lowest total degree in the given variable slots."""
        d = self.min_degree_in(indices)
        return Polynomial(self.ring,
                          {m: c for m, c in self.terms.items()
                           if m.degree_in(indices) == d})

    def hasse_derivative(self, name, b):
        """Divided-power derivative of order b in one variable.

        Acts on x^n by the binomial coefficient C(n, b) and drops the
        exponent by b, which keeps it meaningful in small characteristic.
        """
        if b < 0:
            raise ValueError("derivative order must be >= 0")
        if b == 0:
            return self
        i = self.ring.index(name)
        field = self.ring.field
        terms = {}
        for m, c in self.terms.items():
            e = m.exps[i]
            if e < b:
                continue
            k = field.from_int(math.comb(e, b)) * c
            if not k:
                continue
            exps = list(m.exps)
            exps[i] = e - b
            mono = Monomial(exps)
            s = terms.get(mono, field.zero) + k
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return Polynomial(self.ring, terms)

    def translate(self, name, shift):
        """Substitute name -> name + shift, with shift free of that variable."""
        shift = self._same_ring(shift)
        i = self.ring.index(name)
        if i in shift.vars_used():
            raise IllegalSubstitution(
                "shift for %s mentions %s itself" % (name, name))
        field = self.ring.field
        # cache powers of the shift as we go
        powers = {0: self.ring.one()}

        def shift_power(j):
            if j not in powers:
                powers[j] = shift_power(j - 1) * shift
            return powers[j]

        out = self.ring.zero()
        for m, c in self.terms.items():
            e = m.exps[i]
            rest = list(m.exps)
            for j in range(e + 1):
                k = field.from_int(math.comb(e, j)) * c
                if not k:
                    continue
                rest[i] = e - j
                out = out + shift_power(j).scale(k) * Polynomial(
                    self.ring, {Monomial(rest): field.one})
        return out

    def coefficients_in(self, name):
        """Split into coefficients of powers of one variable.

        Returns {exponent: coefficient polynomial}; the coefficients still
        live in the full ring but do not mention the variable.
        """
        i = self.ring.index(name)
        out = {}
        for m, c in self.terms.items():
            e = m.exps[i]
            exps = list(m.exps)
            exps[i] = 0
            part = out.setdefault(e, self.ring.zero())
            out[e] = part + Polynomial(self.ring, {Monomial(exps): c})
        return out

    def pth_power_root(self, e=1):
        """Inverse of the p^e-th power map, or None when there is none.

        Over F_p the power map fixes scalars, so the root exists exactly
        when every exponent is divisible by p^e.
        """
        p = self.ring.char
        if p == 0:
            raise SlopelabError("p-th roots need positive characteristic")
        if e < 1:
            raise ValueError("root exponent must be >= 1")
        q = p ** e
        terms = {}
        for m, c in self.terms.items():
            if any(x % q for x in m.exps):
                return None
            terms[Monomial(tuple(x // q for x in m.exps))] = c
        return Polynomial(self.ring, terms)

    def canonical_terms(self):
        return sorted(self.terms.items(),
                      key=lambda item: item[0].grlex_key(), reverse=True)

    def canonical_string(self):
        if self.is_zero():
            return "0"
        pieces = []
        for m, c in self.canonical_terms():
            body = "*".join(
                name if e == 1 else "%s^%d" % (name, e)
                for name, e in zip(self.ring.variables, m.exps) if e)
            cs = _coeff_string(c)
            if body:
                if cs == "1":
                    text = body
                elif cs == "-1":
                    text = "-" + body
                else:
                    text = cs + "*" + body
            else:
                text = cs
            pieces.append(text)
        out = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    def __repr__(self):
        return self.canonical_string()


def _coeff_string(c):
    if hasattr(c, "p"):  # prime field residue
        return str(c.value)
    return str(c)


class VariableSplit:
    """A partition of the ring variables into base and fiber blocks."""

    def __init__(self, ring, base, fiber):
        base, fiber = tuple(base), tuple(fiber)
        for name in base + fiber:
            ring.index(name)
        if set(base) & set(fiber):
            raise ValueError("base and fiber overlap")
        if set(base) | set(fiber) != set(ring.variables):
            raise ValueError("split must cover every variable")
        self.ring = ring
        self.base = base
        self.fiber = fiber

    def base_indices(self):
        return tuple(self.ring.index(v) for v in self.base)

    def fiber_indices(self):
        return tuple(self.ring.index(v) for v in self.fiber)

    def __repr__(self):
        return "VariableSplit(base=%r, fiber=%r)" % (self.base, self.fiber)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\^)|(\*)|(\+)|(-)|(\()|(\)))")


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise SlopelabError("cannot read polynomial at %r" % text[pos:pos + 12])
        pos = m.end()
        out.append(m.group().strip())
    out.append(None)  # end marker
    return out


def _parse(ring, text):
    tokens = _tokenize(text)
    k = [0]

    def peek():
        return tokens[k[0]]

    def take():
        tok = tokens[k[0]]
        k[0] += 1
        return tok

    def atom():
        tok = take()
        if tok == "(":
            e = expr()
            if take() != ")":
                raise SlopelabError("unbalanced parenthesis in %r" % text)
            return e
        if tok == "-":
            return -atom()
        if tok is None:
            raise SlopelabError("polynomial text ended early: %r" % text)
        if tok.isdigit():
            return ring.constant(int(tok))
        return ring.var(tok)

    def factor():
        base = atom()
        if peek() == "^":
            take()
            exp = take()
            if exp is None or not exp.isdigit():
                raise SlopelabError("exponent must be a nonnegative integer")
            return base ** int(exp)
        return base

    def term():
        out = factor()
        while peek() == "*":
            take()
            out = out * factor()
        return out

    def expr():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        out = term() * sign
        while peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
            out = out + term() * sign
        return out

    result = expr()
    if peek() is not None:
        raise SlopelabError("trailing junk in polynomial %r" % text)
    return result
