"""Finite field tower F_p -> F_q = F_p[u]/(f) -> F_{q^l} = F_q[v]/(g).

Elements are plain non-negative integers.  An element of F_q is its
coefficient vector over F_p read as a base-``p`` number (constant term is
the lowest digit); an element of F_{q^l} is its coefficient vector over F_q
read as a base-``q`` number.  The two encodings agree on the flattened
F_p-digit vector, and F_q embeds into F_{q^l} as the integers ``0..q-1``.

Contexts are immutable after construction.  Small base fields (``q <= 256``)
carry full addition/multiplication tables computed from the polynomial
arithmetic during construction.
"""

from __future__ import annotations

from typing import Sequence

from .exceptions import (
    BasisNotLinearlyIndependent,
    DivisionByZero,
    NotIrreducible,
    NotPrime,
)
from .polynomials import Poly, gcd, powmod

TABLE_LIMIT = 256


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _to_digits(a: int, base: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        a, r = divmod(a, base)
        out.append(r)
    return out


def _from_digits(ds: Sequence[int], base: int) -> int:
    a = 0
    for d in reversed(ds):
        a = a * base + d
    return a


def is_irreducible(field, coeffs: Sequence[int]) -> bool:
    """Rabin's test for a monic polynomial over ``field`` (constant term first).

    A degree-``d`` polynomial is irreducible iff it divides ``x^(Q^d) - x``
    and is coprime to ``x^(Q^(d/r)) - x`` for every prime ``r | d``, where
    ``Q`` is the field order.
    """
    f = Poly(field, coeffs)
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    x = Poly.x(field)
    Q = field.order

    def frob_power(times: int) -> Poly:
        h = x
        for _ in range(times):
            h = powmod(h, Q, f)
        return h

    if not (frob_power(d) - x % f).is_zero():
        return False
    for r in _prime_factors(d):
        g = gcd(f, frob_power(d // r) - x)
        if g.degree != 0:
            return False
    return True


def _first_irreducible(field, degree: int) -> tuple[int, ...]:
    # lexicographic = increasing integer encoding of the non-leading coefficients
    Q = field.order
    for idx in range(Q**degree):
        coeffs = tuple(_to_digits(idx, Q, degree)) + (1,)
        if is_irreducible(field, coeffs):
            return coeffs
    raise NotIrreducible(f"no irreducible polynomial of degree {degree}")  # pragma: no cover


class FieldCtx:
    """The field F_q with q = p**s.

    Parameters
    ----------
    p : int
        Characteristic.
    s : int
        Extension degree over F_p.
    modulus : sequence of int
        Monic irreducible polynomial of degree ``s`` over F_p, constant term
        first.  Not validated here; use :func:`build_field`.
    """

    def __init__(self, p: int, s: int, modulus: Sequence[int]):
        self.p = p
        self.s = s
        self.modulus = tuple(modulus)
        self.q = self.order = p**s
        self.zero, self.one = 0, 1
        self._tables = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- slow path: polynomial arithmetic over F_p -------------------------
    def digits(self, a: int) -> list[int]:
        return _to_digits(a, self.p, self.s)

    def from_digits(self, ds: Sequence[int]) -> int:
        return _from_digits(ds, self.p)

    def _add_slow(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        return self.from_digits([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def _neg_slow(self, a: int) -> int:
        p = self.p
        return self.from_digits([(-x) % p for x in self.digits(a)])

    def _mul_slow(self, a: int, b: int) -> int:
        p, s, f = self.p, self.s, self.modulus
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * s - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        for i in range(2 * s - 2, s - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(s):
                    prod[i - s + j] -= c * f[j]
        return self.from_digits([c % p for c in prod[:s]])

    def _build_tables(self):
        q = self.q
        add = [self._add_slow(a, b) for a in range(q) for b in range(q)]
        mul = [self._mul_slow(a, b) for a in range(q) for b in range(q)]
        neg = [self._neg_slow(a) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            row = a * q
            for b in range(1, q):
                if mul[row + b] == 1:
                    inv[a] = b
                    break
        self._tables = (add, mul, neg, inv)

    # -- public arithmetic ----------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self._tables:
            return self._tables[0][a * self.q + b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self._tables:
            return self._tables[2][a]
        return self._neg_slow(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._tables:
            return self._tables[1][a * self.q + b]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self._tables:
            return self._tables[3][a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def frobenius(self, a: int) -> int:
        """``a**p``."""
        return self.pow(a, self.p)

    def elements(self) -> range:
        return range(self.q)

    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus)

    def __hash__(self):
        return hash((self.p, self.s, self.modulus))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, s={self.s}, modulus={self.modulus})"

    def __getstate__(self):
        return {"p": self.p, "s": self.s, "modulus": self.modulus}

    def __setstate__(self, state):
        self.__init__(state["p"], state["s"], state["modulus"])


def prime_field(p: int) -> FieldCtx:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return FieldCtx(p, 1, (0, 1))


def build_field(p: int, s: int = 1, f: Sequence[int] | None = None) -> FieldCtx:
    """Construct F_{p^s}, selecting the first irreducible modulus if ``f`` is omitted."""
    if s < 1:
        raise ValueError("extension degree must be >= 1")
    fp = prime_field(p)
    if f is None:
        modulus = _first_irreducible(fp, s)
    else:
        modulus = tuple(int(c) for c in f)
        if len(modulus) != s + 1 or modulus[-1] != 1 or any(not 0 <= c < p for c in modulus):
            raise ValueError(f"modulus must be monic of degree {s} over F_{p}")
        if not is_irreducible(fp, modulus):
            raise NotIrreducible(f"{modulus} is reducible over F_{p}")
    if s == 1 and modulus == (0, 1):
        return fp
    return FieldCtx(p, s, modulus)


class ExtFieldCtx:
    """The extension F_{q^l} = F_q[v]/(g) with a basis and its trace-dual basis.

    Construct through :func:`build_extension`, which validates the modulus
    and computes the dual basis.
    """

    def __init__(self, base: FieldCtx, l: int, modulus: Sequence[int], basis: Sequence[int]):
        self.base = base
        self.l = l
        self.modulus = tuple(modulus)
        self.q = base.q
        self.order = base.q**l
        self.zero, self.one = 0, 1
        self.basis = tuple(basis)
        # trace matrix of the basis products; singular iff not a basis
        gram = [[self.trace(self.mul(a, b)) for b in self.basis] for a in self.basis]
        from .linalg import SingularMatrix, invert

        try:
            gram_inv = invert(base, gram)
        except SingularMatrix:
            raise BasisNotLinearlyIndependent(f"{self.basis} is not a basis over F_{self.q}") from None
        self.dual_basis = tuple(
            self._combine([gram_inv[k][j] for k in range(l)], self.basis) for j in range(l)
        )
        # rows: linear functionals b -> tr(zeta_i * b) on the coefficient vector of b
        monomials = [self.q**d for d in range(l)]
        self.trace_matrix = tuple(
            tuple(self.trace(self.mul(z, v)) for v in monomials) for z in self.basis
        )

    # -- representation ----------------------------------------------------
    def coeffs(self, a: int) -> list[int]:
        return _to_digits(a, self.q, self.l)

    def from_coeffs(self, cs: Sequence[int]) -> int:
        return _from_digits(cs, self.q)

    def embed(self, a: int) -> int:
        """Image of a base-field element (the identity on encodings)."""
        return a

    def is_base(self, a: int) -> bool:
        return a < self.q

    def _combine(self, scalars: Sequence[int], vectors: Sequence[int]) -> int:
        acc = 0
        for c, v in zip(scalars, vectors):
            if c:
                acc = self.add(acc, self.scalar_mul(c, v))
        return acc

    # -- arithmetic --------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.base.p == 2:
            return a ^ b
        badd = self.base.add
        return self.from_coeffs([badd(x, y) for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a: int) -> int:
        if self.base.p == 2:
            return a
        bneg = self.base.neg
        return self.from_coeffs([bneg(x) for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scalar_mul(self, c: int, a: int) -> int:
        """Product of base element ``c`` with extension element ``a``."""
        if c == 0 or a == 0:
            return 0
        if c == 1:
            return a
        bmul = self.base.mul
        return self.from_coeffs([bmul(c, x) for x in self.coeffs(a)])

    def mul(self, a: int, b: int) -> int:
        q = self.q
        if a < q:
            return self.scalar_mul(a, b)
        if b < q:
            return self.scalar_mul(b, a)
        badd, bmul, bsub = self.base.add, self.base.mul, self.base.sub
        l, g = self.l, self.modulus
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * l - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    if y:
                        prod[i + j] = badd(prod[i + j], bmul(x, y))
        for i in range(2 * l - 2, l - 1, -1):
            c = prod[i]
            if c:
                for j in range(l):
                    if g[j]:
                        prod[i - l + j] = bsub(prod[i - l + j], bmul(c, g[j]))
        return self.from_coeffs(prod[:l])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if a < self.q:
            return self.base.inv(a)
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, times: int = 1) -> int:
        """``a**(q**times)``; fixes exactly the base field when ``times == 1``."""
        for _ in range(times):
            a = self.pow(a, self.q)
        return a

    # -- trace and coordinates ---------------------------------------------
    def trace(self, a: int) -> int:
        """``a + a^q + ... + a^(q^(l-1))``, computed by repeated Frobenius."""
        acc, x = 0, a
        for i in range(self.l):
            acc = self.add(acc, x)
            if i + 1 < self.l:
                x = self.frobenius(x)
        if acc >= self.q:  # pragma: no cover - would mean a broken modulus
            raise ArithmeticError("trace left the base field")
        return acc

    def expand(self, a: int) -> list[int]:
        """``(tr(zeta_0 a), ..., tr(zeta_{l-1} a))`` via the precomputed trace matrix."""
        badd, bmul = self.base.add, self.base.mul
        ca = self.coeffs(a)
        out = []
        for row in self.trace_matrix:
            acc = 0
            for m, c in zip(row, ca):
                if m and c:
                    acc = badd(acc, bmul(m, c))
            out.append(acc)
        return out

    def recombine(self, projections: Sequence[int]) -> int:
        """Inverse of :meth:`expand`: ``sum_i t_i * nu_i``."""
        return self._combine(projections, self.dual_basis)

    def elements(self) -> range:
        return range(self.order)

    # -- equality / serialization ------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, ExtFieldCtx):
            return NotImplemented
        return (self.base, self.l, self.modulus, self.basis) == (
            other.base,
            other.l,
            other.modulus,
            other.basis,
        )

    def __hash__(self):
        return hash((self.base, self.l, self.modulus, self.basis))

    def __repr__(self):
        return f"ExtFieldCtx(q={self.q}, l={self.l}, modulus={self.modulus})"

    def __getstate__(self):
        return self.to_dict()

    def __setstate__(self, state):
        base = FieldCtx(state["p"], state["s"], state["f"])
        self.__init__(base, state["l"], state["g"], state["basis"])

    def to_dict(self) -> dict:
        return {
            "p": self.base.p,
            "s": self.base.s,
            "f": list(self.base.modulus),
            "l": self.l,
            "g": list(self.modulus),
            "basis": list(self.basis),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ExtFieldCtx":
        base = build_field(int(d["p"]), int(d.get("s", 1)), d.get("f"))
        return build_extension(base, int(d["l"]), d.get("g"), d.get("basis"))


def build_extension(
    base: FieldCtx,
    l: int,
    g: Sequence[int] | None = None,
    basis: Sequence[int] | None = None,
) -> ExtFieldCtx:
    """Construct F_{q^l} over ``base``.

    Without ``g`` the first irreducible monic polynomial of degree ``l`` in
    increasing integer encoding is used; without ``basis`` the polynomial
    basis ``1, v, ..., v^(l-1)`` is used.
    """
    if l < 1:
        raise ValueError("extension degree must be >= 1")
    if g is None:
        modulus = _first_irreducible(base, l)
    else:
        modulus = tuple(int(c) for c in g)
        if len(modulus) != l + 1 or modulus[-1] != 1 or any(not 0 <= c < base.q for c in modulus):
            raise ValueError(f"modulus must be monic of degree {l} over F_{base.q}")
        if not is_irreducible(base, modulus):
            raise NotIrreducible(f"{modulus} is reducible over F_{base.q}")
    if basis is None:
        basis = [base.q**i for i in range(l)]
    else:
        basis = [int(b) for b in basis]
        if len(basis) != l or any(not 0 <= b < base.q**l for b in basis):
            raise BasisNotLinearlyIndependent(f"need {l} elements of F_{base.q}^{l}")
    return ExtFieldCtx(base, l, modulus, basis)
