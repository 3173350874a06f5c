"""Sparse polynomials in x_1..x_n with coefficients in Z[beta].

A :class:`PolyZB` maps exponent tuples to :class:`BetaInt` coefficients.
Python integers are unbounded, so no arithmetic here can overflow.
"""

from __future__ import annotations

import json
from itertools import combinations


class BetaInt:
    """An integer polynomial in beta, stored densely as ``coeffs[k]`` = coefficient of beta^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"BetaInt coefficients must be int, got {type(c).__name__}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BetaInt((other,))
        if not isinstance(other, BetaInt):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = BetaInt((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return BetaInt(out)

    __radd__ = __add__

    def __neg__(self):
        return BetaInt(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, BetaInt) else BetaInt((-other,)))

    def __mul__(self, other):
        if isinstance(other, int):
            return BetaInt(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return BetaInt()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return BetaInt(out)

    __rmul__ = __mul__

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def evaluate(self, value):
        total = 0
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    def terms(self):
        """Yield ``(k, c)`` for every nonzero coefficient."""
        for k, c in enumerate(self.coeffs):
            if c:
                yield k, c

    def __repr__(self):
        return f"BetaInt({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.terms():
            if k == 0:
                parts.append(str(c))
                continue
            b = "β" if k == 1 else f"β^{k}"
            if c == 1:
                parts.append(b)
            elif c == -1:
                parts.append("-" + b)
            else:
                parts.append(f"{c}{b}")
        return " + ".join(parts).replace("+ -", "- ")


def _revlex_desc_key(exp):
    # larger key = earlier in graded reverse-lex order
    return (sum(exp), tuple(-e for e in reversed(exp)))


class PolyZB:
    """Immutable sparse polynomial in ``nvars`` variables over Z[beta]."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars, terms=None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} does not have length {nvars}")
                if any(e < 0 for e in exp):
                    raise ValueError(f"negative exponent in {exp}")
                if isinstance(coeff, int):
                    coeff = BetaInt((coeff,))
                if coeff:
                    clean[exp] = clean[exp] + coeff if exp in clean else coeff
                    if not clean[exp]:
                        del clean[exp]
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exp, beta_power=0, coeff=1):
        exp = tuple(exp)
        return cls(len(exp), {exp: BetaInt.monomial(beta_power, coeff)})

    @classmethod
    def variable(cls, i, nvars):
        """The variable x_i (1-based)."""
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def from_flat(cls, nvars, flat):
        """Build from an iterable of ``(exp, beta_power, coeff)`` triples, summing repeats."""
        acc = {}
        for exp, k, c in flat:
            exp = tuple(exp)
            row = acc.setdefault(exp, {})
            row[k] = row.get(k, 0) + c
        terms = {}
        for exp, row in acc.items():
            top = max(row)
            terms[exp] = BetaInt(row.get(k, 0) for k in range(top + 1))
        return cls(nvars, terms)

    # access

    def terms(self):
        """Return ``{exp: BetaInt}`` (a copy)."""
        return dict(self._terms)

    def flat_terms(self):
        """Yield ``(exp, k, c)`` for every nonzero coefficient of beta^k x^exp."""
        for exp, coeff in self._terms.items():
            for k, c in coeff.terms():
                yield exp, k, c

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), BetaInt())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = PolyZB(self.nvars, {(0,) * self.nvars: other})
        if not isinstance(other, PolyZB):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # ring operations

    def _check(self, other):
        if isinstance(other, int):
            return PolyZB(self.nvars, {(0,) * self.nvars: other})
        if not isinstance(other, PolyZB):
            raise TypeError(f"cannot combine PolyZB with {type(other).__name__}")
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out[exp] + c if exp in out else c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return PolyZB(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return PolyZB(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, BetaInt):
            return PolyZB(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._check(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                out[e] = out[e] + c if e in out else c
        return PolyZB(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = PolyZB.one(self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def times_beta(self, k=1):
        return PolyZB(self.nvars, {e: BetaInt((0,) * k + c.coeffs) for e, c in self._terms.items()})

    # degree data

    def total_degrees(self):
        return {sum(e) for e in self._terms}

    def min_degree(self):
        return min(self.total_degrees())

    def max_degree(self):
        return max(self.total_degrees())

    def beta_degree(self):
        return max((c.degree for c in self._terms.values()), default=-1)

    # transformations

    def specialize_beta(self, value):
        """Evaluate every coefficient at beta = ``value``."""
        return PolyZB(self.nvars, {e: c.evaluate(value) for e, c in self._terms.items()})

    def beta_part(self, k):
        """The coefficient polynomial of beta^k, as a beta-free PolyZB."""
        out = {}
        for e, c in self._terms.items():
            if k < len(c.coeffs) and c.coeffs[k]:
                out[e] = c.coeffs[k]
        return PolyZB(self.nvars, out)

    def swap_variables(self, i):
        """Exchange x_i and x_{i+1} (1-based)."""
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return PolyZB(self.nvars, out)

    def truncate_variables(self, m):
        """Set x_{m+1}, x_{m+2}, ... to zero and drop them."""
        out = {}
        for e, c in self._terms.items():
            if any(e[m:]):
                continue
            out[e[:m]] = c
        return PolyZB(m, out)

    def pad_variables(self, nvars):
        """View as a polynomial in ``nvars >= self.nvars`` variables."""
        if nvars < self.nvars:
            raise ValueError("cannot pad to fewer variables")
        extra = (0,) * (nvars - self.nvars)
        return PolyZB(nvars, {e + extra: c for e, c in self._terms.items()})

    def is_symmetric(self):
        return all(self.swap_variables(i) == self for i in range(1, self.nvars))

    # serialization

    def sorted_exponents(self):
        """Exponents in canonical order: graded reverse-lexicographic, largest first."""
        return sorted(self._terms, key=_revlex_desc_key, reverse=True)

    def to_dict(self):
        return {
            "nvars": self.nvars,
            "terms": [
                {"exp": list(e), "beta": list(self._terms[e].coeffs)}
                for e in self.sorted_exponents()
            ],
        }

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data):
        nvars = data["nvars"]
        terms = {}
        for t in data["terms"]:
            exp = tuple(t["exp"])
            if exp in terms:
                raise ValueError(f"duplicate exponent {exp}")
            terms[exp] = BetaInt(t["beta"])
        return cls(nvars, terms)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"PolyZB({self.nvars}, {{{', '.join(f'{e}: {c!r}' for e, c in self._terms.items())}}})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in self.sorted_exponents():
            mono = "*".join(
                f"x{i + 1}" if d == 1 else f"x{i + 1}^{d}" for i, d in enumerate(e) if d
            )
            coeff = self._terms[e]
            cs = str(coeff)
            multi = len(list(coeff.terms())) > 1
            if not mono:
                parts.append(f"({cs})" if multi else cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"({cs})*{mono}" if multi else f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def is_quasisymmetric(p):
    """True iff the coefficient of x_{i_1}^{c_1}...x_{i_k}^{c_k} depends only on (c_1..c_k).

    Checked directly: for every exponent pattern present, every placement of the
    pattern on increasing indices must carry the same coefficient.
    """
    n = p.nvars
    patterns = {}
    for exp, coeff in p.terms().items():
        support = tuple(d for d in exp if d)
        patterns.setdefault(support, coeff)
        if patterns[support] != coeff:
            return False
    for support, coeff in patterns.items():
        for idx in combinations(range(n), len(support)):
            exp = [0] * n
            for i, d in zip(idx, support):
                exp[i] = d
            if p.coefficient(exp) != coeff:
                return False
    return True


def specialize_beta(p, value):
    return p.specialize_beta(value)
