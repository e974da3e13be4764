"""Truncated ring of functions symmetric in each of k alphabets.

Elements are stored in the monomial basis: a sparse map from k-tuples of
partitions (one per alphabet, each of size <= N) to RatFunc coefficients.
A degree-n symmetric function is faithfully represented by its expansion
in n concrete variables, which is how all transition tables between the
m / p / h / e / s bases are computed (exact Fraction arithmetic, then
per-degree matrix inversion for the m -> * directions).

Products and plethysm go through the power-sum basis where both are free;
truncation drops any component whose degree in some alphabet exceeds N.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .exactalg import RatFunc, ONE, ZERO
from . import partitions as pt

BASES = ("m", "h", "e", "p", "s")


# -- concrete expansions in n variables (exponent tuple -> Fraction) --------

def _poly_mul(d1, d2):
    out = {}
    for e1, c1 in d1.items():
        for e2, c2 in d2.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _m_vars(lam, nvars):
    pad = lam + (0,) * (nvars - len(lam))
    return {e: Fraction(1) for e in set(itertools.permutations(pad))}


def _p_vars(r, nvars):
    out = {}
    for i in range(nvars):
        e = [0] * nvars
        e[i] = r
        out[tuple(e)] = Fraction(1)
    return out


def _h_vars(r, nvars):
    out = {}
    for combo in itertools.combinations_with_replacement(range(nvars), r):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out[tuple(e)] = Fraction(1)
    return out


def _e_vars(r, nvars):
    out = {}
    for combo in itertools.combinations(range(nvars), r):
        e = [0] * nvars
        for i in combo:
            e[i] = 1
        out[tuple(e)] = Fraction(1)
    return out


def _vars_to_m(poly):
    """Read m-basis coefficients off a symmetric polynomial expansion."""
    out = {}
    for e, c in poly.items():
        lam = tuple(sorted((x for x in e if x), reverse=True))
        if e == lam + (0,) * (len(e) - len(lam)):
            out[lam] = c
    return out


def _perm_sign(perm):
    sign, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, clen = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def basis_to_m(basis, lam):
    """Expansion of a single-alphabet basis element into the m basis.

    Returns a dict partition -> Fraction for basis in {m, h, e, p, s}.
    """
    lam = tuple(lam)
    n = sum(lam)
    if basis == "m":
        return {lam: Fraction(1)}
    if n == 0:
        return {(): Fraction(1)}
    nvars = n
    if basis in ("p", "h", "e"):
        gen = {"p": _p_vars, "h": _h_vars, "e": _e_vars}[basis]
        poly = {(0,) * nvars: Fraction(1)}
        for part in lam:
            poly = _poly_mul(poly, gen(part, nvars))
        return _vars_to_m(poly)
    if basis == "s":
        # Jacobi-Trudi: s_lam = det(h_{lam_i - i + j})
        ell = len(lam)
        total = {}
        for perm in itertools.permutations(range(ell)):
            degs = [lam[i] - i + perm[i] for i in range(ell)]
            if any(d < 0 for d in degs):
                continue
            sign = _perm_sign(perm)
            poly = {(0,) * nvars: Fraction(1)}
            for d in degs:
                if d:
                    poly = _poly_mul(poly, _h_vars(d, nvars))
            for e, c in poly.items():
                s = total.get(e, 0) + sign * c
                if s:
                    total[e] = s
                else:
                    total.pop(e, None)
        return _vars_to_m(total)
    raise ValueError(f"unknown basis {basis!r}")


def _invert(matrix):
    """Inverse of a square Fraction matrix (Gauss-Jordan)."""
    n = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def m_to_basis_table(basis, n):
    """Tables expressing each m_mu of degree n in the given basis."""
    parts = pt.enumerate_partitions(n)
    mat = [[basis_to_m(basis, lam).get(mu, Fraction(0)) for mu in parts]
           for lam in parts]
    inv = _invert(mat)
    # m_mu = sum_lam inv[j][i] * basis_lam  where j indexes mu, i indexes lam
    return {mu: {lam: inv[j][i] for i, lam in enumerate(parts) if inv[j][i]}
            for j, mu in enumerate(parts)}


@lru_cache(maxsize=None)
def m_times_m(lam, mu):
    """Single-alphabet product m_lam * m_mu in the m basis (integer coeffs)."""
    n = sum(lam) + sum(mu)
    if n == 0:
        return {(): Fraction(1)}
    poly = _poly_mul(_m_vars(lam, n), _m_vars(mu, n))
    return _vars_to_m(poly)


def _mobius(n):
    m, p, out = n, 2, 1
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


# -- the SymFunc container ---------------------------------------------------

class SymFunc:
    """Element of the truncated ring, stored in the monomial basis."""

    __slots__ = ("k", "N", "coeffs")

    def __init__(self, k, N, coeffs=None):
        self.k = k
        self.N = N
        self.coeffs = {}
        if coeffs:
            for key, c in coeffs.items():
                if not c.is_zero():
                    self.coeffs[key] = c

    @staticmethod
    def zero(k, N):
        return SymFunc(k, N)

    @staticmethod
    def one(k, N):
        return SymFunc(k, N, {((),) * k: ONE})

    def _check_compat(self, other):
        if (self.k, self.N) != (other.k, other.N):
            raise ValueError("incompatible alphabets or truncation bounds")

    def is_zero(self):
        return not self.coeffs

    def constant_term(self):
        return self.coeffs.get(((),) * self.k, ZERO)

    def coefficient(self, key):
        return self.coeffs.get(tuple(tuple(mu) for mu in key), ZERO)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if (self.k, self.N) != (other.k, other.N):
            return False
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(self.coeffs[key] == other.coeffs[key] for key in self.coeffs)

    def __add__(self, other):
        self._check_compat(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            s = out.get(key, ZERO) + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return SymFunc(self.k, self.N, out)

    def __neg__(self):
        return SymFunc(self.k, self.N, {key: -c for key, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """Multiply by a RatFunc (or int/Fraction) scalar."""
        c = RatFunc._coerce(c)
        if c.is_zero():
            return SymFunc.zero(self.k, self.N)
        return SymFunc(self.k, self.N,
                       {key: c * v for key, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        self._check_compat(other)
        out = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                if any(sum(a) + sum(b) > self.N for a, b in zip(k1, k2)):
                    continue
                c = c1 * c2
                expansions = [m_times_m(a, b) for a, b in zip(k1, k2)]
                for combo in itertools.product(*(d.items() for d in expansions)):
                    key = tuple(mu for mu, _ in combo)
                    mult = Fraction(1)
                    for _, f in combo:
                        mult *= f
                    s = out.get(key, ZERO) + c * mult
                    if s.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = s
        return SymFunc(self.k, self.N, out)

    __rmul__ = __mul__

    def map_coefficients(self, fn):
        return SymFunc(self.k, self.N,
                       {key: fn(c) for key, c in self.coeffs.items()})

    def simplified(self):
        return self.map_coefficients(lambda c: c.simplified())

    # -- basis changes -------------------------------------------------------

    def _transform(self, table_for):
        """Per-alphabet linear basis change given partition -> table dicts.

        Accumulated sums are gcd-reduced on the fly; adding rational
        functions with unrelated denominators blows up otherwise.
        """
        out = {}
        for key, c in self.coeffs.items():
            tables = [table_for(mu) for mu in key]
            for combo in itertools.product(*(d.items() for d in tables)):
                newkey = tuple(mu for mu, _ in combo)
                mult = Fraction(1)
                for _, f in combo:
                    mult *= f
                prev = out.get(newkey)
                s = c * mult if prev is None else (prev + c * mult).simplified()
                if s.is_zero():
                    out.pop(newkey, None)
                else:
                    out[newkey] = s
        return out

    def to_basis(self, basis):
        """Coefficients of self in the given basis (dict key -> RatFunc)."""
        if basis == "m":
            return dict(self.coeffs)
        return self._transform(lambda mu: m_to_basis_table(basis, sum(mu))[mu])

    @staticmethod
    def from_basis(basis, coeffs, k, N):
        """Assemble from a dict key -> RatFunc of coefficients in `basis`."""
        f = SymFunc(k, N)
        out = {}
        for key, c in coeffs.items():
            if c.is_zero():
                continue
            tables = [basis_to_m(basis, mu) for mu in key]
            for combo in itertools.product(*(d.items() for d in tables)):
                newkey = tuple(mu for mu, _ in combo)
                mult = Fraction(1)
                for _, fr in combo:
                    mult *= fr
                s = out.get(newkey, ZERO) + c * mult
                if s.is_zero():
                    out.pop(newkey, None)
                else:
                    out[newkey] = s
        f.coeffs = {key: c for key, c in out.items() if not c.is_zero()}
        return f

    # -- text form -------------------------------------------------------------

    def text(self):
        lines = []
        for key in sorted(self.coeffs):
            mus = "|".join(pt.partition_text(mu) for mu in key)
            lines.append(f"{mus} : {self.coeffs[key].text()}")
        return "\n".join(lines)

    @staticmethod
    def parse(s, k, N):
        coeffs = {}
        for line in s.splitlines():
            line = line.strip()
            if not line:
                continue
            left, _, right = line.partition(" : ")
            key = tuple(pt.parse_partition(x) for x in left.split("|"))
            coeffs[key] = RatFunc.parse(right)
        return SymFunc(k, N, coeffs)

    def __repr__(self):
        return f"SymFunc(k={self.k}, N={self.N},\n{self.text()})"


def basis_element(basis, mus, k=None, N=None):
    """The named basis element b_mu1(x_1) * ... * b_muk(x_k) in the m basis."""
    mus = tuple(tuple(mu) for mu in mus)
    if k is None:
        k = len(mus)
    if len(mus) != k:
        raise ValueError("one partition per alphabet required")
    if N is None:
        N = max((sum(mu) for mu in mus), default=1) or 1
    if any(sum(mu) > N for mu in mus):
        raise ValueError("degree exceeds truncation bound N")
    return SymFunc.from_basis(basis, {mus: ONE}, k, N)


def hall_pair_h(f, mus):
    """<f, h_mus> under the Hall form: the m_mus coefficient of f."""
    mus = tuple(tuple(mu) for mu in mus)
    if any(sum(mu) > f.N for mu in mus):
        raise ValueError("degree exceeds truncation bound N")
    return f.coeffs.get(mus, ZERO)


def plethysm_pr(r, f):
    """p_r plethysm: p_m -> p_{rm} per alphabet, variables to their r-th power."""
    if r < 1:
        raise ValueError("r must be >= 1")
    pc = f.to_basis("p")
    out = {}
    for key, c in pc.items():
        newkey = tuple(tuple(r * part for part in mu) for mu in key)
        if any(sum(mu) > f.N for mu in newkey):
            continue
        c2 = c.scale_exponents(r)
        if newkey in out:
            out[newkey] = out[newkey] + c2
        else:
            out[newkey] = c2
    return SymFunc.from_basis("p", out, f.k, f.N)


def _max_power(f):
    """Largest j with a chance that f**j survives truncation."""
    if f.is_zero():
        return 0
    mindeg = min(sum(sum(mu) for mu in key) for key in f.coeffs)
    return (f.k * f.N) // max(mindeg, 1)


def ple_exp(f):
    """Plethystic exponential Exp(f) = exp(sum_r (p_r o f)/r), truncated."""
    if not f.constant_term().is_zero():
        raise ValueError("ple_exp needs zero constant term")
    g = SymFunc.zero(f.k, f.N)
    for r in range(1, f.k * f.N + 1):
        term = plethysm_pr(r, f)
        if not term.is_zero():
            g = g + term.scale(Fraction(1, r))
    out = SymFunc.one(f.k, f.N)
    power = SymFunc.one(f.k, f.N)
    for j in range(1, _max_power(g) + 1):
        # reduce after each power: the unreduced denominators otherwise
        # grow multiplicatively with j and dominate the whole computation
        power = (power * g).scale(Fraction(1, j)).simplified()
        if power.is_zero():
            break
        out = (out + power).simplified()
    return out


def ple_log(om):
    """Plethystic logarithm: the inverse of ple_exp on series with constant 1."""
    if not om.constant_term() == ONE:
        raise ValueError("ple_log needs constant term exactly 1")
    a = om - SymFunc.one(om.k, om.N)
    # formal log(1 + a)
    log_om = SymFunc.zero(om.k, om.N)
    power = SymFunc.one(om.k, om.N)
    sign = 1
    for j in range(1, _max_power(a) + 1):
        # same progressive reduction as in ple_exp
        power = (power * a).simplified()
        if power.is_zero():
            break
        log_om = (log_om + power.scale(Fraction(sign, j))).simplified()
        sign = -sign
    out = SymFunc.zero(om.k, om.N)
    for r in range(1, om.k * om.N + 1):
        mu = _mobius(r)
        if mu == 0:
            continue
        term = plethysm_pr(r, log_om)
        if term.is_zero():
            continue
        out = out + term.scale(Fraction(mu, r))
    return out
