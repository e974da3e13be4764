"""Modified Macdonald symmetric polynomials in one alphabet.

Route: Gram-Schmidt against dominance-ordered monomials under the
(q,t)-deformed Hall form gives the monic polynomials P_mu; multiplying by
the arm/leg product gives the integral form J_mu; the plethystic transform
p_r -> p_r/(1 - t^r) followed by t -> 1/t and the t^{n(mu)} normalization
gives the modified polynomials, whose coefficients are honest polynomials
in q and t.  Every step carries a checkable certificate (orthogonality,
Schur positivity), which is why this route was chosen over solving the
triangularity axioms directly.

The orthogonalization runs in the power-sum basis, where the form is
diagonal; coefficients are gcd-reduced after every elimination step to
keep the rational-function swell at desk scale (n <= 6).

All entries are cached per partition; concurrent refills are idempotent
because every construction is deterministic.
"""

from __future__ import annotations

from functools import lru_cache

from .exactalg import RatFunc, ONE, Q, T, Z, W
from . import partitions as pt
from .symfunc import SymFunc, m_to_basis_table

# caches: partition -> dict p-partition -> RatFunc (P), and SymFunc (H)
_P_CACHE = {}
_NORM_CACHE = {}
_H_CACHE = {}


@lru_cache(maxsize=None)
def _p_norm_factor(lam):
    """<p_lam, p_lam>_{q,t} = z_lam * prod_i (1-q^{lam_i})/(1-t^{lam_i})."""
    factor = RatFunc(pt.zlambda(lam))
    for part in lam:
        factor = factor * ((ONE - Q**part) / (ONE - T**part))
    return factor


def _p_inner(v, w):
    """Diagonal (q,t) form on p-coefficient dicts.

    The running sum is gcd-reduced after every addition: the unreduced
    cross-multiplied numerators otherwise dominate the whole computation.
    """
    total = RatFunc(0)
    for lam, a in v.items():
        b = w.get(lam)
        if b is not None:
            term = (a * b * _p_norm_factor(lam)).simplified()
            total = (total + term).simplified()
    return total


def qt_inner(f, g):
    """The (q,t) Hall form on single-alphabet SymFunc values."""
    fp = {key[0]: c for key, c in f.to_basis("p").items()}
    gp = {key[0]: c for key, c in g.to_basis("p").items()}
    return _p_inner(fp, gp)


def _macdonald_P_pvec(mu):
    """P_mu as a dict p-partition -> RatFunc (simplified)."""
    mu = pt.check_partition(mu)
    if mu in _P_CACHE:
        return _P_CACHE[mu]
    n = sum(mu)
    if n == 0:
        _P_CACHE[mu] = {(): ONE}
        return _P_CACHE[mu]
    # Gram-Schmidt from the dominance-lowest partition upward; reverse
    # lexicographic enumeration is a linear extension of dominance.
    order = tuple(reversed(pt.enumerate_partitions(n)))
    table = m_to_basis_table("p", n)
    for lam in order:
        if lam in _P_CACHE:
            continue
        v = {key: RatFunc(c) for key, c in table[lam].items()}
        for prev in order:
            if prev == lam:
                break
            pv = _P_CACHE[prev]
            c = (_p_inner(v, pv) / _NORM_CACHE[prev]).simplified()
            if c.is_zero():
                continue
            for key, b in pv.items():
                s = (v.get(key, RatFunc(0)) - c * b).simplified()
                if s.is_zero():
                    v.pop(key, None)
                else:
                    v[key] = s
        _P_CACHE[lam] = v
        _NORM_CACHE[lam] = _p_inner(v, v)
        if lam == mu:
            break
    return _P_CACHE[mu]


def macdonald_P(mu):
    """Monic Macdonald polynomial P_mu(x; q, t) as a SymFunc (m basis)."""
    mu = pt.check_partition(mu)
    n = max(sum(mu), 1)
    v = _macdonald_P_pvec(mu)
    return SymFunc.from_basis("p", {(lam,): c for lam, c in v.items()}, 1, n)


def macdonald_norm(mu):
    """<P_mu, P_mu>_{q,t}, a byproduct of the orthogonalization."""
    _macdonald_P_pvec(mu)
    return _NORM_CACHE[pt.check_partition(mu)]


def modified_H(mu):
    """Modified Macdonald polynomial: t^{n(mu)} * (J_mu[X/(1-t)])(q, 1/t)."""
    mu = pt.check_partition(mu)
    if mu in _H_CACHE:
        return _H_CACHE[mu]
    n = sum(mu)
    if n == 0:
        H = SymFunc.one(1, 1)
        _H_CACHE[mu] = H
        return H
    # integral form scalar prod_{s in mu} (1 - q^{a(s)} t^{l(s)+1})
    jscale = ONE
    for s in pt.cells(mu):
        jscale = jscale * (ONE - Q ** pt.arm(mu, s) * T ** (pt.leg(mu, s) + 1))
    tn = T ** pt.nstat(mu)
    transformed = {}
    for lam, c in _macdonald_P_pvec(mu).items():
        c = c * jscale
        for part in lam:
            c = c / (ONE - T**part)
        c = c.substitute({"t": ONE / T}) * tn
        transformed[(lam,)] = c.simplified()
    H = SymFunc.from_basis("p", transformed, 1, n).simplified()
    # certificate: every m-coefficient must clear its denominator
    polys = {}
    for key, c in H.coeffs.items():
        p = c.as_mpoly()
        if p is None:
            raise ArithmeticError(
                f"non-polynomial coefficient for {key} in modified H_{mu}")
        polys[key] = RatFunc(p)
    H = SymFunc(1, n, polys)
    _H_CACHE[mu] = H
    return H


def specialized_H(mu):
    """Modified H_mu with q -> z**2 and t -> w**2 in every coefficient."""
    return modified_H(mu).map_coefficients(
        lambda c: c.substitute({"q": Z * Z, "t": W * W}))


def schur_coefficients(mu):
    """Expansion of modified H_mu in the Schur basis: dict partition -> RatFunc."""
    return {key[0]: c for key, c in modified_H(mu).to_basis("s").items()}


# -- table dump/restore -------------------------------------------------------

def dump_table():
    """Serialize all cached modified polynomials (golden-file format)."""
    blocks = []
    for mu in sorted(_H_CACHE):
        body = _H_CACHE[mu].text()
        blocks.append(f"[{pt.partition_text(mu)}]\n{body}")
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def load_table(text):
    """Restore a dump produced by dump_table into the cache."""
    loaded = 0
    for block in text.split("\n\n"):
        block = block.strip()
        if not block:
            continue
        header, _, body = block.partition("\n")
        mu = pt.parse_partition(header.strip()[1:-1])
        n = sum(mu)
        _H_CACHE[mu] = SymFunc.parse(body, 1, max(n, 1))
        loaded += 1
    return loaded


def clear_caches():
    _P_CACHE.clear()
    _NORM_CACHE.clear()
    _H_CACHE.clear()
