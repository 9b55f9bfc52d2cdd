"""The intersection-theory engine over the Jacobian.

Counts degree-d maps from a general genus-g curve C to a degree-e
hypersurface in P^{r+1} through n point (or linear-space) conditions, by
multiplying four classes on a projective bundle over the degree-d Jacobian
of C and integrating:

1. per mark i, the incidence class  H^{r+1} + H^r H_i + ... + H_i^{r+1};
2. per mark i, the excess factor    prod_{k=1}^{e} ((k-1) H + (e+1-k) H_i)
   forcing e-fold vanishing of the defining equation at the mark;
3. globally, the top Chern class of the twisted push-down bundle,
       e^t * sum_{m=0}^{g} ((-e)^m / m!) * theta^m * H^{t-m},
   t = (d-n)e - g + 1, forcing the map to land in the hypersurface;
4. per mark i, H_i^{r+1-ell_i} cutting the target to a general
   ell_i-dimensional linear space (ell_i = 1: a general line).

Since each H_i appears in the factors for mark i only, extracting the
H_i^{r+1} coefficient factorizes: each mark contributes a *monomial*
alpha * H^{r+1+e-ell_i}, turning an (n+2)-variable expansion into n cheap
bivariate ones.  The remaining class in H and theta is pushed down to the
Jacobian (H^{N-1+k} -> (r+2)^k theta^k / k!, N = (r+2)(d-g+1)) and
integrated there (theta^g has degree g!).

The count of honest maps is the resulting degree divided by e^n: each
line condition meets the hypersurface in e points, only one of which is
the assigned one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .enumerativity import dims_check, insertion_dims_check
from .errors import InvariantBreach, ParameterError
from .truncpoly import PolyRing, TruncPoly, UniPoly


@dataclass(frozen=True)
class HypParams:
    """Validated parameter tuple with its derived quantities.

    n: number of point conditions; t = (d-n)e - g + 1: rank of the twisted
    push-down bundle; N = (r+2)(d-g+1): rank of the ambient bundle, so the
    projective bundle has fiber dimension N - 1.
    """

    g: int
    d: int
    e: int
    r: int
    n: int
    t: int
    N: int

    @classmethod
    def standard(cls, g: int, d: int, e: int, r: int) -> HypParams:
        """Parameters for plain point conditions (every mark on a line)."""
        n = dims_check(g, d, e, r)
        if d < 2 * g:
            raise ParameterError(f"need d >= 2g, got d={d}, g={g}")
        t = (d - n) * e - g + 1
        if t < 1:
            raise ParameterError(f"bundle rank t = {t} must be >= 1")
        if t < g:
            raise ParameterError(f"bundle rank t = {t} below genus {g}: out of model")
        return cls(g, d, e, r, n, t, (r + 2) * (d - g + 1))

    @classmethod
    def with_insertions(
        cls, g: int, d: int, e: int, r: int, ell
    ) -> tuple[HypParams, InsertionProfile]:
        """Parameters plus profile for general linear-space conditions."""
        ell = tuple(ell)
        n = insertion_dims_check(g, d, e, r, ell)
        t = (d - n) * e - g + 1
        return (
            cls(g, d, e, r, n, t, (r + 2) * (d - g + 1)),
            InsertionProfile(r, ell),
        )


@dataclass(frozen=True)
class InsertionProfile:
    """Dimensions ell_i in [1, r+1] of the linear space each mark must hit."""

    r: int
    ell: tuple[int, ...]

    def __post_init__(self):
        for li in self.ell:
            if not (1 <= li <= self.r + 1):
                raise ParameterError(
                    f"insertion dimension {li} out of range [1, {self.r + 1}]"
                )

    def codims(self) -> tuple[int, ...]:
        return tuple(self.r + 1 - li for li in self.ell)


def _jac_ring(g: int) -> PolyRing:
    return PolyRing("H", ("theta", g))


def _theta_ring(g: int) -> PolyRing:
    return PolyRing(("theta", g))


def point_factor(e: int, r: int, ell_i: int) -> UniPoly:
    """Contribution of one mark: the H_i^{r+1} coefficient of its factors.

    Expands (sum_{a+b=r+1} H^a H_i^b) * prod_{k=1}^{e} ((k-1)H + (e+1-k)H_i)
    * H_i^{r+1-ell_i} as an honest bivariate polynomial and extracts the
    top H_i power.  The result is always the single monomial
    alpha_{ell_i} * H^{r+1+e-ell_i}; that shape is asserted, not assumed.
    """
    if e < 3:
        raise ParameterError(f"hypersurface degree must be >= 3, got e={e}")
    if not (1 <= ell_i <= r + 1):
        raise ParameterError(f"insertion dimension {ell_i} out of range [1, {r + 1}]")
    ring = PolyRing("H", ("Hi", r + 1))
    incidence = ring.from_terms(
        {(a, r + 1 - a): 1 for a in range(r + 2)}
    )
    total = incidence * ring.monomial({"Hi": r + 1 - ell_i}, 1)
    for k in range(1, e + 1):
        total = total * (
            ring.monomial({"H": 1}, k - 1) + ring.monomial({"Hi": 1}, e + 1 - k)
        )
    top = total.coeff_extract("Hi", r + 1)
    out = UniPoly("H", [top.coeff((j,)) for j in range(r + 1 + e - ell_i + 1)])
    if not (out.is_monomial() and out.degree() == r + 1 + e - ell_i):
        raise InvariantBreach(
            f"point factor for (e={e}, r={r}, ell={ell_i}) is not the "
            f"expected monomial: {out!r}"
        )
    return out


def step3_class(e: int, t: int, g: int) -> TruncPoly:
    """Top Chern class of the twisted push-down bundle, in H and theta:

        e^t * sum_{m=0}^{g} ((-e)^m / m!) * theta^m * H^{t-m}.

    Requires t >= g; otherwise a negative H power would be needed, which
    is outside this model (and unreachable from validated parameters).
    """
    if e < 3:
        raise ParameterError(f"hypersurface degree must be >= 3, got e={e}")
    if g < 0:
        raise ParameterError(f"genus must be nonnegative, got g={g}")
    if t < g:
        raise ParameterError(f"rank t = {t} below genus g = {g}: out of model")
    ring = _jac_ring(g)
    scale = e**t
    terms = {}
    for m in range(g + 1):
        terms[(t - m, m)] = scale * Fraction((-e) ** m, factorial(m))
    return ring.from_terms(terms)


def pushforward_theta(c: TruncPoly, p: HypParams) -> TruncPoly:
    """Push a class in H and theta down to the Jacobian.

    H^{N-1+k} becomes the Segre class (r+2)^k * theta^k / k!; powers of H
    below the fiber dimension N-1 push to zero.  The theta cap at g is
    the ring structure and still applies.
    """
    if c.ring != _jac_ring(p.g):
        raise ParameterError(f"class lives in {c.ring!r}, not the bundle ring")
    out_ring = _theta_ring(p.g)
    terms: dict[tuple[int, ...], Fraction | int] = {}
    for (hexp, texp), coeff in c.terms.items():
        k = hexp - (p.N - 1)
        if k < 0:
            continue
        key = (texp + k,)
        seg = coeff * Fraction((p.r + 2) ** k, factorial(k))
        terms[key] = terms.get(key, 0) + seg
    return out_ring.from_terms(terms)


def integrate_theta(c: TruncPoly, g: int) -> Fraction:
    """Integrate over the Jacobian: g! times the theta^g coefficient."""
    if c.ring != _theta_ring(g):
        raise ParameterError(f"class lives in {c.ring!r}, not the Jacobian ring")
    return Fraction(factorial(g) * c.coeff((g,)))


def deg_T(p: HypParams, profile: InsertionProfile | None = None) -> int:
    """Degree of the incidence cycle: the full pipeline, integrated.

    The default profile is all-lines (ell_i = 1 for every mark).  The
    result is e^n times the count of maps; it is certified integral and
    nonnegative before being returned.
    """
    if profile is None:
        profile = InsertionProfile(p.r, (1,) * p.n)
    ell = profile.ell
    if profile.r != p.r or len(ell) != p.n:
        raise ParameterError(
            f"profile ({profile.r}, {len(ell)} marks) does not match params "
            f"(r={p.r}, n={p.n})"
        )
    if p.r * (p.n + p.g - 1) != (p.r + 2 - p.e) * p.d + sum(li - 1 for li in ell):
        raise ParameterError("insertion dimension condition fails for this profile")

    coeff = 1
    hdeg = 0
    for li in ell:
        mono = point_factor(p.e, p.r, li)
        d = mono.degree()
        coeff *= mono.coeff(d)
        hdeg += d

    ring = _jac_ring(p.g)
    full = ring.monomial({"H": hdeg}, coeff) * step3_class(p.e, p.t, p.g)

    lo, hi = p.N - 1, p.N - 1 + p.g
    for h in full.degrees_of("H"):
        if not (lo <= h <= hi):
            raise InvariantBreach(
                f"pipeline class has H-degree {h} outside [{lo}, {hi}]"
            )

    value = integrate_theta(pushforward_theta(full, p), p.g)
    if value.denominator != 1:
        raise InvariantBreach(f"cycle degree {value} is not an integer")
    if value < 0:
        raise InvariantBreach(f"cycle degree {value} is negative")
    return int(value)


def tev_hypersurface_engine(p: HypParams) -> int:
    """The count of honest maps: deg_T at all-lines, divided exactly by e^n."""
    total = deg_T(p)
    q, rem = divmod(total, p.e**p.n)
    if rem != 0:
        raise InvariantBreach(
            f"cycle degree {total} is not divisible by e^n = {p.e}^{p.n}"
        )
    return q
