"""Constructors for the distinguished tensors of the model.

All builders return sparse :class:`~triggaudin.tensor.AuxTensor` values
over an explicitly supplied coefficient ring, so the same formulas work
over Q, Q(q), Q(u), Q(q)(u) or truncated-series rings.  Index
conventions are 1-based with sign(0) = 0.
"""

import itertools

from .ratfun import FracField, PoleError, RatFun
from .rationals import QQ
from .series import TruncSeries
from .tensor import AuxTensor, Space, aux_leg, single_leg_matrix, two_leg_tensor

# the scalar tower used throughout the q-side
Qq = FracField("q", QQ)


def sign(n):
    return (n > 0) - (n < 0)


def permutation(N, ring, legs=None):
    """The flip P = sum e_ij (x) e_ji."""
    one = ring.one
    return two_leg_tensor(
        N, ring, lambda i, j, k, l: one if (k == j and l == i) else None, legs
    )


def tc(N, ring, legs=None):
    """The skew tensor sum sign(j-i) e_ij (x) e_ji (value of r at -1)."""

    def coeff(i, j, k, l):
        if k == j and l == i and i != j:
            return ring.from_int(sign(j - i))
        return None

    return two_leg_tensor(N, ring, coeff, legs)


def tc_bar(N, ring, legs=None):
    """The off-diagonal flip sum_{i != j} e_ij (x) e_ji."""
    one = ring.one

    def coeff(i, j, k, l):
        if k == j and l == i and i != j:
            return one
        return None

    return two_leg_tensor(N, ring, coeff, legs)


def t_of_y(N, ring, y, legs=None):
    """The two-leg function T(y) in its closed form.

    ``y`` is an element of ``ring`` (usually a formal generator); the
    values y = +-1 are poles and are rejected for non-formal input.
    """
    one = ring.one
    try:
        upper = one / (one - y)
        lower = one / (one + y)
    except ZeroDivisionError:
        raise PoleError("T(y) evaluated at y = +-1")

    def coeff(i, j, k, l):
        if k != j or l != i:
            return None
        if i == j:
            return one
        return upper if i < j else lower

    return two_leg_tensor(N, ring, coeff, legs)


def t_taylor(N, ring, order, legs=None):
    """Taylor coefficient of T(y) at y^order: P, then Tc odd, TcBar even.

    Follows the closed form: expanding 1/(1 -+ y) gives the skew tensor
    at every odd order starting with y^1 and the off-diagonal flip at
    every even order >= 2.
    """
    if order == 0:
        return permutation(N, ring, legs)
    if order % 2 == 1:
        return tc(N, ring, legs)
    return tc_bar(N, ring, legs)


def r_classical(N, ring, x, legs=None):
    """The trigonometric classical r-matrix at argument x.

    Entry (ij)(ji) carries (1+x)/(1-x) + sign(j-i); x = 1 is a pole
    and is rejected unless x is formal (nonconstant).
    """
    one = ring.one
    try:
        core = (one + x) / (one - x)
    except ZeroDivisionError:
        raise PoleError("classical r-matrix evaluated at x = 1")

    def coeff(i, j, k, l):
        if k != j or l != i:
            return None
        c = core + ring.from_int(sign(j - i))
        return c if c else None

    return two_leg_tensor(N, ring, coeff, legs)


def q_permutation(N, ring, q, legs=None):
    """The q-permutation P^q."""
    one = ring.one
    qinv = one / q

    def coeff(i, j, k, l):
        if k != j or l != i:
            return None
        if i == j:
            return one
        return q if i > j else qinv

    return two_leg_tensor(N, ring, coeff, legs)


def r_quantum(N, ring, q, x, legs=None):
    """The quantum R-matrix R(x) over a ring containing q.

    ``x`` may be a formal generator or any non-pole ring element
    (poles are where q - x/q vanishes).
    """
    one = ring.one
    qinv = one / q
    den = q - qinv * x
    if not den:
        raise PoleError("quantum R-matrix evaluated at pole q - x/q = 0")
    mixed = (one - x) / den
    low = (q - qinv) * x / den
    high = (q - qinv) / den

    def coeff(i, j, k, l):
        if i == j and k == l:
            return one if i == k else mixed
        if k == j and l == i and i != j:
            return low if i > j else high
        return None

    return two_leg_tensor(N, ring, coeff, legs)


def r_quantum_scaled(N, ring, q, x, legs=None):
    """(q - x/q) R(x): the R-matrix with its denominator cleared.

    All entries are polynomial in x, which keeps tower arithmetic
    (bivariate identity checks) away from rational-function reduction.
    Identities that are homogeneous in R are unaffected by the central
    scalar factor.
    """
    one = ring.one
    qinv = one / q
    diag = q - qinv * x
    mixed = one - x
    low = (q - qinv) * x
    high = q - qinv

    def coeff(i, j, k, l):
        if i == j and k == l:
            return diag if i == k else mixed
        if k == j and l == i and i != j:
            return low if i > j else high
        return None

    return two_leg_tensor(N, ring, coeff, legs)


def diag_shift_d(N, ring, q, leg=None):
    """The diagonal matrix D = diag(q^{N-1}, q^{N-3}, ..., q^{-N+1})."""
    one = ring.one

    def coeff(i, j):
        if i != j:
            return None
        e = N + 1 - 2 * i
        return q ** e if e >= 0 else one / q ** (-e)

    return single_leg_matrix(N, ring, coeff, leg)


def diag_shift_rho(N, ring, leg=None):
    """The diagonal matrix rho = diag(N-1, N-3, ..., -N+1)."""

    def coeff(i, j):
        if i != j or N + 1 - 2 * i == 0:
            return None
        return ring.from_int(N + 1 - 2 * i)

    return single_leg_matrix(N, ring, coeff, leg)


def reduced_word(one_line):
    """A reduced word (list of 1-based adjacent swaps) for a permutation.

    Bubble-sorts the one-line notation to the identity; each recorded
    swap removes exactly one inversion, so the word is reduced.  If
    sigma = s_{a_1} ... s_{a_l}, the returned list is [a_1, ..., a_l].
    """
    p = list(one_line)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                swaps.append(i + 1)
                changed = True
    swaps.reverse()
    return swaps


def perm_sign(one_line):
    word = reduced_word(one_line)
    return -1 if len(word) % 2 else 1


def cycle_one_line(k):
    """One-line notation of the cycle (k, k-1, ..., 1): i -> i-1, 1 -> k."""
    return tuple([k] + list(range(1, k)))


def adjacent_q_chain(space, ring, q, positions):
    """Product P^q_{a_1 a_1+1} ... P^q_{a_l a_l+1} on leg positions a_i.

    Positions are 1-based into the legs of ``space``; factors multiply
    left to right in the order given.
    """
    out = AuxTensor.identity(space, ring)
    names = space.leg_names()
    pq = q_permutation(space.N, ring, q)
    src = pq.space.leg_names()
    for a in positions:
        emb = pq.embed(space, {src[0]: names[a - 1], src[1]: names[a]})
        out = out * emb
    return out


def perm_q(one_line, N, ring, q, space=None):
    """P^q_sigma along one reduced decomposition of sigma.

    Independent of the chosen reduced word (braid relations for P^q).
    """
    k = len(one_line)
    if space is None:
        space = Space(N, [aux_leg("a%d" % i) for i in range(1, k + 1)])
    word = reduced_word(one_line)
    return adjacent_q_chain(space, ring, q, word)


def antisymmetrizer(k, N, ring, q, space=None):
    """The normalized q-antisymmetrizer A^(k) = (1/k!) sum sgn(s) P^q_s."""
    if space is None:
        space = Space(N, [aux_leg("a%d" % i) for i in range(1, k + 1)])
    acc = AuxTensor.zero(space, ring)
    for perm in itertools.permutations(range(1, k + 1)):
        term = perm_q(perm, N, ring, q, space)
        if perm_sign(perm) < 0:
            term = -term
        acc = acc + term
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return acc.scale(ring.one / ring.from_int(fact))


def plain_cycle_chain(space, ring, indices):
    """P_{(c_k, ..., c_1)} = P_{c_{k-1} c_k} ... P_{c_1 c_2}.

    ``indices`` is the tuple (c_k, ..., c_1) of 1-based leg positions;
    a run of length < 2 gives the identity.
    """
    seq = list(reversed(indices))  # c_1, c_2, ..., c_k
    out = AuxTensor.identity(space, ring)
    names = space.leg_names()
    p = permutation(space.N, ring)
    src = p.space.leg_names()
    for t in range(len(seq) - 1, 0, -1):
        a, b = seq[t - 1], seq[t]
        emb = p.embed(space, {src[0]: names[a - 1], src[1]: names[b - 1]})
        out = out * emb
    return out


def tc_cycle_chain(space, ring, indices):
    """Tc_{(c_k, ..., c_1)} = Tc_{c_{k-1} c_k} ... Tc_{c_1 c_2}."""
    seq = list(reversed(indices))
    out = AuxTensor.identity(space, ring)
    names = space.leg_names()
    t = tc(space.N, ring)
    src = t.space.leg_names()
    for i in range(len(seq) - 1, 0, -1):
        a, b = seq[i - 1], seq[i]
        emb = t.embed(space, {src[0]: names[a - 1], src[1]: names[b - 1]})
        out = out * emb
    return out


def f_series(N, order, base=None):
    """The normalizing series f(x) of the R-matrix, over Q(q).

    Coefficients f_k(q) are determined recursively by the functional
    equation f(x q^{2N}) = f(x) (1-xq^2)(1-xq^{2N-2}) /
    ((1-x)(1-xq^{2N})), with f_0 = 1.  Generic q is required: the
    recursion divides by q^{2Nk} - 1.
    """
    if base is None:
        base = Qq
    if order < 0:
        raise ValueError("order must be >= 0")
    q = base.gen
    one = base.one
    # g(x) = (1-xq^2)(1-xq^{2N-2}) / ((1-x)(1-xq^{2N})) as an x-series:
    # numerator polynomial coefficients times expansion of the
    # geometric denominators.
    g = [one]
    q2 = q * q
    qa = q ** (2 * N - 2)
    qb = q ** (2 * N)
    for k in range(1, order + 1):
        # 1/(1-x) * 1/(1-x q^{2N}) has x^k coefficient sum_{j<=k} q^{2Nj}
        acc = base.zero
        for j in range(k + 1):
            acc = acc + qb ** j
        g.append(acc)
    num = [one, -(q2 + qa), q2 * qa]
    full = [base.zero] * (order + 1)
    for i, c in enumerate(num):
        if i > order:
            break
        for k in range(order + 1 - i):
            full[i + k] = full[i + k] + c * g[k]
    # recursion: f_k (q^{2Nk} - 1) = sum_{j<k} f_j g*_{k-j}
    f = [one]
    for k in range(1, order + 1):
        acc = base.zero
        for j in range(k):
            acc = acc + f[j] * full[k - j]
        denom = qb ** k - one
        if not denom:
            raise PoleError("f-series requires generic q (q^{2Nk} != 1)")
        f.append(acc / denom)
    return TruncSeries("x", base, order, f)
