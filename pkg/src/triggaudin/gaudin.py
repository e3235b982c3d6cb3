"""Commuting Hamiltonian families of the trigonometric spin model.

The central object is the matrix current L(u) = sum_i r_{0i}(u/a_i)
acting on one auxiliary leg and l quantum legs.  Two independent
routes build the same differential operators theta_m:

* ``theta_generating`` reads the y^m coefficient of the generating
  function sum_s y^s tr_{1..s} T_{s-1,s}(y)...T_{12}(y) L_1...L_s
  with the matrix differential operator L = 2u d/du - L(u);
* ``theta_mbar`` runs the right-multiplication recursion
  (L_m)-> (Tc_{m-1,m} + P_{m-1,m}(L_{m-1})->) ... (Tc_12 + P_12(L_1)->) 1
  and traces all auxiliary legs.

Both are generic over the coefficient ring through :class:`ThetaContext`
so the symbolic mode-algebra layer can reuse them verbatim.
"""

from .rationals import QQ
from .ratfun import FracField
from .tensor import AuxTensor, Space, aux_leg, quantum_leg
from .weyl import DiffOp
from .rmatrices import (
    diag_shift_rho,
    permutation,
    r_classical,
    sign,
    t_taylor,
    tc,
)


class GaudinRep:
    """An evaluation representation: N, sites, distinct nonzero points."""

    __slots__ = ("N", "points", "field")

    def __init__(self, N, points):
        points = tuple(points)
        if N < 1:
            raise ValueError("N must be >= 1")
        if not points:
            raise ValueError("need at least one site")
        if any(not a for a in points):
            raise ValueError("evaluation points must be nonzero")
        if len(set(points)) != len(points):
            raise ValueError("evaluation points must be pairwise distinct")
        self.N = N
        self.points = points
        self.field = FracField("u", QQ)

    @property
    def l(self):
        return len(self.points)

    def site_names(self):
        return ["s%d" % (i + 1) for i in range(self.l)]

    def quantum_space(self):
        return Space(self.N, [quantum_leg(nm) for nm in self.site_names()])

    def current_space(self, aux="z0"):
        legs = [aux_leg(aux)] + [quantum_leg(nm) for nm in self.site_names()]
        return Space(self.N, legs)


def represent_current(rep, space=None, aux="z0"):
    """L(u) = sum_i r_{0i}(u/a_i) with auxiliary leg ``aux``.

    When ``space`` is given it must contain ``aux`` and all site legs;
    the result is embedded there (identity on any extra legs).
    """
    F = rep.field
    u = F.gen
    if space is None:
        space = rep.current_space(aux)
    out = AuxTensor.zero(space, F)
    for i, a in enumerate(rep.points):
        r = r_classical(rep.N, F, u.scale(QQ.one / a))
        src = r.space.leg_names()
        out = out + r.embed(space, {src[0]: aux, src[1]: "s%d" % (i + 1)})
    return out


def current_entry(current, aux, i, j):
    """The (i, j) entry of a matrix current, as an operator on the rest.

    Indices are 1-based; the auxiliary leg is projected onto e_ij.
    """
    space = current.space
    p = space.position(aux)
    rest = space.drop([aux])
    out = {}
    for (r, c), v in current.entries.items():
        ridx = space.decode(r)
        cidx = space.decode(c)
        if ridx[p] != i - 1 or cidx[p] != j - 1:
            continue
        key = (
            rest.encode([x for t, x in enumerate(ridx) if t != p]),
            rest.encode([x for t, x in enumerate(cidx) if t != p]),
        )
        out[key] = out[key] + v if key in out else v
    return AuxTensor(rest, current.ring, out, clean=True)


def _compositions(total, parts):
    """All tuples of ``parts`` nonnegative integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class ThetaContext:
    """Shared recipe for both theta routes, generic over the ring.

    ``current_factory(space, aux_name)`` must return the matrix current
    embedded in ``space`` on the auxiliary leg ``aux_name``; ``u_elt``
    is the ring element playing the role of u in 2u d/du.
    """

    def __init__(self, N, ring, quantum_legs, current_factory, u_elt, diff_fn=None):
        self.N = N
        self.ring = ring
        self.quantum_legs = list(quantum_legs)
        self.current_factory = current_factory
        self.u_elt = u_elt
        self.diff_fn = diff_fn

    def aux_names(self, m):
        return ["t%d" % a for a in range(1, m + 1)]

    def space(self, m):
        legs = [aux_leg(nm) for nm in self.aux_names(m)] + self.quantum_legs
        return Space(self.N, legs)

    def script_l(self, space, aux, shifted):
        """The matrix differential operator 2u d/du [- rho] - current."""
        two_u = self.ring.from_int(2) * self.u_elt
        lead = AuxTensor.scalar(space, self.ring, two_u)
        c0 = -self.current_factory(space, aux)
        if shifted:
            rho = diag_shift_rho(self.N, self.ring)
            src = rho.space.leg_names()
            c0 = c0 - rho.embed(space, {src[0]: aux})
        return DiffOp(space, self.ring, {1: lead, 0: c0}, self.diff_fn)

    def _pair(self, builder, space, a):
        """``builder`` on auxiliary legs (t_a, t_{a+1}) of ``space``."""
        t = builder(self.N, self.ring)
        src = t.space.leg_names()
        return t.embed(space, {src[0]: "t%d" % a, src[1]: "t%d" % (a + 1)})

    def theta_mbar(self, m, shifted=False):
        """theta_m through the right-multiplication recursion."""
        if m < 1:
            raise ValueError("m must be >= 1")
        space = self.space(m)
        X = DiffOp.identity(space, self.ring, self.diff_fn)
        for a in range(1, m):
            la = self.script_l(space, "t%d" % a, shifted)
            X = (X * la).premul(self._pair(permutation, space, a)) + X.premul(
                self._pair(tc, space, a)
            )
        X = X * self.script_l(space, "t%d" % m, shifted)
        return X.partial_trace(self.aux_names(m))

    def theta_generating(self, m, shifted=False):
        """theta_m as the y^m coefficient of the generating function."""
        if m < 1:
            raise ValueError("m must be >= 1")
        total = None
        for s in range(1, m + 1):
            space = self.space(s)
            factors = [self.script_l(space, nm, shifted) for nm in self.aux_names(s)]
            prod = factors[0]
            for f in factors[1:]:
                prod = prod * f
            for orders in _compositions(m - s, s - 1):
                chain = AuxTensor.identity(space, self.ring)
                # display order T_{s-1,s}(y) ... T_{12}(y), left to right
                for a in range(s - 1, 0, -1):
                    t = t_taylor(self.N, self.ring, orders[a - 1])
                    src = t.space.leg_names()
                    chain = chain * t.embed(
                        space, {src[0]: "t%d" % a, src[1]: "t%d" % (a + 1)}
                    )
                term = prod.premul(chain).partial_trace(self.aux_names(s))
                total = term if total is None else total + term
        return total


def rep_context(rep):
    """ThetaContext for the evaluation representation."""
    F = rep.field

    def factory(space, aux):
        return represent_current(rep, space=space, aux=aux)

    return ThetaContext(
        rep.N,
        F,
        [quantum_leg(nm) for nm in rep.site_names()],
        factory,
        F.gen,
    )


def theta_generating(rep, m, shifted=False):
    return rep_context(rep).theta_generating(m, shifted)


def theta_mbar(rep, m, shifted=False):
    return rep_context(rep).theta_mbar(m, shifted)


def explicit_theta(rep, m, shifted=False):
    """Closed-form oracles for m <= 3 (unshifted), built independently.

    m=1: 2Nu d/du - tr L(u)
    m=2: 4Nu^2 d^2 - 4u(tr L - N) d - 2u tr L' + tr L^2
    m=3: tr(2u d/du - L)^3 + sum_{ij} sign(i-j) L_ij L_ji
    """
    if shifted or m > 3:
        raise ValueError("explicit forms cover unshifted m <= 3 only")
    F = rep.field
    u = F.gen
    N = rep.N
    qspace = rep.quantum_space()
    L = represent_current(rep)
    trL = L.partial_trace(["z0"])
    if m == 1:
        return DiffOp(
            qspace,
            F,
            {
                1: AuxTensor.scalar(qspace, F, F.from_int(2 * N) * u),
                0: -trL,
            },
        )
    if m == 2:
        trLp = trL.map_entries(lambda f: f.derivative())
        trL2 = (L * L).partial_trace(["z0"])
        four_u = F.from_int(4) * u
        return DiffOp(
            qspace,
            F,
            {
                2: AuxTensor.scalar(qspace, F, F.from_int(4 * N) * u * u),
                1: (AuxTensor.scalar(qspace, F, F.from_int(N)) - trL).scale(four_u),
                0: trL2 - trLp.scale(F.from_int(2) * u),
            },
        )
    # m == 3: cube of the one-leg matrix differential operator, traced,
    # plus the signed quadratic tail.
    cspace = rep.current_space()
    Lfull = represent_current(rep, space=cspace)
    script = DiffOp(
        cspace,
        F,
        {
            1: AuxTensor.scalar(cspace, F, F.from_int(2) * u),
            0: -Lfull,
        },
    )
    cube = (script * script * script).partial_trace(["z0"])
    tail = AuxTensor.zero(qspace, F)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            s = sign(i - j)
            if s == 0:
                continue
            term = current_entry(Lfull, "z0", i, j) * current_entry(Lfull, "z0", j, i)
            tail = tail + term.scale(F.from_int(s))
    return cube + DiffOp.from_tensor(tail)


def closing_series(rep):
    """tr L^3 - 2u tr(L L') + sum_{ij} sign(j-i) L_ij L_ji as one tensor."""
    F = rep.field
    u = F.gen
    cspace = rep.current_space()
    L = represent_current(rep, space=cspace)
    Lp = L.map_entries(lambda f: f.derivative())
    out = (L * L * L).partial_trace(["z0"]) - (L * Lp).partial_trace(["z0"]).scale(
        F.from_int(2) * u
    )
    N = rep.N
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            s = sign(j - i)
            if s == 0:
                continue
            term = current_entry(L, "z0", i, j) * current_entry(L, "z0", j, i)
            out = out + term.scale(F.from_int(s))
    return out


class FamilyMember:
    """One extracted operator with its provenance inside theta_m^{(k)}."""

    __slots__ = ("m", "k", "location", "op")

    def __init__(self, m, k, location, op):
        self.m = m
        self.k = k
        self.location = location
        self.op = op

    def label(self):
        kind = self.location[0]
        if kind == "pole":
            return "m=%d k=%d pole=%s order=%d" % (
                self.m,
                self.k,
                self.location[1],
                self.location[2],
            )
        return "m=%d k=%d poly deg=%d" % (self.m, self.k, self.location[1])

    def __repr__(self):
        return "FamilyMember(%s)" % self.label()


def partial_fraction_data(tensor, poles):
    """Split a rational-function tensor into exact operator coefficients.

    Returns a list of (location, operator-over-QQ) pairs: one operator
    per pole/order and one per polynomial-part degree, deterministic
    order.  ``poles`` must cover every denominator root.
    """
    pole_ops = {}
    poly_ops = {}
    for (r, c), f in tensor.sorted_entries():
        poly, parts = f.partial_fractions(poles)
        if poly is not None:
            for d, coeff in enumerate(poly.coeffs):
                if coeff:
                    poly_ops.setdefault(d, {})[(r, c)] = coeff
        for a, coeffs in parts.items():
            for idx, coeff in enumerate(coeffs):
                if coeff:
                    pole_ops.setdefault((a, idx + 1), {})[(r, c)] = coeff
    qspace = tensor.space
    out = []
    for (a, order) in sorted(pole_ops, key=lambda t: (poles.index(t[0]), t[1])):
        out.append(
            (
                ("pole", a, order),
                AuxTensor(qspace, QQ, pole_ops[(a, order)]),
            )
        )
    for d in sorted(poly_ops):
        out.append((("poly", d), AuxTensor(qspace, QQ, poly_ops[d])))
    return out


def extract_family(rep, m_max, shifted=False):
    """All partial-fraction operators of theta_m^{(k)}, m <= m_max."""
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    ctx = rep_context(rep)
    poles = list(rep.points)
    family = []
    for m in range(1, m_max + 1):
        theta = ctx.theta_mbar(m, shifted)
        for k in sorted(theta.coeffs):
            for location, op in partial_fraction_data(theta.coeffs[k], poles):
                family.append(FamilyMember(m, k, location, op))
    return family


def commutativity_report(family):
    """Exact pairwise commutators; pass iff all vanish."""
    records = []
    ok = True
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            comm = family[i].op.commutator(family[j].op)
            good = comm.is_zero()
            ok = ok and good
            records.append(
                {
                    "pair": (family[i].label(), family[j].label()),
                    "zero": good,
                    "witness": None if good else comm.sorted_entries(),
                }
            )
    return {"pass": ok, "pairs": records}


def quad_residue_check(rep):
    """Site-by-site residue extraction of the quadratic Hamiltonians.

    For each site i the normalized residue at u = a_i of
    -(a_i / 2u) tr L(u)^2 equals 2 a_i sum_{j != i} r_ij(a_i/a_j)
    exactly; equivalently the raw residue of tr L(u)^2 itself is
    4 a_i N - 4 a_i sum_{j != i} r_ij(a_i/a_j) (the double pole of the
    self-term contributes the central part, and the 1/(2u) weight
    removes it).  Both forms are checked.
    """
    F = rep.field
    L = represent_current(rep)
    trL2 = (L * L).partial_trace(["z0"])
    qspace = rep.quantum_space()
    sites = rep.site_names()
    records = []
    ok = True
    for i, ai in enumerate(rep.points):
        weight = F.embed(-ai / 2) / F.gen
        lhs = trL2.map_entries(
            lambda f: (f * weight).expand_at(ai, -1, -1)[0], ring=QQ
        )
        raw = trL2.map_entries(lambda f: f.expand_at(ai, -1, -1)[0], ring=QQ)
        rhs = AuxTensor.zero(qspace, QQ)
        for j, aj in enumerate(rep.points):
            if j == i:
                continue
            r = r_classical(rep.N, QQ, ai / aj)
            src = r.space.leg_names()
            rhs = rhs + r.embed(qspace, {src[0]: sites[i], src[1]: sites[j]})
        rhs = rhs.scale(QQ.from_int(2) * ai)
        central = AuxTensor.scalar(qspace, QQ, QQ.from_int(4 * rep.N) * ai)
        diff_norm = lhs - rhs
        diff_raw = raw - (central - rhs.scale(QQ.from_int(2)))
        good = diff_norm.is_zero() and diff_raw.is_zero()
        ok = ok and good
        records.append(
            {
                "site": i + 1,
                "point": str(ai),
                "zero": good,
                "witness": None if good else diff_norm.sorted_entries(),
            }
        )
    return {"pass": ok, "sites": records}
