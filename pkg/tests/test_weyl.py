"""Operator-valued differential and shift operators."""

from triggaudin.rationals import QQ, rational
from triggaudin.ratfun import FracField
from triggaudin.rmatrices import Qq
from triggaudin.tensor import AuxTensor, Space, aux_leg
from triggaudin.weyl import DiffOp, QDiffOp

F = FracField("u", QQ)
SP = Space(2, [aux_leg("a")])


def scalar_op(f, degree=0):
    return DiffOp(SP, F, {degree: AuxTensor.scalar(SP, F, f)})


class TestDiffOp:
    def test_weyl_relation(self):
        # d . u = u . d + 1
        d = DiffOp(SP, F, {1: AuxTensor.identity(SP, F)})
        g = scalar_op(F.gen)
        prod = d * g
        expect = g * d + DiffOp.identity(SP, F)
        assert prod == expect

    def test_associativity(self):
        u = F.gen
        d = DiffOp(SP, F, {1: AuxTensor.identity(SP, F)})
        a = scalar_op(u * u) + d
        b = scalar_op(F.one / (F.one - u))
        c = d * d + scalar_op(u, degree=1)
        assert (a * b) * c == a * (b * c)

    def test_constant_term_is_action_on_one(self):
        u = F.gen
        op = scalar_op(u, degree=1) + scalar_op(u * u)
        # (u d + u^2) . 1 = u^2
        assert op.constant_term() == AuxTensor.scalar(SP, F, u * u)

    def test_partial_trace_commutes_with_sum(self):
        sp2 = Space(2, [aux_leg("a"), aux_leg("b")])
        x = DiffOp(sp2, F, {0: AuxTensor.identity(sp2, F)})
        y = DiffOp(sp2, F, {1: AuxTensor.identity(sp2, F)})
        lhs = (x + y).partial_trace(["b"])
        rhs = x.partial_trace(["b"]) + y.partial_trace(["b"])
        assert lhs == rhs


class TestQDiffOp:
    def test_shift_rule(self):
        # delta . u = (shift * u) . delta
        Fu = FracField("u", Qq)
        sp = Space(2, [aux_leg("a")])
        shift = Qq.one / (Qq.gen * Qq.gen)
        delta = QDiffOp(sp, Fu, {1: AuxTensor.identity(sp, Fu)}, shift)
        g = QDiffOp(sp, Fu, {0: AuxTensor.scalar(sp, Fu, Fu.gen)}, shift)
        prod = delta * g
        shifted = QDiffOp(
            sp,
            Fu,
            {1: AuxTensor.scalar(sp, Fu, Fu.gen.scale(shift))},
            shift,
        )
        assert prod == shifted

    def test_delta_powers_compose(self):
        Fu = FracField("u", Qq)
        sp = Space(2, [aux_leg("a")])
        shift = Qq.one / (Qq.gen * Qq.gen)
        u_op = QDiffOp(sp, Fu, {0: AuxTensor.scalar(sp, Fu, Fu.gen)}, shift)
        delta = QDiffOp(sp, Fu, {1: AuxTensor.identity(sp, Fu)}, shift)
        # delta^2 u = u shift^2 delta^2
        lhs = delta * (delta * u_op)
        rhs = QDiffOp(
            sp,
            Fu,
            {2: AuxTensor.scalar(sp, Fu, Fu.gen.scale(shift * shift))},
            shift,
        )
        assert lhs == rhs
