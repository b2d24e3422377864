import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lscrystal.cartan import LAMBDA, CartanMatrix, Weight
from lscrystal.crystal import (
    TensorElem,
    extremality_witness,
    is_extremal_bounded,
    max_lower_count,
    max_raise_count,
    tensor,
    tensor_lower,
    tensor_raise,
    weyl_act,
)
from lscrystal.explorer import explore
from lscrystal.paths import straight
from lscrystal.weyl import IDENTITY, WeylWord, act, words

CM = CartanMatrix(3, 3)
NODES = explore(CM, straight(CM, LAMBDA), 4).nodes


def sp(nu):
    return straight(CM, nu, LAMBDA)


def signature_apply(factors, i, raising):
    """Signature rule: each factor contributes '-'*eps then '+'*phi; '+-' pairs cancel.

    e_i hits the factor owning the rightmost surviving '-', f_i the leftmost '+'.
    """
    signs = []
    for k, b in enumerate(factors):
        signs += [("-", k)] * b.eps(i) + [("+", k)] * b.phi(i)
    stack = []
    for s in signs:
        if s[0] == "-" and stack and stack[-1][0] == "+":
            stack.pop()
        else:
            stack.append(s)
    minus = [k for s, k in stack if s == "-"]
    plus = [k for s, k in stack if s == "+"]
    if raising:
        if not minus:
            return None
        k = minus[-1]
        new = factors[k].e(i)
    else:
        if not plus:
            return None
        k = plus[0]
        new = factors[k].f(i)
    return factors[:k] + (new,) + factors[k + 1:]


def test_single_factor_reduces(pi_lambda):
    t = TensorElem((pi_lambda,))
    assert t.f(1).factors == (pi_lambda.f(1),)
    assert t.e(1) is None and t.eps(2) == pi_lambda.eps(2)


def test_tensor_examples(pi_lambda):
    t = tensor(pi_lambda, pi_lambda)
    assert tensor_lower(t, 1) == tensor(sp(Weight(-1, 2)), pi_lambda)
    assert tensor_raise(t, 1) is None
    assert t.eps(1) == 0 and t.wt() == Weight(2, -2)


def test_empty_tensor_rejected():
    with pytest.raises(ValueError):
        TensorElem(())


triples = st.tuples(*(st.sampled_from(NODES),) * 3)


@settings(max_examples=150, deadline=None)
@given(triples, st.sampled_from([1, 2]))
def test_tensor_matches_signature_rule(bs, i):
    t = TensorElem(bs)
    for raising in (True, False):
        got = t.e(i) if raising else t.f(i)
        want = signature_apply(bs, i, raising)
        assert (None if got is None else got.factors) == want
    assert t.eps(i) == max_raise_count(t, i)
    assert t.phi(i) == max_lower_count(t, i)


@settings(max_examples=150, deadline=None)
@given(triples, st.sampled_from([1, 2]))
def test_left_and_right_folds_agree(bs, i):
    a, b, c = bs
    left = TensorElem((TensorElem((a, b)), c))
    right = TensorElem((a, TensorElem((b, c))))
    assert left.eps(i) == right.eps(i) and left.phi(i) == right.phi(i)
    for op in ("e", "f"):
        x, y = getattr(left, op)(i), getattr(right, op)(i)
        assert (x is None) == (y is None)
        if x is not None:
            assert x.flatten() == y.flatten()


def test_extremal_examples(pi_lambda, two_segment):
    assert is_extremal_bounded(CM, pi_lambda, 6)
    assert not is_extremal_bounded(CM, two_segment, 2)
    assert extremality_witness(CM, two_segment, 2) == (IDENTITY, 2)
    zero = straight(CM, Weight(0, 0))
    assert is_extremal_bounded(CM, zero, 5)


def test_extremality_closed_under_weyl_action(pi_lambda):
    for w in words(CM, 4):
        b = weyl_act(pi_lambda, w)
        assert b.wt() == act(CM, w, LAMBDA)
        assert is_extremal_bounded(CM, b, 4)


def test_weyl_action_on_tensors(pi_lambda):
    t = tensor(pi_lambda, pi_lambda)
    s = weyl_act(t, WeylWord(1, 1))
    assert s.wt() == act(CM, WeylWord(1, 1), t.wt())
    assert weyl_act(s, WeylWord(1, 1)) == t
