"""Hopf trusses: the suite induced by idempotent endomorphisms, the derived
identities, mutation detection, and truss morphisms."""
from fractions import Fraction

import pytest

from hopfkit.errors import ConditionBFailed, LawViolation, PreconditionNotMet
from hopfkit.factories import group_algebra, linearize_endo, named_endo, sweedler_h4
from hopfkit.fields import Field, QQ
from hopfkit.groups import cyclic, group_by_name, idempotent_endos, symmetric3
from hopfkit.linmap import identity, shape, tensor
from hopfkit.rota_baxter import truss_from_idempotent
from hopfkit.truss import (
    HopfTrussData,
    check_truss,
    check_truss_derived,
    check_truss_morphism,
    truss_action,
    truss_class_condition,
)

SUITE_GROUPS = ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "S3", "D4", "Q8")


def dq(group_name, endo_name, fld=QQ):
    g = group_by_name(group_name)
    h = group_algebra(g, fld)
    q = linearize_endo(g, named_endo(g, endo_name), fld)
    return truss_from_idempotent(h, q)


def test_full_idempotent_suite():
    for name in SUITE_GROUPS:
        g = group_by_name(name)
        h = group_algebra(g, QQ)
        for images in idempotent_endos(g):
            q = linearize_endo(g, images, QQ)
            t = truss_from_idempotent(h, q)
            assert check_truss(t).passed, (name, images)
            assert check_truss_derived(t).passed, (name, images)


def test_identity_endo_gives_hopf_truss_with_equal_products():
    t = dq("S3", "identity")
    assert t.mu2 == t.mu1
    assert t.cocycle == identity(QQ, shape(6))


def test_trivial_endo_gives_counit_second_product():
    t = dq("S3", "trivial")
    i1 = identity(QQ, shape(6))
    assert t.mu2 == t.mu1 @ tensor(t.cocycle, i1)
    # mu2(g (x) h) = eps(g) h when q is the trivial endomorphism... up to
    # the unit: q(g) = e, so mu2 = (eps . id) followed by left unit
    assert t.mu2 == tensor(t.eps, i1)
    assert truss_action(t) == tensor(t.eps, i1)


def test_gamma_is_counit_action_for_every_dq():
    for endo in ("identity", "trivial", "sign-retraction"):
        t = dq("S3", endo)
        assert truss_action(t) == tensor(t.eps, identity(QQ, shape(6)))


def test_sigma_recovered_from_mu2():
    t = dq("S3", "sign-retraction")
    i1 = identity(QQ, shape(6))
    assert t.mu2 @ tensor(i1, t.eta) == t.cocycle


def test_class_condition_on_cocommutative_and_sweedler():
    assert truss_class_condition(dq("S3", "sign-retraction"))
    h4 = sweedler_h4(QQ)
    t4 = truss_from_idempotent(h4, identity(QQ, shape(4)))
    assert check_truss(t4).passed
    assert check_truss_derived(t4).passed
    assert truss_class_condition(t4)  # sigma = id passes even here


def test_gf5_trusses():
    t = dq("S3", "sign-retraction", Field.prime(5))
    assert check_truss(t).passed
    assert check_truss_derived(t).passed


def test_condition_b_failure():
    # constant-to-g map on C2 is a coalgebra morphism but fails condition B
    g = cyclic(2)
    h = group_algebra(g, QQ)
    q = linearize_endo(g, (1, 1), QQ)
    with pytest.raises(ConditionBFailed):
        truss_from_idempotent(h, q)


def test_non_coalgebra_morphism_rejected():
    g = cyclic(2)
    h = group_algebra(g, QQ)
    notq = h.antipode.with_entry(0, 0, Fraction(2))
    with pytest.raises(PreconditionNotMet):
        truss_from_idempotent(h, notq)


def mutate(t, mapname, i, j):
    m = getattr(t, mapname)
    maps = {
        "eta": t.eta, "mu1": t.mu1, "mu2": t.mu2, "eps": t.eps,
        "delta": t.delta, "antipode": t.antipode, "cocycle": t.cocycle,
    }
    maps[mapname] = m.with_entry(i, j, t.obj.field.add(m.entry(i, j),
                                                       t.obj.field.one))
    return HopfTrussData(t.obj, maps["eta"], maps["mu1"], maps["mu2"],
                         maps["eps"], maps["delta"], maps["antipode"],
                         maps["cocycle"])


def test_single_entry_mutations_all_detected():
    # exhaustive on a small carrier; the acceptance suite sweeps every truss
    t2 = dq("C2", "identity")
    for i in range(2):
        for j in range(2):
            rep = check_truss(mutate(t2, "cocycle", i, j))
            assert not rep.passed, ("sigma", i, j)
            assert rep.failures()[0].witness is not None
        for j in range(4):
            rep = check_truss(mutate(t2, "mu2", i, j))
            assert not rep.passed, ("mu2", i, j)
            assert rep.failures()[0].witness is not None
    # spot checks on the six-dimensional example
    t = dq("S3", "sign-retraction")
    for i, j in [(0, 0), (5, 5), (2, 4), (3, 1)]:
        assert not check_truss(mutate(t, "cocycle", i, j)).passed
    for i, j in [(0, 0), (5, 35), (1, 17), (4, 23)]:
        assert not check_truss(mutate(t, "mu2", i, j)).passed


def test_truss_morphism_identity_and_projection():
    t = dq("S3", "sign-retraction")
    i1 = identity(QQ, shape(6))
    assert check_truss_morphism(i1, t, t).passed
    # the sign retraction itself maps the truss onto itself compatibly with
    # both products (it is a group endomorphism fixing the cocycle image)
    q = t.cocycle
    rep = check_truss_morphism(q, t, t)
    assert rep.passed, str(rep)


def test_truss_morphism_failure_reported():
    t = dq("S3", "sign-retraction")
    s = dq("S3", "identity")
    rep = check_truss_morphism(identity(QQ, shape(6)), t, s)
    assert not rep.passed
