"""Builders shared between test modules."""
from hopfkit.fields import QQ
from hopfkit.linmap import LinMap, TensorShape, UNIT_SHAPE
from hopfkit.structures import BialgebraData, BraidedObject

# verdict lines collected by the acceptance tests; a terminal-summary hook in
# conftest.py replays them after the run, outside pytest's output capture
VERDICTS = []


def monoid_bialgebra(fld=QQ):
    """The 2-element monoid {1, z} with z*z = z, both elements grouplike.

    A bialgebra whose identity map has no convolution inverse (z would need
    an inverse in the monoid), so antipode synthesis must refuse it.
    """
    one = fld.one
    obj = BraidedObject(fld, 2)
    v1, v2 = TensorShape((2,)), TensorShape((2, 2))
    eta = LinMap.from_cols(fld, UNIT_SHAPE, v1, [{0: one}])
    mu = LinMap.from_cols(fld, v2, v1, [{0: one}, {1: one}, {1: one}, {1: one}])
    eps = LinMap.from_cols(fld, v1, UNIT_SHAPE, [{0: one}, {0: one}])
    delta = LinMap.from_cols(fld, v1, v2, [{0: one}, {3: one}])
    return BialgebraData(obj, eta, mu, eps, delta)
