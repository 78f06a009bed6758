import json

import numpy as np
import pytest

from foxh.hspec import Argument, HFunctionSpec, validate
from foxh.identities import IdentityParams


def make_spec(m, n, upper=(), lower=()):
    return validate(HFunctionSpec.build(m, n, upper, lower))


@pytest.fixture
def h10():
    """ H^{1,0}_{0,1}[z | -; (0,1)] = e^{-z} """
    return make_spec(1, 0, [], [(0, 1)])


@pytest.fixture
def h11():
    """ H^{1,1}_{1,1}[z | (0,1); (0,1)] = 1/(1+z) """
    return make_spec(1, 1, [(0, 1)], [(0, 1)])


@pytest.fixture
def main_params(h11):
    return IdentityParams(alpha=0.3, beta=0.2, lam=0.5, delta=0.4, base=h11)


@pytest.fixture
def unit():
    return Argument(1.0, 0.0)


@pytest.fixture
def spec_file(tmp_path):
    def write(obj, name="spec.json"):
        path = tmp_path / name
        path.write_text(obj if isinstance(obj, str) else json.dumps(obj), encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def rng():
    return np.random.default_rng(20201017)


def relative(a, b):
    return abs(a - b) / max(abs(b), 1e-300)
