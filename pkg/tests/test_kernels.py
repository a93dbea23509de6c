import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncsf import _pykernels, kernels
from ncsf.compositions import compositions_up_to, from_mask

ckernels = pytest.importorskip("ncsf._ckernels")

COARSE = (_pykernels.M_TO_PSI, _pykernels.F_TO_PSI, _pykernels.PSI_TO_M)
FINE = (_pykernels.S_TO_PSI, _pykernels.PSI_TO_S)


def test_backends_agree_exhaustively():
    for I in compositions_up_to(9):
        for kind in COARSE:
            assert ckernels.coarsening_terms(kind, I) == _pykernels.coarsening_terms(kind, I)
        for kind in FINE:
            assert ckernels.refinement_terms(kind, I) == _pykernels.refinement_terms(kind, I)


@given(st.integers(10, 15).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << (n - 1)) - 1))))
def test_backends_agree_near_the_compiled_limit(case):
    n, mask = case
    I = from_mask(n, mask)
    for kind in COARSE:
        assert ckernels.coarsening_terms(kind, I) == _pykernels.coarsening_terms(kind, I)
    for kind in FINE:
        assert ckernels.refinement_terms(kind, I) == _pykernels.refinement_terms(kind, I)


def test_heavy_inputs_fall_back_to_python():
    I = (ckernels.MAX_WEIGHT + 1,)
    assert kernels.coarsening_terms(_pykernels.M_TO_PSI, I) == [(0, 1, 1)]
    assert kernels.refinement_terms(_pykernels.S_TO_PSI, (8, 9))[0] == _pykernels.refinement_terms(_pykernels.S_TO_PSI, (8, 9))[0]


def test_kernel_values():
    # M^(1,1) = 1/2 Psi^(1,1) - 1/2 Psi^(2); masks 1 and 0
    terms = sorted(_pykernels.coarsening_terms(_pykernels.M_TO_PSI, (1, 1)))
    assert [(m, n / d) for m, n, d in terms] == [(0, -0.5), (1, 0.5)]


def test_environment_forces_pure_python():
    env = dict(os.environ, NCSF_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import ncsf; print(ncsf.BACKEND)"], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "python"
