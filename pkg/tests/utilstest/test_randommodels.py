import random
from collections import Counter

import pytest
from pydantic import ValidationError

from utilities.formula import Fragment, UpdateAM, UpdateDyn, Xi, fragment, subformulas
from utilities.randommodels import RandomModelParams, bellNumber, randomFormula, randomPartition, randomSignature


def test_bell_numbers():
    assert [bellNumber(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_partitions_are_uniform():
    rng = random.Random(0)
    counts = Counter(randomPartition(rng, "abc") for _ in range(5000))
    assert len(counts) == 5
    assert all(800 < count < 1200 for count in counts.values())


def test_params_are_positive():
    with pytest.raises(ValidationError):
        RandomModelParams(world_count=0)


class TestRandomFormula:
    def test_stays_in_the_language(self):
        rng = random.Random(1)
        sig = randomSignature(rng, 2, 2, 2)
        for _ in range(200):
            assert fragment(randomFormula(rng, sig, 4, Fragment.EL)) == Fragment.EL
            assert fragment(randomFormula(rng, sig, 4, Fragment.DL)) in (Fragment.EL, Fragment.DL)
            assert fragment(randomFormula(rng, sig, 4, Fragment.AL, actionModel="A")) in (Fragment.EL, Fragment.AL)

    def test_update_nesting_is_bounded(self):
        rng = random.Random(2)
        sig = randomSignature(rng, 1, 1, 2)
        for _ in range(200):
            phi = randomFormula(rng, sig, 5, maxUpdates=1)
            for sub in subformulas(phi):
                if isinstance(sub, UpdateDyn):
                    assert not any(isinstance(inner, UpdateDyn) for inner in list(subformulas(sub))[1:])

    def test_action_model_language_needs_a_name(self):
        sig = randomSignature(random.Random(0), 1, 1, 1)
        with pytest.raises(ValueError):
            randomFormula(random.Random(0), sig, 3, Fragment.AL)

    def test_signature_names(self):
        sig = randomSignature(random.Random(4), 3, 2, 2)
        assert sig.agents == ("a", "b", "c")
        assert sig.props == ("p", "q")
        assert sig.actions == ("e0", "e1")
        assert not any(isinstance(sub, (Xi, UpdateAM)) for pre in sig.pre.values() for sub in subformulas(pre))
