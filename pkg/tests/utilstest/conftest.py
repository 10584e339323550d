import pytest
from utilities.action_update import buildActionModel
from utilities.dynamic import buildDynamicModel, buildGuardedDynamicModel
from utilities.formula import Atom, Not, buildSignature
from utilities.kripke import buildEpistemicModel
from utilities.parser import parseFormula

# Anne and Bob both unsure whether p
@pytest.fixture(scope="session")
def m0():
    return buildEpistemicModel(
        ["w0", "w1"],
        [("a", "w0", "w1"), ("b", "w0", "w1")],
        {"p": ["w0"]},
        agents=["a", "b"],
    )

@pytest.fixture(scope="session")
def sig0():
    return buildSignature(["a", "b"], ["p"], {"sp": Atom("p"), "snp": Not(Atom("p"))})

@pytest.fixture(scope="session")
def a0(sig0):
    return buildActionModel("A0", ["sp", "snp"], [("a", "sp", "snp")], sig0)

# q: Bob speaks French. Anne knows nothing, Bob knows whether q
@pytest.fixture(scope="session")
def m1():
    return buildEpistemicModel(
        ["w0", "w1", "w2", "w3"],
        [("a", "w0", "w1"), ("a", "w1", "w2"), ("a", "w2", "w3"), ("b", "w0", "w1"), ("b", "w2", "w3")],
        {"p": ["w0", "w2"], "q": ["w0", "w1"]},
        agents=["a", "b"],
    )

@pytest.fixture(scope="session")
def sig1():
    pre = {
        "sp": "p & q", "snp": "!p & q", "s": "!q",
        "spq": "p & q", "snpq": "!p & q", "spnq": "p & !q", "snpnq": "!p & !q",
    }
    return buildSignature(["a", "b"], ["p", "q"], {action: parseFormula(text) for action, text in pre.items()})

@pytest.fixture(scope="session")
def a1(sig1):
    return buildActionModel("A1", ["sp", "snp", "s"], [("a", "sp", "snp"), ("a", "snp", "s")], sig1)

@pytest.fixture(scope="session")
def a2(sig1):
    return buildActionModel(
        "A2",
        ["spq", "snpq", "spnq", "snpnq"],
        [("a", "spq", "spnq"), ("a", "snpq", "snpnq"), ("b", "spnq", "snpnq")],
        sig1,
    )

@pytest.fixture(scope="session")
def sig_dyn():
    return buildSignature(["a", "b"], ["p", "q"], {"sp": Atom("p"), "snp": Not(Atom("p"))})

@pytest.fixture(scope="session")
def mt1(m1, sig_dyn):
    return buildGuardedDynamicModel(m1, [
        ("a", None, [["sp", "snp"]]),
        ("b", Atom("q"), [["sp"], ["snp"]]),
        ("b", None, [["sp", "snp"]]),
    ], sig_dyn)

# Same, but Anne speaks French
@pytest.fixture(scope="session")
def mt1_french(m1, sig_dyn):
    return buildGuardedDynamicModel(m1, [
        ("a", None, [["sp"], ["snp"]]),
        ("b", Atom("q"), [["sp"], ["snp"]]),
        ("b", None, [["sp", "snp"]]),
    ], sig_dyn)

# r: Anne speaks French. Anne knows whether r, Bob knows whether q
@pytest.fixture(scope="session")
def m2():
    worlds = [f"w{i}" for i in range(8)]
    return buildEpistemicModel(
        worlds,
        [("a", "w0", "w1"), ("a", "w1", "w2"), ("a", "w2", "w3"), ("a", "w4", "w5"), ("a", "w5", "w6"), ("a", "w6", "w7"),
         ("b", "w0", "w1"), ("b", "w1", "w4"), ("b", "w4", "w5"), ("b", "w2", "w3"), ("b", "w3", "w6"), ("b", "w6", "w7")],
        {"p": ["w0", "w2", "w4", "w6"], "q": ["w0", "w1", "w4", "w5"], "r": ["w0", "w1", "w2", "w3"]},
        agents=["a", "b"],
    )

@pytest.fixture(scope="session")
def sig2():
    return buildSignature(["a", "b"], ["p", "q", "r"], {"sp": Atom("p"), "snp": Not(Atom("p"))})

@pytest.fixture(scope="session")
def mt2(m2, sig2):
    return buildGuardedDynamicModel(m2, [
        ("a", Atom("r"), [["sp"], ["snp"]]),
        ("a", None, [["sp", "snp"]]),
        ("b", Atom("q"), [["sp"], ["snp"]]),
        ("b", None, [["sp", "snp"]]),
    ], sig2)

# Same epistemic part, Anne tells the actions apart in one and not in the other
@pytest.fixture(scope="session")
def d_a(m0, sig0):
    return buildDynamicModel(m0, [], sig0)

@pytest.fixture(scope="session")
def d_b(m0, sig0):
    return buildDynamicModel(m0, [("a", "w0", "sp", "snp"), ("a", "w1", "sp", "snp")], sig0)
