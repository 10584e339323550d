import random
import pytest

from utilities.action_update import buildActionModel, disjointUnionActions, productUpdate, publicAnnouncementModel
from utilities.exceptions import EmptyActionSet, EmptyProduct, EmptyRestriction, NameCollision, UnknownAction, UnknownIdentifier, UnsupportedFragment
from utilities.formula import And, Atom, Fragment, Not, buildSignature
from utilities.kripke import bisimilar, extension, restrict, satisfies
from utilities.parser import parseFormula
from utilities.randommodels import randomActionModel, randomEpistemicModel, randomFormula, randomSignature


@pytest.mark.usefixtures("sig0", "a0", "a1")
class TestBuild:
    def test_agents_without_edges_tell_actions_apart(self, a0):
        assert a0.partition("a").blocks == (("sp", "snp"),)
        assert a0.partition("b").blocks == (("sp",), ("snp",))
        assert a0.precondition("snp") == Not(Atom("p"))

    def test_closure(self, a1):
        assert a1.partition("a").classOf("s") == ("sp", "snp", "s")

    def test_errors(self, sig0):
        with pytest.raises(EmptyActionSet):
            buildActionModel("E", [], [], sig0)
        with pytest.raises(UnknownAction):
            buildActionModel("E", ["sp", "t"], [], sig0)
        with pytest.raises(UnknownAction):
            buildActionModel("E", ["sp"], [("a", "sp", "snp")], sig0)
        with pytest.raises(UnknownIdentifier):
            buildActionModel("E", ["sp"], [("c", "sp", "sp")], sig0)

    def test_unknown_precondition(self, a0):
        with pytest.raises(UnknownAction):
            a0.precondition("s")


@pytest.mark.usefixtures("m0", "m1", "a0", "a1", "a2")
class TestProductUpdate:
    def test_bob_reads_the_letter(self, m0, a0):
        product = productUpdate(m0, a0)
        assert product.worlds == (("w0", "sp"), ("w1", "snp"))
        assert satisfies(product, ("w0", "sp"), parseFormula("K_b p & !K_a p & K_a (K_b p | K_b !p)"))

    def test_bob_may_not_speak_french(self, m1, a1):
        product = productUpdate(m1, a1)
        assert product.worlds == (("w0", "sp"), ("w1", "snp"), ("w2", "s"), ("w3", "s"))
        assert satisfies(product, ("w0", "sp"), parseFormula("K_b p"))
        assert not satisfies(product, ("w2", "s"), parseFormula("K_b p | K_b !p"))
        assert product.classOf("b", ("w2", "s")) == (("w2", "s"), ("w3", "s"))

    def test_letter_with_french_translation(self, m1, a2):
        product = productUpdate(m1, a2)
        assert extension(product, parseFormula("K_a p | K_a !p")) == set(product.worlds)
        assert extension(product, parseFormula("K_a q | K_a !q")) == set()
        assert satisfies(product, ("w0", "spq"), parseFormula("K_b p"))
        assert not satisfies(product, ("w2", "spnq"), parseFormula("K_b p | K_b !p"))

    def test_atoms_come_from_the_world(self, m1, a2):
        product = productUpdate(m1, a2)
        for w, action in product.worlds:
            assert product.trueAtoms((w, action)) == m1.trueAtoms(w)

    def test_result_is_s5(self, m1, a1):
        product = productUpdate(m1, a1)
        for agent in product.agents:
            assert product.partition(agent).isPartitionOf(product.worlds)

    def test_nothing_executable(self, m0):
        sig = buildSignature(["a", "b"], ["p"], {"bot": And(Atom("p"), Not(Atom("p")))})
        with pytest.raises(EmptyProduct):
            productUpdate(m0, buildActionModel("Bot", ["bot"], [], sig))


@pytest.mark.usefixtures("m0")
class TestPublicAnnouncement:
    def test_single_action(self, m0):
        A = publicAnnouncementModel(Atom("p"), m0.agents)
        assert A.actions == ("announce",)
        assert productUpdate(m0, A).worlds == (("w0", "announce"),)

    def test_only_epistemic_formulas(self):
        with pytest.raises(UnsupportedFragment):
            publicAnnouncementModel(parseFormula("[sp] p"), ["a"])

    @pytest.mark.timeout(30)
    def test_same_as_restriction(self):
        checked = 0
        for seed in range(200):
            rng = random.Random(seed)
            sig = randomSignature(rng, 2, 2, 1)
            M = randomEpistemicModel(rng, sig, 1 + seed % 6)
            phi = randomFormula(rng, sig, 3, Fragment.EL)
            try:
                restricted = restrict(M, phi)
            except EmptyRestriction:
                continue
            product = productUpdate(M, publicAnnouncementModel(phi, sig.agents))
            for w in restricted.worlds:
                assert bisimilar(product, (w, "announce"), restricted, w)
            checked += 1
        assert checked > 50


@pytest.mark.usefixtures("m0", "a0", "a1", "sig0")
class TestDisjointUnion:
    def test_union(self, m0, a0):
        announce = publicAnnouncementModel(Atom("p"), m0.agents)
        union = disjointUnionActions([a0, announce])
        assert union.name == "A0+PA"
        assert union.actions == ("sp", "snp", "announce")
        assert not union.partition("a").related("sp", "announce")
        assert union.partition("a").related("sp", "snp")

    def test_union_product_is_union_of_products(self, m0, a0):
        announce = publicAnnouncementModel(Atom("p"), m0.agents)
        product = productUpdate(m0, disjointUnionActions([a0, announce]))
        assert set(product.worlds) == set(productUpdate(m0, a0).worlds) | set(productUpdate(m0, announce).worlds)

    def test_name_collision(self, a0, a1):
        with pytest.raises(NameCollision) as e:
            disjointUnionActions([a0, a1])
        assert e.value.names == ["snp", "sp"]

    def test_empty(self):
        with pytest.raises(EmptyActionSet):
            disjointUnionActions([])

    def test_random_action_models_cover_the_signature(self):
        rng = random.Random(7)
        sig = randomSignature(rng, 2, 2, 3)
        A = randomActionModel(rng, sig)
        assert A.actions == sig.actions
        assert all(A.partition(agent).isPartitionOf(sig.actions) for agent in sig.agents)
