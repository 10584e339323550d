import pytest

from utilities.dot import actionDot, dynamicDot, epistemicDot, writeDot
from utilities.exceptions import ExportError


@pytest.mark.usefixtures("m0", "a0", "d_b")
class TestDot:
    def test_epistemic(self, m0):
        assert epistemicDot(m0, "M0") == (
            'graph "M0" {\n'
            '  "w0" [shape=circle, label="w0\\np"];\n'
            '  "w1" [shape=circle, label="w1"];\n'
            '  "w0" -- "w1" [label="a,b", style=solid];\n'
            '}\n'
        )

    def test_action(self, a0):
        text = actionDot(a0)
        assert text.startswith('graph "A0" {\n')
        assert '"sp" [shape=box, label="sp: p"];' in text
        assert '"snp" [shape=box, label="snp: !p"];' in text
        assert '"sp" -- "snp" [label="a", style=solid];' in text

    def test_dynamic_lists_f_per_class(self, d_b):
        text = dynamicDot(d_b, "DB")
        assert '"f_a" [shape=note, label="f_a\\l{w0,w1}: {sp,snp}\\l"];' in text
        assert '"f_b" [shape=note, label="f_b\\l{w0,w1}: {sp} {snp}\\l"];' in text

    def test_dynamic_draws_base_like_epistemic(self, d_b):
        base_text = epistemicDot(d_b.base, "DB")
        assert dynamicDot(d_b, "DB").startswith(base_text.removesuffix("}\n"))

    def test_same_model_same_bytes(self, m0):
        assert epistemicDot(m0) == epistemicDot(m0)

    def test_write(self, m0, tmp_path):
        target = tmp_path / "m0.dot"
        writeDot(epistemicDot(m0), target)
        assert target.read_text(encoding="utf-8") == epistemicDot(m0)
        with pytest.raises(ExportError):
            writeDot("graph {}", tmp_path / "missing" / "m0.dot")
