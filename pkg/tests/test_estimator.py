import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from wheeler_ms import StringMatcher, WheelerMatcher
from wheeler_ms.estimator import check_automaton, check_patterns
from wheeler_ms.oracle import generate_instances

from helpers import permute


def test_params_roundtrip():
    m = WheelerMatcher(method="brute", validate=False)
    assert m.get_params() == {"method": "brute", "validate": False}
    c = clone(m).set_params(method="lcp")
    assert c.method == "lcp" and c.validate is False
    assert StringMatcher().get_params() == {"append_terminator": True}


def test_not_fitted():
    with pytest.raises(NotFittedError):
        WheelerMatcher().transform(["a"])
    with pytest.raises(NotFittedError):
        StringMatcher().transform(["a"])


def test_fit_from_path_and_text(sample19, data_dir):
    by_path = WheelerMatcher().fit(data_dir / "sample19.wdfa")
    by_text = WheelerMatcher().fit(sample19.to_text())
    by_str_path = WheelerMatcher().fit(str(data_dir / "sample19.wdfa"))
    for m in (by_path, by_text, by_str_path):
        assert m.n_states_ == 19
        assert m.transform(["heba"])[0][-1] == (4, 4, 3, 3)


def test_fit_rejects_non_wheeler(sample19):
    bad = permute(sample19, {3: 5, 5: 3})
    with pytest.raises(ValueError, match="axiom 1"):
        WheelerMatcher().fit(bad)
    assert WheelerMatcher(validate=False, method="brute").fit(bad).n_states_ == 19


def test_bad_method(sample19):
    with pytest.raises(ValueError):
        WheelerMatcher(method="fast").fit(sample19)


def test_input_validation():
    with pytest.raises(TypeError):
        check_patterns("heba")
    with pytest.raises(TypeError):
        check_patterns([3])
    with pytest.raises(ValueError, match="reserved"):
        check_patterns(["ab$"])
    with pytest.raises(TypeError):
        check_automaton(42)


def test_lcp_and_brute_agree():
    for inst in generate_instances(seed=3, count=15, max_path=50):
        fast = WheelerMatcher().fit(inst.automaton).transform(inst.patterns)
        slow = WheelerMatcher(method="brute").fit(inst.automaton).transform(inst.patterns)
        assert fast == slow


def test_string_matcher():
    m = StringMatcher().fit("mississippi")
    assert m.index_.text == "mississippi$"
    assert m.transform(["stpissi"])[0][3] == (4, 4, 4, 5)
    assert StringMatcher().fit("mississippi$").index_.text == "mississippi$"
    with pytest.raises(ValueError):
        StringMatcher(append_terminator=False).fit("mississippi")
    with pytest.raises(TypeError):
        StringMatcher().fit(["mississippi"])
