from fractions import Fraction

import pytest

from schurcert.errors import ScenarioError
from schurcert.gaussian import GaussianRational
from schurcert.partitions import Partition
from schurcert.scenario import Scenario, format_scenario, parse

FULL = """
# a complete scenario
[scenario]
seed = 42

[model]
type = proj
exponents = 2,3

[bundle]
root = 1,0
root = 1,0
root = 0,1
twist = 0,0

[hermitian omega1]
row = 1, 0
row = 0, 1

[hermitian omega2]
row = 1/7, 0+1i
row = 0-1i, 2

[task hr-check]
dimension = 2
reference = omega1
combination = omega1^2 + 7/2*omega2^2

[task logconcave]
mu = 5
h = 1,1

[task hi2]
h = 1,1
alpha = 1,-1

[task ring-eval]
schur = 2,1
derived = 3 / 1
"""


def test_parse_full_scenario():
    sc = parse(FULL)
    assert sc.seed == 42
    assert sc.model_spec == ("proj", (2, 3))
    assert sc.roots == ((Fraction(1), Fraction(0)),) * 2 + ((Fraction(0), Fraction(1)),)
    assert sc.twist == (Fraction(0), Fraction(0))
    assert set(sc.hermitians) == {"omega1", "omega2"}
    assert sc.hermitians["omega2"][0][1] == GaussianRational(0, 1)
    task = sc.tasks["hr-check"]
    assert task["dimension"] == 2
    assert task["reference"] == "omega1"
    assert task["combination"] == (
        (Fraction(1), (("omega1", 2),)),
        (Fraction(7, 2), (("omega2", 2),)),
    )
    assert sc.tasks["logconcave"]["mu"] == Partition([5])
    assert sc.tasks["ring-eval"]["schur"] == [Partition([2, 1])]
    assert sc.tasks["ring-eval"]["derived"] == [(Partition([3]), 1)]


def test_roundtrip_is_stable():
    sc = parse(FULL)
    text = format_scenario(sc)
    sc2 = parse(text)
    assert format_scenario(sc2) == text
    assert sc2.model_spec == sc.model_spec
    assert sc2.roots == sc.roots
    assert sc2.hermitians == sc.hermitians
    assert sc2.tasks == sc.tasks
    assert sc2.seed == sc.seed


def test_materialization():
    sc = parse(FULL)
    model = sc.model()
    assert model.dimension == 5
    bundle = sc.bundle(model)
    assert bundle.rank == 3
    h = sc.hermitian("omega2")
    assert h.dim == 2


def test_unknown_key_is_an_error_with_location():
    text = "[model]\ntype = proj\nexponents = 2\nrubbish = 1\n"
    with pytest.raises(ScenarioError) as exc:
        parse(text)
    assert exc.value.line == 4
    assert "rubbish" in str(exc.value)


def test_unknown_section_rejected():
    with pytest.raises(ScenarioError):
        parse("[mystery]\n")
    with pytest.raises(ScenarioError):
        parse("[task warp]\n")


def test_duplicate_section_rejected():
    with pytest.raises(ScenarioError):
        parse("[model]\ntype = proj\nexponents = 2\n[model]\ntype = proj\nexponents = 2\n")


def test_duplicate_key_rejected():
    with pytest.raises(ScenarioError):
        parse("[model]\ntype = proj\ntype = proj\nexponents = 2\n")


def test_float_literals_rejected():
    with pytest.raises(ScenarioError) as exc:
        parse("[bundle]\nroot = 1.5, 2\n")
    assert "float" in str(exc.value)


def test_stray_pair_rejected():
    with pytest.raises(ScenarioError) as exc:
        parse("seed = 3\n")
    assert exc.value.line == 1


def test_bad_hermitian_matrix_rejected():
    with pytest.raises(ScenarioError):
        parse("[hermitian h]\nrow = 1, 2\nrow = 3\n")
    with pytest.raises(ScenarioError):
        parse("[hermitian]\nrow = 1\n")


def test_abelian_model_roundtrip():
    text = "[model]\ntype = abelian_square\n"
    sc = parse(text)
    assert sc.model_spec == ("abelian_square",)
    assert sc.model().dimension == 4
    assert parse(format_scenario(sc)).model_spec == ("abelian_square",)


def test_combination_with_products_and_signs():
    text = (
        "[hermitian a]\nrow = 1\n\n[hermitian b]\nrow = 2\n\n"
        "[task hr-check]\ndimension = 1\nreference = a\n"
        "combination = 2*a*b - 1/3*b^2\n"
    )
    sc = parse(text)
    combo = sc.tasks["hr-check"]["combination"]
    assert combo == (
        (Fraction(2), (("a", 1), ("b", 1))),
        (Fraction(-1, 3), (("b", 2),)),
    )


def test_seed_validation():
    with pytest.raises(ScenarioError):
        parse("[scenario]\nseed = -1\n")
    with pytest.raises(ScenarioError):
        parse("[scenario]\nseed = abc\n")
