import pytest

from cubicalh import corpus
from cubicalh.errors import ParameterError, UnknownEntryError
from cubicalh.formal import validate_formal
from cubicalh.subdivision import validate_subdivision


def test_registry_size_and_lookup():
    assert len(corpus.names()) >= 12
    with pytest.raises(UnknownEntryError):
        corpus.get("no-such-entry")


@pytest.mark.parametrize("name", [e.name for e in corpus.entries("subdivision")])
def test_subdivisions_validate(name):
    assert validate_subdivision(corpus.get(name).obj).ok


@pytest.mark.parametrize("name", [e.name for e in corpus.entries("formal")])
def test_formal_entries_validate(name):
    assert validate_formal(corpus.get(name).obj).ok


def test_derived_instances():
    derived = corpus.derived_instances()
    assert len(derived) >= 50
    assert len({name for name, _, _ in derived}) == len(derived)
    for _, s, _ in derived[:20]:
        assert validate_subdivision(s).ok


def test_expected_values_carry_provenance():
    for e in corpus.entries():
        for key, (_, prov) in e.expected.items():
            assert prov in (corpus.REFERENCE, corpus.DERIVED), (e.name, key)
    data = corpus.expected_json(corpus.get("pushed-cube"))
    assert data["expected"]["local_h_short"] == {"coeffs": [0, -4, -4], "provenance": "reference"}
    assert data["metadata"]["is_lqg"] is False


def test_experimental_flag():
    assert corpus.get("lqg-not-qg-square").experimental
    assert not corpus.get("schlegel-2").experimental


def test_generator_parameter_checks():
    with pytest.raises(ParameterError):
        corpus.gen_segment(-1)
    with pytest.raises(ParameterError):
        corpus.gen_schlegel(0)
    with pytest.raises(ParameterError):
        corpus.gen_grid(2, (2,))
    with pytest.raises(ParameterError):
        corpus.gen_stellar(corpus.square_path(), "[1]x[0,1]")


def test_cube_subdivisions_have_cube_targets():
    for e in corpus.cube_subdivisions():
        assert len(e.obj.target.facets()) == 1
