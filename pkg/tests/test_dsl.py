import pytest

from subcount.dsl import Atom, Product, group_from_spec, parse_group_spec
from subcount.errors import GroupError, ParseError


def test_parse_atoms_and_products():
    assert parse_group_spec("Z(5)") == Atom("Z", (5,), 0)
    ast = parse_group_spec("A(4) x Z(5)")
    assert isinstance(ast, Product) and [str(f) for f in ast.factors] == ["A(4)", "Z(5)"]
    assert str(parse_group_spec(" PSL( 2 , 7 ) ")) == "PSL(2,7)"
    assert str(parse_group_spec("S(3)×Z(5)×Z(7)")) == "S(3) x Z(5) x Z(7)"


@pytest.mark.parametrize("text,offset", [
    ("PSL(2,banana)", 6),
    ("", 0),
    ("Z(5) x", 6),
    ("Y(3)", 0),
    ("Z(3,4)", 5),
    ("SD(7,3)", 6),
    ("Z(5) Z(3)", 5),
    ("Z(-1)", 2),
])
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_group_spec(text)
    assert info.value.offset == offset


def test_build():
    g = group_from_spec("A(4) x Z(5)")
    assert g.order == 60 and g.name == "A(4) x Z(5)"
    assert group_from_spec("SD(7,3,2)").order == 21
    assert group_from_spec("SL(2,3)").order == 24


def test_domain_errors_surface():
    with pytest.raises(GroupError):
        group_from_spec("Z(0)")
    with pytest.raises(GroupError):
        group_from_spec("SL(3,2)")
    with pytest.raises(GroupError):
        group_from_spec("PSL(2,6)")
