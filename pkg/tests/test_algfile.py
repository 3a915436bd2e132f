import pytest

from liemult.algfile import parse_algebra, serialize_algebra
from liemult.catalog import entries, standard_filiform
from liemult.errors import (
    AlgebraFileError,
    DuplicateBracket,
    FieldSpecError,
    JacobiViolation,
)
from liemult.fields import PrimeField

EXAMPLE_N4 = """\
lie-algebra v1
field Q
dim 4
bracket 1 2 3 1
bracket 1 3 4 1
"""


def test_parse_the_n4_filiform_file():
    L = parse_algebra(EXAMPLE_N4)
    assert L.structure_constants() == standard_filiform(4).structure_constants()


def test_parse_with_comments_blank_lines_and_labels():
    text = """
# a comment
lie-algebra v1

field Q          # trailing comment
dim 3
label 3 z
bracket 1 2 3 1/2
"""
    L = parse_algebra(text)
    assert L.labels == ("x1", "x2", "z")
    (i, j, k, c) = L.structure_constants()[0]
    assert (i, j, k) == (1, 2, 3) and c.numerator == 1 and c.denominator == 2


def test_round_trip_catalog():
    for entry in entries():
        text = serialize_algebra(entry.algebra)
        again = parse_algebra(text)
        assert again.structure_constants() == entry.algebra.structure_constants()
        assert again.n == entry.algebra.n and again.field == entry.algebra.field


def test_serialize_deterministic():
    L = standard_filiform(6)
    assert serialize_algebra(L) == serialize_algebra(standard_filiform(6))


def test_round_trip_over_prime_field():
    L = standard_filiform(4, field=PrimeField(7))
    again = parse_algebra(serialize_algebra(L))
    assert again.field == PrimeField(7)
    assert again.structure_constants() == L.structure_constants()


def test_missing_header():
    with pytest.raises(AlgebraFileError):
        parse_algebra("field Q\ndim 2\n")


def test_unsupported_version():
    with pytest.raises(AlgebraFileError) as exc:
        parse_algebra("lie-algebra v9\nfield Q\ndim 2\n")
    assert "version" in str(exc.value)


def test_rational_literal_in_prime_field():
    text = "lie-algebra v1\nfield GF(7)\ndim 3\nbracket 1 2 3 1/2\n"
    with pytest.raises(AlgebraFileError) as exc:
        parse_algebra(text)
    assert "line 4" in str(exc.value)
    assert "rational literal" in str(exc.value)


def test_duplicate_bracket_key():
    text = "lie-algebra v1\nfield Q\ndim 3\nbracket 1 2 3 1\nbracket 1 2 3 2\n"
    with pytest.raises(DuplicateBracket) as exc:
        parse_algebra(text)
    assert "(1, 2, 3)" in str(exc.value)


def test_char_two_field_needs_override():
    text = "lie-algebra v1\nfield GF(2)\ndim 2\n"
    with pytest.raises(FieldSpecError):
        parse_algebra(text)
    L = parse_algebra(text, allow_char_two=True)
    assert L.field.characteristic == 2


def test_composite_modulus_rejected():
    with pytest.raises(FieldSpecError):
        parse_algebra("lie-algebra v1\nfield GF(9)\ndim 2\n")


def test_bad_indices_carry_line_numbers():
    with pytest.raises(AlgebraFileError) as exc:
        parse_algebra("lie-algebra v1\nfield Q\ndim 3\nbracket 2 1 3 1\n")
    assert "line 4" in str(exc.value)
    with pytest.raises(AlgebraFileError):
        parse_algebra("lie-algebra v1\nfield Q\ndim 3\nbracket 1 2 9 1\n")


def test_unknown_directive():
    with pytest.raises(AlgebraFileError):
        parse_algebra("lie-algebra v1\nfield Q\ndim 2\nfrobnicate 1\n")


def test_missing_field_or_dim():
    with pytest.raises(AlgebraFileError):
        parse_algebra("lie-algebra v1\ndim 2\n")
    with pytest.raises(AlgebraFileError):
        parse_algebra("lie-algebra v1\nfield Q\n")
    with pytest.raises(AlgebraFileError):
        parse_algebra("lie-algebra v1\nfield Q\nbracket 1 2 3 1\ndim 3\n")


def test_jacobi_violation_propagates():
    text = (
        "lie-algebra v1\nfield Q\ndim 3\n"
        "bracket 1 2 3 1\nbracket 1 3 3 1\nbracket 2 3 1 1\n"
    )
    with pytest.raises(JacobiViolation) as exc:
        parse_algebra(text)
    assert exc.value.triple == (1, 2, 3)


def test_zero_coefficients_normalized_away():
    text = "lie-algebra v1\nfield Q\ndim 3\nbracket 1 2 3 0\n"
    L = parse_algebra(text)
    assert L.is_abelian()
    assert serialize_algebra(L) == "lie-algebra v1\nfield Q\ndim 3\n"
