"""
Testes Unitários - Módulo de Numerais
"""

import pytest
from hypothesis import given, strategies as st

from src.core.errors import CapacityError, InvalidBaseError, InvalidDigitError
from src.core.numeral import (
    MAX_WORD,
    DigitString,
    digit_length,
    format_numeral,
    parse_numeral,
    to_digits,
    to_nat,
)


class TestToDigits:
    def test_base_three_example(self):
        assert to_digits(80, 3).digits == (2, 2, 2, 2)

    def test_zero_is_single_digit(self):
        assert to_digits(0, 10).digits == (0,)

    def test_twenty_in_base_three(self):
        assert to_digits(20, 3).digits == (2, 0, 2)

    def test_invalid_base(self):
        with pytest.raises(InvalidBaseError, match="Base inválida"):
            to_digits(5, 1)

    def test_rejects_values_above_word(self):
        with pytest.raises(CapacityError):
            to_digits(MAX_WORD + 1, 2)

    def test_max_word_fits(self):
        assert to_nat(to_digits(MAX_WORD, 16)) == MAX_WORD


class TestToNat:
    def test_write_value_example(self):
        assert to_nat(DigitString(3, (1, 0, 1))) == 10

    def test_zero(self):
        assert to_nat(DigitString(7, (0,))) == 0

    def test_read_value_example(self):
        assert to_nat(DigitString(3, (2, 0, 2))) == 20

    def test_non_canonical_accepted(self):
        assert to_nat(DigitString(3, (2, 0, 2, 0, 0))) == 20

    def test_digit_out_of_range(self):
        with pytest.raises(InvalidDigitError, match="fora do intervalo"):
            DigitString(3, (1, 3))

    def test_overflow(self):
        with pytest.raises(CapacityError):
            to_nat(DigitString(2, (1,) * 65))


class TestDigitString:
    def test_empty_rejected(self):
        with pytest.raises(InvalidDigitError):
            DigitString(10, ())

    def test_canonical_flags(self):
        assert DigitString(3, (2, 0, 2)).is_canonical
        assert DigitString(3, (0,)).is_canonical
        assert not DigitString(3, (2, 0)).is_canonical

    def test_normalized(self):
        assert DigitString(3, (2, 0, 0)).normalized().digits == (2,)
        assert DigitString(3, (0, 0)).normalized().digits == (0,)

    def test_bracket_notation(self):
        assert str(to_digits(20, 3)) == "[202]_3"


class TestTextualSyntax:
    def test_juxtaposed_digits(self):
        assert parse_numeral("202", 3).digits == (2, 0, 2)

    def test_comma_separated(self):
        assert parse_numeral("2,0,2", 3).digits == (2, 0, 2)

    def test_large_base_requires_commas(self):
        assert parse_numeral("1,15", 16).digits == (15, 1)
        assert parse_numeral("12", 16).digits == (12,)

    def test_malformed(self):
        with pytest.raises(InvalidDigitError, match="malformado"):
            parse_numeral("2x", 10)

    @pytest.mark.parametrize("text", ["\u00b2", "1,\u00b2", "\u0663", "1\uff12"])
    def test_unicode_digits_rejected(self, text):
        # isdigit aceita sobrescritos e dígitos de outros alfabetos
        with pytest.raises(InvalidDigitError, match="malformado"):
            parse_numeral(text, 16 if "," in text else 10)

    def test_digit_too_large_for_base(self):
        with pytest.raises(InvalidDigitError):
            parse_numeral("3", 3)

    def test_format_most_significant_first(self):
        assert format_numeral(to_digits(80, 3)) == "2222"
        assert format_numeral(to_digits(31, 16)) == "1,15"


class TestProperties:
    @given(st.integers(min_value=0, max_value=10**9), st.integers(min_value=2, max_value=64))
    def test_round_trip(self, n, base):
        assert to_nat(to_digits(n, base)) == n

    @given(st.integers(min_value=0, max_value=10**9), st.integers(min_value=2, max_value=64))
    def test_canonical_output(self, n, base):
        assert to_digits(n, base).is_canonical

    @given(st.integers(min_value=1, max_value=10**9), st.integers(min_value=2, max_value=64))
    def test_length_law(self, n, base):
        exponent = 0
        while base ** (exponent + 1) <= n:
            exponent += 1
        assert to_digits(n, base).length == exponent + 1 == digit_length(n, base)

    @given(st.integers(min_value=0, max_value=10**9), st.integers(min_value=2, max_value=36))
    def test_text_round_trip(self, n, base):
        numeral = to_digits(n, base)
        assert parse_numeral(format_numeral(numeral), base) == numeral
