"""Symplectic Pauli algebra: labels, weights, products, and phases."""

from __future__ import annotations

import random

import pytest

from qshadow.paulis import (
    PauliElement,
    PhasedPauli,
    format_pauli,
    multiply,
    parse_pauli,
    symplectic_product,
    weight,
    weight_y,
)


def _single(label: str) -> PhasedPauli:
    return parse_pauli(label)


class TestParseFormat:
    def test_round_trip_all_two_qubit_labels(self):
        letters = "IXYZ"
        for s1 in "+-":
            for a in letters:
                for b in letters:
                    text = s1 + a + b
                    p = parse_pauli(text)
                    assert format_pauli(p) == text

    def test_default_sign_is_positive(self):
        assert parse_pauli("XZ") == parse_pauli("+XZ")

    def test_bit_layout(self):
        p = parse_pauli("+XIZY")
        # qubit i sits in bit i: X at 0, Z at 2, Y (=both) at 3
        assert p.element.x_bits == 0b1001
        assert p.element.z_bits == 0b1100

    def test_rejects_bad_character(self):
        with pytest.raises(ValueError, match="position 1"):
            parse_pauli("XQ")

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            parse_pauli("+")


class TestWeights:
    def test_weight_counts_non_identity_factors(self):
        assert weight(parse_pauli("IXYZI").element) == 3
        assert weight(PauliElement.identity(4)) == 0

    def test_weight_y_counts_overlap(self):
        assert weight_y(parse_pauli("IXYZY").element) == 2


class TestSymplecticProduct:
    def test_single_qubit_anticommutations(self):
        x = parse_pauli("X").element
        y = parse_pauli("Y").element
        z = parse_pauli("Z").element
        assert symplectic_product(x, z) == 1
        assert symplectic_product(x, y) == 1
        assert symplectic_product(y, z) == 1
        assert symplectic_product(x, x) == 0

    def test_bilinear_in_products(self, pyrng: random.Random):
        n = 4
        for _ in range(200):
            a = PauliElement(n, pyrng.getrandbits(n), pyrng.getrandbits(n))
            b = PauliElement(n, pyrng.getrandbits(n), pyrng.getrandbits(n))
            c = PauliElement(n, pyrng.getrandbits(n), pyrng.getrandbits(n))
            ab = multiply(PhasedPauli(a), PhasedPauli(b)).element
            lhs = symplectic_product(ab, c)
            rhs = (symplectic_product(a, c) + symplectic_product(b, c)) % 2
            assert lhs == rhs


class TestMultiply:
    def test_single_qubit_table(self):
        # XZ = -iY, ZX = +iY, XY = iZ, YX = -iZ, YZ = iX, ZY = -iX
        cases = {
            ("X", "Z"): ("Y", -1j),
            ("Z", "X"): ("Y", 1j),
            ("X", "Y"): ("Z", 1j),
            ("Y", "X"): ("Z", -1j),
            ("Y", "Z"): ("X", 1j),
            ("Z", "Y"): ("X", -1j),
        }
        for (a, b), (prod, phase) in cases.items():
            got = multiply(_single(a), _single(b))
            assert got.element == _single(prod).element, (a, b)
            assert got.phase == phase, (a, b)

    def test_squares_are_identity(self):
        for label in ("X", "Y", "Z", "XYZY", "-ZZZZ"):
            p = parse_pauli(label)
            sq = multiply(p, p)
            assert sq.element.is_identity()
            assert sq.phase == 1

    def test_weight_product_identity_mod_two(self, pyrng: random.Random):
        # wt(E1 E2) = wt(E1) + wt(E2) + <E1, E2> mod 2
        n = 5
        for _ in range(300):
            a = PauliElement(n, pyrng.getrandbits(n), pyrng.getrandbits(n))
            b = PauliElement(n, pyrng.getrandbits(n), pyrng.getrandbits(n))
            ab = multiply(PhasedPauli(a), PhasedPauli(b)).element
            lhs = weight(ab) % 2
            rhs = (weight(a) + weight(b) + symplectic_product(a, b)) % 2
            assert lhs == rhs

    def test_associativity_with_phases(self, pyrng: random.Random):
        n = 3
        phases = (1 + 0j, -1 + 0j, 1j, -1j)
        for _ in range(200):
            ps = [
                PhasedPauli(
                    PauliElement(n, pyrng.getrandbits(n), pyrng.getrandbits(n)),
                    pyrng.choice(phases),
                )
                for _ in range(3)
            ]
            left = multiply(multiply(ps[0], ps[1]), ps[2])
            right = multiply(ps[0], multiply(ps[1], ps[2]))
            assert left == right


class TestPhasedPauli:
    def test_rejects_non_unit_phase(self):
        with pytest.raises(ValueError):
            PhasedPauli(PauliElement.identity(1), 2 + 0j)

    def test_sign_of_hermitian(self):
        assert parse_pauli("-XZ").sign == -1
        with pytest.raises(ValueError):
            multiply(_single("X"), _single("Z")).sign

    def test_neg_flips_phase(self):
        p = parse_pauli("+XY")
        assert (-p).phase == -1
        assert (-p).element == p.element
