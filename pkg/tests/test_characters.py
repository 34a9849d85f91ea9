import os
import tempfile
import unittest
from fractions import Fraction

from src.combinatorics.characters import (
    CharacterTable,
    _murnaghan_nakayama,
    character,
    clear_character_cache,
    normalized_character,
)
from src.combinatorics.partitions import Partition, conjugate, enumerate_partitions, z_of
from src.models.db import CharacterStore


class TestCharacters(unittest.TestCase):
    def test_small_values(self):
        self.assertEqual(character(Partition((2, 1)), Partition((3,))), -1)
        self.assertEqual(character(Partition((2, 1)), Partition((2, 1))), 0)
        self.assertEqual(character(Partition((2, 1)), Partition((1, 1, 1))), 2)
        self.assertEqual(character(Partition((1, 1)), Partition((2,))), -1)
        self.assertEqual(character(Partition((2, 2)), Partition((2, 2))), 2)

    def test_normalized_character(self):
        # phi_lambda(mu) = |C_mu| chi / dim
        self.assertEqual(normalized_character(Partition((2, 1)), Partition((3,))), Fraction(-1))
        self.assertEqual(normalized_character(Partition((3,)), Partition((2, 1))), Fraction(3))

    def test_empty_partition(self):
        self.assertEqual(character(Partition(()), Partition(())), 1)

    def test_row_orthogonality_degree_five(self):
        parts = enumerate_partitions(5)
        table = CharacterTable.build(5)
        for lam in parts:
            for nu in parts:
                inner = sum((table[lam, mu] * table[nu, mu] / z_of(mu) for mu in parts), Fraction(0))
                self.assertEqual(inner, 1 if lam == nu else 0)

    def test_column_orthogonality(self):
        for d in range(1, 7):
            parts = enumerate_partitions(d)
            for mu in parts:
                for nu in parts:
                    total = sum((character(lam, mu) * character(lam, nu) for lam in parts), Fraction(0))
                    self.assertEqual(total, z_of(mu) if mu == nu else 0)

    def test_conjugate_twists_by_sign(self):
        for d in range(1, 7):
            for lam in enumerate_partitions(d):
                for mu in enumerate_partitions(d):
                    sign = (-1) ** (mu.weight - mu.length)
                    self.assertEqual(character(conjugate(lam), mu), sign * character(lam, mu))

    def test_clearing_the_cache_recomputes(self):
        before = CharacterTable.build(5).values
        clear_character_cache()
        self.assertEqual(_murnaghan_nakayama.cache_info().currsize, 0)
        self.assertEqual(CharacterTable.build(5).values, before)
        self.assertGreater(_murnaghan_nakayama.cache_info().currsize, 0)

    def test_to_json(self):
        payload = CharacterTable.build(3).to_json()
        self.assertEqual(payload["rows"], ["3", "2,1", "1,1,1"])
        self.assertEqual(payload["values"][1], [2, 0, -1])


class TestCharacterStore(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.store = CharacterStore(self.tmp.name)

    def tearDown(self):
        self.store.engine.dispose()
        self.tmp.cleanup()

    def test_round_trip_through_sqlite(self):
        self.assertIsNone(self.store.load(4))
        built = CharacterTable.build(4, store=self.store)
        self.assertTrue(os.path.exists(self.store.path))
        cached = self.store.load(4)
        self.assertEqual(cached, built.values)
        self.assertEqual(CharacterTable.build(4, store=self.store).to_json(), built.to_json())


if __name__ == "__main__":
    unittest.main()
