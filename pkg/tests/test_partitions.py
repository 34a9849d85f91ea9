import unittest
from math import factorial

from src.combinatorics.partitions import (
    Partition,
    class_size,
    conjugate,
    content_product,
    dimension,
    enumerate_partitions,
    hook_product,
    z_of,
)
from src.exceptions import InvalidInputError


class TestPartition(unittest.TestCase):
    def test_parse_and_encode(self):
        self.assertEqual(Partition.parse("2,1,1"), Partition((2, 1, 1)))
        self.assertEqual(Partition.parse("1,2"), Partition((2, 1)))
        self.assertEqual(Partition.parse("0"), Partition(()))
        self.assertEqual(Partition.parse("").encode(), "0")
        self.assertEqual(Partition((3, 1)).encode(), "3,1")

    def test_rejects_bad_parts(self):
        with self.assertRaises(InvalidInputError):
            Partition((1, 2))
        with self.assertRaises(InvalidInputError):
            Partition((2, 0))
        with self.assertRaises(InvalidInputError):
            Partition.parse("2,x")

    def test_brick(self):
        self.assertEqual(Partition.brick(3), Partition((2, 2, 2)))
        self.assertEqual(Partition.brick(0), Partition(()))

    def test_coerce(self):
        self.assertEqual(Partition.coerce([1, 3]), Partition((3, 1)))
        self.assertEqual(Partition.coerce("2,2"), Partition((2, 2)))


class TestEnumeration(unittest.TestCase):
    def test_reverse_lex_order(self):
        self.assertEqual(
            [p.encode() for p in enumerate_partitions(4)],
            ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"],
        )

    def test_counts(self):
        self.assertEqual([len(enumerate_partitions(d)) for d in range(9)], [1, 1, 2, 3, 5, 7, 11, 15, 22])

    def test_negative_degree(self):
        with self.assertRaises(InvalidInputError):
            enumerate_partitions(-1)


class TestStatistics(unittest.TestCase):
    def test_conjugate(self):
        self.assertEqual(conjugate(Partition((3, 1))), Partition((2, 1, 1)))
        self.assertEqual(conjugate(Partition(())), Partition(()))

    def test_hooks_and_dimensions(self):
        self.assertEqual(hook_product(Partition((3, 1))), 8)
        self.assertEqual(dimension(Partition((2, 1))), 2)
        self.assertEqual(dimension(Partition((3, 2))), 5)
        self.assertEqual(dimension(Partition(())), 1)

    def test_z_and_class_size(self):
        self.assertEqual(z_of(Partition((2, 2))), 8)
        self.assertEqual(z_of(Partition((1, 1, 1))), 6)
        self.assertEqual(class_size(Partition((2, 2))), 3)
        for d in range(0, 11):
            self.assertEqual(sum(class_size(mu) for mu in enumerate_partitions(d)), factorial(d))

    def test_content_product(self):
        for N in range(1, 6):
            self.assertEqual(content_product(Partition((2, 1)), N), N * (N + 1) * (N - 1))
        self.assertEqual(content_product(Partition((1, 1, 1)), 2), 0)

    def test_content_product_of_conjugate(self):
        for d in range(0, 7):
            for lam in enumerate_partitions(d):
                for N in range(-3, 6):
                    self.assertEqual(content_product(conjugate(lam), N), (-1) ** d * content_product(lam, -N))


if __name__ == "__main__":
    unittest.main()
