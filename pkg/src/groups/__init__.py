"""Permutations, permutation groups, element tables and homomorphisms."""
