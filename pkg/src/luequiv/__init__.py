"""Equivalence of generalized Pauli matrix sets under unitary and conjugation actions."""
