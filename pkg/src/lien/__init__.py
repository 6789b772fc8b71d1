"""Finite-level liens, their extensions and splitting."""
