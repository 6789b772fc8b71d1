"""Automorphism groups and the aut-split test."""
