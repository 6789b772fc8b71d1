"""Closed-form aut-split criteria for simple groups of Lie type."""
