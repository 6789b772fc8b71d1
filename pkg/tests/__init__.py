"""Tests package for the AI MidProject."""

