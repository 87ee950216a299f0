"""Acceptance Tests."""
