"""Acceptance outcomes recorded during the run, printed by conftest."""

RESULTS = {}
