"""Shared store for acceptance outcomes, printed by the terminal-summary hook."""

RESULTS = {}


def record(number, title, passed, detail=""):
    RESULTS[number] = (title, bool(passed), detail)
