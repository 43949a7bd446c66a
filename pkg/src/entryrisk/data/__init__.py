"""Bundled Electroputere S.A. case-study fixtures."""

from importlib.resources import files


def path(name: str):
    return files(__name__) / name
