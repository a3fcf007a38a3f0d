"""Bundled example problems, loadable by name."""

from __future__ import annotations

from importlib import resources

from ..config import ProblemConfig, loads


def names() -> list:
    return sorted(p.name[:-5] for p in resources.files(__name__).iterdir() if p.name.endswith(".json"))


def path(name: str):
    return resources.files(__name__) / f"{name}.json"


def text(name: str) -> str:
    return path(name).read_text(encoding="utf-8")


def load(name: str) -> ProblemConfig:
    return loads(text(name))
