from __future__ import annotations

from pathlib import Path

import pytest

from lambdadl.cli.session import Session
from lambdadl.config import BudgetConfig, EvalConfig
from lambdadl.dl.kb import KnowledgeBase
from lambdadl.dl.parser import parse_kb
from lambdadl.events import events
from lambdadl.reasoner.service import reset_reasoners

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def sample(name: str) -> Path:
    return SAMPLES / name


@pytest.fixture(autouse=True)
def _fresh_state():
    reset_reasoners()
    events.clear()
    yield
    reset_reasoners()


@pytest.fixture(scope="session")
def music_kb() -> KnowledgeBase:
    return parse_kb(sample("music.kb").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def infinite_kb() -> KnowledgeBase:
    return parse_kb(sample("infinite.kb").read_text(encoding="utf-8"))


@pytest.fixture
def music_session(music_kb: KnowledgeBase) -> Session:
    return Session(kb=music_kb, cfg=EvalConfig(step_limit=10_000), budget=BudgetConfig())
