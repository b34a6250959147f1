"""Shared pytest setup: backend on the import path, no background scheduler"""
import os
import sys
from pathlib import Path

BACKEND = Path(__file__).resolve().parent / 'backend'
sys.path.insert(0, str(BACKEND))

os.environ.setdefault('LATTICESYM_SCHEDULER', 'false')
os.environ.setdefault('LATTICESYM_VERIFY_INLINE', 'true')

import pytest

from utils.partitions import parse


@pytest.fixture
def P():
    """Partition from its text form"""
    return parse


@pytest.fixture
def client():
    from app import app
    app.config['TESTING'] = True
    with app.test_client() as test_client:
        yield test_client
