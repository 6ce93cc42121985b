"""
Shared fixtures for the codec test suite.
"""

import io

import pytest

from app.commands.base_command import CommandContext
from app.config import TestingConfig
from app.core.params import derive_params

WORKED_MESSAGE = '1011'
WORKED_VT_WORD = '111001100'
WORKED_KERNEL_WORD = '11110011000'
WORKED_EXPANDED = '11110011000111000011'
WORKED_STRAND = 'TGGGCCTTAA'
WORKED_RECEIVED = 'TGGCCTTAA'


@pytest.fixture(autouse=True)
def testing_env(monkeypatch):
    """Every CLI run in the suite uses the testing configuration."""
    monkeypatch.setenv('DNACODEC_ENV', 'testing')


@pytest.fixture
def params10():
    return derive_params(10)


@pytest.fixture
def worked_strand():
    return WORKED_STRAND


class CliResult:
    def __init__(self, code, out, err):
        self.code = code
        self.out = out
        self.err = err

    def lines(self):
        return self.out.splitlines()

    def values(self):
        """key=value stdout lines as a dict."""
        return dict(line.split('=', 1) for line in self.lines() if '=' in line and ' ' not in line)


@pytest.fixture
def cli():
    """Run the CLI with captured text streams."""
    from app.cli import run

    def invoke(*argv):
        context = CommandContext(config=TestingConfig, stdout=io.StringIO(), stderr=io.StringIO())
        code = run([str(a) for a in argv], context)
        return CliResult(code, context.stdout.getvalue(), context.stderr.getvalue())

    return invoke
