import json
import os

import pytest
from hypothesis import settings

import mlvlab


# Exact sympy arithmetic is slow enough to trip the default deadline
settings.register_profile('mlvlab', deadline=None, max_examples=50)
settings.load_profile('mlvlab')


VARIETIES_DIR = os.path.join(os.path.dirname(mlvlab.__file__), 'data', 'varieties')


@pytest.fixture
def variety_path():
    def _path(name):
        return os.path.join(VARIETIES_DIR, '%s.json' % name)
    return _path


@pytest.fixture
def write_json(tmp_path):
    def _write(name, document):
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return str(path)
    return _write


@pytest.fixture
def run_cli(capsys):
    """Run the command line and return ``(exit code, stdout, stderr)``."""
    from mlvlab.cli import main

    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return _run
