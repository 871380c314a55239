"""Exact Jeffrey-Kirwan residues, inverse Laplace transforms and jump formulas."""

import json

from ._core import JkresError, ParseError, commands, run_json, run_text

__all__ = ["JkresError", "ParseError", "commands", "run", "run_text"]


def _dump(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def run(command, problem, **options):
    """Run ``command`` on a problem (dict or JSON text) and return the result as a dict.

    Keyword options use the same keys as the ``options`` object of a problem
    file, e.g. ``delta_witness="2,1"`` or ``wall=[0]``.
    """
    return json.loads(run_json(command, _dump(problem), json.dumps(options)))
