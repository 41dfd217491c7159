"""Checks for finite factorization systems, fibrations, lenses and spans."""

import json
import os

from ._fibcat import Error, UsageError, commands
from . import _fibcat

__all__ = ["Error", "UsageError", "commands", "run", "check_all"]


def run(command, *inputs, span=False, interchange=False, output="", morphism=""):
    """Run one check and return its report as a dict."""
    paths = [os.fspath(p) for p in inputs]
    return json.loads(_fibcat.run(command, paths, span, interchange, os.fspath(output), morphism))


def check_all(fixtures):
    """Run every entry of ``<fixtures>/bundle.json``."""
    return json.loads(_fibcat.check_all(os.fspath(fixtures)))
