"""Python bindings for the rainbow connection toolkit."""

import json as _json

from ._rainbow import *  # noqa: F401,F403
from ._rainbow import _audit_lower_bound_json


def audit_lower_bound(witness, coloring):
    """Replay the src >= b argument on a (b-1)-coloring; returns the trace as a dict."""
    return _json.loads(_audit_lower_bound_json(witness, coloring))
