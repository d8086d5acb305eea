"""Python bindings for the transcert certificate engine."""

import json

from . import _transcert

__version__ = _transcert.tool_version
SCHEMA_VERSION = _transcert.schema_version
TranscertError = _transcert.TranscertError


class CommandResult:
    def __init__(self, exit_code, text):
        self.exit_code = exit_code
        self.text = text
        self.certificate = json.loads(text)

    @property
    def ok(self):
        return self.exit_code == 0

    @property
    def result(self):
        return self.certificate.get("result")

    def __repr__(self):
        return f"CommandResult(exit_code={self.exit_code})"


def commands():
    return list(_transcert.command_names())


def run(command, payload, *, seed=0, prec=20, height=2, max_points=1_000_000, strategy="exhaustive"):
    """Run a subcommand on a JSON-serializable payload and return its certificate."""
    text = payload if isinstance(payload, str) else json.dumps(payload)
    code, out = _transcert.run_command(command, text, seed, prec, height, max_points, strategy)
    return CommandResult(code, out)


def verify(certificate):
    """Re-check a certificate (dict or JSON text). Returns a CommandResult."""
    text = certificate if isinstance(certificate, str) else json.dumps(certificate)
    code, out = _transcert.verify(text)
    return CommandResult(code, out)


def theta(r, d):
    return int(_transcert.theta(r, d))


def relation_lattice(values):
    """Basis columns of the multiplicative relation lattice of rationals given as int or 'a/b'."""
    cols = _transcert.relation_lattice([str(v) for v in values])
    return [[int(x) for x in col] for col in cols]


__all__ = ["CommandResult", "TranscertError", "commands", "run", "verify", "theta", "relation_lattice", "SCHEMA_VERSION"]
