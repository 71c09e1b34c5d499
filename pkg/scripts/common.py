"""Dataclass configs for the experiment scripts, filled from argv."""

import argparse
import dataclasses
import json
import sys


def parse_config(cls, argv=None, description=None):
    """One ``--field`` flag per dataclass field, typed by its default."""
    p = argparse.ArgumentParser(description=description or cls.__doc__)
    for f in dataclasses.fields(cls):
        flag = "--" + f.name.replace("_", "-")
        if f.type in (bool, "bool"):
            p.add_argument(flag, action="store_true", default=f.default)
        else:
            p.add_argument(flag, type=type(f.default), default=f.default)
    return cls(**vars(p.parse_args(argv)))


def emit(rows, as_json: bool, columns):
    if as_json:
        json.dump(rows, sys.stdout, sort_keys=True, indent=1)
        print()
        return
    widths = [max(len(c), *(len(str(r[c])) for r in rows)) if rows else len(c) for c in columns]
    print("  ".join(c.rjust(w) for c, w in zip(columns, widths)))
    for r in rows:
        print("  ".join(str(r[c]).rjust(w) for c, w in zip(columns, widths)))
