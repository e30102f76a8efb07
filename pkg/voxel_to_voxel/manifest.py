# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import os

from dataclasses import dataclass, replace

from .errors import DatasetError

COLUMNS = ("id", "clip", "flow", "seg", "color")

# placeholder for a ground truth a sample does not carry
MISSING = "-"


@dataclass(frozen=True)
class ManifestEntry:
    id: str
    clip: str
    flow: str
    seg: str
    color: str

    def with_flow(self, flow):
        return replace(self, flow=flow)


def _relative(path, base):
    if path == MISSING:
        return path
    return os.path.relpath(os.path.abspath(path), base)


def read_manifest(path):
    """
    One sample per line, tab separated: id, clip, flow, seg, color.
    Relative tensor paths resolve against the manifest's directory.
    """
    base = os.path.dirname(os.path.abspath(path))
    entries = []
    with open(path, "r", encoding="utf-8") as f:
        for n_line, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            fields = line.split("\t")
            if len(fields) != len(COLUMNS):
                raise DatasetError(
                    "\n Malformed manifest line {} in '{}': expected {} tab separated fields, got {} \n".format(
                        n_line, path, len(COLUMNS), len(fields)
                    )
                )
            sample_id, *paths = fields
            paths = [
                p if p == MISSING else os.path.normpath(os.path.join(base, p))
                for p in paths
            ]
            entries.append(ManifestEntry(sample_id, *paths))
    return entries


def write_manifest(entries, path):
    base = os.path.dirname(os.path.abspath(path))
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for entry in entries:
            paths = [_relative(getattr(entry, column), base) for column in COLUMNS[1:]]
            # forward slashes keep manifests portable between platforms
            paths = [p.replace(os.sep, "/") for p in paths]
            f.write("\t".join([entry.id] + paths) + "\n")
    return path
