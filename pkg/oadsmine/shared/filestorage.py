"""Atomic file output.

Every artifact is first written to a temporary file in the destination
directory and then renamed over the target, so readers never see a partial
file.
"""

# standard modules
import os
import json
import tempfile
import contextlib

# self-defined modules
from oadsmine.shared.errors import DataError


@contextlib.contextmanager
def atomic_open(filename, newline=None):
    """open a text file for writing that only appears on successful close"""
    directory = os.path.dirname(os.path.abspath(filename))
    os.makedirs(directory, exist_ok=True)
    handle, tmp_name = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(filename))
    try:
        with open(handle, "w", encoding="utf-8", newline=newline) as tmp_file:
            yield tmp_file
        # mkstemp creates private files
        os.chmod(tmp_name, 0o644)
        os.replace(tmp_name, filename)
    except BaseException:
        # remove leftover temporary file
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def write_text(filename, text):
    with atomic_open(filename, newline="") as out_file:
        out_file.write(text)


def write_json(filename, data):
    """store data as sorted, indented JSON so reruns are byte-identical"""
    write_text(filename, json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n")


def load_json_data(filename):
    """read a JSON artifact written by an earlier stage"""
    with open(filename, encoding="utf-8") as in_file:
        try:
            return json.load(in_file)
        except ValueError as exc:
            raise DataError("corrupt JSON file {}: {}".format(filename, exc))
