#! /usr/bin/env python3

# standard modules
import os
import re
import csv
import logging
import dataclasses

# self-defined modules
from oadsmine.shared.errors import ManifestError


MONTH_RE = re.compile(r"^(\d{4})-(\d{2})$")
# arXiv style version suffix, e.g. 0704.0001v2
VERSION_SUFFIX_RE = re.compile(r"^(.+?)v(\d+)$")


@dataclasses.dataclass(frozen=True, order=True)
class Month:
    year: int
    month: int

    def __post_init__(self):
        if not 1 <= self.month <= 12:
            raise ValueError("month out of range: {}".format(self.month))

    @classmethod
    def parse(cls, text):
        match = MONTH_RE.match(text.strip()) if isinstance(text, str) else None
        if match is None:
            raise ValueError("invalid month {!r}, expected YYYY-MM".format(text))
        return cls(int(match.group(1)), int(match.group(2)))

    def __str__(self):
        return "{:04d}-{:02d}".format(self.year, self.month)


@dataclasses.dataclass(frozen=True)
class CorpusWindow:
    start: Month
    end: Month

    @classmethod
    def from_config(cls, config):
        return cls(Month.parse(config['CORPUS']['window_start']),
                   Month.parse(config['CORPUS']['window_end']))

    def __contains__(self, month):
        return self.start <= month <= self.end


DEFAULT_WINDOW = CorpusWindow(Month(2007, 4), Month(2021, 12))


@dataclasses.dataclass(frozen=True, order=True)
class DocumentId:
    base_id: str
    version: int = 1

    def __post_init__(self):
        if not self.base_id or any(char.isspace() for char in self.base_id):
            raise ValueError("invalid base id {!r}".format(self.base_id))
        if self.version < 1:
            raise ValueError("version must be positive, got {}".format(self.version))

    @classmethod
    def parse(cls, text, version=None):
        """split an id like 0704.0001v2; an explicit version must agree with the suffix"""
        match = VERSION_SUFFIX_RE.match(text)
        if match is not None:
            base_id, suffix_version = match.group(1), int(match.group(2))
            if version is not None and version != suffix_version:
                raise ValueError("version {} conflicts with id {}".format(version, text))
            return cls(base_id, suffix_version)
        return cls(text, 1 if version is None else version)

    def __str__(self):
        return "{}v{}".format(self.base_id, self.version)


@dataclasses.dataclass(frozen=True)
class ManifestEntry:
    doc_id: DocumentId
    month: Month
    path: str


@dataclasses.dataclass(frozen=True)
class CorpusManifest:
    entries: tuple = ()

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


class ManifestDecoder():
    """decode the tab separated manifest: id, version, YYYY-MM, relative path"""

    def __init__(self, base_dir):
        self.base_dir = base_dir

    def __extractRowData(self, row, line_number):
        if len(row) != 4:
            raise ManifestError("expected 4 tab-separated fields, got {}".format(len(row)), line_number)
        raw_id, raw_version, raw_month, raw_path = [field.strip() for field in row]
        if not raw_path:
            raise ManifestError("empty document path", line_number)

        # convert data types
        try:
            version = int(raw_version) if raw_version else None
            doc_id = DocumentId.parse(raw_id, version)
        except ValueError as exc:
            raise ManifestError("invalid document id: {}".format(exc), line_number)
        try:
            month = Month.parse(raw_month)
        except ValueError as exc:
            raise ManifestError(str(exc), line_number)
        return ManifestEntry(doc_id, month, os.path.join(self.base_dir, raw_path))

    def decode(self, lines):
        entries = []
        reader = csv.reader(lines, delimiter="\t", quoting=csv.QUOTE_NONE)
        for row in reader:
            # skip blank and comment lines
            if not row or not "".join(row).strip() or row[0].lstrip().startswith("#"):
                continue
            entries.append(self.__extractRowData(row, reader.line_num))
        return CorpusManifest(tuple(entries))


def load_manifest(path):
    """read all manifest records in file order, without touching the documents"""
    if not os.path.isfile(path):
        raise ManifestError("manifest {} not found".format(path))
    with open(path, encoding="utf-8", newline="") as manifest_file:
        manifest = ManifestDecoder(os.path.dirname(os.path.abspath(path))).decode(manifest_file)
    logging.getLogger().info("loaded manifest {} ({} entries)".format(path, len(manifest)))
    return manifest


def select_latest_versions(manifest):
    """keep the highest version of each article at its original position"""
    seen = set()
    duplicates = []
    for entry in manifest:
        if entry.doc_id in seen:
            duplicates.append(str(entry.doc_id))
        seen.add(entry.doc_id)
    if duplicates:
        raise ManifestError("duplicate document versions: {}".format(", ".join(sorted(set(duplicates)))))

    latest = {}
    for entry in manifest:
        best = latest.get(entry.doc_id.base_id)
        if best is None or entry.doc_id.version > best.doc_id.version:
            latest[entry.doc_id.base_id] = entry
    return CorpusManifest(tuple(entry for entry in manifest
                                if latest[entry.doc_id.base_id] is entry))


def filter_window(manifest, window=DEFAULT_WINDOW):
    """drop entries published outside the corpus window; returns (manifest, rejected count)"""
    kept = tuple(entry for entry in manifest if entry.month in window)
    rejected = len(manifest) - len(kept)
    if rejected:
        logging.getLogger().warning("{} document(s) outside window {} to {} rejected".format(
            rejected, window.start, window.end))
    return CorpusManifest(kept), rejected
