#! /usr/bin/env python3

# standard modules
import dataclasses

# self-defined modules
from oadsmine.corpus.manifest import DocumentId, Month
from oadsmine.shared.errors import DocumentReadError
from oadsmine.shared.workerpool import bounded_map


@dataclasses.dataclass(frozen=True)
class Document:
    id: DocumentId
    month: Month
    text: str


def read_document(entry):
    """load the plain text of one manifest entry; the file is opened read-only"""
    try:
        # newline="" keeps the text exactly as stored so mention offsets refer to the file content
        with open(entry.path, encoding="utf-8", newline="") as text_file:
            text = text_file.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise DocumentReadError(entry.doc_id, exc)
    return Document(entry.doc_id, entry.month, text)


def _read_or_fail(entry):
    try:
        return entry, read_document(entry), None
    except DocumentReadError as exc:
        return entry, None, exc


def iter_documents(manifest, workers=1):
    """yield (entry, document, error) in manifest order; exactly one of document and error is set"""
    if workers <= 1:
        for entry in manifest:
            yield _read_or_fail(entry)
        return
    yield from bounded_map(_read_or_fail, manifest, workers)
