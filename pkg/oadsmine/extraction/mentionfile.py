"""Line-delimited mentions file.

One mention per line, tab separated:
doc_id, month, uri, span_start, span_end, context (JSON string), implicit (0/1).
Run information that the report stage needs (publications per month, so that
documents without URIs still count) is stored in a JSON sidecar next to it.
"""

# standard modules
import os
import json
import logging

# self-defined modules
from oadsmine.corpus.manifest import DocumentId, Month
from oadsmine.extraction.extractor import UriMention
from oadsmine.shared.errors import DataError
from oadsmine.shared.filestorage import atomic_open, write_json, load_json_data


FIELD_COUNT = 7


def meta_path(mentions_path):
    return mentions_path + ".meta.json"


def encode_mention(mention):
    return "\t".join([
        str(mention.doc_id),
        str(mention.month),
        mention.uri,
        str(mention.span[0]),
        str(mention.span[1]),
        json.dumps(mention.context, ensure_ascii=False),
        "1" if mention.implicit_scheme else "0",
    ])


def decode_mention(line, line_number=None):
    fields = line.rstrip("\n").split("\t")
    if len(fields) != FIELD_COUNT:
        raise DataError("mentions line {}: expected {} fields, got {}".format(
            line_number, FIELD_COUNT, len(fields)))
    try:
        return UriMention(
            doc_id=DocumentId.parse(fields[0]),
            uri=fields[2],
            context=json.loads(fields[5]),
            span=(int(fields[3]), int(fields[4])),
            month=Month.parse(fields[1]),
            implicit_scheme=fields[6] == "1",
        )
    except ValueError as exc:
        raise DataError("mentions line {}: {}".format(line_number, exc))


class MentionWriter():
    """write mentions atomically; the file appears when the writer is closed"""

    def __init__(self, filename):
        self.filename = filename
        self.count = 0
        self._context = atomic_open(filename, newline="")
        self._file = None

    def __enter__(self):
        self._file = self._context.__enter__()
        return self

    def __exit__(self, *exc_info):
        return self._context.__exit__(*exc_info)

    def write(self, mention):
        self._file.write(encode_mention(mention) + "\n")
        self.count += 1


def iter_mentions(filename):
    """mentions in file order, one line at a time"""
    if not os.path.isfile(filename):
        raise DataError("mentions file {} not found".format(filename))
    count = 0
    with open(filename, encoding="utf-8", newline="") as mentions_file:
        for line_number, line in enumerate(mentions_file, start=1):
            if line.strip():
                count += 1
                yield decode_mention(line, line_number)
    logging.getLogger().info("read {} mention(s) from {}".format(count, filename))


def read_mentions(filename):
    return list(iter_mentions(filename))


def write_meta(mentions_path, meta):
    write_json(meta_path(mentions_path), meta)


def read_meta(mentions_path):
    filename = meta_path(mentions_path)
    if not os.path.isfile(filename):
        raise DataError("mentions metadata {} not found; rerun extract".format(filename))
    return load_json_data(filename)
