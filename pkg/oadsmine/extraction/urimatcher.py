"""URI detection in PDF-extracted text.

A candidate is a scheme followed by ``://`` or a bare ``www.`` host, then a
run of non-space characters. A URI broken over a line (no space before the
break, continuation starting with a lowercase letter, digit or URI
punctuation) is matched as one candidate; the break is removed when the
candidate is turned into a URI. A break right after a complete host is
never joined, the next line is prose then.
"""

# standard modules
import re
import dataclasses

# self-defined modules
from oadsmine.shared.errors import UriParseError
from oadsmine.scope.uriparts import is_complete_host, parse_uri


_URI_START = (
    r"(?:"
    r"(?<![\w.+\-])[a-zA-Z][a-zA-Z0-9+.\-]*://"   # explicit scheme
    r"|"
    r"(?<![\w.@/\-])[wW]{3}\d{0,3}\."             # bare www host
    r")"
)
_URI_BODY = r"[^\s<>\"{}|\\^`“”«»]+"
_URI_WRAP = r"(?<![,;:'\")\]}!?.])\r?\n(?=[a-z0-9/_\-.~%?#=&+])"

URI_RE = re.compile(_URI_START + _URI_BODY + r"(?:" + _URI_WRAP + _URI_BODY + r")*")
LINEBREAK_RE = re.compile(r"\r?\n")
SCHEME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9+.\-]*://")

TRAILING_CHARS = ".,;:'\"!?’"
CLOSING_BRACKETS = {")": "(", "]": "[", "}": "{"}


@dataclasses.dataclass(frozen=True)
class UriCandidate:
    start: int
    end: int
    raw: str
    uri: str
    implicit_scheme: bool


def trim_trailing(candidate):
    """strip trailing punctuation and closing brackets that have no opener inside the URI"""
    while candidate:
        last = candidate[-1]
        if last in TRAILING_CHARS:
            candidate = candidate[:-1]
        elif last in CLOSING_BRACKETS and \
                candidate.count(CLOSING_BRACKETS[last]) < candidate.count(last):
            candidate = candidate[:-1]
        else:
            break
    return candidate


def repair(raw):
    """remove line breaks from a matched candidate"""
    return LINEBREAK_RE.sub("", raw)


def with_scheme(text):
    """(uri, implicit_scheme); bare www hosts get http://"""
    implicit = SCHEME_RE.match(text) is None
    return ("http://" + text if implicit else text), implicit


def join_keeps_authority(before_break):
    """false if the text before a line break already ends in a complete host"""
    uri, _ = with_scheme(repair(before_break))
    try:
        parts = parse_uri(uri)
    except UriParseError:
        return True
    if parts.path or parts.query or parts.fragment or uri.endswith(("?", "#")):
        return True
    return not (parts.is_ipv6 or is_complete_host(parts.host))


def cut_at_host_break(raw):
    """raw up to the first line break that would extend a complete host"""
    for match in LINEBREAK_RE.finditer(raw):
        if not join_keeps_authority(raw[:match.start()]):
            return raw[:match.start()]
    return raw


def iter_uri_matches(text):
    """(start, raw) of every candidate in text order"""
    position = 0
    while True:
        match = URI_RE.search(text, position)
        if match is None:
            return
        raw = cut_at_host_break(match.group(0))
        yield match.start(), raw
        position = match.start() + len(raw)


def canonical_uri(raw):
    """turn raw matched text into (uri, implicit_scheme); None if nothing parseable remains"""
    uri, implicit = with_scheme(trim_trailing(repair(raw)))
    try:
        parse_uri(uri)
    except UriParseError:
        return None
    return uri, implicit


def find_uri_candidates(text):
    candidates = []
    for start, raw in iter_uri_matches(text):
        result = canonical_uri(raw)
        if result is None:
            continue
        candidates.append(UriCandidate(start, start + len(raw), raw, result[0], result[1]))
    return candidates


def substitute_uris(text, replace):
    """text with every matched candidate replaced by replace(raw)"""
    pieces, position = [], 0
    for start, raw in iter_uri_matches(text):
        pieces.append(text[position:start])
        pieces.append(replace(raw))
        position = start + len(raw)
    pieces.append(text[position:])
    return "".join(pieces)


def repair_linewrap(text):
    """rejoin URIs split over a line break; every other newline is kept"""
    return substitute_uris(text, repair)
