#! /usr/bin/env python3

# standard modules
import re
import typing

# self-defined modules
from oadsmine.extraction.urimatcher import find_uri_candidates


# terminator, optional closing quotes/brackets, then whitespace
TERMINATOR_RE = re.compile(r"[.!?]+[\"')\]”’]*(\s+)")
PARAGRAPH_RE = re.compile(r"\n[ \t\r\f\v]*\n\s*")
LINE_END_RE = re.compile(r"[ \t]*\r?\n[ \t]*")
SENTENCE_OPENERS = "\"'“‘(["


class Sentence(typing.NamedTuple):
    text: str
    span: tuple


def _opens_sentence(char):
    return char.isupper() or char.isdigit() or char in SENTENCE_OPENERS


def _inside(position, protected):
    return any(start < position < end for start, end in protected)


def _boundaries(text, candidates):
    protected = [(candidate.start, candidate.end) for candidate in candidates]
    boundaries = set()

    # terminator followed by whitespace and a sentence opener
    for match in TERMINATOR_RE.finditer(text):
        cut = match.start(1)
        following = match.end()
        if following < len(text) and _opens_sentence(text[following]) and not _inside(cut, protected):
            boundaries.add(following)

    # paragraph breaks always end a sentence
    for match in PARAGRAPH_RE.finditer(text):
        if not _inside(match.start(), protected):
            boundaries.add(match.end())

    # footnote style fragment: a line that ends with a URI and no terminator
    for candidate in candidates:
        match = LINE_END_RE.match(text, candidate.end)
        if match is not None and match.end() < len(text) and _opens_sentence(text[match.end()]):
            boundaries.add(match.end())

    return sorted(position for position in boundaries if 0 < position < len(text))


def segment_sentences(text, candidates=None):
    """split text into sentences whose spans cover the text in order

    Sentence texts are stripped of surrounding whitespace, so whitespace-only
    text is one empty sentence. Empty text has no sentences.
    """
    if not text:
        return []
    if not text.strip():
        return [Sentence("", (0, len(text)))]
    if candidates is None:
        candidates = find_uri_candidates(text)

    sentences = []
    starts = [0] + _boundaries(text, candidates)
    ends = starts[1:] + [len(text)]
    for start, end in zip(starts, ends):
        sentences.append(Sentence(text[start:end].strip(), (start, end)))
    return sentences
