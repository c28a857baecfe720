#! /usr/bin/env python3

# standard modules
import bisect
import dataclasses

# self-defined modules
from oadsmine.corpus.manifest import DocumentId, Month
from oadsmine.extraction.urimatcher import find_uri_candidates
from oadsmine.extraction.segmenter import segment_sentences


@dataclasses.dataclass(frozen=True)
class UriMention:
    doc_id: DocumentId
    uri: str
    context: str
    span: tuple
    month: Month = None
    implicit_scheme: bool = False


def extract_uri_mentions(doc):
    """one mention per URI occurrence in document order, each with its full context sentence"""
    candidates = find_uri_candidates(doc.text)
    if not candidates:
        return []

    # the same candidates protect URIs from sentence splitting
    sentences = segment_sentences(doc.text, candidates)
    sentence_starts = [sentence.span[0] for sentence in sentences]

    mentions = []
    for candidate in candidates:
        sentence = sentences[bisect.bisect_right(sentence_starts, candidate.start) - 1]
        mentions.append(UriMention(
            doc_id=doc.id,
            uri=candidate.uri,
            context=sentence.text,
            span=(candidate.start, candidate.end),
            month=doc.month,
            implicit_scheme=candidate.implicit_scheme,
        ))
    return mentions


def dedup_mentions(mentions):
    """keep the first mention of each URI within each document"""
    seen = set()
    unique = []
    for mention in mentions:
        key = (mention.doc_id, mention.uri)
        if key not in seen:
            seen.add(key)
            unique.append(mention)
    return unique
