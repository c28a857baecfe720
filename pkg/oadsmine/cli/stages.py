#! /usr/bin/env python3
"""Pipeline stages shared by the separate commands and the fused pipeline.

Extraction runs per document, assessment (classify, scope, categorize) per
shard of mentions. Every shard is counted into its own CorpusStats and the
shards are merged in order, so no state is shared while shards run.
"""

# standard modules
import logging
import functools
import itertools
import collections
import dataclasses

# third party modules
from tqdm import tqdm

# self-defined modules
from oadsmine.corpus.manifest import Month, load_manifest, select_latest_versions, filter_window
from oadsmine.corpus.reader import iter_documents
from oadsmine.shared.workerpool import bounded_map
from oadsmine.extraction.extractor import extract_uri_mentions, dedup_mentions
from oadsmine.extraction.mentionfile import MentionWriter, write_meta
from oadsmine.scope.scopefilter import is_in_scope
from oadsmine.classifier.hybrid import classify_hybrid
from oadsmine.ghp.ghpdetect import detect_ghp, category_of
from oadsmine.analytics.corpusstats import AssessedMention


SHARD_SIZE = 1000


def extract_document(doc, dedup_per_doc=False):
    mentions = extract_uri_mentions(doc)
    return dedup_mentions(mentions) if dedup_per_doc else mentions


@dataclasses.dataclass(frozen=True)
class ExtractionSummary:
    manifest_entries: int
    documents: int
    window_rejected: int
    skipped_documents: tuple
    mention_count: int
    publications: dict

    def as_meta(self, config=None, seed=None):
        meta = {
            "corpus": {
                "manifest_entries": self.manifest_entries,
                "documents": self.documents,
                "window_rejected": self.window_rejected,
                "skipped": len(self.skipped_documents),
                "skipped_documents": list(self.skipped_documents),
            },
            "mention_count": self.mention_count,
            "publications": dict(sorted(self.publications.items())),
        }
        if config is not None:
            meta['config'] = config
            meta['seed'] = seed
        return meta


def run_extraction(manifest_path, mentions_path, window, dedup_per_doc=False, workers=1, config=None, seed=None):
    """extract all mentions of the corpus into mentions_path and its metadata sidecar; config is echoed there"""
    manifest = load_manifest(manifest_path)
    entries = len(manifest)
    manifest = select_latest_versions(manifest)
    manifest, rejected = filter_window(manifest, window)

    publications = collections.Counter()
    skipped = []
    with MentionWriter(mentions_path) as writer:
        documents = tqdm(iter_documents(manifest, workers), total=len(manifest),
                         desc="extract", unit="doc", disable=None)
        for entry, doc, error in documents:
            if error is not None:
                logging.getLogger().warning("skipping document: {}".format(error))
                skipped.append(str(entry.doc_id))
                continue
            publications[str(doc.month)] += 1
            for mention in extract_document(doc, dedup_per_doc):
                writer.write(mention)
        mention_count = writer.count

    summary = ExtractionSummary(entries, len(manifest) - len(skipped), rejected,
                                tuple(skipped), mention_count, dict(publications))
    write_meta(mentions_path, summary.as_meta(config, seed))
    logging.getLogger().info("extracted {} mention(s) from {} document(s), {} skipped".format(
        mention_count, summary.documents, len(skipped)))
    return summary


@dataclasses.dataclass(frozen=True)
class Assessor:
    """everything needed to assess one mention; read-only while shards run"""
    model: object
    denylist: object
    policy: object
    patterns: object
    category_policy: object

    def __call__(self, mention):
        return assess(mention, self.model, self.denylist, self.policy,
                      self.patterns, self.category_policy)


def assess(mention, model, denylist, policy, patterns, category_policy):
    """classify, then scope filter; only in-scope mentions get a category"""
    classification = classify_hybrid(mention, model, denylist)
    verdict = is_in_scope(mention.uri, policy)
    if not verdict.in_scope:
        return AssessedMention(mention, classification, verdict)
    platform = detect_ghp(mention.uri, patterns)
    return AssessedMention(mention, classification, verdict, platform,
                           category_of(classification, platform, category_policy))


def assess_shard(mentions, assessor, template):
    stats = template.empty()
    for mention in mentions:
        stats.add_mention(assessor(mention))
    return stats


def shards_of(items, size=SHARD_SIZE):
    items = iter(items)
    while True:
        shard = list(itertools.islice(items, size))
        if not shard:
            return
        yield shard


def aggregate(mentions, publications, assessor, template, workers=1):
    """CorpusStats over a stream of mentions; publications maps 'YYYY-MM' to document counts"""
    stats = template.empty()
    for month, count in sorted(publications.items()):
        stats.add_publications(Month.parse(month), count)

    shards = shards_of(mentions)
    if workers <= 1:
        results = (assess_shard(shard, assessor, template) for shard in shards)
    else:
        results = bounded_map(functools.partial(assess_shard, assessor=assessor, template=template),
                              shards, workers)
    for shard_stats in tqdm(results, desc="assess", unit="shard", disable=None):
        stats = stats.merge(shard_stats)
    return stats
