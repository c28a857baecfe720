import os
import json
import random
import itertools

import pytest

from oadsmine.shared.errors import ConfigError
from oadsmine.corpus.manifest import DocumentId, Month
from oadsmine.extraction.extractor import UriMention
from oadsmine.classifier.labels import Classification, Label, Provenance
from oadsmine.ghp.ghpdetect import (
    Category, CategoryPolicy, GhpPatternSet, HostRule, Platform, categorize, category_of, detect_ghp,
)


HOST_TABLE = os.path.join(os.path.dirname(__file__), "data", "ghp_hosts.tsv")


def host_rows():
    rows = []
    with open(HOST_TABLE, encoding="utf-8") as table:
        for line in table:
            if line.strip() and not line.startswith("#"):
                uri, platform = line.rstrip("\n").split("\t")
                rows.append((uri, None if platform == "-" else Platform(platform)))
    return rows


OADS = Classification(Label.OADS, Provenance.LEARNED, 0.9)
LEARNED_NON_OADS = Classification(Label.NON_OADS, Provenance.LEARNED, 0.1)
PDF_NON_OADS = Classification(Label.NON_OADS, Provenance.HEURISTIC_PDF, 0.0)


@pytest.fixture(scope="module")
def patterns():
    return GhpPatternSet.load()


class TestDetection:
    def test_table_size(self):
        rows = host_rows()
        assert len(rows) >= 20
        assert {platform for _, platform in rows} == set(Platform) | {None}

    @pytest.mark.parametrize("uri, platform", host_rows())
    def test_host_table(self, patterns, uri, platform):
        assert detect_ghp(uri, patterns) is platform

    def test_unparseable_uri(self, patterns):
        assert detect_ghp("not a uri", patterns) is None

    def test_detection_order(self):
        # a host matched by two platforms goes to the first in detection order
        patterns = GhpPatternSet.from_dict({
            "GitLab": [{"first-label": "code"}],
            "GitHub": [{"suffix": "example.org"}],
        })
        assert detect_ghp("https://code.example.org/x", patterns) is Platform.GITHUB

    def test_rule_kinds(self):
        assert HostRule("exact", "github.com").matches("github.com")
        assert not HostRule("exact", "github.com").matches("www.github.com")
        assert HostRule("suffix", "github.com").matches("www.github.com")
        assert not HostRule("suffix", "github.com").matches("github.com")
        assert HostRule("first-label", "gitlab").matches("gitlab.example.org")
        assert not HostRule("first-label", "gitlab").matches("gitlab")

    @pytest.mark.parametrize("data", [
        {"GitHub": [{"prefix": "github"}]},
        {"GitHub": ["github.com"]},
        {"Codeberg": [{"exact": "codeberg.org"}]},
    ])
    def test_invalid_patterns(self, data):
        with pytest.raises(ConfigError):
            GhpPatternSet.from_dict(data)

    def test_pattern_file(self, tmp_path):
        pattern_file = tmp_path / "ghp.json"
        pattern_file.write_text(json.dumps({"GitLab": [{"exact": "git.example.org"}]}))
        custom = GhpPatternSet.load(str(pattern_file))
        assert detect_ghp("https://git.example.org/a", custom) is Platform.GITLAB
        assert detect_ghp("https://github.com/a", custom) is None


class TestCategory:
    @pytest.mark.parametrize("classification, platform, policy, category", [
        (OADS, Platform.GITHUB, CategoryPolicy.GHP_FORCES_OADS, Category.GHP),
        (OADS, None, CategoryPolicy.GHP_FORCES_OADS, Category.NON_GHP_OADS),
        (LEARNED_NON_OADS, Platform.GITHUB, CategoryPolicy.GHP_FORCES_OADS, Category.GHP),
        (LEARNED_NON_OADS, None, CategoryPolicy.GHP_FORCES_OADS, Category.NON_OADS),
        (PDF_NON_OADS, Platform.GITLAB, CategoryPolicy.GHP_FORCES_OADS, Category.GHP),
        (OADS, Platform.GITHUB, CategoryPolicy.CLASSIFIER_DECIDES, Category.GHP),
        (OADS, None, CategoryPolicy.CLASSIFIER_DECIDES, Category.NON_GHP_OADS),
        (LEARNED_NON_OADS, Platform.GITHUB, CategoryPolicy.CLASSIFIER_DECIDES, Category.NON_OADS),
        (PDF_NON_OADS, Platform.BITBUCKET, CategoryPolicy.CLASSIFIER_DECIDES, Category.NON_OADS),
    ])
    def test_category(self, classification, platform, policy, category):
        assert category_of(classification, platform, policy) is category

    def test_default_policy_forces_oads(self):
        assert category_of(LEARNED_NON_OADS, Platform.SOURCEFORGE) is Category.GHP

    @pytest.mark.parametrize("policy", list(CategoryPolicy))
    def test_categories_partition_mentions(self, patterns, policy):
        rng = random.Random(3)
        uris = [uri for uri, _ in host_rows()]
        classifications = [OADS, LEARNED_NON_OADS, PDF_NON_OADS]
        counts = dict.fromkeys(Category, 0)
        oads_like = 0
        total = 500
        for _ in range(total):
            classification = rng.choice(classifications)
            platform = detect_ghp(rng.choice(uris), patterns)
            category = category_of(classification, platform, policy)
            counts[category] += 1
            if classification.label is Label.OADS or \
                    (platform is not None and policy is CategoryPolicy.GHP_FORCES_OADS):
                oads_like += 1
            # GHP implies a detected platform
            if category is Category.GHP:
                assert platform is not None
        assert sum(counts.values()) == total
        assert counts[Category.GHP] + counts[Category.NON_GHP_OADS] == oads_like

    def test_every_combination_has_one_category(self):
        platforms = list(Platform) + [None]
        for classification, platform, policy in itertools.product(
                [OADS, LEARNED_NON_OADS, PDF_NON_OADS], platforms, CategoryPolicy):
            assert category_of(classification, platform, policy) in set(Category)

    def test_categorize_mention(self, patterns):
        uri = "https://gitlab.cern.ch/group/proj"
        mention = UriMention(DocumentId("1902.00008", 1), uri, "Source code: " + uri, (13, 13 + len(uri)),
                             Month(2019, 2))
        assert categorize(mention, OADS, patterns) is Category.GHP
        assert categorize(mention, LEARNED_NON_OADS, patterns, CategoryPolicy.CLASSIFIER_DECIDES) is Category.NON_OADS
