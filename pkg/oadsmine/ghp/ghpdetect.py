#! /usr/bin/env python3

# standard modules
import os
import enum
import dataclasses

# self-defined modules
from oadsmine.shared.errors import ConfigError, UriParseError
from oadsmine.shared.stdscript import load_json_file
from oadsmine.scope.uriparts import parse_uri
from oadsmine.classifier.labels import Label


DEFAULT_PATTERN_FILE = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data", "ghp_patterns.json")


class Platform(enum.Enum):
    # detection order
    GITHUB = "GitHub"
    GITLAB = "GitLab"
    SOURCEFORGE = "SourceForge"
    BITBUCKET = "Bitbucket"


class Category(enum.Enum):
    GHP = "GHP"
    NON_GHP_OADS = "NonGhpOADS"
    NON_OADS = "NonOADS"


class CategoryPolicy(enum.Enum):
    # a GHP match counts as OADS even against a NonOADS model verdict
    GHP_FORCES_OADS = "ghp-forces-oads"
    CLASSIFIER_DECIDES = "classifier-decides"


RULE_KINDS = ("exact", "suffix", "first-label")


@dataclasses.dataclass(frozen=True)
class HostRule:
    kind: str
    value: str

    def __post_init__(self):
        if self.kind not in RULE_KINDS:
            raise ConfigError("unknown host rule kind {!r}".format(self.kind))

    def matches(self, host):
        labels = host.split(".")
        if self.kind == "exact":
            return host == self.value
        if self.kind == "suffix":
            return host.endswith("." + self.value)
        # first-label needs a real domain behind the label
        return len(labels) >= 2 and labels[0] == self.value


@dataclasses.dataclass(frozen=True)
class GhpPatternSet:
    rules: tuple = ()   # (Platform, tuple of HostRule) in detection order

    @classmethod
    def from_dict(cls, data):
        rules = []
        for platform in Platform:
            platform_rules = []
            for entry in data.get(platform.value, []):
                if not isinstance(entry, dict) or len(entry) != 1:
                    raise ConfigError("GHP rule must be a single {{kind: host}} entry, got {!r}".format(entry))
                (kind, value), = entry.items()
                platform_rules.append(HostRule(kind, str(value).lower()))
            rules.append((platform, tuple(platform_rules)))
        unknown = set(data) - set(platform.value for platform in Platform)
        if unknown:
            raise ConfigError("unknown platforms in GHP patterns: {}".format(", ".join(sorted(unknown))))
        return cls(tuple(rules))

    @classmethod
    def load(cls, filename=None):
        return cls.from_dict(load_json_file(filename or DEFAULT_PATTERN_FILE))


def detect_ghp(uri, patterns):
    """first platform whose rules match the host; whole labels only"""
    try:
        host = parse_uri(uri).host
    except UriParseError:
        return None
    for platform, rules in patterns.rules:
        if any(rule.matches(host) for rule in rules):
            return platform
    return None


def category_of(classification, platform, policy=CategoryPolicy.GHP_FORCES_OADS):
    """category from a classification and an already detected platform (or None)"""
    if platform is not None and \
            (policy is CategoryPolicy.GHP_FORCES_OADS or classification.label is Label.OADS):
        return Category.GHP
    if classification.label is Label.OADS:
        return Category.NON_GHP_OADS
    return Category.NON_OADS


def categorize(mention, classification, patterns, policy=CategoryPolicy.GHP_FORCES_OADS):
    """category of an in-scope classified mention"""
    return category_of(classification, detect_ghp(mention.uri, patterns), policy)
