#! /usr/bin/env python3

# standard modules
import os
import dataclasses

# self-defined modules
from oadsmine.shared.errors import ConfigError, UriParseError
from oadsmine.shared.stdscript import load_json_file
from oadsmine.scope.uriparts import parse_uri, host_matches
from oadsmine.classifier.labels import Classification, Label, Provenance


DEFAULT_DENYLIST_FILE = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data", "publishers.json")


@dataclasses.dataclass(frozen=True)
class Denylist:
    """publisher domains; a host matches its domain and every subdomain of it"""
    hosts: frozenset = frozenset()

    @classmethod
    def load(cls, filename=None):
        data = load_json_file(filename or DEFAULT_DENYLIST_FILE)
        try:
            return cls(frozenset(host.strip().lower() for host in data['publisher_hosts']))
        except (KeyError, TypeError, AttributeError) as exc:
            raise ConfigError("invalid publisher denylist: {}".format(exc))

    def matches(self, host):
        return host_matches(host, self.hosts)


def classify_heuristic(mention, denylist):
    """NonOADS for publisher hosts and .pdf paths, None to defer to the learned model"""
    try:
        parts = parse_uri(mention.uri)
    except UriParseError:
        return None

    if denylist.matches(parts.host):
        return Classification(Label.NON_OADS, Provenance.HEURISTIC_PUBLISHER, 0.0)
    # the path excludes query and fragment
    if parts.path.lower().endswith(".pdf"):
        return Classification(Label.NON_OADS, Provenance.HEURISTIC_PDF, 0.0)
    return None
