#! /usr/bin/env python3

# standard modules
import os
import enum
import ipaddress
import collections
import dataclasses
import urllib.parse

# self-defined modules
from oadsmine.shared.errors import ConfigError, UriParseError
from oadsmine.shared.stdscript import load_json_file
from oadsmine.scope.uriparts import parse_uri, host_matches


DEFAULT_POLICY_FILE = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data", "scope_policy.json")

# DOI resolver hosts; DOIs inside publisher paths are not detected
DOI_HOSTS = frozenset(["doi.org", "dx.doi.org"])


class ScopeReason(enum.Enum):
    SCHEME_EXCLUDED = "SchemeExcluded"
    LOCAL_OR_PRIVATE_HOST = "LocalOrPrivateHost"
    PUBLICATION_LINK = "PublicationLink"
    DOI_EXCLUDED = "DoiExcluded"
    DOI_ALLOWLISTED = "DoiAllowlisted"
    ACCEPTED = "Accepted"


IN_SCOPE_REASONS = frozenset([ScopeReason.ACCEPTED, ScopeReason.DOI_ALLOWLISTED])


@dataclasses.dataclass(frozen=True)
class ScopeVerdict:
    in_scope: bool
    reason: ScopeReason

    def __post_init__(self):
        if self.in_scope != (self.reason in IN_SCOPE_REASONS):
            raise ValueError("verdict {} inconsistent with reason {}".format(self.in_scope, self.reason))

    @classmethod
    def of(cls, reason):
        return cls(reason in IN_SCOPE_REASONS, reason)


def _networks(ranges):
    return tuple(ipaddress.ip_network(cidr, strict=False) for cidr in ranges)


DEFAULT_PRIVATE_RANGES = _networks([
    "127.0.0.0/8", "10.0.0.0/8", "172.16.0.0/12", "192.168.0.0/16",
    "169.254.0.0/16", "::1/128", "fe80::/10", "fc00::/7",
])


@dataclasses.dataclass(frozen=True)
class ScopePolicy:
    allowed_schemes: frozenset = frozenset(["http", "https"])
    publication_hosts: frozenset = frozenset(["arxiv.org", "refhub.elsevier.com", "crossmark.crossref.org"])
    doi_allow_prefixes: frozenset = frozenset(["10.5281", "10.5061", "10.6084", "10.17605"])
    private_ranges: tuple = DEFAULT_PRIVATE_RANGES

    @classmethod
    def from_dict(cls, data):
        try:
            prefixes = data['doi_allow_prefixes']
            # prefixes may be given as {platform: prefix} for readability
            if isinstance(prefixes, dict):
                prefixes = prefixes.values()
            return cls(
                allowed_schemes=frozenset(scheme.lower() for scheme in data['allowed_schemes']),
                publication_hosts=frozenset(host.lower() for host in data['publication_hosts']),
                doi_allow_prefixes=frozenset(prefixes),
                private_ranges=_networks(data['private_ranges']),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError("invalid scope policy: {}".format(exc))

    @classmethod
    def load(cls, filename=None):
        return cls.from_dict(load_json_file(filename or DEFAULT_POLICY_FILE))


def is_private_or_local(host, private_ranges=DEFAULT_PRIVATE_RANGES):
    host = host.lower().strip("[]").rstrip(".")
    if host == "localhost" or host.endswith(".localhost"):
        return True
    try:
        address = ipaddress.ip_address(host.split("%")[0])
    except ValueError:
        return False
    # IPv4 addresses embedded in IPv6 are judged as IPv4
    if address.version == 6 and address.ipv4_mapped is not None:
        address = address.ipv4_mapped
    return any(address in network for network in private_ranges if network.version == address.version)


def doi_of(parts):
    """the DOI named by a resolver URI path, e.g. 10.5281/zenodo.4242"""
    return urllib.parse.unquote(parts.path).lstrip("/")


def is_in_scope(uri, policy):
    """first matching rule wins: scheme, local host, publication host, DOI policy"""
    try:
        parts = parse_uri(uri)
    except UriParseError:
        return ScopeVerdict.of(ScopeReason.SCHEME_EXCLUDED)

    if parts.scheme not in policy.allowed_schemes:
        return ScopeVerdict.of(ScopeReason.SCHEME_EXCLUDED)
    if is_private_or_local(parts.host, policy.private_ranges):
        return ScopeVerdict.of(ScopeReason.LOCAL_OR_PRIVATE_HOST)
    if host_matches(parts.host, policy.publication_hosts):
        return ScopeVerdict.of(ScopeReason.PUBLICATION_LINK)
    if parts.host in DOI_HOSTS:
        doi = doi_of(parts).lower()
        if any(doi.startswith(prefix.lower() + "/") for prefix in policy.doi_allow_prefixes):
            return ScopeVerdict.of(ScopeReason.DOI_ALLOWLISTED)
        return ScopeVerdict.of(ScopeReason.DOI_EXCLUDED)
    return ScopeVerdict.of(ScopeReason.ACCEPTED)


def reason_counts(verdicts):
    """tally verdicts by reason; the counts always sum to the number of verdicts"""
    counts = collections.Counter(verdict.reason for verdict in verdicts)
    return {reason.value: counts.get(reason, 0) for reason in ScopeReason}
