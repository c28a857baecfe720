import os
import json
import random

import pytest

from oadsmine.shared.errors import ConfigError, UriParseError
from oadsmine.scope.uriparts import host_matches, host_of, is_complete_host, parse_uri
from oadsmine.scope.scopefilter import (
    DEFAULT_POLICY_FILE, ScopePolicy, ScopeReason, ScopeVerdict, is_in_scope, is_private_or_local, reason_counts,
)


DECISION_TABLE = os.path.join(os.path.dirname(__file__), "data", "scope_decisions.tsv")


def decision_rows():
    rows = []
    with open(DECISION_TABLE, encoding="utf-8") as table:
        for line in table:
            if line.strip() and not line.startswith("#"):
                uri, in_scope, reason = line.rstrip("\n").split("\t")
                rows.append((uri, in_scope == "true", reason))
    return rows


@pytest.fixture(scope="module")
def policy():
    return ScopePolicy.load()


class TestUriParts:
    @pytest.mark.parametrize("uri, host", [
        ("https://CDS.CERN.CH/record/1", "cds.cern.ch"),
        ("http://www.nature.org/x", "www.nature.org"),
        ("http://192.168.1.5:80/data", "192.168.1.5"),
        ("https://example.org:443/", "example.org"),
        ("https://example.org:8443/", "example.org:8443"),
        ("http://[::1]:8000/", "[::1]:8000"),
        ("http://example.org./a", "example.org"),
    ])
    def test_host_of(self, uri, host):
        assert host_of(uri) == host

    @pytest.mark.parametrize("uri", ["no-scheme.org/x", "http://", "http://exa mple.org/",
                                     "http://example.org:99999/", "http://[zz::1]/"])
    def test_unparseable(self, uri):
        with pytest.raises(UriParseError):
            parse_uri(uri)

    def test_parts(self):
        parts = parse_uri("HTTPS://Example.org/Path?q=1#frag")
        assert (parts.scheme, parts.host, parts.path, parts.query, parts.fragment) == \
            ("https", "example.org", "/Path", "q=1", "frag")

    def test_host_matches_whole_labels(self):
        assert host_matches("link.springer.com", ["springer.com"])
        assert host_matches("springer.com", ["springer.com"])
        assert not host_matches("notspringer.com", ["springer.com"])

    @pytest.mark.parametrize("host, complete", [
        ("github.com", True),
        ("www.bbc.co.uk", True),
        ("127.0.0.1", True),
        ("ex", False),
        ("localhost", False),
    ])
    def test_is_complete_host(self, host, complete):
        assert is_complete_host(host) is complete


class TestScopeFilter:
    def test_decision_table_size(self):
        rows = decision_rows()
        assert len(rows) >= 30
        assert {reason for _, _, reason in rows} == {reason.value for reason in ScopeReason}

    @pytest.mark.parametrize("uri, in_scope, reason", decision_rows())
    def test_decision_table(self, policy, uri, in_scope, reason):
        assert is_in_scope(uri, policy) == ScopeVerdict(in_scope, ScopeReason(reason))

    def test_first_rule_wins(self, policy):
        # both a non-HTTP scheme and a private host
        assert is_in_scope("ftp://127.0.0.1/x", policy).reason is ScopeReason.SCHEME_EXCLUDED
        # a private host that would also be a publication host
        local_publications = ScopePolicy(publication_hosts=frozenset(["localhost"]))
        assert is_in_scope("http://localhost/x", local_publications).reason is ScopeReason.LOCAL_OR_PRIVATE_HOST

    def test_verdict_invariant(self):
        with pytest.raises(ValueError):
            ScopeVerdict(True, ScopeReason.DOI_EXCLUDED)
        assert ScopeVerdict.of(ScopeReason.DOI_ALLOWLISTED).in_scope

    @pytest.mark.parametrize("host, private", [
        ("127.0.0.1", True),
        ("10.0.0.7", True),
        ("cds.cern.ch", False),
        ("localhost", True),
        ("[fe80::1]", True),
        ("172.15.0.1", False),
    ])
    def test_is_private_or_local(self, host, private):
        assert is_private_or_local(host) is private

    def test_policy_file(self, tmp_path):
        policy_file = tmp_path / "policy.json"
        policy_file.write_text(json.dumps({
            "allowed_schemes": ["https"],
            "publication_hosts": ["example.com"],
            "doi_allow_prefixes": ["10.1234"],
            "private_ranges": ["10.0.0.0/8"],
        }))
        custom = ScopePolicy.load(str(policy_file))
        assert is_in_scope("http://zenodo.org/x", custom).reason is ScopeReason.SCHEME_EXCLUDED
        assert is_in_scope("https://www.example.com/x", custom).reason is ScopeReason.PUBLICATION_LINK
        assert is_in_scope("https://doi.org/10.1234/abc", custom).reason is ScopeReason.DOI_ALLOWLISTED
        assert is_in_scope("https://doi.org/10.5281/zenodo.1", custom).reason is ScopeReason.DOI_EXCLUDED
        assert is_in_scope("https://192.168.0.1/x", custom).reason is ScopeReason.ACCEPTED

    def test_invalid_policy_file(self, tmp_path):
        policy_file = tmp_path / "policy.json"
        policy_file.write_text(json.dumps({"allowed_schemes": ["http"]}))
        with pytest.raises(ConfigError):
            ScopePolicy.load(str(policy_file))

    def test_reason_counts_partition(self, policy):
        rows = decision_rows()
        verdicts = [is_in_scope(uri, policy) for uri, _, _ in rows]
        counts = reason_counts(verdicts)
        assert sum(counts.values()) == len(rows)
        assert set(counts) == {reason.value for reason in ScopeReason}
        assert counts["DoiAllowlisted"] == 6

    def test_policy_order_does_not_matter(self, policy):
        with open(DEFAULT_POLICY_FILE, encoding="utf-8") as policy_file:
            data = json.load(policy_file)
        uris = [uri for uri, _, _ in decision_rows()]
        expected = [is_in_scope(uri, policy) for uri in uris]
        rng = random.Random(4)
        for _ in range(20):
            shuffled = {key: list(values.values()) if isinstance(values, dict) else list(values)
                        for key, values in data.items()}
            for values in shuffled.values():
                rng.shuffle(values)
            reordered = ScopePolicy.from_dict(shuffled)
            assert [is_in_scope(uri, reordered) for uri in uris] == expected
