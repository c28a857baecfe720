#! /usr/bin/env python3

# standard modules
import collections
import dataclasses

# self-defined modules
from oadsmine.scope.uriparts import host_of
from oadsmine.analytics.monthly import share_pct


DEFAULT_BIN_WIDTH = 50


@dataclasses.dataclass
class HostnameStats:
    counts: collections.Counter = dataclasses.field(default_factory=collections.Counter)
    total: int = 0

    def add(self, hostname, count=1):
        self.counts[hostname.lower()] += count
        self.total += count

    def merge(self, other):
        return HostnameStats(self.counts + other.counts, self.total + other.total)

    def share_pct(self, hostname):
        return share_pct(self.counts.get(hostname, 0), self.total)


@dataclasses.dataclass(frozen=True)
class HistogramBin:
    start: int
    end: int
    hostname_count: int


@dataclasses.dataclass(frozen=True)
class HistogramSpec:
    bin_width: int
    bins: tuple = ()


@dataclasses.dataclass(frozen=True)
class DispersionMetrics:
    singleton_uri_share: float
    gt5_uri_share: float
    hostnames_over_1000: int


def hostname_frequency(mentions):
    """hostname counts over non-GHP OADS mentions"""
    stats = HostnameStats()
    for mention in mentions:
        stats.add(host_of(mention.uri))
    return stats


def distinct_hostnames(stats):
    return len(stats.counts)


def frequency_histogram(stats, bin_width=DEFAULT_BIN_WIDTH):
    """number of hostnames per half-open frequency bin [k*w, (k+1)*w), without gaps"""
    if bin_width < 1:
        raise ValueError("bin width must be at least 1")
    if not stats.counts:
        return HistogramSpec(bin_width)
    per_bin = collections.Counter(count // bin_width for count in stats.counts.values())
    bins = tuple(HistogramBin(k * bin_width, (k + 1) * bin_width, per_bin.get(k, 0))
                 for k in range(max(per_bin) + 1))
    return HistogramSpec(bin_width, bins)


def top_hostnames(stats, n):
    """at most n (hostname, count) rows, by descending count, ties by hostname"""
    if n < 1:
        raise ValueError("n must be at least 1")
    ranked = sorted(stats.counts.items(), key=lambda item: (-item[1], item[0]))
    return ranked[:n]


def dispersion_metrics(stats):
    """how spread the mentions are over hostnames; None without mentions"""
    if stats.total == 0:
        return None
    counts = stats.counts.values()
    return DispersionMetrics(
        singleton_uri_share=sum(count for count in counts if count == 1) / stats.total,
        gt5_uri_share=sum(count for count in counts if count > 5) / stats.total,
        hostnames_over_1000=sum(1 for count in counts if count > 1000),
    )
