"""The mergeable corpus aggregate.

Shards of the corpus are counted independently and combined with merge,
which is associative and commutative and has an empty CorpusStats with the
same configuration as identity.
"""

# standard modules
import collections
import dataclasses

# self-defined modules
from oadsmine.shared.errors import DataError, StatsMismatchError
from oadsmine.corpus.manifest import DEFAULT_WINDOW
from oadsmine.scope.uriparts import host_of
from oadsmine.ghp.ghpdetect import Category, CategoryPolicy
from oadsmine.analytics.monthly import MonthlyStats, YearlyStats, yearly_stats
from oadsmine.analytics.hostnames import DEFAULT_BIN_WIDTH, HostnameStats


@dataclasses.dataclass(frozen=True)
class AssessedMention:
    """a mention after classification, scope filtering and categorization"""
    mention: object
    classification: object
    verdict: object
    platform: object = None
    category: object = None     # None when out of scope


@dataclasses.dataclass
class CorpusStats:
    bin_width: int = DEFAULT_BIN_WIDTH
    category_policy: CategoryPolicy = CategoryPolicy.GHP_FORCES_OADS
    window: object = DEFAULT_WINDOW
    monthly: dict = dataclasses.field(default_factory=dict)
    hostnames: HostnameStats = dataclasses.field(default_factory=HostnameStats)
    platforms: collections.Counter = dataclasses.field(default_factory=collections.Counter)
    provenance: collections.Counter = dataclasses.field(default_factory=collections.Counter)
    scope_reasons: collections.Counter = dataclasses.field(default_factory=collections.Counter)
    seeds: set = dataclasses.field(default_factory=set)

    def empty(self):
        """identity element for merge under this configuration"""
        return CorpusStats(self.bin_width, self.category_policy, self.window)

    def _month(self, month):
        if month not in self.window:
            raise DataError("month {} outside corpus window {} to {}".format(
                month, self.window.start, self.window.end))
        return self.monthly.setdefault(month, MonthlyStats(month))

    def add_publications(self, month, count=1):
        self._month(month).add_publications(count)

    def add_mention(self, assessed):
        stats = self._month(assessed.mention.month)
        self.provenance[assessed.classification.provenance.value] += 1
        self.scope_reasons[assessed.verdict.reason.value] += 1
        if assessed.category is None:
            return

        stats.add_category(assessed.category)
        if assessed.category is Category.GHP:
            self.platforms[assessed.platform.value] += 1
        elif assessed.category is Category.NON_GHP_OADS:
            self.hostnames.add(host_of(assessed.mention.uri))
        if assessed.category is not Category.NON_OADS:
            self.seeds.add(assessed.mention.uri)

    def add_document(self, month, assessed_mentions):
        self.add_publications(month)
        for assessed in assessed_mentions:
            self.add_mention(assessed)

    def merge(self, other):
        if (self.bin_width, self.category_policy, self.window) != \
                (other.bin_width, other.category_policy, other.window):
            raise StatsMismatchError("cannot merge statistics built with different configurations")
        monthly = {month: dataclasses.replace(stats) for month, stats in self.monthly.items()}
        for month, stats in other.monthly.items():
            monthly[month] = monthly[month].merge(stats) if month in monthly else dataclasses.replace(stats)
        return CorpusStats(
            bin_width=self.bin_width,
            category_policy=self.category_policy,
            window=self.window,
            monthly=monthly,
            hostnames=self.hostnames.merge(other.hostnames),
            platforms=self.platforms + other.platforms,
            provenance=self.provenance + other.provenance,
            scope_reasons=self.scope_reasons + other.scope_reasons,
            seeds=self.seeds | other.seeds,
        )

    def monthly_stats(self):
        return [self.monthly[month] for month in sorted(self.monthly)]

    def yearly_stats(self):
        return yearly_stats(self.monthly_stats())

    def totals(self):
        """corpus-wide counts in the shape of one period"""
        total = YearlyStats(0)
        for stats in self.monthly.values():
            total._add_counts(stats)
        return total


def monthly_stats(documents, window=DEFAULT_WINDOW):
    """MonthlyStats per month from (month, assessed mentions) pairs, one pair per document"""
    stats = CorpusStats(window=window)
    for month, assessed_mentions in documents:
        stats.add_document(month, assessed_mentions)
    return stats.monthly_stats()


def merge(a, b):
    return a.merge(b)
