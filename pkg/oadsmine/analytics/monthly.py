"""Per-month and per-year category counts behind the URI time series.

Averages are per publication, including publications without any URI.
Yearly figures are re-aggregated from the monthly counts, so they are
weighted by documents, not by months.
"""

# standard modules
import typing
import dataclasses

# self-defined modules
from oadsmine.shared.errors import StatsMismatchError
from oadsmine.ghp.ghpdetect import Category


COUNT_FIELDS = ("publications", "uri_total", "oads", "non_oads", "ghp", "non_ghp_oads")


class Averages(typing.NamedTuple):
    total: float
    oads: float
    non_oads: float
    ghp: float
    non_ghp_oads: float


class Percentages(typing.NamedTuple):
    ghp: float
    non_ghp_oads: float
    non_oads: float


class _CategoryCounts:
    """count fields and arithmetic shared by monthly and yearly records"""

    def add_publications(self, count=1):
        self.publications += count

    def add_category(self, category):
        self.uri_total += 1
        if category is Category.NON_OADS:
            self.non_oads += 1
            return
        self.oads += 1
        if category is Category.GHP:
            self.ghp += 1
        else:
            self.non_ghp_oads += 1

    def counts(self):
        return {name: getattr(self, name) for name in COUNT_FIELDS}

    def _add_counts(self, other):
        for name in COUNT_FIELDS:
            setattr(self, name, getattr(self, name) + getattr(other, name))

    def averages(self):
        return averages_of(self)

    def percentages(self):
        return category_percentages(self)


@dataclasses.dataclass
class MonthlyStats(_CategoryCounts):
    month: object
    publications: int = 0
    uri_total: int = 0
    oads: int = 0
    non_oads: int = 0
    ghp: int = 0
    non_ghp_oads: int = 0

    def merge(self, other):
        if other.month != self.month:
            raise StatsMismatchError("cannot merge {} into {}".format(other.month, self.month))
        merged = dataclasses.replace(self)
        merged._add_counts(other)
        return merged


@dataclasses.dataclass
class YearlyStats(_CategoryCounts):
    year: int
    publications: int = 0
    uri_total: int = 0
    oads: int = 0
    non_oads: int = 0
    ghp: int = 0
    non_ghp_oads: int = 0


def averages_of(stats):
    """mentions per publication; None for a period without publications"""
    if stats.publications == 0:
        return None
    per = float(stats.publications)
    return Averages(stats.uri_total / per, stats.oads / per, stats.non_oads / per,
                    stats.ghp / per, stats.non_ghp_oads / per)


def share_pct(part, whole):
    """part as a percentage of whole; None when whole is zero"""
    if whole == 0:
        return None
    return 100.0 * part / whole


def category_percentages(stats):
    """(GHP, non-GHP OADS, non-OADS) shares of all URIs at 0.01 resolution, None without URIs"""
    if stats.uri_total == 0:
        return None
    return Percentages(round(share_pct(stats.ghp, stats.uri_total), 2),
                       round(share_pct(stats.non_ghp_oads, stats.uri_total), 2),
                       round(share_pct(stats.non_oads, stats.uri_total), 2))


def yearly_stats(monthly):
    years = {}
    for stats in monthly:
        year = years.setdefault(stats.month.year, YearlyStats(stats.month.year))
        year._add_counts(stats)
    return [years[year] for year in sorted(years)]
