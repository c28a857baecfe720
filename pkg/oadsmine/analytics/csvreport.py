#! /usr/bin/env python3
"""Plot-ready CSV reports.

Numbers have fixed precision so reruns are byte-identical: averages and
shares 4 decimals, category percentages 2 decimals. Shares are percentages.
Undefined values (no publications, no URIs) are left empty.
"""

# standard modules
import os
import csv
import logging

# self-defined modules
from oadsmine.shared.filestorage import atomic_open
from oadsmine.analytics.hostnames import frequency_histogram, top_hostnames


MONTHLY_HEADER = [
    "month", "publications", "uri_total", "oads", "non_oads", "ghp", "non_ghp_oads",
    "avg_total", "avg_oads", "avg_non_oads", "avg_ghp", "avg_non_ghp_oads",
    "pct_ghp", "pct_non_ghp_oads", "pct_non_oads",
]
YEARLY_HEADER = ["year"] + MONTHLY_HEADER[1:]
HOSTNAMES_HEADER = ["hostname", "count", "share"]
HISTOGRAM_HEADER = ["bin_start", "bin_end", "hostname_count"]
TOP_HOSTNAMES_HEADER = ["rank", "hostname", "count", "share"]
PLATFORMS_HEADER = ["platform", "count", "share"]

REPORT_FILES = ("monthly.csv", "yearly.csv", "hostnames.csv", "histogram.csv",
                "top_hostnames.csv", "platforms.csv", "seeds.txt")


def fmt(value, digits):
    return "" if value is None else "{:.{}f}".format(value, digits)


def _period_row(period, stats):
    averages = stats.averages() or [None] * 5
    percentages = stats.percentages() or [None] * 3
    counts = stats.counts()
    return [period] + [counts[name] for name in MONTHLY_HEADER[1:7]] + \
        [fmt(value, 4) for value in averages] + [fmt(value, 2) for value in percentages]


class CsvEncoder():
    def __init__(self, output_dir):
        self.output_dir = output_dir

    def _write(self, name, header, rows):
        filename = os.path.join(self.output_dir, name)
        with atomic_open(filename, newline="") as out_file:
            writer = csv.writer(out_file, lineterminator="\n")
            writer.writerow(header)
            count = 0
            for row in rows:
                writer.writerow(row)
                count += 1
        logging.getLogger().debug("wrote {} ({} rows)".format(filename, count))
        return filename

    def write_monthly(self, stats):
        return self._write("monthly.csv", MONTHLY_HEADER,
                           (_period_row(str(month.month), month) for month in stats.monthly_stats()))

    def write_yearly(self, stats):
        return self._write("yearly.csv", YEARLY_HEADER,
                           (_period_row(str(year.year), year) for year in stats.yearly_stats()))

    def write_hostnames(self, stats):
        hostnames = stats.hostnames
        ranked = top_hostnames(hostnames, len(hostnames.counts)) if hostnames.counts else []
        return self._write("hostnames.csv", HOSTNAMES_HEADER,
                           ([host, count, fmt(hostnames.share_pct(host), 4)] for host, count in ranked))

    def write_histogram(self, stats):
        histogram = frequency_histogram(stats.hostnames, stats.bin_width)
        return self._write("histogram.csv", HISTOGRAM_HEADER,
                           ([b.start, b.end, b.hostname_count] for b in histogram.bins))

    def write_top_hostnames(self, stats, top_n):
        hostnames = stats.hostnames
        rows = top_hostnames(hostnames, top_n)
        return self._write("top_hostnames.csv", TOP_HOSTNAMES_HEADER,
                           ([rank, host, count, fmt(hostnames.share_pct(host), 4)]
                            for rank, (host, count) in enumerate(rows, start=1)))

    def write_platforms(self, stats):
        total = sum(stats.platforms.values())
        rows = sorted(stats.platforms.items(), key=lambda item: (-item[1], item[0]))
        return self._write("platforms.csv", PLATFORMS_HEADER,
                           ([platform, count, fmt(100.0 * count / total, 4)] for platform, count in rows))

    def write_seeds(self, stats):
        filename = os.path.join(self.output_dir, "seeds.txt")
        with atomic_open(filename, newline="") as out_file:
            for uri in sorted(stats.seeds):
                out_file.write(uri + "\n")
        return filename

    def write_all(self, stats, top_n=15):
        return [
            self.write_monthly(stats),
            self.write_yearly(stats),
            self.write_hostnames(stats),
            self.write_histogram(stats),
            self.write_top_hostnames(stats, top_n),
            self.write_platforms(stats),
            self.write_seeds(stats),
        ]
