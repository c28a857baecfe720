"""This module aggregates mergeable corpus statistics and writes the CSV reports."""
