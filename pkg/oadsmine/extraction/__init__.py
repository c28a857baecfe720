"""This module segments article text and extracts URI mentions with their context sentences."""
