"""This module detects links to Git hosting platforms."""
