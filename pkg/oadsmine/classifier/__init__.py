"""This module provides the hybrid OADS/non-OADS classifier."""
