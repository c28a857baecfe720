"""This module holds configuration, logging, error and file helpers shared by all stages."""
