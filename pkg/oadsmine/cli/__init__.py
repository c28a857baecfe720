"""This module wires the pipeline stages into the oadsmine command line."""
