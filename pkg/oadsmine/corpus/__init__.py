"""This module ingests corpus manifests and streams the latest version of each article."""
