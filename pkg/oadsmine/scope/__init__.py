"""This module decides which extracted URIs are in scope for the analytics."""
