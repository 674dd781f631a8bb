"""Maintenance and verification scripts."""
