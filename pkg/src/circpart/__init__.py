"""Circles of partition over integer base sets."""
