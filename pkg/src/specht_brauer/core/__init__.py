"""Core algorithms and report models."""
