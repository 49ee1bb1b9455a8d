"""Unit tests for Weakly Directed Walks."""
