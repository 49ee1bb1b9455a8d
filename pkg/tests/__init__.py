"""Tests for Weakly Directed Walks."""
