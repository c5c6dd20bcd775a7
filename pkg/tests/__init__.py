"""Tests for blockpoly."""
