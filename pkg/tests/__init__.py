"""Test helpers for partlog."""
