"""Tests for dowkit."""
