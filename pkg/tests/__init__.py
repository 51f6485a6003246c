"""Tests for the regular-space max-flow solver"""
